#pragma once

#include "kqm/bundle_expr.hpp"
#include "kqm/quiver.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace kqm {

struct Block {
  long weight;
  int mult;
  bool operator==(const Block&) const = default;
};

// per vertex, blocks in strictly decreasing weight order
struct OnePS {
  std::vector<std::vector<Block>> blocks;
  bool operator==(const OnePS&) const = default;
};

OnePS one_ps_from_hn(const HNType& tau, const std::vector<int>& theta);
OnePS scaled(const OnePS& s, long k);

long eta(const Quiver& q, const OnePS& s);

// directions of R_d and of the Lie algebra with strictly negative weight
long negative_rep_directions(const Quiver& q, const OnePS& s);
long negative_lie_directions(const OnePS& s);

long trace(const std::vector<Block>& v);
long twist_shift(const OnePS& s, const std::vector<int>& a);

// raw block weights plus the twist shift, one multiset per vertex
std::vector<std::vector<long>> universal_weights(const OnePS& s, const std::vector<int>& a);

struct StratumData {
  HNType hn_type;
  OnePS one_ps;
  long eta;
  long shift;
  std::vector<std::vector<long>> weights;  // descended U_i on Z_lambda
};

struct TelemanContext {
  Quiver quiver = Quiver::kronecker(3);
  DimVector d{2, 3};
  std::vector<int> theta{3, -2};
  std::vector<int> twist{1, -1};
};

// all unstable strata, in enumerate_hn_types order
std::vector<StratumData> unstable_strata(const TelemanContext& ctx);

struct DescentViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// weights against the scalar 1-PS (weight 1 at every vertex); must all be 0
std::vector<long> central_weights(const BundleExpr& e, const TelemanContext& ctx);

struct TelemanRecord {
  HNType hn_type;
  long eta;
  long max_weight;
  long margin;
  bool pass;
};

struct TelemanReport {
  std::vector<TelemanRecord> records;
  bool pass = true;

  // first failing stratum, if any
  std::optional<TelemanRecord> blocking() const;
  const TelemanRecord* record_for(const HNType& tau) const;
};

TelemanReport teleman_certify(const BundleExpr& e, const TelemanContext& ctx = {});
// same, on precomputed strata
TelemanReport teleman_certify(const BundleExpr& e, const std::vector<StratumData>& strata);

}  // namespace kqm
