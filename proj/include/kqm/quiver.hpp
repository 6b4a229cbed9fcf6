#pragma once

#include "kqm/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kqm {

using DimVector = std::vector<int>;

struct Quiver {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arrows;

  Quiver() = default;
  Quiver(int n, std::vector<std::pair<int, int>> arr);

  static Quiver kronecker(int m);
  // "kronecker:m" or {"vertices": n, "arrows": [[i,j],...]}
  static Quiver parse(const std::string& text);

  bool operator==(const Quiver&) const = default;
};

struct StabilityParameter {
  std::vector<int> theta;
  std::vector<int> twist;
};

struct HNType {
  std::vector<DimVector> parts;

  bool operator==(const HNType&) const = default;
  auto operator<=>(const HNType&) const = default;
};

std::string to_string(const DimVector& d);
std::string to_string(const HNType& t);

Rational slope(const std::vector<int>& theta, const DimVector& e);
int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// generic subrepresentation test: does a general rep of dim e have a subrep of
// dim sub? (Schofield: iff ext(sub, e - sub) = 0)
bool is_generic_sub(const Quiver& q, const DimVector& sub, const DimVector& e);
int generic_ext(const Quiver& q, const DimVector& a, const DimVector& b);

bool has_semistable(const Quiver& q, const DimVector& e,
                    const std::vector<int>& theta);

std::vector<HNType> enumerate_hn_types(const Quiver& q, const DimVector& d,
                                       const std::vector<int>& theta);

int hn_stratum_codim(const Quiver& q, const HNType& tau);

}  // namespace kqm
