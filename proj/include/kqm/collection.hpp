#pragma once

#include "kqm/bundle_expr.hpp"
#include "kqm/chow.hpp"
#include "kqm/strata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kqm {

struct CollectionObject {
  std::string label;
  BundleExpr expr;
};

struct CollectionSpec {
  std::vector<CollectionObject> objects;

  // {"objects": [{"label": ..., "expr": ...}, ...]}
  static CollectionSpec from_json(const std::string& text);
  std::string to_json() const;
};

// named collections: "1exc", "2exc-a".."2exc-c", "3exc-a", "3exc-b", "4exc", "5exc"
CollectionSpec builtin_collection(const std::string& name);
std::vector<std::string> builtin_collection_names();

long euler_pairing(const BundleExpr& e, const BundleExpr& f);

enum class Verdict { Exceptional, StrongExt, Orthogonal, Undetermined };
const char* to_string(Verdict v);

struct PairStatus {
  size_t i, j;
  long chi;
  bool teleman_pass;
  Verdict verdict;
  std::optional<TelemanRecord> blocking;  // first stratum that failed
};

Verdict verdict_for(size_t i, size_t j, long chi, bool teleman_pass);

struct VerificationMatrix {
  size_t n = 0;
  std::vector<PairStatus> entries;  // row-major, entries[i*n + j]

  const PairStatus& at(size_t i, size_t j) const { return entries.at(i * n + j); }
  std::vector<std::pair<size_t, size_t>> undetermined() const;
  // diagonal all exceptional and every backwards chi vanishes
  bool consistent() const;
};

VerificationMatrix verify_collection(const CollectionSpec& spec, const TelemanContext& ctx = {});

struct CheckResult {
  std::string name;
  bool holds;
  std::string detail;
};

std::vector<CheckResult> check_ch_identities();

struct MutationLedger {
  ChowElement L5, L4, L3, L2;  // ch(L5[-2]), ch(L4[-2]), ch(L3[-1]), ch(L2[-1])
  ChowElement L6;              // ch(L6[-3]) = ch(U2(1))
};

MutationLedger mutation_ledger();
std::vector<CheckResult> mutation_ledger_check();

}  // namespace kqm
