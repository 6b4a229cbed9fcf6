#include "oracles.hpp"

#include "kqm/strata.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kqm;

namespace {

const Quiver K3 = Quiver::kronecker(3);
const std::vector<int> TH{3, -2}, A{1, -1};

struct Row {
  HNType tau;
  std::vector<long> l1, l2, u1, u2;
  long det, eta;
};

// weights of universal representations on strata
const std::vector<Row> kTable = {
    {{{{1, 1}, {1, 2}}}, {3, -2}, {3, -2, -2}, {5, 0}, {5, 0, 0}, 5, 15},
    {{{{2, 2}, {0, 1}}}, {1, 1}, {1, 1, -4}, {5, 5}, {5, 5, 0}, 10, 20},
    {{{{2, 1}, {0, 2}}}, {4, 4}, {4, -6, -6}, {20, 20}, {20, 10, 10}, 40, 100},
    {{{{1, 0}, {1, 3}}}, {12, -3}, {-3, -3, -3}, {30, 15}, {15, 15, 15}, 45, 120},
    {{{{1, 0}, {1, 2}, {0, 1}}}, {9, -1}, {-1, -1, -6}, {25, 15}, {15, 15, 10}, 40, 100},
    {{{{1, 0}, {1, 1}, {0, 2}}}, {6, 1}, {1, -4, -4}, {20, 15}, {15, 10, 10}, 35, 90},
    {{{{2, 0}, {0, 3}}}, {3, 3}, {-2, -2, -2}, {15, 15}, {10, 10, 10}, 30, 90},
};

std::vector<long> expand(const std::vector<Block>& v) {
  std::vector<long> w;
  for (const auto& b : v) w.insert(w.end(), b.mult, b.weight);
  return w;
}

std::vector<long> desc(std::vector<long> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST_CASE("one-parameter subgroups from HN types") {
  auto s = one_ps_from_hn({{{1, 1}, {1, 2}}}, TH);
  CHECK(s.blocks[0] == std::vector<Block>{{3, 1}, {-2, 1}});
  CHECK(s.blocks[1] == std::vector<Block>{{3, 1}, {-2, 2}});
  s = one_ps_from_hn({{{2, 1}, {0, 2}}}, TH);
  CHECK(s.blocks[0] == std::vector<Block>{{4, 2}});
  CHECK(s.blocks[1] == std::vector<Block>{{4, 1}, {-6, 2}});
  s = one_ps_from_hn({{{2, 3}}}, TH);
  CHECK(s.blocks[0] == std::vector<Block>{{0, 2}});
  CHECK(s.blocks[1] == std::vector<Block>{{0, 3}});
}

TEST_CASE("eta") {
  CHECK(eta(K3, one_ps_from_hn({{{1, 1}, {1, 2}}}, TH)) == 15);
  CHECK(eta(K3, one_ps_from_hn({{{2, 1}, {0, 2}}}, TH)) == 100);
  CHECK(eta(K3, one_ps_from_hn({{{1, 0}, {1, 3}}}, TH)) == 120);
}

TEST_CASE("universal weights and shift") {
  auto s1 = one_ps_from_hn(kTable[0].tau, TH);
  CHECK(twist_shift(s1, A) == 2);
  auto w = universal_weights(s1, A);
  CHECK(desc(w[0]) == std::vector<long>{5, 0});
  CHECK(desc(w[1]) == std::vector<long>{5, 0, 0});
  CHECK(twist_shift(one_ps_from_hn(kTable[2].tau, TH), A) == 16);
  CHECK(twist_shift(one_ps_from_hn(kTable[6].tau, TH), A) == 12);
}

TEST_CASE("weight table reproduced cell by cell") {
  auto strata = unstable_strata({});
  REQUIRE(strata.size() == kTable.size());
  for (const auto& row : kTable) {
    CAPTURE(to_string(row.tau));
    auto it = std::find_if(strata.begin(), strata.end(), [&](const StratumData& s) { return s.hn_type == row.tau; });
    REQUIRE(it != strata.end());
    CHECK(desc(expand(it->one_ps.blocks[0])) == row.l1);
    CHECK(desc(expand(it->one_ps.blocks[1])) == row.l2);
    CHECK(desc(it->weights[0]) == row.u1);
    CHECK(desc(it->weights[1]) == row.u2);
    CHECK(it->weights[0][0] + it->weights[0][1] == row.det);
    CHECK(it->eta == row.eta);
    CHECK(it->eta > 0);
  }
}

TEST_CASE("codimension equals negative weight count") {
  for (const auto& st : unstable_strata({})) {
    CAPTURE(to_string(st.hn_type));
    CHECK(negative_rep_directions(K3, st.one_ps) - negative_lie_directions(st.one_ps) ==
          hn_stratum_codim(K3, st.hn_type));
  }
  auto s = one_ps_from_hn({{{1, 1}, {1, 2}}}, TH);
  CHECK(negative_rep_directions(K3, s) == 6);
  CHECK(negative_lie_directions(s) == 3);
}

TEST_CASE("teleman certificates") {
  using B = BundleExpr;
  for (const auto& e : {B::U1(), B::U2(), B::tensor(B::U1(), B::U2()), B::O(-1), B::sl(B::U1()),
                        B::tensor(B::dual(B::U1()), B::dual(B::U1()))}) {
    CAPTURE(e.str());
    CHECK(teleman_certify(e).pass);
  }
  auto rep = teleman_certify(B::O(-3));
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.blocking());
  auto* blk = rep.record_for(HNType{{{1, 1}, {1, 2}}});
  REQUIRE(blk);
  CHECK_FALSE(blk->pass);
  CHECK(blk->max_weight == 15);
  CHECK(blk->margin == 0);
  // O(-3) = det(U1)^3
  CHECK(weights_of(B::O(-3), {{5, 0}, {5, 0, 0}}) ==
        weights_of(B::tensor(B::det(B::U1()), B::tensor(B::det(B::U1()), B::det(B::U1()))), {{5, 0}, {5, 0, 0}}));

  auto sl = teleman_certify(B::sl(B::U1()));
  auto* r0 = sl.record_for(HNType{{{1, 1}, {1, 2}}});
  REQUIRE(r0);
  CHECK(r0->max_weight == 5);
  CHECK(r0->eta == 15);
}

TEST_CASE("descent") {
  std::mt19937 rng(3);
  for (int k = 0; k < 50; ++k) {
    auto e = oracle::random_expr(rng, 2);
    auto c = central_weights(e, {});
    CHECK(std::all_of(c.begin(), c.end(), [](long x) { return x == 0; }));
  }
  TelemanContext bad;
  bad.twist = {0, 0};
  CHECK_THROWS_AS(teleman_certify(BundleExpr::U1(), bad), DescentViolation);
  // O(n) is built from det(U1), so it needs the twist too; only O(0) is exempt
  CHECK_THROWS_AS(teleman_certify(BundleExpr::O(2), bad), DescentViolation);
  CHECK_NOTHROW(teleman_certify(BundleExpr::O(0), bad));
}

TEST_CASE("scale invariance") {
  std::mt19937 rng(5);
  auto strata = unstable_strata({});
  for (int k = 0; k < 20; ++k) {
    auto e = oracle::random_expr(rng, 2);
    auto base = teleman_certify(e, strata);
    for (long f : {2L, 3L, 7L}) {
      auto scaled_strata = strata;
      for (auto& s : scaled_strata) {
        s.one_ps = scaled(s.one_ps, f);
        s.eta = eta(K3, s.one_ps);
        s.weights = universal_weights(s.one_ps, A);
      }
      auto rep = teleman_certify(e, scaled_strata);
      CHECK(rep.pass == base.pass);
      for (size_t i = 0; i < rep.records.size(); ++i) {
        CHECK(rep.records[i].eta == f * base.records[i].eta);
        CHECK(rep.records[i].max_weight == f * base.records[i].max_weight);
      }
    }
  }
}

TEST_CASE("det U1 and det U2 have the same weights") {
  using B = BundleExpr;
  for (const auto& st : unstable_strata({})) {
    WeightBase b{st.weights[0], st.weights[1]};
    CHECK(weights_of(B::det(B::U1()), b) == weights_of(B::O(-1), b));
    CHECK(weights_of(B::det(B::U2()), b) == weights_of(B::O(-1), b));
  }
}
