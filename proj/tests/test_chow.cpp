#include "oracles.hpp"

#include "kqm/chow.hpp"

#include <doctest.h>

#include <random>

using namespace kqm;
using B = BundleExpr;

namespace {

ChowElement row(std::initializer_list<const char*> vals) {
  ChowElement x;
  int i = 0;
  for (const char* v : vals) {
    x[i] = Rational(v);
    x[i++].canonicalize();
  }
  return x;
}

ChowElement M(int a1, int a2, int a3, int b2) { return ChowElement::monomial(a1, a2, a3, b2); }
Rational I(int a1, int a2, int a3, int b2) { return integral(M(a1, a2, a3, b2)); }

const ChowElement c1 = ChowElement::basis(1), c2 = ChowElement::basis(3), d2 = ChowElement::basis(4),
                  c3 = ChowElement::basis(7);

}  // namespace

TEST_CASE("basis") {
  int per_degree[7] = {};
  for (int d : kChowDegree) ++per_degree[d];
  CHECK(std::vector<int>(per_degree, per_degree + 7) == std::vector<int>{1, 1, 3, 3, 3, 1, 1});
  CHECK(kChowRank == 13);
}

TEST_CASE("multiplication") {
  CHECK(c1 * M(2, 0, 0, 0) == Rational(4) * M(1, 0, 0, 1) - Rational(3) * c3);
  CHECK(c1 * M(0, 1, 1, 0) == Rational(3) * ChowElement::basis(12));
  CHECK(M(4, 0, 0, 0) == Rational(-3) * M(0, 2, 0, 0) + Rational(9) * M(0, 1, 0, 1) + Rational(3) * M(0, 0, 0, 2));
  CHECK(M(2, 1, 0, 0) == Rational(3) * M(0, 0, 0, 2) + M(0, 1, 0, 1));
  CHECK(M(2, 0, 0, 1) == Rational(3) * M(0, 0, 0, 2));
  CHECK(M(1, 0, 1, 0) == M(0, 2, 0, 0) - Rational(3) * M(0, 1, 0, 1) + Rational(3) * M(0, 0, 0, 2));
  CHECK(M(4, 0, 0, 0) == chow_pow(c1, 4));

  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int k = 0; k < 20; ++k) {
    ChowElement x;
    for (auto& v : x.c) {
      v = Rational(d(rng), 1 + (d(rng) + 5));
      v.canonicalize();
    }
    CHECK(ChowElement::unit() * x == x);
    CHECK(x * ChowElement::unit() == x);
  }
}

TEST_CASE("degree-5 reductions") {
  // coordinates on the c2c3 vector
  auto coef = [](const ChowElement& x) { return x[11]; };
  CHECK(coef(Rational(3) * M(0, 0, 1, 1) - M(2, 0, 1, 0)) == Rational(1, 3));
  CHECK(coef(M(0, 0, 1, 1)) == Rational(2, 3));
  CHECK(coef(M(2, 0, 1, 0)) == Rational(5, 3));
  CHECK(coef(M(5, 0, 0, 0)) == 19);
  CHECK(coef(M(3, 1, 0, 0)) == 9);
  CHECK(coef(M(3, 0, 0, 1)) == 6);
  CHECK(coef(M(1, 2, 0, 0)) == Rational(14, 3));
  CHECK(coef(M(1, 0, 0, 2)) == 2);
  CHECK(coef(M(1, 1, 0, 1)) == 3);
}

TEST_CASE("top intersection numbers") {
  CHECK(I(6, 0, 0, 0) == 57);
  CHECK(I(4, 1, 0, 0) == 27);
  CHECK(I(4, 0, 0, 1) == 18);
  CHECK(I(3, 0, 1, 0) == 5);
  CHECK(I(2, 2, 0, 0) == 14);
  CHECK(I(2, 0, 0, 2) == 6);
  CHECK(I(2, 1, 0, 1) == 9);
  CHECK(I(1, 0, 1, 1) == 2);
  CHECK(I(1, 1, 1, 0) == 3);
  CHECK(I(0, 3, 0, 0) == 9);
  CHECK(I(0, 2, 0, 1) == 5);
  CHECK(I(0, 1, 0, 2) == 3);
  CHECK(I(0, 0, 2, 0) == 1);
  CHECK(I(0, 0, 0, 3) == 2);
  CHECK(integral(chow_pow(c1, 6)) == 57);
  CHECK(integral(c3 * c3) == 1);
  for (int i = 0; i < 12; ++i) CHECK(integral(ChowElement::basis(i)) == 0);
  CHECK(chow_pow(c1, 7) == ChowElement{});
}

TEST_CASE("associativity and commutativity on basis classes") {
  for (int i = 0; i < kChowRank; ++i)
    for (int j = 0; j < kChowRank; ++j) {
      auto a = ChowElement::basis(i), b = ChowElement::basis(j);
      CHECK(a * b == b * a);
      for (int k = 0; k < kChowRank; ++k) {
        auto c = ChowElement::basis(k);
        CHECK((a * b) * c == a * (b * c));
      }
    }
}

TEST_CASE("Poincare duality pairing is perfect") {
  std::vector<std::vector<Rational>> g;
  for (int i = 0; i < kChowRank; ++i) {
    std::vector<Rational> r;
    for (int j = 0; j < kChowRank; ++j) r.push_back(integral(ChowElement::basis(i) * ChowElement::basis(j)));
    g.push_back(r);
  }
  CHECK(oracle::rank_q(g) == kChowRank);
}

TEST_CASE("todd class") {
  auto t = todd_y();
  CHECK(t[0] == 1);
  CHECK(t[12] == 1);
  CHECK(t[5] == 0);
  CHECK(t[6] == Rational(17, 8));
  CHECK(t[7] == Rational(-9, 8));
  // (3/8) c1^3 + (5/8) c1 d2 with c1^3 = 4 c1d2 - 3 c3, by hand
  CHECK(t[6] == Rational(3, 8) * 4 + Rational(5, 8));
  CHECK(t[7] == Rational(3, 8) * -3);
}

TEST_CASE("todd class from the tangent Chern class") {
  // log td(x) = x/2 - x^2/24 + x^4/2880 - x^6/181440, summed over Chern roots
  auto c = tangent_chern();
  std::vector<ChowElement> e(7), p(7);
  for (int k = 0; k <= 6; ++k) e[k] = c.degree_part(k);
  for (int k = 1; k <= 6; ++k) {
    ChowElement s = Rational(k % 2 ? k : -k) * e[k];
    for (int i = 1; i < k; ++i) s += Rational(i % 2 ? 1 : -1) * (e[i] * p[k - i]);
    p[k] = s;
  }
  ChowElement l = Rational(1, 2) * p[1] - Rational(1, 24) * p[2] + Rational(1, 2880) * p[4] -
                  Rational(1, 181440) * p[6];
  CHECK(exp_class(l) == todd_y());
}

TEST_CASE("tangent Chern class") {
  auto c = tangent_chern();
  CHECK(c.degree_part(1) == Rational(3) * c1);
  CHECK(c[12] == 13);
  CHECK(integral(c.degree_part(6)) == kChowRank);
  CHECK(c.degree_part(3) == Rational(16) * M(1, 0, 0, 1) - Rational(9) * c3);
}

TEST_CASE("chern characters") {
  auto U2 = row({"3", "-1", "1/2", "-1", "0", "1/2", "-2/3", "0", "1/8", "-7/24", "1/8", "-1/180", "0"});
  auto U2d = row({"3", "1", "1/2", "-1", "0", "-1/2", "2/3", "0", "1/8", "-7/24", "1/8", "1/180", "0"});
  auto U1d = row({"2", "1", "1/2", "0", "-1", "0", "1/6", "-1/2", "-1/8", "3/8", "-7/24", "-1/120", "-1/720"});
  auto sl = row({"3", "0", "1", "0", "-4", "0", "0", "0", "-1/4", "3/4", "-5/12", "0", "1/360"});
  auto U21 = row({"3", "2", "1", "-1", "0", "-1/2", "4/3", "-3/2", "-1/2", "19/12", "-5/4", "-11/360", "-1/240"});
  auto O1 = row({"1", "1", "1/2", "0", "0", "0", "2/3", "-1/2", "-1/8", "3/8", "1/8", "19/120", "19/240"});
  auto U1dU21 = row({"6", "7", "11/2", "-2", "-3", "-2", "55/6", "-21/2", "-43/8", "391/24", "-83/8", "89/360", "53/240"});

  CHECK(ch_of(B::U2()) == U2);
  CHECK(ch_of(B::dual(B::U2())) == U2d);
  CHECK(dual_class(U2) == U2d);
  CHECK(ch_of(B::dual(B::U1())) == U1d);
  CHECK(ch_of(B::sl(B::U1())) == sl);
  CHECK(ch_of(B::O(1)) == O1);
  CHECK(ch_of(parse_expr("twist(U2,1)")) == U21);
  CHECK(ch_of(parse_expr("tensor(dual(U1),twist(U2,1))")) == U1dU21);
  CHECK(ch_of(B::dual(B::dual(B::U2()))) == U2);

  // c1-coordinates by hand: exp(c1) degree 3 is c1^3/6 = (4 c1d2 - 3 c3)/6
  CHECK(O1[6] == Rational(2, 3));
  CHECK(O1[7] == Rational(-1, 2));

  // sl(U1) from the table against ch(U1) ch(U1^*) - 1
  CHECK(ch_of(B::U1()) * U1d - ChowElement::unit() == sl);
  CHECK(ch_of(B::sl(B::U2()))[0] == 8);
  // det U1 = det U2 = O(-1)
  CHECK(ch_of(B::det(B::U1())) == ch_of(B::O(-1)));
  CHECK(ch_of(B::det(B::U2())) == ch_of(B::O(-1)));
  CHECK(ch_of(B::wedge2(B::U1())) == ch_of(B::O(-1)));
  // wedge^2 U2 = U2^*(-1)
  CHECK(ch_of(B::wedge2(B::U2())) == ch_of(parse_expr("twist(dual(U2),-1)")));
}

TEST_CASE("chern character is a ring map and respects rank") {
  std::mt19937 rng(9);
  for (int k = 0; k < 40; ++k) {
    auto e = oracle::random_expr(rng, 2), f = oracle::random_expr(rng, 2);
    auto ce = ch_of(e), cf = ch_of(f);
    CHECK(ce.rank() == rank_of(e));
    CHECK(ch_of(B::sum(e, f)) == ce + cf);
    CHECK(ch_of(B::tensor(e, f)) == ce * cf);
    CHECK(ch_of(B::sym2(e)) + ch_of(B::wedge2(e)) == ce * ce);
    CHECK(chi(B::sum(e, f)) == chi(e) + chi(f));
  }
}

TEST_CASE("euler characteristics") {
  CHECK(chi(B::O(0)) == 1);
  CHECK(chi(parse_expr("dual(U2)")) == 6);
  CHECK(chi(parse_expr("dual(U1)")) == 8);
  CHECK(chi(parse_expr("tensor(U2,dual(U1))")) == 3);
  CHECK(chi(parse_expr("tensor(dual(U2),dual(U2))")) == 39);
  CHECK(chi(parse_expr("tensor(dual(U2),dual(U1))")) == 48);
  CHECK(chi(parse_expr("tensor(sl(U1),sl(U1))")) == 1);
  CHECK(chi(parse_expr("tensor(dual(U1),U1,dual(U2),U2)")) == 1);
  CHECK(chi(parse_expr("tensor(dual(U1),U1,dual(U1),U2)")) == 6);
  // omega = O(-3): h^6(O(-3)) = 1
  CHECK(chi(B::O(-3)) == 1);
  CHECK(chi(B::O(-1)) == 0);
  CHECK(chi(B::O(-2)) == 0);
}

TEST_CASE("Serre duality") {
  std::mt19937 rng(21);
  for (int k = 0; k < 30; ++k) {
    auto e = oracle::random_expr(rng, 3);
    CAPTURE(e.str());
    CHECK(chi(e) == chi(B::tensor(B::dual(e), B::O(-3))));
  }
}

TEST_CASE("orbit classes") {
  auto orbit = Rational(-3) * M(0, 1, 0, 1) + Rational(6) * M(0, 0, 0, 2);
  CHECK(integral(M(2, 0, 0, 0) * orbit) == 9);
  CHECK(integral(d2 * orbit) == 3);
  CHECK(integral(d2 * (Rational(3) * M(0, 1, 0, 1) - Rational(3) * M(0, 0, 0, 2))) == 3);
}

TEST_CASE("polynomial input") {
  CHECK(parse_chow_poly("c1^6") == chow_pow(c1, 6));
  CHECK(parse_chow_poly("d1") == c1);
  CHECK(parse_chow_poly("c1*c2c3") == Rational(3) * ChowElement::basis(12));
  CHECK(parse_chow_poly("3c2d2 - 3*d2^2") == Rational(3) * M(0, 1, 0, 1) - Rational(3) * M(0, 0, 0, 2));
  CHECK(parse_chow_poly("-(c1+c2)^2") == -((c1 + c2) * (c1 + c2)));
  CHECK(integral(parse_chow_poly("c1^2*(-3c2d2+6d2^2)")) == 9);
  CHECK_THROWS_AS(parse_chow_poly("c4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chow_poly("c1 +"), std::invalid_argument);
}
