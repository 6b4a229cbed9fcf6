#pragma once

#include "kqm/bundle_expr.hpp"
#include "kqm/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace kqm {

// Basis of A*(Y), c_i = c_i(U2^*), d_i = c_i(U1^*), d1 = c1.
// The degree-5 vector is c2c3 itself (c2c3/3 is the integral generator).
inline constexpr int kChowRank = 13;
inline constexpr std::array<const char*, kChowRank> kChowNames = {
    "[Y]", "c1", "c1^2", "c2", "d2", "c1c2", "c1d2", "c3", "c2^2", "c2d2", "d2^2", "c2c3", "c3^2"};
inline constexpr std::array<int, kChowRank> kChowDegree = {0, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 6};
inline constexpr int kDimY = 6;

struct ChowElement {
  std::array<Rational, kChowRank> c{};

  static ChowElement unit();
  static ChowElement basis(int i);
  // exponents of c1, c2, c3, d2
  static ChowElement monomial(int a1, int a2, int a3, int b2);
  static ChowElement from_coords(const std::array<Rational, kChowRank>& v);

  Rational& operator[](int i) { return c[i]; }
  const Rational& operator[](int i) const { return c[i]; }

  ChowElement& operator+=(const ChowElement& o);
  ChowElement& operator-=(const ChowElement& o);
  ChowElement& operator*=(const Rational& s);
  bool operator==(const ChowElement& o) const;

  ChowElement degree_part(int k) const;
  const Rational& rank() const { return c[0]; }
};

ChowElement operator+(ChowElement a, const ChowElement& b);
ChowElement operator-(ChowElement a, const ChowElement& b);
ChowElement operator-(ChowElement a);
ChowElement operator*(const Rational& s, ChowElement a);
ChowElement operator*(const ChowElement& a, const ChowElement& b);

ChowElement chow_mul(const ChowElement& x, const ChowElement& y);
ChowElement chow_pow(const ChowElement& x, int k);
Rational integral(const ChowElement& x);

// x -> sum (-1)^k x_k
ChowElement dual_class(const ChowElement& x);
// Adams operation: degree k part times m^k
ChowElement adams(const ChowElement& x, int m);
// exp of a nilpotent class (its degree-0 part must vanish)
ChowElement exp_class(const ChowElement& x);

ChowElement todd_y();
ChowElement tangent_chern();

ChowElement ch_of(const BundleExpr& e);
ChowElement ch_O(long n);

struct RingInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

long chi(const BundleExpr& e);
// integral of x * Todd(Y), checked integral
long chi_of_class(const ChowElement& x);

// integer polynomials in c1,c2,c3,d1,d2 with + - * ^ and parentheses
ChowElement parse_chow_poly(const std::string& text);

std::string to_string(const ChowElement& x);

}  // namespace kqm
