#pragma once

#include "kqm/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kqm {

// coefficients of x, y, z
using LinearForm = std::array<Rational, 3>;

struct LinearFormMatrix {
  std::array<std::array<LinearForm, 3>, 2> e;  // rows (A,B,C), (D,E,F)

  // "x,y,0;0,y,z"
  static LinearFormMatrix parse(const std::string& text);
  std::string str() const;
  bool operator==(const LinearFormMatrix&) const = default;
};

// monomial order x^2, y^2, z^2, xy, xz, yz
using Quadric = std::array<Rational, 6>;
using QuadricSpace = std::array<Quadric, 3>;
extern const std::array<const char*, 6> kQuadricMonomials;

Quadric multiply(const LinearForm& a, const LinearForm& b);
std::string to_string(const Quadric& q);
std::string to_string(const LinearForm& l);

QuadricSpace minors(const LinearFormMatrix& r);
size_t span_dimension(const QuadricSpace& h);

bool is_stable(const LinearFormMatrix& r);

// element of S^2W (x) W: t[quadric monomial][linear variable]
using Tensor21 = std::array<std::array<Rational, 3>, 6>;
// image in S^3W, coefficients over x^a y^b z^c with a+b+c = 3, a descending
using Cubic = std::array<Rational, 10>;
Cubic multiply_out(const Tensor21& t);

struct SyzygyPair {
  std::array<Tensor21, 2> tensors;
  bool degenerate = false;
  std::string warning;
};

SyzygyPair syzygies(const LinearFormMatrix& r);

using Sl3Element = std::array<std::array<Rational, 3>, 3>;

Sl3Element elementary(int i, int j);  // E_ij, 1-based
Rational trace(const Sl3Element& m);
Sl3Element matmul(const Sl3Element& a, const Sl3Element& b);
Sl3Element operator+(const Sl3Element& a, const Sl3Element& b);
Sl3Element operator-(const Sl3Element& a, const Sl3Element& b);
Sl3Element operator*(const Rational& s, const Sl3Element& a);

Sl3Element tensor_to_sl3(const Tensor21& t);
std::pair<Sl3Element, Sl3Element> to_sl3_plane(const LinearFormMatrix& r);

bool commutes(const std::pair<Sl3Element, Sl3Element>& p);

// (x,y,z)/(ay,bz,cx); at a coordinate point of P^2 the direction [b':c'] on
// the exceptional line is required
LinearFormMatrix blp2_point(const Rational& a, const Rational& b, const Rational& c,
                            std::optional<std::pair<Rational, Rational>> direction = std::nullopt);

// one matrix per orbit of the Hasse diagram, open orbit first
std::vector<LinearFormMatrix> hasse_representatives();

}  // namespace kqm
