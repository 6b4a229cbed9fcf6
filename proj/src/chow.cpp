#include "kqm/chow.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace kqm {

namespace {

using Mono = std::array<int, 4>;  // exponents of c1, c2, c3, d2

int mdeg(const Mono& m) { return m[0] + 2 * m[1] + 3 * m[2] + 2 * m[3]; }

Mono operator+(const Mono& a, const Mono& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
Mono operator-(const Mono& a, const Mono& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
bool divides(const Mono& a, const Mono& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

const std::array<Mono, kChowRank> kBasisMono = {{{0, 0, 0, 0},
                                                 {1, 0, 0, 0},
                                                 {2, 0, 0, 0},
                                                 {0, 1, 0, 0},
                                                 {0, 0, 0, 1},
                                                 {1, 1, 0, 0},
                                                 {1, 0, 0, 1},
                                                 {0, 0, 1, 0},
                                                 {0, 2, 0, 0},
                                                 {0, 1, 0, 1},
                                                 {0, 0, 0, 2},
                                                 {0, 1, 1, 0},
                                                 {0, 0, 2, 0}}};

int basis_index(const Mono& m) {
  for (int i = 0; i < kChowRank; ++i)
    if (kBasisMono[i] == m) return i;
  return -1;
}

struct Rel {
  Mono lhs;
  std::vector<std::pair<Mono, long>> rhs;
};

// relations in degrees 3 and 4
const std::vector<Rel> kRelations = {
    {{3, 0, 0, 0}, {{{1, 0, 0, 1}, 4}, {{0, 0, 1, 0}, -3}}},
    {{4, 0, 0, 0}, {{{0, 2, 0, 0}, -3}, {{0, 1, 0, 1}, 9}, {{0, 0, 0, 2}, 3}}},
    {{2, 1, 0, 0}, {{{0, 0, 0, 2}, 3}, {{0, 1, 0, 1}, 1}}},
    {{2, 0, 0, 1}, {{{0, 0, 0, 2}, 3}}},
    {{1, 0, 1, 0}, {{{0, 2, 0, 0}, 1}, {{0, 1, 0, 1}, -3}, {{0, 0, 0, 2}, 3}}},
};

// degree-4 basis times degree-2 monomial, plus the point class
const std::map<Mono, long> kTop = {
    {{2, 2, 0, 0}, 14}, {{2, 1, 0, 1}, 9}, {{2, 0, 0, 2}, 6}, {{0, 3, 0, 0}, 9}, {{0, 2, 0, 1}, 5},
    {{0, 1, 0, 2}, 3},  {{0, 0, 0, 3}, 2}, {{0, 0, 2, 0}, 1},
};

class Reducer {
 public:
  Reducer() {
    for (int a = 0; a <= kDimY; ++a)
      for (int b = 0; 2 * b <= kDimY; ++b)
        for (int c = 0; 3 * c <= kDimY; ++c)
          for (int e = 0; 2 * e <= kDimY; ++e)
            if (mdeg({a, b, c, e}) <= kDimY) reduce({a, b, c, e});
    for (int i = 0; i < kChowRank; ++i)
      for (int j = 0; j < kChowRank; ++j) prod[i][j] = reduce(kBasisMono[i] + kBasisMono[j]);
  }

  const ChowElement& reduce(const Mono& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    ChowElement r = compute(m);
    return memo_.emplace(m, std::move(r)).first->second;
  }

  const ChowElement& lookup(const Mono& m) const { return memo_.at(m); }

  std::array<std::array<ChowElement, kChowRank>, kChowRank> prod;

 private:
  std::map<Mono, ChowElement> memo_;

  ChowElement compute(const Mono& m) {
    int d = mdeg(m);
    ChowElement out;
    if (d > kDimY) return out;
    if (int i = basis_index(m); i >= 0) return ChowElement::basis(i);
    if (d <= 4) {
      for (const auto& rel : kRelations) {
        if (!divides(rel.lhs, m)) continue;
        Mono rest = m - rel.lhs;
        for (const auto& [mono, coef] : rel.rhs) {
          ChowElement t = reduce(mono + rest);
          t *= Rational(coef);
          out += t;
        }
        return out;
      }
      throw std::logic_error("no relation for monomial");
    }
    if (d == kDimY) {
      if (auto it = kTop.find(m); it != kTop.end()) {
        out[12] = it->second;
        return out;
      }
      // split off a degree-4 factor and pair its reduction with the rest
      for (int a = 0; a <= m[0]; ++a)
        for (int b = 0; b <= m[1]; ++b)
          for (int c = 0; c <= m[2]; ++c)
            for (int e = 0; e <= m[3]; ++e) {
              Mono s{a, b, c, e};
              if (mdeg(s) != 4) continue;
              const ChowElement& r4 = reduce(s);
              Mono rest = m - s;
              for (int i = 0; i < kChowRank; ++i)
                if (r4[i] != 0) out[12] += r4[i] * reduce(kBasisMono[i] + rest)[12];
              return out;
            }
      throw std::logic_error("cannot split degree-6 monomial");
    }
    // degree 5: A^5 is one-dimensional and pairs perfectly with c1
    Rational pair_basis = reduce(kBasisMono[11] + Mono{1, 0, 0, 0})[12];
    out[11] = reduce(m + Mono{1, 0, 0, 0})[12] / pair_basis;
    return out;
  }
};

const Reducer& reducer() {
  static const Reducer r;
  return r;
}

// every monomial of degree <= 6 is reduced once, at first use
const ChowElement& reduce_mono(const Mono& m) { return reducer().lookup(m); }

ChowElement row(std::initializer_list<const char*> vals) {
  ChowElement x;
  int i = 0;
  for (const char* v : vals) {
    x[i] = Rational(v);
    x[i].canonicalize();
    ++i;
  }
  return x;
}

// Chern character rows: U2, U1^*, U2^*, sl(U1^*)
const ChowElement& ch_U2() {
  static const ChowElement x = row({"3", "-1", "1/2", "-1", "0", "1/2", "-2/3", "0", "1/8", "-7/24", "1/8", "-1/180", "0"});
  return x;
}
const ChowElement& ch_U2dual() {
  static const ChowElement x = row({"3", "1", "1/2", "-1", "0", "-1/2", "2/3", "0", "1/8", "-7/24", "1/8", "1/180", "0"});
  return x;
}
const ChowElement& ch_U1dual() {
  static const ChowElement x =
      row({"2", "1", "1/2", "0", "-1", "0", "1/6", "-1/2", "-1/8", "3/8", "-7/24", "-1/120", "-1/720"});
  return x;
}
const ChowElement& ch_slU1() {
  static const ChowElement x = row({"3", "0", "1", "0", "-4", "0", "0", "0", "-1/4", "3/4", "-5/12", "0", "1/360"});
  return x;
}

bool is_U1_or_dual(const BundleExpr& e) {
  using K = BundleExpr::Kind;
  return e.kind() == K::U1 || (e.kind() == K::Dual && e.arg(0).kind() == K::U1);
}

}  // namespace

ChowElement ChowElement::unit() { return basis(0); }

ChowElement ChowElement::basis(int i) {
  ChowElement x;
  x.c.at(i) = 1;
  return x;
}

ChowElement ChowElement::monomial(int a1, int a2, int a3, int b2) {
  if (a1 < 0 || a2 < 0 || a3 < 0 || b2 < 0) throw std::invalid_argument("negative exponent");
  Mono m{a1, a2, a3, b2};
  if (mdeg(m) > kDimY) return ChowElement{};
  return reduce_mono(m);
}

ChowElement ChowElement::from_coords(const std::array<Rational, kChowRank>& v) {
  ChowElement x;
  x.c = v;
  return x;
}

ChowElement& ChowElement::operator+=(const ChowElement& o) {
  for (int i = 0; i < kChowRank; ++i) c[i] += o.c[i];
  return *this;
}
ChowElement& ChowElement::operator-=(const ChowElement& o) {
  for (int i = 0; i < kChowRank; ++i) c[i] -= o.c[i];
  return *this;
}
ChowElement& ChowElement::operator*=(const Rational& s) {
  for (auto& v : c) v *= s;
  return *this;
}
bool ChowElement::operator==(const ChowElement& o) const {
  for (int i = 0; i < kChowRank; ++i)
    if (c[i] != o.c[i]) return false;
  return true;
}

ChowElement ChowElement::degree_part(int k) const {
  ChowElement x;
  for (int i = 0; i < kChowRank; ++i)
    if (kChowDegree[i] == k) x.c[i] = c[i];
  return x;
}

ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
ChowElement operator-(ChowElement a) { return a *= Rational(-1); }
ChowElement operator*(const Rational& s, ChowElement a) { return a *= s; }
ChowElement operator*(const ChowElement& a, const ChowElement& b) { return chow_mul(a, b); }

ChowElement chow_mul(const ChowElement& x, const ChowElement& y) {
  const auto& r = reducer();
  ChowElement out;
  for (int i = 0; i < kChowRank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < kChowRank; ++j) {
      if (y[j] == 0) continue;
      if (kChowDegree[i] + kChowDegree[j] > kDimY) continue;
      Rational s = x[i] * y[j];
      const auto& p = r.prod[i][j];
      for (int k = 0; k < kChowRank; ++k)
        if (p[k] != 0) out[k] += s * p[k];
    }
  }
  return out;
}

ChowElement chow_pow(const ChowElement& x, int k) {
  ChowElement r = ChowElement::unit();
  for (int i = 0; i < k; ++i) r = chow_mul(r, x);
  return r;
}

Rational integral(const ChowElement& x) { return x[12]; }

ChowElement dual_class(const ChowElement& x) {
  ChowElement y = x;
  for (int i = 0; i < kChowRank; ++i)
    if (kChowDegree[i] % 2) y[i] = -y[i];
  return y;
}

ChowElement adams(const ChowElement& x, int m) {
  ChowElement y = x;
  for (int i = 0; i < kChowRank; ++i) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), mpz_class(m).get_mpz_t(), kChowDegree[i]);
    y[i] *= Rational(f);
  }
  return y;
}

ChowElement exp_class(const ChowElement& x) {
  if (x[0] != 0) throw std::invalid_argument("exp_class needs a class without degree-0 part");
  ChowElement out = ChowElement::unit(), term = ChowElement::unit();
  for (int k = 1; k <= kDimY; ++k) {
    term = chow_mul(term, x);
    term *= Rational(1, k);
    out += term;
  }
  return out;
}

ChowElement todd_y() {
  static const ChowElement t = [] {
    ChowElement x;
    x[0] = 1;
    x[1] = Rational(3, 2);
    x[2] = 1;
    x[4] = Rational(5, 12);
    x += Rational(3, 8) * ChowElement::monomial(3, 0, 0, 0) + Rational(5, 8) * ChowElement::monomial(1, 0, 0, 1);
    x[8] = Rational(-1, 4);
    x[9] = Rational(3, 4);
    x[10] = Rational(553, 360);
    x[11] = Rational(77, 60);
    x[12] = 1;
    return x;
  }();
  return t;
}

ChowElement tangent_chern() {
  ChowElement x;
  x[0] = 1;
  x[1] = 3;
  x[2] = 3;
  x[4] = 5;
  x[6] = 16;
  x[7] = -9;
  x[8] = -9;
  x[9] = 27;
  x[10] = 4;
  x[11] = 17;
  x[12] = 13;
  return x;
}

ChowElement ch_O(long n) { return exp_class(Rational(n) * ChowElement::basis(1)); }

ChowElement ch_of(const BundleExpr& e) {
  using K = BundleExpr::Kind;
  switch (e.kind()) {
    case K::U1: return dual_class(ch_U1dual());
    case K::U2: return ch_U2();
    case K::O: return ch_O(e.degree());
    case K::Dual:
      if (e.arg(0).kind() == K::U1) return ch_U1dual();
      if (e.arg(0).kind() == K::U2) return ch_U2dual();
      return dual_class(ch_of(e.arg(0)));
    case K::Tensor: return chow_mul(ch_of(e.arg(0)), ch_of(e.arg(1)));
    case K::Sum: return ch_of(e.arg(0)) + ch_of(e.arg(1));
    case K::Det: return exp_class(ch_of(e.arg(0)).degree_part(1));
    case K::Sl: {
      if (is_U1_or_dual(e.arg(0))) return ch_slU1();
      ChowElement x = ch_of(e.arg(0));
      return chow_mul(x, dual_class(x)) - ChowElement::unit();
    }
    case K::Sym2:
    case K::Wedge2: {
      ChowElement x = ch_of(e.arg(0));
      ChowElement sq = chow_mul(x, x), ps = adams(x, 2);
      ChowElement r = e.kind() == K::Sym2 ? sq + ps : sq - ps;
      return Rational(1, 2) * r;
    }
  }
  return {};
}

long chi_of_class(const ChowElement& x) {
  Rational v = integral(chow_mul(x, todd_y()));
  if (!is_integer(v)) throw RingInconsistency("ring inconsistency: non-integral Euler characteristic " + to_string(v));
  return to_long(v);
}

long chi(const BundleExpr& e) { return chi_of_class(ch_of(e)); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& t) : t_(t) {}

  ChowElement parse() {
    ChowElement x = expr();
    skip();
    if (p_ != t_.size()) throw std::invalid_argument("unexpected input at position " + std::to_string(p_));
    return x;
  }

 private:
  const std::string& t_;
  size_t p_ = 0;

  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  char peek() {
    skip();
    return p_ < t_.size() ? t_[p_] : '\0';
  }
  long number() {
    size_t s = p_;
    while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
    if (s == p_) throw std::invalid_argument("expected number at position " + std::to_string(s));
    return std::stol(t_.substr(s, p_ - s));
  }

  ChowElement expr() {
    ChowElement x;
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = t_[p_++] == '-';
    x = term();
    if (neg) x = -x;
    while (peek() == '+' || peek() == '-') {
      bool minus = t_[p_++] == '-';
      ChowElement y = term();
      x = minus ? x - y : x + y;
    }
    return x;
  }

  ChowElement term() {
    ChowElement x = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++p_;
        x = chow_mul(x, power());
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'c' || c == 'd' || c == '(') {
        x = chow_mul(x, power());
      } else {
        return x;
      }
    }
  }

  ChowElement power() {
    ChowElement x = primary();
    if (peek() == '^') {
      ++p_;
      skip();
      x = chow_pow(x, static_cast<int>(number()));
    }
    return x;
  }

  ChowElement primary() {
    char c = peek();
    if (c == '(') {
      ++p_;
      ChowElement x = expr();
      if (peek() != ')') throw std::invalid_argument("expected ')' at position " + std::to_string(p_));
      ++p_;
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Rational(number()) * ChowElement::unit();
    if (c == 'c' || c == 'd') {
      size_t at = p_++;
      if (p_ >= t_.size() || !std::isdigit(static_cast<unsigned char>(t_[p_])))
        throw std::invalid_argument("expected index after '" + std::string(1, c) + "' at position " + std::to_string(at));
      int i = t_[p_++] - '0';
      if (c == 'c' && i == 1) return ChowElement::basis(1);
      if (c == 'c' && i == 2) return ChowElement::basis(3);
      if (c == 'c' && i == 3) return ChowElement::basis(7);
      if (c == 'd' && i == 1) return ChowElement::basis(1);
      if (c == 'd' && i == 2) return ChowElement::basis(4);
      throw std::invalid_argument("unknown generator at position " + std::to_string(at));
    }
    throw std::invalid_argument("unexpected input at position " + std::to_string(p_));
  }
};

}  // namespace

ChowElement parse_chow_poly(const std::string& text) { return PolyParser(text).parse(); }

std::string to_string(const ChowElement& x) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kChowRank; ++i) {
    if (x[i] == 0) continue;
    Rational v = x[i];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    if (v < 0) v = -v;
    if (i == 0) os << to_string(v);
    else if (v == 1) os << kChowNames[i];
    else os << to_string(v) << "*" << kChowNames[i];
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace kqm
