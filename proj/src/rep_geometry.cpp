#include "kqm/rep_geometry.hpp"

#include "kqm/linalg.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace kqm {

const std::array<const char*, 6> kQuadricMonomials = {"x^2", "y^2", "z^2", "xy", "xz", "yz"};

namespace {

// exponent vectors of the quadric monomials
const std::array<std::array<int, 3>, 6> kQuadExp = {{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};

int quad_index(int i, int j) {
  if (i == j) return i;
  int lo = std::min(i, j), hi = std::max(i, j);
  if (lo == 0) return hi == 1 ? 3 : 4;
  return 5;
}

int cubic_index(const std::array<int, 3>& e) {
  int idx = 0;
  for (int a = 3; a >= 0; --a)
    for (int b = 3 - a; b >= 0; --b) {
      if (e[0] == a && e[1] == b) return idx;
      ++idx;
    }
  throw std::logic_error("bad cubic exponent");
}

std::string render(const Rational* coef, const char* const* names, size_t n) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < n; ++i) {
    Rational v = coef[i];
    if (v == 0) continue;
    if (v < 0) os << (first ? "-" : "-");
    else if (!first) os << "+";
    if (v < 0) v = -v;
    if (v != 1) os << to_string(v) << "*";
    os << names[i];
    first = false;
  }
  return first ? "0" : os.str();
}

LinearForm parse_form(const std::string& s) {
  LinearForm f{};
  size_t p = 0;
  auto skip = [&] {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  };
  skip();
  if (p == s.size()) throw std::invalid_argument("empty matrix entry");
  bool any = false;
  while (true) {
    skip();
    if (p == s.size()) break;
    int sign = 1;
    if (s[p] == '+' || s[p] == '-') {
      sign = s[p] == '-' ? -1 : 1;
      ++p;
      skip();
    } else if (any) {
      throw std::invalid_argument("malformed matrix entry '" + s + "'");
    }
    Rational c = 1;
    size_t start = p;
    while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '/')) ++p;
    bool has_num = p > start;
    if (has_num) {
      try {
        c = Rational(s.substr(start, p - start));
        c.canonicalize();
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad coefficient in '" + s + "'");
      }
      skip();
      if (p < s.size() && s[p] == '*') {
        ++p;
        skip();
      }
    }
    if (p < s.size() && (s[p] == 'x' || s[p] == 'y' || s[p] == 'z')) {
      f[s[p] - 'x'] += sign * c;
      ++p;
    } else if (has_num) {
      if (c != 0) throw std::invalid_argument("matrix entry '" + s + "' is not a linear form");
    } else {
      throw std::invalid_argument("malformed matrix entry '" + s + "'");
    }
    any = true;
  }
  return f;
}

std::vector<std::string> split(const std::string& s, char d) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == d) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// univariate polynomials, coefficient i of t^i, trailing zeros stripped
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t sh = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[sh + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Tensor21 make_tensor(std::initializer_list<std::array<int, 3>> terms) {
  Tensor21 t{};
  for (auto [q, v, c] : terms) t[q][v] += c;
  return t;
}

struct DictEntry {
  Sl3Element m;
  Tensor21 t;
};

const std::vector<DictEntry>& dictionary() {
  static const std::vector<DictEntry> d = {
      {elementary(1, 3), make_tensor({{0, 1, 1}, {3, 0, -1}})},
      {elementary(1, 2), make_tensor({{0, 2, -1}, {4, 0, 1}})},
      {elementary(2, 3), make_tensor({{1, 0, -1}, {3, 1, 1}})},
      {elementary(3, 1), make_tensor({{2, 1, -1}, {5, 2, 1}})},
      {elementary(2, 1), make_tensor({{1, 2, 1}, {5, 1, -1}})},
      {elementary(3, 2), make_tensor({{2, 0, 1}, {4, 2, -1}})},
      {elementary(2, 2) - elementary(1, 1), make_tensor({{5, 0, 1}, {4, 1, 1}, {3, 2, -2}})},
      {elementary(3, 3) - elementary(2, 2), make_tensor({{4, 1, 1}, {3, 2, 1}, {5, 0, -2}})},
  };
  return d;
}

}  // namespace

LinearFormMatrix LinearFormMatrix::parse(const std::string& text) {
  auto rows = split(text, ';');
  if (rows.size() != 2) throw std::invalid_argument("matrix needs 2 rows separated by ';'");
  LinearFormMatrix m;
  for (int i = 0; i < 2; ++i) {
    auto cols = split(rows[i], ',');
    if (cols.size() != 3) throw std::invalid_argument("matrix row needs 3 entries separated by ','");
    for (int j = 0; j < 3; ++j) m.e[i][j] = parse_form(cols[j]);
  }
  return m;
}

std::string to_string(const LinearForm& l) {
  static const char* names[] = {"x", "y", "z"};
  return render(l.data(), names, 3);
}

std::string to_string(const Quadric& q) { return render(q.data(), kQuadricMonomials.data(), 6); }

std::string LinearFormMatrix::str() const {
  std::string s;
  for (int i = 0; i < 2; ++i) {
    if (i) s += ";";
    for (int j = 0; j < 3; ++j) s += (j ? "," : "") + to_string(e[i][j]);
  }
  return s;
}

Quadric multiply(const LinearForm& a, const LinearForm& b) {
  Quadric q{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q[quad_index(i, j)] += a[i] * b[j];
  return q;
}

QuadricSpace minors(const LinearFormMatrix& r) {
  auto minor = [&](int i, int j) {
    Quadric p = multiply(r.e[0][i], r.e[1][j]), m = multiply(r.e[0][j], r.e[1][i]);
    for (int k = 0; k < 6; ++k) p[k] -= m[k];
    return p;
  };
  return {minor(1, 2), minor(0, 2), minor(0, 1)};
}

size_t span_dimension(const QuadricSpace& h) {
  RatMatrix m;
  for (const auto& q : h) m.emplace_back(q.begin(), q.end());
  return rank(m);
}

bool is_stable(const LinearFormMatrix& r) {
  // rho: W^* (x) C^2 -> C^3 must be onto
  RatMatrix img;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 3; ++k) img.push_back({r.e[i][0][k], r.e[i][1][k], r.e[i][2][k]});
  if (rank(img) < 3) return false;

  // M(v)[k][col] = coefficient of variable k in (v1*row1 + v2*row2)[col];
  // each entry is a binary linear form, stored as (coef of v1, coef of v2)
  using Lin = std::array<Rational, 2>;
  Lin m[3][3];
  for (int k = 0; k < 3; ++k)
    for (int c = 0; c < 3; ++c) m[k][c] = {r.e[0][c][k], r.e[1][c][k]};

  // 2x2 minors as binary quadratics (v1^2, v1 v2, v2^2)
  std::vector<std::array<Rational, 3>> forms;
  auto mul = [](const Lin& a, const Lin& b) {
    return std::array<Rational, 3>{a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[1] * b[1]};
  };
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = c1 + 1; c2 < 3; ++c2) {
          auto p = mul(m[r1][c1], m[r2][c2]), q = mul(m[r1][c2], m[r2][c1]);
          forms.push_back({p[0] - q[0], p[1] - q[1], p[2] - q[2]});
        }

  // common root at v = (1,0) iff every v1^2 coefficient vanishes
  bool lead = false;
  for (const auto& f : forms) lead = lead || f[0] != 0;
  if (!lead) return false;
  // remaining roots: dehomogenise v = (t,1)
  Poly g;
  for (const auto& f : forms) g = poly_gcd(g, Poly{f[2], f[1], f[0]});
  return g.size() == 1;
}

Cubic multiply_out(const Tensor21& t) {
  Cubic c{};
  for (int q = 0; q < 6; ++q)
    for (int v = 0; v < 3; ++v) {
      if (t[q][v] == 0) continue;
      auto e = kQuadExp[q];
      ++e[v];
      c[cubic_index(e)] += t[q][v];
    }
  return c;
}

SyzygyPair syzygies(const LinearFormMatrix& r) {
  auto h = minors(r);
  static const int sign[3] = {1, -1, 1};
  SyzygyPair out;
  for (int row = 0; row < 2; ++row) {
    Tensor21 t{};
    // W (x) S^2W written as S^2W (x) W
    for (int k = 0; k < 3; ++k)
      for (int q = 0; q < 6; ++q)
        for (int v = 0; v < 3; ++v) t[q][v] += sign[k] * h[k][q] * r.e[row][k][v];
    out.tensors[row] = t;
  }
  if (!is_stable(r)) {
    out.degenerate = true;
    out.warning = "degenerate syzygy: matrix is not stable";
  }
  return out;
}

Sl3Element elementary(int i, int j) {
  Sl3Element m{};
  m.at(i - 1).at(j - 1) = 1;
  return m;
}

Rational trace(const Sl3Element& m) { return m[0][0] + m[1][1] + m[2][2]; }

Sl3Element matmul(const Sl3Element& a, const Sl3Element& b) {
  Sl3Element c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Sl3Element operator+(const Sl3Element& a, const Sl3Element& b) {
  Sl3Element c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}

Sl3Element operator-(const Sl3Element& a, const Sl3Element& b) { return a + Rational(-1) * b; }

Sl3Element operator*(const Rational& s, const Sl3Element& a) {
  Sl3Element c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = s * a[i][j];
  return c;
}

Sl3Element tensor_to_sl3(const Tensor21& t) {
  const auto& d = dictionary();
  RatMatrix a(18, std::vector<Rational>(d.size()));
  std::vector<Rational> b(18);
  for (int q = 0; q < 6; ++q)
    for (int v = 0; v < 3; ++v) {
      b[q * 3 + v] = t[q][v];
      for (size_t k = 0; k < d.size(); ++k) a[q * 3 + v][k] = d[k].t[q][v];
    }
  auto x = solve(a, b);
  if (!x) throw std::logic_error("tensor is not in the span of the sl3 dictionary");
  Sl3Element m{};
  for (size_t k = 0; k < d.size(); ++k) m = m + (*x)[k] * d[k].m;
  return m;
}

std::pair<Sl3Element, Sl3Element> to_sl3_plane(const LinearFormMatrix& r) {
  auto s = syzygies(r);
  return {tensor_to_sl3(s.tensors[0]), tensor_to_sl3(s.tensors[1])};
}

bool commutes(const std::pair<Sl3Element, Sl3Element>& p) {
  return matmul(p.first, p.second) == matmul(p.second, p.first);
}

LinearFormMatrix blp2_point(const Rational& a, const Rational& b, const Rational& c,
                            std::optional<std::pair<Rational, Rational>> direction) {
  const LinearForm x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1}, o{};
  auto scale = [](const Rational& s, const LinearForm& f) { return LinearForm{s * f[0], s * f[1], s * f[2]}; };
  int zeros = (a == 0) + (b == 0) + (c == 0);
  if (zeros == 3) throw std::invalid_argument("blp2_point: (a,b,c) must be nonzero");
  if (zeros < 2) return LinearFormMatrix{{{{x, y, z}, {scale(a, y), scale(b, z), scale(c, x)}}}};
  if (!direction || (direction->first == 0 && direction->second == 0))
    throw std::invalid_argument("blp2_point: coordinate point needs a direction [b':c']");
  const auto& [p, q] = *direction;
  // over (1:0:0); the other two follow from the cyclic symmetry
  // x->y->z->x, (a:b:c) -> (c:a:b)
  if (a != 0) return LinearFormMatrix{{{{o, y, z}, {y, scale(p, z), scale(q, x)}}}};
  if (b != 0) return LinearFormMatrix{{{{x, o, z}, {scale(q, y), z, scale(p, x)}}}};
  return LinearFormMatrix{{{{x, y, o}, {scale(p, y), scale(q, z), x}}}};
}

std::vector<LinearFormMatrix> hasse_representatives() {
  return {LinearFormMatrix::parse("x,y,0;0,y,z"), LinearFormMatrix::parse("x,z,0;0,x,y"),
          LinearFormMatrix::parse("x,y,z;0,x,y"), LinearFormMatrix::parse("x,0,z;0,x,y"),
          LinearFormMatrix::parse("x,y,0;0,x,y")};
}

}  // namespace kqm
