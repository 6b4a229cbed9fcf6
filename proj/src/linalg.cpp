#include "kqm/linalg.hpp"

#include <stdexcept>

namespace kqm {

std::vector<size_t> rref(RatMatrix& m) {
  std::vector<size_t> piv;
  if (m.empty()) return piv;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

size_t rank(RatMatrix m) { return rref(m).size(); }

std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  if (a.empty()) return std::vector<Rational>{};
  const size_t n = a[0].size();
  RatMatrix aug = a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  std::vector<Rational> x(n);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][n];
  return x;
}

}  // namespace kqm
