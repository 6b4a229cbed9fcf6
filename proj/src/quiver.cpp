#include "kqm/quiver.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace kqm {

namespace {

void check_len(const Quiver& q, const DimVector& d) {
  if (static_cast<int>(d.size()) != q.vertex_count)
    throw std::invalid_argument("dimension vector length " +
                                std::to_string(d.size()) + " does not match " +
                                std::to_string(q.vertex_count) + " vertices");
}

bool is_zero(const DimVector& d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

DimVector minus(const DimVector& a, const DimVector& b) {
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// calls f on every v with 0 <= v <= e
void for_each_below(const DimVector& e, const std::function<void(const DimVector&)>& f) {
  DimVector v(e.size(), 0);
  while (true) {
    f(v);
    size_t i = 0;
    while (i < v.size() && v[i] == e[i]) v[i++] = 0;
    if (i == v.size()) return;
    ++v[i];
  }
}

// memo is local to one top-level query
struct GenericSubSolver {
  const Quiver& q;
  std::map<std::pair<DimVector, DimVector>, int> ext_memo;

  int ext(const DimVector& a, const DimVector& b) {
    auto key = std::make_pair(a, b);
    if (auto it = ext_memo.find(key); it != ext_memo.end()) return it->second;
    int best = 0;
    for_each_below(a, [&](const DimVector& s) {
      if (is_zero(s)) return;
      int v = -euler_form(q, s, b);
      if (v > best && sub(s, a)) best = v;
    });
    ext_memo.emplace(std::move(key), best);
    return best;
  }

  bool sub(const DimVector& s, const DimVector& e) {
    if (is_zero(s) || s == e) return true;
    return ext(s, minus(e, s)) == 0;
  }
};

}  // namespace

Quiver::Quiver(int n, std::vector<std::pair<int, int>> arr)
    : vertex_count(n), arrows(std::move(arr)) {
  if (n <= 0) throw std::invalid_argument("quiver needs at least one vertex");
  for (auto [s, t] : arrows)
    if (s < 0 || t < 0 || s >= n || t >= n)
      throw std::invalid_argument("arrow vertex index out of range");
  // Kahn's algorithm for acyclicity
  std::vector<int> indeg(n, 0);
  for (auto [s, t] : arrows) ++indeg[t];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (auto [s, t] : arrows)
      if (s == v && --indeg[t] == 0) stack.push_back(t);
  }
  if (seen != n) throw std::invalid_argument("quiver has a directed cycle");
}

Quiver Quiver::kronecker(int m) {
  if (m < 0) throw std::invalid_argument("negative arrow count");
  return Quiver(2, std::vector<std::pair<int, int>>(m, {0, 1}));
}

Quiver Quiver::parse(const std::string& text) {
  const std::string pre = "kronecker:";
  if (text.rfind(pre, 0) == 0) {
    try {
      size_t used = 0;
      int m = std::stoi(text.substr(pre.size()), &used);
      if (used + pre.size() != text.size()) throw std::invalid_argument("");
      return kronecker(m);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad kronecker shorthand: " + text);
    }
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("quiver JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw std::invalid_argument("quiver JSON needs \"vertices\" and \"arrows\"");
  std::vector<std::pair<int, int>> arr;
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2) throw std::invalid_argument("arrow must be [i,j]");
    arr.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  return Quiver(j.at("vertices").get<int>(), std::move(arr));
}

std::string to_string(const DimVector& d) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ')';
  return os.str();
}

std::string to_string(const HNType& t) {
  std::string s;
  for (size_t i = 0; i < t.parts.size(); ++i) s += (i ? "," : "") + to_string(t.parts[i]);
  return s;
}

Rational slope(const std::vector<int>& theta, const DimVector& e) {
  if (theta.size() != e.size()) throw std::invalid_argument("theta length mismatch");
  long num = 0, den = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    num += static_cast<long>(theta[i]) * e[i];
    den += e[i];
  }
  if (den == 0) throw std::domain_error("undefined slope");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  check_len(q, d);
  check_len(q, e);
  int s = 0;
  for (int i = 0; i < q.vertex_count; ++i) s += d[i] * e[i];
  for (auto [a, b] : q.arrows) s -= d[a] * e[b];
  return s;
}

int generic_ext(const Quiver& q, const DimVector& a, const DimVector& b) {
  check_len(q, a);
  check_len(q, b);
  GenericSubSolver s{q, {}};
  return s.ext(a, b);
}

bool is_generic_sub(const Quiver& q, const DimVector& sub, const DimVector& e) {
  check_len(q, sub);
  check_len(q, e);
  for (size_t i = 0; i < e.size(); ++i)
    if (sub[i] < 0 || sub[i] > e[i]) return false;
  GenericSubSolver s{q, {}};
  return s.sub(sub, e);
}

// King: semistable points exist iff a general representation is semistable,
// i.e. no generic subdimension vector has larger slope
bool has_semistable(const Quiver& q, const DimVector& e, const std::vector<int>& theta) {
  check_len(q, e);
  if (is_zero(e)) throw std::domain_error("undefined slope");
  Rational mu = slope(theta, e);
  GenericSubSolver s{q, {}};
  bool ok = true;
  for_each_below(e, [&](const DimVector& v) {
    if (!ok || is_zero(v) || v == e) return;
    if (slope(theta, v) > mu && s.sub(v, e)) ok = false;
  });
  return ok;
}

std::vector<HNType> enumerate_hn_types(const Quiver& q, const DimVector& d,
                                       const std::vector<int>& theta) {
  check_len(q, d);
  if (theta.size() != d.size()) throw std::invalid_argument("theta length mismatch");
  long td = 0;
  for (size_t i = 0; i < d.size(); ++i) td += static_cast<long>(theta[i]) * d[i];
  if (td != 0) throw std::invalid_argument("theta . d must be 0, got " + std::to_string(td));

  std::map<DimVector, bool> semistable;
  auto ss = [&](const DimVector& e) {
    auto it = semistable.find(e);
    if (it == semistable.end()) it = semistable.emplace(e, has_semistable(q, e, theta)).first;
    return it->second;
  };

  std::vector<HNType> out;
  std::vector<DimVector> parts;
  std::function<void(const DimVector&)> rec = [&](const DimVector& rest) {
    for_each_below(rest, [&](const DimVector& p) {
      if (is_zero(p)) return;
      if (!parts.empty() && !(slope(theta, p) < slope(theta, parts.back()))) return;
      if (!ss(p)) return;
      parts.push_back(p);
      if (p == rest)
        out.push_back(HNType{parts});
      else
        rec(minus(rest, p));
      parts.pop_back();
    });
  };
  if (!is_zero(d)) rec(d);

  auto flat = [](const HNType& t) {
    std::vector<int> f;
    for (const auto& p : t.parts) f.insert(f.end(), p.begin(), p.end());
    return f;
  };
  std::sort(out.begin(), out.end(),
            [&](const HNType& a, const HNType& b) { return flat(a) < flat(b); });
  return out;
}

int hn_stratum_codim(const Quiver& q, const HNType& tau) {
  int s = 0;
  for (size_t k = 0; k < tau.parts.size(); ++k)
    for (size_t l = k + 1; l < tau.parts.size(); ++l) s -= euler_form(q, tau.parts[k], tau.parts[l]);
  return s;
}

}  // namespace kqm
