#include "kqm/bundle_expr.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace kqm {

using K = BundleExpr::Kind;

BundleExpr BundleExpr::make(Kind k, std::vector<BundleExpr> args, long n) {
  return BundleExpr(std::make_shared<const Node>(Node{k, n, std::move(args)}));
}

BundleExpr BundleExpr::U1() { return make(K::U1, {}); }
BundleExpr BundleExpr::U2() { return make(K::U2, {}); }
BundleExpr BundleExpr::O(long n) { return make(K::O, {}, n); }
BundleExpr BundleExpr::dual(const BundleExpr& e) { return make(K::Dual, {e}); }
BundleExpr BundleExpr::tensor(const BundleExpr& e, const BundleExpr& f) { return make(K::Tensor, {e, f}); }
BundleExpr BundleExpr::sum(const BundleExpr& e, const BundleExpr& f) { return make(K::Sum, {e, f}); }
BundleExpr BundleExpr::det(const BundleExpr& e) { return make(K::Det, {e}); }
BundleExpr BundleExpr::sl(const BundleExpr& e) { return make(K::Sl, {e}); }
BundleExpr BundleExpr::sym2(const BundleExpr& e) { return make(K::Sym2, {e}); }
BundleExpr BundleExpr::wedge2(const BundleExpr& e) { return make(K::Wedge2, {e}); }

bool BundleExpr::operator==(const BundleExpr& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || node_->n != o.node_->n || arity() != o.arity()) return false;
  for (size_t i = 0; i < arity(); ++i)
    if (!(arg(i) == o.arg(i))) return false;
  return true;
}

std::string BundleExpr::str() const {
  switch (kind()) {
    case K::U1: return "U1";
    case K::U2: return "U2";
    case K::O: return "O(" + std::to_string(degree()) + ")";
    default: break;
  }
  static const char* names[] = {"", "", "", "dual", "tensor", "sum", "det", "sl", "sym2", "wedge2"};
  std::string s = names[static_cast<int>(kind())];
  s += '(';
  for (size_t i = 0; i < arity(); ++i) s += (i ? "," : "") + arg(i).str();
  return s + ')';
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& t) : t_(t) {}

  BundleExpr parse() {
    BundleExpr e = expr();
    skip();
    if (p_ != t_.size()) throw ParseError("trailing input", p_);
    return e;
  }

 private:
  const std::string& t_;
  size_t p_ = 0;

  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  void expect(char c) {
    skip();
    if (p_ >= t_.size() || t_[p_] != c)
      throw ParseError(std::string("expected '") + c + "'", p_);
    ++p_;
  }
  bool accept(char c) {
    skip();
    if (p_ < t_.size() && t_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip();
    size_t s = p_;
    while (p_ < t_.size() && std::isalnum(static_cast<unsigned char>(t_[p_]))) ++p_;
    if (s == p_) throw ParseError("expected identifier", s);
    return t_.substr(s, p_ - s);
  }
  long integer() {
    skip();
    size_t s = p_;
    if (p_ < t_.size() && (t_[p_] == '-' || t_[p_] == '+')) ++p_;
    size_t digits = p_;
    while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
    if (digits == p_) throw ParseError("expected integer", s);
    try {
      return std::stol(t_.substr(s, p_ - s));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", s);
    }
  }

  BundleExpr expr() {
    skip();
    size_t at = p_;
    std::string id = ident();
    if (id == "U1") return BundleExpr::U1();
    if (id == "U2") return BundleExpr::U2();
    if (id == "O") {
      expect('(');
      long n = integer();
      expect(')');
      return BundleExpr::O(n);
    }
    if (id == "twist") {
      expect('(');
      BundleExpr e = expr();
      expect(',');
      long n = integer();
      expect(')');
      return BundleExpr::twist(e, n);
    }
    if (id == "tensor" || id == "sum") {
      expect('(');
      BundleExpr e = expr();
      expect(',');
      do {
        BundleExpr f = expr();
        e = id == "tensor" ? BundleExpr::tensor(e, f) : BundleExpr::sum(e, f);
      } while (accept(','));
      expect(')');
      return e;
    }
    BundleExpr (*unary)(const BundleExpr&) = nullptr;
    if (id == "dual") unary = &BundleExpr::dual;
    else if (id == "det") unary = &BundleExpr::det;
    else if (id == "sl") unary = &BundleExpr::sl;
    else if (id == "sym2") unary = &BundleExpr::sym2;
    else if (id == "wedge2") unary = &BundleExpr::wedge2;
    if (!unary) throw ParseError("unknown identifier '" + id + "'", at);
    expect('(');
    BundleExpr e = expr();
    expect(')');
    return unary(e);
  }
};

std::vector<long> sorted(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

BundleExpr parse_expr(const std::string& text) { return Parser(text).parse(); }

long rank_of(const BundleExpr& e) {
  switch (e.kind()) {
    case K::U1: return 2;
    case K::U2: return 3;
    case K::O:
    case K::Det: return 1;
    case K::Dual: return rank_of(e.arg(0));
    case K::Tensor: return rank_of(e.arg(0)) * rank_of(e.arg(1));
    case K::Sum: return rank_of(e.arg(0)) + rank_of(e.arg(1));
    case K::Sl: {
      long r = rank_of(e.arg(0));
      return r * r - 1;
    }
    case K::Sym2: {
      long r = rank_of(e.arg(0));
      return r * (r + 1) / 2;
    }
    case K::Wedge2: {
      long r = rank_of(e.arg(0));
      return r * (r - 1) / 2;
    }
  }
  return 0;
}

std::vector<long> weights_of(const BundleExpr& e, const WeightBase& base) {
  switch (e.kind()) {
    case K::U1: return sorted(base.u1);
    case K::U2: return sorted(base.u2);
    case K::O: {
      // O(1) = det(U1^*)
      long s = std::accumulate(base.u1.begin(), base.u1.end(), 0L);
      return {-e.degree() * s};
    }
    case K::Dual: {
      auto w = weights_of(e.arg(0), base);
      for (auto& x : w) x = -x;
      return sorted(std::move(w));
    }
    case K::Tensor: {
      auto a = weights_of(e.arg(0), base), b = weights_of(e.arg(1), base);
      std::vector<long> w;
      w.reserve(a.size() * b.size());
      for (long x : a)
        for (long y : b) w.push_back(x + y);
      return sorted(std::move(w));
    }
    case K::Sum: {
      auto a = weights_of(e.arg(0), base), b = weights_of(e.arg(1), base);
      a.insert(a.end(), b.begin(), b.end());
      return sorted(std::move(a));
    }
    case K::Det: {
      auto a = weights_of(e.arg(0), base);
      return {std::accumulate(a.begin(), a.end(), 0L)};
    }
    case K::Sl: {
      auto a = weights_of(e.arg(0), base);
      if (a.empty()) throw std::invalid_argument("sl of a rank 0 bundle");
      std::vector<long> w(a.size() - 1, 0);
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
          if (i != j) w.push_back(a[i] - a[j]);
      return sorted(std::move(w));
    }
    case K::Sym2:
    case K::Wedge2: {
      auto a = weights_of(e.arg(0), base);
      std::vector<long> w;
      size_t off = e.kind() == K::Sym2 ? 0 : 1;
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + off; j < a.size(); ++j) w.push_back(a[i] + a[j]);
      return sorted(std::move(w));
    }
  }
  return {};
}

}  // namespace kqm
