#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace kqm {

class BundleExpr {
 public:
  enum class Kind { U1, U2, O, Dual, Tensor, Sum, Det, Sl, Sym2, Wedge2 };

  static BundleExpr U1();
  static BundleExpr U2();
  static BundleExpr O(long n);
  static BundleExpr dual(const BundleExpr& e);
  static BundleExpr tensor(const BundleExpr& e, const BundleExpr& f);
  static BundleExpr sum(const BundleExpr& e, const BundleExpr& f);
  static BundleExpr det(const BundleExpr& e);
  static BundleExpr sl(const BundleExpr& e);
  static BundleExpr sym2(const BundleExpr& e);
  static BundleExpr wedge2(const BundleExpr& e);
  static BundleExpr twist(const BundleExpr& e, long n) { return tensor(e, O(n)); }

  Kind kind() const { return node_->kind; }
  long degree() const { return node_->n; }  // only for O(n)
  const BundleExpr& arg(size_t i) const { return node_->args.at(i); }
  size_t arity() const { return node_->args.size(); }

  // canonical function-style text, round-trips through parse_expr
  std::string str() const;

  bool operator==(const BundleExpr& o) const;

 private:
  struct Node {
    Kind kind;
    long n = 0;
    std::vector<BundleExpr> args;
  };
  explicit BundleExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static BundleExpr make(Kind k, std::vector<BundleExpr> args, long n = 0);
  std::shared_ptr<const Node> node_;
};

struct ParseError : std::invalid_argument {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
};

BundleExpr parse_expr(const std::string& text);

long rank_of(const BundleExpr& e);

// weights of U1, U2 on one fixed locus, twist already applied
struct WeightBase {
  std::vector<long> u1;
  std::vector<long> u2;
};

// sorted multiset
std::vector<long> weights_of(const BundleExpr& e, const WeightBase& base);

}  // namespace kqm
