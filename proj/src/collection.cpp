#include "kqm/collection.hpp"

#include <json.hpp>

#include <map>

namespace kqm {

namespace {

using B = BundleExpr;

B U1d() { return B::dual(B::U1()); }
B U2d() { return B::dual(B::U2()); }
B slU1d() { return B::sl(U1d()); }

// <O, U2^*, U1^*, U2(1)> twisted by k
std::vector<CollectionObject> block_A(long k) {
  auto tw = [k](const B& e) { return k == 0 ? e : B::twist(e, k); };
  std::string s = k == 0 ? "" : "(" + std::to_string(k) + ")";
  return {{"O" + s, B::O(k)}, {"U2*" + s, tw(U2d())}, {"U1*" + s, tw(U1d())}, {"U2(" + std::to_string(k + 1) + ")", B::twist(B::U2(), k + 1)}};
}

CollectionObject sl_at(long k) {
  return {"sl(U1*)(" + std::to_string(k) + ")", k == 0 ? slU1d() : B::twist(slU1d(), k)};
}

CollectionObject obj(const std::string& label, const std::string& expr) { return {label, parse_expr(expr)}; }

CollectionSpec concat(std::initializer_list<std::vector<CollectionObject>> parts) {
  CollectionSpec c;
  for (const auto& p : parts) c.objects.insert(c.objects.end(), p.begin(), p.end());
  return c;
}

const std::map<std::string, CollectionSpec (*)()>& registry() {
  static const std::map<std::string, CollectionSpec (*)()> r = {
      {"1exc", [] { return concat({{{"sl(U1)", B::sl(B::U1())}}, block_A(0), block_A(1), block_A(2)}); }},
      {"2exc-a", [] { return concat({block_A(0), {sl_at(1)}, block_A(1), block_A(2)}); }},
      {"2exc-b", [] { return concat({block_A(0), block_A(1), {sl_at(2)}, block_A(2)}); }},
      {"2exc-c", [] { return concat({block_A(0), block_A(1), block_A(2), {sl_at(3)}}); }},
      {"3exc-a",
       [] {
         return concat({block_A(0),
                        {obj("O(1)", "O(1)"), sl_at(1), obj("U2*(1)", "twist(dual(U2),1)"),
                         obj("U1*(1)", "twist(dual(U1),1)"), obj("U2(2)", "twist(U2,2)")},
                        block_A(2)});
       }},
      {"3exc-b",
       [] {
         return concat({block_A(0), block_A(1),
                        {obj("O(2)", "O(2)"), sl_at(2), obj("U2*(2)", "twist(dual(U2),2)"),
                         obj("U1*(2)", "twist(dual(U1),2)"), obj("U2(3)", "twist(U2,3)")}});
       }},
      {"4exc",
       [] {
         return concat({{obj("O", "O(0)"), obj("U2*", "dual(U2)"), obj("U1*", "dual(U1)"), obj("O(1)", "O(1)"),
                         obj("U2*(1)", "twist(dual(U2),1)"), obj("U1*(1)", "twist(dual(U1),1)"),
                         obj("U2(2)", "twist(U2,2)"), sl_at(2), obj("O(2)", "O(2)"),
                         obj("U1*xU2(2)", "twist(tensor(dual(U1),U2),2)"), obj("U2*(2)", "twist(dual(U2),2)"),
                         obj("U1*(2)", "twist(dual(U1),2)"), obj("U2(3)", "twist(U2,3)")}});
       }},
      {"5exc",
       [] {
         return concat({{obj("O", "O(0)"), obj("U2*", "dual(U2)"), obj("U1*", "dual(U1)"), obj("U2(1)", "twist(U2,1)"),
                         obj("U1*xU2*", "tensor(dual(U1),dual(U2))"), obj("O(1)", "O(1)"), sl_at(1),
                         obj("U2*(1)", "twist(dual(U2),1)"), obj("U1*(1)", "twist(dual(U1),1)"),
                         obj("U2(2)", "twist(U2,2)"), obj("O(2)", "O(2)"), obj("U1*(2)", "twist(dual(U1),2)"),
                         obj("U2(3)", "twist(U2,3)")}});
       }},
  };
  return r;
}

CheckResult compare(const std::string& name, const ChowElement& lhs, const ChowElement& rhs) {
  if (lhs == rhs) return {name, true, ""};
  return {name, false, "lhs " + to_string(lhs) + " != rhs " + to_string(rhs)};
}

ChowElement ch(const std::string& e) { return ch_of(parse_expr(e)); }

}  // namespace

CollectionSpec CollectionSpec::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("collection JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("objects") || !j["objects"].is_array())
    throw std::invalid_argument("collection JSON needs an \"objects\" array");
  CollectionSpec c;
  for (const auto& o : j["objects"]) {
    if (!o.is_object() || !o.contains("expr") || !o["expr"].is_string())
      throw std::invalid_argument("collection object needs an \"expr\" string");
    std::string expr = o["expr"].get<std::string>();
    std::string label = o.contains("label") ? o["label"].get<std::string>() : expr;
    c.objects.push_back({label, parse_expr(expr)});
  }
  if (c.objects.empty()) throw std::invalid_argument("collection is empty");
  return c;
}

std::string CollectionSpec::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& o : objects) arr.push_back({{"label", o.label}, {"expr", o.expr.str()}});
  return nlohmann::json{{"objects", arr}}.dump(2);
}

CollectionSpec builtin_collection(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown collection '" + name + "'");
  return it->second();
}

std::vector<std::string> builtin_collection_names() {
  std::vector<std::string> v;
  for (const auto& [k, _] : registry()) v.push_back(k);
  return v;
}

long euler_pairing(const BundleExpr& e, const BundleExpr& f) { return chi(B::tensor(B::dual(e), f)); }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Exceptional: return "exceptional-certified";
    case Verdict::StrongExt: return "strong-ext-certified";
    case Verdict::Orthogonal: return "orthogonality-certified";
    case Verdict::Undetermined: return "undetermined";
  }
  return "";
}

Verdict verdict_for(size_t i, size_t j, long chi, bool teleman_pass) {
  if (!teleman_pass) return Verdict::Undetermined;
  if (i == j) return chi == 1 ? Verdict::Exceptional : Verdict::Undetermined;
  if (i < j) return chi >= 0 ? Verdict::StrongExt : Verdict::Undetermined;
  return chi == 0 ? Verdict::Orthogonal : Verdict::Undetermined;
}

std::vector<std::pair<size_t, size_t>> VerificationMatrix::undetermined() const {
  std::vector<std::pair<size_t, size_t>> v;
  for (const auto& p : entries)
    if (p.verdict == Verdict::Undetermined) v.emplace_back(p.i, p.j);
  return v;
}

bool VerificationMatrix::consistent() const {
  for (const auto& p : entries) {
    if (p.i == p.j && p.verdict != Verdict::Exceptional) return false;
    if (p.i > p.j && p.chi != 0) return false;
  }
  return true;
}

VerificationMatrix verify_collection(const CollectionSpec& spec, const TelemanContext& ctx) {
  auto strata = unstable_strata(ctx);
  const size_t n = spec.objects.size();
  std::vector<ChowElement> chs, dual_chs;
  for (const auto& o : spec.objects) {
    chs.push_back(ch_of(o.expr));
    dual_chs.push_back(dual_class(chs.back()));
  }
  VerificationMatrix m;
  m.n = n;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      B h = B::tensor(B::dual(spec.objects[i].expr), spec.objects[j].expr);
      auto cw = central_weights(h, ctx);
      for (long w : cw)
        if (w != 0) throw DescentViolation("descent violation: " + h.str());
      auto rep = teleman_certify(h, strata);
      long x = chi_of_class(chow_mul(dual_chs[i], chs[j]));
      m.entries.push_back({i, j, x, rep.pass, verdict_for(i, j, x, rep.pass), rep.blocking()});
    }
  return m;
}

std::vector<CheckResult> check_ch_identities() {
  ChowElement O = ch("O(0)"), O1 = ch("O(1)"), O2 = ch("O(2)");
  ChowElement U2 = ch("U2"), U2d = ch("dual(U2)"), U1d = ch("dual(U1)");
  ChowElement U21 = ch("twist(U2,1)"), U2d1 = ch("twist(dual(U2),1)"), U1d1 = ch("twist(dual(U1),1)");
  ChowElement sl = ch("sl(dual(U1))"), sl1 = ch("twist(sl(dual(U1)),1)"), sl2 = ch("twist(sl(dual(U1)),2)");
  ChowElement lhs2 = ch("tensor(dual(U1),twist(U2,1))"), lhs4 = ch("tensor(dual(U1),twist(U2,2))");
  auto q = [](long n) { return Rational(n); };

  ChowElement rhs_cor2 = -U2 + q(6) * O + q(3) * U2d - q(9) * U1d + q(3) * sl1 + q(3) * O1;
  ChowElement rhs_cor3 = -U21 + q(6) * O1 + q(3) * U2d1 - q(9) * U1d1 + q(3) * sl2 + q(3) * O2;
  return {
      compare("sl(U1*) = sl(U1*)(1) + 3 U2* - 3 U2(1)", sl, sl1 + q(3) * U2d - q(3) * U21),
      compare("U1*xU2(1) = -U2 + 3 sl(U1*) + 6 O - 6 U2* - 9 U1* + 9 U2(1) + 3 O(1)", lhs2,
              -U2 + q(3) * sl + q(6) * O - q(6) * U2d - q(9) * U1d + q(9) * U21 + q(3) * O1),
      compare("U1*xU2(1) = -U2 + 6 O + 3 U2* - 9 U1* + 3 sl(U1*)(1) + 3 O(1)", lhs2, rhs_cor2),
      compare("U1*xU2(2) = -U2(1) + 6 O(1) + 3 U2*(1) - 9 U1*(1) + 3 sl(U1*)(2) + 3 O(2)", lhs4, rhs_cor3),
      compare("O(1) twist of the U1*xU2(1) identity gives the U1*xU2(2) identity", chow_mul(O1, rhs_cor2), rhs_cor3),
  };
}

MutationLedger mutation_ledger() {
  MutationLedger l;
  l.L6 = ch("twist(U2,1)");
  l.L5 = Rational(6) * ch("O(1)") - l.L6;
  l.L4 = l.L5 + Rational(3) * ch("twist(dual(U2),1)");
  l.L3 = Rational(9) * ch("twist(dual(U1),1)") - l.L4;
  l.L2 = Rational(3) * ch("twist(tensor(dual(U1),U1),2)") - ch("tensor(dual(U1),twist(U2,2))");
  return l;
}

std::vector<CheckResult> mutation_ledger_check() {
  auto l = mutation_ledger();
  auto rank_is = [](const std::string& name, const ChowElement& x, long r) {
    bool ok = x.rank() == r;
    return CheckResult{name, ok, ok ? "" : "rank " + to_string(x.rank())};
  };
  ChowElement deg1 = Rational(6) * ChowElement::basis(1) - l.L6.degree_part(1);
  return {
      compare("ch(L3[-1]) = ch(L2[-1])", l.L3, l.L2),
      rank_is("rank L5[-2] = 3", l.L5, 3),
      rank_is("rank L4[-2] = 12", l.L4, 12),
      rank_is("rank L3[-1] = 6", l.L3, 6),
      rank_is("rank L2[-1] = 6", l.L2, 6),
      compare("ch_1(L5[-2]) = 6 c1 - ch_1(U2(1))", l.L5.degree_part(1), deg1),
      compare("ch_1(L5[-2]) = 4 c1", l.L5.degree_part(1), Rational(4) * ChowElement::basis(1)),
  };
}

}  // namespace kqm
