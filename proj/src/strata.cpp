#include "kqm/strata.hpp"

#include <algorithm>
#include <numeric>

namespace kqm {

OnePS one_ps_from_hn(const HNType& tau, const std::vector<int>& theta) {
  if (tau.parts.empty()) throw std::invalid_argument("empty HN type");
  std::vector<Rational> mu;
  mpz_class n = 1;
  for (const auto& p : tau.parts) {
    mu.push_back(slope(theta, p));
    mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), mu.back().get_den_mpz_t());
  }
  const size_t nv = tau.parts.front().size();
  OnePS s;
  s.blocks.resize(nv);
  for (size_t k = 0; k < tau.parts.size(); ++k) {
    Rational w = mu[k] * n;
    for (size_t i = 0; i < nv; ++i)
      if (tau.parts[k][i] > 0) s.blocks[i].push_back({to_long(w), tau.parts[k][i]});
  }
  return s;
}

OnePS scaled(const OnePS& s, long k) {
  OnePS r = s;
  for (auto& v : r.blocks)
    for (auto& b : v) b.weight *= k;
  return r;
}

namespace {

// sum of (w_t - w_s) * m_s * m_t over block pairs with negative difference
long neg_part(const std::vector<Block>& src, const std::vector<Block>& dst) {
  long s = 0;
  for (const auto& a : src)
    for (const auto& b : dst)
      if (b.weight - a.weight < 0) s += (b.weight - a.weight) * a.mult * b.mult;
  return s;
}

long neg_count(const std::vector<Block>& src, const std::vector<Block>& dst) {
  long s = 0;
  for (const auto& a : src)
    for (const auto& b : dst)
      if (b.weight - a.weight < 0) s += static_cast<long>(a.mult) * b.mult;
  return s;
}

}  // namespace

long eta(const Quiver& q, const OnePS& s) {
  long neg_r = 0, neg_g = 0;
  for (auto [i, j] : q.arrows) neg_r += neg_part(s.blocks.at(i), s.blocks.at(j));
  for (const auto& v : s.blocks) neg_g += neg_part(v, v);
  return neg_g - neg_r;
}

long negative_rep_directions(const Quiver& q, const OnePS& s) {
  long n = 0;
  for (auto [i, j] : q.arrows) n += neg_count(s.blocks.at(i), s.blocks.at(j));
  return n;
}

long negative_lie_directions(const OnePS& s) {
  long n = 0;
  for (const auto& v : s.blocks) n += neg_count(v, v);
  return n;
}

long trace(const std::vector<Block>& v) {
  long t = 0;
  for (const auto& b : v) t += b.weight * b.mult;
  return t;
}

long twist_shift(const OnePS& s, const std::vector<int>& a) {
  if (a.size() != s.blocks.size()) throw std::invalid_argument("twist length mismatch");
  long sh = 0;
  for (size_t j = 0; j < a.size(); ++j) sh += a[j] * trace(s.blocks[j]);
  return sh;
}

std::vector<std::vector<long>> universal_weights(const OnePS& s, const std::vector<int>& a) {
  long sh = twist_shift(s, a);
  std::vector<std::vector<long>> out;
  for (const auto& v : s.blocks) {
    std::vector<long> w;
    for (const auto& b : v) w.insert(w.end(), b.mult, b.weight + sh);
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

WeightBase base_from(const std::vector<std::vector<long>>& w) {
  if (w.size() != 2) throw std::invalid_argument("bundle weights need a two-vertex quiver");
  return WeightBase{w[0], w[1]};
}

}  // namespace

std::vector<StratumData> unstable_strata(const TelemanContext& ctx) {
  std::vector<StratumData> out;
  for (auto& tau : enumerate_hn_types(ctx.quiver, ctx.d, ctx.theta)) {
    if (tau.parts.size() < 2) continue;
    OnePS s = one_ps_from_hn(tau, ctx.theta);
    long e = eta(ctx.quiver, s);
    long sh = twist_shift(s, ctx.twist);
    auto w = universal_weights(s, ctx.twist);
    out.push_back({std::move(tau), std::move(s), e, sh, std::move(w)});
  }
  return out;
}

std::vector<long> central_weights(const BundleExpr& e, const TelemanContext& ctx) {
  OnePS ones;
  for (int di : ctx.d) ones.blocks.push_back(di > 0 ? std::vector<Block>{{1, di}} : std::vector<Block>{});
  return weights_of(e, base_from(universal_weights(ones, ctx.twist)));
}

std::optional<TelemanRecord> TelemanReport::blocking() const {
  for (const auto& r : records)
    if (!r.pass) return r;
  return std::nullopt;
}

const TelemanRecord* TelemanReport::record_for(const HNType& tau) const {
  for (const auto& r : records)
    if (r.hn_type == tau) return &r;
  return nullptr;
}

TelemanReport teleman_certify(const BundleExpr& e, const std::vector<StratumData>& strata) {
  TelemanReport rep;
  for (const auto& st : strata) {
    auto w = weights_of(e, base_from(st.weights));
    long mx = w.empty() ? 0 : w.back();
    TelemanRecord r{st.hn_type, st.eta, mx, st.eta - mx, st.eta - mx >= 1};
    rep.pass = rep.pass && r.pass;
    rep.records.push_back(std::move(r));
  }
  return rep;
}

TelemanReport teleman_certify(const BundleExpr& e, const TelemanContext& ctx) {
  auto c = central_weights(e, ctx);
  if (std::any_of(c.begin(), c.end(), [](long x) { return x != 0; }))
    throw DescentViolation("descent violation: " + e.str() + " has nonzero central weight");
  return teleman_certify(e, unstable_strata(ctx));
}

}  // namespace kqm
