#include "qreider/criteria.hpp"

#include "qreider/errors.hpp"

#include <algorithm>

namespace qreider {

const char* to_string(Status s) { return s == Status::established ? "established" : "not-established"; }

const char* to_string(Relation r) {
  switch (r) {
    case Relation::gt: return ">";
    case Relation::ge: return ">=";
    case Relation::eq: return "=";
    case Relation::le: return "<=";
    case Relation::lt: return "<";
  }
  return "?";
}

const char* to_string(WitnessRole r) {
  switch (r) {
    case WitnessRole::global: return "global";
    case WitnessRole::at_p: return "at-p";
    case WitnessRole::at_q: return "at-q";
    case WitnessRole::at_V: return "at-V";
  }
  return "?";
}

const char* to_string(CurveAdjoint c) {
  switch (c) {
    case CurveAdjoint::none: return "none";
    case CurveAdjoint::base_point_free: return "base-point-free";
    case CurveAdjoint::very_ample: return "very-ample";
  }
  return "?";
}

BetaWitness BetaWitness::global(Rational b2, Rational b1) { return at(WitnessRole::global, std::move(b2), std::move(b1)); }

BetaWitness BetaWitness::at(WitnessRole role, Rational b2, Rational b1) {
  return BetaWitness{{{role, std::move(b2)}}, {{role, std::move(b1)}}};
}

BetaWitness BetaWitness::pair(Rational b2p, Rational b1p, Rational b2q, Rational b1q) {
  return BetaWitness{{{WitnessRole::at_p, std::move(b2p)}, {WitnessRole::at_q, std::move(b2q)}},
                     {{WitnessRole::at_p, std::move(b1p)}, {WitnessRole::at_q, std::move(b1q)}}};
}

BetaWitness BetaWitness::tangent(Rational b2p, Rational b2V, Rational b1) {
  return BetaWitness{{{WitnessRole::at_p, std::move(b2p)}, {WitnessRole::at_V, std::move(b2V)}},
                     {{WitnessRole::at_p, std::move(b1)}}};
}

namespace {

std::optional<Rational> find_role(const std::vector<BetaValue>& values, WitnessRole role) {
  for (const auto& v : values)
    if (v.role == role) return v.value;
  // a lone untagged value serves any single-point check
  if (values.size() == 1 && values.front().role == WitnessRole::global) return values.front().value;
  return std::nullopt;
}

}  // namespace

std::optional<Rational> BetaWitness::find_beta2(WitnessRole role) const { return find_role(beta2, role); }
std::optional<Rational> BetaWitness::find_beta1(WitnessRole role) const { return find_role(beta1, role); }

std::vector<Rational> BetaWitness::flat() const {
  std::vector<Rational> out;
  if (beta2.size() == 2 && beta1.size() == 1) {
    out = {beta2[0].value, beta2[1].value, beta1[0].value};
    return out;
  }
  for (std::size_t i = 0; i < std::max(beta2.size(), beta1.size()); ++i) {
    if (i < beta2.size()) out.push_back(beta2[i].value);
    if (i < beta1.size()) out.push_back(beta1[i].value);
  }
  return out;
}

namespace {

TraceEntry entry(std::string text, Rational lhs, Relation rel, Rational rhs) {
  bool holds = false;
  switch (rel) {
    case Relation::gt: holds = lhs > rhs; break;
    case Relation::ge: holds = lhs >= rhs; break;
    case Relation::eq: holds = lhs == rhs; break;
    case Relation::le: holds = lhs <= rhs; break;
    case Relation::lt: holds = lhs < rhs; break;
  }
  return TraceEntry{std::move(text), std::move(lhs), rel, std::move(rhs), holds};
}

CriterionVerdict finish(CriterionVerdict v) {
  const bool ok = !v.trace.empty() &&
                  std::all_of(v.trace.begin(), v.trace.end(), [](const TraceEntry& e) { return e.holds; });
  v.status = ok ? Status::established : Status::not_established;
  return v;
}

CriterionVerdict outright(const char* rule, TraceEntry e) {
  CriterionVerdict v;
  v.rule = rule;
  v.trace.push_back(std::move(e));
  return finish(std::move(v));
}

std::string depth_note(const SearchOptions& options) {
  return "no witness found up to dyadic depth " + std::to_string(options.depth) +
         "; trace shows the finest candidate";
}

Rational require_beta(const std::optional<Rational>& value, const char* what) {
  if (!value) throw DomainError(std::string("witness lacks ") + what);
  return *value;
}

// Appends the single-point beta conditions; suffix distinguishes p and q.
void point_conditions(std::vector<TraceEntry>& trace, const std::string& suffix, const Rational& mu,
                      const Rational& b2, const Rational& b1) {
  const Rational floor2 = 2 - mu;
  trace.push_back(entry("beta2" + suffix + " >= 2 - mu" + suffix, b2, Relation::ge, floor2));
  if (b2 >= floor2)
    trace.push_back(entry("beta1" + suffix + " >= min-formula(mu" + suffix + ", beta2" + suffix + ")", b1,
                          Relation::ge, min_formula(mu, b2)));
  else
    trace.push_back(entry("beta1" + suffix + " > 0", b1, Relation::gt, Rational(0)));
}

void require_non_negative(const Rational& mu, const char* what) {
  if (mu < 0) throw DomainError(std::string(what) + " must be >= 0");
}

CriterionVerdict verify_freeness(const Rational& mu, const Rational& m2, const Rational& mindeg_p,
                                 const Rational& b2, const Rational& b1, WitnessRole role) {
  CriterionVerdict v;
  v.rule = rules::free_beta;
  const std::string suffix = role == WitnessRole::at_q ? "_q" : "";
  point_conditions(v.trace, suffix, mu, b2, b1);
  v.trace.push_back(entry("M^2 > beta2" + suffix + "^2", m2, Relation::gt, b2 * b2));
  v.trace.push_back(entry(std::string("mindeg") + (role == WitnessRole::at_q ? "_q" : "_p") + " >= beta1" + suffix,
                          mindeg_p, Relation::ge, b1));
  v.witness = BetaWitness::at(role, b2, b1);
  return finish(std::move(v));
}

CriterionVerdict freeness_low(const Rational& mu, const Rational& m2, const Rational& mindeg_p,
                              const std::optional<BetaWitness>& witness, const SearchOptions& options,
                              WitnessRole role) {
  if (witness) {
    return verify_freeness(mu, m2, mindeg_p, require_beta(witness->find_beta2(role), "beta2"),
                           require_beta(witness->find_beta1(role), "beta1"), role);
  }
  const Rational lo = 2 - mu;
  if (auto found = freeness_witness(mu, m2, mindeg_p, options)) {
    return verify_freeness(mu, m2, mindeg_p, *found->find_beta2(WitnessRole::at_p),
                           *found->find_beta1(WitnessRole::at_p), role);
  }
  if (m2 <= lo * lo) {
    CriterionVerdict v;
    v.rule = rules::free_beta;
    v.trace.push_back(entry("M^2 > (2-mu)^2", m2, Relation::gt, lo * lo));
    return finish(std::move(v));
  }
  const Rational b2 = *largest_dyadic_below_sqrt(lo, m2, options.depth);
  auto v = verify_freeness(mu, m2, mindeg_p, b2, min_formula(mu, b2), role);
  v.witness.reset();
  v.notes.push_back(depth_note(options));
  return v;
}

}  // namespace

CurveAdjoint curve_adjoint_check(const Rational& degree) {
  if (degree >= 3) return CurveAdjoint::very_ample;
  if (degree >= 2) return CurveAdjoint::base_point_free;
  return CurveAdjoint::none;
}

CriterionVerdict jet_separation(const Rational& mu, unsigned s) {
  require_non_negative(mu, "mu");
  return outright(rules::jet, entry("mu >= s + 2", mu, Relation::ge, Rational(s + 2)));
}

Rational min_formula(const Rational& mu, const Rational& beta2) {
  if (mu < 0 || mu >= 2) throw DomainError("min-formula needs 0 <= mu < 2");
  if (beta2 < 2 - mu) throw DomainError("min-formula needs beta2 >= 2 - mu");
  if (mu >= 1) return 2 - mu;
  const Rational den = beta2 - (1 - mu);
  if (den <= 0) throw DomainError("min-formula denominator vanishes");
  return beta2 / den;
}

std::optional<BetaWitness> freeness_witness(const Rational& mu, const Rational& m2, const Rational& mindeg_p,
                                            const SearchOptions& options) {
  if (mu < 0 || mu >= 2) throw DomainError("freeness witness needs 0 <= mu < 2");
  // min-formula is non-increasing in beta2, so the largest admissible beta2 is best
  const auto b2 = sweep_below_sqrt(2 - mu, m2, options.depth,
                                   [&](const Rational& x) { return mindeg_p >= min_formula(mu, x); });
  if (!b2) return std::nullopt;
  return BetaWitness::at(WitnessRole::at_p, *b2, min_formula(mu, *b2));
}

CriterionVerdict freeness_at(const Rational& mu, const Rational& m2, const Rational& mindeg_p,
                             const std::optional<BetaWitness>& witness, const SearchOptions& options) {
  require_non_negative(mu, "mu");
  if (mu >= 2) return outright(rules::free_high, entry("mu >= 2", mu, Relation::ge, Rational(2)));
  return freeness_low(mu, m2, mindeg_p, witness, options, WitnessRole::at_p);
}

namespace {

CriterionVerdict verify_separation(const Rational& mu_p, const Rational& mu_q, const Rational& m2,
                                   const Rational& mindeg_p, const Rational& mindeg_q, const Rational& mindeg_pq,
                                   const Rational& b2p, const Rational& b1p, const Rational& b2q,
                                   const Rational& b1q) {
  CriterionVerdict v;
  v.rule = rules::sep_beta;
  point_conditions(v.trace, "_p", mu_p, b2p, b1p);
  point_conditions(v.trace, "_q", mu_q, b2q, b1q);
  v.trace.push_back(entry("M^2 > beta2_p^2 + beta2_q^2", m2, Relation::gt, b2p * b2p + b2q * b2q));
  v.trace.push_back(entry("mindeg_p >= beta1_p", mindeg_p, Relation::ge, b1p));
  v.trace.push_back(entry("mindeg_q >= beta1_q", mindeg_q, Relation::ge, b1q));
  v.trace.push_back(entry("mindeg_pq >= beta1_p + beta1_q", mindeg_pq, Relation::ge, b1p + b1q));
  v.witness = BetaWitness::pair(b2p, b1p, b2q, b1q);
  return finish(std::move(v));
}

}  // namespace

std::optional<BetaWitness> separation_witness(const Rational& mu_p, const Rational& mu_q, const Rational& m2,
                                              const Rational& mindeg_p, const Rational& mindeg_q,
                                              const Rational& mindeg_pq, const SearchOptions& options) {
  if (mu_p < 0 || mu_p >= 2 || mu_q < 0 || mu_q >= 2)
    throw DomainError("separation witness needs both multiplicities in [0, 2)");
  const auto hit = sweep_disc(2 - mu_p, 2 - mu_q, m2, options, [&](const Rational& x, const Rational& y) {
    const Rational b1p = min_formula(mu_p, x);
    const Rational b1q = min_formula(mu_q, y);
    return mindeg_p >= b1p && mindeg_q >= b1q && mindeg_pq >= b1p + b1q;
  });
  if (!hit) return std::nullopt;
  return BetaWitness::pair(hit->x, min_formula(mu_p, hit->x), hit->y, min_formula(mu_q, hit->y));
}

CriterionVerdict separation(const Rational& mu_p, const Rational& mu_q, const Rational& m2,
                            const Rational& mindeg_p, const Rational& mindeg_q, const Rational& mindeg_pq,
                            const std::optional<BetaWitness>& witness, const SearchOptions& options) {
  require_non_negative(mu_p, "mu_p");
  require_non_negative(mu_q, "mu_q");
  if (mu_p >= 2 && mu_q >= 2) {
    CriterionVerdict v;
    v.rule = rules::sep_both_high;
    v.trace.push_back(entry("mu_p >= 2", mu_p, Relation::ge, Rational(2)));
    v.trace.push_back(entry("mu_q >= 2", mu_q, Relation::ge, Rational(2)));
    return finish(std::move(v));
  }
  if (mu_p >= 2 || mu_q >= 2) {
    const bool low_is_p = mu_p < 2;
    const Rational& mu = low_is_p ? mu_p : mu_q;
    const Rational& mindeg = low_is_p ? mindeg_p : mindeg_q;
    const WitnessRole role = low_is_p ? WitnessRole::at_p : WitnessRole::at_q;
    CriterionVerdict v;
    v.trace.push_back(low_is_p ? entry("mu_q >= 2", mu_q, Relation::ge, Rational(2))
                               : entry("mu_p >= 2", mu_p, Relation::ge, Rational(2)));
    auto low = freeness_low(mu, m2, mindeg, witness, options, role);
    v.trace.insert(v.trace.end(), low.trace.begin(), low.trace.end());
    v.witness = std::move(low.witness);
    v.notes = std::move(low.notes);
    v.rule = rules::sep_one_high;
    return finish(std::move(v));
  }

  if (witness) {
    return verify_separation(mu_p, mu_q, m2, mindeg_p, mindeg_q, mindeg_pq,
                             require_beta(witness->find_beta2(WitnessRole::at_p), "beta2 at p"),
                             require_beta(witness->find_beta1(WitnessRole::at_p), "beta1 at p"),
                             require_beta(witness->find_beta2(WitnessRole::at_q), "beta2 at q"),
                             require_beta(witness->find_beta1(WitnessRole::at_q), "beta1 at q"));
  }
  if (auto found = separation_witness(mu_p, mu_q, m2, mindeg_p, mindeg_q, mindeg_pq, options)) {
    const auto flat = found->flat();
    return verify_separation(mu_p, mu_q, m2, mindeg_p, mindeg_q, mindeg_pq, flat[0], flat[1], flat[2], flat[3]);
  }
  const Rational lo_p = 2 - mu_p;
  const Rational lo_q = 2 - mu_q;
  if (m2 <= lo_p * lo_p + lo_q * lo_q) {
    CriterionVerdict v;
    v.rule = rules::sep_beta;
    v.trace.push_back(entry("M^2 > (2-mu_p)^2 + (2-mu_q)^2", m2, Relation::gt, lo_p * lo_p + lo_q * lo_q));
    return finish(std::move(v));
  }
  const Rational b2q = *largest_dyadic_below_sqrt(lo_q, m2 - lo_p * lo_p, options.depth);
  auto v = verify_separation(mu_p, mu_q, m2, mindeg_p, mindeg_q, mindeg_pq, lo_p, min_formula(mu_p, lo_p), b2q,
                             min_formula(mu_q, b2q));
  v.witness.reset();
  v.notes.push_back(depth_note(options));
  return v;
}

Rational tangent_beta1_bound(const Rational& mu_v, const Rational& beta2_p, const Rational& beta2_V) {
  const Rational half = (4 - mu_v) / 2;
  if (mu_v >= 2) return half;
  const Rational s = beta2_p + beta2_V;
  const Rational den = s - (2 - mu_v);
  if (den <= 0) return half;
  return std::min(half, s / den);
}

namespace {

void check_tangent_orders(const Rational& mu_p, const Rational& mu_V) {
  require_non_negative(mu_p, "mu_p");
  require_non_negative(mu_V, "mu_V");
  if (mu_V > mu_p) throw DomainError("order at the infinitely near point exceeds mu_p");
}

CriterionVerdict verify_tangent(const Rational& mu_p, const Rational& mu_V, const Rational& m2,
                                const Rational& mindeg_p, const Rational& mindeg_Z, const Rational& b2p,
                                const Rational& b2V, const Rational& b1) {
  const Rational mu_v = mu_p + mu_V;
  CriterionVerdict v;
  v.rule = rules::tan_beta;
  v.trace.push_back(entry("beta2_p >= 2 - mu_p", b2p, Relation::ge, 2 - mu_p));
  v.trace.push_back(entry("beta2_V >= 2 - mu_V", b2V, Relation::ge, 2 - mu_V));
  v.trace.push_back(entry("beta1 >= tangent bound(mu_v, beta2_p + beta2_V)", b1, Relation::ge,
                          tangent_beta1_bound(mu_v, b2p, b2V)));
  v.trace.push_back(entry("M^2 > beta2_p^2 + beta2_V^2", m2, Relation::gt, b2p * b2p + b2V * b2V));
  v.trace.push_back(entry("mindeg_p >= beta1", mindeg_p, Relation::ge, b1));
  v.trace.push_back(entry("mindeg_Z >= 2*beta1", mindeg_Z, Relation::ge, 2 * b1));
  v.witness = BetaWitness::tangent(b2p, b2V, b1);
  return finish(std::move(v));
}

}  // namespace

std::optional<BetaWitness> tangent_witness(const Rational& mu_p, const Rational& mu_V, const Rational& m2,
                                           const Rational& mindeg_p, const Rational& mindeg_Z,
                                           const SearchOptions& options) {
  check_tangent_orders(mu_p, mu_V);
  if (mu_p >= 2) throw DomainError("tangent witness needs mu_p < 2");
  const Rational mu_v = mu_p + mu_V;
  const auto hit = sweep_disc(2 - mu_p, 2 - mu_V, m2, options, [&](const Rational& x, const Rational& y) {
    const Rational b1 = tangent_beta1_bound(mu_v, x, y);
    return mindeg_p >= b1 && mindeg_Z >= 2 * b1;
  });
  if (!hit) return std::nullopt;
  return BetaWitness::tangent(hit->x, hit->y, tangent_beta1_bound(mu_v, hit->x, hit->y));
}

CriterionVerdict tangent_separation(const Rational& mu_p, const Rational& mu_V, const Rational& m2,
                                    const Rational& mindeg_p, const Rational& mindeg_Z,
                                    const std::optional<BetaWitness>& witness, const SearchOptions& options) {
  check_tangent_orders(mu_p, mu_V);
  const Rational mu_v = mu_p + mu_V;
  if (mu_p >= 3) return outright(rules::tan_high, entry("mu_p >= 3", mu_p, Relation::ge, Rational(3)));
  if (mu_v >= 4) return outright(rules::tan_high, entry("mu_v >= 4", mu_v, Relation::ge, Rational(4)));
  if (mu_p >= 2) {
    const Rational gap = 4 - mu_v;
    CriterionVerdict v;
    v.rule = rules::tan_mid;
    v.trace.push_back(entry("M^2 > (4-mu_v)^2", m2, Relation::gt, gap * gap));
    v.trace.push_back(entry("mindeg_p >= (4-mu_v)/2", mindeg_p, Relation::ge, gap / 2));
    v.trace.push_back(entry("mindeg_Z >= 4-mu_v", mindeg_Z, Relation::ge, gap));
    return finish(std::move(v));
  }

  if (witness) {
    return verify_tangent(mu_p, mu_V, m2, mindeg_p, mindeg_Z,
                          require_beta(witness->find_beta2(WitnessRole::at_p), "beta2 at p"),
                          require_beta(witness->find_beta2(WitnessRole::at_V), "beta2 at V"),
                          require_beta(witness->find_beta1(WitnessRole::at_p), "beta1"));
  }
  if (auto found = tangent_witness(mu_p, mu_V, m2, mindeg_p, mindeg_Z, options)) {
    const auto flat = found->flat();
    return verify_tangent(mu_p, mu_V, m2, mindeg_p, mindeg_Z, flat[0], flat[1], flat[2]);
  }
  const Rational lo_p = 2 - mu_p;
  const Rational lo_V = 2 - mu_V;
  if (m2 <= lo_p * lo_p + lo_V * lo_V) {
    CriterionVerdict v;
    v.rule = rules::tan_beta;
    v.trace.push_back(entry("M^2 > (2-mu_p)^2 + (2-mu_V)^2", m2, Relation::gt, lo_p * lo_p + lo_V * lo_V));
    return finish(std::move(v));
  }
  const Rational b2V = *largest_dyadic_below_sqrt(lo_V, m2 - lo_p * lo_p, options.depth);
  auto v = verify_tangent(mu_p, mu_V, m2, mindeg_p, mindeg_Z, lo_p, b2V, tangent_beta1_bound(mu_v, lo_p, b2V));
  v.witness.reset();
  v.notes.push_back(depth_note(options));
  return v;
}

namespace {

CriterionVerdict verify_very_ample(const Rational& m2, const Rational& mindeg, const Rational& b2,
                                   const Rational& b1) {
  CriterionVerdict v;
  v.rule = rules::va_global;
  v.trace.push_back(entry("beta2 >= 2", b2, Relation::ge, Rational(2)));
  if (b2 > 1)
    v.trace.push_back(entry("beta1 >= beta2/(beta2-1)", b1, Relation::ge, b2 / (b2 - 1)));
  v.trace.push_back(entry("M^2 > 2*beta2^2", m2, Relation::gt, 2 * b2 * b2));
  v.trace.push_back(entry("mindeg >= 2*beta1", mindeg, Relation::ge, 2 * b1));
  v.witness = BetaWitness::global(b2, b1);
  return finish(std::move(v));
}

}  // namespace

std::optional<BetaWitness> very_ampleness_witness(const Rational& m2, const Rational& mindeg_all,
                                                  const SearchOptions& options) {
  const auto b2 = sweep_below_sqrt(Rational(2), m2 / 2, options.depth,
                                   [&](const Rational& x) { return mindeg_all >= 2 * x / (x - 1); });
  if (!b2) return std::nullopt;
  return BetaWitness::global(*b2, *b2 / (*b2 - 1));
}

CriterionVerdict very_ampleness(const Rational& m2, const Rational& mindeg_all,
                                const std::optional<BetaWitness>& witness, const SearchOptions& options) {
  if (witness) {
    return verify_very_ample(m2, mindeg_all, require_beta(witness->find_beta2(WitnessRole::global), "beta2"),
                             require_beta(witness->find_beta1(WitnessRole::global), "beta1"));
  }
  if (auto found = very_ampleness_witness(m2, mindeg_all, options))
    return verify_very_ample(m2, mindeg_all, found->beta2[0].value, found->beta1[0].value);
  if (m2 <= 8) return outright(rules::va_global, entry("M^2 > 2*2^2", m2, Relation::gt, Rational(8)));
  const Rational b2 = *largest_dyadic_below_sqrt(Rational(2), m2 / 2, options.depth);
  auto v = verify_very_ample(m2, mindeg_all, b2, b2 / (b2 - 1));
  v.witness.reset();
  v.notes.push_back(depth_note(options));
  return v;
}

bool exceeds_two_plus_sqrt2(const Rational& q) {
  const Rational t = q - 2;
  return t > 0 && t * t > 2;
}

bool exceeds_two_plus_sqrt2_squared(const Rational& q) {
  const Rational t = q - 6;
  return t > 0 && t * t > 32;
}

CriterionVerdict very_ampleness_sqrt2(const Rational& m2, const Rational& mindeg_all) {
  CriterionVerdict v;
  v.rule = rules::va_sqrt2;
  v.trace.push_back(entry("M^2 > 6", m2, Relation::gt, Rational(6)));
  if (m2 > 6) v.trace.push_back(entry("(M^2 - 6)^2 > 32", (m2 - 6) * (m2 - 6), Relation::gt, Rational(32)));
  v.trace.push_back(entry("mindeg > 2", mindeg_all, Relation::gt, Rational(2)));
  if (mindeg_all > 2)
    v.trace.push_back(entry("(mindeg - 2)^2 > 2", (mindeg_all - 2) * (mindeg_all - 2), Relation::gt, Rational(2)));
  v = finish(std::move(v));
  if (!v.established()) return v;

  // Convergents of 1 + sqrt2 from below: 2, 12/5, 70/29, ...; 2 b^2 stays
  // under 6 + 4 sqrt2 < M^2 while 2b/(b-1) decreases to 2 + sqrt2 < mindeg.
  Integer h0 = 2, k0 = 1, h1 = 12, k1 = 5;
  for (;;) {
    const Rational b2(h0, k0);
    const Rational b1 = b2 / (b2 - 1);
    if (2 * b2 * b2 < m2 && mindeg_all >= 2 * b1) {
      v.witness = BetaWitness::global(b2, b1);
      break;
    }
    const Integer h2 = 6 * h1 - h0;
    const Integer k2 = 6 * k1 - k0;
    h0 = h1;
    k0 = k1;
    h1 = h2;
    k1 = k2;
  }
  return v;
}

void LocalConfig::validate() const {
  for (const auto& c : curves) {
    if (c.b < 0 || c.b >= 1) throw InvariantError("boundary coefficient of '" + c.name + "' must lie in [0, 1)");
    if (c.d < 0) throw InvariantError("coefficient of '" + c.name + "' in D must be >= 0");
    if (c.mult_p < 1) throw InvariantError("'" + c.name + "' must pass through the point");
    if (c.mult_V < 0 || c.mult_V > c.mult_p)
      throw InvariantError("order of '" + c.name + "' at V must lie in [0, mult_p]");
  }
}

Rational LocalConfig::mu() const {
  Rational s = 0;
  for (const auto& c : curves) s += c.b * c.mult_p;
  return s;
}

Rational LocalConfig::m_p() const {
  Rational s = 0;
  for (const auto& c : curves) s += c.d * c.mult_p;
  return s;
}

Rational LocalConfig::mu_V() const {
  Rational s = 0;
  for (const auto& c : curves) s += c.b * c.mult_V;
  return s;
}

LocalConfig make_local_config(const QDivisor& boundary, const QDivisor& d, const std::string& point,
                              const std::string& tangent) {
  if (boundary.surface().get() != d.surface().get())
    throw LatticeMismatchError("B and D live on different surfaces");
  const auto& surface = *boundary.surface();
  const PointSpec& spec = surface.point(point);
  const TangentSpec* tan = nullptr;
  if (!tangent.empty()) {
    tan = &surface.tangent(tangent);
    if (tan->at != point) throw DomainError("tangent '" + tangent + "' is not based at '" + point + "'");
  }
  LocalConfig config;
  for (const auto& curve : surface.curves()) {
    const int mult = spec.mult(curve.name);
    if (mult < 1) continue;
    LocalCurve lc{curve.name, boundary.coefficient(curve.name), d.coefficient(curve.name), mult, 0, false};
    if (tan) {
      lc.mult_V = tan->mult_V(curve.name);
      lc.contains_Z = tan->contains(curve.name);
    }
    config.curves.push_back(std::move(lc));
  }
  config.validate();
  return config;
}

PlcResult plc_threshold(const LocalConfig& config, const PlcOptions& options) {
  config.validate();
  PlcResult out;
  const auto& curves = config.curves;

  struct Term {
    Rational value;
    std::optional<std::size_t> curve;
    std::string label;
  };
  std::vector<Term> terms;

  auto over_one = [&](const LocalCurve& c) { return c.d > 0 && c.b + c.d > 1; };
  const bool any_over = std::any_of(curves.begin(), curves.end(), over_one);

  if (options.mode == PlcMode::basic) {
    if (config.m_p() != 2 - config.mu())
      out.warnings.push_back("ord_p(D) = " + to_string(config.m_p()) + " differs from 2 - mu = " +
                             to_string(2 - config.mu()));
  }
  if (options.mode != PlcMode::prime && !any_over) {
    out.plc = true;
    return out;
  }

  if (options.mode == PlcMode::prime) {
    if (options.c0 >= curves.size()) throw DomainError("critical curve index out of range");
    terms.push_back({Rational(1), std::nullopt, "1"});
  }
  if (options.mode != PlcMode::basic && config.m_p() > 0)
    terms.push_back({(3 - config.mu()) / config.m_p(), std::nullopt, "(3-mu_p)/m_p"});
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    if (c.d == 0) continue;
    if (options.mode == PlcMode::prime && i == options.c0) {
      terms.push_back({(2 - c.b) / c.d, i, "(2-b)/d:" + c.name});
      continue;
    }
    const bool enters = options.mode == PlcMode::prime && options.inclusive ? c.b + c.d >= 1 : c.b + c.d > 1;
    if (enters) terms.push_back({(1 - c.b) / c.d, i, "(1-b)/d:" + c.name});
  }

  out.c = terms.front().value;
  for (const auto& t : terms) out.c = std::min(out.c, t.value);
  for (const auto& t : terms) {
    if (t.value != out.c) continue;
    out.critical_terms.push_back(t.label);
    if (t.curve) out.critical.push_back(*t.curve);
  }
  return out;
}

Rational riemann_roch_chi(const DivisorClass& h, const DivisorClass& canonical, const Rational& chi_o) {
  return intersect(h, h - canonical) / 2 + chi_o;
}

}  // namespace qreider
