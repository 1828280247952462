#include "qreider/decomposition_search.hpp"

#include "qreider/errors.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

namespace qreider {

const char* to_string(GoalKind k) {
  switch (k) {
    case GoalKind::freeness: return "freeness";
    case GoalKind::separation: return "separation";
    case GoalKind::tangent: return "tangent";
    case GoalKind::very_ampleness: return "very-ampleness";
    case GoalKind::very_ampleness_sqrt2: return "very-ampleness-sqrt2";
  }
  return "?";
}

DivisorForm ParamFamily::target() const {
  const DivisorForm total = add(boundary, positive);
  for (const auto& [curve, coeff] : total) {
    if (!coeff.is_constant()) throw DomainError("B + M depends on the parameters at '" + curve + "'");
    if (!is_integer(coeff.constant)) throw DomainError("B + M is not integral at '" + curve + "'");
  }
  return total;
}

BetaWitness witness_from_tuple(GoalKind kind, const std::vector<Rational>& v) {
  auto expect = [&](std::size_t n) {
    if (v.size() != n)
      throw DomainError(std::string(to_string(kind)) + " witness needs " + std::to_string(n) + " values, got " +
                        std::to_string(v.size()));
  };
  switch (kind) {
    case GoalKind::freeness:
      expect(2);
      return BetaWitness::at(WitnessRole::at_p, v[0], v[1]);
    case GoalKind::separation:
      if (v.size() == 2) return BetaWitness::pair(v[0], v[1], v[0], v[1]);
      expect(4);
      return BetaWitness::pair(v[0], v[1], v[2], v[3]);
    case GoalKind::tangent:
      expect(3);
      return BetaWitness::tangent(v[0], v[1], v[2]);
    case GoalKind::very_ampleness:
      expect(2);
      return BetaWitness::global(v[0], v[1]);
    case GoalKind::very_ampleness_sqrt2:
      break;
  }
  throw DomainError("this goal takes no witness");
}

namespace {

TraceEntry holds_entry(std::string text, Rational lhs, Relation rel, Rational rhs) {
  const bool ok = rel == Relation::ge ? lhs >= rhs : lhs > rhs;
  return TraceEntry{std::move(text), std::move(lhs), rel, std::move(rhs), ok};
}

QDivisor instantiate(const SurfacePtr& surface, const DivisorForm& form, const ParamValues& values) {
  std::map<std::string, Rational> coeffs;
  for (const auto& [curve, coeff] : form) coeffs.emplace(curve, coeff.evaluate(values));
  return QDivisor(surface, std::move(coeffs));
}

}  // namespace

GoalEvaluation evaluate_goal(const QDivisor& boundary, const QDivisor& positive, const ConeDescription& cone,
                             const Goal& goal, const std::optional<BetaWitness>& witness,
                             const SearchOptions& options) {
  GoalEvaluation out;
  const DivisorClass m = class_of(positive);
  const Rational m2 = self_intersection(m);

  std::vector<TraceEntry> prefix;
  if (cone.is_hirzebruch()) {
    const auto& fam = cone.hirzebruch_family();
    prefix.push_back(holds_entry("M." + to_string(fam.section) + " >= 0", intersect(m, fam.section), Relation::ge, 0));
    prefix.push_back(holds_entry("M." + to_string(fam.fiber) + " >= 0", intersect(m, fam.fiber), Relation::ge, 0));
  } else {
    for (const auto& g : std::get<FiniteGenerators>(cone.variant()).generators)
      prefix.push_back(holds_entry("M." + g.name + " >= 0", intersect(m, g.cls), Relation::ge, 0));
  }
  prefix.push_back(holds_entry("M^2 > 0", m2, Relation::gt, 0));

  out.values.push_back({"M^2", m2});
  for (const auto& [name, cls] : test_classes(cone, CurveFilter::everything()))
    out.values.push_back({"M." + (name.find(' ') == std::string::npos ? name : "(" + name + ")"), intersect(m, cls)});

  const bool nef_and_big = std::all_of(prefix.begin(), prefix.end(), [](const TraceEntry& e) { return e.holds; });
  if (!nef_and_big) {
    out.verdict.rule = "nef-and-big";
    out.verdict.trace = std::move(prefix);
    out.verdict.notes.push_back("M is not certified nef and big; no criterion applies");
    return out;
  }

  std::vector<std::string> considered;
  auto mindeg = [&](const CurveFilter& f, const std::string& label) {
    const auto bound = min_degree(m, cone, f);
    out.values.push_back({label, bound.value});
    std::string names;
    for (const auto& c : bound.considered) names += (names.empty() ? "" : ", ") + c;
    considered.push_back(label + " over {" + names + "}");
    return bound.value;
  };
  auto record = [&](const std::string& label, const Rational& v) { out.values.push_back({label, v}); };

  switch (goal.kind) {
    case GoalKind::freeness: {
      if (goal.points.size() != 1) throw DomainError("freeness needs exactly one point");
      const Rational mu = ord_at(boundary, goal.points[0]);
      record("mu_p", mu);
      const Rational d = mindeg(CurveFilter::through_points({goal.points[0]}), "mindeg_p");
      out.verdict = freeness_at(mu, m2, d, witness, options);
      break;
    }
    case GoalKind::separation: {
      if (goal.points.size() != 2) throw DomainError("separation needs exactly two points");
      const Rational mu_p = ord_at(boundary, goal.points[0]);
      const Rational mu_q = ord_at(boundary, goal.points[1]);
      record("mu_p", mu_p);
      record("mu_q", mu_q);
      const Rational dp = mindeg(CurveFilter::through_points({goal.points[0]}), "mindeg_p");
      const Rational dq = mindeg(CurveFilter::through_points({goal.points[1]}), "mindeg_q");
      const Rational dpq = mindeg(CurveFilter::through_points(goal.points), "mindeg_pq");
      out.verdict = separation(mu_p, mu_q, m2, dp, dq, dpq, witness, options);
      break;
    }
    case GoalKind::tangent: {
      const auto& spec = boundary.surface()->tangent(goal.tangent);
      const auto orders = ord_tangential(boundary, goal.tangent);
      record("mu_p", orders.at_point);
      record("mu_V", orders.at_infinitely_near);
      record("mu_v", orders.along_direction);
      const Rational dp = mindeg(CurveFilter::through_points({spec.at}), "mindeg_p");
      const Rational dz = mindeg(CurveFilter::containing(goal.tangent), "mindeg_Z");
      out.verdict = tangent_separation(orders.at_point, orders.at_infinitely_near, m2, dp, dz, witness, options);
      break;
    }
    case GoalKind::very_ampleness: {
      const Rational d = mindeg(CurveFilter::everything(), "mindeg");
      out.verdict = very_ampleness(m2, d, witness, options);
      break;
    }
    case GoalKind::very_ampleness_sqrt2: {
      const Rational d = mindeg(CurveFilter::everything(), "mindeg");
      out.verdict = very_ampleness_sqrt2(m2, d);
      break;
    }
  }

  out.verdict.trace.insert(out.verdict.trace.begin(), prefix.begin(), prefix.end());
  out.verdict.notes.insert(out.verdict.notes.end(), considered.begin(), considered.end());
  return out;
}

CandidateResult evaluate_candidate(const ParamFamily& family, const ConeDescription& cone, const Goal& goal,
                                   const ParamValues& params, const SearchOptions& options) {
  CandidateResult out;
  out.params = params;
  for (const auto& d : family.params) {
    const auto it = params.find(d.name);
    if (it == params.end()) throw UnknownNameError("no value for parameter '" + d.name + "'");
    if (!d.contains(it->second)) {
      out.skipped = d.name + " = " + to_string(it->second) + " lies outside (" + to_string(d.lo) + ", " +
                    to_string(d.hi) + ")";
      return out;
    }
  }
  const QDivisor b = instantiate(family.surface, family.boundary, params);
  const QDivisor m = instantiate(family.surface, family.positive, params);
  if (!is_boundary(b)) {
    out.skipped = "B = " + to_string(b) + " has a coefficient outside [0, 1)";
    return out;
  }
  const QDivisor l = instantiate(family.surface, family.target(), params);
  if (!(round_up(m) == l)) {
    out.skipped = "round-up of M = " + to_string(m) + " differs from L = " + to_string(l);
    return out;
  }
  std::optional<BetaWitness> witness;
  try {
    if (goal.witness) {
      std::vector<Rational> values;
      for (const auto& e : *goal.witness) values.push_back(e.evaluate(params));
      witness = witness_from_tuple(goal.kind, values);
    }
    out.evaluation = evaluate_goal(b, m, cone, goal, witness, options);
  } catch (const DomainError& e) {
    out.skipped = e.what();
  }
  return out;
}

namespace {

constexpr std::size_t kBlock = 32;

// Exponent tuple of the i-th candidate in lexicographic order.
std::vector<unsigned> exponents_at(std::size_t index, std::size_t n, const Schedule& s) {
  std::vector<unsigned> k(n);
  for (std::size_t pos = n; pos-- > 0;) {
    const unsigned base = pos == 0 ? s.depth - s.first_exponent + 1 : s.depth;
    const unsigned start = pos == 0 ? s.first_exponent : 1;
    k[pos] = start + static_cast<unsigned>(index % base);
    index /= base;
  }
  return k;
}

ParamValues values_for(const std::vector<ParamDomain>& params, const std::vector<unsigned>& k) {
  ParamValues out;
  unsigned total = 0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    total += k[i];
    out[params[i].name] = params[i].lo + (params[i].hi - params[i].lo) * dyadic(total);
  }
  return out;
}

}  // namespace

SearchReport search_params(const ParamFamily& family, const ConeDescription& cone, const Goal& goal,
                           const Schedule& schedule, const SearchOptions& options) {
  SearchReport report;
  for (const auto& d : family.params) {
    if (d.empty()) {
      report.notes.push_back("parameter '" + d.name + "' has an empty domain");
      return report;
    }
  }
  if (!family.params.empty() && schedule.first_exponent > schedule.depth) {
    report.notes.push_back("schedule is empty");
    return report;
  }
  family.target();

  const std::size_t n = family.params.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= i == 0 ? schedule.depth - schedule.first_exponent + 1 : schedule.depth;

  SearchOptions inner = options;
  if (schedule.execution == Execution::parallel) inner.execution = Execution::serial;

  auto note_skip = [&](const CandidateResult& c) {
    ++report.skipped;
    if (report.notes.size() < 8) report.notes.push_back("skipped: " + *c.skipped);
  };

  // blocks start one candidate per thread and double, so an early hit costs
  // little more than the serial walk
  std::size_t width = static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
  for (std::size_t begin = 0, end = 0; begin < total; begin = end, width = std::min(kBlock, 2 * width)) {
    end = std::min(total, begin + (schedule.execution == Execution::serial ? kBlock : width));
    std::vector<CandidateResult> block(end - begin);
    if (schedule.execution == Execution::serial) {
      for (std::size_t i = begin; i < end; ++i) {
        block[i - begin] = evaluate_candidate(family, cone, goal, values_for(family.params, exponents_at(i, n, schedule)), inner);
        if (block[i - begin].established()) break;
      }
    } else {
      std::exception_ptr failure;
      const auto count = static_cast<long>(end - begin);
#pragma omp parallel for schedule(dynamic, 1)
      for (long i = 0; i < count; ++i) {
        try {
          const auto params = values_for(family.params, exponents_at(begin + i, n, schedule));
          block[i] = evaluate_candidate(family, cone, goal, params, inner);
        } catch (...) {
#pragma omp critical
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
    }
    // commit in schedule order
    for (auto& c : block) {
      ++report.attempts;
      if (c.skipped) {
        note_skip(c);
        continue;
      }
      if (c.evaluation.verdict.established()) {
        report.found = true;
        report.params = std::move(c.params);
        report.verdict = std::move(c.evaluation.verdict);
        report.values = std::move(c.evaluation.values);
        return report;
      }
      // keep the last verdict so a failed search still shows a trace
      report.verdict = c.evaluation.verdict;
      report.values = c.evaluation.values;
      report.params = c.params;
    }
  }
  return report;
}

}  // namespace qreider
