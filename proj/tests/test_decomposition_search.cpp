#include "qreider/decomposition_search.hpp"
#include "qreider/errors.hpp"
#include "qreider/hirzebruch.hpp"

#include <doctest.h>

using namespace qreider;

namespace {

ParamExpr num(long p, long q = 1) { return ParamExpr::constant(Rational(p, q)); }
const ParamExpr e = ParamExpr::symbol("e");

Goal free_goal(const std::string& p) {
  return Goal{GoalKind::freeness, {p}, {}, std::vector<ParamExpr>{num(3), num(3, 2)}};
}

const Rational* value_of(const NamedValues& values, const std::string& name) {
  for (const auto& v : values)
    if (v.name == name) return &v.value;
  return nullptr;
}

}  // namespace

TEST_CASE("freeness search on F_1") {
  const auto model = hirzebruch_model(1);
  // part 1 data: m = n
  const ParamFamily fam = hirzebruch_family(model, 1, "B");
  const auto report = search_params(fam, model.cone, free_goal("p_on"));
  REQUIRE(report.found);
  const Rational eps = report.params.at("e");
  bool dyadic_k_le_6 = false;
  for (unsigned k = 1; k <= 6; ++k) dyadic_k_le_6 = dyadic_k_le_6 || eps == dyadic(k);
  CHECK(dyadic_k_le_6);
  CHECK(report.verdict.rule == rules::free_beta);
  CHECK(report.verdict.witness->flat() == std::vector<Rational>{3, Rational(3, 2)});
  CHECK(report.attempts >= 1);

  // replay reproduces the verdict
  const auto replay = evaluate_candidate(fam, model.cone, free_goal("p_on"), report.params);
  CHECK(replay.established());
  CHECK(replay.evaluation.verdict.trace.size() == report.verdict.trace.size());
}

TEST_CASE("empty domain") {
  const auto model = hirzebruch_model(1);
  ParamFamily fam = hirzebruch_family(model, 1, "B");
  fam.params[0].lo = Rational(1, 2);
  fam.params[0].hi = Rational(1, 2);
  const auto report = search_params(fam, model.cone, free_goal("p_on"));
  CHECK_FALSE(report.found);
  CHECK(report.attempts == 0);
}

TEST_CASE("two-parameter separation on a fiber") {
  const auto model = hirzebruch_model(1);
  const ParamFamily fam = hirzebruch_family(model, 1, "B'");
  const Goal goal{GoalKind::separation, {"p_off", "q_off"}, {}, std::vector<ParamExpr>{num(3, 2), num(1) + e / num(2)}};
  const auto report = search_params(fam, model.cone, goal);
  REQUIRE(report.found);
  const Rational eps = report.params.at("e");
  const Rational alpha = report.params.at("a");
  CHECK(alpha < eps);
  CHECK(1 + eps / 2 >= Rational(3, 2) / (Rational(3, 2) - alpha));
  CHECK(report.verdict.rule == rules::sep_beta);
}

TEST_CASE("candidate validation") {
  const auto model = hirzebruch_model(1);
  const ParamFamily fam = hirzebruch_family(model, 1, "B");
  SUBCASE("outside the domain") {
    const auto r = evaluate_candidate(fam, model.cone, free_goal("p_on"), {{"e", Rational(3, 2)}});
    REQUIRE(r.skipped);
    CHECK_FALSE(r.established());
  }
  SUBCASE("missing parameter") {
    CHECK_THROWS_AS(evaluate_candidate(fam, model.cone, free_goal("p_on"), {}), UnknownNameError);
  }
  SUBCASE("boundary coefficient out of range") {
    ParamFamily wide = fam;
    wide.params[0].lo = -1;
    const auto r = evaluate_candidate(wide, model.cone, free_goal("p_on"), {{"e", Rational(-1, 2)}});
    REQUIRE(r.skipped);
  }
  SUBCASE("the target must be integral and parameter free") {
    ParamFamily bad = fam;
    bad.positive["G"] = AffineForm::of(2);
    CHECK_THROWS_AS(bad.target(), DomainError);
  }
}

TEST_CASE("goal evaluation records degrees and a nef prefix") {
  const auto model = hirzebruch_model(1);
  const auto& s = model.surface;
  const Rational eps(1, 10);
  const QDivisor b(s, {{"G", 1 - eps}});
  const QDivisor m(s, {{"G", 2 + eps}, {"F", 5}});
  const Goal goal{GoalKind::tangent, {}, "along_G", std::nullopt};
  const auto ev = evaluate_goal(b, m, model.cone, goal, BetaWitness::tangent(2, 2, Rational(2) / (2 - eps)));
  CHECK(ev.verdict.established());
  CHECK(ev.verdict.trace[0].text == "M.G >= 0");
  CHECK(ev.verdict.trace[0].lhs == 3 - eps);
  CHECK(ev.verdict.trace[1].lhs == 2 + eps);
  CHECK(ev.verdict.trace[2].lhs == (2 + eps) * (8 - eps));
  CHECK(*value_of(ev.values, "mindeg_Z") == 3 - eps);
  CHECK(*value_of(ev.values, "mu_v") == 2 * (1 - eps));

  const QDivisor not_nef(s, {{"G", 3}});
  const auto bad = evaluate_goal(QDivisor(s), not_nef, model.cone, goal, std::nullopt);
  CHECK_FALSE(bad.verdict.established());
  CHECK(bad.verdict.rule == "nef-and-big");
}

TEST_CASE("deeper schedules keep earlier successes") {
  const auto model = hirzebruch_model(2);
  const ParamFamily fam = hirzebruch_family(model, 2, "B");
  std::optional<unsigned> first;
  for (unsigned depth = 1; depth <= 8; ++depth) {
    const auto r = search_params(fam, model.cone, free_goal("p_on"), Schedule{1, depth, Execution::serial});
    if (first) CHECK(r.found);
    if (r.found && !first) first = depth;
  }
  CHECK(first.has_value());
}

TEST_CASE("serial and parallel schedules report the same candidate") {
  const auto model = hirzebruch_model(3);
  const ParamFamily fam = hirzebruch_family(model, 4, "B'");
  const Goal goal{GoalKind::separation, {"p_on", "q_off"}, {}, std::vector<ParamExpr>{num(1), num(1, 2), num(3, 2), num(1) + e / num(2)}};
  const auto s = search_params(fam, model.cone, goal, Schedule{1, 12, Execution::serial});
  const auto p = search_params(fam, model.cone, goal, Schedule{1, 12, Execution::parallel});
  CHECK(s.found == p.found);
  CHECK(s.params == p.params);
  CHECK(s.attempts == p.attempts);
}

TEST_CASE("claim driver") {
  SUBCASE("n = 3, part 1") {
    const auto r = hirzebruch_claim(3, 1);
    CHECK(r.success());
    CHECK(r.chi == 5);
    CHECK(r.h_dot_g == 0);
    CHECK(r.h_dot_f == 1);
    CHECK(r.h == "G + 3F");
  }
  SUBCASE("n = 4, part 2: L is not nef but the decomposition works") {
    const auto r = hirzebruch_claim(4, 2);
    CHECK(r.l_dot_g == -1);
    CHECK_FALSE(r.l_nef);
    CHECK(r.success());
  }
  CHECK_THROWS_AS(hirzebruch_claim(0, 1), DomainError);
  CHECK_THROWS_AS(hirzebruch_claim(2, 3), DomainError);
  CHECK_THROWS_AS(hirzebruch_claim(2, 2, 2), DomainError);
}
