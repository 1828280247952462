#include "qreider/hirzebruch.hpp"

#include "qreider/errors.hpp"

namespace qreider {

HirzebruchModel hirzebruch_model(int n) {
  const auto lattice = IntersectionLattice::hirzebruch(n);
  const auto g = DivisorClass::basis(lattice, 0);
  const auto f = DivisorClass::basis(lattice, 1);
  auto surface = std::make_shared<SurfaceModel>(lattice, Rational(-2) * g - Rational(n + 2) * f, Rational(1));
  surface->add_curve("G", g);
  surface->add_curve("F", f);
  surface->add_curve("F2", f);

  surface->add_point({"p_on", {{"G", 1}, {"F", 1}}});
  surface->add_point({"q_on", {{"G", 1}, {"F2", 1}}});
  surface->add_point({"p_off", {{"F", 1}}});
  surface->add_point({"q_off", {{"F", 1}}});
  surface->add_point({"r_off", {{"F2", 1}}});

  surface->add_tangent({"along_G", "p_on", {{"G", 1}}, {"G"}});
  surface->add_tangent({"along_F_on", "p_on", {{"F", 1}}, {"F"}});
  surface->add_tangent({"transverse_on", "p_on", {}, {}});
  surface->add_tangent({"along_F_off", "p_off", {{"F", 1}}, {"F"}});
  surface->add_tangent({"transverse_off", "p_off", {}, {}});

  auto cone = ConeDescription::hirzebruch(lattice, n);
  auto& fam = cone.hirzebruch_family();
  fam.placements = {{"p_on", {true, "F"}},    {"q_on", {true, "F2"}}, {"p_off", {false, "F"}},
                    {"q_off", {false, "F"}}, {"r_off", {false, "F2"}}};
  fam.orientations = {{"along_G", TangentDirection::along_section},
                      {"along_F_on", TangentDirection::along_fiber},
                      {"transverse_on", TangentDirection::transverse},
                      {"along_F_off", TangentDirection::along_fiber},
                      {"transverse_off", TangentDirection::transverse}};
  return HirzebruchModel{n, std::move(surface), std::move(cone)};
}

ParamFamily hirzebruch_family(const HirzebruchModel& model, int m, const std::string& which) {
  const auto e = AffineForm::param("e");
  const auto a = AffineForm::param("a");
  const auto one = AffineForm::of(1);
  const Rational fibers(m + model.n + 2);

  ParamFamily family;
  family.name = which;
  family.surface = model.surface;
  family.params = {{"e", 0, 1}};
  if (which == "B") {
    family.boundary = {{"G", one - e}};
    family.positive = {{"G", AffineForm::of(2) + e}, {"F", AffineForm::of(fibers)}};
  } else if (which == "B'") {
    family.params.push_back({"a", 0, 1});
    family.boundary = {{"G", one - e}, {"F", one - a}};
    family.positive = {{"G", AffineForm::of(2) + e}, {"F", AffineForm::of(fibers - 1) + a}};
  } else if (which == "B''") {
    family.params.push_back({"a", 0, 1});
    family.boundary = {{"G", one - e}, {"F2", one - a}};
    family.positive = {{"G", AffineForm::of(2) + e}, {"F", AffineForm::of(fibers)}, {"F2", a - one}};
  } else {
    throw DomainError("unknown Hirzebruch decomposition '" + which + "'");
  }
  return family;
}

bool ClaimReport::success() const {
  if (chi != chi_expected) return false;
  if (part == 1 && (h_dot_g != 0 || h_dot_f != 1)) return false;
  for (const auto& c : checks)
    if (!c.report.found) return false;
  return !checks.empty();
}

namespace {

ParamExpr num(long p, long q = 1) { return ParamExpr::constant(Rational(p, q)); }

struct Plan {
  std::string label;
  std::string family;
  Goal goal;
};

Goal free_at(const std::string& p) {
  return Goal{GoalKind::freeness, {p}, {}, std::vector<ParamExpr>{num(3), num(3, 2)}};
}

Goal separate(const std::string& p, const std::string& q, std::vector<ParamExpr> w) {
  return Goal{GoalKind::separation, {p, q}, {}, std::move(w)};
}

Goal tangent(const std::string& t, std::vector<ParamExpr> w) {
  return Goal{GoalKind::tangent, {}, t, std::move(w)};
}

std::vector<Plan> plan(int part) {
  const auto e = ParamExpr::symbol("e");
  const auto one_half_e = num(1) + e / num(2);      // 1 + e/2
  const auto two_over = num(2) / (num(2) - e);       // 2/(2 - e)

  std::vector<Plan> out{
      {"free at p_off", "B", free_at("p_off")},
      {"free at p_on", "B", free_at("p_on")},
      {"separate p_off, q_off", "B'", separate("p_off", "q_off", {num(3, 2), one_half_e})},
      {"separate p_off, r_off", "B", separate("p_off", "r_off", {num(2), num(2)})},
  };
  if (part == 2) {
    out.push_back({"separate p_on, q_on", "B", separate("p_on", "q_on", {num(2), two_over})});
    out.push_back({"separate p_on, q_off", "B'", separate("p_on", "q_off", {num(1), num(1, 2), num(3, 2), one_half_e})});
    out.push_back(
        {"separate p_on, r_off", "B''", separate("p_on", "r_off", {num(3, 2), num(3, 2), num(3, 2), one_half_e})});
    out.push_back({"tangent along G at p_on", "B", tangent("along_G", {num(2), num(2), two_over})});
    out.push_back({"tangent along F at p_on", "B'", tangent("along_F_on", {num(1), num(3, 2), num(1)})});
    out.push_back({"tangent transverse at p_on", "B", tangent("transverse_on", {num(2), num(2), num(3, 2)})});
  }
  out.push_back({"tangent along F at p_off", "B'", tangent("along_F_off", {num(3, 2), num(3, 2), one_half_e})});
  out.push_back({"tangent transverse at p_off", "B", tangent("transverse_off", {num(2), num(2), num(2)})});
  return out;
}

}  // namespace

ClaimReport hirzebruch_claim(int n, int part, std::optional<int> m, const Schedule& schedule,
                             const SearchOptions& options) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (part != 1 && part != 2) throw DomainError("part must be 1 or 2");
  const int mm = part == 1 ? n : m.value_or(n + 1);
  if (part == 1 && m && *m != n) throw DomainError("part 1 uses m = n");
  if (part == 2 && mm < n + 1) throw DomainError("part 2 needs m >= n + 1");

  const HirzebruchModel model = hirzebruch_model(n);
  const auto& lattice = model.surface->lattice();
  const auto g = DivisorClass::basis(lattice, 0);
  const auto f = DivisorClass::basis(lattice, 1);
  const DivisorClass l = Rational(3) * g + Rational(mm + n + 2) * f;
  const DivisorClass h = model.surface->canonical() + l;

  ClaimReport report;
  report.n = n;
  report.m = mm;
  report.part = part;
  report.h = to_string(h);
  report.l = to_string(l);
  report.chi = riemann_roch_chi(h, model.surface->canonical(), model.surface->chi_structure_sheaf());
  report.chi_expected = Rational(2 * mm - n + 2);
  report.h_dot_g = intersect(h, g);
  report.h_dot_f = intersect(h, f);
  report.l_dot_g = intersect(l, g);
  report.l_nef = is_nef(l, model.cone);

  for (auto& step : plan(part)) {
    const ParamFamily family = hirzebruch_family(model, mm, step.family);
    SearchReport r = search_params(family, model.cone, step.goal, schedule, options);
    report.checks.push_back({step.label, step.family, std::move(step.goal), std::move(r)});
  }
  return report;
}

}  // namespace qreider
