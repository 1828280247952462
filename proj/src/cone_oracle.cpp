#include "qreider/cone_oracle.hpp"

#include "qreider/errors.hpp"

#include <algorithm>

namespace qreider {

ConeDescription::ConeDescription(FiniteGenerators generators) {
  if (generators.generators.empty()) throw InvariantError("generator list is empty");
  lattice_ = generators.generators.front().cls.lattice();
  std::set<std::string> names;
  for (const auto& g : generators.generators) {
    require_same_lattice(lattice_, g.cls.lattice(), "cone generator");
    if (!names.insert(g.name).second) throw InvariantError("duplicate generator '" + g.name + "'");
  }
  variant_ = std::move(generators);
}

ConeDescription::ConeDescription(HirzebruchFamily family) {
  if (family.n < 1) throw DomainError("Hirzebruch index must be >= 1");
  lattice_ = family.section.lattice();
  require_same_lattice(lattice_, family.fiber.lattice(), "Hirzebruch fiber");
  if (lattice_->rank() != 2) throw InvariantError("Hirzebruch cone needs a rank-2 lattice");
  if (self_intersection(family.section) != -family.n || self_intersection(family.fiber) != 0 ||
      intersect(family.section, family.fiber) != 1)
    throw InvariantError("section/fiber do not satisfy G^2 = -n, F^2 = 0, G.F = 1");
  variant_ = std::move(family);
}

ConeDescription ConeDescription::hirzebruch(LatticePtr lattice, int n) {
  HirzebruchFamily family{n, DivisorClass::basis(lattice, 0), DivisorClass::basis(lattice, 1), {}, {}};
  return ConeDescription(std::move(family));
}

const HirzebruchFamily& ConeDescription::hirzebruch_family() const {
  if (!is_hirzebruch()) throw DomainError("cone is not a Hirzebruch family");
  return std::get<HirzebruchFamily>(variant_);
}

HirzebruchFamily& ConeDescription::hirzebruch_family() {
  if (!is_hirzebruch()) throw DomainError("cone is not a Hirzebruch family");
  return std::get<HirzebruchFamily>(variant_);
}

namespace {

struct Selection {
  bool section = true;
  bool fiber = true;
  bool general = true;
};

Selection select_hirzebruch(const HirzebruchFamily& fam, const CurveFilter& filter) {
  Selection sel;
  switch (filter.kind) {
    case CurveFilter::Kind::all:
      break;
    case CurveFilter::Kind::through: {
      std::vector<const PointPlacement*> placed;
      for (const auto& p : filter.points) {
        const auto it = fam.placements.find(p);
        if (it == fam.placements.end()) return sel;  // unplaced: no restriction
        placed.push_back(&it->second);
      }
      for (const auto* pl : placed) {
        if (!pl->on_section) sel.section = false;
        if (pl->fiber.empty() || pl->fiber != placed.front()->fiber) sel.fiber = false;
      }
      break;
    }
    case CurveFilter::Kind::containing: {
      const auto it = fam.orientations.find(filter.tangent);
      if (it == fam.orientations.end()) break;
      sel.section = it->second == TangentDirection::along_section;
      sel.fiber = it->second == TangentDirection::along_fiber;
      break;
    }
  }
  return sel;
}

bool generator_matches(const Generator& g, const CurveFilter& filter) {
  switch (filter.kind) {
    case CurveFilter::Kind::all:
      return true;
    case CurveFilter::Kind::through:
      return std::all_of(filter.points.begin(), filter.points.end(),
                         [&](const std::string& p) { return g.through.count(p) != 0; });
    case CurveFilter::Kind::containing:
      return g.contains.count(filter.tangent) != 0;
  }
  return false;
}

}  // namespace

std::vector<std::pair<std::string, DivisorClass>> test_classes(const ConeDescription& cone,
                                                               const CurveFilter& filter) {
  std::vector<std::pair<std::string, DivisorClass>> out;
  if (const auto* fam = std::get_if<HirzebruchFamily>(&cone.variant())) {
    const Selection sel = select_hirzebruch(*fam, filter);
    const std::string g = to_string(fam->section);
    const std::string f = to_string(fam->fiber);
    if (sel.section) out.emplace_back(g, fam->section);
    if (sel.fiber) out.emplace_back(f, fam->fiber);
    if (sel.general)
      out.emplace_back(g + " + " + (fam->n == 1 ? std::string() : std::to_string(fam->n)) + f,
                       fam->section + Rational(fam->n) * fam->fiber);
  } else {
    for (const auto& g : std::get<FiniteGenerators>(cone.variant()).generators)
      if (generator_matches(g, filter)) out.emplace_back(g.name, g.cls);
  }
  return out;
}

bool is_nef(const DivisorClass& m, const ConeDescription& cone) {
  require_same_lattice(m.lattice(), cone.lattice(), "nef test");
  if (const auto* fam = std::get_if<HirzebruchFamily>(&cone.variant()))
    return intersect(m, fam->section) >= 0 && intersect(m, fam->fiber) >= 0;
  for (const auto& g : std::get<FiniteGenerators>(cone.variant()).generators)
    if (intersect(m, g.cls) < 0) return false;
  return true;
}

bool is_big(const DivisorClass& m, const ConeDescription& cone) {
  return is_nef(m, cone) && self_intersection(m) > 0;
}

DegreeBound min_degree(const DivisorClass& m, const ConeDescription& cone, const CurveFilter& filter) {
  if (!is_nef(m, cone)) throw NotNefError("class " + to_string(m) + " is not nef");
  const auto classes = test_classes(cone, filter);
  if (classes.empty()) throw DomainError("no declared curve passes the filter");
  DegreeBound out;
  bool first = true;
  for (const auto& [name, cls] : classes) {
    const Rational d = intersect(m, cls);
    out.considered.push_back(name);
    if (first || d < out.value) {
      out.value = d;
      out.achievers = {name};
      first = false;
    } else if (d == out.value) {
      out.achievers.push_back(name);
    }
  }
  return out;
}

}  // namespace qreider
