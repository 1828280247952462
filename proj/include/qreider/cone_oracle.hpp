#pragma once

#include "qreider/qlattice.hpp"

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace qreider {

/// One declared generator of the curve cone. `through` names the marked
/// points lying on (some irreducible curve in) this class, `contains` the
/// tangent directions it contains.
struct Generator {
  std::string name;
  DivisorClass cls;
  std::set<std::string> through;
  std::set<std::string> contains;
};

/// A user-declared complete list of irreducible-curve classes. Completeness is
/// the caller's responsibility; nothing here can check it.
struct FiniteGenerators {
  std::vector<Generator> generators;
};

/// Position of a marked point on F_n relative to the negative section and the
/// ruling. Fibers are identified by label; points with equal labels share a fiber.
struct PointPlacement {
  bool on_section = false;
  std::string fiber;

  bool operator==(const PointPlacement&) const = default;
};

enum class TangentDirection { along_section, along_fiber, transverse };

/// Irreducible curves on F_n: the section G, fibers ~ F, and aG + bF with
/// a >= 1, b >= na. Degrees against nef classes reduce to G, F and G + nF.
struct HirzebruchFamily {
  int n = 1;
  DivisorClass section;
  DivisorClass fiber;
  std::map<std::string, PointPlacement> placements;
  std::map<std::string, TangentDirection> orientations;
};

class ConeDescription {
 public:
  using Variant = std::variant<FiniteGenerators, HirzebruchFamily>;

  explicit ConeDescription(FiniteGenerators generators);
  explicit ConeDescription(HirzebruchFamily family);

  /// Builtin F_n cone on the builtin lattice with section "G" and fiber "F".
  static ConeDescription hirzebruch(LatticePtr lattice, int n);

  const LatticePtr& lattice() const { return lattice_; }
  const Variant& variant() const { return variant_; }
  bool is_hirzebruch() const { return std::holds_alternative<HirzebruchFamily>(variant_); }
  const HirzebruchFamily& hirzebruch_family() const;
  HirzebruchFamily& hirzebruch_family();

 private:
  LatticePtr lattice_;
  Variant variant_;
};

/// Restricts the curves over which degrees are minimized.
struct CurveFilter {
  enum class Kind { all, through, containing };

  Kind kind = Kind::all;
  std::vector<std::string> points;  // through: every listed point lies on the curve
  std::string tangent;              // containing

  static CurveFilter everything() { return {}; }
  static CurveFilter through_points(std::vector<std::string> pts) { return {Kind::through, std::move(pts), {}}; }
  static CurveFilter containing(std::string t) { return {Kind::containing, {}, std::move(t)}; }
};

struct DegreeBound {
  Rational value;
  std::vector<std::string> achievers;  // in consideration order
  std::vector<std::string> considered;
};

bool is_nef(const DivisorClass& m, const ConeDescription& cone);
/// Certified only for nef classes: nef and m^2 > 0.
bool is_big(const DivisorClass& m, const ConeDescription& cone);

/// Named test classes for the filter, with their classes.
std::vector<std::pair<std::string, DivisorClass>> test_classes(const ConeDescription& cone,
                                                               const CurveFilter& filter);

/// min of m.C over irreducible C passing the filter. Throws NotNefError when m
/// is not nef, DomainError when the filter leaves no curve.
DegreeBound min_degree(const DivisorClass& m, const ConeDescription& cone, const CurveFilter& filter);

}  // namespace qreider
