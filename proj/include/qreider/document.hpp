#pragma once

#include "qreider/cone_oracle.hpp"
#include "qreider/decomposition_search.hpp"
#include "qreider/param_expr.hpp"
#include "qreider/surface_model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qreider {

/// Source position carried for diagnostics; ignored by equality so that a
/// reprinted document compares equal to the original.
struct SourceLine {
  int line = 0;
  bool operator==(const SourceLine&) const { return true; }
};

struct SurfaceDecl {
  std::vector<std::string> basis;
  std::vector<std::vector<Rational>> gram;
  ParamExpr canonical;
  Rational chi_o = 1;
  SourceLine at;

  bool operator==(const SurfaceDecl&) const = default;
};

struct CurveDecl {
  std::string name;
  ParamExpr cls;
  SourceLine at;

  bool operator==(const CurveDecl&) const = default;
};

struct PointDecl {
  std::string name;
  std::vector<std::pair<std::string, int>> mults;
  SourceLine at;

  bool operator==(const PointDecl&) const = default;
};

struct TangentDecl {
  std::string name;
  std::string point;
  std::vector<std::pair<std::string, int>> mults_V;
  std::vector<std::string> contains;
  SourceLine at;

  bool operator==(const TangentDecl&) const = default;
};

struct PlacementDecl {
  std::string point;
  bool on_section = false;
  std::string fiber;
  SourceLine at;

  bool operator==(const PlacementDecl&) const = default;
};

struct OrientDecl {
  std::string tangent;
  TangentDirection direction = TangentDirection::transverse;
  SourceLine at;

  bool operator==(const OrientDecl&) const = default;
};

struct GeneratorDecl {
  std::string name;
  ParamExpr cls;
  std::vector<std::string> through;
  std::vector<std::string> contains;
  SourceLine at;

  bool operator==(const GeneratorDecl&) const = default;
};

struct ConeDecl {
  std::optional<int> hirzebruch_n;
  std::string section = "G";
  std::string fiber = "F";
  std::vector<PlacementDecl> placements;
  std::vector<OrientDecl> orientations;
  std::vector<GeneratorDecl> generators;
  SourceLine at;

  bool operator==(const ConeDecl&) const = default;
};

struct ParamDecl {
  std::string name;
  Rational lo;
  Rational hi;
  SourceLine at;

  bool operator==(const ParamDecl&) const = default;
};

struct DivisorDecl {
  std::string name;
  ParamExpr expr;
  SourceLine at;

  bool operator==(const DivisorDecl&) const = default;
};

/// `command arg arg key=value witness=(e1, e2, ...)`
struct Query {
  std::string command;
  std::vector<std::string> args;
  std::vector<std::pair<std::string, std::string>> options;
  std::optional<std::vector<ParamExpr>> witness;
  SourceLine at;

  std::optional<std::string> option(const std::string& key) const;
  bool operator==(const Query&) const = default;
};

struct Document {
  std::optional<SurfaceDecl> surface;
  std::vector<CurveDecl> curves;
  std::vector<PointDecl> points;
  std::vector<TangentDecl> tangents;
  std::optional<ConeDecl> cone;
  std::vector<ParamDecl> params;
  std::vector<DivisorDecl> divisors;
  std::vector<Query> queries;

  bool operator==(const Document&) const = default;
};

/// Syntax only; name resolution happens in resolve(). Throws ParseError.
Document parse_document(std::string_view text);
/// Canonical text; parse_document(print_document(d)) == d.
std::string print_document(const Document& doc);

/// Everything a document declares, built and cross-checked.
struct Workspace {
  std::shared_ptr<SurfaceModel> surface;  // null when the document has no [surface]
  std::optional<ConeDescription> cone;
  std::vector<ParamDomain> params;
  SymbolTable symbols;  // params, curves and bound divisors

  SurfacePtr surface_ptr() const { return surface; }
  /// Divisor bound to `name` (or a curve name).
  DivisorForm divisor(const std::string& name) const;
  /// Same, required to be free of parameters.
  QDivisor concrete(const std::string& name) const;
};

/// Builds the surface, cone, parameters and divisors. Resolution and
/// invariant failures are reported as ParseError at the offending line.
Workspace resolve(const Document& doc);

/// parse_document + resolve.
std::pair<Document, Workspace> load(std::string_view text);

}  // namespace qreider
