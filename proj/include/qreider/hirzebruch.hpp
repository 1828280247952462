#pragma once

#include "qreider/cone_oracle.hpp"
#include "qreider/decomposition_search.hpp"
#include "qreider/surface_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qreider {

/// F_n with curves G (section), F and a second fiber F2, marked points
///   p_on = G.F, q_on = G.F2, p_off, q_off on F away from G, r_off on F2 away from G
/// and tangent directions
///   along_G, along_F_on, transverse_on at p_on; along_F_off, transverse_off at p_off.
struct HirzebruchModel {
  int n = 1;
  SurfacePtr surface;
  ConeDescription cone;
};

HirzebruchModel hirzebruch_model(int n);

/// The three decompositions of L = 3G + (m+n+2)F used by the claim:
///   "B"   B = (1-e)G,               M = (2+e)G + (m+n+2)F
///   "B'"  B = (1-e)G + (1-a)F,      M = (2+e)G + (m+n+1+a)F
///   "B''" B = (1-e)G + (1-a)F2,     M = (2+e)G + (m+n+2)F - (1-a)F2
ParamFamily hirzebruch_family(const HirzebruchModel& model, int m, const std::string& which);

struct ClaimCheck {
  std::string label;
  std::string family;
  Goal goal;
  SearchReport report;
};

struct ClaimReport {
  int n = 1;
  int m = 1;
  int part = 1;
  std::string h;  // H_m = K + L
  std::string l;
  Rational chi;
  Rational chi_expected;  // 2m - n + 2
  Rational h_dot_g;
  Rational h_dot_f;
  Rational l_dot_g;
  bool l_nef = false;
  std::vector<ClaimCheck> checks;

  bool success() const;
};

/// part 1 uses m = n; part 2 uses the given m (default n + 1, must be >= n + 1).
ClaimReport hirzebruch_claim(int n, int part, std::optional<int> m = std::nullopt, const Schedule& schedule = {2, 24},
                             const SearchOptions& options = {});

}  // namespace qreider
