#pragma once

#include "qreider/qlattice.hpp"
#include "qreider/rational.hpp"
#include "qreider/surface_model.hpp"
#include "qreider/witness_search.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qreider {

namespace rules {
inline constexpr const char* jet = "jets/high-multiplicity";
inline constexpr const char* free_high = "freeness/high-multiplicity";
inline constexpr const char* free_beta = "freeness/beta";
inline constexpr const char* sep_both_high = "separation/both-high";
inline constexpr const char* sep_one_high = "separation/one-high";
inline constexpr const char* sep_beta = "separation/beta";
inline constexpr const char* tan_high = "tangent/high-order";
inline constexpr const char* tan_mid = "tangent/mid";
inline constexpr const char* tan_beta = "tangent/beta";
inline constexpr const char* va_global = "very-ample/global";
inline constexpr const char* va_sqrt2 = "very-ample/sqrt2";
}  // namespace rules

enum class Status { established, not_established };
enum class Relation { gt, ge, eq, le, lt };

const char* to_string(Status s);
const char* to_string(Relation r);

struct TraceEntry {
  std::string text;
  Rational lhs;
  Relation rel;
  Rational rhs;
  bool holds;
};

enum class WitnessRole { global, at_p, at_q, at_V };
const char* to_string(WitnessRole r);

struct BetaValue {
  WitnessRole role;
  Rational value;

  bool operator==(const BetaValue&) const = default;
};

/// Auxiliary numbers beta2 (self-intersection budget) and beta1 (degree
/// budget), each tagged with the point it belongs to.
struct BetaWitness {
  std::vector<BetaValue> beta2;
  std::vector<BetaValue> beta1;

  static BetaWitness global(Rational b2, Rational b1);
  static BetaWitness at(WitnessRole role, Rational b2, Rational b1);
  static BetaWitness pair(Rational b2p, Rational b1p, Rational b2q, Rational b1q);
  static BetaWitness tangent(Rational b2p, Rational b2V, Rational b1);

  std::optional<Rational> find_beta2(WitnessRole role) const;
  std::optional<Rational> find_beta1(WitnessRole role) const;
  /// Flat tuple order used by the text format: per role, beta2 then beta1,
  /// except tangent witnesses which read (beta2_p, beta2_V, beta1).
  std::vector<Rational> flat() const;

  bool operator==(const BetaWitness&) const = default;
};

struct CriterionVerdict {
  Status status = Status::not_established;
  std::string rule;
  std::vector<TraceEntry> trace;
  std::optional<BetaWitness> witness;
  std::vector<std::string> notes;

  bool established() const { return status == Status::established; }
};

enum class CurveAdjoint { none, base_point_free, very_ample };
const char* to_string(CurveAdjoint c);

/// Adjoint systems on a smooth curve: deg >= 2 free, deg >= 3 very ample.
CurveAdjoint curve_adjoint_check(const Rational& degree);

/// Established iff mu >= s + 2.
CriterionVerdict jet_separation(const Rational& mu, unsigned s);

/// Smallest admissible beta1 at a point with multiplicity mu < 2:
/// 2 - mu when mu >= 1, beta2 / (beta2 - (1 - mu)) when mu < 1.
Rational min_formula(const Rational& mu, const Rational& beta2);

CriterionVerdict freeness_at(const Rational& mu, const Rational& m2, const Rational& mindeg_p,
                             const std::optional<BetaWitness>& witness = std::nullopt,
                             const SearchOptions& options = {});
std::optional<BetaWitness> freeness_witness(const Rational& mu, const Rational& m2, const Rational& mindeg_p,
                                            const SearchOptions& options = {});

/// mindeg_pq is the minimal degree over curves through both points and is
/// taken as independent data.
CriterionVerdict separation(const Rational& mu_p, const Rational& mu_q, const Rational& m2,
                            const Rational& mindeg_p, const Rational& mindeg_q, const Rational& mindeg_pq,
                            const std::optional<BetaWitness>& witness = std::nullopt,
                            const SearchOptions& options = {});
std::optional<BetaWitness> separation_witness(const Rational& mu_p, const Rational& mu_q, const Rational& m2,
                                              const Rational& mindeg_p, const Rational& mindeg_q,
                                              const Rational& mindeg_pq, const SearchOptions& options = {});

/// mu_V is the order at the infinitely near point; mu_v = mu_p + mu_V.
CriterionVerdict tangent_separation(const Rational& mu_p, const Rational& mu_V, const Rational& m2,
                                    const Rational& mindeg_p, const Rational& mindeg_Z,
                                    const std::optional<BetaWitness>& witness = std::nullopt,
                                    const SearchOptions& options = {});
std::optional<BetaWitness> tangent_witness(const Rational& mu_p, const Rational& mu_V, const Rational& m2,
                                           const Rational& mindeg_p, const Rational& mindeg_Z,
                                           const SearchOptions& options = {});
/// Lower bound on beta1 in the beta case of tangent separation.
Rational tangent_beta1_bound(const Rational& mu_v, const Rational& beta2_p, const Rational& beta2_V);

/// Global very-ampleness: beta2 >= 2, beta1 >= beta2/(beta2-1), M^2 > 2 beta2^2,
/// M.C >= 2 beta1 for every curve.
CriterionVerdict very_ampleness(const Rational& m2, const Rational& mindeg_all,
                                const std::optional<BetaWitness>& witness = std::nullopt,
                                const SearchOptions& options = {});
std::optional<BetaWitness> very_ampleness_witness(const Rational& m2, const Rational& mindeg_all,
                                                  const SearchOptions& options = {});

/// M^2 > (2+sqrt2)^2 and M.C > 2+sqrt2, decided exactly. When established the
/// verdict carries a rational witness for very_ampleness.
CriterionVerdict very_ampleness_sqrt2(const Rational& m2, const Rational& mindeg_all);
/// q > 2 + sqrt2, exactly.
bool exceeds_two_plus_sqrt2(const Rational& q);
/// q > 6 + 4 sqrt2 = (2 + sqrt2)^2, exactly.
bool exceeds_two_plus_sqrt2_squared(const Rational& q);

/// Curves through one point with boundary coefficient b and the coefficient d
/// of an auxiliary divisor D.
struct LocalCurve {
  std::string name;
  Rational b;
  Rational d;
  int mult_p = 1;
  int mult_V = 0;
  bool contains_Z = false;
};

struct LocalConfig {
  std::vector<LocalCurve> curves;

  void validate() const;
  Rational mu() const;    // sum b_i mult_p
  Rational m_p() const;   // sum d_i mult_p
  Rational mu_V() const;  // sum b_i mult_V
  Rational mu_v() const { return mu() + mu_V(); }
};

/// Gathers the curves through `point` from B and D on a surface model. With a
/// tangent name, mult_V and containment come from that tangent at its point.
LocalConfig make_local_config(const QDivisor& boundary, const QDivisor& d, const std::string& point,
                              const std::string& tangent = {});

enum class PlcMode { basic, cap3, prime };

struct PlcOptions {
  PlcMode mode = PlcMode::basic;
  std::size_t c0 = 0;      // curve index for prime mode
  bool inclusive = false;  // prime mode: b_i + d_i >= 1 instead of > 1 for i != c0
};

struct PlcResult {
  bool plc = false;
  Rational c;
  std::vector<std::size_t> critical;  // every achiever, declaration order
  std::vector<std::string> critical_terms;
  std::vector<std::string> warnings;
};

PlcResult plc_threshold(const LocalConfig& config, const PlcOptions& options = {});

/// H.(H - K)/2 + chi(O_S)
Rational riemann_roch_chi(const DivisorClass& h, const DivisorClass& canonical, const Rational& chi_o);

}  // namespace qreider
