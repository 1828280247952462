#include "properties.hpp"

#include <doctest.h>

namespace {

constexpr std::size_t kCount = 1000;

void require_clean(const props::Outcome& o, std::size_t min_instances = kCount) {
  INFO("first failure: " << o.first_failure);
  CHECK(o.failures == 0);
  CHECK(o.instances >= min_instances);
}

}  // namespace

TEST_CASE("blow-up identity on random configurations") { require_clean(props::blowup_identity(11, kCount)); }
TEST_CASE("rounding identities") { require_clean(props::rounding_identities(12, kCount)); }
TEST_CASE("pairing is symmetric and bilinear") { require_clean(props::pairing_laws(13, kCount)); }
TEST_CASE("tangential orders and linearity of ord") { require_clean(props::tangential_orders(14, kCount)); }
TEST_CASE("F_n cone oracle against the grid") { require_clean(props::cone_equivalence(15, kCount)); }
TEST_CASE("checkers are monotone") { require_clean(props::monotonicity(16, 1200)); }
TEST_CASE("global criterion scales") { require_clean(props::scaling(17, kCount)); }
TEST_CASE("global witness serves the pointwise checkers") { require_clean(props::global_implies_pointwise(18, kCount)); }
TEST_CASE("min-formula branches") { require_clean(props::min_formula_branches(19, kCount)); }
TEST_CASE("PLC threshold") { require_clean(props::plc_correctness(20, kCount)); }
TEST_CASE("PLC threshold lower bound") { require_clean(props::plc_lower_bound(21, kCount)); }
TEST_CASE("sqrt2 form against the decimal oracle") { require_clean(props::sqrt2_oracle(22, kCount)); }
TEST_CASE("searched witnesses re-verify") { require_clean(props::witness_round_trip(23, kCount)); }
TEST_CASE("claim parameters re-verify") { require_clean(props::claim_round_trip(4), 1); }
