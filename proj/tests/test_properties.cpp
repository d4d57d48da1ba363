#include <doctest.h>

#include "properties.hpp"

using namespace taut::testing;

TEST_SUITE("properties") {
  TEST_CASE("apply_map is a ring homomorphism") {
    Rng rng(101);
    CHECK(check_apply_map_homomorphism(rng, 120) == 0);
  }
  TEST_CASE("normal_form is a ring homomorphism and idempotent") {
    Rng rng(102);
    CHECK(check_normal_form_laws(rng, 120) == 0);
  }
  TEST_CASE("projection formula for the Gysin map") {
    Rng rng(103);
    CHECK(check_projection_formula(rng, 120) == 0);
  }
  TEST_CASE("parity split reconstruction") {
    Rng rng(104);
    CHECK(check_parity_split(rng, 120) == 0);
  }
  TEST_CASE("symmetric round trip") {
    Rng rng(105);
    CHECK(check_symmetric_round_trip(rng, 120) == 0);
  }
}
