#include <doctest.h>

#include <cmath>

#include "bsq/errors.hpp"
#include "bsq/modes.hpp"

using namespace bsq;

TEST_CASE("mode registry") {
  const ModeRegistry m({3.0, -3.0, 2.0, -2.0});
  CHECK(m.size() == 4);
  CHECK(m.index_of(-2.0) == 3);
  CHECK(m.partner(0) == 1);
  CHECK(m.partner(3) == 2);
  CHECK(m.has_all_partners());
  CHECK(m.find(2.0 * (1 + 1e-12)).value() == 2);
  CHECK_FALSE(m.find(2.5).has_value());
  CHECK_THROWS_AS(m.index_of(7.0), RegistryError);
  CHECK_THROWS_AS(m.check_index(4), RegistryError);

  const ModeRegistry half({1.0, 2.0, -2.0});
  CHECK_FALSE(half.has_all_partners());
  REQUIRE(half.missing_partners().size() == 1);
  CHECK(half.missing_partners()[0] == -1.0);
  CHECK_THROWS_AS(half.partner(0), RegistryError);

  CHECK_THROWS_AS(ModeRegistry({1.0, 1.0}), RegistryError);
  CHECK_THROWS_AS(ModeRegistry({1.0, NAN}), RegistryError);
}
