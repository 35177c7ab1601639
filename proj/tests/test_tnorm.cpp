#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "mvcolor/tnorm.hpp"
#include "oracles.hpp"

using mvcolor::TNormKind;
using mvcolor::TNormParam;
using mvcolor::UnitValue;

namespace {

UnitValue uv(double x) { return UnitValue(x); }

double T(double x, double y, const TNormParam& p) {
  return mvcolor::tnorm(uv(x), uv(y), p).value();
}
double S(double x, double y, const TNormParam& p) {
  return mvcolor::tconorm(uv(x), uv(y), p).value();
}
double C(double x, double y, const TNormParam& p) {
  return mvcolor::conjugate_tnorm(uv(x), uv(y), p).value();
}

std::vector<TNormParam> sweep_params() {
  return {TNormParam::min_godel(),  TNormParam::product(),
          TNormParam::lukasiewicz(), TNormParam::frank(0.1),
          TNormParam::frank(2.0),    TNormParam::frank(10.0),
          TNormParam::frank(100.0)};
}

}  // namespace

TEST_CASE("UnitValue accepts [0,1], clamps a 1e-12 band, rejects farther") {
  CHECK(UnitValue(0.0).value() == 0.0);
  CHECK(UnitValue(1.0).value() == 1.0);
  CHECK(UnitValue(0.42).value() == 0.42);
  CHECK(UnitValue(-1e-13).value() == 0.0);
  CHECK(UnitValue(1.0 + 1e-13).value() == 1.0);
  CHECK_THROWS_AS(UnitValue(-1e-11), std::invalid_argument);
  CHECK_THROWS_AS(UnitValue(1.0 + 1e-11), std::invalid_argument);
  CHECK_THROWS_AS(UnitValue(2.0), std::invalid_argument);
  CHECK_THROWS_AS(UnitValue(std::nan("")), std::invalid_argument);
}

TEST_CASE("TNormParam limit mapping") {
  CHECK(TNormParam::frank(0.0).kind() == TNormKind::min_godel);
  CHECK(TNormParam::frank(1e-10).kind() == TNormKind::min_godel);
  CHECK(TNormParam::frank(1.0).kind() == TNormKind::product);
  CHECK(TNormParam::frank(1.0 + 5e-7).kind() == TNormKind::product);
  CHECK(TNormParam::frank(1.0 - 5e-7).kind() == TNormKind::product);
  CHECK(TNormParam::frank(2e9).kind() == TNormKind::lukasiewicz);
  CHECK(TNormParam::frank(1.0 + 2e-6).kind() == TNormKind::frank);
  CHECK(TNormParam::frank(1.0 - 2e-6).kind() == TNormKind::frank);
  CHECK(TNormParam::frank(2.0).frank_s() == 2.0);
  CHECK_THROWS_AS(TNormParam::frank(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(TNormParam::frank(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(TNormParam::min_godel().frank_s(), std::logic_error);
}

TEST_CASE("tnorm examples") {
  CHECK(T(0.3, 0.7, TNormParam::min_godel()) == 0.3);
  CHECK(T(0.9, 1.0, TNormParam::frank(2.0)) == 0.9);
  CHECK(T(0.5, 0.5, TNormParam::product()) == 0.25);
  CHECK_THAT(T(0.5, 0.5, TNormParam::frank(2.0)),
             Catch::Matchers::WithinAbs(0.228447, 1e-6));
}

TEST_CASE("tnorm matches high-precision reference values") {
  // Frozen from a 50-digit evaluation of the defining formula.
  struct Fixture {
    double x, y, s, expected;
  };
  const Fixture fixtures[] = {
      {0.5, 0.5, 2.0, 0.22844669683638802736},
      {0.5, 0.5, 0.5, 0.27155330316361197264},
      {0.3, 0.7, 2.0, 0.19452936951509027837},
      {0.3, 0.7, 0.1, 0.25465323889024459477},
      {0.3, 0.7, 100.0, 0.11855351535440156266},
      {0.25, 0.875, 1e8, 0.1296783078050045248},
      {0.6, 0.6, 1e-8, 0.56238880936345801497},
      {0.9, 0.99, 10.0, 0.89029093521016542674},
      {0.5, 0.5, 1e9, 0.033446251364860365319},
      {0.5, 0.5, 1e-9, 0.46655374863513963468},
      {0.123, 0.456, 3.5, 0.03996755019913065071},
      {0.5, 0.5, 0.1, 0.31830105240211337125},
      {0.7, 0.8, 1e6, 0.50006670990688863173},
  };
  for (const auto& f : fixtures) {
    INFO("x=" << f.x << " y=" << f.y << " s=" << f.s);
    CHECK_THAT(T(f.x, f.y, TNormParam::frank(f.s)),
               Catch::Matchers::WithinAbs(f.expected, 1e-12));
  }
}

TEST_CASE("tnorm agrees with the naive transcription where it is reliable") {
  for (double s : {0.01, 0.07, 0.5, 3.0, 42.0, 1e3, 1e5}) {
    const TNormParam p = TNormParam::frank(s);
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const double x = i / 10.0;
        const double y = j / 10.0;
        INFO("x=" << x << " y=" << y << " s=" << s);
        CHECK_THAT(T(x, y, p),
                   Catch::Matchers::WithinAbs(oracles::naive_frank(x, y, s), 1e-9));
      }
    }
  }
}

TEST_CASE("tconorm examples and duality") {
  CHECK(S(0.3, 0.7, TNormParam::min_godel()) == 0.7);
  CHECK_THAT(S(0.3, 0.0, TNormParam::frank(2.0)),
             Catch::Matchers::WithinAbs(0.3, 1e-15));
  CHECK(S(0.5, 0.5, TNormParam::product()) == 0.75);
  CHECK_THAT(S(0.5, 0.5, TNormParam::frank(2.0)),
             Catch::Matchers::WithinAbs(0.77155330316361197264, 1e-12));
}

TEST_CASE("negate") {
  CHECK(mvcolor::negate(uv(0.0)).value() == 1.0);
  CHECK(mvcolor::negate(uv(0.3)).value() == 0.7);
  CHECK_THAT(mvcolor::negate(mvcolor::negate(uv(0.42))).value(),
             Catch::Matchers::WithinAbs(0.42, 1e-15));
}

TEST_CASE("conjugate of an interior member stays interior at the band edge") {
  // s barely outside the product snap band, with 1/s barely inside it: the
  // conjugate must still be the interior member at 1/s, not the product
  // limit, or the conjugation identities drift by ~1e-7.
  const double s = 1.0000010000005;
  const TNormParam p = TNormParam::frank(s);
  REQUIRE(p.kind() == TNormKind::frank);
  const TNormParam q = mvcolor::conjugate_param(p);
  CHECK(q.kind() == TNormKind::frank);
  CHECK_THAT(q.frank_s(), Catch::Matchers::WithinRel(1.0 / s, 1e-15));
  for (double x : {0.25, 0.5, 0.9}) {
    for (double y : {0.1, 0.5, 0.75}) {
      CHECK_THAT(C(x, y, p), Catch::Matchers::WithinAbs(x - T(x, 1 - y, p), 1e-12));
    }
  }
}

TEST_CASE("conjugate_param swaps the limits and inverts s") {
  CHECK(mvcolor::conjugate_param(TNormParam::min_godel()).kind() ==
        TNormKind::lukasiewicz);
  CHECK(mvcolor::conjugate_param(TNormParam::lukasiewicz()).kind() ==
        TNormKind::min_godel);
  CHECK(mvcolor::conjugate_param(TNormParam::product()).kind() == TNormKind::product);
  CHECK(mvcolor::conjugate_param(TNormParam::frank(2.0)).frank_s() == 0.5);

  for (double s : {0.1, 0.5, 2.0, 49.0, 1e4}) {
    const TNormParam p = TNormParam::frank(s);
    const TNormParam back = mvcolor::conjugate_param(mvcolor::conjugate_param(p));
    CHECK(back.kind() == p.kind());
    CHECK_THAT(back.frank_s(), Catch::Matchers::WithinRel(s, 1e-15));
  }
}

TEST_CASE("conjugate_tnorm examples") {
  CHECK(C(0.5, 0.5, TNormParam::min_godel()) == 0.0);
  CHECK(C(0.4, 1.0, TNormParam::frank(10.0)) == 0.4);
  CHECK_THAT(C(0.5, 0.5, TNormParam::frank(2.0)),
             Catch::Matchers::WithinAbs(0.271553, 1e-6));
  CHECK_THAT(C(0.5, 0.5, TNormParam::frank(2.0)),
             Catch::Matchers::WithinAbs(0.27155330316361197264, 1e-12));
}

TEST_CASE("algebraic identities across the family") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto params = sweep_params();

  for (int i = 0; i < 2000; ++i) {
    const double x = unit(rng);
    const double y = unit(rng);
    for (const auto& p : params) {
      INFO("kind=" << to_string(p.kind()) << (p.is_frank() ? " s=" + std::to_string(p.frank_s()) : "")
                   << " x=" << x << " y=" << y);

      // commutativity is exact, the kernel is symmetric in x and y
      CHECK(T(x, y, p) == T(y, x, p));

      // Frank equation and its shifted form
      CHECK_THAT(T(x, y, p) - T(1 - x, 1 - y, p), Catch::Matchers::WithinAbs(x + y - 1, 1e-9));
      CHECK_THAT(T(x, 1 - y, p) - T(y, 1 - x, p), Catch::Matchers::WithinAbs(x - y, 1e-9));

      // conorm duality: x (+) y + x o y = x + y
      CHECK_THAT(S(x, y, p) + T(x, y, p), Catch::Matchers::WithinAbs(x + y, 1e-9));

      // conjugation: x = x * a + x o (1 - a) for any split of 1
      CHECK_THAT(C(x, y, p) + T(x, 1 - y, p), Catch::Matchers::WithinAbs(x, 1e-9));

      // subtraction route to the conjugate
      CHECK_THAT(C(x, y, p), Catch::Matchers::WithinAbs(oracles::conj_via_subtraction(x, y, p), 1e-9));

      // bounds: Lukasiewicz <= t_p <= min
      CHECK(T(x, y, p) >= std::max(0.0, x + y - 1.0) - 1e-9);
      CHECK(T(x, y, p) <= std::min(x, y) + 1e-9);
    }
  }
}

TEST_CASE("conjugate_tnorm equals tnorm at the reciprocal parameter") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double s : {0.1, 2.0, 10.0, 100.0}) {
    const TNormParam p = TNormParam::frank(s);
    const TNormParam recip = TNormParam::frank(1.0 / s);
    for (int i = 0; i < 200; ++i) {
      const double x = unit(rng);
      const double y = unit(rng);
      CHECK_THAT(C(x, y, p), Catch::Matchers::WithinAbs(T(x, y, recip), 1e-9));
    }
  }
  // and for the limit members via the swapped limit
  for (int i = 0; i < 200; ++i) {
    const double x = unit(rng);
    const double y = unit(rng);
    CHECK(C(x, y, TNormParam::min_godel()) == T(x, y, TNormParam::lukasiewicz()));
    CHECK(C(x, y, TNormParam::lukasiewicz()) == T(x, y, TNormParam::min_godel()));
  }
}

TEST_CASE("associativity within tolerance") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& p : sweep_params()) {
    for (int i = 0; i < 500; ++i) {
      const double x = unit(rng), y = unit(rng), z = unit(rng);
      CHECK_THAT(T(T(x, y, p), z, p), Catch::Matchers::WithinAbs(T(x, T(y, z, p), p), 1e-9));
    }
  }
}

TEST_CASE("monotone non-decreasing in each argument") {
  for (const auto& p : sweep_params()) {
    for (int i = 0; i + 1 <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const double x1 = i / 20.0, x2 = (i + 1) / 20.0, y = j / 20.0;
        CHECK(T(x1, y, p) <= T(x2, y, p) + 1e-12);
        CHECK(T(y, x1, p) <= T(y, x2, p) + 1e-12);
      }
    }
  }
}

TEST_CASE("identity and annihilator are exact") {
  for (const auto& p : sweep_params()) {
    for (double x : {0.0, 0.1, 0.31, 0.5, 0.77, 1.0}) {
      CHECK(T(x, 1.0, p) == x);
      CHECK(T(1.0, x, p) == x);
      CHECK(T(x, 0.0, p) == 0.0);
      CHECK(T(0.0, x, p) == 0.0);
    }
  }
}

TEST_CASE("family is pointwise decreasing in s") {
  const std::vector<TNormParam> ordered = {
      TNormParam::min_godel(),  TNormParam::frank(0.1), TNormParam::product(),
      TNormParam::frank(10.0),  TNormParam::frank(1e4), TNormParam::frank(1e8),
      TNormParam::lukasiewicz()};
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j < 25; ++j) {
      const double x = (i + 0.5) / 25.0;
      const double y = (j + 0.5) / 25.0;
      for (std::size_t k = 0; k + 1 < ordered.size(); ++k) {
        CHECK(T(x, y, ordered[k]) >= T(x, y, ordered[k + 1]) - 1e-9);
      }
    }
  }
}

TEST_CASE("kernel stays accurate at the edge of the product band") {
  // First parameters outside the |s - 1| < 1e-6 snap band.
  for (double s : {1.0 + 2e-6, 1.0 - 2e-6}) {
    const TNormParam p = TNormParam::frank(s);
    REQUIRE(p.kind() == TNormKind::frank);
    for (int i = 1; i < 10; ++i) {
      for (int j = 1; j < 10; ++j) {
        const double x = i / 10.0, y = j / 10.0;
        CHECK_THAT(T(x, y, p), Catch::Matchers::WithinAbs(x * y, 1e-6));
      }
    }
  }
}
