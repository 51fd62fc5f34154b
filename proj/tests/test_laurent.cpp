#include <random>

#include "doctest.h"
#include "kirbykit/error.hpp"
#include "kirbykit/laurent.hpp"

using namespace kirbykit;

TEST_CASE("laurent printing and arithmetic") {
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly p = LaurentPoly::monomial(2, -1) - 5 + 2 * t;
  CHECK(p.to_string() == "2*t^-1 - 5 + 2*t");
  CHECK((t * t.inverted()) == LaurentPoly(1));
  CHECK((p - p).is_zero());
  CHECK(p.at_one() == -1);
  CHECK(p.evaluate(2) == 0);
  CHECK(LaurentPoly(0).to_string() == "0");
  CHECK((-t).to_string() == "-t");
  CHECK(LaurentPoly::monomial(-3, 2).to_string() == "-3*t^2");
}

TEST_CASE("symmetric normalization") {
  const LaurentPoly t = LaurentPoly::t();
  for (long n = 1; n <= 6; ++n) {
    const LaurentPoly raw = LaurentPoly::from_coefficients(0, {-n, 2 * n + 1, -n});
    const LaurentPoly want = LaurentPoly::from_coefficients(-1, {n, -(2 * n + 1), n});
    CHECK(normalize_symmetric(raw) == want);
    CHECK(normalize_symmetric(raw.shifted(5)) == want);
    CHECK(normalize_symmetric(-raw) == want);
  }
  CHECK(normalize_symmetric(LaurentPoly::from_coefficients(0, {1, -1, 1})).to_string() == "t^-1 - 1 + t");
  CHECK(normalize_symmetric(LaurentPoly(-1)) == LaurentPoly(1));
  CHECK_THROWS_AS(normalize_symmetric(1 + t + t * t * 3), PreconditionError);
  CHECK_FALSE(try_normalize_symmetric(1 + 2 * t).has_value());
  CHECK(normalize_symmetric(LaurentPoly()).is_zero());
}

TEST_CASE("interpolation recovers random integer polynomials") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t deg = rng() % 7;
    std::vector<long> c(deg + 1);
    for (auto& x : c) x = coef(rng);
    const LaurentPoly p = LaurentPoly::from_coefficients(0, c);
    std::vector<Integer> values;
    for (std::size_t x = 0; x <= deg + 2; ++x) values.push_back(p.evaluate(static_cast<long>(x)));
    CHECK(interpolate_integer_polynomial(values) == p);
  }
}
