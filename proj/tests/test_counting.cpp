#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "stacksort/counting.hpp"

using namespace stacksort;

TEST_CASE("Boolean-Catalan sequence values") {
  const CountSequence a = boolean_catalan(12);
  CHECK(a.at(0) == 0);
  CHECK(a.at(1) == 1);
  CHECK(a.at(2) == 2);
  CHECK(a.at(3) == 6);
  CHECK(a.at(4) == 20);
  CHECK(a.at(5) == 72);
  CHECK(a.at(6) == 272);
  CHECK(a.at(7) == 1064);
  CHECK(a.at(8) == 4272);
  CHECK(a.at(9) == 17504);
  CHECK(a.at(10) == 72896);
  CHECK(a.at(11) == 307648);
  CHECK(a.at(12) == 1312896);
}

TEST_CASE("sequence values stay exact past 64 bits") {
  const CountSequence a = boolean_catalan(40);
  CHECK(a.at(40) > BigInt("18446744073709551615"));
  // a_n = 2 a_{n-1} + 2 sum a_{i-1} a_{n-i} re-checked at the top index.
  BigInt sum = 0;
  for (std::size_t i = 2; i <= 39; ++i) sum += a.at(i - 1) * a.at(40 - i);
  CHECK(a.at(40) == 2 * a.at(39) + 2 * sum);
}

TEST_CASE("Catalan numbers") {
  const CountSequence c = catalan(10);
  CHECK(c.at(0) == 1);
  CHECK(c.at(1) == 1);
  CHECK(c.at(2) == 2);
  CHECK(c.at(3) == 5);
  CHECK(c.at(5) == 42);
  CHECK(c.at(10) == 16796);
}

TEST_CASE("convergence radius is the positive root of 1 - 4z - 4z^2") {
  const double rho = convergence_radius();
  CHECK(rho == doctest::Approx((std::sqrt(2.0) - 1.0) / 2.0));
  CHECK(std::abs(1.0 - 4.0 * rho - 4.0 * rho * rho) < 1e-14);
}

TEST_CASE("closed form") {
  CHECK(closed_form(0.1) == doctest::Approx(0.1291713).epsilon(1e-6));
  CHECK(closed_form(0.2) > 0.0);
  CHECK(closed_form(1e-9) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK_THROWS_AS(closed_form(0.25), std::domain_error);
  CHECK_THROWS_AS(closed_form(0.0), std::domain_error);
  CHECK_THROWS_AS(closed_form(-0.1), std::domain_error);
  CHECK_THROWS_AS(closed_form(convergence_radius()), std::domain_error);
}

TEST_CASE("series partial sums") {
  CHECK(series_partial_sum(0.1, 7).partial_sum == doctest::Approx(0.1290984).epsilon(1e-7));
  CHECK(series_partial_sum(0.1, 0).partial_sum == 0.0);
  CHECK(std::abs(series_partial_sum(0.1, 12).gap()) < 1e-3);
  CHECK_THROWS_AS(series_partial_sum(0.3, 5), std::domain_error);
}

TEST_CASE("gap to the closed form shrinks monotonically at z = 0.1") {
  double previous = std::abs(series_partial_sum(0.1, 1).gap());
  for (std::size_t N = 2; N <= 20; ++N) {
    const double gap = std::abs(series_partial_sum(0.1, N).gap());
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("functional equation residual") {
  for (double z : {0.05, 0.1, 0.15}) CHECK(functional_equation_residual(z) < 1e-12);
  CHECK_THROWS_AS(functional_equation_residual(0.5), std::domain_error);
}

TEST_CASE("sequence export") {
  const CountSequence a = boolean_catalan(3);
  CHECK(a.to_csv() == "n,value\n0,0\n1,1\n2,2\n3,6\n");
  CHECK(a.to_json() == R"(["0","1","2","6"])");
}
