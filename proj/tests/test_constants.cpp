#include <cmath>
#include <stdexcept>

#include "combgraph/errors.hpp"
#include "combgraph/lemma.hpp"
#include "combgraph/verify.hpp"
#include "doctest.h"

using namespace combgraph;

TEST_CASE("geometric constant and c0") {
  LemmaConstants c = compute_constants(2, 2.0);
  CHECK(c.k_sum == 2.0);
  // 3^(3/2) / (3/2 - sqrt(3/2)) == 6(sqrt2 + sqrt3)
  long double direct = powl(3.0L, 1.5L) / (1.5L - sqrtl(1.5L));
  CHECK(std::fabs(static_cast<double>(direct) - c.c0) < 1e-12);
  CHECK(c.c0 == doctest::Approx(18.8775862).epsilon(1e-7));
}

TEST_CASE("d_s values and fallbacks") {
  CHECK(d_s(1) == 4);
  CHECK(d_s(2) == 128);   // 2 * 4^3
  CHECK(d_s(3) == 4096);  // 4 * 4^5
  CHECK(d_s_exponent(1) == 2);
  CHECK(d_s_exponent(13) == 62);
  CHECK_THROWS_AS(d_s(14), std::overflow_error);
  CHECK(d_s_decimal(3) == "4096");
  CHECK(d_s_decimal(14) == "147573952589676412928");  // 2^67
  CHECK_THROWS_AS(d_s(0), PreconditionError);
}

TEST_CASE("base remark dimensions") {
  BaseDims d4 = base_remark_dimensions(4);
  CHECK(d4.s == 1);
  CHECK(d4.length == 2);
  CHECK(d4.divisor == 4);
  CHECK(std::pow(2.0, d4.s) >= std::pow(4.0, 0.1));

  CHECK(base_remark_dimensions(127).s == 1);  // D_2 = 128 > 127
  BaseDims d128 = base_remark_dimensions(128);
  CHECK(d128.s == 2);
  CHECK(d128.length == 4);
  CHECK(base_remark_dimensions(4095).s == 2);
  CHECK(base_remark_dimensions(4096).s == 3);

  CHECK_THROWS_AS(base_remark_dimensions(3), PreconditionError);
}

TEST_CASE("l0 and tau0 bracketing") {
  auto outcome = verify::constants_bracketing();
  CHECK_MESSAGE(outcome.pass, outcome.detail);

  LemmaConstants c = compute_constants(2, 2.0);
  // for d = 2 the binding constraint is l0^(1/8 - 4 tau) > 1, i.e. tau < 1/32
  CHECK(c.tau0 == doctest::Approx(1.0 / 32).epsilon(1e-9));
  CHECK(c.tau_root_a == doctest::Approx(1.0 / 16).epsilon(1e-12));
  CHECK(c.tau_root_c == doctest::Approx(1.0 / 32).epsilon(1e-12));
  CHECK(c.tau_root_b > c.tau_root_c);

  // a larger d moves l0 up through the 2^d term
  LemmaConstants c3 = compute_constants(2, 8.0);
  CHECK(c3.l0 >= c.l0);

  CHECK_THROWS_AS(compute_constants(1, 2.0), PreconditionError);
  CHECK_THROWS_AS(compute_constants(2, 1.5), PreconditionError);
}
