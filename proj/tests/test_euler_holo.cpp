#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cy33/euler_holo.hpp"

using namespace cy33;

namespace {

Fan p1_fan() {
  Fan f;
  f.rays = {{1}, {-1}};
  f.maximal_cones = {Cone{{0}}, Cone{{1}}};
  return f;
}

Fan p2_fan() {
  Fan f;
  f.rays = {{1, 0}, {0, 1}, {-1, -1}};
  f.maximal_cones = {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{2, 0}}};
  return f;
}

Fan p1xp1_fan() {
  Fan f;
  f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  f.maximal_cones = {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{2, 3}}, Cone{{3, 0}}};
  return f;
}

const Fan& pi_fan() {
  static const Fan pi = build_fan_pi();
  return pi;
}

}  // namespace

TEST_CASE("truncated laurent arithmetic") {
  TruncatedLaurent one;
  one.lo = 0;
  one.c = {Rat(1), Rat(0), Rat(0), Rat(0)};

  CHECK(monomial_by_vector({0, 0, 0, 0, 0}, 8).at(0) == Rat(1));

  TruncatedLaurent t1 = monomial_by_vector({1}, 8);  // 1 + t
  CHECK(t1.at(0) == Rat(1));
  CHECK(t1.at(1) == Rat(1));
  CHECK(t1.at(2) == Rat(0));

  TruncatedLaurent tm1 = monomial_by_vector({-1}, 8);  // geometric series
  for (long e = 0; e < 8; ++e) CHECK(tm1.at(e) == (e % 2 == 0 ? Rat(1) : Rat(-1)));

  // (1+t)(1+t)^-1 = 1.
  TruncatedLaurent prod = tl_mul(t1, tm1);
  CHECK(prod.at(0) == Rat(1));
  for (long e = 1; e < prod.hi(); ++e) CHECK(prod.at(e) == Rat(0));

  // Inversion of something with a pole: 1/(t^2 + t^3) = t^-2 - t^-1 + ...
  TruncatedLaurent p;
  p.lo = 2;
  p.c = {Rat(1), Rat(1), Rat(0), Rat(0)};
  TruncatedLaurent ip = tl_inverse(p);
  CHECK(ip.lo == -2);
  CHECK(ip.at(-2) == Rat(1));
  CHECK(ip.at(-1) == Rat(-1));
  CHECK(ip.at(0) == Rat(1));

  // Zero (to precision) cannot be inverted.
  TruncatedLaurent z;
  z.lo = 0;
  z.c = {Rat(0), Rat(0)};
  CHECK_THROWS(tl_inverse(z));

  // Exactness of at() below the window.
  CHECK(p.at(0) == Rat(0));
  CHECK_THROWS(p.at(100));
}

TEST_CASE("toy toric varieties") {
  Fan p1 = p1_fan(), p2 = p2_fan(), p11 = p1xp1_fan();
  for (long d = -4; d <= 4; ++d) {
    ToricDivisor dv;
    dv.coeffs = {d, 0};
    CHECK(chi_of_divisor(p1, dv, 32) == d + 1);

    ToricDivisor dv2;
    dv2.coeffs = {d, 0, 0};
    CHECK(chi_of_divisor(p2, dv2, 32) == (d + 1) * (d + 2) / 2);

    for (long d2 = -4; d2 <= 4; ++d2) {
      ToricDivisor dv11;
      dv11.coeffs = {d, d2, 0, 0};
      CHECK(chi_of_divisor(p11, dv11, 32) == (d + 1) * (d2 + 1));
    }
  }
}

TEST_CASE("divisor chis on the full fan") {
  const Fan& pi = pi_fan();
  HoloChiResult r = koszul_chi_W0(pi, 64, 4);
  CHECK(r.chi_O == 1);
  CHECK(r.chi_mL1 == 0);
  CHECK(r.chi_mL2 == 0);
  CHECK(r.chi_mL1mL2 == 1);
  CHECK(r.chi_W0 == 2);

  SUBCASE("guard doubling is stable") {
    ToricDivisor l1 = divisor_L1(pi);
    ToricDivisor ml1;
    ml1.coeffs.assign(pi.rays.size(), 0);
    for (size_t i = 0; i < pi.rays.size(); ++i) ml1.coeffs[i] = -l1.coeffs[i];
    CHECK(chi_of_divisor(pi, ml1, 128, 4) == 0);
  }
}
