#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "smncubic/oracle.hpp"
#include "support/rng.hpp"

using namespace smncubic;

TEST_CASE("oracle_roots on constructed cubics") {
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  const OracleResult o1 = oracle_roots(MonicCubic(-6, 11, -6));
  REQUIRE(o1.real_roots.size() == 3);
  CHECK(o1.real_roots[0].value == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(o1.real_roots[1].value == doctest::Approx(2.0).epsilon(1e-11));
  CHECK(o1.real_roots[2].value == doctest::Approx(3.0).epsilon(1e-11));
  CHECK_FALSE(o1.complex_pair.has_value());

  const OracleResult o2 = oracle_roots(MonicCubic(3, 2, -0.25));
  REQUIRE(o2.real_roots.size() == 3);
  CHECK(o2.real_roots[0].value == doctest::Approx(-1.83756543528).epsilon(1e-9));
  CHECK(o2.real_roots[1].value == doctest::Approx(-1.26959443641).epsilon(1e-9));
  CHECK(o2.real_roots[2].value == doctest::Approx(0.107159871689).epsilon(1e-7));

  const OracleResult o3 = oracle_roots(MonicCubic(5, 25.0 / 3.0, 125.0 / 27.0));
  REQUIRE(o3.real_roots.size() == 1);
  CHECK(o3.real_roots[0].multiplicity == 3);
  CHECK(o3.real_roots[0].value == doctest::Approx(-5.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("oracle_roots recovers tangential double roots") {
  // (x-1)^2 (x+2) = x^3 - 3x + 2
  const OracleResult o = oracle_roots(MonicCubic(0, -3, 2));
  REQUIRE(o.real_roots.size() == 2);
  CHECK(o.real_roots[0].value == doctest::Approx(-2.0).epsilon(1e-11));
  CHECK(o.real_roots[0].multiplicity == 1);
  CHECK(o.real_roots[1].value == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(o.real_roots[1].multiplicity == 2);
}

TEST_CASE("cardano_roots closed forms") {
  const OracleResult c1 = cardano_roots(MonicCubic(0, -3, 2));
  REQUIRE(c1.real_roots.size() == 2);
  CHECK(c1.real_roots[0].value == doctest::Approx(-2.0).epsilon(1e-13));
  CHECK(c1.real_roots[1].value == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(c1.real_roots[1].multiplicity == 2);

  const OracleResult c2 = cardano_roots(MonicCubic(-2, 13, -11));
  REQUIRE(c2.real_roots.size() == 1);
  CHECK(c2.real_roots[0].value == doctest::Approx(0.916129643942).epsilon(1e-11));
  REQUIRE(c2.complex_pair.has_value());
  CHECK(c2.complex_pair->re == doctest::Approx(0.541935178029).epsilon(1e-10));
  CHECK(c2.complex_pair->im == doctest::Approx(3.422475785077).epsilon(1e-10));

  const OracleResult c3 = cardano_roots(MonicCubic(-4, 3, -1));
  REQUIRE(c3.real_roots.size() == 1);
  CHECK(c3.real_roots[0].value == doctest::Approx(3.147899035705).epsilon(1e-11));
  REQUIRE(c3.complex_pair.has_value());
  CHECK(c3.complex_pair->re == doctest::Approx(0.426050482148).epsilon(1e-10));
  CHECK(c3.complex_pair->im == doctest::Approx(0.368989407482).epsilon(1e-10));
}

TEST_CASE("cross_check on the worked examples") {
  const CrossCheck k1 = cross_check(MonicCubic(3, 2, -0.25));
  CHECK(k1.count_agreement);
  CHECK(k1.multiplicity_agreement);
  CHECK(k1.max_discrepancy < 1e-8);

  const CrossCheck k8 = cross_check(MonicCubic(1, 2, -3));
  CHECK(k8.count_agreement);
  CHECK(k8.max_discrepancy < 1e-8);

  const CrossCheck k6 = cross_check(MonicCubic(5, 25.0 / 3.0, 125.0 / 27.0));
  CHECK(k6.count_agreement);
  CHECK(k6.multiplicity_agreement);
  CHECK(k6.max_discrepancy < 1e-10);
}

TEST_CASE("oracle and cardano agree over random cubics") {
  testsupport::Rng rng(501);
  for (int i = 0; i < 5000; ++i) {
    const MonicCubic p(rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10));
    const OracleResult o = oracle_roots(p);
    const OracleResult k = cardano_roots(p);
    REQUIRE(o.total_multiplicity() == k.total_multiplicity());
    std::vector<double> ov, kv;
    for (const auto& r : o.real_roots)
      for (int m = 0; m < r.multiplicity; ++m) ov.push_back(r.value);
    for (const auto& r : k.real_roots)
      for (int m = 0; m < r.multiplicity; ++m) kv.push_back(r.value);
    for (std::size_t t = 0; t < ov.size(); ++t) CHECK(std::fabs(ov[t] - kv[t]) < 1e-8);
  }
}

TEST_CASE("oracle roots satisfy the Viete identities") {
  testsupport::Rng rng(502);
  for (int i = 0; i < 3000; ++i) {
    const MonicCubic p(rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10));
    const OracleResult o = oracle_roots(p);
    double e1 = 0.0, e2 = 0.0, e3 = 1.0;
    if (o.total_multiplicity() == 3) {
      double v[3];
      int n = 0;
      for (const auto& r : o.real_roots)
        for (int m = 0; m < r.multiplicity; ++m) v[n++] = r.value;
      e1 = v[0] + v[1] + v[2];
      e2 = v[0] * v[1] + v[0] * v[2] + v[1] * v[2];
      e3 = v[0] * v[1] * v[2];
    } else {
      REQUIRE(o.complex_pair.has_value());
      const double x1 = o.real_roots[0].value;
      const double s = 2.0 * o.complex_pair->re;
      const double q = o.complex_pair->re * o.complex_pair->re +
                       o.complex_pair->im * o.complex_pair->im;
      e1 = x1 + s;
      e2 = x1 * s + q;
      e3 = x1 * q;
    }
    const double scale = std::max({1.0, std::fabs(p.a), std::fabs(p.b), std::fabs(p.c)});
    CHECK(std::fabs(e1 + p.a) <= 1e-8 * scale * 10.0);
    CHECK(std::fabs(e2 - p.b) <= 1e-8 * scale * 100.0);
    CHECK(std::fabs(e3 + p.c) <= 1e-8 * scale * 100.0);
  }
}

TEST_CASE("oracle handles exact envelope hits and the b = a^2/3 family") {
  testsupport::Rng rng(503);
  for (int i = 0; i < 400; ++i) {
    const double a = rng.uniform(-8, 8);
    double b = rng.uniform(-8, std::min(8.0, a * a / 3.0));
    if (a * a - 3.0 * b < 1e-4) continue;
    const Envelope env = envelope(a, b);
    const auto cd = critical_points(MonicCubic(a, b, 0));

    const OracleResult at_c1 = oracle_roots(MonicCubic(a, b, env.c1));
    REQUIRE(at_c1.real_roots.size() == 2);
    CHECK(at_c1.real_roots[1].multiplicity == 2);
    CHECK(std::fabs(at_c1.real_roots[1].value - cd->mu1) < 1e-9 * std::max(1.0, std::fabs(cd->mu1)));

    const OracleResult at_c2 = oracle_roots(MonicCubic(a, b, env.c2));
    REQUIRE(at_c2.real_roots.size() == 2);
    CHECK(at_c2.real_roots[0].multiplicity == 2);
    CHECK(std::fabs(at_c2.real_roots[0].value - cd->mu2) < 1e-9 * std::max(1.0, std::fabs(cd->mu2)));

    const double bc = a * a / 3.0;
    const OracleResult triple = oracle_roots(MonicCubic(a, bc, a * a * a / 27.0));
    REQUIRE(triple.real_roots.size() == 1);
    CHECK(triple.real_roots[0].multiplicity == 3);
  }
}
