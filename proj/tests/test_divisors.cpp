#include <doctest.h>

#include "oracles.hpp"
#include "vvmf/borcherds.hpp"
#include "vvmf/divisors.hpp"
#include "vvmf/errors.hpp"

using namespace vvmf;

TEST_CASE("cusp classes of Gamma_0(12)") {
  const auto cusps = cusp_classes(12);
  REQUIRE(cusps.size() == 6);
  std::vector<i64> widths;
  i64 total = 0;
  for (const auto& c : cusps) {
    widths.push_back(c.width);
    total += c.orbit_size;
  }
  CHECK(widths == std::vector<i64>{12, 3, 4, 3, 1, 1});
  CHECK(total == 6);
  // Widths add up to the index.
  i64 width_sum = 0;
  for (const auto& c : cusps) width_sum += c.orbit_size * c.width;
  CHECK(width_sum == gamma0_index(12));
}

TEST_CASE("cusp count and widths for many levels") {
  for (i64 level = 1; level <= 200; ++level) {
    i64 count = 0, width_sum = 0;
    for (const auto& c : cusp_classes(level)) {
      count += c.orbit_size;
      width_sum += c.orbit_size * c.width;
    }
    // Number of cusps: sum over d | N of phi(gcd(d, N/d)).
    i64 expected = 0;
    for (i64 d = 1; d <= level; ++d)
      if (level % d == 0) {
        const i64 g = oracle::gcd(d, level / d);
        i64 phi = 0;
        for (i64 a = 1; a <= g; ++a) phi += oracle::gcd(a, g) == 1;
        expected += phi;
      }
    REQUIRE(count == expected);
    REQUIRE(width_sum == gamma0_index(level));
  }
  CHECK_THROWS_AS(cusp_classes(0), ArgumentError);
}

TEST_CASE("eta orders at infinity and zero") {
  for (i64 level = 1; level <= 100; ++level)
    for (i64 d : divisors(level)) {
      // Leading q-exponent of eta(dz) eta(Nz/d) at infinity; Fricke swaps 0 and infinity.
      REQUIRE(eta_order(level, d, level) == Rational(d + level / d, 24));
      REQUIRE(eta_order(level, d, 1) == Rational(d + level / d, 24));
      REQUIRE(eta_divisor(level, d).degree() == Rational(gamma0_index(level), 12));
      REQUIRE(is_fricke_invariant(eta_divisor(level, d)));
    }
  CHECK_THROWS_AS(eta_order(12, 5, 1), ArgumentError);
  CHECK_THROWS_AS(eta_order(12, 1, 5), ArgumentError);
}

TEST_CASE("divisor arithmetic") {
  const auto a = eta_divisor(12, 2);
  const auto b = eta_divisor(12, 3);
  const auto sum = a + b;
  for (i64 c : divisors(12)) CHECK(sum.order(c) == a.order(c) + b.order(c));
  CHECK((Rational(0) * a).ord.empty());
  CHECK(Rational(2) * a == a + a);
  CHECK_FALSE(a == b);
  CHECK(fricke_image(fricke_image(a)) == a);
  CHECK_THROWS_AS(a + eta_divisor(6, 1), ArgumentError);
}

TEST_CASE("cusp-space dimension") {
  CHECK(cusp_space_dimension(12) == 3);
  CHECK(cusp_space_dimension(1) == 1);
  CHECK(cusp_space_dimension(4) == 2);
  CHECK(cusp_space_dimension(36) == 5);
  for (i64 level = 1; level <= 200; ++level) {
    const auto m = cusp_matching_matrix(level);
    REQUIRE(m.rows() == cusp_space_dimension(level));
    REQUIRE(m.cols() == cusp_space_dimension(level));
    REQUIRE(exact_rank(m) == m.rows());
  }
}

TEST_CASE("cusp matching round trips") {
  for (i64 level = 1; level <= 120; ++level) {
    ClassCoefficients x;
    i64 k = 1;
    for (i64 d : divisor_classes(level)) x[d] = Rational(k * 3 % 7 - 3, k % 4 + 1), ++k;
    const auto target = divisor_of_combination(level, x);
    REQUIRE(is_fricke_invariant(target));
    const auto solved = solve_cusp_matching(level, target);
    for (const auto& [d, v] : x) REQUIRE(solved.at(d) == v);
  }
}

TEST_CASE("cusp matching rejects bad targets") {
  CuspDivisor lopsided{12, {{1, Rational(1)}}};
  CHECK_THROWS_AS(solve_cusp_matching(12, lopsided), ArgumentError);
  CuspDivisor stray{12, {{5, Rational(1)}}};
  CHECK_THROWS_AS(solve_cusp_matching(12, stray), ArgumentError);
  CHECK_THROWS_AS(solve_cusp_matching(6, eta_divisor(12, 1)), ArgumentError);
  // The zero divisor is matched by x = 0.
  for (const auto& [d, v] : solve_cusp_matching(12, CuspDivisor{12, {}})) CHECK(v == 0);
}

TEST_CASE("Heegner degrees at level one are Hurwitz class numbers") {
  CHECK(heegner_degree(1, -3, 1) == Rational(1, 3));
  CHECK(heegner_degree(1, -4, 0) == Rational(1, 2));
  CHECK(heegner_degree(1, -7, 1) == 1);
  CHECK(heegner_degree(1, -8, 0) == 1);
  CHECK(heegner_degree(1, -11, 1) == 1);
  CHECK(heegner_degree(1, -12, 0) == Rational(4, 3));
  for (i64 d = 3; d <= 400; ++d) {
    if (d % 4 == 1 || d % 4 == 2) continue;
    REQUIRE(heegner_degree(1, -d, d % 2) == oracle::hurwitz(d));
  }
}

TEST_CASE("Heegner degrees for fundamental discriminants prime to N") {
  // One Gamma_0(N)-class per class of forms for each admissible root gamma.
  for (i64 level = 1; level <= 20; ++level)
    for (i64 d = -3; d >= -150; --d) {
      if (!oracle::is_fundamental(d) || oracle::gcd(d, level) != 1) continue;
      const Rational h = oracle::weighted_class_number_fundamental(d);
      for (i64 gamma = 0; gamma < 2 * level; ++gamma)
        if (is_supported(level, Rep::Rho, d, gamma)) REQUIRE(heegner_degree(level, d, gamma) == h);
    }
}

TEST_CASE("Heegner degrees are symmetric in gamma") {
  for (i64 level = 1; level <= 12; ++level)
    for (i64 n = -1; n >= -80; --n)
      for (i64 gamma = 0; gamma < 2 * level; ++gamma)
        if (is_supported(level, Rep::Rho, n, gamma))
          REQUIRE(heegner_degree(level, n, gamma) == heegner_degree(level, n, -gamma));
}

TEST_CASE("Heegner degree error paths") {
  CHECK_THROWS_AS(heegner_degree(5, 0, 0), ArgumentError);
  CHECK_THROWS_AS(heegner_degree(5, 4, 2), ArgumentError);
  CHECK_THROWS_AS(heegner_degree(5, -3, 0), ArgumentError);  // -3 is not 0 mod 20
  CHECK_THROWS_AS(heegner_degree(0, -3, 1), ArgumentError);
}

TEST_CASE("Heegner report and cusp correction") {
  const std::map<Slot, i64> principal{{Slot{-8, 2}, 2}, {Slot{-8, -2}, 1}, {Slot{-11, 1}, -1}};
  const auto report = heegner_data(3, principal);
  const Rational expected = 2 * heegner_degree(3, -8, 2) + heegner_degree(3, -8, 4) - heegner_degree(3, -11, 1);
  CHECK(report.degree == expected);
  CHECK(report.divisor.mult.at(Slot{-8, 2}) == 2);
  CHECK(report.divisor.mult.at(Slot{-8, 4}) == 1);
  CHECK(report.cusp_correction.order(3) == -expected);
  CHECK(report.degree + report.cusp_correction.degree() == 0);
}

TEST_CASE("converse pipeline certificate") {
  const i64 level = 12;
  const ClassCoefficients x{{1, Rational(1)}, {2, Rational(-2)}, {3, Rational(1, 2)}};
  const auto cert = converse_pipeline(level, {{Slot{-47, 1}, 1}}, divisor_of_combination(level, x));
  CHECK(cert.theta_coefficients == x);
  // Every basis element has constant term 1, so the weight is the sum of the coefficients.
  CHECK(cert.weight == Rational(-1, 2));
  CHECK(cert.weyl == Rational(13, 24) - 2 * Rational(8, 24) + Rational(1, 2) * Rational(7, 24));
  CHECK(cert.heegner.degree == heegner_degree(level, -47, 1));
}
