#include <doctest.h>

#include "oracles.hpp"
#include "vvmf/errors.hpp"
#include "vvmf/heckeops.hpp"
#include "vvmf/vvforms.hpp"

using namespace vvmf;

namespace {

// Pull-back evaluation of each operator straight from its coefficient
// formula, one output slot at a time.

CoeffTable hecke_oracle(const CoeffTable& t, i64 level, Weight w, Rep rep, i64 p, i64 out_trunc, bool holo) {
  CoeffTable out;
  const i64 two_n = 2 * level;
  const Rational mid = pow(Rational(p), (w.twice() - 3) / 2);
  const Rational down = pow(Rational(p), w.twice() - 2);
  const i64 p_inv = inverse_mod(p, two_n);
  for (i64 n = -out_trunc; n <= (holo ? out_trunc : -1); ++n)
    for (i64 g = 0; g < two_n; ++g) {
      Rational v = lookup(t, p * p * n, mod(p * g, two_n));
      v += mid * oracle::kronecker(sign(rep) * n, p) * lookup(t, n, g);
      if (n % (p * p) == 0) v += down * lookup(t, n / (p * p), mod(g * p_inv, two_n));
      if (!v.is_zero()) out[Slot{n, g}] = v;
    }
  return out;
}

CoeffTable u_oracle(const CoeffTable& t, i64 level, i64 d, i64 out_trunc, bool holo) {
  CoeffTable out;
  const i64 m = level * d * d;
  for (i64 n = -out_trunc; n <= (holo ? out_trunc : -1); ++n)
    for (i64 g = 0; g < 2 * m; ++g) {
      if (n % (d * d) != 0 || g % d != 0) continue;
      const Rational v = lookup(t, n / (d * d), mod(g / d, 2 * level));
      if (!v.is_zero()) out[Slot{n, g}] = v;
    }
  return out;
}

CoeffTable v_oracle(const CoeffTable& t, i64 level, Weight w, Rep rep, i64 l, i64 out_trunc, bool holo) {
  CoeffTable out;
  const i64 m = level * l;
  for (i64 n = -out_trunc; n <= (holo ? out_trunc : -1); ++n)
    for (i64 g = 0; g < 2 * m; ++g) {
      const i64 numer = g * g - sign(rep) * n;
      if (mod(numer, 4 * m) != 0) continue;
      Rational v;
      for (i64 a = 1; a <= l; ++a) {
        if (l % a != 0 || g % a != 0 || (numer / (4 * m)) % a != 0 || n % (a * a) != 0) continue;
        v += pow(Rational(a), (w.twice() - 1) / 2) * lookup(t, n / (a * a), mod(g / a, 2 * level));
      }
      if (!v.is_zero()) out[Slot{n, g}] = v;
    }
  return out;
}

std::vector<std::pair<Weight, Rep>> kinds() {
  return {{kHalf, Rep::Rho}, {kThreeHalves, Rep::Dual}, {kThreeHalves, Rep::Rho}, {kHalf, Rep::Dual}};
}

}  // namespace

TEST_CASE("T_p matches its coefficient formula") {
  for (i64 level : {1, 2, 5, 6, 7, 12})
    for (auto [w, rep] : kinds())
      for (i64 p : {3, 5, 7, 11}) {
        if (gcd(p, 2 * level) != 1) continue;
        const auto f = random_supported(level, w, rep, static_cast<std::uint64_t>(level * p), 2 * p * p);
        const auto g = hecke_tp(f, p);
        REQUIRE(g.trunc == 2);
        REQUIRE_FALSE(check_invariants(g));
        CHECK(g.holo == hecke_oracle(f.holo, level, w, rep, p, g.trunc, true));
        CHECK(g.nonholo == hecke_oracle(f.nonholo, level, w, rep, p, g.trunc, false));
      }
}

TEST_CASE("U_d matches its coefficient formula") {
  for (i64 level : {1, 3, 4, 10})
    for (auto [w, rep] : kinds())
      for (i64 d : {1, 2, 3, 5}) {
        const auto f = random_supported(level, w, rep, static_cast<std::uint64_t>(level + 31 * d), 12);
        const auto g = level_u(f, d);
        REQUIRE(g.level == level * d * d);
        REQUIRE(g.trunc == 12 * d * d);
        REQUIRE_FALSE(check_invariants(g));
        CHECK(g.holo == u_oracle(f.holo, level, d, g.trunc, true));
        CHECK(g.nonholo == u_oracle(f.nonholo, level, d, g.trunc, false));
      }
}

TEST_CASE("V_l matches its coefficient formula") {
  for (i64 level : {1, 2, 3, 6})
    for (auto [w, rep] : kinds())
      for (i64 l : {1, 2, 3, 4, 6}) {
        const auto f = random_supported(level, w, rep, static_cast<std::uint64_t>(level * 17 + l), 30);
        const auto g = level_v(f, l);
        REQUIRE(g.level == level * l);
        REQUIRE(g.trunc == 30);
        REQUIRE_FALSE(check_invariants(g));
        CHECK(g.holo == v_oracle(f.holo, level, w, rep, l, g.trunc, true));
        CHECK(g.nonholo == v_oracle(f.nonholo, level, w, rep, l, g.trunc, false));
      }
}

TEST_CASE("theta_1 is a T_p eigenform with eigenvalue 1 + 1/p") {
  // r(n) = #{m : m^2 = n}; the formula r(p^2 n) + (n/p) r(n)/p + r(n/p^2)/p.
  for (i64 p : {3, 5, 7, 11, 13}) {
    const i64 bound = 200;
    const auto image = hecke_tp(theta_series(1, bound * p * p), p);
    REQUIRE(image.trunc == bound);
    for (i64 n = 0; n <= bound; ++n) {
      const Rational expected = Rational(p + 1, p) * oracle::theta_count(1, n, n % 2);
      REQUIRE(image.holo_at(n, n % 2) == expected);
    }
  }
}

TEST_CASE("theta_1 under V_l") {
  // Level 1 to level 2: gamma = 2 at level 1 is gamma = 0 again, so the
  // (4, 2) slot collects theta(4, 0) + theta(1, 1) = 2 + 2.
  const auto v2 = level_v(theta_series(1, 100), 2);
  CHECK(v2.holo_at(4, 2) == 4);
  CHECK_FALSE(first_difference(v2, Rational(2) * theta_series(2, 100)));
  for (i64 l = 1; l <= 12; ++l) {
    const auto image = level_v(theta_series(1, 40 * l), l);
    const auto basis = basis_m_half(l, 40 * l);
    CHECK_NOTHROW(decompose(image, basis));
  }
}

TEST_CASE("operators preserve level-independent invariants under composition") {
  const auto f = random_supported(3, kHalf, Rep::Rho, 77, 2 * 49);
  const auto g = level_v(level_u(hecke_tp(f, 5), 2), 3);
  CHECK(g.level == 36);
  CHECK_FALSE(check_invariants(g));
}

TEST_CASE("argument errors") {
  const auto f = theta_series(6, 50);
  CHECK_THROWS_AS(hecke_tp(f, 3), ArgumentError);  // 3 | 2N
  CHECK_THROWS_AS(hecke_tp(f, 2), ArgumentError);
  CHECK_THROWS_AS(hecke_tp(f, 25), ArgumentError);  // not prime
  CHECK_THROWS_AS(level_u(f, 0), ArgumentError);
  CHECK_THROWS_AS(level_v(f, 0), ArgumentError);
  const auto x = formal_xi(random_supported(6, kHalf, Rep::Rho, 1, 20));
  CHECK_THROWS_AS(xi_tp(x, 3), ArgumentError);
  CHECK_THROWS_AS(xi_u(x, -1), ArgumentError);
  CHECK_THROWS_AS(xi_v(x, 0), ArgumentError);
}

TEST_CASE("xi relations detect a wrong normalization") {
  // Without the factor p^(2k-2) the T_p relation must fail on a generic input.
  const auto f = random_supported(5, kHalf, Rep::Rho, 3, 12 * 49);
  const auto xf = formal_xi(f);
  REQUIRE_FALSE(formal_xi(hecke_tp(f, 7)).coeffs.empty());
  CHECK_FALSE(first_difference(formal_xi(hecke_tp(f, 7)), Rational(1, 7) * xi_tp(xf, 7)));
  CHECK(first_difference(formal_xi(hecke_tp(f, 7)), xi_tp(xf, 7)));
  // V_l weights differ on the xi side: a^(k - 1/2) versus a^(3/2 - w).
  const auto small = truncated(f, 24);
  CHECK_FALSE(first_difference(formal_xi(level_v(small, 4)), xi_v(formal_xi(small), 4)));
  CHECK_FALSE(first_difference(formal_xi(level_u(small, 3)), xi_u(formal_xi(small), 3)));
}
