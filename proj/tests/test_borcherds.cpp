#include <doctest.h>

#include "oracles.hpp"
#include "vvmf/borcherds.hpp"
#include "vvmf/discform.hpp"
#include "vvmf/errors.hpp"
#include "vvmf/heckeops.hpp"

using namespace vvmf;

namespace {

// eta(d z) eta(e z) from two direct Euler products.
std::vector<i64> eta_pair_oracle(i64 d, i64 e, i64 len) {
  const auto a = oracle::euler_product(d, len);
  const auto b = oracle::euler_product(e, len);
  std::vector<i64> out(static_cast<std::size_t>(len), 0);
  for (i64 i = 0; i < len; ++i)
    for (i64 j = 0; i + j < len; ++j) out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace

TEST_CASE("theta_1 gives eta squared") {
  const i64 prec = 60;
  const auto r = borcherds_product(theta_series(1, (prec - 1) * (prec - 1)), prec);
  CHECK(r.weight == 1);
  CHECK(r.weyl == Rational(1, 12));
  CHECK(r.expansion.trunc() == Rational(1, 12) + prec);
  CHECK(r.exponents.size() == static_cast<std::size_t>(prec - 1));
  for (const auto& [n, e] : r.exponents) CHECK(e == 2);
  const auto expected = eta_pair_oracle(1, 1, prec);
  for (i64 j = 0; j < prec; ++j) CHECK(r.expansion.coeff(Rational(1, 12) + j) == expected[static_cast<std::size_t>(j)]);
}

TEST_CASE("eta identities against direct products") {
  for (i64 level : {1, 2, 6, 10, 12, 30}) {
    const i64 prec = 50;
    for (i64 c : exact_divisors(level)) {
      const auto f = apply_aut(theta_series(level, (prec - 1) * (prec - 1)), c);
      const Rational weyl(c + level / c, 24);
      CHECK(weyl_vector(f) == weyl);
      const auto r = borcherds_product(f, prec);
      const auto expected = eta_pair_oracle(c, level / c, prec);
      for (i64 j = 0; j < prec; ++j) REQUIRE(r.expansion.coeff(weyl + j) == expected[static_cast<std::size_t>(j)]);
      CHECK(verify_eta_identity(level, c, prec).holds);
    }
  }
}

TEST_CASE("fractional exponents") {
  // (1/3) theta_1 has exponents 2/3 and product eta^(2/3); its cube is eta^2.
  const i64 prec = 40;
  const auto f = Rational(1, 3) * theta_series(1, (prec - 1) * (prec - 1));
  const auto r = borcherds_product(f, Rational(1, 36), prec);
  CHECK(r.weight == Rational(1, 3));
  CHECK(r.exponents.at(5) == Rational(2, 3));
  const auto cube = r.expansion * r.expansion * r.expansion;
  CHECK(cube.trunc() == Rational(1, 12) + prec);
  const auto expected = eta_pair_oracle(1, 1, prec);
  for (i64 j = 0; j < prec; ++j) CHECK(cube.coeff(Rational(1, 12) + j) == expected[static_cast<std::size_t>(j)]);
}

TEST_CASE("negative exponents divide") {
  const i64 prec = 30;
  const auto f = Rational(-1) * theta_series(1, (prec - 1) * (prec - 1));
  const auto r = borcherds_product(f, Rational(-1, 12), prec);
  const auto eta2 = eta_product(1, 1, prec);
  const auto one = r.expansion * eta2;
  CHECK(agree(one, FracSeries::constant(Rational(1))));
}

TEST_CASE("basis products and U_d substitution") {
  for (i64 level : {4, 8, 9, 12, 18}) {
    const i64 prec = 40;
    for (i64 d : divisor_classes(level)) {
      CHECK(verify_basis_product(level, d, prec).holds);
      const auto f = basis_element(level, d, (prec - 1) * (prec - 1));
      const Rational weyl(d + level / d, 24);
      CHECK(weyl_vector(f) == weyl);
      for (i64 u : {2, 3}) {
        const auto lhs = borcherds_product(level_u(f, u), u * weyl, prec).expansion;
        const auto rhs = substitute_power(borcherds_product(f, weyl, (prec + u - 1) / u).expansion, u);
        CHECK(agree(lhs, rhs));
      }
    }
  }
}

TEST_CASE("Weyl vector is linear in the theta basis") {
  const auto basis = basis_m_half(12, 48);
  const auto f = combine(basis, {Rational(2), Rational(-1, 2), Rational(3)});
  CHECK(weyl_vector(f) == 2 * Rational(13, 24) - Rational(1, 2) * Rational(8, 24) + 3 * Rational(7, 24));
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(exponent_table(theta_series(1, 99), 10), TruncationError);
  CHECK_NOTHROW(exponent_table(theta_series(1, 100), 10));
  CHECK_THROWS_AS(borcherds_product(theta_series(1, 10), Rational(0), 20), TruncationError);
  CHECK_THROWS_AS(borcherds_product(theta_series(1, 10), Rational(0), 0), ArgumentError);
  CHECK_THROWS_AS(borcherds_product(random_supported(3, kThreeHalves, Rep::Dual, 1, 100), Rational(0), 5),
                  ArgumentError);
  CHECK_THROWS_AS(weyl_vector(random_supported(3, kHalf, Rep::Rho, 1, 40)), InconsistentSystem);
  CHECK_THROWS_AS(eta_product(12, 5, 10), ArgumentError);
  CHECK_THROWS_AS(verify_eta_identity(12, 2, 10), ArgumentError);
}

TEST_CASE("mismatch reports carry a witness") {
  auto f = theta_series(1, 81);
  f.holo[Slot{16, 0}] += Rational(1);  // exponent at n = 4 becomes 3
  const auto r = borcherds_product(f, Rational(1, 12), 10);
  const auto eta = eta_product(1, 1, 10);
  const auto at = first_mismatch(eta, r.expansion);
  REQUIRE(at);
  CHECK(*at == Rational(1, 12) + 4);
}
