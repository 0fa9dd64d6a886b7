#pragma once

#include <cstdint>
#include <vector>

namespace vvmf {

using i64 = std::int64_t;

/// Non-negative residue of a modulo m (m > 0).
constexpr i64 mod(i64 a, i64 m) {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

/// gcd with the convention gcd(0, x) = |x|.
i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);

/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
i64 inverse_mod(i64 a, i64 m);

bool is_prime(i64 n);
bool is_square(i64 n);

/// Sorted positive divisors of n >= 1.
std::vector<i64> divisors(i64 n);

/// Distinct prime factors of n >= 1, ascending.
std::vector<i64> prime_factors(i64 n);

i64 euler_phi(i64 n);
i64 sigma0(i64 n);

/// Index of Gamma_0(N) in SL_2(Z): N * prod_{p | N} (1 + 1/p).
i64 gamma0_index(i64 n);

/// Kronecker symbol (a / n) for n > 0.
int kronecker(i64 a, i64 n);

}  // namespace vvmf
