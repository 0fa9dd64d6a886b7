#pragma once

#include <vector>

#include "vvmf/arith.hpp"
#include "vvmf/rational.hpp"

namespace vvmf {

/// Q(gamma) = gamma^2 / 4N reduced into [0, 1), for the discriminant form
/// Z/2NZ.
Rational qvalue(i64 level, i64 gamma);

/// c | N and gcd(c, N/c) = 1.
bool is_exact_divisor(i64 level, i64 c);

/// All c || N, ascending.
std::vector<i64> exact_divisors(i64 level);

/// Atkin-Lehner automorphism sigma_c of Z/2NZ: the residue congruent to
/// -gamma mod 2c and to gamma mod 2N/c. Throws ArgumentError unless c || N.
i64 atkin_lehner(i64 level, i64 c, i64 gamma);

}  // namespace vvmf
