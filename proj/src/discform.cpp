#include "vvmf/discform.hpp"

#include <string>

#include "vvmf/errors.hpp"

namespace vvmf {

Rational qvalue(i64 level, i64 gamma) {
  const i64 g = mod(gamma, 2 * level);
  return Rational(mod(g * g, 4 * level), 4 * level);
}

bool is_exact_divisor(i64 level, i64 c) {
  return c > 0 && level % c == 0 && gcd(c, level / c) == 1;
}

std::vector<i64> exact_divisors(i64 level) {
  std::vector<i64> out;
  for (i64 c : divisors(level))
    if (is_exact_divisor(level, c)) out.push_back(c);
  return out;
}

i64 atkin_lehner(i64 level, i64 c, i64 gamma) {
  if (!is_exact_divisor(level, c))
    throw ArgumentError("atkin_lehner: " + std::to_string(c) + " is not an exact divisor of " +
                        std::to_string(level));
  // x = gamma + (2N/c) t satisfies the second congruence for every t; the
  // first one reduces to (N/c) t = -gamma (mod c), solvable since
  // gcd(c, N/c) = 1.
  const i64 cofactor = level / c;
  const i64 t = mod(-gamma * inverse_mod(cofactor, c), c);
  return mod(gamma + 2 * cofactor * t, 2 * level);
}

}  // namespace vvmf
