#include "vvmf/arith.hpp"
#include "vvmf/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace vvmf {

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm(i64 a, i64 b) { return std::lcm(a, b); }

i64 inverse_mod(i64 a, i64 m) {
  if (m == 1) return 0;
  i64 old_r = mod(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::domain_error("inverse_mod: not invertible");
  return mod(old_s, m);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> small, large;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

i64 euler_phi(i64 n) {
  i64 result = n;
  for (i64 p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

i64 sigma0(i64 n) { return static_cast<i64>(divisors(n).size()); }

i64 gamma0_index(i64 n) {
  i64 result = n;
  for (i64 p : prime_factors(n)) result = result / p * (p + 1);
  return result;
}

int kronecker(i64 a, i64 n) {
  if (n <= 0) throw std::invalid_argument("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const i64 r8 = mod(a, 8);
    if (r8 == 3 || r8 == 5) result = -result;
  }
  // Jacobi symbol for odd n.
  a = mod(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const i64 r8 = n % 8;
      if (r8 == 3 || r8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// ---------------------------------------------------------------------------
// Rational helpers

Integer floor(const Rational& x) {
  Integer q = num(x) / den(x);  // truncates toward zero
  if (x < 0 && q * den(x) != num(x)) q -= 1;
  return q;
}

Rational pow(const Rational& base, std::int64_t exp) {
  if (exp < 0) {
    if (base.is_zero()) throw std::domain_error("pow: zero to a negative power");
    return Rational(1) / pow(base, -exp);
  }
  Rational result(1), b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

std::string to_string(const Rational& x) { return x.str(); }

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed rational: " + std::string(text));
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(parse_int(text.substr(0, slash)), d);
}

std::int64_t to_int64(const Rational& x) {
  if (!is_integral(x)) throw std::domain_error("to_int64: not an integer: " + x.str());
  const Integer n = num(x);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("to_int64: out of range: " + x.str());
  return n.convert_to<std::int64_t>();
}

}  // namespace vvmf
