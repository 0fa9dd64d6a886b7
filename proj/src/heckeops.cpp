#include "vvmf/heckeops.hpp"

#include <string>

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

void require_hecke_prime(i64 level, i64 p) {
  if (!is_prime(p)) throw ArgumentError("T_p: " + std::to_string(p) + " is not prime");
  if (gcd(p, 2 * level) != 1)
    throw ArgumentError("T_p: p = " + std::to_string(p) + " divides 2N = " +
                        std::to_string(2 * level));
}

// out(n, g) = w_up a(p^2 n, p g) + w_mid (s n / p) a(n, g) + w_down a(n/p^2, g/p),
// computed by pushing each stored coefficient forward.
CoeffTable hecke_table(const CoeffTable& t, i64 level, int s, i64 p, const Rational& w_up,
                       const Rational& w_mid, const Rational& w_down, i64 out_trunc) {
  const i64 two_n = 2 * level;
  const i64 p2 = p * p;
  const i64 p_inv = inverse_mod(p, two_n);
  CoeffTable out;
  for (const auto& [slot, a] : t) {
    const auto [n, g] = slot;
    if (n % p2 == 0 && std::abs(n / p2) <= out_trunc)
      accumulate(out, level, n / p2, g * p_inv, w_up * a);
    if (std::abs(n) <= out_trunc) {
      if (const int chi = kronecker(s * n, p); chi != 0)
        accumulate(out, level, n, g, chi * w_mid * a);
    }
    if (std::abs(n) * p2 <= out_trunc) accumulate(out, level, n * p2, g * p, w_down * a);
  }
  return out;
}

CoeffTable u_table(const CoeffTable& t, i64 level, i64 d) {
  const i64 out_level = level * d * d;
  CoeffTable out;
  for (const auto& [slot, a] : t)
    for (i64 lift = 0; lift < d; ++lift)
      accumulate(out, out_level, d * d * slot.n, d * (slot.gamma + 2 * level * lift), a);
  return out;
}

// Sum over a | gcd((g^2 - s n)/4M, g, l) of weight(a) * src(n/a^2, g/a), M = N l.
// Targets with |n| > bound are dropped.
template <class WeightFn>
CoeffTable v_table(const CoeffTable& t, i64 level, int s, i64 l, i64 bound, WeightFn weight) {
  const i64 out_level = level * l;
  const i64 two_m = 2 * out_level;
  const i64 four_m = 4 * out_level;
  CoeffTable out;
  for (i64 a : divisors(l)) {
    const Rational w = weight(a);
    for (const auto& [slot, coeff] : t) {
      const i64 n = a * a * slot.n;
      if (std::abs(n) > bound) continue;
      for (i64 lift = 0; lift < l / a; ++lift) {
        const i64 g = mod(a * (slot.gamma + 2 * level * lift), two_m);
        const i64 numer = g * g - s * n;
        if (mod(numer, four_m) != 0) continue;
        if ((numer / four_m) % a != 0 || g % a != 0) continue;
        accumulate(out, out_level, n, g, w * coeff);
      }
    }
  }
  return out;
}

}  // namespace

VVExpansion hecke_tp(const VVExpansion& f, i64 p) {
  require_hecke_prime(f.level, p);
  const int twice_k = f.weight.twice();
  const Rational w_mid = pow(Rational(p), (twice_k - 3) / 2);
  const Rational w_down = pow(Rational(p), twice_k - 2);
  const i64 out_trunc = f.trunc / (p * p);
  const int s = sign(f.rep);
  return VVExpansion{f.level, f.weight, f.rep,
                     hecke_table(f.holo, f.level, s, p, Rational(1), w_mid, w_down, out_trunc),
                     hecke_table(f.nonholo, f.level, s, p, Rational(1), w_mid, w_down, out_trunc),
                     out_trunc};
}

VVExpansion level_u(const VVExpansion& f, i64 d) {
  if (d < 1) throw ArgumentError("U_d: d must be positive");
  return VVExpansion{f.level * d * d, f.weight, f.rep, u_table(f.holo, f.level, d),
                     u_table(f.nonholo, f.level, d), f.trunc * d * d};
}

VVExpansion level_v(const VVExpansion& f, i64 l) {
  if (l < 1) throw ArgumentError("V_l: l must be positive");
  const int e = (f.weight.twice() - 1) / 2;  // k - 1/2
  auto weight = [e](i64 a) { return pow(Rational(a), e); };
  const int s = sign(f.rep);
  return VVExpansion{f.level * l, f.weight, f.rep, v_table(f.holo, f.level, s, l, f.trunc, weight),
                     v_table(f.nonholo, f.level, s, l, f.trunc, weight), f.trunc};
}

XiImage xi_tp(const XiImage& x, i64 p) {
  require_hecke_prime(x.level, p);
  const int twice_w = x.weight.twice();
  const Rational w_up = pow(Rational(p), twice_w - 2);
  const Rational w_mid = pow(Rational(p), (twice_w - 3) / 2);
  const i64 out_trunc = x.trunc / (p * p);
  return XiImage{x.level, x.weight, x.rep,
                 hecke_table(x.coeffs, x.level, sign(x.rep), p, w_up, w_mid, Rational(1), out_trunc),
                 out_trunc};
}

XiImage xi_u(const XiImage& x, i64 d) {
  if (d < 1) throw ArgumentError("U_d: d must be positive");
  return XiImage{x.level * d * d, x.weight, x.rep, u_table(x.coeffs, x.level, d), x.trunc * d * d};
}

XiImage xi_v(const XiImage& x, i64 l) {
  if (l < 1) throw ArgumentError("V_l: l must be positive");
  const int e = (3 - x.weight.twice()) / 2;  // 3/2 - w
  auto weight = [e](i64 a) { return pow(Rational(a), e); };
  return XiImage{x.level * l, x.weight, x.rep, v_table(x.coeffs, x.level, sign(x.rep), l, x.trunc, weight),
                 x.trunc};
}

}  // namespace vvmf
