#pragma once

#include "vvmf/vvforms.hpp"

namespace vvmf {

// Hecke and index-raising operators on vector-valued expansions. Each
// operator acts on the holomorphic and non-holomorphic tables by the same
// coefficient formula. Index divisions that are not exact contribute 0.

/// T_p for a prime p with gcd(p, 2N) = 1:
///   a(p^2 n, p gamma) + p^(k-3/2) (sn/p) a(n, gamma) + p^(2k-2) a(n/p^2, gamma/p)
/// with s the representation sign. Output trunc is floor(trunc / p^2).
VVExpansion hecke_tp(const VVExpansion& f, i64 p);

/// U_d: level N -> N d^2, coefficient a(n/d^2, gamma/d). Output trunc d^2 trunc.
VVExpansion level_u(const VVExpansion& f, i64 d);

/// V_l: level N -> N l, coefficient sum over a | ((gamma^2 - s n)/4Nl, gamma, l)
/// of a^(k-1/2) a(n/a^2, gamma/a). Output trunc unchanged.
VVExpansion level_v(const VVExpansion& f, i64 l);

/// T_p transported to radical-weighted coordinates at weight w:
///   p^(2w-2) r(p^2 m, p gamma) + p^(w-3/2) (s'm/p) r(m, gamma) + r(m/p^2, gamma/p)
/// so that formal_xi(f|T_p) = p^(2k-2) xi_tp(formal_xi(f), p).
XiImage xi_tp(const XiImage& x, i64 p);

/// U_d in radical-weighted coordinates: r(m/d^2, gamma/d).
XiImage xi_u(const XiImage& x, i64 d);

/// V_l in radical-weighted coordinates: sum over the same divisors a of
/// a^(3/2-w) r(m/a^2, gamma/a). The factor l^(k-1) of the analytic
/// relation is absorbed by re-basing sqrt(m/4N) to the output level.
XiImage xi_v(const XiImage& x, i64 l);

}  // namespace vvmf
