#pragma once

#include <map>
#include <vector>

#include "vvmf/arith.hpp"
#include "vvmf/linalg.hpp"
#include "vvmf/rational.hpp"
#include "vvmf/vvforms.hpp"

namespace vvmf {

/// Galois orbit of the cusps a/c of Gamma_0(N) with a fixed denominator c | N.
struct CuspClass {
  i64 c = 1;
  i64 orbit_size = 1;  // phi(gcd(c, N/c))
  i64 conductor = 1;   // gcd(c, N/c); the cusps are defined over Q(zeta_conductor)
  i64 width = 1;       // N / gcd(c^2, N)
};

std::vector<CuspClass> cusp_classes(i64 level);

/// Rational divisor supported on the cusps, constant on each Galois orbit.
struct CuspDivisor {
  i64 level = 1;
  std::map<i64, Rational> ord;  // c -> order; missing classes have order 0

  Rational order(i64 c) const;
  Rational degree() const;
  friend bool operator==(const CuspDivisor& a, const CuspDivisor& b);
};

CuspDivisor operator+(const CuspDivisor& a, const CuspDivisor& b);
CuspDivisor operator*(const Rational& s, const CuspDivisor& d);

/// Order of eta(d z) eta((N/d) z) at the cusps of class c:
///   sum over delta in {d, N/d} of (N/24) gcd(c, delta)^2 / (c delta gcd(c, N/c)).
Rational eta_order(i64 level, i64 d, i64 c);

/// Divisor of eta(d z) eta((N/d) z) on X_0(N).
CuspDivisor eta_divisor(i64 level, i64 d);

/// ord'(c) = ord(N/c).
CuspDivisor fricke_image(const CuspDivisor& d);
bool is_fricke_invariant(const CuspDivisor& d);

/// (sigma_0(N) + [N is a square]) / 2.
i64 cusp_space_dimension(i64 level);

/// Square matrix M with M(i, j) = eta_order(N, d_j, c_i), where d_j runs
/// over divisor_classes(N) and c_i over the cusp-class representatives
/// c <= N/c.
DenseMatrix<Rational> cusp_matching_matrix(i64 level);

/// Class representative d -> coefficient.
using ClassCoefficients = std::map<i64, Rational>;

/// Unique x with sum_d x_d div(eta(dz) eta((N/d)z)) = target. Throws
/// ArgumentError for a target that is not Fricke-invariant.
ClassCoefficients solve_cusp_matching(i64 level, const CuspDivisor& target);

/// sum_d x_d div(eta(dz) eta((N/d)z)).
CuspDivisor divisor_of_combination(i64 level, const ClassCoefficients& x);

/// Weighted count of Gamma_0(N)-classes of positive definite forms
/// [aN, b, c] with b = gamma (mod 2N) and discriminant n < 0, each class
/// weighted by 1 / |stabilizer in PSL_2(Z)|.
Rational heegner_degree(i64 level, i64 n, i64 gamma);

/// Formal combination of Heegner divisors Z(n, gamma).
struct HeegnerDivisor {
  i64 level = 1;
  std::map<Slot, i64> mult;
};

struct HeegnerReport {
  HeegnerDivisor divisor;
  Rational degree;
  /// y = Z - deg(Z) * infinity; infinity is the class c = N.
  CuspDivisor cusp_correction;
};

HeegnerReport heegner_data(i64 level, const std::map<Slot, i64>& principal);

/// Data a harmonic Maass form with the given principal part must carry so
/// that its product has the prescribed divisor. cusp_target is the
/// cuspidal divisor left to be matched by a holomorphic theta correction.
struct Certificate {
  i64 level = 1;
  HeegnerReport heegner;
  ClassCoefficients theta_coefficients;
  Rational weight;  // weight of the product of the holomorphic correction
  Rational weyl;    // its Weyl vector
};

Certificate converse_pipeline(i64 level, const std::map<Slot, i64>& principal,
                              const CuspDivisor& cusp_target);

}  // namespace vvmf
