#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vvmf/arith.hpp"
#include "vvmf/rational.hpp"

namespace vvmf {

/// Weil representation rho_N (+1) or its dual (-1).
enum class Rep : int { Rho = 1, Dual = -1 };

constexpr int sign(Rep r) { return static_cast<int>(r); }
constexpr Rep dual(Rep r) { return r == Rep::Rho ? Rep::Dual : Rep::Rho; }

/// Half-integral weight k, stored as the odd integer 2k.
class Weight {
 public:
  constexpr explicit Weight(int twice) : twice_(twice) {}
  static Weight parse(const std::string& text);

  constexpr int twice() const { return twice_; }
  Rational value() const { return Rational(twice_, 2); }

  /// 2 - k.
  constexpr Weight complement() const { return Weight(4 - twice_); }

  /// Sign relating the coefficients at gamma and -gamma.
  constexpr int symmetry_sign(Rep rep) const {
    // (-1)^(k - 1/2) for rho, (-1)^(k + 1/2) for the dual.
    const int e = rep == Rep::Rho ? (twice_ - 1) / 2 : (twice_ + 1) / 2;
    return (e % 2 == 0) ? 1 : -1;
  }

  friend constexpr bool operator==(Weight, Weight) = default;

 private:
  int twice_;
};

inline constexpr Weight kHalf{1};
inline constexpr Weight kThreeHalves{3};

/// Fourier index (n, gamma) of the term e(n tau / 4N) e_gamma.
struct Slot {
  i64 n;
  i64 gamma;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

using CoeffTable = std::map<Slot, Rational>;

/// Adds value at (n, gamma mod 2N), dropping the entry if it cancels.
void accumulate(CoeffTable& table, i64 level, i64 n, i64 gamma, const Rational& value);

/// Coefficient lookup with zero default.
Rational lookup(const CoeffTable& table, i64 n, i64 gamma);

/// Vector-valued Fourier expansion of a harmonic Maass form: holomorphic
/// coefficients a+(n, gamma) and non-holomorphic coefficients a-(n, gamma),
/// n < 0. Coefficients with |n| > trunc are unknown and not stored.
struct VVExpansion {
  i64 level = 1;
  Weight weight = kHalf;
  Rep rep = Rep::Rho;
  CoeffTable holo;
  CoeffTable nonholo;
  i64 trunc = 0;

  Rational holo_at(i64 n, i64 gamma) const;
  Rational nonholo_at(i64 n, i64 gamma) const;
};

/// Formal image under xi_k in radical-weighted coordinates: r(m, gamma) is
/// the xi-coefficient at index m divided by the implicit factor
/// const * (m / 4N)^(1 - k), which equals a-(-m, gamma) of the source.
struct XiImage {
  i64 level = 1;
  Weight weight = kThreeHalves;
  Rep rep = Rep::Dual;
  CoeffTable coeffs;
  i64 trunc = 0;

  Rational at(i64 m, i64 gamma) const;
};

/// n = sign(rep) * gamma^2 (mod 4N).
bool is_supported(i64 level, Rep rep, i64 n, i64 gamma);

/// Human-readable reason for the first violated invariant.
std::optional<std::string> check_invariants(const VVExpansion& f);
std::optional<std::string> check_invariants(const XiImage& x);

// Vector-space structure. Operands must share level, weight and rep;
// the result carries the smaller truncation.
VVExpansion operator+(const VVExpansion& a, const VVExpansion& b);
VVExpansion operator*(const Rational& c, const VVExpansion& f);
inline VVExpansion operator-(const VVExpansion& a, const VVExpansion& b) {
  return a + Rational(-1) * b;
}
XiImage operator+(const XiImage& a, const XiImage& b);
XiImage operator*(const Rational& c, const XiImage& x);

/// Drops coefficients with |n| > bound and lowers trunc accordingly.
VVExpansion truncated(const VVExpansion& f, i64 bound);
XiImage truncated(const XiImage& x, i64 bound);

/// First disagreement on the common reliable range.
struct Mismatch {
  std::string where;  // "holo", "nonholo", "coeffs" or "metadata"
  Slot slot{0, 0};
  Rational lhs;
  Rational rhs;
  std::string describe() const;
};
std::optional<Mismatch> first_difference(const VVExpansion& a, const VVExpansion& b);
std::optional<Mismatch> first_difference(const XiImage& a, const XiImage& b);

/// theta_{1/2,N}: holo(n, gamma) = #{m : m = gamma (2N), m^2 = n}.
VVExpansion theta_series(i64 level, i64 trunc);

/// Re-indexes gamma -> sigma_c(gamma).
VVExpansion apply_aut(const VVExpansion& f, i64 c);
XiImage apply_aut(const XiImage& x, i64 c);

/// Representatives d <= N/d of the divisor classes d ~ N/d, ascending.
std::vector<i64> divisor_classes(i64 level);

/// Unary theta basis of M_{1/2,rho_N}, one element per divisor class,
/// in the order of divisor_classes().
std::vector<VVExpansion> basis_m_half(i64 level, i64 trunc);

/// The basis element attached to the class of d.
VVExpansion basis_element(i64 level, i64 d, i64 trunc);

/// Coordinates of f in the given basis, solved on slots n <= 4N and
/// checked on every slot of the common truncation. Throws
/// InconsistentSystem when f is not in the span.
std::vector<Rational> decompose(const VVExpansion& f, const std::vector<VVExpansion>& basis);

/// sum_i coords[i] * basis[i].
VVExpansion combine(const std::vector<VVExpansion>& basis, const std::vector<Rational>& coords);

/// r(m, gamma) = nonholo(-m, gamma).
XiImage formal_xi(const VVExpansion& f);

/// Pseudo-random expansion obeying the support and symmetry rules exactly,
/// with |n| <= trunc; deterministic in seed.
VVExpansion random_supported(i64 level, Weight weight, Rep rep, std::uint64_t seed, i64 trunc);

}  // namespace vvmf
