#include "vvmf/divisors.hpp"

#include <set>
#include <string>
#include <utility>

#include "vvmf/borcherds.hpp"
#include "vvmf/errors.hpp"

namespace vvmf {

// ---------------------------------------------------------------------------
// Cusps

std::vector<CuspClass> cusp_classes(i64 level) {
  if (level < 1) throw ArgumentError("cusp_classes: N must be positive");
  std::vector<CuspClass> out;
  for (i64 c : divisors(level)) {
    const i64 g = gcd(c, level / c);
    out.push_back(CuspClass{c, euler_phi(g), g, level / gcd(c * c, level)});
  }
  return out;
}

Rational CuspDivisor::order(i64 c) const {
  const auto it = ord.find(c);
  return it == ord.end() ? Rational(0) : it->second;
}

Rational CuspDivisor::degree() const {
  Rational deg;
  for (const auto& [c, x] : ord) deg += euler_phi(gcd(c, level / c)) * x;
  return deg;
}

bool operator==(const CuspDivisor& a, const CuspDivisor& b) {
  if (a.level != b.level) return false;
  for (i64 c : divisors(a.level))
    if (a.order(c) != b.order(c)) return false;
  return true;
}

CuspDivisor operator+(const CuspDivisor& a, const CuspDivisor& b) {
  if (a.level != b.level) throw ArgumentError("cusp divisors on different levels");
  CuspDivisor out{a.level, {}};
  for (i64 c : divisors(a.level))
    if (Rational x = a.order(c) + b.order(c); !x.is_zero()) out.ord.emplace(c, std::move(x));
  return out;
}

CuspDivisor operator*(const Rational& s, const CuspDivisor& d) {
  CuspDivisor out{d.level, {}};
  if (s.is_zero()) return out;
  for (const auto& [c, x] : d.ord)
    if (!x.is_zero()) out.ord.emplace(c, s * x);
  return out;
}

Rational eta_order(i64 level, i64 d, i64 c) {
  if (d < 1 || level % d != 0 || c < 1 || level % c != 0)
    throw ArgumentError("eta_order: d and c must divide N");
  const i64 g = gcd(c, level / c);
  Rational total;
  for (i64 delta : {d, level / d}) {
    const i64 h = gcd(c, delta);
    total += Rational(level * h * h, 24 * c * delta * g);
  }
  return total;
}

CuspDivisor eta_divisor(i64 level, i64 d) {
  CuspDivisor out{level, {}};
  for (i64 c : divisors(level)) out.ord.emplace(c, eta_order(level, d, c));
  return out;
}

CuspDivisor fricke_image(const CuspDivisor& d) {
  CuspDivisor out{d.level, {}};
  for (const auto& [c, x] : d.ord) out.ord.emplace(d.level / c, x);
  return out;
}

bool is_fricke_invariant(const CuspDivisor& d) { return fricke_image(d) == d; }

i64 cusp_space_dimension(i64 level) {
  if (level < 1) throw ArgumentError("cusp_space_dimension: N must be positive");
  return (sigma0(level) + (is_square(level) ? 1 : 0)) / 2;
}

DenseMatrix<Rational> cusp_matching_matrix(i64 level) {
  const auto classes = divisor_classes(level);
  const auto size = static_cast<Eigen::Index>(classes.size());
  DenseMatrix<Rational> m(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j)
      m(i, j) = eta_order(level, classes[static_cast<std::size_t>(j)],
                          classes[static_cast<std::size_t>(i)]);
  return m;
}

ClassCoefficients solve_cusp_matching(i64 level, const CuspDivisor& target) {
  if (target.level != level) throw ArgumentError("solve_cusp_matching: target level differs");
  for (const auto& [c, x] : target.ord)
    if (c < 1 || level % c != 0)
      throw ArgumentError("solve_cusp_matching: " + std::to_string(c) + " is not a divisor of N");
  for (i64 c : divisors(level))
    if (target.order(c) != target.order(level / c))
      throw ArgumentError("solve_cusp_matching: target is not Fricke-invariant at c = " +
                          std::to_string(c));

  const auto classes = divisor_classes(level);
  DenseVector<Rational> rhs(static_cast<Eigen::Index>(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i)
    rhs(static_cast<Eigen::Index>(i)) = target.order(classes[i]);
  const auto x = solve_exact(cusp_matching_matrix(level), rhs);
  if (!x)
    throw InconsistentSystem("cusp matching matrix is singular for N = " + std::to_string(level));

  ClassCoefficients out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    out.emplace(classes[i], (*x)(static_cast<Eigen::Index>(i)));
  return out;
}

CuspDivisor divisor_of_combination(i64 level, const ClassCoefficients& x) {
  CuspDivisor out{level, {}};
  for (const auto& [d, coeff] : x) out = out + coeff * eta_divisor(level, d);
  return out;
}

// ---------------------------------------------------------------------------
// Heegner divisors

namespace {

struct Form {
  i64 a, b, c;
};

// SL_2(Z)-reduced positive definite forms of discriminant disc < 0,
// imprimitive ones included, with |PSL_2(Z) stabilizer|.
std::vector<std::pair<Form, i64>> reduced_forms(i64 disc) {
  std::vector<std::pair<Form, i64>> out;
  for (i64 a = 1; 3 * a * a <= -disc; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      const i64 num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      i64 stab = 1;
      if (a == c && b == 0) stab = 2;
      if (a == c && b == a) stab = 3;
      out.push_back({Form{a, b, c}, stab});
    }
  }
  return out;
}

struct Matrix2 {
  i64 a, b, c, d;
};

// One SL_2(Z) matrix per left coset g Gamma_0(N), indexed by the first
// column (a : c) in P^1(Z/NZ).
std::vector<Matrix2> gamma0_coset_representatives(i64 level) {
  std::set<std::pair<i64, i64>> seen;
  std::vector<Matrix2> out;
  std::vector<i64> units;
  for (i64 l = 1; l <= level; ++l)
    if (gcd(l, level) == 1) units.push_back(l % level);
  for (i64 u = 0; u < level; ++u) {
    for (i64 v = 0; v < level; ++v) {
      if (gcd(gcd(u, v), level) != 1) continue;
      std::pair<i64, i64> canon{level, level};
      for (i64 l : units) canon = std::min(canon, std::pair{l * u % level, l * v % level});
      if (level == 1) canon = {0, 0};
      if (!seen.insert(canon).second) continue;
      // Lift to a primitive integer column and complete to SL_2(Z).
      bool done = false;
      for (i64 s = 0; s <= level && !done; ++s) {
        for (i64 t = 0; t <= level && !done; ++t) {
          const i64 a = u + level * s;
          const i64 c = v + level * t;
          if (gcd(a, c) != 1) continue;
          // Extended Euclid: a x + c y = 1.
          i64 old_r = a, r = c, old_x = 1, x = 0, old_y = 0, y = 1;
          while (r != 0) {
            const i64 q = old_r / r;
            old_r -= q * r;
            std::swap(old_r, r);
            old_x -= q * x;
            std::swap(old_x, x);
            old_y -= q * y;
            std::swap(old_y, y);
          }
          out.push_back(Matrix2{a, -old_y, c, old_x});
          done = true;
        }
      }
      if (!done) throw std::logic_error("coset representative lift failed");
    }
  }
  return out;
}

}  // namespace

Rational heegner_degree(i64 level, i64 n, i64 gamma) {
  if (level < 1) throw ArgumentError("heegner_degree: N must be positive");
  if (n >= 0) throw ArgumentError("heegner_degree: n must be negative");
  if (!is_supported(level, Rep::Rho, n, gamma))
    throw ArgumentError("heegner_degree: n = " + std::to_string(n) + " is not congruent to gamma^2 = " +
                        std::to_string(gamma) + "^2 mod 4N");
  const i64 two_n = 2 * level;
  const auto cosets = gamma0_coset_representatives(level);
  Rational total;
  for (const auto& [q, stab] : reduced_forms(n)) {
    i64 hits = 0;
    for (const auto& g : cosets) {
      // (q o g)(x, y) = q(g.a x + g.b y, g.c x + g.d y)
      const i64 a2 = q.a * g.a * g.a + q.b * g.a * g.c + q.c * g.c * g.c;
      const i64 b2 = 2 * q.a * g.a * g.b + q.b * (g.a * g.d + g.b * g.c) + 2 * q.c * g.c * g.d;
      if (a2 % level == 0 && mod(b2 - gamma, two_n) == 0) ++hits;
    }
    total += Rational(hits, stab);
  }
  return total;
}

HeegnerReport heegner_data(i64 level, const std::map<Slot, i64>& principal) {
  HeegnerReport report;
  report.divisor.level = level;
  for (const auto& [slot, mult] : principal) {
    if (mult == 0) continue;
    const Rational deg = heegner_degree(level, slot.n, slot.gamma);
    report.divisor.mult[Slot{slot.n, mod(slot.gamma, 2 * level)}] += mult;
    report.degree += mult * deg;
  }
  report.cusp_correction.level = level;
  if (!report.degree.is_zero()) report.cusp_correction.ord.emplace(level, -report.degree);
  return report;
}

Certificate converse_pipeline(i64 level, const std::map<Slot, i64>& principal,
                              const CuspDivisor& cusp_target) {
  Certificate cert;
  cert.level = level;
  cert.heegner = heegner_data(level, principal);
  cert.theta_coefficients = solve_cusp_matching(level, cusp_target);

  const auto basis = basis_m_half(level, 4 * level);
  std::vector<Rational> coords;
  for (const auto& [d, x] : cert.theta_coefficients) coords.push_back(x);
  const VVExpansion correction = combine(basis, coords);
  cert.weight = correction.holo_at(0, 0);
  cert.weyl = weyl_vector(correction);
  return cert;
}

}  // namespace vvmf
