#pragma once

#include <map>
#include <optional>

#include "vvmf/arith.hpp"
#include "vvmf/rational.hpp"

namespace vvmf {

/// Truncation bound of a series. An empty value means the series is known
/// exactly (a finite sum of monomials).
using Precision = std::optional<Rational>;

/// Sparse power series in q with exponents on the lattice (1/M)Z and exact
/// rational coefficients.
///
/// A term with key e stands for coeff * q^(e/M). Coefficients at exponents
/// >= trunc() are unknown and never stored. The lattice denominator is
/// kept minimal, so two objects representing the same series compare equal
/// regardless of how they were built.
class FracSeries {
 public:
  using Terms = std::map<i64, Rational>;

  /// The exact zero series.
  FracSeries() = default;

  /// Builds from raw terms on lattice (1/denom)Z; zero coefficients and
  /// terms beyond the truncation are dropped, the lattice is reduced.
  FracSeries(i64 denom, Terms terms, Precision trunc = std::nullopt);

  static FracSeries constant(const Rational& c, Precision trunc = std::nullopt);
  static FracSeries monomial(const Rational& c, const Rational& exponent,
                             Precision trunc = std::nullopt);

  i64 denom() const { return denom_; }
  const Terms& terms() const { return terms_; }
  const Precision& trunc() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }
  bool empty() const { return terms_.empty(); }

  /// Exponent of the first stored term.
  std::optional<Rational> leading_exponent() const;

  /// Lower bound for the true valuation: the leading exponent, or the
  /// truncation for a series with no known non-zero term.
  Precision valuation() const;

  /// Coefficient of q^exponent; throws TruncationError at or beyond trunc.
  Rational coeff(const Rational& exponent) const;

  /// Same series with truncation lowered to min(trunc, bound).
  FracSeries truncated(const Rational& bound) const;

  /// Terms re-keyed on lattice (1/m)Z; m must be a multiple of denom().
  Terms terms_on_lattice(i64 m) const;

  friend bool operator==(const FracSeries&, const FracSeries&) = default;

 private:
  void canonicalize();

  i64 denom_ = 1;
  Terms terms_;
  Precision trunc_;
};

/// min over precisions, treating an empty value as +infinity.
Precision min_precision(const Precision& a, const Precision& b);

FracSeries series_add(const FracSeries& a, const FracSeries& b);
FracSeries series_scale(const FracSeries& a, const Rational& c);
FracSeries series_mul(const FracSeries& a, const FracSeries& b);

inline FracSeries operator+(const FracSeries& a, const FracSeries& b) { return series_add(a, b); }
inline FracSeries operator-(const FracSeries& a) { return series_scale(a, Rational(-1)); }
inline FracSeries operator-(const FracSeries& a, const FracSeries& b) { return a + (-b); }
inline FracSeries operator*(const FracSeries& a, const FracSeries& b) { return series_mul(a, b); }
inline FracSeries operator*(const Rational& c, const FracSeries& a) { return series_scale(a, c); }

/// (1 - q^n)^e as a binomial series, truncated at exponent prec.
FracSeries generalized_pow(i64 n, const Rational& e, const Rational& prec);

/// eta(d z) = q^(d/24) prod_{n >= 1} (1 - q^(d n)), known through d/24 + prec.
FracSeries eta_series(i64 d, const Rational& prec);

/// q -> q^d.
FracSeries substitute_power(const FracSeries& f, i64 d);

/// First exponent below the common truncation where a and b differ.
std::optional<Rational> first_mismatch(const FracSeries& a, const FracSeries& b);

/// True iff a and b agree on every exponent below both truncations.
inline bool agree(const FracSeries& a, const FracSeries& b) { return !first_mismatch(a, b); }

}  // namespace vvmf
