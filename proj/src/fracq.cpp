#include "vvmf/fracq.hpp"

#include <stdexcept>

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

bool below(const Rational& exponent, const Precision& trunc) {
  return !trunc || exponent < *trunc;
}

Precision add_precision(const Precision& a, const Precision& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace

Precision min_precision(const Precision& a, const Precision& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

FracSeries::FracSeries(i64 denom, Terms terms, Precision trunc)
    : denom_(denom), terms_(std::move(terms)), trunc_(std::move(trunc)) {
  if (denom_ <= 0) throw std::invalid_argument("FracSeries: lattice denominator must be positive");
  canonicalize();
}

FracSeries FracSeries::constant(const Rational& c, Precision trunc) {
  return FracSeries(1, Terms{{0, c}}, std::move(trunc));
}

FracSeries FracSeries::monomial(const Rational& c, const Rational& exponent, Precision trunc) {
  const i64 m = den(exponent).convert_to<i64>();
  return FracSeries(m, Terms{{to_int64(exponent * m), c}}, std::move(trunc));
}

void FracSeries::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || !below(Rational(it->first, denom_), trunc_))
      it = terms_.erase(it);
    else
      ++it;
  }
  i64 g = denom_;
  for (const auto& [e, c] : terms_) g = gcd(g, e);
  if (g > 1) {
    Terms reduced;
    for (auto& [e, c] : terms_) reduced.emplace_hint(reduced.end(), e / g, std::move(c));
    terms_ = std::move(reduced);
    denom_ /= g;
  }
}

std::optional<Rational> FracSeries::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return Rational(terms_.begin()->first, denom_);
}

Precision FracSeries::valuation() const {
  if (auto lead = leading_exponent()) return lead;
  return trunc_;
}

Rational FracSeries::coeff(const Rational& exponent) const {
  if (!below(exponent, trunc_))
    throw TruncationError("coefficient of q^" + to_string(exponent) + " is beyond the truncation " +
                          to_string(*trunc_));
  const Rational scaled = exponent * denom_;
  if (!is_integral(scaled)) return Rational(0);
  const auto it = terms_.find(to_int64(scaled));
  return it == terms_.end() ? Rational(0) : it->second;
}

FracSeries FracSeries::truncated(const Rational& bound) const {
  return FracSeries(denom_, terms_, min_precision(trunc_, bound));
}

FracSeries::Terms FracSeries::terms_on_lattice(i64 m) const {
  if (m % denom_ != 0) throw std::invalid_argument("terms_on_lattice: lattice is not a refinement");
  const i64 factor = m / denom_;
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace_hint(out.end(), e * factor, c);
  return out;
}

FracSeries series_add(const FracSeries& a, const FracSeries& b) {
  const i64 m = lcm(a.denom(), b.denom());
  FracSeries::Terms sum = a.terms_on_lattice(m);
  for (const auto& [e, c] : b.terms_on_lattice(m)) sum[e] += c;
  return FracSeries(m, std::move(sum), min_precision(a.trunc(), b.trunc()));
}

FracSeries series_scale(const FracSeries& a, const Rational& c) {
  FracSeries::Terms out;
  if (!c.is_zero())
    for (const auto& [e, x] : a.terms()) out.emplace_hint(out.end(), e, x * c);
  return FracSeries(a.denom(), std::move(out), a.trunc());
}

FracSeries series_mul(const FracSeries& a, const FracSeries& b) {
  const Precision trunc = min_precision(add_precision(a.trunc(), b.valuation()),
                                        add_precision(b.trunc(), a.valuation()));
  const i64 m = lcm(a.denom(), b.denom());
  const auto ta = a.terms_on_lattice(m);
  const auto tb = b.terms_on_lattice(m);
  FracSeries::Terms out;
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      if (!below(Rational(ea + eb, m), trunc)) break;
      out[ea + eb] += ca * cb;
    }
  }
  return FracSeries(m, std::move(out), trunc);
}

FracSeries generalized_pow(i64 n, const Rational& e, const Rational& prec) {
  if (n <= 0) throw std::invalid_argument("generalized_pow: n must be positive");
  if (prec <= 0) throw std::invalid_argument("generalized_pow: prec must be positive");
  FracSeries::Terms out;
  Rational binom(1);  // (-1)^j * C(e, j)
  for (i64 j = 0; Rational(n * j) < prec; ++j) {
    if (binom.is_zero()) break;
    out.emplace_hint(out.end(), n * j, binom);
    binom *= -(e - j) / Rational(j + 1);
  }
  return FracSeries(1, std::move(out), prec);
}

FracSeries eta_series(i64 d, const Rational& prec) {
  if (d <= 0) throw std::invalid_argument("eta_series: d must be positive");
  if (prec <= 0) throw std::invalid_argument("eta_series: prec must be positive");
  // Euler: prod (1 - x^n) = sum_k (-1)^k x^{k(3k-1)/2}, k over all integers.
  FracSeries::Terms out;
  for (i64 k = 0;; ++k) {
    const i64 p_minus = k * (3 * k - 1) / 2;
    if (Rational(d * p_minus) >= prec) break;
    const Rational sign(k % 2 == 0 ? 1 : -1);
    out.emplace(d + 24 * d * p_minus, sign);
    if (k > 0) {
      const i64 p_plus = k * (3 * k + 1) / 2;
      if (Rational(d * p_plus) < prec) out.emplace(d + 24 * d * p_plus, sign);
    }
  }
  return FracSeries(24, std::move(out), Rational(d, 24) + prec);
}

FracSeries substitute_power(const FracSeries& f, i64 d) {
  if (d < 1) throw std::invalid_argument("substitute_power: d must be positive");
  FracSeries::Terms out;
  for (const auto& [e, c] : f.terms()) out.emplace_hint(out.end(), e * d, c);
  Precision trunc = f.trunc();
  if (trunc) *trunc *= d;
  return FracSeries(f.denom(), std::move(out), std::move(trunc));
}

std::optional<Rational> first_mismatch(const FracSeries& a, const FracSeries& b) {
  const Precision trunc = min_precision(a.trunc(), b.trunc());
  const i64 m = lcm(a.denom(), b.denom());
  const auto ta = a.terms_on_lattice(m);
  const auto tb = b.terms_on_lattice(m);
  auto ia = ta.begin();
  auto ib = tb.begin();
  while (ia != ta.end() || ib != tb.end()) {
    i64 e;
    Rational ca, cb;
    if (ib == tb.end() || (ia != ta.end() && ia->first < ib->first)) {
      e = ia->first;
      ca = (ia++)->second;
    } else if (ia == ta.end() || ib->first < ia->first) {
      e = ib->first;
      cb = (ib++)->second;
    } else {
      e = ia->first;
      ca = (ia++)->second;
      cb = (ib++)->second;
    }
    const Rational exponent(e, m);
    if (!below(exponent, trunc)) return std::nullopt;
    if (ca != cb) return exponent;
  }
  return std::nullopt;
}

}  // namespace vvmf
