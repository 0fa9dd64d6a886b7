#include "vvmf/borcherds.hpp"

#include <sstream>
#include <vector>

#include "vvmf/discform.hpp"
#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

// c(x) <- c(x) * (1 - x^n)^e on a dense coefficient vector, in place.
void multiply_binomial(std::vector<Rational>& c, i64 n, const Rational& e) {
  const auto len = static_cast<i64>(c.size());
  if (n >= len || e.is_zero()) return;
  if (is_integral(e)) {
    const i64 times = to_int64(e);
    for (i64 t = 0; t < times; ++t)
      for (i64 j = len - 1; j >= n; --j) c[j] -= c[j - n];
    for (i64 t = 0; t > times; --t)
      for (i64 j = n; j < len; ++j) c[j] += c[j - n];
    return;
  }
  const FracSeries factor = generalized_pow(n, e, Rational(len));
  std::vector<Rational> b;  // b[k] = coefficient of x^(k n)
  for (i64 k = 0; k * n < len; ++k) b.push_back(factor.coeff(Rational(k * n)));
  for (i64 j = len - 1; j >= 0; --j) {
    Rational acc;
    for (i64 k = 0; k * n <= j; ++k)
      if (!b[k].is_zero()) acc += b[k] * c[j - k * n];
    c[j] = std::move(acc);
  }
}

}  // namespace

std::map<i64, Rational> exponent_table(const VVExpansion& f, i64 nmax) {
  if (f.trunc < nmax * nmax)
    throw TruncationError("exponent_table: need truncation >= " + std::to_string(nmax * nmax) +
                          ", have " + std::to_string(f.trunc));
  std::map<i64, Rational> out;
  for (i64 n = 1; n <= nmax; ++n) out.emplace(n, f.holo_at(n * n, n));
  return out;
}

Rational weyl_vector(const VVExpansion& f) {
  std::vector<Rational> coords;
  try {
    coords = decompose(f, basis_m_half(f.level, f.trunc));
  } catch (const InconsistentSystem&) {
    throw InconsistentSystem("Weyl vector requires external input for non-holomorphic f");
  } catch (const ArgumentError&) {
    throw InconsistentSystem("Weyl vector requires external input for non-holomorphic f");
  }
  const auto classes = divisor_classes(f.level);
  Rational rho;
  for (std::size_t i = 0; i < classes.size(); ++i)
    rho += coords[i] * Rational(classes[i] + f.level / classes[i], 24);
  return rho;
}

ProductResult borcherds_product(const VVExpansion& f, const Rational& weyl, i64 prec) {
  if (prec < 1) throw ArgumentError("borcherds_product: prec must be positive");
  if (f.weight != kHalf || f.rep != Rep::Rho)
    throw ArgumentError("borcherds_product: input must have weight 1/2 for rho_N");
  ProductResult result;
  result.weyl = weyl;
  result.weight = f.holo_at(0, 0);
  result.exponents = exponent_table(f, prec - 1);

  std::vector<Rational> c(static_cast<std::size_t>(prec));
  c[0] = 1;
  for (const auto& [n, e] : result.exponents) multiply_binomial(c, n, e);

  const i64 m = den(weyl).convert_to<i64>();
  const i64 shift = to_int64(weyl * m);
  FracSeries::Terms terms;
  for (i64 j = 0; j < prec; ++j)
    if (!c[j].is_zero()) terms.emplace_hint(terms.end(), shift + j * m, std::move(c[j]));
  result.expansion = FracSeries(m, std::move(terms), weyl + prec);
  return result;
}

ProductResult borcherds_product(const VVExpansion& f, i64 prec) {
  return borcherds_product(f, weyl_vector(f), prec);
}

FracSeries eta_product(i64 level, i64 d, i64 prec) {
  if (d < 1 || level % d != 0)
    throw ArgumentError("eta_product: " + std::to_string(d) + " does not divide " +
                        std::to_string(level));
  return eta_series(d, Rational(prec)) * eta_series(level / d, Rational(prec));
}

std::string EtaIdentityReport::describe() const {
  std::ostringstream os;
  os << "N=" << level << " c=" << c;
  if (holds) {
    os << ": ok";
  } else if (exponent) {
    os << ": mismatch at q^" << to_string(*exponent) << ", expected " << to_string(expected)
       << ", got " << to_string(got);
  } else {
    os << ": failed";
  }
  return os.str();
}

namespace {

EtaIdentityReport compare_products(i64 level, i64 c, const FracSeries& product,
                                   const FracSeries& eta) {
  EtaIdentityReport report{level, c};
  report.exponent = first_mismatch(eta, product);
  report.holds = !report.exponent;
  if (report.exponent) {
    report.expected = eta.coeff(*report.exponent);
    report.got = product.coeff(*report.exponent);
  }
  return report;
}

}  // namespace

EtaIdentityReport verify_eta_identity(i64 level, i64 c, i64 prec) {
  if (!is_exact_divisor(level, c))
    throw ArgumentError("verify_eta_identity: c must be an exact divisor of N");
  const i64 trunc = (prec - 1) * (prec - 1);
  const auto theta = apply_aut(theta_series(level, trunc), c);
  const auto product = borcherds_product(theta, Rational(c + level / c, 24), prec);
  return compare_products(level, c, product.expansion, eta_product(level, c, prec));
}

EtaIdentityReport verify_basis_product(i64 level, i64 d, i64 prec) {
  const i64 trunc = (prec - 1) * (prec - 1);
  const auto element = basis_element(level, d, trunc);
  const auto product = borcherds_product(element, Rational(d + level / d, 24), prec);
  return compare_products(level, d, product.expansion, eta_product(level, d, prec));
}

}  // namespace vvmf
