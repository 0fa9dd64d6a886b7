#pragma once

#include <map>
#include <optional>
#include <string>

#include "vvmf/fracq.hpp"
#include "vvmf/vvforms.hpp"

namespace vvmf {

/// Formal q-expansion of a generalized Borcherds product at the cusp infinity.
struct ProductResult {
  Rational weight;                     // a+(0, 0)
  Rational weyl;                       // leading exponent
  FracSeries expansion;                // q^weyl prod (1 - q^n)^c(n)
  std::map<i64, Rational> exponents;   // n -> a+(n^2, n)
};

/// n -> a+(n^2, n mod 2N) for 1 <= n <= nmax; requires f.trunc >= nmax^2.
std::map<i64, Rational> exponent_table(const VVExpansion& f, i64 nmax);

/// Weyl vector of f in M_{1/2,rho_N}: sum over classes d of c_d (d + N/d)/24
/// where c_d are the theta-basis coordinates of f.
Rational weyl_vector(const VVExpansion& f);

/// q^weyl prod_{1 <= n < prec} (1 - q^n)^{a+(n^2, n)}, known through
/// exponent weyl + prec (exclusive).
ProductResult borcherds_product(const VVExpansion& f, const Rational& weyl, i64 prec);

/// Same, with the Weyl vector computed by weyl_vector().
ProductResult borcherds_product(const VVExpansion& f, i64 prec);

/// eta(d z) eta((N/d) z), known through (d + N/d)/24 + prec.
FracSeries eta_product(i64 level, i64 d, i64 prec);

struct EtaIdentityReport {
  i64 level = 0;
  i64 c = 0;
  bool holds = false;
  std::optional<Rational> exponent;  // first mismatch, if any
  Rational expected;                 // eta-product coefficient there
  Rational got;                      // Borcherds-product coefficient there
  std::string describe() const;
};

/// Compares the product of sigma_c(theta_{1/2,N}) with eta(cz) eta((N/c)z).
EtaIdentityReport verify_eta_identity(i64 level, i64 c, i64 prec);

/// Compares the product of the basis element of class d with
/// eta(dz) eta((N/d)z).
EtaIdentityReport verify_basis_product(i64 level, i64 d, i64 prec);

}  // namespace vvmf
