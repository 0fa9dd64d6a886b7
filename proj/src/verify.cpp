#include "vvmf/verify.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "vvmf/borcherds.hpp"
#include "vvmf/discform.hpp"
#include "vvmf/divisors.hpp"
#include "vvmf/heckeops.hpp"
#include "vvmf/vvforms.hpp"

namespace vvmf {

using LevelResult = std::pair<std::int64_t, std::optional<std::string>>;

SuiteReport run_over_levels(const std::string& name, i64 n_max, unsigned jobs,
                            const std::function<LevelResult(i64)>& f) {
  std::vector<LevelResult> results(static_cast<std::size_t>(std::max<i64>(n_max, 0)));
  std::atomic<i64> next{1};
  auto worker = [&] {
    for (i64 n = next++; n <= n_max; n = next++) {
      try {
        results[static_cast<std::size_t>(n - 1)] = f(n);
      } catch (const std::exception& e) {
        results[static_cast<std::size_t>(n - 1)] = {1, "N=" + std::to_string(n) + ": " + e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(jobs, 1u); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport report{name, true, 0, std::nullopt};
  for (auto& [cases, witness] : results) {
    report.cases += cases;
    if (witness && report.passed) {
      report.passed = false;
      report.witness = std::move(witness);
    }
  }
  return report;
}

namespace {

i64 pick(i64 value, i64 fallback) { return value > 0 ? value : fallback; }

std::string witness(i64 level, const std::string& what) {
  return "N=" + std::to_string(level) + ": " + what;
}

// 1. Products of sigma_c(theta) against eta(cz) eta((N/c)z).
SuiteReport eta_suite(const SuiteOptions& o) {
  const i64 prec = pick(o.prec, 200);
  return run_over_levels("eta", pick(o.n_max, 50), o.jobs, [prec](i64 level) -> LevelResult {
    std::int64_t cases = 0;
    for (i64 c : exact_divisors(level)) {
      ++cases;
      const auto r = verify_eta_identity(level, c, prec);
      if (!r.holds) return {cases, r.describe()};
    }
    return {cases, std::nullopt};
  });
}

// 2. Products of the theta basis against eta(dz) eta((N/d)z).
SuiteReport basis_suite(const SuiteOptions& o) {
  const i64 prec = pick(o.prec, 200);
  return run_over_levels("basis", pick(o.n_max, 50), o.jobs, [prec](i64 level) -> LevelResult {
    std::int64_t cases = 0;
    for (i64 d : divisor_classes(level)) {
      ++cases;
      const auto r = verify_basis_product(level, d, prec);
      if (!r.holds) return {cases, r.describe()};
    }
    return {cases, std::nullopt};
  });
}

// 3. Psi(f|U_d, z) = Psi(f, dz) on the theta basis.
SuiteReport ud_suite(const SuiteOptions& o) {
  const i64 prec = pick(o.prec, 200);
  return run_over_levels("ud", pick(o.n_max, 30), o.jobs, [prec](i64 level) -> LevelResult {
    std::int64_t cases = 0;
    const i64 trunc = (prec - 1) * (prec - 1);
    for (i64 cls : divisor_classes(level)) {
      const auto f = basis_element(level, cls, trunc);
      const Rational weyl(cls + level / cls, 24);
      for (i64 d = 1; d <= 5; ++d) {
        ++cases;
        const i64 inner_prec = (prec + d - 1) / d;
        const auto lhs = borcherds_product(level_u(f, d), d * weyl, prec).expansion;
        const auto rhs = substitute_power(borcherds_product(f, weyl, inner_prec).expansion, d);
        if (auto e = first_mismatch(lhs, rhs)) {
          std::ostringstream os;
          os << "class " << cls << ", d=" << d << ": mismatch at q^" << to_string(*e)
             << ", expected " << to_string(rhs.coeff(*e)) << ", got " << to_string(lhs.coeff(*e));
          return {cases, witness(level, os.str())};
        }
      }
    }
    return {cases, std::nullopt};
  });
}

VVExpansion seeded_input(i64 level, std::uint64_t seed, i64 trunc) {
  // Alternate rho at weight 1/2 and the dual at weight 3/2.
  if (seed % 2 == 0) return random_supported(level, kHalf, Rep::Rho, seed, trunc);
  return random_supported(level, kThreeHalves, Rep::Dual, seed, trunc);
}

std::uint64_t case_seed(std::uint64_t base, i64 level, int index) {
  return base * 1000003ULL + static_cast<std::uint64_t>(level) * 1009ULL +
         static_cast<std::uint64_t>(index);
}

// 4. U_d V_l = V_l U_d, T_p U_d = U_d T_p, T_p V_l = V_l T_p.
SuiteReport commute_suite(const SuiteOptions& o) {
  const std::uint64_t base = o.seed;
  return run_over_levels("commute", pick(o.n_max, 20), o.jobs, [base](i64 level) -> LevelResult {
    std::int64_t cases = 0;
    auto fail = [&](const std::string& rel, std::uint64_t seed, const Mismatch& m) {
      return LevelResult{cases, witness(level, rel + " (seed " + std::to_string(seed) + "): " + m.describe())};
    };
    for (int i = 0; i < 50; ++i) {
      const std::uint64_t seed = case_seed(base, level, i);
      const auto f = seeded_input(level, seed, 8 * 49);
      const auto small = truncated(f, 12);
      for (i64 d = 1; d <= 7; ++d)
        for (i64 l = 1; l <= 7; ++l) {
          ++cases;
          if (auto m = first_difference(level_u(level_v(small, l), d), level_v(level_u(small, d), l)))
            return fail("U_" + std::to_string(d) + " V_" + std::to_string(l), seed, *m);
        }
      for (i64 p : {3, 5, 7}) {
        const auto fp = truncated(f, 8 * p * p);
        for (i64 x = 1; x <= 7; ++x) {
          if (gcd(p, 2 * level * x) != 1) continue;
          cases += 2;
          if (auto m = first_difference(hecke_tp(level_u(fp, x), p), level_u(hecke_tp(fp, p), x)))
            return fail("T_" + std::to_string(p) + " U_" + std::to_string(x), seed, *m);
          if (auto m = first_difference(hecke_tp(level_v(fp, x), p), level_v(hecke_tp(fp, p), x)))
            return fail("T_" + std::to_string(p) + " V_" + std::to_string(x), seed, *m);
        }
      }
    }
    return {cases, std::nullopt};
  });
}

// 5. The four xi-commutation relations in radical-weighted coordinates.
SuiteReport xi_suite(const SuiteOptions& o) {
  const std::uint64_t base = o.seed;
  return run_over_levels("xi", pick(o.n_max, 20), o.jobs, [base](i64 level) -> LevelResult {
    std::int64_t cases = 0;
    auto fail = [&](const std::string& rel, std::uint64_t seed, const Mismatch& m) {
      return LevelResult{cases, witness(level, rel + " (seed " + std::to_string(seed) + "): " + m.describe())};
    };
    for (int i = 0; i < 50; ++i) {
      const std::uint64_t seed = case_seed(base, level, i);
      const auto f = random_supported(level, kHalf, Rep::Rho, seed, 8 * 49);
      const auto xf = formal_xi(f);
      for (i64 c : exact_divisors(level)) {
        ++cases;
        if (auto m = first_difference(formal_xi(apply_aut(f, c)), apply_aut(xf, c)))
          return fail("sigma_" + std::to_string(c), seed, *m);
      }
      for (i64 p : {3, 5, 7}) {
        if (gcd(p, 2 * level) != 1) continue;
        ++cases;
        // p^(2k-2) = 1/p at k = 1/2.
        if (auto m = first_difference(formal_xi(hecke_tp(f, p)), Rational(1, p) * xi_tp(xf, p)))
          return fail("T_" + std::to_string(p), seed, *m);
      }
      const auto small = truncated(f, 24);
      const auto xsmall = formal_xi(small);
      for (i64 x = 1; x <= 7; ++x) {
        cases += 2;
        if (auto m = first_difference(formal_xi(level_u(small, x)), xi_u(xsmall, x)))
          return fail("U_" + std::to_string(x), seed, *m);
        if (auto m = first_difference(formal_xi(level_v(small, x)), xi_v(xsmall, x)))
          return fail("V_" + std::to_string(x), seed, *m);
      }
    }
    return {cases, std::nullopt};
  });
}

// 6. theta_{1/2,1} | T_p = (1 + 1/p) theta_{1/2,1}.
SuiteReport hecke_suite(const SuiteOptions& o) {
  const i64 index = pick(o.prec, 200);
  SuiteReport report{"hecke", true, 0, std::nullopt};
  for (i64 p : {3, 5, 7, 11, 13}) {
    ++report.cases;
    const auto lhs = hecke_tp(theta_series(1, index * p * p), p);
    const auto rhs = Rational(p + 1, p) * theta_series(1, index);
    if (lhs.trunc < index) {
      report.passed = false;
      report.witness = "p=" + std::to_string(p) + ": output truncation too small";
      break;
    }
    if (auto m = first_difference(rhs, lhs)) {
      report.passed = false;
      report.witness = "N=1 p=" + std::to_string(p) + ": " + m->describe();
      break;
    }
  }
  return report;
}

// 7. Cusp-space dimension, invertibility and round trips of the matching solver.
SuiteReport cusp_suite(const SuiteOptions& o) {
  const std::uint64_t base = o.seed;
  return run_over_levels("cusp", pick(o.n_max, 200), o.jobs, [base](i64 level) -> LevelResult {
    std::int64_t cases = 1;
    const auto m = cusp_matching_matrix(level);
    const i64 dim = cusp_space_dimension(level);
    if (m.rows() != dim || m.cols() != dim)
      return {cases, witness(level, "matching matrix is " + std::to_string(m.rows()) + "x" +
                                        std::to_string(m.cols()) + ", dimension formula gives " +
                                        std::to_string(dim))};
    if (exact_rank(m) != dim) return {cases, witness(level, "matching matrix is singular")};

    const auto classes = divisor_classes(level);
    for (i64 d : classes) {
      ++cases;
      const auto x = solve_cusp_matching(level, eta_divisor(level, d));
      for (const auto& [cls, coeff] : x)
        if (coeff != (cls == d ? 1 : 0))
          return {cases, witness(level, "eta divisor of class " + std::to_string(d) +
                                            " solved to coefficient " + to_string(coeff) +
                                            " at class " + std::to_string(cls))};
    }
    // Random Fricke-invariant target: divisor -> coefficients -> divisor.
    std::uint64_t state = base * 6364136223846793005ULL + static_cast<std::uint64_t>(level);
    auto next = [&] {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return static_cast<i64>((state >> 33) % 13) - 6;
    };
    CuspDivisor target{level, {}};
    for (i64 c : classes) {
      const Rational v(next(), (next() + 6) % 5 + 1);
      target.ord[c] = v;
      target.ord[level / c] = v;
    }
    ++cases;
    const auto x = solve_cusp_matching(level, target);
    if (!(divisor_of_combination(level, x) == target))
      return {cases, witness(level, "random target does not round-trip")};
    return {cases, std::nullopt};
  });
}

// 8. Degree of eta-product divisors and their order at infinity.
SuiteReport degree_suite(const SuiteOptions& o) {
  return run_over_levels("degree", pick(o.n_max, 100), o.jobs, [](i64 level) -> LevelResult {
    std::int64_t cases = 0;
    const Rational mu_over_12(gamma0_index(level), 12);
    for (i64 d : divisors(level)) {
      ++cases;
      const Rational deg = eta_divisor(level, d).degree();
      if (deg != mu_over_12)
        return {cases, witness(level, "d=" + std::to_string(d) + ": degree " + to_string(deg) +
                                          ", expected " + to_string(mu_over_12))};
      const i64 cls = std::min(d, level / d);
      const Rational weyl = weyl_vector(basis_element(level, cls, 4 * level));
      const Rational at_infinity = eta_order(level, d, level);
      if (weyl != at_infinity)
        return {cases, witness(level, "d=" + std::to_string(d) + ": order at infinity " +
                                          to_string(at_infinity) + ", Weyl vector " + to_string(weyl))};
    }
    return {cases, std::nullopt};
  });
}

// 9. Heegner degrees: Hurwitz numbers at N = 1 and gamma <-> -gamma symmetry.
SuiteReport heegner_suite(const SuiteOptions& o) {
  const std::vector<std::pair<i64, Rational>> hurwitz = {
      {3, Rational(1, 3)}, {4, Rational(1, 2)}, {7, Rational(1)},
      {8, Rational(1)},    {11, Rational(1)},   {12, Rational(4, 3)}};
  SuiteReport anchors{"heegner", true, 0, std::nullopt};
  for (const auto& [d, h] : hurwitz) {
    ++anchors.cases;
    Rational total;
    for (i64 gamma = 0; gamma < 2; ++gamma)
      if (is_supported(1, Rep::Rho, -d, gamma)) total += heegner_degree(1, -d, gamma);
    if (total != h) {
      anchors.passed = false;
      anchors.witness = "N=1 n=-" + std::to_string(d) + ": degree " + to_string(total) +
                        ", expected H(" + std::to_string(d) + ") = " + to_string(h);
      return anchors;
    }
  }
  const i64 n_bound = pick(o.prec, 200);
  auto report = run_over_levels("heegner", pick(o.n_max, 20), o.jobs, [n_bound](i64 level) -> LevelResult {
    std::int64_t cases = 0;
    for (i64 n = -1; n >= -n_bound; --n)
      for (i64 gamma = 0; gamma <= level; ++gamma) {
        if (!is_supported(level, Rep::Rho, n, gamma)) continue;
        ++cases;
        const Rational a = heegner_degree(level, n, gamma);
        const Rational b = heegner_degree(level, n, -gamma);
        if (a != b)
          return {cases, witness(level, "n=" + std::to_string(n) + " gamma=" + std::to_string(gamma) +
                                            ": " + to_string(a) + " vs " + to_string(b))};
      }
    return {cases, std::nullopt};
  });
  report.cases += anchors.cases;
  return report;
}

// 10. Eta-product divisors are fixed by the Fricke involution.
SuiteReport fricke_suite(const SuiteOptions& o) {
  return run_over_levels("fricke", pick(o.n_max, 100), o.jobs, [](i64 level) -> LevelResult {
    std::int64_t cases = 0;
    for (i64 d : divisors(level)) {
      ++cases;
      if (!is_fricke_invariant(eta_divisor(level, d)))
        return {cases, witness(level, "d=" + std::to_string(d) + ": divisor not Fricke-invariant")};
    }
    return {cases, std::nullopt};
  });
}

}  // namespace

const std::vector<SuiteInfo>& verification_suites() {
  static const std::vector<SuiteInfo> suites = {
      {"eta", "Borcherds product of sigma_c(theta) equals eta(cz)eta(Nz/c)", eta_suite},
      {"basis", "Borcherds products of the theta basis equal eta(dz)eta(Nz/d)", basis_suite},
      {"ud", "Psi(f|U_d, z) = Psi(f, dz) on the theta basis", ud_suite},
      {"commute", "U_d, V_l and T_p commute on random expansions", commute_suite},
      {"xi", "xi commutes with sigma_c, T_p, U_d, V_l", xi_suite},
      {"hecke", "theta_{1/2,1} | T_p = (1 + 1/p) theta_{1/2,1}", hecke_suite},
      {"cusp", "cusp matching matrix is square, invertible, and round-trips", cusp_suite},
      {"degree", "eta-product divisors have degree mu/12 and Weyl vector at infinity", degree_suite},
      {"heegner", "Heegner degrees: Hurwitz anchors and gamma symmetry", heegner_suite},
      {"fricke", "eta-product divisors are Fricke-invariant", fricke_suite},
  };
  return suites;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : verification_suites())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace vvmf
