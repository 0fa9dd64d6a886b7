#include "vvmf/vvforms.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "vvmf/discform.hpp"
#include "vvmf/errors.hpp"
#include "vvmf/heckeops.hpp"
#include "vvmf/linalg.hpp"

namespace vvmf {

namespace {

void require_unknown_below(i64 n, i64 trunc) {
  if (n > trunc || n < -trunc)
    throw TruncationError("index n = " + std::to_string(n) + " is beyond the truncation " +
                          std::to_string(trunc));
}

CoeffTable add_tables(const CoeffTable& a, const CoeffTable& b, i64 level, i64 bound) {
  CoeffTable out;
  for (const auto& [s, c] : a)
    if (std::abs(s.n) <= bound) accumulate(out, level, s.n, s.gamma, c);
  for (const auto& [s, c] : b)
    if (std::abs(s.n) <= bound) accumulate(out, level, s.n, s.gamma, c);
  return out;
}

CoeffTable scale_table(const CoeffTable& t, const Rational& c) {
  CoeffTable out;
  if (c.is_zero()) return out;
  for (const auto& [s, x] : t) out.emplace_hint(out.end(), s, x * c);
  return out;
}

CoeffTable clip_table(const CoeffTable& t, i64 bound) {
  CoeffTable out;
  for (const auto& [s, x] : t)
    if (std::abs(s.n) <= bound) out.emplace_hint(out.end(), s, x);
  return out;
}

CoeffTable reindex_aut(const CoeffTable& t, i64 level, i64 c) {
  CoeffTable out;
  for (const auto& [s, x] : t) out.emplace(Slot{s.n, atkin_lehner(level, c, s.gamma)}, x);
  return out;
}

std::optional<std::string> check_table(const CoeffTable& t, i64 level, Weight weight, Rep rep,
                                       i64 trunc, const char* name, bool negative_only) {
  const int eps = weight.symmetry_sign(rep);
  for (const auto& [s, x] : t) {
    std::ostringstream where;
    where << name << "(" << s.n << "," << s.gamma << ")";
    if (s.gamma < 0 || s.gamma >= 2 * level) return where.str() + ": gamma not canonical";
    if (x.is_zero()) return where.str() + ": stored zero";
    if (std::abs(s.n) > trunc) return where.str() + ": beyond truncation";
    if (negative_only && s.n >= 0) return where.str() + ": non-negative index";
    if (!is_supported(level, rep, s.n, s.gamma)) return where.str() + ": violates support rule";
    if (lookup(t, s.n, mod(-s.gamma, 2 * level)) != eps * x)
      return where.str() + ": violates gamma <-> -gamma symmetry";
  }
  return std::nullopt;
}

void check_compatible(i64 la, Weight wa, Rep ra, i64 lb, Weight wb, Rep rb) {
  if (la != lb || wa != wb || ra != rb)
    throw ArgumentError("expansions differ in level, weight or representation");
}

std::optional<Mismatch> compare_tables(const CoeffTable& a, const CoeffTable& b, i64 bound,
                                       const char* name) {
  auto ia = a.begin();
  auto ib = b.begin();
  const Rational zero(0);
  while (ia != a.end() || ib != b.end()) {
    Slot s;
    const Rational* x = &zero;
    const Rational* y = &zero;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      s = ia->first;
      x = &(ia++)->second;
    } else if (ia == a.end() || ib->first < ia->first) {
      s = ib->first;
      y = &(ib++)->second;
    } else {
      s = ia->first;
      x = &(ia++)->second;
      y = &(ib++)->second;
    }
    if (std::abs(s.n) > bound) continue;
    if (*x != *y) return Mismatch{name, s, *x, *y};
  }
  return std::nullopt;
}

}  // namespace

Weight Weight::parse(const std::string& text) {
  const Rational k = parse_rational(text);
  const Rational twice = 2 * k;
  if (!is_integral(twice) || to_int64(twice) % 2 == 0)
    throw ArgumentError("weight must be a half-odd integer: " + text);
  return Weight(static_cast<int>(to_int64(twice)));
}

void accumulate(CoeffTable& table, i64 level, i64 n, i64 gamma, const Rational& value) {
  if (value.is_zero()) return;
  const Slot s{n, mod(gamma, 2 * level)};
  auto [it, inserted] = table.try_emplace(s, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) table.erase(it);
}

Rational lookup(const CoeffTable& table, i64 n, i64 gamma) {
  const auto it = table.find(Slot{n, gamma});
  return it == table.end() ? Rational(0) : it->second;
}

Rational VVExpansion::holo_at(i64 n, i64 gamma) const {
  require_unknown_below(n, trunc);
  return lookup(holo, n, mod(gamma, 2 * level));
}

Rational VVExpansion::nonholo_at(i64 n, i64 gamma) const {
  require_unknown_below(n, trunc);
  return lookup(nonholo, n, mod(gamma, 2 * level));
}

Rational XiImage::at(i64 m, i64 gamma) const {
  require_unknown_below(m, trunc);
  return lookup(coeffs, m, mod(gamma, 2 * level));
}

bool is_supported(i64 level, Rep rep, i64 n, i64 gamma) {
  const i64 m = 4 * level;
  const i64 g = mod(gamma, 2 * level);
  return mod(n - sign(rep) * mod(g * g, m), m) == 0;
}

std::optional<std::string> check_invariants(const VVExpansion& f) {
  if (f.level < 1) return "level must be positive";
  if (f.trunc < 0) return "negative truncation";
  if (auto e = check_table(f.holo, f.level, f.weight, f.rep, f.trunc, "holo", false)) return e;
  return check_table(f.nonholo, f.level, f.weight, f.rep, f.trunc, "nonholo", true);
}

std::optional<std::string> check_invariants(const XiImage& x) {
  if (x.level < 1) return "level must be positive";
  if (x.trunc < 0) return "negative truncation";
  for (const auto& [s, c] : x.coeffs)
    if (s.n <= 0) return "r(" + std::to_string(s.n) + "," + std::to_string(s.gamma) + "): index not positive";
  return check_table(x.coeffs, x.level, x.weight, x.rep, x.trunc, "r", false);
}

VVExpansion operator+(const VVExpansion& a, const VVExpansion& b) {
  check_compatible(a.level, a.weight, a.rep, b.level, b.weight, b.rep);
  const i64 bound = std::min(a.trunc, b.trunc);
  return VVExpansion{a.level, a.weight, a.rep, add_tables(a.holo, b.holo, a.level, bound),
                     add_tables(a.nonholo, b.nonholo, a.level, bound), bound};
}

VVExpansion operator*(const Rational& c, const VVExpansion& f) {
  return VVExpansion{f.level, f.weight, f.rep, scale_table(f.holo, c), scale_table(f.nonholo, c),
                     f.trunc};
}

XiImage operator+(const XiImage& a, const XiImage& b) {
  check_compatible(a.level, a.weight, a.rep, b.level, b.weight, b.rep);
  const i64 bound = std::min(a.trunc, b.trunc);
  return XiImage{a.level, a.weight, a.rep, add_tables(a.coeffs, b.coeffs, a.level, bound), bound};
}

XiImage operator*(const Rational& c, const XiImage& x) {
  return XiImage{x.level, x.weight, x.rep, scale_table(x.coeffs, c), x.trunc};
}

VVExpansion truncated(const VVExpansion& f, i64 bound) {
  const i64 b = std::min(bound, f.trunc);
  return VVExpansion{f.level, f.weight, f.rep, clip_table(f.holo, b), clip_table(f.nonholo, b), b};
}

XiImage truncated(const XiImage& x, i64 bound) {
  const i64 b = std::min(bound, x.trunc);
  return XiImage{x.level, x.weight, x.rep, clip_table(x.coeffs, b), b};
}

std::string Mismatch::describe() const {
  std::ostringstream os;
  os << where << " slot (" << slot.n << "," << slot.gamma << "): expected " << to_string(lhs)
     << ", got " << to_string(rhs);
  return os.str();
}

std::optional<Mismatch> first_difference(const VVExpansion& a, const VVExpansion& b) {
  if (a.level != b.level || a.weight != b.weight || a.rep != b.rep)
    return Mismatch{"metadata", {a.level, b.level}, Rational(a.level), Rational(b.level)};
  const i64 bound = std::min(a.trunc, b.trunc);
  if (auto m = compare_tables(a.holo, b.holo, bound, "holo")) return m;
  return compare_tables(a.nonholo, b.nonholo, bound, "nonholo");
}

std::optional<Mismatch> first_difference(const XiImage& a, const XiImage& b) {
  if (a.level != b.level || a.weight != b.weight || a.rep != b.rep)
    return Mismatch{"metadata", {a.level, b.level}, Rational(a.level), Rational(b.level)};
  return compare_tables(a.coeffs, b.coeffs, std::min(a.trunc, b.trunc), "coeffs");
}

VVExpansion theta_series(i64 level, i64 trunc) {
  if (level < 1) throw ArgumentError("theta_series: level must be positive");
  if (trunc < 0) throw ArgumentError("theta_series: truncation must be non-negative");
  VVExpansion out{level, kHalf, Rep::Rho, {}, {}, trunc};
  for (i64 m = 0; m * m <= trunc; ++m) {
    accumulate(out.holo, level, m * m, m, Rational(1));
    if (m != 0) accumulate(out.holo, level, m * m, -m, Rational(1));
  }
  return out;
}

VVExpansion apply_aut(const VVExpansion& f, i64 c) {
  return VVExpansion{f.level, f.weight, f.rep, reindex_aut(f.holo, f.level, c),
                     reindex_aut(f.nonholo, f.level, c), f.trunc};
}

XiImage apply_aut(const XiImage& x, i64 c) {
  return XiImage{x.level, x.weight, x.rep, reindex_aut(x.coeffs, x.level, c), x.trunc};
}

std::vector<i64> divisor_classes(i64 level) {
  std::vector<i64> out;
  for (i64 d : divisors(level))
    if (d * d <= level) out.push_back(d);
  return out;
}

VVExpansion basis_element(i64 level, i64 d, i64 trunc) {
  if (d < 1 || level % d != 0) throw ArgumentError("basis_element: d must divide N");
  const i64 g = gcd(d, level / d);
  const i64 inner_level = level / (g * g);
  const i64 inner_trunc = (trunc + g * g - 1) / (g * g);
  const auto theta = apply_aut(theta_series(inner_level, inner_trunc), d / g);
  return truncated(level_u(theta, g), trunc);
}

std::vector<VVExpansion> basis_m_half(i64 level, i64 trunc) {
  std::vector<VVExpansion> out;
  for (i64 d : divisor_classes(level)) out.push_back(basis_element(level, d, trunc));
  return out;
}

std::vector<Rational> decompose(const VVExpansion& f, const std::vector<VVExpansion>& basis) {
  if (f.weight != kHalf || f.rep != Rep::Rho || !f.nonholo.empty())
    throw ArgumentError("decompose: input must be holomorphic of weight 1/2 for rho_N");
  if (basis.empty()) throw ArgumentError("decompose: empty basis");
  i64 bound = f.trunc;
  for (const auto& b : basis) {
    if (b.level != f.level) throw ArgumentError("decompose: basis level differs from input level");
    bound = std::min(bound, b.trunc);
  }
  for (const auto& [s, x] : f.holo)
    if (s.n < 0)
      throw InconsistentSystem("not in span of M_{1/2,rho_N}: principal part present");

  // Every slot where some element is non-zero; other slots hold 0 = 0.
  std::vector<Slot> slots;
  auto collect = [&](const CoeffTable& t) {
    for (const auto& [s, x] : t)
      if (s.n <= bound) slots.push_back(s);
  };
  collect(f.holo);
  for (const auto& b : basis) collect(b.holo);
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());

  const auto pivot_end =
      std::partition_point(slots.begin(), slots.end(), [&](const Slot& s) { return s.n <= 4 * f.level; });
  const auto rows = static_cast<Eigen::Index>(pivot_end - slots.begin());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  DenseMatrix<Rational> a(rows, cols);
  DenseVector<Rational> rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Slot& s = slots[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < cols; ++j)
      a(i, j) = lookup(basis[static_cast<std::size_t>(j)].holo, s.n, s.gamma);
    rhs(i) = lookup(f.holo, s.n, s.gamma);
  }
  const auto x = solve_exact(a, rhs);
  if (!x) throw InconsistentSystem("not in span of M_{1/2,rho_N} up to truncation");
  std::vector<Rational> coords(x->begin(), x->end());

  const VVExpansion residual = truncated(f, bound) - combine(basis, coords);
  if (!residual.holo.empty()) {
    const Slot s = residual.holo.begin()->first;
    throw InconsistentSystem("not in span of M_{1/2,rho_N} up to truncation; residual at (" +
                             std::to_string(s.n) + "," + std::to_string(s.gamma) + ")");
  }
  return coords;
}

VVExpansion combine(const std::vector<VVExpansion>& basis, const std::vector<Rational>& coords) {
  if (basis.empty() || basis.size() != coords.size())
    throw ArgumentError("combine: basis and coordinate counts differ");
  VVExpansion out = coords[0] * basis[0];
  for (std::size_t i = 1; i < basis.size(); ++i) out = out + coords[i] * basis[i];
  return out;
}

XiImage formal_xi(const VVExpansion& f) {
  XiImage out{f.level, f.weight.complement(), dual(f.rep), {}, f.trunc};
  for (const auto& [s, x] : f.nonholo) out.coeffs.emplace(Slot{-s.n, s.gamma}, x);
  return out;
}

VVExpansion random_supported(i64 level, Weight weight, Rep rep, std::uint64_t seed, i64 trunc) {
  if (level < 1 || trunc < 0) throw ArgumentError("random_supported: bad level or truncation");
  std::mt19937_64 rng(seed);
  // Raw engine output keeps the stream identical across standard libraries.
  auto draw = [&](std::uint64_t bound) { return static_cast<i64>(rng() % bound); };
  auto random_value = [&]() -> Rational {
    if (draw(2) == 0) return Rational(0);
    return Rational(draw(11) - 5, draw(4) + 1);
  };

  VVExpansion out{level, weight, rep, {}, {}, trunc};
  const int eps = weight.symmetry_sign(rep);
  const i64 two_n = 2 * level;
  const i64 four_n = 4 * level;
  for (i64 gamma = 0; gamma <= level; ++gamma) {
    const i64 neg = mod(-gamma, two_n);
    const bool self_paired = neg == gamma;
    if (self_paired && eps == -1) continue;
    const i64 base = mod(sign(rep) * gamma * gamma, four_n);
    // Smallest n >= -trunc with n = base (mod 4N).
    for (i64 n = -trunc + mod(base + trunc, four_n); n <= trunc; n += four_n) {
      if (const Rational v = random_value(); !v.is_zero()) {
        out.holo.emplace(Slot{n, gamma}, v);
        if (!self_paired) out.holo.emplace(Slot{n, neg}, eps * v);
      }
      if (n >= 0) continue;
      if (const Rational v = random_value(); !v.is_zero()) {
        out.nonholo.emplace(Slot{n, gamma}, v);
        if (!self_paired) out.nonholo.emplace(Slot{n, neg}, eps * v);
      }
    }
  }
  return out;
}

}  // namespace vvmf
