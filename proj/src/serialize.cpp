#include "vvmf/serialize.hpp"

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<i64>());
  throw ArgumentError("expected a rational string, got " + j.dump());
}

Json table_to_json(const CoeffTable& t) {
  Json out = Json::array();
  for (const auto& [s, x] : t) out.push_back(Json::array({s.n, s.gamma, to_string(x)}));
  return out;
}

CoeffTable table_from_json(const Json& j, i64 level) {
  CoeffTable out;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3)
      throw ArgumentError("coefficient entries must be [n, gamma, \"a/b\"]");
    accumulate(out, level, entry[0].get<i64>(), entry[1].get<i64>(), rational_from_json(entry[2]));
  }
  return out;
}

std::string rep_name(Rep r) { return r == Rep::Rho ? "rho" : "dual"; }

Rep rep_from_name(const std::string& s) {
  if (s == "rho") return Rep::Rho;
  if (s == "dual") return Rep::Dual;
  throw ArgumentError("rep must be \"rho\" or \"dual\", got \"" + s + "\"");
}

}  // namespace

Json to_json(const FracSeries& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({e, to_string(c)}));
  return Json{{"denom", f.denom()},
              {"trunc", f.trunc() ? Json(to_string(*f.trunc())) : Json(nullptr)},
              {"terms", terms}};
}

FracSeries fracseries_from_json(const Json& j) {
  Precision trunc;
  if (!j.at("trunc").is_null()) trunc = rational_from_json(j.at("trunc"));
  FracSeries::Terms terms;
  for (const auto& t : j.at("terms")) terms[t.at(0).get<i64>()] += rational_from_json(t.at(1));
  return FracSeries(j.at("denom").get<i64>(), std::move(terms), std::move(trunc));
}

Json to_json(const VVExpansion& f) {
  return Json{{"N", f.level},
              {"k", to_string(f.weight.value())},
              {"rep", rep_name(f.rep)},
              {"holo", table_to_json(f.holo)},
              {"nonholo", table_to_json(f.nonholo)},
              {"trunc", f.trunc}};
}

VVExpansion expansion_from_json(const Json& j) {
  try {
    VVExpansion f;
    f.level = j.at("N").get<i64>();
    if (f.level < 1) throw ArgumentError("N must be positive");
    f.weight = Weight::parse(j.at("k").get<std::string>());
    f.rep = rep_from_name(j.at("rep").get<std::string>());
    f.trunc = j.at("trunc").get<i64>();
    f.holo = table_from_json(j.at("holo"), f.level);
    if (j.contains("nonholo")) f.nonholo = table_from_json(j.at("nonholo"), f.level);
    if (auto err = check_invariants(f)) throw ArgumentError("invalid expansion: " + *err);
    return f;
  } catch (const Json::exception& e) {
    throw ArgumentError(std::string("malformed expansion JSON: ") + e.what());
  }
}

Json to_json(const XiImage& x) {
  return Json{{"N", x.level},
              {"k", to_string(x.weight.value())},
              {"rep", rep_name(x.rep)},
              {"r", table_to_json(x.coeffs)},
              {"trunc", x.trunc}};
}

XiImage xi_image_from_json(const Json& j) {
  try {
    XiImage x;
    x.level = j.at("N").get<i64>();
    if (x.level < 1) throw ArgumentError("N must be positive");
    x.weight = Weight::parse(j.at("k").get<std::string>());
    x.rep = rep_from_name(j.at("rep").get<std::string>());
    x.trunc = j.at("trunc").get<i64>();
    x.coeffs = table_from_json(j.at("r"), x.level);
    if (auto err = check_invariants(x)) throw ArgumentError("invalid xi image: " + *err);
    return x;
  } catch (const Json::exception& e) {
    throw ArgumentError(std::string("malformed xi-image JSON: ") + e.what());
  }
}

Json to_json(const ProductResult& r) {
  Json exps = Json::array();
  for (const auto& [n, e] : r.exponents) exps.push_back(Json::array({n, to_string(e)}));
  return Json{{"weight", to_string(r.weight)},
              {"weyl", to_string(r.weyl)},
              {"expansion", to_json(r.expansion)},
              {"exponents", exps}};
}

Json to_json(const CuspDivisor& d) {
  Json orders = Json::array();
  for (const auto& [c, x] : d.ord) orders.push_back(Json::array({c, to_string(x)}));
  return Json{{"N", d.level}, {"orders", orders}};
}

CuspDivisor cusp_divisor_from_json(const Json& j) {
  try {
    CuspDivisor d;
    d.level = j.at("N").get<i64>();
    if (d.level < 1) throw ArgumentError("N must be positive");
    for (const auto& entry : j.at("orders")) {
      const i64 c = entry.at(0).get<i64>();
      if (c < 1 || d.level % c != 0)
        throw ArgumentError("cusp class " + std::to_string(c) + " does not divide N");
      d.ord[c] += rational_from_json(entry.at(1));
    }
    return d;
  } catch (const Json::exception& e) {
    throw ArgumentError(std::string("malformed cusp divisor JSON: ") + e.what());
  }
}

Json to_json(const CuspClass& c) {
  return Json{{"c", c.c}, {"orbit_size", c.orbit_size}, {"conductor", c.conductor}, {"width", c.width}};
}

Json to_json(const HeegnerReport& r) {
  Json mult = Json::array();
  for (const auto& [s, m] : r.divisor.mult) mult.push_back(Json::array({s.n, s.gamma, m}));
  return Json{{"N", r.divisor.level},
              {"divisor", mult},
              {"degree", to_string(r.degree)},
              {"cusp_correction", to_json(r.cusp_correction)}};
}

Json to_json(const ClassCoefficients& x) {
  Json out = Json::array();
  for (const auto& [d, c] : x) out.push_back(Json::array({d, to_string(c)}));
  return out;
}

Json to_json(const Certificate& c) {
  return Json{{"N", c.level},
              {"heegner", to_json(c.heegner)},
              {"x", to_json(c.theta_coefficients)},
              {"weight", to_string(c.weight)},
              {"weyl", to_string(c.weyl)}};
}

std::map<Slot, i64> principal_from_json(const Json& j) {
  try {
    std::map<Slot, i64> out;
    for (const auto& entry : j) {
      if (!entry.is_array() || entry.size() != 3)
        throw ArgumentError("principal entries must be [n, gamma, multiplicity]");
      out[Slot{entry[0].get<i64>(), entry[1].get<i64>()}] += entry[2].get<i64>();
    }
    return out;
  } catch (const Json::exception& e) {
    throw ArgumentError(std::string("malformed principal part JSON: ") + e.what());
  }
}

}  // namespace vvmf
