#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vvmf/borcherds.hpp"
#include "vvmf/divisors.hpp"
#include "vvmf/errors.hpp"
#include "vvmf/heckeops.hpp"
#include "vvmf/serialize.hpp"
#include "vvmf/verify.hpp"
#include "vvmf/vvforms.hpp"

namespace vvmf::cli {

namespace {

struct Config {
  i64 level = 0;
  i64 n_max = 0;
  i64 prec = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string format = "json";
  std::string out;
  std::string in = "-";

  // subcommand parameters
  std::string op;
  i64 c = 0, p = 0, d = 0, l = 0;
  i64 n = 0, gamma = 0;
  std::string weyl;
  std::string suite = "all";
};

i64 require_level(const Config& cfg) {
  if (cfg.level < 1) throw ArgumentError("--N must be given and >= 1");
  return cfg.level;
}

i64 precision(const Config& cfg, i64 fallback) {
  if (cfg.prec < 0) throw ArgumentError("--prec must be >= 1");
  return cfg.prec > 0 ? cfg.prec : fallback;
}

Json read_input(const Config& cfg) {
  try {
    if (cfg.in == "-") return Json::parse(std::cin);
    std::ifstream file(cfg.in);
    if (!file) throw ArgumentError("cannot open input file " + cfg.in);
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw ArgumentError(std::string("input is not valid JSON: ") + e.what());
  }
}

struct Output {
  Output() = default;
  Output(Json j) : json(std::move(j)) {}  // NOLINT(google-explicit-constructor)

  Json json;
  std::string csv;  // used when --format csv and the command has a flat table
  bool has_csv = false;
  int code = kOk;
};

void require_json_only(const Config& cfg, const std::string& command) {
  if (cfg.format == "csv")
    throw ArgumentError("--format csv is only available for flat tables, not for " + command);
}

Output cmd_theta(const Config& cfg) {
  require_json_only(cfg, "theta");
  return {to_json(theta_series(require_level(cfg), precision(cfg, 50)))};
}

Output cmd_basis(const Config& cfg) {
  require_json_only(cfg, "basis");
  const i64 level = require_level(cfg);
  const auto classes = divisor_classes(level);
  const auto basis = basis_m_half(level, precision(cfg, 50));
  Json arr = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i)
    arr.push_back(Json{{"d", classes[i]}, {"expansion", to_json(basis[i])}});
  return {arr};
}

Output cmd_apply(const Config& cfg) {
  require_json_only(cfg, "apply");
  const auto f = expansion_from_json(read_input(cfg));
  auto need = [](i64 v, const char* flag) {
    if (v < 1) throw ArgumentError(std::string(flag) + " must be given and >= 1");
    return v;
  };
  if (cfg.op == "sigma") return {to_json(apply_aut(f, need(cfg.c, "--c")))};
  if (cfg.op == "T") return {to_json(hecke_tp(f, need(cfg.p, "--p")))};
  if (cfg.op == "U") return {to_json(level_u(f, need(cfg.d, "--d")))};
  if (cfg.op == "V") return {to_json(level_v(f, need(cfg.l, "--l")))};
  throw ArgumentError("--op must be one of sigma, T, U, V");
}

Output cmd_xi(const Config& cfg) {
  require_json_only(cfg, "xi");
  return {to_json(formal_xi(expansion_from_json(read_input(cfg))))};
}

Output cmd_product(const Config& cfg) {
  const auto f = expansion_from_json(read_input(cfg));
  const i64 prec = precision(cfg, 20);
  ProductResult r;
  if (cfg.weyl.empty()) {
    r = borcherds_product(f, prec);
  } else {
    Rational weyl;
    try {
      weyl = parse_rational(cfg.weyl);
    } catch (const std::invalid_argument& e) {
      throw ArgumentError(std::string("--weyl: ") + e.what());
    }
    r = borcherds_product(f, weyl, prec);
  }
  Output o(to_json(r));
  std::ostringstream csv;
  csv << "n,exponent\n";
  for (const auto& [n, e] : r.exponents) csv << n << ',' << to_string(e) << '\n';
  o.csv = csv.str();
  o.has_csv = true;
  return o;
}

Output cmd_eta(const Config& cfg) {
  require_json_only(cfg, "eta");
  const i64 level = require_level(cfg);
  const i64 d = cfg.d > 0 ? cfg.d : 1;
  if (level % d != 0) throw ArgumentError("--d must divide N");
  return {to_json(eta_product(level, d, precision(cfg, 50)))};
}

Output cmd_cusps(const Config& cfg) {
  require_json_only(cfg, "cusps");
  Json arr = Json::array();
  for (const auto& c : cusp_classes(require_level(cfg))) arr.push_back(to_json(c));
  return {arr};
}

Output cmd_eta_orders(const Config& cfg) {
  const i64 level = require_level(cfg);
  Json arr = Json::array();
  std::ostringstream csv;
  csv << "d,c,order\n";
  for (i64 d : divisors(level))
    for (i64 c : divisors(level)) {
      const Rational ord = eta_order(level, d, c);
      arr.push_back(Json{{"d", d}, {"c", c}, {"order", to_string(ord)}});
      csv << d << ',' << c << ',' << to_string(ord) << '\n';
    }
  Output o(arr);
  o.csv = csv.str();
  o.has_csv = true;
  return o;
}

Output cmd_dimension(const Config& cfg) {
  require_json_only(cfg, "dimension");
  return {Json(cusp_space_dimension(require_level(cfg)))};
}

Output cmd_solve(const Config& cfg) {
  require_json_only(cfg, "solve");
  const auto target = cusp_divisor_from_json(read_input(cfg));
  if (cfg.level > 0 && cfg.level != target.level)
    throw ArgumentError("--N disagrees with the level of the input divisor");
  return {Json{{"N", target.level}, {"x", to_json(solve_cusp_matching(target.level, target))}}};
}

std::map<Slot, i64> principal_part(const Json& j) {
  return principal_from_json(j.is_object() ? j.at("principal") : j);
}

Output cmd_heegner(const Config& cfg) {
  require_json_only(cfg, "heegner");
  const i64 level = require_level(cfg);
  if (cfg.in != "-" || cfg.n == 0) {
    if (cfg.n != 0) throw ArgumentError("give either --n/--gamma or --in, not both");
    return {to_json(heegner_data(level, principal_part(read_input(cfg))))};
  }
  return {Json{{"N", level},
               {"n", cfg.n},
               {"gamma", mod(cfg.gamma, 2 * level)},
               {"degree", to_string(heegner_degree(level, cfg.n, cfg.gamma))}}};
}

Output cmd_pipeline(const Config& cfg) {
  require_json_only(cfg, "pipeline");
  const i64 level = require_level(cfg);
  const Json input = read_input(cfg);
  if (!input.is_object() || !input.contains("principal"))
    throw ArgumentError("pipeline input must be {\"principal\": [...], \"cusp_target\": {...}}");
  CuspDivisor target{level, {}};
  if (input.contains("cusp_target")) target = cusp_divisor_from_json(input.at("cusp_target"));
  if (target.level != level) throw ArgumentError("cusp_target level differs from --N");
  return {to_json(converse_pipeline(level, principal_part(input), target))};
}

Output cmd_verify(const Config& cfg, std::ostream& err) {
  require_json_only(cfg, "verify");
  std::vector<const SuiteInfo*> suites;
  if (cfg.suite == "all") {
    for (const auto& s : verification_suites()) suites.push_back(&s);
  } else if (const auto* s = find_suite(cfg.suite)) {
    suites.push_back(s);
  } else {
    std::string names;
    for (const auto& s : verification_suites()) names += " " + s.name;
    throw ArgumentError("unknown suite '" + cfg.suite + "'; expected all or one of:" + names);
  }
  if (cfg.n_max < 0) throw ArgumentError("--N-max must be >= 1");
  SuiteOptions opts{cfg.n_max, precision(cfg, 0), cfg.seed, cfg.jobs};

  Output o;
  Json reports = Json::array();
  bool all_passed = true;
  for (const auto* s : suites) {
    const SuiteReport r = s->run(opts);
    Json entry{{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases}};
    entry["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    reports.push_back(entry);
    if (!r.passed) {
      if (all_passed) err << "verification failed: " << r.name << ": " << *r.witness << '\n';
      all_passed = false;
    }
  }
  o.json = Json{{"passed", all_passed}, {"suites", reports}};
  o.code = all_passed ? kOk : kVerificationFailed;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact vector-valued modular form expansions and Borcherds products", "vvmf"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--N", cfg.level, "Level N");
  app.add_option("--N-max", cfg.n_max, "Largest level for verify");
  app.add_option("--prec", cfg.prec, "Precision: truncation index or number of coefficients");
  app.add_option("--seed", cfg.seed, "Seed for the random suites");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "Write the result to this file");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--in", cfg.in, "Input JSON file, - for stdin");
  };

  std::map<CLI::App*, std::function<Output()>> handlers;
  auto command = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[sub] = [&cfg, handler] { return handler(cfg); };
    return sub;
  };

  command("theta", "theta_{1/2,N} through index --prec", cmd_theta);
  command("basis", "unary theta basis of weight 1/2", cmd_basis);
  auto* apply = command("apply", "apply sigma_c, T_p, U_d or V_l to an expansion", cmd_apply);
  add_input(apply);
  apply->add_option("--op", cfg.op, "sigma | T | U | V")->required();
  apply->add_option("--c", cfg.c, "exact divisor for sigma");
  apply->add_option("--p", cfg.p, "prime for T");
  apply->add_option("--d", cfg.d, "index for U");
  apply->add_option("--l", cfg.l, "index for V");
  add_input(command("xi", "formal xi image of an expansion", cmd_xi));
  auto* product = command("product", "Borcherds product expansion", cmd_product);
  add_input(product);
  product->add_option("--weyl", cfg.weyl, "Weyl vector override, a/b");
  command("eta", "eta(dz) eta(Nz/d)", cmd_eta)->add_option("--d", cfg.d, "divisor d (default 1)");
  command("cusps", "cusp classes of Gamma_0(N)", cmd_cusps);
  command("eta-orders", "orders of eta(dz) eta(Nz/d) at each cusp class", cmd_eta_orders);
  command("dimension", "dimension of the Fricke-invariant cuspidal divisor space", cmd_dimension);
  add_input(command("solve", "match a cuspidal divisor by eta products", cmd_solve));
  auto* heegner = command("heegner", "Heegner divisor degrees", cmd_heegner);
  add_input(heegner);
  heegner->add_option("--n", cfg.n, "negative index n");
  heegner->add_option("--gamma", cfg.gamma, "residue gamma mod 2N");
  add_input(command("pipeline", "converse-theorem certificate", cmd_pipeline));
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", cfg.suite, "suite name or all");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  }

  Output result;
  try {
    CLI::App* sub = app.get_subcommands().front();
    result = sub == verify ? cmd_verify(cfg, err) : handlers.at(sub)();
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << " (raise --prec)\n";
    return kArgumentError;
  } catch (const InconsistentSystem& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "error: cannot write " << cfg.out << '\n';
      return kArgumentError;
    }
    sink = &file;
  }
  if (cfg.format == "csv" && result.has_csv)
    *sink << result.csv;
  else
    *sink << result.json.dump() << '\n';
  return result.code;
}

}  // namespace vvmf::cli
