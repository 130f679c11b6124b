#include "gml_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gml/duality.hpp"
#include "gml/errors.hpp"
#include "gml/json_io.hpp"
#include "gml/verify.hpp"

namespace gml::cli {

namespace {

using json::Json;

enum class Format { Text, Json };

struct Session {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Format format = Format::Text;
  std::vector<std::int64_t> eval;  // q0 r0, empty when not requested
  std::optional<std::string> stdin_cache;

  std::string read(const std::string& path) {
    if (path == "-") {
      if (!stdin_cache) {
        std::ostringstream buf;
        buf << in.rdbuf();
        stdin_cache = buf.str();
      }
      return *stdin_cache;
    }
    std::ifstream file(path);
    if (!file) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }

  Json read_json(const std::string& path) { return json::parse(read(path)); }
};

int precision_from_env() {
  const char* env = std::getenv("GML_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  try {
    const int p = std::stoi(env);
    if (p >= 1 && p <= 10000) return p;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidParams, std::string("GML_PRECISION must be an integer in [1, 10000], got '") + env + "'");
}

void print_divergence(Session& s, const std::string& reason, ErrorKind kind = ErrorKind::DivergentSeries) {
  Json j = Json::object();
  j["error"] = std::string(to_string(kind));
  j["reason"] = reason;
  s.err << j.dump() << "\n";
}

// Text line "name = value" plus optional evaluation.
void text_value(Session& s, const std::string& name, const Extended& x) {
  s.out << name << " = " << to_string(x) << "\n";
  if (s.eval.empty() || !is_finite(x)) return;
  const auto r = evaluate(std::get<ClassFunction>(x), Rational(s.eval[0]), s.eval[1], precision_from_env());
  s.out << name << "(q=" << s.eval[0] << ", r=" << s.eval[1] << ") = " << r.to_string() << "\n";
}

Json eval_json(Session& s, const Extended& x) {
  if (!is_finite(x)) return "infinite";
  const auto r = evaluate(std::get<ClassFunction>(x), Rational(s.eval[0]), s.eval[1], precision_from_env());
  Json j = Json::object();
  if (r.exact) j["exact"] = to_string(*r.exact);
  j["decimal"] = r.decimal;
  j["error_bound"] = r.error_bound();
  return j;
}

int emit_masses(Session& s, const MassPair& m) {
  if (s.format == Format::Json) {
    Json j = json::to_json(m);
    if (!s.eval.empty()) {
      Json e = Json::object();
      e["q"] = s.eval[0];
      e["r"] = s.eval[1];
      e["mass_v"] = eval_json(s, m.mass_v);
      e["mass_w"] = eval_json(s, m.mass_w);
      j["evaluation"] = std::move(e);
    }
    s.out << json::dump(j);
  } else {
    text_value(s, "mass_v", m.mass_v);
    text_value(s, "mass_w", m.mass_w);
  }
  for (const auto* x : {&m.mass_v, &m.mass_w}) {
    if (const auto* d = std::get_if<Divergent>(x)) {
      print_divergence(s, d->reason);
      return kDivergent;
    }
  }
  return kOk;
}

int emit_report(Session& s, const DualityReport& r) {
  if (s.format == Format::Json) {
    s.out << json::dump(json::to_json(r));
  } else {
    s.out << "dim = " << r.dim << "\n"
          << "strong = " << (r.strong ? "true" : "false") << "\n"
          << "weak = " << (r.weak ? "true" : "false") << "\n"
          << "strong_residual = " << r.strong_residual.to_string() << "\n"
          << "weak_residual = " << r.weak_residual.to_string() << "\n";
  }
  return r.strong || r.weak ? kOk : kCheckFailed;
}

// --- commands -------------------------------------------------------------

int cmd_tame(Session& s, const Json& group, std::int64_t q, unsigned threads) {
  const auto g = group_closure(json::representation_from_json(group));
  TameOptions options;
  options.threads = std::max(1u, threads);
  return emit_masses(s, tame_total_masses(TameScenario{g, q}, options));
}

RamificationProfile builtin(const std::string& name, std::int64_t n, std::int64_t m) {
  const auto which = parse_builtin_profile(name);
  if (!which) throw Error(ErrorKind::InvalidParams, "unknown builtin profile '" + name + "'");
  return builtin_profile(*which, n, m);
}

int cmd_formula(Session& s, const std::string& name, std::int64_t n) {
  if (name == "bhargava") return emit_masses(s, bhargava_masses(n));
  if (name == "kedlaya") return emit_masses(s, kedlaya_masses(n));
  if (name != "hilbert") throw Error(ErrorKind::InvalidParams, "unknown formula '" + name + "'");
  const auto h = hilbert_counts(n);
  if (s.format == Format::Json) {
    Json j = Json::object();
    j["hilb_plane"] = json::to_json(h.hilb_plane);
    j["fiber"] = json::to_json(h.fiber);
    s.out << json::dump(j);
  } else {
    text_value(s, "hilb_plane", h.hilb_plane);
    text_value(s, "fiber", h.fiber);
  }
  return kOk;
}

ResolutionData open_mode(const ResolutionData& r) {
  return r.mode == StrataMode::Open ? r : open_closed_convert(r);
}

struct StringyChecks {
  std::optional<std::int64_t> poincare_d;
  std::optional<std::int64_t> gm_d;
};

int cmd_stringy(Session& s, const Json& file, const StringyChecks& checks) {
  const bool pair = file.is_object() && file.contains("total");
  const StringyCount total = stringy_count(open_mode(json::resolution_from_json(pair ? file["total"] : file)));
  std::optional<StringyCount> origin;
  if (pair) origin = stringy_count(open_mode(json::resolution_from_json(file.at("origin"))));
  if (checks.gm_d && !origin) throw Error(ErrorKind::InvalidParams, "--check-gm needs a file with total and origin");

  const bool divergent = !is_finite(total) || (origin && !is_finite(*origin));
  std::optional<bool> poincare, gm;
  std::optional<ClassFunction> quotient;
  if (!divergent) {
    if (checks.poincare_d) poincare = poincare_check(std::get<ClassFunction>(total), *checks.poincare_d);
    if (origin) quotient = gm_quotient(total, *origin);
    if (checks.gm_d) gm = gm_duality_check(total, *origin, *checks.gm_d);
  }

  if (s.format == Format::Json) {
    Json j = Json::object();
    j[pair ? "total" : "stringy"] = json::to_json(total);
    if (origin) j["origin"] = json::to_json(*origin);
    if (quotient) j["gm_quotient"] = json::to_json(*quotient);
    if (poincare) j["poincare"] = *poincare;
    if (gm) j["gm_duality"] = *gm;
    s.out << json::dump(j);
  } else {
    text_value(s, pair ? "total" : "stringy", total);
    if (origin) text_value(s, "origin", *origin);
    if (quotient) text_value(s, "gm_quotient", *quotient);
    if (poincare) s.out << "poincare = " << (*poincare ? "true" : "false") << "\n";
    if (gm) s.out << "gm_duality = " << (*gm ? "true" : "false") << "\n";
  }
  if (divergent) {
    const auto& d = !is_finite(total) ? std::get<Divergent>(total) : std::get<Divergent>(*origin);
    print_divergence(s, d.reason);
    return kDivergent;
  }
  return (poincare.value_or(true) && gm.value_or(true)) ? kOk : kCheckFailed;
}

// A file holding either a bare ClassFunction or a MassPair, from which the
// named component is taken.
Extended mass_component(const Json& j, const char* component) {
  if (j.is_object() && j.contains(component)) return json::extended_from_json(j[component]);
  return json::extended_from_json(j);
}

int cmd_duality(Session& s, const MassPair& masses, std::int64_t d) {
  for (const auto* x : {&masses.mass_v, &masses.mass_w}) {
    if (const auto* div = std::get_if<Divergent>(x)) {
      print_divergence(s, div->reason);
      return kDivergent;
    }
  }
  return emit_report(s, duality_report(masses, d));
}

int cmd_verify(Session& s, const std::string& suite_name) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw Error(ErrorKind::InvalidParams, "unknown suite '" + suite_name + "'");
  const auto results = run_suite(*suite);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  if (s.format == Format::Json) {
    Json j = Json::array();
    for (const auto& r : results) {
      Json checks = Json::array();
      for (const auto& c : r.checks) {
        Json entry = Json::object();
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
      }
      Json suite_json = Json::object();
      suite_json["suite"] = r.name;
      suite_json["passed"] = r.passed();
      suite_json["checks"] = std::move(checks);
      j.push_back(std::move(suite_json));
    }
    s.out << json::dump(j);
  } else {
    s.out << format_results(results);
  }
  return ok ? kOk : kCheckFailed;
}

std::int64_t int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw Error(ErrorKind::ParseError, std::string("payload needs integer field '") + key + "'");
  }
  return j[key].get<std::int64_t>();
}

int cmd_scenario(Session& s, const Json& file, unsigned threads) {
  if (!file.is_object() || !file.contains("kind") || !file["kind"].is_string() || !file.contains("payload")) {
    throw Error(ErrorKind::ParseError, "scenario files need a string 'kind' and a 'payload'");
  }
  const std::string kind = file["kind"].get<std::string>();
  const Json& payload = file["payload"];
  if (kind == "tame") return cmd_tame(s, payload.at("group"), int_field(payload, "q"), threads);
  if (kind == "profile") {
    if (payload.contains("builtin")) {
      const auto m = payload.contains("m") ? int_field(payload, "m") : 0;
      return emit_masses(s, profile_total_masses(builtin(payload["builtin"].get<std::string>(), int_field(payload, "n"), m)));
    }
    return emit_masses(s, profile_total_masses(json::profile_from_json(payload)));
  }
  if (kind == "formula") {
    if (!payload.contains("name") || !payload["name"].is_string()) {
      throw Error(ErrorKind::ParseError, "formula payload needs a string 'name'");
    }
    return cmd_formula(s, payload["name"].get<std::string>(), int_field(payload, "n"));
  }
  if (kind == "stringy") {
    StringyChecks checks;
    if (payload.contains("check_poincare")) checks.poincare_d = int_field(payload, "check_poincare");
    if (payload.contains("check_gm")) checks.gm_d = int_field(payload, "check_gm");
    return cmd_stringy(s, payload.contains("resolution") ? payload["resolution"] : payload, checks);
  }
  if (kind == "duality") return cmd_duality(s, json::mass_pair_from_json(payload.at("masses")), int_field(payload, "d"));
  throw Error(ErrorKind::ParseError, "unknown scenario kind '" + kind + "'");
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivergentSeries:
    case ErrorKind::InfiniteMass:
    case ErrorKind::InfiniteInput:
      return kDivergent;
    default:
      return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Session s{in, out, err};
  CLI::App app{"Exact total masses, stringy point counts and duality checks", "gml"};
  app.require_subcommand(1);

  std::string report = "text";
  unsigned threads = 1;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--report", report, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--eval", s.eval, "Also evaluate at q0 r0")->expected(2);
  };

  std::string group_file;
  std::int64_t q = 0;
  auto* tame = app.add_subcommand("tame", "Total masses of a tame scenario by enumeration");
  tame->add_option("--group", group_file, "Group/representation JSON")->required();
  tame->add_option("--q", q, "Residue field size")->required();
  tame->add_option("--threads", threads, "Enumeration threads");
  add_common(tame);

  std::string builtin_name, profile_file;
  std::int64_t n = 0, m = 0;
  auto* profile = app.add_subcommand("profile", "Total masses of a ramification profile");
  auto* builtin_opt = profile->add_option("--builtin", builtin_name, "quad_char0_sigma, quad_char2_sigma or quad_char2_upsilon");
  auto* n_opt = profile->add_option("--n", n, "Profile parameter n");
  profile->add_option("--m", m, "Profile parameter m (upsilon only)");
  profile->add_flag("--q-symbolic", "Symbolic output in Q = q^r (the default)");
  auto* file_opt = profile->add_option("--file", profile_file, "Profile JSON");
  builtin_opt->excludes(file_opt);
  builtin_opt->needs(n_opt);
  add_common(profile);

  std::string formula_name;
  auto* formula = app.add_subcommand("formula", "Partition mass formulas");
  formula->add_option("name", formula_name, "bhargava, kedlaya or hilbert")
      ->required()
      ->check(CLI::IsMember({"bhargava", "kedlaya", "hilbert"}));
  formula->add_option("--n", n, "Degree")->required();
  add_common(formula);

  std::string stringy_file;
  std::optional<std::int64_t> check_d;
  bool check_poincare = false, check_gm = false;
  auto* stringy = app.add_subcommand("stringy", "Stringy point count from resolution strata");
  stringy->add_option("--file", stringy_file, "Resolution JSON, or {\"total\": ..., \"origin\": ...}")->required();
  stringy->add_flag("--check-poincare", check_poincare, "Check f = dual(f) Q^d");
  stringy->add_flag("--check-gm", check_gm, "Check the quotient duality with exponent d - 1");
  stringy->add_option("--d", check_d, "Dimension for the checks");
  add_common(stringy);

  std::string mv_file, mw_file, masses_file;
  std::int64_t dim = 0;
  auto* duality = app.add_subcommand("duality", "Strong and weak duality report");
  auto* mv_opt = duality->add_option("--mv", mv_file, "mass_v: ClassFunction or MassPair JSON, - for stdin");
  auto* mw_opt = duality->add_option("--mw", mw_file, "mass_w: ClassFunction or MassPair JSON, - for stdin");
  auto* masses_opt = duality->add_option("--masses", masses_file, "MassPair JSON, - for stdin");
  mv_opt->needs(mw_opt);
  mw_opt->needs(mv_opt);
  masses_opt->excludes(mv_opt)->excludes(mw_opt);
  duality->add_option("--d", dim, "Dimension d")->required();
  add_common(duality);

  std::string suite_name = "all";
  auto* verify = app.add_subcommand("verify", "Run the bundled fixture suites");
  verify->add_option("--suite", suite_name, "all, tame, partitions, stringy, wild or qsym");
  add_common(verify);

  std::string scenario_file;
  auto* scenario = app.add_subcommand("scenario", "Run a scenario file (kind + payload)");
  scenario->add_option("file", scenario_file, "Scenario JSON, - for stdin")->required();
  scenario->add_option("--threads", threads, "Enumeration threads");
  add_common(scenario);

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    s.format = report == "json" ? Format::Json : Format::Text;
    if (!s.eval.empty() && s.eval[0] < 1) throw Error(ErrorKind::InvalidParams, "--eval q0 must be positive");
    if (*tame) return cmd_tame(s, s.read_json(group_file), q, threads);
    if (*profile) {
      if (!profile_file.empty()) return emit_masses(s, profile_total_masses(json::profile_from_json(s.read_json(profile_file))));
      if (builtin_name.empty()) throw Error(ErrorKind::InvalidParams, "profile needs --builtin or --file");
      return emit_masses(s, profile_total_masses(builtin(builtin_name, n, m)));
    }
    if (*formula) return cmd_formula(s, formula_name, n);
    if (*stringy) {
      if ((check_poincare || check_gm) && !check_d) throw Error(ErrorKind::InvalidParams, "checks need --d");
      StringyChecks checks;
      if (check_poincare) checks.poincare_d = check_d;
      if (check_gm) checks.gm_d = check_d;
      return cmd_stringy(s, s.read_json(stringy_file), checks);
    }
    if (*duality) {
      MassPair masses;
      if (!masses_file.empty()) {
        masses = json::mass_pair_from_json(s.read_json(masses_file));
      } else if (!mv_file.empty()) {
        masses = MassPair{mass_component(s.read_json(mv_file), "mass_v"), mass_component(s.read_json(mw_file), "mass_w")};
      } else {
        throw Error(ErrorKind::InvalidParams, "duality needs --mv/--mw or --masses");
      }
      return cmd_duality(s, masses, dim);
    }
    if (*verify) return cmd_verify(s, suite_name);
    if (*scenario) return cmd_scenario(s, s.read_json(scenario_file), threads);
  } catch (const Error& e) {
    if (exit_code_for(e.kind()) == kDivergent) {
      print_divergence(s, e.message(), e.kind());
    } else {
      Json j = Json::object();
      j["error"] = std::string(to_string(e.kind()));
      j["message"] = e.message();
      err << j.dump() << "\n";
    }
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << R"({"error":"ParseError","message":)" << Json(std::string(e.what())).dump() << "}\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace gml::cli
