#include "virmod/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <set>
#include <sstream>

#include "../core/term_format.hpp"
#include "virmod/av/a_module.hpp"
#include "virmod/av/h_basis.hpp"
#include "virmod/av/omega.hpp"
#include "virmod/cli/parse.hpp"
#include "virmod/f/f_module.hpp"
#include "virmod/probe/closure.hpp"
#include "virmod/verifier/verifier.hpp"
#include "virmod/weighting/weighting.hpp"

namespace virmod {

namespace {

using json = nlohmann::json;

struct Options {
  std::optional<int> window, dt_cap, dx_cap;
  std::string lambda, beta, alpha, gamma;
  bool json = false;
  std::string seed;
  std::string module_file;
  std::string module;
  bool h_basis = false;
  int anchor = 0;
  bool dump_basis = false;
  bool include_x = false;

  std::string target, op, element, suite;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int pick(const std::optional<int>& flag, const std::optional<int>& file, int fallback) {
  if (flag) return *flag;
  return file ? *file : fallback;
}

json vec_json(const Vec& v) {
  json terms = json::array();
  for (const auto& [k, c] : v) {
    json key = json::array();
    for (std::size_t i = 0; i < k.size(); ++i) key.push_back(k[i]);
    terms.push_back({{"key", key}, {"coeff", to_string(c)}});
  }
  return terms;
}

json suite_json(const SuiteResult& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"op", f.op}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"witness", f.witness}});
  return {{"suite", r.suite},
          {"module", r.module},
          {"window", {{"modes", r.window.modes}, {"degree", r.window.degree}, {"carrier", r.window.carrier}}},
          {"params", params},
          {"checks", r.checks},
          {"failures", failures}};
}

std::string h_form(const Poly& f, int anchor) {
  const HBasisCoords h = to_h_basis(f, anchor);
  std::string out;
  bool first = true;
  for (std::size_t n = h.coords.size(); n-- > 0;) {
    if (h.coords[n] == 0) continue;
    detail::append_term(out, h.coords[n], "h_" + std::to_string(anchor) + "^" + std::to_string(n), first, true);
    first = false;
  }
  return first ? "0" : out;
}

std::string h_element(const AVModule& module, const Vec& v, int anchor) {
  if (dynamic_cast<const OmegaModule*>(&module)) return h_form(to_poly(v), anchor);
  const auto* f = dynamic_cast<const FModule*>(&module);
  if (!f) throw UsageError("--h-basis needs an Omega-type module");
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [b, w] : f->components(v)) {
    if (!out.empty()) out += " + ";
    out += "v[" + b.to_string() + "] (x) (" + h_element(*f->inner(), w, anchor) + ")";
  }
  return out;
}

// ---- act --------------------------------------------------------------

int cmd_act(const Options& o, const Workbench& wb, std::ostream& out) {
  const AVModulePtr module = parse_module_expr(o.target, wb);
  const Vec v = parse_element(*module, o.element);
  Vec result;
  if (o.op == "c") {
    result = module->c(v);
  } else {
    const auto colon = o.op.find(':');
    if (colon != 1) throw UsageError("operator must be d:<m>, x:<m>, g:<m> or c");
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(o.op.substr(2), &used);
      if (used != o.op.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("bad mode in operator '" + o.op + "'");
    }
    switch (o.op[0]) {
      case 'd':
        result = module->d(m, v);
        break;
      case 'x':
        result = module->x(m, v);
        break;
      case 'g':
        result = module->g(m, v);
        break;
      default:
        throw UsageError("operator must be d:<m>, x:<m>, g:<m> or c");
    }
  }
  const std::string printed = module->format(result);
  if (o.json) {
    json j = {{"module", module->describe()}, {"op", o.op}, {"input", module->format(v)},
              {"result", printed}, {"terms", vec_json(result)}};
    if (o.h_basis) j["h_basis"] = h_element(*module, result, o.anchor);
    out << j.dump(2) << "\n";
  } else {
    out << printed << "\n";
    if (o.h_basis) out << h_element(*module, result, o.anchor) << "\n";
  }
  return kExitOk;
}

// ---- verify -----------------------------------------------------------

std::vector<SweepPoint> points_of(const Options& o) {
  if (o.lambda.empty() && o.beta.empty() && o.alpha.empty() && o.gamma.empty()) return parameter_sweep();
  SweepPoint p{1, 0, 0, 0};
  if (!o.lambda.empty()) p.lambda = parse_rational(o.lambda);
  if (!o.beta.empty()) p.beta = parse_rational(o.beta);
  if (!o.alpha.empty()) p.alpha = parse_rational(o.alpha);
  if (!o.gamma.empty()) p.gamma = parse_rational(o.gamma);
  if (p.lambda == 0) throw UsageError("--lambda must be nonzero");
  return {p};
}

std::vector<BrModuleDesc> br_list(const Options& o, const Workbench& wb) {
  if (!o.module.empty()) return {parse_br_expr(o.module, wb)};
  std::vector<BrModuleDesc> out;
  std::set<std::string> seen;
  for (const auto& p : points_of(o)) {
    BrModuleDesc m = make_Mgamma(p.gamma, 1);
    if (seen.insert(m.name).second) out.push_back(std::move(m));
  }
  out.push_back(make_shift_module_B1());
  out.push_back(tensor_br(make_shift_module_B1(), make_shift_module_B1()));
  return out;
}

std::vector<SuiteResult> run_suite(const std::string& suite, const Options& o, const Workbench& wb,
                                   const Window& w) {
  std::vector<SuiteResult> out;
  if (suite == "bracket" || suite == "compat" || suite == "g") {
    std::vector<AVModulePtr> modules;
    if (!o.module.empty()) {
      modules.push_back(parse_module_expr(o.module, wb));
    } else {
      for (const auto& p : points_of(o))
        for (auto& m : standard_fixtures(p)) modules.push_back(std::move(m));
    }
    for (const auto& m : modules) {
      if (suite == "bracket") out.push_back(suite_virasoro_bracket(*m, w));
      if (suite == "compat") out.push_back(suite_av_compat(*m, w));
      if (suite == "g") out.push_back(suite_g(*m, w));
    }
  } else if (suite == "gm" || suite == "relations") {
    for (const auto& m : br_list(o, wb)) {
      out.push_back(suite == "gm" ? suite_gm_lemma(m, w) : suite_br_relations(m, w));
    }
  } else if (suite == "ff") {
    if (!o.module.empty()) {
      const AVModulePtr m = parse_module_expr(o.module, wb);
      const auto* outer = dynamic_cast<const FModule*>(m.get());
      const auto* mid = outer ? dynamic_cast<const FModule*>(outer->inner().get()) : nullptr;
      if (!mid) throw UsageError("ff needs a nested module F(M1,F(M2,W))");
      out.push_back(suite_prop_ff(outer->br(), mid->br(), mid->inner(), w));
    } else {
      for (const auto& p : points_of(o)) {
        const auto omega = std::make_shared<OmegaModule>(p.lambda, p.beta);
        out.push_back(suite_prop_ff(make_Mgamma(0, 1), make_Mgamma(0, 1), omega, w));
        out.push_back(suite_prop_ff(make_Mgamma(p.gamma, 1), make_Mgamma(p.alpha, 1), omega, w));
      }
      const BrModuleDesc shift = make_shift_module_B1();
      out.push_back(suite_prop_ff(shift, shift, std::make_shared<OmegaModule>(1, 1), w));
    }
  } else if (suite == "h") {
    for (const auto& p : points_of(o)) out.push_back(suite_h_identities(p.lambda, p.beta, w));
  } else if (suite == "weighting") {
    for (const auto& p : points_of(o))
      out.push_back(suite_weighting(p.lambda, p.beta, w, {make_Mgamma(p.gamma, 1), make_shift_module_B1()}));
  } else if (suite == "all") {
    for (const char* s : {"bracket", "compat", "g", "gm", "relations", "ff", "h", "weighting"}) {
      auto part = run_suite(s, o, wb, w);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else {
    throw UsageError("unknown suite '" + suite +
                     "' (bracket, compat, g, gm, relations, ff, h, weighting, all)");
  }
  return out;
}

int cmd_verify(const Options& o, const Workbench& wb, std::ostream& out) {
  if (o.suite == "all" && !o.module.empty()) throw UsageError("--module applies to a single suite");
  Window w;
  w.modes = pick(o.window, wb.window, w.modes);
  w.degree = pick(o.dt_cap, wb.dt_cap, w.degree);
  w.carrier = pick(o.dx_cap, wb.dx_cap, w.carrier);
  if (w.modes < 0 || w.degree < 0 || w.carrier < 0) throw UsageError("windows must be >= 0");
  const auto results = run_suite(o.suite, o, wb, w);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok();
  if (o.json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(suite_json(r));
    out << json{{"results", arr}}.dump(2) << "\n";
  } else {
    std::size_t failed = 0;
    for (const auto& r : results) {
      out << format_report(r);
      if (!r.ok()) ++failed;
    }
    out << (ok ? "ALL PASSED" : "FAILED") << " (" << results.size() - failed << "/" << results.size()
        << " suites)\n";
  }
  return ok ? kExitOk : kExitFailure;
}

// ---- closure ----------------------------------------------------------

std::string verdict_line(const ProbeResult& r) {
  switch (r.verdict) {
    case Verdict::ProperInvariantSubspaceFound:
      return "PROPER SUBSPACE (dim " + std::to_string(r.dim()) + " of " + std::to_string(r.window_dim) + ")";
    case Verdict::FullWindowReached:
      return "FULL WINDOW (dim " + std::to_string(r.window_dim) + ")";
    case Verdict::Inconclusive: {
      std::string s = "INCONCLUSIVE (dim " + std::to_string(r.dim()) + " of " + std::to_string(r.window_dim);
      if (!r.note.empty()) s += "; " + r.note;
      return s + ")";
    }
  }
  return "?";
}

json probe_json(const AVModule& m, const Vec& seed, const ProbeResult& r, bool dump) {
  json j = {{"seed", m.format(seed)},        {"verdict", to_string(r.verdict)},
            {"dim", r.dim()},                {"window_dim", r.window_dim},
            {"iterations", r.iterations},    {"profile", r.profile},
            {"closure_checked", r.closure_checked}};
  if (!r.note.empty()) j["note"] = r.note;
  if (dump) {
    json basis = json::array();
    for (const auto& b : r.basis) basis.push_back(m.format(b));
    j["basis"] = basis;
  }
  return j;
}

int cmd_closure(const Options& o, const Workbench& wb, std::ostream& out) {
  const AVModulePtr module = parse_module_expr(o.target, wb);
  ProbeConfig cfg;
  cfg.modes = pick(o.window, wb.window, cfg.modes);
  cfg.caps.inner = pick(o.dt_cap, wb.dt_cap, cfg.caps.inner);
  cfg.caps.carrier = pick(o.dx_cap, wb.dx_cap, cfg.caps.carrier);
  cfg.include_x = o.include_x;
  if (cfg.modes < 1 || cfg.caps.inner < 1 || cfg.caps.carrier < 1) throw UsageError("closure caps must be >= 1");

  std::vector<Vec> seeds;
  if (!o.seed.empty()) {
    const Vec s = parse_element(*module, o.seed);
    if (s.is_zero()) throw UsageError("seed must be nonzero");
    for (const auto& [k, c] : s)
      if (!module->in_window(k, cfg.caps)) throw UsageError("seed lies outside the window");
    seeds.push_back(s);
  } else {
    seeds = default_seeds(*module);
  }
  const SweepResult sw = sweep(*module, seeds, cfg);

  const std::string header = "closure " + module->describe() + " modes=" + std::to_string(cfg.modes) +
                             " dt-cap=" + std::to_string(cfg.caps.inner) + " dx-cap=" +
                             std::to_string(cfg.caps.carrier) + (cfg.include_x ? " include-x" : "");
  if (o.json) {
    json runs = json::array();
    for (const auto& run : sw.runs) runs.push_back(probe_json(*module, run.seed, run.result, o.dump_basis));
    out << json{{"module", module->describe()},
                {"modes", cfg.modes},
                {"dt_cap", cfg.caps.inner},
                {"dx_cap", cfg.caps.carrier},
                {"verdict", to_string(sw.verdict)},
                {"runs", runs}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << header << "\n";
  for (const auto& run : sw.runs) {
    out << (o.seed.empty() ? "seed " + module->format(run.seed) + ": " : std::string()) << verdict_line(run.result)
        << "\n";
    if (o.dump_basis)
      for (const auto& b : run.result.basis) out << "  " << module->format(b) << "\n";
  }
  if (o.seed.empty()) {
    switch (sw.verdict) {
      case Reducibility::Reducible:
        out << "REDUCIBLE\n";
        break;
      case Reducibility::IrreducibleEvidence:
        out << "IRREDUCIBLE EVIDENCE (full window from every seed)\n";
        break;
      case Reducibility::Inconclusive:
        out << "INCONCLUSIVE\n";
        break;
    }
  }
  return kExitOk;
}

// ---- weight -----------------------------------------------------------

bool over(const AVModule& m, bool omega) {
  if (const auto* f = dynamic_cast<const FModule*>(&m)) return over(*f->inner(), omega);
  return omega ? dynamic_cast<const OmegaModule*>(&m) != nullptr : dynamic_cast<const AModule*>(&m) != nullptr;
}

int cmd_weight(const Options& o, const Workbench& wb, std::ostream& out) {
  const AVModulePtr module = parse_module_expr(o.target, wb);
  const int window = pick(o.window, wb.window, 5);
  const int cap = pick(o.dx_cap, wb.dx_cap, 3);
  if (window < 0 || cap < 0) throw UsageError("windows must be >= 0");
  WeightTable table;
  if (over(*module, true)) {
    table = weighting_table(*module, window, cap);
  } else if (over(*module, false)) {
    table = weight_module_table(*module, window, cap);
  } else {
    throw UsageError("weight needs an Omega- or A-type module");
  }
  if (o.json) {
    json rows = json::array();
    for (const auto& [idx, image] : table) {
      const auto& [m, n, b] = idx;
      json key = json::array();
      for (std::size_t i = 0; i < b.size(); ++i) key.push_back(b[i]);
      rows.push_back({{"m", m}, {"n", n}, {"carrier", key}, {"image", vec_json(image)}});
    }
    out << json{{"module", module->describe()}, {"window", window}, {"dx_cap", cap}, {"table", rows}}.dump(2)
        << "\n";
  } else {
    out << format_table(table);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with Virasoro modules F(M, W)", "virmod"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--window", o.window, "Mode window |m| <= N");
    sub->add_option("--dt-cap", o.dt_cap, "Inner degree cap");
    sub->add_option("--dx-cap", o.dx_cap, "Carrier degree cap");
    sub->add_option("--lambda", o.lambda, "lambda as p/q");
    sub->add_option("--beta", o.beta, "beta as p/q");
    sub->add_option("--alpha", o.alpha, "alpha as p/q");
    sub->add_option("--gamma", o.gamma, "gamma as p/q");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--module-file", o.module_file, "JSON module definitions");
  };

  auto* act = app.add_subcommand("act", "Apply d:<m>, x:<m>, g:<m> or c to an element");
  act->add_option("module", o.target)->required();
  act->add_option("op", o.op)->required();
  act->add_option("element", o.element)->required();
  act->add_flag("--h-basis", o.h_basis, "Also print the h_m^n expansion");
  act->add_option("--anchor", o.anchor, "Anchor m of the h_m^n basis");
  common(act);

  auto* verify = app.add_subcommand("verify", "Run identity suites");
  verify->add_option("suite", o.suite)->required();
  verify->add_option("--module", o.module, "Module (or B_r module) expression");
  common(verify);

  auto* closure = app.add_subcommand("closure", "Generate the submodule of a seed inside a window");
  closure->add_option("module", o.target)->required();
  closure->add_option("--seed", o.seed, "Seed element (default: seed sweep)");
  closure->add_flag("--basis", o.dump_basis, "Print the basis of each generated subspace");
  closure->add_flag("--include-x", o.include_x, "Also close under x^m");
  common(closure);

  auto* weight = app.add_subcommand("weight", "Rescaled weighting action table");
  weight->add_option("module", o.target)->required();
  common(weight);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Workbench wb = o.module_file.empty() ? Workbench{} : load_workbench(o.module_file);
    if (wb.json) o.json = true;
    if (*act) return cmd_act(o, wb, out);
    if (*verify) return cmd_verify(o, wb, out);
    if (*closure) return cmd_closure(o, wb, out);
    return cmd_weight(o, wb, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace virmod
