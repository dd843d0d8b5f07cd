#include "curvpinch/cli.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "curvpinch/curvature.hpp"
#include "curvpinch/errors.hpp"
#include "curvpinch/sampling.hpp"
#include "curvpinch/tensor_json.hpp"
#include "curvpinch/topology.hpp"
#include "curvpinch/verdict.hpp"
#include "curvpinch/ville.hpp"
#include "curvpinch/weitzenbock.hpp"

namespace curvpinch::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitHypothesis = 2;

json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

template <typename M>
json matrix_json(const M& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json form_json(const Form2& w) {
  json a = json::array();
  for (int i = 0; i < 6; ++i) a.push_back(w[i]);
  return a;
}

// JSON cannot carry infinities; they become strings.
json number(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

json check_json(const CheckReport& rep) {
  json j;
  j["name"] = rep.name;
  j["samples"] = rep.samples;
  j["violations"] = rep.violations;
  j["min_slack"] = number(rep.min_slack);
  j["max_ratio"] = number(rep.max_ratio);
  j["near_equality"] = rep.near_equality;
  j["tol"] = rep.tol;
  j["passed"] = rep.passed();
  if (!rep.warnings.empty()) j["warnings"] = rep.warnings;
  return j;
}

json budget_json(const ScanBudget& b) {
  return {{"grid", b.grid}, {"top_cells", b.top_cells}, {"refine_steps", b.refine_steps}};
}

json scan_json(const PinchingReport& s) {
  json j;
  j["k_min"] = s.k_min;
  j["k_max"] = s.k_max;
  j["k1perp"] = s.k1perp;
  j["k3perp"] = s.k3perp;
  j["delta"] = s.delta ? json(*s.delta) : json(nullptr);
  j["argmin"] = form_json(s.argmin.form());
  j["argmax"] = form_json(s.argmax.form());
  j["argmin_perp"] = form_json(s.argmin_perp.form());
  j["argmax_perp"] = form_json(s.argmax_perp.form());
  j["budget"] = budget_json(s.budget);
  return j;
}

void render(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    const bool nested_array =
        v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array());
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render(v, out, indent + 2);
    } else if (nested_array) {
      out << pad << it.key() << ":\n";
      for (const auto& row : v) {
        if (row.is_object()) {
          out << pad << "  -\n";
          render(row, out, indent + 4);
        } else {
          out << pad << "  " << row.dump() << "\n";
        }
      }
    } else if (v.is_string()) {
      out << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void emit(const json& report, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output_format == OutputFormat::Json) {
    out << report.dump(2) << "\n";
  } else {
    render(report, out, 0);
  }
}

json config_echo(const RunConfig& cfg) {
  json j;
  j["tol"] = cfg.tol;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["budget"] = budget_json(cfg.budget);
  return j;
}

struct Source {
  RiemannTensor tensor;
  std::optional<ModelSpace> model;
  json description;
};

ModelSpace model_from_config(const RunConfig& cfg) {
  return make_model(model_kind_from_name(*cfg.model_name), cfg.params);
}

bool has_source(const RunConfig& cfg) { return cfg.input_path || cfg.model_name; }

Source load_source(const RunConfig& cfg) {
  if (cfg.input_path && cfg.model_name) {
    throw InconsistentInputs("give exactly one of --input and --model");
  }
  Source src;
  if (cfg.input_path) {
    src.tensor = read_tensor_file(*cfg.input_path);
    src.description = {{"input", *cfg.input_path}};
  } else if (cfg.model_name) {
    src.model = model_from_config(cfg);
    src.tensor = src.model->tensor;
    const ModelParams& p = cfg.params;
    src.description = {{"model", src.model->name},
                       {"params", {{"r", p.r}, {"c", p.c}, {"a", p.a}, {"b", p.b}, {"L", p.L}}}};
  } else {
    throw InconsistentInputs("this command needs --input PATH or --model NAME");
  }
  return src;
}

// Same layout as the tensor file schema, so a decompose report can be read
// back as input.
json components_json(const RiemannTensor& r) {
  json c = json::array();
  for (int i = 0; i < 4; ++i) {
    json ci = json::array();
    for (int j = 0; j < 4; ++j) {
      json cj = json::array();
      for (int k = 0; k < 4; ++k) {
        json ck = json::array();
        for (int l = 0; l < 4; ++l) ck.push_back(r(i, j, k, l));
        cj.push_back(ck);
      }
      ci.push_back(cj);
    }
    c.push_back(ci);
  }
  return c;
}

json decomposition_json(const CurvatureDecomposition& d) {
  json j;
  j["s"] = d.s;
  j["u"] = d.u;
  j["ricci"] = matrix_json(d.ric);
  j["ric0"] = matrix_json(d.ric0);
  j["wplus"] = matrix_json(d.wplus);
  j["wminus"] = matrix_json(d.wminus);
  j["z_block"] = matrix_json(d.z_block);
  j["wplus_eigs"] = to_json(d.wp_eigs);
  j["wminus_eigs"] = to_json(d.wm_eigs);
  j["wplus_sq"] = d.wplus_sq();
  j["wminus_sq"] = d.wminus_sq();
  j["ric0_sq"] = d.ric0_sq();
  j["z_sq"] = d.z_sq();
  j["k1perp"] = k1perp_closed_form(d);
  j["k3perp"] = k3perp_closed_form(d);
  return j;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const Source src = load_source(cfg);
  const SymmetryReport sym = validate_symmetries(src.tensor, cfg.tol);
  const CurvatureDecomposition d = decompose(src.tensor, cfg.tol);
  json rep;
  rep["command"] = "decompose";
  rep["source"] = src.description;
  rep["tol"] = cfg.tol;
  rep["symmetry_residual"] = sym.max_residual();
  rep["decomposition"] = decomposition_json(d);
  rep["components"] = components_json(src.tensor);
  emit(rep, cfg, out);
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const Source src = load_source(cfg);
  const CurvatureDecomposition d = decompose(src.tensor, cfg.tol);
  const PinchingReport s = scan_extremes(src.tensor, cfg.budget);
  json rep;
  rep["command"] = "scan";
  rep["source"] = src.description;
  rep["config"] = config_echo(cfg);
  rep["scan"] = scan_json(s);
  rep["closed_form"] = {{"k1perp", k1perp_closed_form(d)}, {"k3perp", k3perp_closed_form(d)}};
  emit(rep, cfg, out);
  return kExitOk;
}

CheckReport lemma1_suite(const RiemannTensor& r, int samples, Rng& rng, double tol) {
  const WeitzenbockOperator n = weitzenbock_operator(r);
  const CurvatureDecomposition d = decompose(r);
  CheckReport rep;
  rep.name = "lemma1";
  rep.tol = tol;
  for (int i = 0; i < samples; ++i) {
    const Lemma1Values v = lemma1_check(n, d, random_form(rng));
    rep.record(v.rhs, v.lhs);
  }
  return rep;
}

int cmd_weitzenbock(const RunConfig& cfg, std::ostream& out) {
  const Source src = load_source(cfg);
  const WeitzenbockOperator n = weitzenbock_operator(src.tensor);
  Rng rng(cfg.seed);
  const CheckReport lemma = lemma1_suite(src.tensor, cfg.samples, rng, cfg.tol);

  double identity_residual = 0.0;
  for (int i = 0; i < std::min(cfg.samples, 100); ++i) {
    const IdentityCheck c = intermediate_identity_check(src.tensor, random_form(rng));
    identity_residual = std::max(identity_residual, std::abs(c.residual()));
  }
  Eigen::SelfAdjointEigenSolver<Mat6> es(n.matrix);

  json rep;
  rep["command"] = "weitzenbock";
  rep["source"] = src.description;
  rep["config"] = config_echo(cfg);
  rep["operator"] = matrix_json(n.matrix);
  json eigs = json::array();
  for (int i = 0; i < 6; ++i) eigs.push_back(es.eigenvalues()[i]);
  rep["eigenvalues"] = eigs;
  rep["lemma1"] = check_json(lemma);
  rep["adapted_frame_identity_max_residual"] = identity_residual;
  emit(rep, cfg, out);
  return lemma.passed() ? kExitOk : kExitHypothesis;
}

double ville_delta(const RunConfig& cfg, const PinchingReport& scan) {
  if (cfg.delta) return *cfg.delta;
  return std::min(scan.k_min, 1.0);
}

CheckReport ville_suite_one(const RunConfig& cfg, const RiemannTensor& r,
                            const PinchingReport& scan, double delta, std::uint64_t seed,
                            json* detail) {
  const CurvatureDecomposition d = decompose(r);
  const AVariant variant = cfg.statement_variant ? AVariant::Statement : AVariant::Proof;
  CheckReport ops = operator_bound_check(r, delta, cfg.frames, seed, cfg.budget,
                                         ScanBudget::kAccuracy);
  CheckReport vb = v_bound_check(ville_data(d, delta));
  CheckReport zb = znorm_bound_check(d, delta, scan, variant, cfg.tol);
  if (detail) {
    (*detail)["operator_bounds"] = check_json(ops);
    (*detail)["v_bounds"] = check_json(vb);
    (*detail)["znorm"] = check_json(zb);
  }
  CheckReport all;
  all.name = "ville";
  all.tol = cfg.tol;
  all.merge(ops);
  all.merge(vb);
  all.merge(zb);
  return all;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const std::string& which = cfg.subcommand;
  json rep;
  rep["command"] = "check " + which;
  rep["config"] = config_echo(cfg);
  rep["config"]["frames"] = cfg.frames;
  CheckReport total;
  total.name = which;
  total.tol = cfg.tol;

  const bool single = has_source(cfg);
  std::optional<Source> src;
  if (single) {
    src = load_source(cfg);
    rep["source"] = src->description;
  } else {
    rep["source"] = "random";
  }

  if (which == "seaman") {
    if (single) {
      total = seaman_check(src->tensor, cfg.samples, cfg.seed, cfg.tol);
    } else {
      for (int t = 0; t < cfg.samples; ++t) {
        const RiemannTensor r = random_algebraic_tensor(cfg.seed + t);
        total.merge(seaman_check(r, cfg.frames, cfg.seed + t, cfg.tol));
      }
    }
  } else if (which == "lemma1") {
    Rng rng(cfg.seed);
    if (single) {
      total = lemma1_suite(src->tensor, cfg.samples, rng, cfg.tol);
    } else {
      for (int t = 0; t < cfg.samples; ++t) {
        total.merge(lemma1_suite(random_algebraic_tensor(cfg.seed + t), 1, rng, cfg.tol));
      }
    }
  } else if (which == "k3bound") {
    if (single) {
      total = k3_bound_check(decompose(src->tensor), cfg.tol);
    } else {
      for (int t = 0; t < cfg.samples; ++t) {
        total.merge(k3_bound_check(decompose(random_algebraic_tensor(cfg.seed + t)), cfg.tol));
      }
    }
  } else if (which == "ville" || which == "deg") {
    const bool deg = which == "deg";
    auto one = [&](const RiemannTensor& r, const PinchingReport& scan, double delta,
                   std::uint64_t seed, json* detail) {
      if (!deg) return ville_suite_one(cfg, r, scan, delta, seed, detail);
      const DegBound b = deg_lower_bound(decompose(r), delta, scan);
      CheckReport c;
      c.name = "deg";
      c.tol = cfg.tol;
      c.record(b.bound, b.fg);
      if (detail) {
        (*detail)["fg"] = b.fg;
        (*detail)["bound"] = b.bound;
        (*detail)["slack"] = b.slack();
      }
      return c;
    };
    if (single) {
      const PinchingReport scan = scan_extremes(src->tensor, cfg.budget);
      const double delta = ville_delta(cfg, scan);
      json detail;
      detail["delta"] = delta;
      detail["scan"] = scan_json(scan);
      total = one(src->tensor, scan, delta, cfg.seed, &detail);
      rep["detail"] = detail;
    } else {
      const double target = cfg.delta.value_or(0.1);
      rep["config"]["delta_target"] = target;
      rep["config"]["perturbation_scale"] = cfg.scale;
      for (int t = 0; t < cfg.samples; ++t) {
        const PinchedSample ps = pinched_sample(cfg.seed + t, target, cfg.scale, cfg.budget);
        total.merge(one(ps.tensor, ps.scan, target, cfg.seed + t, nullptr));
      }
    }
    if (deg) total.name = "deg";
    if (!deg && cfg.statement_variant) rep["a_variant"] = "statement";
  } else {
    throw InconsistentInputs("unknown check '" + which +
                             "' (expected seaman, lemma1, k3bound, ville or deg)");
  }
  rep["result"] = check_json(total);
  emit(rep, cfg, out);
  return total.passed() ? kExitOk : kExitHypothesis;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input_path) {
    throw NotHomogeneous("invariants need a homogeneous model; a bare tensor has no volume");
  }
  const Source src = load_source(cfg);
  const Invariants inv = homogeneous_invariants(*src.model);
  const IntegrandValues iv = integrands(decompose(src.tensor));
  json rep;
  rep["command"] = "invariants";
  rep["source"] = src.description;
  rep["volume"] = src.model->volume;
  rep["chi"] = inv.chi;
  rep["tau"] = inv.tau;
  rep["chi_minus_2tau"] = inv.chi_minus_2tau;
  rep["expected"] = {{"chi", src.model->expected_chi}, {"tau", src.model->expected_tau}};
  rep["integrands"] = {{"gbc", iv.gbc}, {"signature", iv.sig}, {"fg", iv.fg}};
  emit(rep, cfg, out);
  return kExitOk;
}

int cmd_delta_star(const RunConfig& cfg, std::ostream& out) {
  const CriticalDelta c = critical_delta();
  const CornerValues cv = corner_values(c.closed_form);
  const GridMinimum g = grid_min_over_E(c.closed_form);
  json rep;
  rep["command"] = "delta-star";
  std::ostringstream fixed;
  fixed << std::setprecision(16) << std::fixed << c.numeric;
  rep["delta_star"] = fixed.str();
  rep["bisection"] = c.numeric;
  rep["bisection_iterations"] = c.iterations;
  rep["closed_form_expression"] = "(3*sqrt(3)-5)/4";
  rep["closed_form"] = c.closed_form;
  rep["difference"] = std::abs(c.numeric - c.closed_form);
  rep["vertex_values_at_delta_star"] = {{"(delta,delta,delta)", cv.at_ddd},
                                        {"(delta,delta,1)", cv.at_dd1},
                                        {"(delta,1,1)", cv.at_d11},
                                        {"(1,1,1)", cv.at_111}};
  rep["grid_min_over_E_at_delta_star"] = {
      {"value", g.min_value}, {"argmin", to_json(g.argmin)}, {"points", g.points}};
  emit(rep, cfg, out);
  return kExitOk;
}

int cmd_verdict(const RunConfig& cfg, std::ostream& out) {
  const Source src = load_source(cfg);
  const CurvatureDecomposition d = decompose(src.tensor, cfg.tol);
  const PinchingReport scan = scan_extremes(src.tensor, cfg.budget);
  TheoremVerdict v;
  std::optional<double> lambda1;
  if (cfg.subcommand == "thm1") {
    v = theorem1_verdict(d, scan);
  } else if (cfg.subcommand == "thm2") {
    lambda1 = cfg.lambda1;
    if (!lambda1 && src.model) lambda1 = src.model->lambda1;
    if (!lambda1) throw InconsistentInputs("verdict thm2 needs --lambda1 for this input");
    v = theorem2_verdict(d, scan, *lambda1);
  } else {
    throw InconsistentInputs("unknown verdict '" + cfg.subcommand + "' (expected thm1 or thm2)");
  }
  json rep;
  rep["command"] = "verdict " + cfg.subcommand;
  rep["source"] = src.description;
  rep["config"] = config_echo(cfg);
  if (lambda1) rep["lambda1"] = *lambda1;
  rep["scan"] = {{"k_min", scan.k_min}, {"k_max", scan.k_max}, {"k1perp", scan.k1perp}};
  rep["hypotheses_hold"] = v.hypotheses_hold;
  rep["threshold"] = v.computed_threshold;
  rep["margin"] = v.margin;
  rep["claim"] = v.claim_text;
  rep["notes"] = v.notes;
  if (v.orientation_flipped) rep["orientation_flipped"] = true;
  if (v.f_at_v) {
    rep["chain"] = {{"fg_half", *v.fg_half},
                    {"f_at_v", *v.f_at_v},
                    {"upper_holds", *v.chain_upper_holds},
                    {"lower_holds", *v.chain_lower_holds}};
  }
  emit(rep, cfg, out);
  return v.hypotheses_hold ? kExitOk : kExitHypothesis;
}

int cmd_model(const RunConfig& cfg, std::ostream& out) {
  if (cfg.subcommand == "list") {
    json rep;
    rep["command"] = "model list";
    json models = json::array();
    for (ModelKind k : all_models()) {
      const ModelSpace m = make_model(k);
      models.push_back({{"name", m.name},
                        {"volume", m.volume},
                        {"lambda1", m.lambda1 ? json(*m.lambda1) : json(nullptr)},
                        {"lambda1_source", m.lambda1_source},
                        {"chi", m.expected_chi},
                        {"tau", m.expected_tau}});
    }
    rep["models"] = models;
    emit(rep, cfg, out);
    return kExitOk;
  }
  if (cfg.subcommand == "export") {
    if (!cfg.model_name) throw InconsistentInputs("model export needs --model NAME");
    const ModelSpace m = model_from_config(cfg);
    json rep;
    rep["model"] = m.name;
    rep["components"] = components_json(m.tensor);
    out << rep.dump(2) << "\n";
    return kExitOk;
  }
  throw InconsistentInputs("unknown model action '" + cfg.subcommand + "' (expected list or export)");
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  RunConfig cfg;
  CLI::App app{"Curvature-pinching algebra for four-manifolds", "curvpinch"};
  app.require_subcommand(1);

  std::string input, model, format = "text", variant = "proof";
  std::optional<double> lambda1, delta;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "curvature tensor JSON file");
    sub->add_option("--model", model, "S4, CP2, S2xS2 or FlatT4");
    sub->add_option("--r", cfg.params.r, "S4 radius");
    sub->add_option("--c", cfg.params.c, "CP2 holomorphic sectional curvature");
    sub->add_option("--a", cfg.params.a, "S2xS2 first radius");
    sub->add_option("--b", cfg.params.b, "S2xS2 second radius");
    sub->add_option("--L", cfg.params.L, "flat torus side");
    sub->add_option("--samples", cfg.samples, "sample count")->check(CLI::NonNegativeNumber);
    sub->add_option("--frames", cfg.frames, "frames or planes per tensor")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--tol", cfg.tol, "tolerance");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--lambda1", lambda1, "first Laplace eigenvalue");
    sub->add_option("--delta", delta, "pinching constant");
    sub->add_option("--scale", cfg.scale, "perturbation scale of pinched samples");
    sub->add_option("--variant", variant, "A_i variant: proof or statement")
        ->check(CLI::IsMember({"proof", "statement"}));
    sub->add_option("--grid", cfg.budget.grid, "scan grid points per sphere");
    sub->add_option("--top-cells", cfg.budget.top_cells, "scan cells refined");
    sub->add_option("--refine-steps", cfg.budget.refine_steps, "Nelder-Mead steps per cell");
    sub->add_option("--output-format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  struct Command {
    const char* name;
    const char* help;
    bool takes_target;
  };
  const Command commands[] = {
      {"decompose", "block decomposition and eigenvalues", false},
      {"scan", "sectional and biorthogonal curvature extremes", false},
      {"weitzenbock", "Weitzenbock operator and its lower bound", false},
      {"check", "inequality suite: seaman, lemma1, k3bound, ville, deg", true},
      {"invariants", "Euler characteristic and signature of a model", false},
      {"delta-star", "critical pinching constant", false},
      {"verdict", "theorem verdict: thm1 or thm2", true},
      {"model", "model spaces: list or export", true},
  };
  for (const Command& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    if (s.takes_target) sub->add_option("target", cfg.subcommand, "action")->required();
  }

  std::vector<const char*> argv{"curvpinch"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    exit_code = kExitOk;
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    exit_code = kExitError;
    return std::nullopt;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (!input.empty()) cfg.input_path = input;
  if (!model.empty()) cfg.model_name = model;
  cfg.lambda1 = lambda1;
  cfg.delta = delta;
  cfg.statement_variant = variant == "statement";
  cfg.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  exit_code = kExitOk;
  return cfg;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "decompose") return cmd_decompose(cfg, out);
    if (cfg.command == "scan") return cmd_scan(cfg, out);
    if (cfg.command == "weitzenbock") return cmd_weitzenbock(cfg, out);
    if (cfg.command == "check") return cmd_check(cfg, out);
    if (cfg.command == "invariants") return cmd_invariants(cfg, out);
    if (cfg.command == "delta-star") return cmd_delta_star(cfg, out);
    if (cfg.command == "verdict") return cmd_verdict(cfg, out);
    if (cfg.command == "model") return cmd_model(cfg, out);
    err << "unknown command '" << cfg.command << "'\n";
    return kExitError;
  } catch (const PinchingNotVerified& e) {
    err << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const std::optional<RunConfig> cfg = parse_args(args, out, err, code);
  if (!cfg) return code;
  return execute(*cfg, out, err);
}

}  // namespace curvpinch::cli
