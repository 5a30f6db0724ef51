// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/cli.hpp"

#include "entangle/acceptance.hpp"
#include "entangle/bell.hpp"
#include "entangle/error.hpp"
#include "entangle/fluct.hpp"
#include "entangle/invariants.hpp"
#include "entangle/io.hpp"
#include "entangle/majorana.hpp"
#include "entangle/orbit.hpp"
#include "entangle/system.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace entangle {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

ojson to_ojson(const RVector& v) {
  ojson a = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

ojson to_ojson(const Vec3& v) { return ojson::array({v.x(), v.y(), v.z()}); }

ojson to_ojson(cplx z) { return ojson::array({z.real(), z.imag()}); }

ojson to_ojson(const CVector& v) {
  ojson a = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_ojson(v[i]));
  return a;
}

ojson to_ojson(const FlowParams& p) {
  return {{"step", p.step},
          {"max_iters", p.max_iters},
          {"grad_tol", p.grad_tol},
          {"null_tol", p.null_tol},
          {"backtracking", p.backtracking}};
}

ojson to_ojson(const Pentagram& p) {
  ojson a = ojson::array();
  for (const Vec3& l : p.vectors) a.push_back(to_ojson(l));
  return a;
}

ojson to_ojson(const Mat3& m) {
  ojson rows = ojson::array();
  for (int r = 0; r < 3; ++r) rows.push_back(to_ojson(Vec3(m.row(r).transpose())));
  return rows;
}

std::string dims_text(const std::vector<int>& dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + "]";
}

/// Everything a command needs, assembled from flags and the params file.
struct Context {
  std::string command;
  std::optional<std::string> system_text;
  std::optional<std::string> state_arg;
  std::optional<std::string> params_path;
  bool json_output = false;
  std::uint64_t seed = kDefaultSeed;

  ojson params = ojson::object();  ///< verbatim params file
  FlowParams flow;
  SearchBudget search;
  std::size_t dimension_cap = kDefaultDimensionCap;

  std::optional<SystemSpec> spec;
  std::optional<OperatorBasis> basis;
  std::optional<PureState> state;
  std::string state_label;

  int exit_code = kExitOk;
};

const std::set<std::string> kParamKeys{"system",  "state",     "seed",   "json", "flow",
                                       "search",  "pentagram", "chsh",   "dimension_cap"};

void load_params(Context& ctx) {
  if (!ctx.params_path) return;
  std::ifstream in(*ctx.params_path);
  if (!in) throw ValidationError("cannot open params file '" + *ctx.params_path + "'");
  try {
    in >> ctx.params;
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + *ctx.params_path + "': " + e.what());
  }
  const ojson& p = ctx.params;
  if (!p.is_object()) throw ValidationError("params: top level must be a JSON object");
  for (const auto& [key, value] : p.items())
    if (!kParamKeys.count(key))
      throw ValidationError("params: unknown key \"" + key +
                            "\" (known: system, state, seed, json, flow, search, pentagram, "
                            "chsh, dimension_cap)");
  // Flags win over the file.
  if (!ctx.system_text && p.contains("system")) {
    if (!p["system"].is_string()) throw ValidationError("params: \"system\" must be a string");
    ctx.system_text = p["system"].get<std::string>();
  }
  if (!ctx.state_arg && p.contains("state")) {
    if (!p["state"].is_string()) throw ValidationError("params: \"state\" must be a string");
    ctx.state_arg = p["state"].get<std::string>();
  }
  if (p.contains("json")) {
    if (!p["json"].is_boolean()) throw ValidationError("params: \"json\" must be true or false");
    ctx.json_output = ctx.json_output || p["json"].get<bool>();
  }
  if (p.contains("flow")) ctx.flow = parse_flow_params(json::parse(p["flow"].dump()), ctx.flow);
  if (p.contains("dimension_cap")) {
    if (!p["dimension_cap"].is_number_unsigned() || p["dimension_cap"].get<std::size_t>() < 1)
      throw ValidationError("params: \"dimension_cap\" must be a positive integer");
    ctx.dimension_cap = p["dimension_cap"].get<std::size_t>();
  }
  if (p.contains("search") && p["search"].is_object()) {
    const ojson& s = p["search"];
    for (const auto& [key, value] : s.items()) {
      if (key != "max_evaluations" && key != "random_starts")
        throw ValidationError("params: unknown search key \"" + key +
                              "\" (known: max_evaluations, random_starts)");
      if (!value.is_number_integer() || value.get<long long>() < 0)
        throw ValidationError("params: search." + key + " must be a nonnegative integer");
    }
    ctx.search.max_evaluations = s.value("max_evaluations", ctx.search.max_evaluations);
    ctx.search.random_starts = s.value("random_starts", ctx.search.random_starts);
    if (ctx.search.max_evaluations < 1)
      throw ValidationError("params: search.max_evaluations must be positive");
  } else if (p.contains("search") && !p["search"].is_boolean()) {
    throw ValidationError("params: \"search\" must be true, false or an object");
  }
}

void seed_from_params(Context& ctx, bool seed_flag_given) {
  if (!seed_flag_given && ctx.params.contains("seed")) {
    if (!ctx.params["seed"].is_number_unsigned())
      throw ValidationError("params: \"seed\" must be a nonnegative integer");
    ctx.seed = ctx.params["seed"].get<std::uint64_t>();
  }
  ctx.search.seed = ctx.seed;
}

const OperatorBasis& require_system(Context& ctx) {
  if (!ctx.basis) {
    if (!ctx.system_text)
      throw ValidationError(ctx.command + ": missing --system (spin:<two_s>, local:<d1>x<d2>[x...], "
                                          "sym:<d>^<n> or wedge:<d>^<n>)");
    ctx.spec = parse_system(*ctx.system_text);
    ctx.basis = build_system(*ctx.spec, ctx.dimension_cap);
  }
  return *ctx.basis;
}

const PureState& require_state(Context& ctx) {
  if (ctx.state) return *ctx.state;
  if (ctx.system_text && !ctx.basis) require_system(ctx);
  if (!ctx.state_arg) throw ValidationError(ctx.command + ": missing --state <file> (or --state random)");
  if (*ctx.state_arg == "random") {
    if (!ctx.spec) throw ValidationError(ctx.command + ": --state random needs --system to fix the dimensions");
    Rng rng(ctx.seed);
    ctx.state = random_state(ctx.spec->state_dims(), rng);
    ctx.state_label = "random";
  } else {
    StateFile f = read_state_file(*ctx.state_arg);
    ctx.state_label = f.label;
    ctx.state = f.state.is_unnormalized() ? f.state.normalized() : f.state;
  }
  if (ctx.spec && ctx.state->dims() != ctx.spec->state_dims())
    throw ValidationError("dimension mismatch: system " + ctx.spec->text + " expects dims " +
                          dims_text(ctx.spec->state_dims()) + ", state has dims " +
                          dims_text(ctx.state->dims()));
  return *ctx.state;
}

// ---- commands -------------------------------------------------------------

ojson orbit_json(const OrbitResult& r) {
  return {{"stability", std::string(to_string(r.stability))},
          {"concurrence", r.concurrence},
          {"converged", r.converged},
          {"iterations", r.iterations},
          {"final_gradient_norm", r.final_gradient_norm},
          {"final_norm_squared", r.norm_history.back()},
          {"coherence_residual", r.coherence_residual}};
}

ojson cmd_classify(Context& ctx) {
  const OperatorBasis& b = require_system(ctx);
  const PureState& s = require_state(ctx);
  const OrbitResult r = analyze_orbit(s, b, ctx.flow);
  if (r.stability == Stability::semistable_boundary) ctx.exit_code = kExitInconclusive;
  ojson out = orbit_json(r);
  out["coherence"] = std::string(to_string(coherence(s, b)));
  out["entanglement_residual"] = entanglement_residual(s, b);
  out["minimal_vector"] = to_ojson(r.minimal_vector.amplitudes());
  return out;
}

ojson cmd_variance(Context& ctx) {
  const OperatorBasis& b = require_system(ctx);
  const PureState& s = require_state(ctx);
  const VarianceReport v = total_variance(s, b);
  ojson out{{"total_variance", v.total_variance},
            {"casimir_scalar", v.casimir_scalar},
            {"entanglement_residual", v.residual_entanglement},
            {"expectation_vector", to_ojson(v.expectation_vector)},
            {"coherence_residual", coherence_residual(s, b)},
            {"coherence", std::string(to_string(coherence(s, b)))}};
  if (b.two_s) {
    const double spin = 0.5 * *b.two_s;
    out["spin_coherent"] = spin_coherence_check(s, *b.two_s);
    out["variance_bounds"] = ojson::array({spin, spin * (spin + 1.0)});
  }
  return out;
}

ojson cmd_schmidt(Context& ctx) {
  const PureState& s = require_state(ctx);
  const SchmidtData sd = schmidt(s);
  int rank = 0;
  for (Eigen::Index k = 0; k < sd.coefficients.size(); ++k)
    if (sd.coefficients[k] > 1e-12) ++rank;
  return {{"coefficients", to_ojson(sd.coefficients)},
          {"schmidt_rank", rank},
          {"entropy_bits", entropy(s)},
          {"marginal_spectrum_0", to_ojson(marginal(s, 0).spectrum())},
          {"marginal_spectrum_1", to_ojson(marginal(s, 1).spectrum())}};
}

std::optional<InvariantReport> closed_form(const PureState& s) {
  const auto& d = s.dims();
  if (d.size() == 2 && d[0] == d[1]) return det_concurrence(s);
  if (d == std::vector<int>{2, 2, 2}) return cayley_hyperdet(s);
  return std::nullopt;
}

ojson invariant_json(const InvariantReport& r) {
  return {{"name", r.name},
          {"value", to_ojson(r.value)},
          {"modulus", r.modulus},
          {"derived_concurrence", r.derived_concurrence}};
}

ojson cmd_concurrence(Context& ctx) {
  const OperatorBasis& b = require_system(ctx);
  const PureState& s = require_state(ctx);
  const OrbitResult r = analyze_orbit(s, b, ctx.flow);
  if (r.stability == Stability::semistable_boundary) ctx.exit_code = kExitInconclusive;
  ojson out{{"concurrence", r.concurrence},
            {"stability", std::string(to_string(r.stability))},
            {"iterations", r.iterations},
            {"final_gradient_norm", r.final_gradient_norm}};
  if (ctx.spec && ctx.spec->kind == SystemSpec::Kind::local)
    if (auto inv = closed_form(s)) out["closed_form"] = invariant_json(*inv);
  return out;
}

ojson cmd_invariants(Context& ctx) {
  const PureState& s = require_state(ctx);
  const auto inv = closed_form(s);
  if (!inv)
    throw ValidationError("invariants: no closed-form invariant for dims " + dims_text(s.dims()) +
                          "; supported formats are [n,n] and [2,2,2]");
  ojson out = invariant_json(*inv);
  if (s.dims() == std::vector<int>{2, 2, 2}) out["three_tangle"] = three_tangle(s);
  return out;
}

int spin_from_context(Context& ctx, const PureState& s) {
  if (ctx.spec) {
    if (ctx.spec->kind != SystemSpec::Kind::spin)
      throw ValidationError(ctx.command + ": requires a spin:<two_s> system, got " + ctx.spec->text);
    return ctx.spec->two_s;
  }
  if (s.num_factors() != 1)
    throw ValidationError(ctx.command + ": state must have a single factor, got dims " +
                          dims_text(s.dims()));
  return static_cast<int>(s.dim()) - 1;
}

ojson spin1_json(const PureState& s) {
  const Spin1Invariants inv = spin1_invariants(s);
  return {{"bilinear_square", to_ojson(inv.bilinear_square)},
          {"bilinear_modulus", std::abs(inv.bilinear_square)},
          {"cross_norm", inv.cross_norm},
          {"phi", inv.phi}};
}

ojson cmd_majorana(Context& ctx) {
  if (ctx.system_text) require_system(ctx);
  const PureState& s = require_state(ctx);
  const int two_s = spin_from_context(ctx, s);
  const RootConfiguration roots = to_roots(s, two_s);
  ojson finite = ojson::array();
  for (const cplx& z : roots.finite_roots) finite.push_back(to_ojson(z));
  ojson stars = ojson::array();
  for (const Vec3& p : star_points(roots).points) stars.push_back(to_ojson(p));
  ojson out{{"two_s", two_s},
            {"coefficients", to_ojson(binary_form_coefficients(s, two_s))},
            {"finite_roots", finite},
            {"infinity_multiplicity", roots.infinity_multiplicity},
            {"star_points", stars},
            {"balance_residual", balance_residual(s, two_s)},
            {"max_multiplicity", max_multiplicity(roots, 1e-6)},
            {"hm_class", std::string(to_string(hm_classify(roots)))},
            {"hm_class_clustered", std::string(to_string(hm_classify_clustered(roots)))}};
  if (two_s == 2) out["spin1"] = spin1_json(s);
  return out;
}

Vec3 parse_vec3(const ojson& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number())
    throw ValidationError("params: " + what + " must be an array of three numbers");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Pentagram pentagram_from_params(const Context& ctx) {
  if (!ctx.params.contains("pentagram")) return regular_pentagram();
  const ojson& p = ctx.params["pentagram"];
  if (p.is_string()) {
    if (p.get<std::string>() == "regular") return regular_pentagram();
    throw ValidationError("params: pentagram must be \"regular\", {\"params\": [5 angles]} or "
                          "{\"vectors\": [5 unit vectors]}");
  }
  if (p.is_object() && p.contains("params")) {
    const ojson& a = p["params"];
    if (!a.is_array() || a.size() != 5)
      throw ValidationError("params: pentagram.params must hold 5 angles (theta, phi, t2, t3, t4)");
    PentagramParams angles{};
    for (std::size_t k = 0; k < 5; ++k) {
      if (!a[k].is_number()) throw ValidationError("params: pentagram.params entries must be numbers");
      angles[k] = a[k].get<double>();
    }
    return make_pentagram(angles);
  }
  if (p.is_object() && p.contains("vectors")) {
    const ojson& a = p["vectors"];
    if (!a.is_array() || a.size() != 5)
      throw ValidationError("params: pentagram.vectors must hold 5 vectors");
    Pentagram out;
    for (std::size_t k = 0; k < 5; ++k)
      out.vectors[k] = parse_vec3(a[k], "pentagram.vectors[" + std::to_string(k) + "]");
    out.validate();
    return out;
  }
  throw ValidationError("params: pentagram must be \"regular\", {\"params\": [5 angles]} or "
                        "{\"vectors\": [5 unit vectors]}");
}

ojson cmd_pentagram(Context& ctx) {
  if (ctx.system_text) {
    require_system(ctx);
    if (ctx.spec->kind != SystemSpec::Kind::spin || ctx.spec->two_s != 2)
      throw ValidationError("pentagram: requires the spin:2 system, got " + ctx.spec->text);
  }
  const PureState& s = require_state(ctx);
  if (s.dims() != std::vector<int>{3})
    throw ValidationError("pentagram: state must be spin-1 with dims [3], got " + dims_text(s.dims()));
  const CVec3 psi = to_cartesian(s);
  const Pentagram p = pentagram_from_params(ctx);
  const PentagramReport rep = pentagram_report(psi, p);
  const Spin1Canonical canon = spin1_canonical(psi);
  const PentagramParams angles = pentagram_parameters(p);
  ojson out{{"pentagram", to_ojson(p)},
            {"parameters", ojson::array({angles[0], angles[1], angles[2], angles[3], angles[4]})},
            {"operator_A", to_ojson(rep.operator_A)},
            {"spectrum", to_ojson(rep.spectrum)},
            {"bell_value", rep.bell_value},
            {"classical_bound", 2.0},
            {"violated", rep.violated},
            {"jsquare_form", jsquare_form(psi, p)},
            {"phi", canon.phi},
            {"max_bell_value", max_bell_value(canon.phi, p)}};
  const bool want_search = ctx.params.contains("search") &&
                           (ctx.params["search"].is_object() ||
                            (ctx.params["search"].is_boolean() && ctx.params["search"].get<bool>()));
  if (want_search) {
    const ViolationSearch v = search_violation(psi, ctx.search);
    ojson search{{"found", v.pentagram.has_value()},
                 {"best_value", v.best_value},
                 {"evaluations", v.evaluations},
                 {"budget_exhausted", v.budget_exhausted},
                 {"best_pentagram", to_ojson(v.best_pentagram)}};
    out["search"] = search;
    if (!v.pentagram && v.budget_exhausted) ctx.exit_code = kExitInconclusive;
  }
  return out;
}

Vec3 chsh_direction(const Context& ctx, const char* key, double default_degrees) {
  if (!ctx.params.contains("chsh") || !ctx.params["chsh"].contains(key))
    return planar_direction(default_degrees);
  const ojson& v = ctx.params["chsh"][key];
  if (v.is_number()) return planar_direction(v.get<double>());
  return parse_vec3(v, std::string("chsh.") + key);
}

ojson cmd_chsh(Context& ctx) {
  const PureState& s = require_state(ctx);
  if (ctx.params.contains("chsh")) {
    const ojson& c = ctx.params["chsh"];
    if (!c.is_object()) throw ValidationError("params: \"chsh\" must be an object");
    for (const auto& [key, value] : c.items())
      if (key != "a1" && key != "a2" && key != "b1" && key != "b2")
        throw ValidationError("params: unknown chsh key \"" + key + "\" (known: a1, a2, b1, b2)");
  }
  const Vec3 a1 = chsh_direction(ctx, "a1", 0.0);
  const Vec3 a2 = chsh_direction(ctx, "a2", 90.0);
  const Vec3 b1 = chsh_direction(ctx, "b1", 45.0);
  const Vec3 b2 = chsh_direction(ctx, "b2", 135.0);
  const double v = chsh_value(s, a1, a2, b1, b2);
  return {{"value", v},
          {"classical_bound", 0.0},
          {"violated", v < -kViolationMargin},
          {"directions",
           {{"a1", to_ojson(a1)}, {"a2", to_ojson(a2)}, {"b1", to_ojson(b1)}, {"b2", to_ojson(b2)}}}};
}

ojson cmd_selftest(Context& ctx) {
  AcceptanceConfig config;
  config.flow = ctx.flow;
  config.search = ctx.search;
  config.seed = ctx.seed;
  ojson list = ojson::array();
  int passed = 0;
  const auto results = run_acceptance(config);
  for (const CriterionResult& r : results) {
    list.push_back({{"id", r.id},
                    {"name", r.name},
                    {"passed", r.passed},
                    {"detail", r.detail},
                    {"notes", r.notes}});
    if (r.passed) ++passed;
  }
  if (passed != static_cast<int>(results.size())) ctx.exit_code = kExitValidation;
  return {{"passed", passed}, {"total", results.size()}, {"criteria", list}};
}

// ---- output ---------------------------------------------------------------

std::optional<std::string> first_non_finite(const ojson& j, const std::string& path) {
  if (j.is_number_float() && !std::isfinite(j.get<double>())) return path;
  if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k)
      if (auto p = first_non_finite(j[k], path + "[" + std::to_string(k) + "]")) return p;
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      if (auto p = first_non_finite(value, path + "." + key)) return p;
  }
  return std::nullopt;
}

std::string format_number(double v) {
  char buf[64];
  if (v != 0.0 && std::abs(v) < 1e-3)
    std::snprintf(buf, sizeof buf, "%.6e", v);
  else
    std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string format_scalar(const ojson& j) {
  if (j.is_number_float()) return format_number(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + format_scalar(j[k]);
    return s + "]";
  }
  return j.dump();
}

void render_text(const ojson& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 2);
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      out << pad << key << ":\n";
      for (const ojson& item : value) {
        render_text(item, out, indent + 2);
        out << '\n';
      }
    } else {
      out << pad << key << ": " << format_scalar(value) << '\n';
    }
  }
}

void render_selftest_text(const ojson& results, std::ostream& out) {
  for (const ojson& c : results["criteria"]) {
    CriterionResult r;
    r.id = c["id"].get<int>();
    r.name = c["name"].get<std::string>();
    r.passed = c["passed"].get<bool>();
    r.detail = c["detail"].get<std::string>();
    out << format_result(r) << '\n';
    for (const ojson& note : c["notes"]) out << "        note: " << note.get<std::string>() << '\n';
  }
  out << results["passed"].get<int>() << "/" << results["total"].get<std::size_t>()
      << " criteria passed\n";
}

const std::map<std::string, std::function<ojson(Context&)>>& commands() {
  static const std::map<std::string, std::function<ojson(Context&)>> table{
      {"classify", cmd_classify},     {"variance", cmd_variance},
      {"schmidt", cmd_schmidt},       {"concurrence", cmd_concurrence},
      {"invariants", cmd_invariants}, {"majorana", cmd_majorana},
      {"pentagram", cmd_pentagram},   {"chsh", cmd_chsh},
      {"selftest", cmd_selftest}};
  return table;
}

const std::map<std::string, std::string> kDescriptions{
    {"classify", "stability class and minimal vector of the complex orbit"},
    {"variance", "total variance, expectation vector and coherence tests"},
    {"schmidt", "Schmidt coefficients and entanglement entropy of a bipartite state"},
    {"concurrence", "generalized concurrence from the norm-minimizing flow"},
    {"invariants", "determinant or hyperdeterminant invariant"},
    {"majorana", "roots, star points and multiplicity class of a spin state"},
    {"pentagram", "pentagram operator and Bell value of a spin-1 state"},
    {"chsh", "CHSH functional of a two-qubit state"},
    {"selftest", "run the acceptance checks"}};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement relative to a dynamical symmetry group", "entangle"};
  app.set_version_flag("--version", kVersion);
  Context ctx;
  std::string system_text, state_arg, params_path;
  auto* system_opt = app.add_option("--system", system_text,
                                    "spin:<two_s> | local:<d1>x<d2>[x...] | sym:<d>^<n> | wedge:<d>^<n>");
  auto* state_opt = app.add_option("--state", state_arg, "state file (JSON) or 'random'");
  auto* params_opt = app.add_option("--params", params_path, "parameter file (JSON)");
  app.add_flag("--json", ctx.json_output, "machine-readable report");
  auto* seed_opt = app.add_option("--seed", ctx.seed, "seed for every stochastic component");
  app.require_subcommand(1);
  for (const auto& [name, fn] : commands())
    app.add_subcommand(name, kDescriptions.at(name))->fallthrough();

  // Name a mistyped command directly instead of CLI11's generic message.
  for (std::size_t k = 0; k < args.size(); ++k) {
    const std::string& a = args[k];
    if (a == "--system" || a == "--state" || a == "--params" || a == "--seed") {
      ++k;
      continue;
    }
    if (a.empty() || a[0] == '-') continue;
    if (!commands().count(a)) {
      err << "error: unknown subcommand '" << a
          << "'; expected one of classify, variance, schmidt, concurrence, invariants, majorana, "
             "pentagram, chsh, selftest\n";
      return kExitValidation;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << " (see 'entangle --help')\n";
    return kExitValidation;
  }

  if (*system_opt) ctx.system_text = system_text;
  if (*state_opt) ctx.state_arg = state_arg;
  if (*params_opt) ctx.params_path = params_path;
  ctx.command = app.get_subcommands().front()->get_name();

  try {
    load_params(ctx);
    seed_from_params(ctx, static_cast<bool>(*seed_opt));
    ojson results = commands().at(ctx.command)(ctx);
    if (auto path = first_non_finite(results, "results")) {
      err << "error: numerical failure, non-finite value in " << *path << '\n';
      return kExitNumerical;
    }
    ojson report{{"tool", "entangle"}, {"version", kVersion}, {"command", ctx.command}};
    report["system"] = ctx.basis ? ojson{{"spec", ctx.spec->text},
                                         {"dim", ctx.basis->dim},
                                         {"generators", ctx.basis->size()}}
                                 : ojson(nullptr);
    report["state"] = ctx.state ? ojson{{"source", *ctx.state_arg},
                                        {"label", ctx.state_label},
                                        {"dims", ctx.state->dims()}}
                                : ojson(nullptr);
    report["params"] = {{"file", ctx.params},
                        {"flow", to_ojson(ctx.flow)},
                        {"search",
                         {{"max_evaluations", ctx.search.max_evaluations},
                          {"random_starts", ctx.search.random_starts}}}};
    report["seed"] = ctx.seed;
    report["results"] = results;
    report["exit_code"] = ctx.exit_code;

    if (ctx.json_output) {
      out << report.dump(2) << '\n';
    } else {
      out << "command: " << ctx.command << '\n';
      if (ctx.spec) out << "system: " << ctx.spec->text << '\n';
      if (ctx.state) out << "state: " << *ctx.state_arg << '\n';
      out << "seed: " << ctx.seed << '\n';
      if (ctx.command == "selftest")
        render_selftest_text(results, out);
      else
        render_text(results, out, 0);
    }
    if (ctx.exit_code == kExitInconclusive)
      err << "note: inconclusive within budget (see results)\n";
    return ctx.exit_code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "error: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const BudgetExhausted& e) {
    err << "error: budget exhausted: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace entangle
