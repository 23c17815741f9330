// Copyright 2026 The trianneal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: compile, verify, penalty, resources, mixed-scan,
// gap and driver-scan.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "trianneal/anneal.hpp"
#include "trianneal/compiler.hpp"
#include "trianneal/driver_scan.hpp"
#include "trianneal/drivers.hpp"
#include "trianneal/embedverify.hpp"
#include "trianneal/error.hpp"
#include "trianneal/io.hpp"
#include "trianneal/mixed.hpp"
#include "trianneal/sat.hpp"

using namespace trianneal;

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

void write_manifest(RunManifest manifest, const std::string& out_path, Clock::time_point start) {
  if (out_path.empty() || out_path == "-") return;
  manifest.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  write_text_file(out_path + ".manifest.json", manifest.to_json().dump(2) + "\n");
}

FieldMode field_mode(bool fields, bool z2) {
  if (fields && z2) throw InputError("--fields and --z2 are mutually exclusive");
  if (fields) return FieldMode::fields;
  if (z2) return FieldMode::z2;
  return FieldMode::automatic;
}

// ---------------------------------------------------------------- compile

struct CompileArgs {
  std::string model;
  int kstar = 0;
  std::optional<double> penalty;
  bool fields = false;
  bool z2 = false;
  std::string out;
  std::string dot;
};

int run_compile(const CompileArgs& a) {
  const auto start = Clock::now();
  const LogicalIsing model = load_model(a.model);
  const CompiledModel compiled = compile(model, a.kstar, a.penalty, field_mode(a.fields, a.z2));
  const ValidationReport report = validate_architecture(compiled.graph);
  emit(a.out, compiled_to_json(compiled).dump(2) + "\n");
  if (!a.dot.empty()) write_text_file(a.dot, to_dot(compiled));

  Json summary = {{"n_logical", compiled.n_logical},
                  {"n_qubits", compiled.n_qubits()},
                  {"with_fields", compiled.with_fields},
                  {"penalty", compiled.penalty},
                  {"validation", to_json(report)}};
  if (!a.out.empty() && a.out != "-") std::cout << summary.dump(2) << "\n";

  RunManifest m;
  m.command = "compile";
  m.inputs = {a.model};
  m.outputs = {a.out};
  if (!a.dot.empty()) m.outputs.push_back(a.dot);
  m.parameters = {{"kstar", a.kstar},
                  {"penalty", a.penalty ? Json(*a.penalty) : Json("default")},
                  {"mode", a.fields ? "fields" : a.z2 ? "z2" : "automatic"}};
  write_manifest(m, a.out, start);
  return report.passed ? 0 : exit_code(ErrorKind::validation);
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string model;
  std::string graph;
  std::string penalty = "auto";
  std::string criterion = "full_low_spectrum";
  std::string out;
};

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError(what + " '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw InputError(what + " '" + text + "' is not a number");
  }
  return v;
}

int run_verify(const VerifyArgs& a) {
  const auto start = Clock::now();
  const LogicalIsing model = load_model(a.model);
  const CompiledModel compiled = load_compiled(a.graph);
  if (compiled.n_logical != model.size()) {
    throw InputError("graph was compiled for " + std::to_string(compiled.n_logical) +
                     " spins, model has " + std::to_string(model.size()));
  }
  const PenaltyCriterion criterion = parse_penalty_criterion(a.criterion);
  Json doc;
  double penalty = 0.0;
  if (a.penalty == "auto") {
    const double minimal = minimal_penalty(model, compiled, criterion);
    penalty = 1.1 * minimal;
    doc["minimal_penalty"] = minimal;
  } else {
    penalty = parse_real(a.penalty, "penalty");
    if (penalty < 0.0) throw InputError("penalty must be >= 0");
  }
  const EquivalenceReport report = spectrum_equivalence(model, compiled, penalty);
  doc["criterion"] = to_string(criterion);
  doc["report"] = to_json(report);
  emit(a.out, doc.dump(2) + "\n");

  RunManifest m;
  m.command = "verify";
  m.inputs = {a.model, a.graph};
  m.outputs = {a.out};
  m.parameters = {{"penalty", a.penalty}, {"criterion", a.criterion}};
  write_manifest(m, a.out, start);
  return report.passed() ? 0 : exit_code(ErrorKind::validation);
}

// ---------------------------------------------------------------- penalty

int run_penalty(const VerifyArgs& a) {
  const auto start = Clock::now();
  const LogicalIsing model = load_model(a.model);
  const CompiledModel compiled = load_compiled(a.graph);
  Json doc = Json::object();
  for (const auto c : {PenaltyCriterion::ground_only, PenaltyCriterion::full_low_spectrum}) {
    if (a.criterion != "both" && a.criterion != to_string(c)) continue;
    doc[to_string(c)] = minimal_penalty(model, compiled, c);
  }
  if (doc.empty()) parse_penalty_criterion(a.criterion);
  doc["default_penalty"] = default_penalty(model);
  doc["resolution"] = kPenaltyResolution;
  emit(a.out, doc.dump(2) + "\n");
  RunManifest m;
  m.command = "penalty";
  m.inputs = {a.model, a.graph};
  m.outputs = {a.out};
  m.parameters = {{"criterion", a.criterion}};
  write_manifest(m, a.out, start);
  return 0;
}

// -------------------------------------------------------------- resources

int run_resources(int n_min, int n_max, const std::string& out) {
  if (n_min < 3 || n_max < n_min) throw InputError("need 3 <= n-min <= n-max");
  std::ostringstream csv;
  csv << "# trianneal resources v1\n"
      << "n,mode,qubits_predicted,qubits_actual,couplers_problem,couplers_penalty,"
         "couplers_field,couplers_total,couplers_predicted,couplers_match,ferro_predicted,"
         "ferro_match,max_degree\n";
  for (int n = n_min; n <= n_max; ++n) {
    for (bool fields : {false, true}) {
      const ResourceCounts r = resource_counts(n, fields);
      const CompiledModel c = compile(LogicalIsing(n), 0, 1.0, fields ? FieldMode::fields : FieldMode::z2);
      const auto degrees = c.graph.degrees();
      const int max_degree = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
      csv << n << ',' << (fields ? "fields" : "z2") << ',' << r.n_predicted << ',' << r.n_actual
          << ',' << r.actual.problem << ',' << r.actual.penalty << ',' << r.actual.field << ','
          << r.actual.total() << ','
          << (r.couplers_predicted ? std::to_string(*r.couplers_predicted) : "") << ','
          << (r.couplers_predicted ? (r.couplers_match ? "true" : "false") : "") << ','
          << (r.ferro_predicted ? std::to_string(*r.ferro_predicted) : "") << ','
          << (r.ferro_predicted ? (r.ferro_match ? "true" : "false") : "") << ','
          << max_degree << '\n';
    }
  }
  emit(out, csv.str());
  return 0;
}

// ------------------------------------------------------------- mixed-scan

struct MixedArgs {
  std::string model;
  int unique3sat = 0;
  int instances = 1;
  std::uint64_t seed = 1;
  int grid = 101;
  int refinement = 30;
  bool all_kstar = false;
  std::string out;
};

int run_mixed_scan(const MixedArgs& a) {
  const auto start = Clock::now();
  if (a.model.empty() == (a.unique3sat == 0)) {
    throw InputError("give exactly one of a model file or --unique3sat n");
  }
  if (a.instances < 1) throw InputError("--instances must be >= 1");

  MixedScanConfig config;
  config.schedule = {a.grid, a.refinement};
  config.schedule.validate();

  struct Row {
    GapRatioRecord record;
    int n_spins = 0;
    int n_vars = 0;
    int n_ancillas = 0;
    std::uint64_t seed = 0;
  };
  std::vector<Row> rows;
  if (!a.model.empty()) {
    const LogicalIsing model = load_model(a.model);
    config.instance_id = a.model;
    rows.push_back({kstar_scan(model, config), model.size(), model.size(), 0, a.seed});
  } else {
    for (int i = 0; i < a.instances; ++i) {
      const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i);
      const Unique3Sat inst = unique_3sat_instance(a.unique3sat, seed);
      config.instance_id = "u3sat-" + std::to_string(a.unique3sat) + "-" + std::to_string(seed);
      config.kstar_candidates.clear();
      if (!a.all_kstar) {
        for (int k = 0; k < inst.n_vars; ++k) config.kstar_candidates.push_back(k);
      }
      rows.push_back({kstar_scan(inst.model, config), inst.model.size(), inst.n_vars,
                      inst.n_ancillas(), seed});
      std::cerr << "instance " << (i + 1) << "/" << a.instances << ": best ratio "
                << fmt(rows.back().record.best_ratio) << "\n";
    }
  }
  // Union of scanned k* over all rows; rows may differ under --all-kstar.
  std::vector<int> columns;
  for (const auto& row : rows) {
    for (const auto& [k, r] : row.record.ratios) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
  }
  std::sort(columns.begin(), columns.end());

  std::ostringstream csv;
  csv << "# trianneal mixed-scan v1\n"
      << "instance_id,seed,n_spins,n_vars,n_ancillas,gap_original,lambda_original";
  for (int k : columns) csv << ",ratio_k" << k;
  csv << ",best_ratio,best_kstar,worst_ratio,worst_kstar,best_ratio_sigma,worst_ratio_sigma\n";
  std::vector<double> best, worst;
  for (const auto& row : rows) {
    const auto& r = row.record;
    csv << r.instance_id << ',' << row.seed << ',' << row.n_spins << ',' << row.n_vars << ','
        << row.n_ancillas << ',' << fmt(r.original_gap) << ',' << fmt(r.original_lambda);
    for (int k : columns) {
      const auto it = r.ratios.find(k);
      csv << ',' << (it == r.ratios.end() ? "" : fmt(it->second));
    }
    csv << ',' << fmt(r.best_ratio) << ',' << r.best_kstar << ',' << fmt(r.worst_ratio) << ','
        << r.worst_kstar << ",,\n";
    best.push_back(r.best_ratio);
    worst.push_back(r.worst_ratio);
  }
  auto mean = [](const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  };
  auto sigma = [&](const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double mu = mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
  };
  csv << "summary,,,,,,";
  for (std::size_t i = 0; i < columns.size(); ++i) csv << ',';
  csv << ',' << fmt(mean(best)) << ",," << fmt(mean(worst)) << ",," << fmt(sigma(best)) << ','
      << fmt(sigma(worst)) << '\n';
  emit(a.out, csv.str());

  std::cerr << "mean best ratio " << fmt(mean(best)) << " (sigma " << fmt(sigma(best))
            << "), mean worst ratio " << fmt(mean(worst)) << " (sigma " << fmt(sigma(worst))
            << ") over " << rows.size() << " instance(s)\n";

  RunManifest m;
  m.command = "mixed-scan";
  if (!a.model.empty()) m.inputs = {a.model};
  m.outputs = {a.out};
  m.seed = a.seed;
  m.parameters = {{"unique3sat", a.unique3sat}, {"instances", a.instances},
                  {"grid", a.grid},             {"refinement", a.refinement},
                  {"all_kstar", a.all_kstar},   {"eigen_tolerance", EigenOptions{}.tolerance}};
  write_manifest(m, a.out, start);
  return 0;
}

// -------------------------------------------------------------------- gap

struct GapArgs {
  std::string model;
  std::string graph;
  std::string driver = "standard";
  double jzz = 0.0;
  double alpha = 0.0;
  std::optional<double> penalty;
  int grid = 101;
  int refinement = 30;
  int levels = 4;
  bool no_sector = false;
  std::string trace;
  std::string out;
};

int run_gap(const GapArgs& a) {
  const auto start = Clock::now();
  const LogicalIsing model = load_model(a.model);
  DriverSpec driver;
  driver.kind = parse_driver_kind(a.driver);
  driver.j_zz = a.jzz;
  driver.alpha = a.alpha;
  driver.validate();

  OperatorSpec h0, hf;
  if (a.graph.empty()) {
    if (driver.kind != DriverKind::standard) {
      throw InputError("chain drivers need a compiled graph (--graph)");
    }
    h0 = standard_driver(model.size());
    hf = ising_operator(model);
  } else {
    const CompiledModel compiled = load_compiled(a.graph);
    h0 = layout_driver(driver, compiled.chains, compiled.n_qubits());
    hf = physical_operator(compiled, a.penalty.value_or(compiled.penalty));
  }
  const Operator op0(h0), opf(hf);
  const ScheduleSpec schedule{a.grid, a.refinement};
  std::optional<Sector> sector;
  if (!a.no_sector) sector = anneal_symmetry(op0, opf);
  const MinimalGap gap = minimal_gap(op0, opf, schedule, sector);
  Json doc = {{"lambda_at_min", gap.lambda_at_min},
              {"gap", gap.gap},
              {"coarse_lambda", gap.coarse_lambda},
              {"coarse_gap", gap.coarse_gap},
              {"n_qubits", op0.n_qubits()},
              {"sector_mask", sector ? Json(sector->flip_mask) : Json(nullptr)},
              {"driver", to_string(driver.kind)}};
  emit(a.out, doc.dump(2) + "\n");

  if (!a.trace.empty()) {
    const SpectrumTrace trace = spectrum_trace(op0, opf, a.grid, a.levels, sector);
    std::ostringstream csv;
    csv << "# trianneal gap-trace v1\nlambda";
    for (int k = 0; k < a.levels; ++k) csv << ",E" << k;
    csv << '\n';
    for (std::size_t i = 0; i < trace.lambdas.size(); ++i) {
      csv << fmt(trace.lambdas[i]);
      for (double e : trace.levels[i]) csv << ',' << fmt(e);
      csv << '\n';
    }
    write_text_file(a.trace, csv.str());
  }

  RunManifest m;
  m.command = "gap";
  m.inputs = {a.model};
  if (!a.graph.empty()) m.inputs.push_back(a.graph);
  m.outputs = {a.out};
  if (!a.trace.empty()) m.outputs.push_back(a.trace);
  m.parameters = {{"driver", a.driver}, {"jzz", a.jzz}, {"alpha", a.alpha},
                  {"grid", a.grid},     {"refinement", a.refinement}, {"levels", a.levels},
                  {"no_sector", a.no_sector},
                  {"eigen_tolerance", EigenOptions{}.tolerance}};
  write_manifest(m, a.out, start);
  return 0;
}

// ----------------------------------------------------------- driver-scan

struct ScanArgs {
  std::vector<double> jzz;
  std::vector<double> alpha;
  int lmin = 6;
  int lmax = 16;
  int lstep = 2;
  std::string gap_sector = "even";
  std::string out;
};

int run_driver_scan(const ScanArgs& a) {
  const auto start = Clock::now();
  if (a.jzz.empty() || a.alpha.empty()) {
    throw InputError("empty scan grid: give --jzz and --alpha values");
  }
  if (a.lstep < 1 || a.lmin < 2 || a.lmax < a.lmin) throw InputError("invalid chain lengths");
  DriverScanConfig config;
  config.j_zz = a.jzz;
  config.alpha = a.alpha;
  for (int l = a.lmin; l <= a.lmax; l += a.lstep) config.lengths.push_back(l);
  config.gap_sector = parse_gap_sector(a.gap_sector);
  const auto rows = driver_scan(config);

  std::ostringstream csv;
  csv << "# trianneal driver-scan v1\n"
      << "j_zz,alpha,beta,sigma_beta,zeta,sigma_zeta,c,sigma_c,A,sigma_A,Omega,sigma_Omega,"
         "delta_inf,sigma_delta_inf,gap_lmax,l_max,gap_sector,flags\n";
  const double nan = std::nan("");
  for (const auto& r : rows) {
    const auto& p = r.projection_fit;
    const auto& g = r.gap_fit;
    auto pv = [&](const char* name, bool sigma) {
      return p ? (sigma ? p->sigma(name) : p->value(name)) : nan;
    };
    auto gv = [&](const char* name, bool sigma) {
      return g ? (sigma ? g->sigma(name) : g->value(name)) : nan;
    };
    std::string flags;
    for (const auto& f : r.flags) flags += (flags.empty() ? "" : ";") + f;
    csv << fmt(r.j_zz) << ',' << fmt(r.alpha) << ',' << fmt(r.beta()) << ','
        << fmt(p ? p->derived.at("sigma_beta") : nan) << ',' << fmt(pv("zeta", false)) << ','
        << fmt(pv("zeta", true)) << ',' << fmt(pv("c", false)) << ',' << fmt(pv("c", true))
        << ',' << fmt(gv("A", false)) << ',' << fmt(gv("A", true)) << ','
        << fmt(gv("Omega", false)) << ',' << fmt(gv("Omega", true)) << ','
        << fmt(gv("delta_inf", false)) << ',' << fmt(gv("delta_inf", true)) << ','
        << fmt(r.gap_at_lmax()) << ',' << config.lengths.back() << ','
        << to_string(config.gap_sector) << ',' << flags << '\n';
  }
  emit(a.out, csv.str());

  RunManifest m;
  m.command = "driver-scan";
  m.outputs = {a.out};
  m.parameters = {{"jzz", a.jzz},   {"alpha", a.alpha},
                  {"lengths", config.lengths}, {"gap_sector", a.gap_sector},
                  {"eigen_tolerance", EigenOptions{}.tolerance}};
  write_manifest(m, a.out, start);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trianneal: compile Ising models to a degree-3 triangle architecture, verify "
               "the embedding, and analyse annealing spectra.\n"
               "Exit codes: 0 success, 2 input, 3 validation, 4 resource, 5 numerical.\n"
               "CSV schemas are listed in docs/csv_schema.md."};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers,
                 "Worker threads (default: TRIANNEAL_WORKERS or hardware concurrency)")
      ->check(CLI::NonNegativeNumber);

  CompileArgs compile_args;
  auto* compile_cmd = app.add_subcommand("compile", "Compile a model JSON to a hardware graph");
  compile_cmd->add_option("model", compile_args.model, "Model JSON")->required();
  compile_cmd->add_option("--kstar", compile_args.kstar, "Selected node k*");
  compile_cmd->add_option("--penalty", compile_args.penalty, "Chain penalty J_P");
  compile_cmd->add_flag("--fields", compile_args.fields, "Force the field-carrying layout");
  compile_cmd->add_flag("--z2", compile_args.z2, "Force the Z2 layout (model must have no fields)");
  compile_cmd->add_option("--out", compile_args.out, "Compiled artifact JSON")->required();
  compile_cmd->add_option("--dot", compile_args.dot, "Graphviz output");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive spectrum-equivalence check");
  verify_cmd->add_option("model", verify_args.model, "Model JSON")->required();
  verify_cmd->add_option("graph", verify_args.graph, "Compiled artifact JSON")->required();
  verify_cmd->add_option("--penalty", verify_args.penalty,
                         "auto (1.1 x minimal penalty) or a value");
  verify_cmd->add_option("--criterion", verify_args.criterion,
                         "ground_only | full_low_spectrum (used by --penalty auto)");
  verify_cmd->add_option("--out", verify_args.out, "Report JSON (default stdout)");

  VerifyArgs penalty_args;
  penalty_args.criterion = "both";
  auto* penalty_cmd = app.add_subcommand("penalty", "Minimal chain penalty by bisection");
  penalty_cmd->add_option("model", penalty_args.model, "Model JSON")->required();
  penalty_cmd->add_option("graph", penalty_args.graph, "Compiled artifact JSON")->required();
  penalty_cmd->add_option("--criterion", penalty_args.criterion,
                          "ground_only | full_low_spectrum | both");
  penalty_cmd->add_option("--out", penalty_args.out, "Result JSON (default stdout)");

  int res_min = 3, res_max = 50;
  std::string res_out;
  auto* res_cmd = app.add_subcommand("resources", "Qubit and coupler counts per N (CSV)");
  res_cmd->add_option("--n-min", res_min, "Smallest N");
  res_cmd->add_option("--n-max", res_max, "Largest N");
  res_cmd->add_option("--out", res_out, "CSV output (default stdout)");

  MixedArgs mixed_args;
  auto* mixed_cmd = app.add_subcommand(
      "mixed-scan",
      "Minimal-gap ratios of mixed formulations over k*.\n"
      "CSV columns: instance_id, seed, n_spins, n_vars, n_ancillas, gap_original, "
      "lambda_original, ratio_k<j>..., best_ratio, best_kstar, worst_ratio, worst_kstar, "
      "best_ratio_sigma, worst_ratio_sigma; the last row is the summary (means and sigmas).");
  mixed_cmd->add_option("model", mixed_args.model, "Model JSON");
  mixed_cmd->add_option("--unique3sat", mixed_args.unique3sat,
                        "Generate UNIQUE 3-SAT instances with this many variables");
  mixed_cmd->add_option("--instances", mixed_args.instances, "Number of generated instances");
  mixed_cmd->add_option("--seed", mixed_args.seed, "Seed of the first instance");
  mixed_cmd->add_option("--grid", mixed_args.grid, "Coarse lambda grid size");
  mixed_cmd->add_option("--refinement", mixed_args.refinement, "Golden-section iterations");
  mixed_cmd->add_flag("--all-kstar", mixed_args.all_kstar,
                      "Also try ancilla spins as k* for generated instances");
  mixed_cmd->add_option("--out", mixed_args.out, "CSV output (default stdout)");

  GapArgs gap_args;
  auto* gap_cmd = app.add_subcommand(
      "gap", "Minimal gap of a linear anneal; optional (lambda, E0..Ek) trace CSV");
  gap_cmd->add_option("model", gap_args.model, "Model JSON")->required();
  gap_cmd->add_option("--graph", gap_args.graph, "Anneal the compiled Hamiltonian instead");
  gap_cmd->add_option("--driver", gap_args.driver, "standard | tfim | xyz | ghz");
  gap_cmd->add_option("--jzz", gap_args.jzz, "Chain ZZ strength");
  gap_cmd->add_option("--alpha", gap_args.alpha, "XX/ZZ ratio of the xyz driver");
  gap_cmd->add_option("--penalty", gap_args.penalty, "Penalty override for --graph");
  gap_cmd->add_option("--grid", gap_args.grid, "Coarse lambda grid size");
  gap_cmd->add_option("--refinement", gap_args.refinement, "Golden-section iterations");
  gap_cmd->add_option("--levels", gap_args.levels, "Levels per trace row");
  gap_cmd->add_flag("--no-sector", gap_args.no_sector,
                    "Do not restrict to the even sector of a detected flip symmetry");
  gap_cmd->add_option("--trace", gap_args.trace, "Trace CSV output");
  gap_cmd->add_option("--out", gap_args.out, "Result JSON (default stdout)");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand(
      "driver-scan",
      "Projection-decay and gap-extrapolation fits over a (J_zz, alpha) grid.\n"
      "CSV columns: j_zz, alpha, beta, sigma_beta, zeta, sigma_zeta, c, sigma_c, A, sigma_A, "
      "Omega, sigma_Omega, delta_inf, sigma_delta_inf, gap_lmax, l_max, gap_sector, flags.");
  scan_cmd->add_option("--jzz", scan_args.jzz, "J_zz values")->delimiter(',');
  scan_cmd->add_option("--alpha", scan_args.alpha, "alpha values")->delimiter(',');
  scan_cmd->add_option("--lmin", scan_args.lmin, "Shortest chain");
  scan_cmd->add_option("--lmax", scan_args.lmax, "Longest chain (<= 20)");
  scan_cmd->add_option("--lstep", scan_args.lstep, "Chain length step");
  scan_cmd->add_option("--gap-sector", scan_args.gap_sector, "even | any");
  scan_cmd->add_option("--out", scan_args.out, "CSV output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code(ErrorKind::input);
  }
  if (workers > 0) setenv("TRIANNEAL_WORKERS", std::to_string(workers).c_str(), 1);

  try {
    if (*compile_cmd) return run_compile(compile_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*penalty_cmd) return run_penalty(penalty_args);
    if (*res_cmd) return run_resources(res_min, res_max, res_out);
    if (*mixed_cmd) return run_mixed_scan(mixed_args);
    if (*gap_cmd) return run_gap(gap_args);
    if (*scan_cmd) return run_driver_scan(scan_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return exit_code(ErrorKind::resource);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(ErrorKind::numerical);
  }
  return exit_code(ErrorKind::input);
}
