// mbg: patterns, fermion groupoids, CAR symbolics, sector Hamiltonians and
// the property-suite runner, all behind one multi-command interface.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbg/canonical.hpp"
#include "mbg/pattern_io.hpp"
#include "mbg/sector_io.hpp"
#include "mbg/spectra.hpp"
#include "mbg/suites.hpp"

using namespace mbg;

namespace {

int print_suites(const std::vector<SuiteReport>& reports, const std::string& selector,
                 const SuiteOptions& opt, const std::string& json_path) {
  bool all = true;
  for (const SuiteReport& r : reports) {
    for (const CheckResult& c : r.checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << c.name;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
      all = all && c.pass;
    }
  }
  std::string j = suites_to_json(reports, selector, opt);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << j << "\n";
  } else {
    std::cout << j << "\n";
  }
  std::cout << (all ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
  return all ? 0 : 1;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"many-body groupoid workbench"};
  app.require_subcommand(1);

  std::uint64_t seed = 7;
  double window = 10.0;
  double tol = 1e-12;
  app.add_option("--seed", seed, "global RNG seed")->capture_default_str();
  app.add_option("--window", window, "pattern window radius")->capture_default_str();
  app.add_option("--tol", tol, "numeric tolerance for checks")->capture_default_str();

  // ---- pattern ----
  auto* sp = app.add_subcommand("pattern", "generate, measure, validate point patterns");
  sp->require_subcommand(1);

  auto* gen = sp->add_subcommand("gen", "generate a pattern");
  std::string gen_kind = "periodic", gen_out = "pattern.json";
  GeneratorParams gp;
  gen->add_option("--kind", gen_kind,
                  "periodic | random_displaced | triplet_rotation | perturbed_periodic")
      ->capture_default_str();
  gen->add_option("--dim", gp.dim)->capture_default_str();
  gen->add_option("--lambda", gp.lambda)->capture_default_str();
  gen->add_option("--epsilon", gp.epsilon)->capture_default_str();
  gen->add_option("--theta", gp.theta)->capture_default_str();
  gen->add_option("--spacing,-D", gp.D)->capture_default_str();
  gen->add_option("--triplet-r", gp.r)->capture_default_str();
  gen->add_option("--count", gp.count)->capture_default_str();
  gen->add_option("-o,--output", gen_out)->capture_default_str();

  auto* metric = sp->add_subcommand("metric", "pattern metric between two files");
  std::string metric_a, metric_b;
  int metric_grid = 256;
  metric->add_option("a", metric_a)->required();
  metric->add_option("b", metric_b)->required();
  metric->add_option("--grid", metric_grid)->capture_default_str();

  auto* validate = sp->add_subcommand("validate", "Delone validation report");
  std::string validate_file;
  validate->add_option("file", validate_file)->required();

  // ---- module check runners ----
  SuiteOptions sopt;
  std::string check_json;

  auto add_check = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    auto* sub = c->add_subcommand("check", "run the " + name + " property suite");
    sub->add_option("--sites", sopt.sites)->capture_default_str();
    sub->add_option("--samples", sopt.samples)->capture_default_str();
    sub->add_option("--json", check_json, "write the JSON report to a file");
    return sub;
  };
  auto* car_check = add_check("car", "exact CAR algebra");
  auto* fock_check = add_check("fock", "Fock sectors and the full-Fock oracle");

  auto* galg = app.add_subcommand("galg", "groupoid convolution algebra");
  auto* galg_check = galg->add_subcommand("check", "run the convolution algebra suite");
  std::string galg_pattern;
  galg_check->add_option("--pattern", galg_pattern, "pattern file (defaults to a chain)");
  galg_check->add_option("--arity", sopt.arity)->capture_default_str();
  galg_check->add_option("--samples", sopt.samples)->capture_default_str();
  galg_check->add_option("--json", check_json);

  auto* grp = app.add_subcommand("groupoid", "N-fermion groupoid");
  auto* grp_verify = grp->add_subcommand("verify", "run the groupoid axiom suite");
  std::string grp_pattern;
  grp_verify->add_option("--pattern", grp_pattern, "pattern file (defaults to built-ins)");
  grp_verify->add_option("--arity", sopt.arity)->capture_default_str();
  grp_verify->add_option("--samples", sopt.samples)->capture_default_str();
  grp_verify->add_option("--json", check_json);

  // ---- ham ----
  auto* ham = app.add_subcommand("ham", "assemble and diagonalize sector Hamiltonians");
  ham->require_subcommand(1);
  auto* ham_assemble = ham->add_subcommand("assemble", "assemble a sector operator");
  std::string ham_pattern, ham_spec, ham_out = "op.mtx", ham_basis_out;
  int ham_n = 1;
  ham_assemble->add_option("--pattern", ham_pattern)->required();
  ham_assemble->add_option("--N", ham_n)->required();
  ham_assemble->add_option("--spec", ham_spec)->required();
  ham_assemble->add_option("-o,--output", ham_out)->capture_default_str();
  ham_assemble->add_option("--basis-out", ham_basis_out, "also export the basis CSV");

  auto* ham_spectrum = ham->add_subcommand("spectrum", "dense eigensolve of an operator file");
  std::string spec_in, spec_out = "eig.csv";
  int spec_cap = 6000;
  ham_spectrum->add_option("input", spec_in)->required();
  ham_spectrum->add_option("-o,--output", spec_out)->capture_default_str();
  ham_spectrum->add_option("--cap", spec_cap)->capture_default_str();

  // ---- canon ----
  auto* canon = app.add_subcommand("canon", "canonical orders on perturbed lattices");
  auto* canon_order_cmd = canon->add_subcommand("order", "canonical order of a subset");
  std::string canon_pattern, canon_subset;
  canon_order_cmd->add_option("--pattern", canon_pattern)->required();
  canon_order_cmd->add_option("--subset", canon_subset, "comma-separated point indices")
      ->required();

  // ---- experiment ----
  auto* exp = app.add_subcommand("experiment", "numerical experiments");
  auto* selfbind = exp->add_subcommand("selfbinding", "two-body self-binding spectra");
  SelfBindingConfig sb;
  std::string sb_out = "selfbinding.csv", sb_config;
  selfbind->add_option("--config", sb_config, "JSON config file (overrides flags)");
  selfbind->add_option("--sites", sb.sites)->capture_default_str();
  selfbind->add_option("--N", sb.N)->capture_default_str();
  selfbind->add_option("--t", sb.t)->capture_default_str();
  selfbind->add_option("--u", sb.u)->capture_default_str();
  selfbind->add_option("--gap-factor", sb.gap_factor)->capture_default_str();
  selfbind->add_option("--cap", sb.dim_cap)->capture_default_str();
  selfbind->add_option("--pattern", sb.pattern_file);
  selfbind->add_option("-o,--output", sb_out)->capture_default_str();

  // ---- check (property suite runner) ----
  auto* check = app.add_subcommand("check", "run property suites by selector");
  std::string selector = "all";
  check->add_option("selector", selector,
                    "all | pattern | cover | groupoid | twoaction | car | fock | ham | "
                    "galg | canon")
      ->capture_default_str();
  check->add_option("--sites", sopt.sites)->capture_default_str();
  check->add_option("--samples", sopt.samples)->capture_default_str();
  check->add_option("--arity", sopt.arity)->capture_default_str();
  check->add_option("--json", check_json);

  // Let the global --seed/--window/--tol flags appear after subcommand names.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; })) {
      s->fallthrough();
      enable_fallthrough(s);
    }
  };
  enable_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  sopt.seed = seed;
  sopt.tol = tol;
  gp.window = window;

  try {
    if (gen->parsed()) {
      Pattern p = generate(gen_kind, gp, seed);
      save_pattern(p, gen_out);
      std::cout << "wrote " << gen_out << " with " << p.points.size() << " points\n";
      return 0;
    }
    if (metric->parsed()) {
      Pattern a = load_pattern(metric_a), b = load_pattern(metric_b);
      double rad = std::min(a.window_radius, b.window_radius);
      std::cout << "comparison radius " << rad << "\n";
      std::cout << pattern_metric(a, b, metric_grid) << "\n";
      return 0;
    }
    if (validate->parsed()) {
      Pattern p = load_pattern(validate_file);
      DeloneReport r = validate_delone(p);
      for (const auto& v : r.violations) std::cout << "violation: " << v.detail << "\n";
      std::cout << (r.valid ? "valid (r,R)-Delone sample" : "NOT a Delone sample") << "\n";
      return r.valid ? 0 : 1;
    }
    if (car_check->parsed())
      return print_suites(run_property_suites("car", sopt), "car", sopt, check_json);
    if (fock_check->parsed())
      return print_suites(run_property_suites("fock", sopt), "fock", sopt, check_json);
    if (galg_check->parsed()) {
      if (!galg_pattern.empty())
        sopt.pattern = std::make_shared<Pattern>(load_pattern(galg_pattern));
      return print_suites(run_property_suites("galg", sopt), "galg", sopt, check_json);
    }
    if (grp_verify->parsed()) {
      if (!grp_pattern.empty())
        sopt.pattern = std::make_shared<Pattern>(load_pattern(grp_pattern));
      std::vector<SuiteReport> reports = run_property_suites("groupoid", sopt);
      auto two = run_property_suites("twoaction", sopt);
      reports.insert(reports.end(), two.begin(), two.end());
      return print_suites(reports, "groupoid", sopt, check_json);
    }
    if (ham_assemble->parsed()) {
      auto lattice = std::make_shared<Pattern>(load_pattern(ham_pattern));
      auto coeffs = load_hamiltonian_spec(ham_spec);
      SectorOperator op = assemble_sector(coeffs, lattice, ham_n);
      save_matrix_market(op, ham_out);
      if (!ham_basis_out.empty())
        save_basis_csv(make_sector_basis(lattice, ham_n), ham_basis_out);
      std::cout << "wrote " << ham_out << " (dim " << op.dim << ", nnz "
                << op.entries.size() << ")\n";
      return 0;
    }
    if (ham_spectrum->parsed()) {
      SectorOperator op = load_matrix_market(spec_in);
      op.hermitian = true;
      EigenSystem sys = eigensolve(op, true, spec_cap);
      std::ofstream out(spec_out);
      out << "index,eigenvalue\n";
      out.precision(17);
      for (std::size_t i = 0; i < sys.values.size(); ++i)
        out << i << "," << sys.values[i] << "\n";
      double trace = 0.0;
      for (const auto& [r, c, v] : op.entries)
        if (r == c) trace += v.real();
      double esum = 0.0;
      for (double e : sys.values) esum += e;
      double dev = std::abs(trace - esum);
      bool trace_ok = dev <= 1e-8 * std::max(1.0, std::abs(trace));
      std::cout << "wrote " << spec_out << "; trace check |tr - sum| = " << dev
                << (trace_ok ? "" : "  EXCEEDS 1e-8 RELATIVE BOUND") << "\n";
      return trace_ok ? 0 : 3;
    }
    if (canon_order_cmd->parsed()) {
      auto p = std::make_shared<Pattern>(load_pattern(canon_pattern));
      LabeledPattern lp = label_bijection(p);
      PatternInstance inst = PatternInstance::untranslated(p);
      auto order = canonical_order(lp, inst, parse_index_list(canon_subset));
      for (std::size_t i = 0; i < order.size(); ++i)
        std::cout << order[i] << (i + 1 < order.size() ? "," : "\n");
      return 0;
    }
    if (selfbind->parsed()) {
      if (!sb_config.empty()) {
        std::ifstream in(sb_config);
        if (!in) throw std::runtime_error("cannot open " + sb_config);
        nlohmann::json j;
        in >> j;
        sb.sites = j.value("sites", sb.sites);
        sb.N = j.value("N", sb.N);
        sb.t = j.value("t", sb.t);
        sb.u = j.value("u", sb.u);
        sb.gap_factor = j.value("gap_factor", sb.gap_factor);
        sb.dim_cap = j.value("dim_cap", sb.dim_cap);
        sb.pattern_file = j.value("pattern_file", sb.pattern_file);
      }
      SelfBindingReport rep = run_selfbinding_experiment(sb);
      write_selfbinding_csv(rep, sb_out);
      std::cout << "wrote " << sb_out << "\n";
      int islands = rep.island_mean_distance.size();
      std::cout << "islands: " << islands << "\n";
      for (int i = 0; i < islands; ++i)
        std::cout << "  island " << i << ": [" << rep.island_min[i] << ", "
                  << rep.island_max[i] << "], mean pair distance "
                  << rep.island_mean_distance[i] << "\n";
      if (rep.bound_island >= 0)
        std::cout << "bound island " << rep.bound_island << " with gap " << rep.bound_gap
                  << "\n";
      return 0;
    }
    if (check->parsed())
      return print_suites(run_property_suites(selector, sopt), selector, sopt, check_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
