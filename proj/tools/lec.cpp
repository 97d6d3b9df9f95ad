// Pipeline driver: reduce, solve, verify, round-trip, invariant audit,
// statistics, and test-formula generation.

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lec/cnf.hpp"
#include "lec/conflict.hpp"
#include "lec/instance.hpp"
#include "lec/io.hpp"
#include "lec/reduce_multi.hpp"
#include "lec/reduce_simple.hpp"
#include "lec/regularize.hpp"
#include "lec/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

lec::CnfFormula load_cnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lec::parse_error("cannot open " + path);
  return lec::parse_dimacs(in);
}

lec::LecInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lec::parse_error("cannot open " + path);
  return lec::read_instance(in);
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lec::parse_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw lec::parse_error(std::string("bad JSON in ") + path + ": " + ex.what());
  }
}

struct Pipeline {
  lec::Sat34Formula psi;
  lec::ConflictGraph cg;
};

Pipeline prepare(const lec::CnfFormula& phi, bool simple, int min_root,
                 int occurrence_bound) {
  Pipeline p;
  p.psi = lec::regularize(phi);
  if (p.psi.occurrence_bound > occurrence_bound)
    throw std::runtime_error("regularized formula needs occurrence bound " +
                             std::to_string(p.psi.occurrence_bound) +
                             ", requested " + std::to_string(occurrence_bound));
  p.psi.occurrence_bound = occurrence_bound;
  if (simple) p.psi = lec::pad_to_square(p.psi, min_root);
  p.cg = lec::build_conflict_graph(p.psi);
  return p;
}

void print_stats(const lec::LecInstance& inst) {
  std::cout << "mode " << (inst.mode == lec::GraphMode::Multigraph ? "multi" : "simple")
            << "\n";
  std::cout << "vertices " << inst.num_vertices << "\n";
  std::cout << "edges " << inst.num_edges() << "\n";
  std::cout << "colors " << inst.colors.size() << "\n";
  std::cout << "list_length_total " << inst.total_list_length() << "\n";
}

int cmd_reduce(const std::string& cnf_path, const std::string& target,
               const std::string& out_path, const std::string& prov_path,
               int min_root, int occurrence_bound) {
  lec::CnfFormula phi = load_cnf(cnf_path);
  Pipeline p = prepare(phi, target == "simple", min_root, occurrence_bound);

  lec::LecInstance inst;
  nlohmann::json prov;
  if (target == "multi") {
    lec::MultiReduction red = lec::build_multi(p.psi, p.cg);
    inst = std::move(red.instance);
    prov = lec::multi_provenance_to_json(red.provenance);
  } else {
    lec::SimpleReduction red = lec::build_simple(p.psi, p.cg);
    inst = std::move(red.instance);
    prov = lec::simple_provenance_to_json(red.provenance);
  }

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  lec::write_instance(out, inst);
  if (!prov_path.empty()) {
    std::ofstream pout(prov_path);
    if (!pout) throw std::runtime_error("cannot write " + prov_path);
    pout << prov.dump(2) << "\n";
  }
  print_stats(inst);
  std::cout << "classes " << std::max(1, p.cg.num_classes) << "\n";
  return kExitOk;
}

int cmd_solve(const std::string& inst_path, const std::string& method,
              long long budget, const std::string& out_path) {
  lec::LecInstance inst = load_instance(inst_path);
  lec::SearchConfig cfg;
  cfg.node_budget = budget;

  std::optional<lec::Coloring> witness;
  lec::Verdict verdict;
  if (method == "ie" || (method == "auto" && inst.num_edges() <= 26)) {
    std::int64_t count = lec::count_colorings_ie(inst);  // throws past 26 edges
    std::cout << "count " << count << "\n";
    verdict = count > 0 ? lec::Verdict::Yes : lec::Verdict::No;
    if (verdict == lec::Verdict::Yes && !out_path.empty()) {
      lec::SolveOutcome o = lec::solve_backtracking(inst, cfg);
      if (o.status == lec::SolveStatus::Colorable) witness = o.witness;
    }
  } else {
    lec::SolveOutcome o = lec::solve_backtracking(inst, cfg);
    std::cout << "nodes " << o.nodes << "\n";
    switch (o.status) {
      case lec::SolveStatus::Colorable:
        verdict = lec::Verdict::Yes;
        witness = o.witness;
        break;
      case lec::SolveStatus::NotColorable: verdict = lec::Verdict::No; break;
      default: verdict = lec::Verdict::Unknown; break;
    }
  }

  switch (verdict) {
    case lec::Verdict::Yes: std::cout << "YES\n"; break;
    case lec::Verdict::No: std::cout << "NO\n"; break;
    case lec::Verdict::Unknown: std::cout << "UNKNOWN\n"; break;
  }
  if (witness && !out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    lec::write_coloring(out, *witness);
  }
  return verdict == lec::Verdict::Unknown ? kExitSemantic : kExitOk;
}

int cmd_verify(const std::string& inst_path, const std::string& col_path) {
  lec::LecInstance inst = load_instance(inst_path);
  std::ifstream cin_(col_path);
  if (!cin_) throw lec::parse_error("cannot open " + col_path);
  lec::Coloring col = lec::read_coloring(cin_, inst.num_edges());
  for (int c : col.assignment)
    if (c < 0 || c >= static_cast<int>(inst.colors.size()))
      throw lec::parse_error("color id out of range in coloring");
  auto violations = lec::validate_coloring(inst, col);
  for (const auto& v : violations) std::cout << v.detail << "\n";
  std::cout << (violations.empty() ? "valid" : "invalid") << "\n";
  return violations.empty() ? kExitOk : kExitSemantic;
}

int cmd_roundtrip(const std::string& cnf_path, const std::string& target,
                  int min_root, int occurrence_bound, long long budget) {
  lec::CnfFormula phi = load_cnf(cnf_path);
  Pipeline p = prepare(phi, target == "simple", min_root, occurrence_bound);

  std::optional<lec::Assignment> model = lec::brute_force_sat(p.psi.inner);
  std::cout << "oracle " << (model ? "SAT" : "UNSAT") << "\n";

  bool ok = true;
  if (target == "multi") {
    lec::MultiReduction red = lec::build_multi(p.psi, p.cg);
    if (model) {
      lec::Coloring col =
          lec::assignment_to_coloring_multi(p.psi, red.provenance, red.instance, *model);
      auto viol = lec::validate_coloring(red.instance, col);
      std::cout << "translated_coloring " << (viol.empty() ? "valid" : "invalid") << "\n";
      ok = ok && viol.empty();
      lec::Assignment back =
          lec::coloring_to_assignment_multi(red.provenance, red.instance, col);
      bool sat = back.satisfies(p.psi.inner);
      std::cout << "extracted_assignment " << (sat ? "satisfies" : "violates") << "\n";
      ok = ok && sat;
    } else if (red.instance.num_edges() <= 26) {
      lec::Verdict v = lec::decide(red.instance);
      std::cout << "decide " << (v == lec::Verdict::No ? "NO" : "YES") << "\n";
      ok = ok && v == lec::Verdict::No;
    } else {
      lec::SearchConfig cfg;
      cfg.node_budget = budget;
      lec::SolveOutcome o = lec::solve_backtracking(red.instance, cfg);
      const char* tag = o.status == lec::SolveStatus::NotColorable ? "NO"
                        : o.status == lec::SolveStatus::Colorable ? "YES"
                                                                  : "UNKNOWN";
      std::cout << "solver_best_effort " << tag << "\n";
      ok = ok && o.status != lec::SolveStatus::Colorable;
    }
  } else {
    lec::SimpleReduction red = lec::build_simple(p.psi, p.cg);
    auto inv = lec::check_invariants(red.instance, red.provenance);
    std::cout << "invariants " << (inv.empty() ? "clean" : "violated") << "\n";
    ok = ok && inv.empty();
    if (model) {
      lec::Coloring col =
          lec::assignment_to_coloring_simple(p.psi, red.provenance, red.instance, *model);
      auto viol = lec::validate_coloring(red.instance, col);
      std::cout << "translated_coloring " << (viol.empty() ? "valid" : "invalid") << "\n";
      ok = ok && viol.empty();
      lec::Assignment back =
          lec::coloring_to_assignment_simple(red.provenance, red.instance, col);
      bool sat = back.satisfies(p.psi.inner);
      std::cout << "extracted_assignment " << (sat ? "satisfies" : "violates") << "\n";
      ok = ok && sat;
    } else {
      lec::SearchConfig cfg;
      cfg.node_budget = budget;
      lec::SolveOutcome o = lec::solve_backtracking(red.instance, cfg);
      const char* tag = o.status == lec::SolveStatus::NotColorable ? "NO"
                        : o.status == lec::SolveStatus::Colorable ? "YES"
                                                                  : "UNKNOWN";
      std::cout << "solver_best_effort " << tag << "\n";
      ok = ok && o.status != lec::SolveStatus::Colorable;
    }
  }
  std::cout << (ok ? "roundtrip ok" : "roundtrip FAILED") << "\n";
  return ok ? kExitOk : kExitSemantic;
}

int cmd_invariants(const std::string& inst_path, const std::string& prov_path) {
  lec::LecInstance inst = load_instance(inst_path);
  nlohmann::json j = load_json(prov_path);
  std::string mode = j.value("mode", "");
  if (mode == "simple") {
    lec::SimpleProvenance prov = lec::simple_provenance_from_json(j);
    auto viol = lec::check_invariants(inst, prov);
    for (const auto& v : viol) std::cout << v.rule << ": " << v.detail << "\n";
    std::cout << (viol.empty() ? "clean" : "violated") << "\n";
    return viol.empty() ? kExitOk : kExitSemantic;
  }
  if (mode == "multi") {
    lec::MultiProvenance prov = lec::multi_provenance_from_json(j);
    bool ok = true;
    if (inst.num_vertices != 2 * prov.R + 1) {
      std::cout << "vertices: expected " << 2 * prov.R + 1 << ", found "
                << inst.num_vertices << "\n";
      ok = false;
    }
    if (inst.num_edges() != 2 * prov.R * prov.num_vars) {
      std::cout << "edges: expected " << 2 * prov.R * prov.num_vars
                << ", found " << inst.num_edges() << "\n";
      ok = false;
    }
    if (static_cast<int>(prov.roles.size()) != inst.num_edges()) {
      std::cout << "roles: count mismatch\n";
      ok = false;
    }
    std::cout << (ok ? "clean" : "violated") << "\n";
    return ok ? kExitOk : kExitSemantic;
  }
  throw lec::parse_error("provenance file lacks a known 'mode'");
}

int cmd_stats(const std::string& inst_path) {
  print_stats(load_instance(inst_path));
  return kExitOk;
}

// Random small formulas for testing: clauses over 3 distinct variables,
// uniform signs. Deterministic per seed.
int cmd_gen(int vars, int clauses, unsigned seed) {
  if (vars < 3) throw std::runtime_error("need at least 3 variables");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick_var(0, vars - 1);
  std::uniform_int_distribution<int> pick_sign(0, 1);
  std::cout << "p cnf " << vars << " " << clauses << "\n";
  for (int i = 0; i < clauses; ++i) {
    std::set<int> vs;
    while (static_cast<int>(vs.size()) < 3) vs.insert(pick_var(rng));
    for (int v : vs) std::cout << (pick_sign(rng) ? v + 1 : -(v + 1)) << " ";
    std::cout << "0\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAT-to-list-edge-coloring pipeline"};
  app.require_subcommand(1);

  std::string cnf_path, inst_path, prov_path, col_path, out_path;
  std::string target = "multi", method = "auto";
  int min_root = 0, occurrence_bound = 5;
  long long budget = -1;
  int gen_vars = 6, gen_clauses = 4;
  unsigned seed = 0;

  auto* reduce = app.add_subcommand("reduce", "build a coloring instance from a CNF");
  reduce->add_option("cnf", cnf_path, "DIMACS input")->required();
  reduce->add_option("--target", target)->check(CLI::IsMember({"multi", "simple"}));
  reduce->add_option("--out", out_path, "instance output path")->required();
  reduce->add_option("--provenance", prov_path, "provenance JSON output path");
  reduce->add_option("--min-root", min_root);
  reduce->add_option("--occurrence-bound", occurrence_bound)
      ->check(CLI::IsMember({4, 5}));

  auto* solve = app.add_subcommand("solve", "decide list edge colorability");
  solve->add_option("instance", inst_path)->required();
  solve->add_option("--method", method)->check(CLI::IsMember({"auto", "ie", "backtrack"}));
  solve->add_option("--budget", budget, "node budget, -1 for unlimited");
  solve->add_option("--out", out_path, "witness coloring output path");

  auto* verify = app.add_subcommand("verify", "check a coloring against an instance");
  verify->add_option("instance", inst_path)->required();
  verify->add_option("coloring", col_path)->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "oracle-checked end-to-end run");
  roundtrip->add_option("cnf", cnf_path)->required();
  roundtrip->add_option("--target", target)->check(CLI::IsMember({"multi", "simple"}));
  roundtrip->add_option("--min-root", min_root);
  roundtrip->add_option("--occurrence-bound", occurrence_bound)
      ->check(CLI::IsMember({4, 5}));
  roundtrip->add_option("--budget", budget);

  auto* invariants = app.add_subcommand("invariants", "audit structural invariants");
  invariants->add_option("instance", inst_path)->required();
  invariants->add_option("provenance", prov_path)->required();

  auto* stats = app.add_subcommand("stats", "print instance counters");
  stats->add_option("instance", inst_path)->required();

  auto* gen = app.add_subcommand("gen", "emit a random test CNF");
  gen->add_option("--vars", gen_vars);
  gen->add_option("--clauses", gen_clauses);
  gen->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (reduce->parsed())
      return cmd_reduce(cnf_path, target, out_path, prov_path, min_root,
                        occurrence_bound);
    if (solve->parsed()) return cmd_solve(inst_path, method, budget, out_path);
    if (verify->parsed()) return cmd_verify(inst_path, col_path);
    if (roundtrip->parsed())
      return cmd_roundtrip(cnf_path, target, min_root, occurrence_bound, budget);
    if (invariants->parsed()) return cmd_invariants(inst_path, prov_path);
    if (stats->parsed()) return cmd_stats(inst_path);
    if (gen->parsed()) return cmd_gen(gen_vars, gen_clauses, seed);
  } catch (const lec::parse_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitSemantic;
  }
  return kExitUsage;
}
