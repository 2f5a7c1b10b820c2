// socolor: build graph families, verify and search strong odd colorings,
// evaluate the closed forms and write checkable certificates.
//
// Exit status: 0 pass, 1 usage or parse error, 2 violation or refutation,
// 3 budget exhausted, 4 certification failure.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "socolor/certificate.hpp"
#include "socolor/embedding.hpp"
#include "socolor/error.hpp"
#include "socolor/families.hpp"
#include "socolor/io.hpp"
#include "socolor/oracle.hpp"
#include "socolor/solver.hpp"
#include "socolor/verify.hpp"

namespace {

using namespace soc;

enum Exit : int {
  kPass = 0,
  kParse = 1,
  kViolation = 2,
  kBudget = 3,
  kCertification = 4,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::chrono::milliseconds parse_duration(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("bad duration '" + text + "'");
  }
  const auto unit = text.substr(used);
  double ms = 0;
  if (unit.empty() || unit == "s") ms = value * 1000;
  else if (unit == "ms") ms = value;
  else if (unit == "m") ms = value * 60'000;
  else if (unit == "h") ms = value * 3'600'000;
  else throw UsageError("bad duration unit in '" + text + "'");
  if (ms < 0) throw UsageError("negative duration '" + text + "'");
  return std::chrono::milliseconds(static_cast<long long>(ms));
}

struct BudgetFlags {
  std::string timeout;
  std::uint64_t max_nodes = 0;
  unsigned jobs = 1;
  std::string order = "degree";
  bool no_lookahead = false;

  void attach(CLI::App* app) {
    app->add_option("--timeout", timeout, "Wall-clock budget, e.g. 30s, 500ms, 5m");
    app->add_option("--max-nodes", max_nodes, "Search node budget");
    app->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    app->add_option("--order", order, "Vertex order")
        ->check(CLI::IsMember({"degree", "index", "reverse"}));
    app->add_flag("--no-lookahead", no_lookahead, "Disable repairability pruning");
  }

  SolveOptions options() const {
    SolveOptions o;
    if (!timeout.empty()) o.budget.max_time = parse_duration(timeout);
    if (max_nodes > 0) o.budget.max_nodes = max_nodes;
    o.jobs = jobs;
    o.lookahead = !no_lookahead;
    o.order = order == "index"     ? VertexOrder::index
              : order == "reverse" ? VertexOrder::reverse_index
                                   : VertexOrder::degree_desc;
    return o;
  }
};

Graph load_graph(const std::string& path) { return from_dimacs(read_file(path)); }

std::string seconds_text(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << s << 's';
  return out.str();
}

// ---- gen -------------------------------------------------------------------

struct GenFlags {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::string out;
  std::string labels;
  std::string rotation;
  std::string coloring;
  bool embed = false;
};

FamilySpec family_from_flags(const GenFlags& f, CLI::App* app) {
  auto need = [&](const char* flag) {
    if (app->count(flag) == 0) throw UsageError("--family " + f.family + " needs " + flag);
  };
  if (f.family == "cycle") { need("--n"); return family::Cycle{f.n}; }
  if (f.family == "empty") { need("--m"); return family::Empty{f.m}; }
  if (f.family == "complete") { need("--k"); return family::Complete{f.k}; }
  if (f.family == "wheel") { need("--n"); return family::Wheel{f.n}; }
  if (f.family == "join-cycle-empty") { need("--n"); need("--m"); return family::JoinCycleEmpty{f.n, f.m}; }
  if (f.family == "g-graph") { need("--n"); return family::GGraph{f.n}; }
  if (f.family == "union-g") { need("--m"); need("--n"); return family::UnionG{f.m, f.n}; }
  throw UsageError("unknown family '" + f.family + "'");
}

Coloring family_coloring(const FamilySpec& spec) {
  if (auto* w = std::get_if<family::Wheel>(&spec)) return wheel_coloring(w->n);
  if (auto* j = std::get_if<family::JoinCycleEmpty>(&spec)) return join_coloring(j->n, j->m);
  if (auto* g = std::get_if<family::GGraph>(&spec)) return join_coloring(g->n, 2);
  if (auto* u = std::get_if<family::UnionG>(&spec)) return union_coloring(u->m, u->n);
  throw UsageError("no constructive coloring for " + describe(spec));
}

int run_gen(const GenFlags& f, CLI::App* app) {
  const auto spec = family_from_flags(f, app);
  Graph g;
  try {
    g = build(spec);
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
  const auto name = describe(spec);
  std::cout << name << ": " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";

  if (f.out == "-") {
    std::cout << to_dimacs(g, name);
  } else if (!f.out.empty()) {
    write_file(f.out, to_dimacs(g, name));
    std::cout << "graph written to " << f.out << '\n';
  }
  if (!f.labels.empty()) write_file(f.labels, to_labels(g));
  if (!f.coloring.empty()) {
    const auto c = family_coloring(spec);
    write_file(f.coloring, to_coloring_text(c));
    std::cout << "coloring with " << c.num_colors() << " colors written to " << f.coloring << '\n';
  }

  if (f.embed) {
    RotationSystem rot;
    try {
      rot = embed_family(spec);
    } catch (const UnsupportedFamily& e) {
      throw UsageError(e.what());
    }
    const auto check = verify_embedding(g, rot);
    auto rot_path = f.rotation;
    if (rot_path.empty() && !f.out.empty() && f.out != "-") rot_path = f.out + ".rot";
    if (!rot_path.empty()) {
      write_file(rot_path, to_rotation_text(rot));
      std::cout << "rotation written to " << rot_path << '\n';
    }
    std::cout << "faces " << check.faces << "  V - E + F = "
              << static_cast<long long>(check.vertices) - static_cast<long long>(check.edges) +
                     static_cast<long long>(check.faces)
              << '\n';
    std::cout << "euler " << (check.euler_ok ? "ok" : "FAILED") << '\n';
    if (!check.euler_ok) return kViolation;
  }
  return kPass;
}

// ---- verify ----------------------------------------------------------------

struct VerifyFlags {
  std::string graph;
  std::string coloring;
  std::string mode = "strong-odd";
  std::string certificate;
  bool rerun = false;
  BudgetFlags budget;
};

int run_verify_certificate(const VerifyFlags& f) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(f.certificate));
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << f.certificate << ": " << e.what() << '\n';
    return kParse;
  }
  std::optional<SolveOptions> rerun;
  if (f.rerun) rerun = f.budget.options();
  const auto checks = reverify(doc, rerun);
  bool ok = true;
  for (const auto& c : checks) {
    std::cout << (c.ok ? "ok     " : "FAILED ") << c.name << '\n';
    ok = ok && c.ok;
  }
  if (!checks.empty() && checks.front().name == "parse" && !checks.front().ok) return kParse;
  std::cout << (ok ? "pass" : "fail") << '\n';
  return ok ? kPass : kViolation;
}

int run_verify(const VerifyFlags& f) {
  if (!f.certificate.empty()) return run_verify_certificate(f);
  if (f.graph.empty() || f.coloring.empty()) {
    throw UsageError("verify needs GRAPH and COLORING, or --certificate");
  }
  const Graph g = load_graph(f.graph);
  const Coloring c = from_coloring_text(read_file(f.coloring), g.num_vertices());
  const auto report = parity_report(g, c);

  bool ok = report.improper_edges.empty();
  if (f.mode == "strong-odd") {
    ok = ok && report.violations.empty();
  } else if (f.mode == "odd") {
    ok = ok && is_odd_coloring(g, c);
  }

  if (ok) {
    std::cout << "pass: " << f.mode << " coloring with " << c.num_colors() << " colors\n";
    return kPass;
  }
  std::cout << "fail: not a " << f.mode << " coloring\n";
  for (auto [u, v] : report.improper_edges) {
    std::cout << "  monochromatic edge " << u + 1 << ' ' << v + 1 << " (color " << c[u] << ")\n";
  }
  if (f.mode == "strong-odd") {
    std::cout << "  " << report.violations.size() << " violating (vertex, color) pairs\n";
    for (const auto& e : report.violations) {
      std::cout << "  vertex " << e.vertex + 1 << " sees color " << e.color << ' ' << e.count
                << " times\n";
    }
  } else if (f.mode == "odd") {
    std::vector<bool> has_odd(g.num_vertices(), false);
    for (const auto& e : report.counts) {
      if (e.odd()) has_odd[e.vertex] = true;
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) > 0 && !has_odd[v]) {
        std::cout << "  vertex " << v + 1 << " sees no color an odd number of times\n";
      }
    }
  }
  return kViolation;
}

// ---- solve -----------------------------------------------------------------

struct SolveFlags {
  std::string graph;
  bool exact = false;
  std::size_t decide = 0;
  std::string witness;
  BudgetFlags budget;
};

int run_solve(const SolveFlags& f) {
  const Graph g = load_graph(f.graph);
  const auto opts = f.budget.options();

  if (f.decide > 0) {
    const auto r = decide_k(g, f.decide, opts);
    switch (r.decision) {
      case Decision::yes: std::cout << "yes\n"; break;
      case Decision::no: std::cout << "no\n"; break;
      case Decision::timeout: std::cout << "timeout\n"; break;
    }
    std::cout << "nodes " << r.stats.nodes << "\nelapsed " << seconds_text(r.stats.seconds) << '\n';
    if (r.witness && !f.witness.empty()) write_file(f.witness, to_coloring_text(*r.witness));
    if (r.decision == Decision::yes) return kPass;
    return r.decision == Decision::no ? kViolation : kBudget;
  }

  const auto r = chromatic_strong_odd(g, opts);
  switch (r.status) {
    case SolveStatus::exact: std::cout << "exact " << *r.value << '\n'; break;
    case SolveStatus::bounds:
      std::cout << "bounds " << r.lower << ' ' << r.upper << "\nbudget nodes\n";
      break;
    case SolveStatus::timeout:
      std::cout << "bounds " << r.lower << ' ' << r.upper << "\nbudget time\n";
      break;
  }
  std::cout << "lower " << r.lower << "\nupper " << r.upper << "\nnodes " << r.stats.nodes
            << "\nelapsed " << seconds_text(r.stats.seconds) << '\n';
  if (r.witness && !f.witness.empty()) write_file(f.witness, to_coloring_text(*r.witness));
  return r.status == SolveStatus::exact ? kPass : kBudget;
}

// ---- formula ---------------------------------------------------------------

int run_formula(const std::vector<std::size_t>& args, const std::string& kind) {
  auto want = [&](std::size_t k) {
    if (args.size() != k) {
      throw UsageError("formula " + kind + " takes " + std::to_string(k) + " parameter(s)");
    }
  };
  try {
    if (kind == "wheel") {
      want(1);
      std::cout << wheel_formula(args[0]) << "\ncase: " << wheel_case(args[0]) << '\n';
    } else if (kind == "join") {
      want(2);
      std::cout << join_formula(args[0], args[1]) << "\ncase: " << join_case(args[0], args[1])
                << '\n';
    } else {
      want(2);
      std::cout << union_formula(args[0], args[1]) << "\ncase: " << union_case(args[0], args[1])
                << '\n';
    }
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
  return kPass;
}

// ---- certify ---------------------------------------------------------------

struct CertifyFlags {
  std::string family;
  std::size_t n = 0;
  std::vector<std::size_t> pair;
  std::string out;
  bool refute = false;
  BudgetFlags budget;
};

int run_certify(const CertifyFlags& f) {
  CertifyOptions opts;
  double refute_seconds = 0;
  if (f.refute) {
    opts.refute = f.budget.options();
    opts.refute_seconds = &refute_seconds;
  }

  Certificate cert;
  try {
    if (!f.family.empty()) {
      if (f.family != "counterexample") throw UsageError("unknown certificate family '" + f.family + "'");
      if (f.n == 0) throw UsageError("--family counterexample needs --n");
      cert = counterexample(f.n, opts);
    } else if (f.pair.size() == 2) {
      cert = union_certificate(f.pair[0], f.pair[1], opts);
    } else {
      throw UsageError("certify needs --family counterexample --n N or --pair M N");
    }
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }

  // Checks recorded at generation time, then an independent pass over the
  // serialized document before anything touches the disk.
  const auto doc = to_json(cert);
  const auto again = reverify(doc);
  bool ok = cert.all_ok();
  std::cout << cert.family << ": claimed_value " << cert.claimed_value << " ("
            << (cert.claim_kind == ClaimKind::exact ? "exact" : "upper-bound") << ")\n";
  for (const auto& c : cert.checks) std::cout << (c.ok ? "ok     " : "FAILED ") << c.name << '\n';
  for (const auto& c : again) {
    std::cout << (c.ok ? "ok     " : "FAILED ") << "reverify:" << c.name << '\n';
    ok = ok && c.ok;
  }
  if (!ok) {
    std::cerr << "certification failed; nothing written\n";
    return kCertification;
  }

  const auto paths = write_bundle(cert, f.out);
  {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream log;
    log << "generated " << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ") << '\n';
    if (f.refute) log << "refutation seconds " << seconds_text(refute_seconds) << '\n';
    write_file(paths.certificate.parent_path() / "certify.log", log.str());
  }
  std::cout << "bundle written to " << f.out << '\n';
  return kPass;
}

// ---- oracle ----------------------------------------------------------------

int run_oracle(const std::string& graph, bool compare, const std::string& witness) {
  const Graph g = load_graph(graph);
  OracleResult r;
  try {
    r = brute_force_so(g);
  } catch (const InputTooLarge& e) {
    throw UsageError(e.what());
  }
  std::cout << "chi_so " << r.value << '\n';
  if (!witness.empty()) write_file(witness, to_coloring_text(r.witness));
  if (compare && g.num_vertices() > 0) {
    const auto s = chromatic_strong_odd(g);
    const bool agree = s.value && *s.value == r.value;
    std::cout << "solver " << (s.value ? std::to_string(*s.value) : "?") << (agree ? " (agree)" : " (MISMATCH)")
              << '\n';
    if (!agree) return kViolation;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong odd colorings: families, verification, exact search, certificates"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a family graph as DIMACS");
  gen_cmd->add_option("--family", gen.family, "cycle|empty|complete|wheel|join-cycle-empty|g-graph|union-g")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Cycle length");
  gen_cmd->add_option("--m", gen.m, "Second parameter (empty size, first union part)");
  gen_cmd->add_option("--k", gen.k, "Complete graph size");
  gen_cmd->add_option("-o,--output", gen.out, "DIMACS output path ('-' for stdout)");
  gen_cmd->add_option("--labels", gen.labels, "Label sidecar output path");
  gen_cmd->add_option("--coloring", gen.coloring, "Write the constructive coloring here");
  gen_cmd->add_flag("--embed", gen.embed, "Build and check a planar rotation system");
  gen_cmd->add_option("--rotation", gen.rotation, "Rotation output path (default: <output>.rot)");

  VerifyFlags ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check a coloring or a certificate");
  ver_cmd->add_option("graph", ver.graph, "DIMACS graph file");
  ver_cmd->add_option("coloring", ver.coloring, "Coloring file");
  ver_cmd->add_option("--mode", ver.mode, "proper|odd|strong-odd")
      ->check(CLI::IsMember({"proper", "odd", "strong-odd"}));
  auto* cert_opt = ver_cmd->add_option("--certificate", ver.certificate, "Re-verify a certificate.json");
  ver_cmd->add_flag("--rerun-refutation", ver.rerun, "Re-run the recorded refutation of exact claims");
  ver.budget.attach(ver_cmd);
  cert_opt->excludes(ver_cmd->get_option("graph"));
  cert_opt->excludes(ver_cmd->get_option("coloring"));

  SolveFlags sol;
  auto* sol_cmd = app.add_subcommand("solve", "Exact strong odd chromatic number or decision");
  sol_cmd->add_option("graph", sol.graph, "DIMACS graph file")->required();
  auto* exact_opt = sol_cmd->add_flag("--exact", sol.exact, "Compute chi_so");
  auto* decide_opt = sol_cmd->add_option("--decide", sol.decide, "Decide colorability with k colors")
                         ->check(CLI::PositiveNumber);
  exact_opt->excludes(decide_opt);
  sol_cmd->add_option("--witness", sol.witness, "Write the witness coloring here");
  sol.budget.attach(sol_cmd);

  std::string formula_kind;
  std::vector<std::size_t> formula_args;
  auto* for_cmd = app.add_subcommand("formula", "Evaluate a closed form");
  for_cmd->add_option("kind", formula_kind, "wheel|join|union")
      ->required()
      ->check(CLI::IsMember({"wheel", "join", "union"}));
  for_cmd->add_option("params", formula_args, "Parameters")->required();

  CertifyFlags cer;
  auto* cer_cmd = app.add_subcommand("certify", "Write a counterexample certificate bundle");
  auto* fam_opt = cer_cmd->add_option("--family", cer.family, "counterexample");
  cer_cmd->add_option("--n", cer.n, "Second cycle length of I_y(G_8, G_n)");
  auto* pair_opt = cer_cmd->add_option("--pair", cer.pair, "Cycle lengths M N of I_y(G_M, G_N)")
                       ->expected(2);
  fam_opt->excludes(pair_opt);
  cer_cmd->add_option("-o,--output", cer.out, "Bundle directory")->required();
  cer_cmd->add_flag("--refute", cer.refute, "Try to refute claimed_value - 1 (exact claim)");
  cer.budget.attach(cer_cmd);

  std::string oracle_graph;
  std::string oracle_witness;
  bool oracle_compare = false;
  auto* ora_cmd = app.add_subcommand("oracle", "Brute-force chi_so for graphs with <= 10 vertices");
  ora_cmd->add_option("graph", oracle_graph, "DIMACS graph file")->required();
  ora_cmd->add_flag("--compare", oracle_compare, "Also run the exact solver and compare");
  ora_cmd->add_option("--witness", oracle_witness, "Write the witness coloring here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*gen_cmd) return run_gen(gen, gen_cmd);
    if (*ver_cmd) return run_verify(ver);
    if (*sol_cmd) {
      if (!sol.exact && sol.decide == 0) throw UsageError("solve needs --exact or --decide K");
      return run_solve(sol);
    }
    if (*for_cmd) return run_formula(formula_args, formula_kind);
    if (*cer_cmd) return run_certify(cer);
    if (*ora_cmd) return run_oracle(oracle_graph, oracle_compare, oracle_witness);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kParse;
  } catch (const soc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}
