// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Runtime limits are part of each criterion.
//
//   acceptance            all criteria
//   acceptance 3 7        selected criteria
//   acceptance --refute   additionally refute 13 colors on I_y(G_8, G_11)

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "corpus.hpp"
#include "socolor/certificate.hpp"
#include "socolor/embedding.hpp"
#include "socolor/families.hpp"
#include "socolor/io.hpp"
#include "socolor/oracle.hpp"
#include "socolor/pendant.hpp"
#include "socolor/solver.hpp"
#include "socolor/verify.hpp"

namespace {

using namespace soc;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Solver witnesses whose first `cycle` vertices form the rim cycle.
struct Witness {
  std::string name;
  Graph graph;
  Coloring coloring;
  std::size_t cycle;
};
std::vector<Witness> witnesses;

Outcome wheel_exact() {
  Outcome out;
  std::ostringstream values;
  for (std::size_t n = 3; n <= 12; ++n) {
    const Graph g = wheel(n);
    const auto r = chromatic_strong_odd(g);
    if (r.status != SolveStatus::exact) {
      out.fail("W_" + std::to_string(n) + " not exact");
      continue;
    }
    values << (n > 3 ? "," : "") << *r.value;
    if (*r.value != wheel_formula(n)) {
      out.fail("W_" + std::to_string(n) + " = " + std::to_string(*r.value));
    }
    witnesses.push_back({"W_" + std::to_string(n), g, *r.witness, n});
  }
  if (out.ok) out.detail = "W_3..W_12 = " + values.str();
  return out;
}

Outcome hard_wheels() {
  Outcome out;
  struct Case {
    std::size_t n, k;
    Decision want;
  };
  const Case cases[] = {
      {13, 5, Decision::no}, {13, 6, Decision::yes}, {14, 6, Decision::no}, {14, 7, Decision::yes}};
  std::ostringstream times;
  times.setf(std::ios::fixed);
  times.precision(4);
  for (const auto& c : cases) {
    const Graph g = wheel(c.n);
    const auto r = decide_k(g, c.k, {.budget = Budget::time(std::chrono::minutes(5))});
    const auto tag = "W_" + std::to_string(c.n) + "/" + std::to_string(c.k);
    times << ' ' << tag << ' ' << r.stats.seconds << 's';
    if (r.decision != c.want) out.fail(tag + " wrong decision");
    if (r.witness) witnesses.push_back({tag, g, *r.witness, c.n});
  }
  if (out.ok) out.detail = "5 no/6 yes on W_13, 6 no/7 yes on W_14;" + times.str();
  return out;
}

Outcome constructive() {
  Outcome out;
  std::size_t count = 0;
  for (std::size_t n = 3; n <= 60; ++n, ++count) {
    const auto c = wheel_coloring(n);
    if (!is_strong_odd(wheel(n), c) || c.num_colors() != wheel_formula(n)) {
      out.fail("wheel " + std::to_string(n));
    }
  }
  for (std::size_t n = 3; n <= 30; ++n) {
    for (std::size_t m = 1; m <= 6; ++m, ++count) {
      const auto c = join_coloring(n, m);
      if (!is_strong_odd(join_cycle_empty(n, m), c) || c.num_colors() != join_formula(n, m)) {
        out.fail("join " + std::to_string(n) + "," + std::to_string(m));
      }
    }
  }
  for (std::size_t m = 3; m <= 20; ++m) {
    for (std::size_t n = 3; n <= 20; ++n, ++count) {
      const auto c = union_coloring(m, n);
      if (!is_strong_odd(union_g(m, n), c) || c.num_colors() != union_formula(m, n)) {
        out.fail("union " + std::to_string(m) + "," + std::to_string(n));
      }
    }
  }
  if (out.ok) out.detail = std::to_string(count) + " colorings at formula value";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  auto graphs = testing::connected_graphs_up_to(6);
  const auto small = graphs.size();
  auto random = testing::random_graphs(200, 7, 9, 20240611);
  graphs.insert(graphs.end(), random.begin(), random.end());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto s = chromatic_strong_odd(graphs[i]);
    const auto b = brute_force_so(graphs[i]);
    if (s.status != SolveStatus::exact || *s.value != b.value) {
      out.fail("graph #" + std::to_string(i) + " solver " +
               (s.value ? std::to_string(*s.value) : "?") + " oracle " + std::to_string(b.value));
    }
  }
  if (out.ok) {
    out.detail = std::to_string(small) + " connected graphs (n <= 6) + " + std::to_string(random.size()) +
                 " random graphs (n = 7..9) agree";
  }
  return out;
}

Outcome union_small() {
  Outcome out;
  const Graph g = union_g(3, 3);
  const auto b = brute_force_so(g);
  const auto w = union_coloring(3, 3);
  if (b.value != 7) out.fail("brute force gives " + std::to_string(b.value));
  if (union_formula(3, 3) != 7) out.fail("formula gives " + std::to_string(union_formula(3, 3)));
  if (!is_strong_odd(g, w) || w.num_colors() != 7) out.fail("union_coloring(3,3) witness rejected");
  if (!is_strong_odd(g, b.witness)) out.fail("brute-force witness rejected");
  if (out.ok) out.detail = "brute force 7 = formula 7, witness verified";
  return out;
}

Outcome join_adjudication() {
  Outcome out;
  const Graph g = join_cycle_empty(9, 2);
  const auto r = chromatic_strong_odd(g, {.budget = Budget::time(std::chrono::minutes(10))});
  if (r.status != SolveStatus::exact) {
    out.fail("not exact within budget");
  } else if (*r.value != 5) {
    out.fail("value " + std::to_string(*r.value));
  } else {
    out.detail = "chi_so(C_9 join 2K_1) = 5";
    witnesses.push_back({"C_9 v 2K_1", g, *r.witness, 9});
  }
  return out;
}

Outcome certificates() {
  Outcome out;
  const auto dir = std::filesystem::temp_directory_path() /
                   ("socolor_acceptance_" + std::to_string(::getpid()));
  struct Case {
    std::size_t m, n, value;
  };
  const Case cases[] = {{8, 11, 14}, {8, 17, 14}, {8, 23, 14}, {6, 8, 15},
                        {7, 7, 15},  {7, 8, 16},  {8, 8, 17}};
  for (const auto& c : cases) {
    const auto tag = std::to_string(c.m) + "," + std::to_string(c.n);
    const auto cert = c.m == 8 && c.n % 6 != 2 ? counterexample(c.n) : union_certificate(c.m, c.n);
    if (cert.claimed_value != c.value) out.fail(tag + " claims " + std::to_string(cert.claimed_value));
    for (const auto& check : cert.checks) {
      if (!check.ok) out.fail(tag + " check " + check.name);
    }
    const auto sub = dir / tag;
    write_bundle(cert, sub);

    // From disk alone: the JSON document, then the standalone files.
    const auto paths = bundle_paths(sub);
    for (const auto& check : reverify(nlohmann::json::parse(read_file(paths.certificate)))) {
      if (!check.ok) out.fail(tag + " reverify " + check.name);
    }
    const Graph g = from_dimacs(read_file(paths.graph));
    const Coloring col = from_coloring_text(read_file(paths.coloring), g.num_vertices());
    if (!is_proper(g, col) || !is_strong_odd(g, col) || col.num_colors() != c.value) {
      out.fail(tag + " disk coloring rejected");
    }
    if (!verify_embedding(g, from_rotation_text(read_file(paths.rotation))).euler_ok) {
      out.fail(tag + " disk rotation not planar");
    }
  }
  std::filesystem::remove_all(dir);
  if (out.ok) out.detail = "7 bundles written and re-verified from disk";
  return out;
}

Outcome cycle_properties() {
  Outcome out;
  if (witnesses.empty()) out.fail("no witnesses (run criteria 1, 2 and 6 first)");
  for (const auto& w : witnesses) {
    const auto cycle = testing::range_vertices(0, w.cycle);
    if (!all_present_classes_odd(class_parity_on(w.graph, w.coloring, cycle))) {
      out.fail(w.name + ": even color class on the cycle");
    }
    if (!is_two_distance_on(w.graph, w.coloring, cycle)) {
      out.fail(w.name + ": not 2-distance on the cycle");
    }
  }
  if (out.ok) out.detail = std::to_string(witnesses.size()) + " witnesses: odd classes, 2-distance on cycle";
  return out;
}

Outcome non_monotone() {
  Outcome out;
  const Graph c4 = cycle(4);
  const auto aug = pendant_augment(c4, Coloring({1, 2, 1, 2}));
  if (!is_strong_odd(aug.graph, aug.coloring)) out.fail("augmented coloring rejected");
  if (aug.coloring.num_colors() != 2) out.fail("augmented coloring uses " + std::to_string(aug.coloring.num_colors()));
  const auto b = brute_force_so(c4);
  if (b.value != 4) out.fail("chi_so(C_4) = " + std::to_string(b.value));
  if (out.ok) {
    out.detail = "C_4 + " + std::to_string(aug.graph.num_vertices() - 4) + " pendants: 2 colors; C_4: 4";
  }
  return out;
}

Outcome refute_counterexample() {
  Outcome out;
  const auto r = decide_k(union_g(8, 11), 13, {.budget = Budget::time(std::chrono::minutes(10))});
  if (r.decision != Decision::no) {
    out.fail(r.decision == Decision::yes ? "13-coloring found" : "budget exhausted");
  } else {
    std::ostringstream s;
    s << "no 13-coloring of I_y(G_8, G_11); " << r.stats.nodes << " nodes, " << r.stats.seconds << 's';
    out.detail = s.str();
  }
  return out;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "wheel formula vs exact solver, n = 3..12", 10, wheel_exact},
      {2, "hard wheels W_13, W_14", 4 * 300, hard_wheels},
      {3, "constructive upper bounds at scale", 5, constructive},
      {4, "oracle equivalence", 600, oracle_equivalence},
      {5, "union of G_3 and G_3 by brute force", 120, union_small},
      {6, "C_9 join 2K_1", 600, join_adjudication},
      {7, "counterexample certificates", 10, certificates},
      {8, "cycle properties of solver witnesses", 1, cycle_properties},
      {9, "non-monotonicity witness", 1, non_monotone},
      {10, "13-color refutation on I_y(G_8, G_11)", 600, refute_counterexample},
  };

  std::set<int> selected;
  bool refute = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--refute") refute = true;
    else selected.insert(std::atoi(argv[i]));
  }
  if (refute) selected.insert(10);
  if (selected.empty() || (refute && selected.size() == 1)) {
    for (int i = 1; i <= 9; ++i) selected.insert(i);
  }

  int failures = 0;
  for (const auto& c : all) {
    if (!selected.count(c.id)) continue;
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.ok && secs > c.limit_seconds) {
      out.fail("took " + std::to_string(secs) + "s, limit " + std::to_string(c.limit_seconds) + "s");
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (out.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << " (" << secs << "s): "
         << out.detail;
    std::cout << line.str() << std::endl;
    failures += !out.ok;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
