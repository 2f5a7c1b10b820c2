#include "socolor/solver.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "socolor/error.hpp"
#include "socolor/verify.hpp"

namespace soc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shared by every search object of one decide_k call.
struct Control {
  std::optional<std::uint64_t> max_nodes;
  std::optional<Clock::time_point> deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> out_of_budget{false};
};

enum class Outcome { found, exhausted, stopped };

std::vector<Vertex> vertex_order(const Graph& g, VertexOrder order) {
  std::vector<Vertex> out(g.num_vertices());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = v;
  switch (order) {
    case VertexOrder::degree_desc:
      std::stable_sort(out.begin(), out.end(),
                       [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
      break;
    case VertexOrder::index:
      break;
    case VertexOrder::reverse_index:
      std::reverse(out.begin(), out.end());
      break;
  }
  return out;
}

// Depth-first search over colorings in a fixed vertex order.
//
// For every vertex v it keeps count(v, c) = |N(v) ∩ class c| over colored
// neighbors, the number of colors with even positive count (even_), the
// number of colors present (present_) and the number of uncolored
// neighbors (open_). A vertex with r open neighbors and e even classes is
// feasible only if e <= r, and if r - e is odd some color must still be
// absent from N(v) (each open neighbor flips the parity of one class, and
// only a new color can absorb an odd surplus). With r = 0 this is exactly
// the strong odd condition at v.
class Search {
 public:
  using Collector = std::function<void(std::span<const Color>, Color)>;

  Search(const Graph& g, std::size_t k, std::span<const Vertex> order, bool lookahead,
         Control& ctl)
      : g_(g),
        k_(static_cast<Color>(k)),
        stride_(k + 1),
        order_(order),
        lookahead_(lookahead),
        ctl_(ctl),
        color_(g.num_vertices(), 0),
        count_(g.num_vertices() * stride_, 0),
        even_(g.num_vertices(), 0),
        present_(g.num_vertices(), 0),
        open_(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      open_[v] = static_cast<std::uint32_t>(g.degree(v));
    }
  }

  ~Search() { flush(); }

  // Stop descending at `depth` and hand the prefix (colors of order[0..depth))
  // to `collect` instead.
  void split_at(std::size_t depth, Collector collect) {
    split_depth_ = depth;
    collect_ = std::move(collect);
  }

  bool can_take(Vertex u, Color c) const { return count(u, c) == 0; }

  // Colors u with c and updates the neighborhood counters. Returns whether
  // every affected vertex is still feasible; the caller must unassign()
  // either way.
  bool assign(Vertex u, Color c) {
    color_[u] = c;
    for (Vertex w : g_.neighbors(u)) {
      auto& x = count_[w * stride_ + c];
      if (x == 0) {
        ++present_[w];
      } else if (x % 2 == 1) {
        ++even_[w];
      } else {
        --even_[w];
      }
      ++x;
      --open_[w];
    }
    if (!feasible(u)) return false;
    for (Vertex w : g_.neighbors(u)) {
      if (!feasible(w)) return false;
    }
    return true;
  }

  void unassign(Vertex u, Color c) {
    for (Vertex w : g_.neighbors(u)) {
      auto& x = count_[w * stride_ + c];
      --x;
      if (x == 0) {
        --present_[w];
      } else if (x % 2 == 1) {
        --even_[w];
      } else {
        ++even_[w];
      }
      ++open_[w];
    }
    color_[u] = 0;
  }

  Outcome run(std::size_t depth, Color max_used) {
    if (depth == order_.size()) return Outcome::found;
    if (collect_ && depth == split_depth_) {
      prefix_.clear();
      for (std::size_t i = 0; i < depth; ++i) prefix_.push_back(color_[order_[i]]);
      collect_(prefix_, max_used);
      return Outcome::exhausted;
    }
    const Vertex u = order_[depth];
    const Color limit = std::min<Color>(k_, max_used + 1);
    for (Color c = 1; c <= limit; ++c) {
      if (!can_take(u, c)) continue;
      if (!tick()) return Outcome::stopped;
      if (assign(u, c)) {
        const auto r = run(depth + 1, std::max(max_used, c));
        if (r == Outcome::found) return r;
        if (r == Outcome::stopped) {
          unassign(u, c);
          return r;
        }
      }
      unassign(u, c);
    }
    return Outcome::exhausted;
  }

  const std::vector<Color>& colors() const { return color_; }

  void flush() {
    if (pending_ > 0) {
      ctl_.nodes.fetch_add(pending_, std::memory_order_relaxed);
      pending_ = 0;
    }
  }

 private:
  static constexpr std::uint64_t kBatch = 1024;

  std::uint32_t count(Vertex v, Color c) const { return count_[v * stride_ + c]; }

  bool tick() {
    if (++pending_ < kBatch) return true;
    const auto total = ctl_.nodes.fetch_add(pending_, std::memory_order_relaxed) + pending_;
    pending_ = 0;
    if (ctl_.stop.load(std::memory_order_relaxed)) return false;
    if ((ctl_.max_nodes && total >= *ctl_.max_nodes) ||
        (ctl_.deadline && Clock::now() >= *ctl_.deadline)) {
      ctl_.out_of_budget = true;
      ctl_.stop = true;
      return false;
    }
    return true;
  }

  bool feasible(Vertex v) const {
    const auto r = open_[v];
    const auto e = even_[v];
    if (e > r) return false;
    if (r == 0) return true;
    if ((r - e) % 2 == 1) {
      const auto blocked = present_[v] + (color_[v] != 0 ? 1u : 0u);
      if (blocked >= k_) return false;
    }
    if (lookahead_ && e > 0) {
      // Every even class needs an open neighbor that may still take it.
      const auto nb = g_.neighbors(v);
      for (Color c = 1; c <= k_; ++c) {
        const auto x = count(v, c);
        if (x == 0 || x % 2 == 1) continue;
        const bool repairable = std::any_of(nb.begin(), nb.end(), [&](Vertex w) {
          return color_[w] == 0 && count(w, c) == 0;
        });
        if (!repairable) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  Color k_;
  std::size_t stride_;
  std::span<const Vertex> order_;
  bool lookahead_;
  Control& ctl_;
  std::vector<Color> color_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> even_;
  std::vector<std::uint32_t> present_;
  std::vector<std::uint32_t> open_;
  std::uint64_t pending_ = 0;
  std::size_t split_depth_ = 0;
  Collector collect_;
  std::vector<Color> prefix_;
};

struct Prefix {
  std::vector<Color> colors;
  Color max_used;
};

Coloring checked_witness(const Graph& g, const std::vector<Color>& colors, std::size_t k) {
  Coloring c(colors);
  if (!is_strong_odd(g, c) || c.num_colors() > k) {
    throw std::logic_error("solver produced an invalid witness");
  }
  return c;
}

// Splits the tree at the shallowest depth yielding enough subproblems and
// runs them on `jobs` threads. A refutation needs every subproblem to be
// exhausted.
DecideResult decide_parallel(const Graph& g, std::size_t k, std::span<const Vertex> order,
                             const SolveOptions& options, Control& ctl) {
  DecideResult result;
  const std::size_t n = order.size();
  std::vector<Prefix> tasks;
  std::size_t split = 0;
  for (std::size_t d = 1; d < n; ++d) {
    tasks.clear();
    Outcome out;
    {
      Search s(g, k, order, options.lookahead, ctl);
      s.split_at(d, [&](std::span<const Color> p, Color m) {
        tasks.push_back({{p.begin(), p.end()}, m});
      });
      out = s.run(0, 0);
    }
    if (out == Outcome::stopped) {
      result.decision = Decision::timeout;
      return result;
    }
    if (tasks.empty()) {
      result.decision = Decision::no;
      return result;
    }
    split = d;
    if (tasks.size() >= 8 * options.jobs) break;
  }

  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::optional<std::vector<Color>> found;
  auto worker = [&] {
    for (;;) {
      if (ctl.stop.load()) return;
      const auto i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      Search s(g, k, order, options.lookahead, ctl);
      for (std::size_t j = 0; j < split; ++j) {
        if (!s.assign(order[j], tasks[i].colors[j])) {
          throw std::logic_error("replayed prefix became infeasible");
        }
      }
      if (s.run(split, tasks[i].max_used) == Outcome::found) {
        std::lock_guard lock(mutex);
        if (!found) found = s.colors();
        ctl.stop = true;
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < options.jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  if (found) {
    result.decision = Decision::yes;
    result.witness = checked_witness(g, *found, k);
  } else if (ctl.out_of_budget) {
    result.decision = Decision::timeout;
  } else {
    result.decision = Decision::no;
  }
  return result;
}

}  // namespace

DecideResult decide_k(const Graph& g, std::size_t k, const SolveOptions& options) {
  if (k == 0) throw InvalidParameter("decide_k needs k >= 1");
  const auto start = Clock::now();
  Control ctl;
  ctl.max_nodes = options.budget.max_nodes;
  if (options.budget.max_time) ctl.deadline = start + *options.budget.max_time;

  const auto order = vertex_order(g, options.order);
  DecideResult result;
  if (options.jobs > 1 && g.num_vertices() > 2) {
    result = decide_parallel(g, k, order, options, ctl);
  } else {
    Outcome out;
    std::vector<Color> colors;
    {
      Search s(g, k, order, options.lookahead, ctl);
      out = s.run(0, 0);
      colors = s.colors();
    }
    switch (out) {
      case Outcome::found:
        result.decision = Decision::yes;
        result.witness = checked_witness(g, colors, k);
        break;
      case Outcome::exhausted:
        result.decision = Decision::no;
        break;
      case Outcome::stopped:
        result.decision = Decision::timeout;
        break;
    }
  }
  result.stats.nodes = ctl.nodes.load();
  result.stats.seconds = seconds_since(start);
  return result;
}

SolveResult chromatic_strong_odd(const Graph& g, const SolveOptions& options) {
  if (g.num_vertices() == 0) throw InvalidParameter("graph has no vertices");
  const auto start = Clock::now();

  auto greedy = greedy_upper(g);
  SolveResult result;
  result.lower = std::max<std::size_t>(1, greedy_clique_bound(g));
  result.upper = greedy.value;
  result.witness = std::move(greedy.witness);
  result.status = SolveStatus::exact;

  for (std::size_t k = result.lower; k < result.upper; ++k) {
    SolveOptions sub = options;
    if (options.budget.max_nodes) {
      if (result.stats.nodes >= *options.budget.max_nodes) {
        result.status = SolveStatus::bounds;
        break;
      }
      sub.budget.max_nodes = *options.budget.max_nodes - result.stats.nodes;
    }
    if (options.budget.max_time) {
      const auto used = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
      if (used >= *options.budget.max_time) {
        result.status = SolveStatus::timeout;
        break;
      }
      sub.budget.max_time = *options.budget.max_time - used;
    }

    const auto r = decide_k(g, k, sub);
    result.stats.nodes += r.stats.nodes;
    if (r.decision == Decision::yes) {
      if (r.witness->num_colors() < result.lower) {
        throw std::logic_error("witness beats the clique lower bound");
      }
      result.upper = r.witness->num_colors();
      result.witness = r.witness;
      break;
    }
    if (r.decision == Decision::no) {
      result.lower = k + 1;
      continue;
    }
    const bool out_of_time =
        options.budget.max_time && Clock::now() - start >= *options.budget.max_time;
    result.status = out_of_time ? SolveStatus::timeout : SolveStatus::bounds;
    break;
  }

  if (result.status == SolveStatus::exact) {
    result.lower = result.upper;
    result.value = result.upper;
  }
  if (!result.witness || !is_strong_odd(g, *result.witness) ||
      result.witness->num_colors() != result.upper || result.lower > result.upper) {
    throw std::logic_error("solver result failed its own witness check");
  }
  result.stats.seconds = seconds_since(start);
  return result;
}

GreedyResult greedy_upper(const Graph& g) {
  const auto n = g.num_vertices();
  if (n == 0) return {0, Coloring{}};

  // A distance-2 coloring is strong odd: every color in N(v) occurs once.
  std::vector<Color> color(n, 0);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::size_t> stamp(n + 2, 0);
  std::size_t epoch = 0;
  for (Vertex v : order) {
    ++epoch;
    for (Vertex w : g.neighbors(v)) {
      stamp[color[w]] = epoch;
      for (Vertex z : g.neighbors(w)) stamp[color[z]] = epoch;
    }
    Color c = 1;
    while (stamp[c] == epoch) ++c;
    color[v] = c;
  }

  Coloring best = Coloring(color).normalized();
  if (n <= 200) {
    // Merge classes pairwise while the result stays strong odd.
    bool merged = true;
    while (merged) {
      merged = false;
      const auto k = best.num_colors();
      for (Color a = 1; a <= k && !merged; ++a) {
        for (Color b = a + 1; b <= k && !merged; ++b) {
          std::vector<Color> trial(best.assignment().begin(), best.assignment().end());
          for (auto& c : trial) {
            if (c == b) c = a;
          }
          Coloring candidate = Coloring(std::move(trial)).normalized();
          if (is_strong_odd(g, candidate)) {
            best = std::move(candidate);
            merged = true;
          }
        }
      }
    }
  }

  if (!is_strong_odd(g, best)) throw std::logic_error("greedy coloring failed verification");
  const auto value = best.num_colors();
  return {value, std::move(best)};
}

std::size_t greedy_clique_bound(const Graph& g) {
  std::size_t best = g.num_vertices() > 0 ? 1 : 0;
  std::vector<Vertex> clique;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) + 1 <= best) continue;
    std::vector<Vertex> cand(g.neighbors(v).begin(), g.neighbors(v).end());
    std::stable_sort(cand.begin(), cand.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    clique.assign(1, v);
    for (Vertex w : cand) {
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.has_edge(u, w); })) {
        clique.push_back(w);
      }
    }
    best = std::max(best, clique.size());
  }
  return best;
}

}  // namespace soc
