#include "kaleido/search.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace kaleido {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ExhaustedNoSolution: return "ExhaustedNoSolution";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

PlainGraph PlainGraph::complete(int n) {
  PlainGraph g{n, {}};
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.edges.emplace_back(u, v);
  return g;
}

PlainGraph PlainGraph::from(const ColoredGraph& g) {
  PlainGraph out{g.order(), {}};
  for (const auto& e : g.edges()) out.edges.emplace_back(e.u, e.v);
  return out;
}

bool is_graphical(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<>());
  const long total = std::accumulate(d.begin(), d.end(), 0L);
  if (total % 2 != 0) return false;
  if (!d.empty() && d.back() < 0) return false;
  const long n = static_cast<long>(d.size());
  long prefix = 0;
  for (long r = 1; r <= n; ++r) {
    prefix += d[r - 1];
    long tail = 0;
    for (long i = r; i < n; ++i) tail += std::min<long>(d[i], r);
    if (prefix > r * (r - 1) + tail) return false;
  }
  return true;
}

namespace {

class Clock {
 public:
  explicit Clock(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Counts one node; false once the budget is spent.
  bool tick() {
    ++nodes;
    if (nodes > budget_.node_limit) {
      over_ = true;
    } else if ((nodes & 0xFFF) == 0 &&
               std::chrono::steady_clock::now() - start_ > budget_.time_limit) {
      over_ = true;
    }
    return !over_;
  }

  bool exceeded() const { return over_; }

  std::uint64_t nodes = 0;

 private:
  const SearchBudget& budget_;
  std::chrono::steady_clock::time_point start_;
  bool over_ = false;
};

std::vector<Color> color_order(int k, std::uint64_t seed) {
  auto order = full_palette(k);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

ColoredGraph checked_witness(int n, int k, std::vector<ColoredEdge> edges) {
  auto g = ColoredGraph::build(n, k, edges);
  if (!verify_kaleidoscope(g).valid) {
    throw std::logic_error("search produced a coloring that fails verification");
  }
  return g;
}

// Edge-order enumeration for arbitrary hosts. Exhaustive mode disables all
// pruning so that every complete assignment is visited.
class EdgeOrderSearch {
 public:
  EdgeOrderSearch(const PlainGraph& g, int k, const SearchBudget& budget, bool prune)
      : g_(g), k_(k), prune_(prune), clock_(budget), order_(color_order(k, budget.seed)) {
    const int n = g.n;
    counts_.assign(static_cast<std::size_t>(n) * k, 0);
    undecided_.assign(n, 0);
    for (auto [u, v] : g.edges) {
      ++undecided_[u - 1];
      ++undecided_[v - 1];
    }
    colors_.assign(g.edges.size(), 0);
  }

  SearchOutcome run() {
    SearchOutcome out;
    const bool found = dfs(0);
    out.nodes_explored = clock_.nodes;
    out.assignments_checked = leaves_;
    if (found) {
      std::vector<ColoredEdge> edges;
      for (std::size_t i = 0; i < g_.edges.size(); ++i)
        edges.push_back({g_.edges[i].first, g_.edges[i].second, colors_[i]});
      out.witness = checked_witness(g_.n, k_, std::move(edges));
      out.status = SearchStatus::Found;
    } else {
      out.status = clock_.exceeded() ? SearchStatus::BudgetExceeded
                                     : SearchStatus::ExhaustedNoSolution;
    }
    return out;
  }

 private:
  int& count(Vertex v, Color c) { return counts_[static_cast<std::size_t>(v - 1) * k_ + c - 1]; }

  bool coverable(Vertex v) {
    int missing = 0;
    for (Color c = 1; c <= k_; ++c) missing += count(v, c) == 0;
    return missing <= undecided_[v - 1];
  }

  bool same_tuple(Vertex a, Vertex b) {
    for (Color c = 1; c <= k_; ++c)
      if (count(a, c) != count(b, c)) return false;
    return true;
  }

  bool distinct_from_finished(Vertex v) {
    for (Vertex w = 1; w <= g_.n; ++w) {
      if (w != v && undecided_[w - 1] == 0 && same_tuple(v, w)) return false;
    }
    return true;
  }

  bool leaf_ok() {
    ++leaves_;
    for (Vertex v = 1; v <= g_.n; ++v) {
      for (Color c = 1; c <= k_; ++c)
        if (count(v, c) == 0) return false;
      for (Vertex w = v + 1; w <= g_.n; ++w)
        if (same_tuple(v, w)) return false;
    }
    return true;
  }

  bool dfs(std::size_t e) {
    if (!clock_.tick()) return false;
    if (e == g_.edges.size()) return leaf_ok();
    const auto [u, v] = g_.edges[e];
    for (Color c : order_) {
      ++count(u, c);
      ++count(v, c);
      --undecided_[u - 1];
      --undecided_[v - 1];
      colors_[e] = c;
      bool ok = true;
      if (prune_) {
        ok = coverable(u) && coverable(v) &&
             (undecided_[u - 1] != 0 || distinct_from_finished(u)) &&
             (undecided_[v - 1] != 0 || distinct_from_finished(v));
      }
      if (ok && dfs(e + 1)) return true;
      --count(u, c);
      --count(v, c);
      ++undecided_[u - 1];
      ++undecided_[v - 1];
      if (clock_.exceeded()) return false;
    }
    return false;
  }

  const PlainGraph& g_;
  int k_;
  bool prune_;
  Clock clock_;
  std::vector<Color> order_;
  std::vector<int> counts_;
  std::vector<int> undecided_;
  std::vector<Color> colors_;
  std::uint64_t leaves_ = 0;
};

// Realizes per-vertex color-degree targets on K_n, one row at a time
// (edges (v, u) for u > v), as a simultaneous degree-constrained
// factorization. Remaining demand among the not-yet-started vertices must
// stay graphical per color, which is exact for a complete host.
class CompleteRealizer {
 public:
  CompleteRealizer(int n, int k, const std::vector<Tuple>& targets, Clock& clock)
      : n_(n), k_(k), clock_(clock) {
    rem_.resize(static_cast<std::size_t>(n) * k);
    for (int v = 0; v < n; ++v)
      for (int c = 0; c < k; ++c) rem_[idx(v, c)] = targets[v][c];
    color_.assign(static_cast<std::size_t>(n) * n, 0);
  }

  bool run() { return row_start(0); }

  std::vector<ColoredEdge> edges() const {
    std::vector<ColoredEdge> out;
    for (int v = 0; v < n_; ++v)
      for (int u = v + 1; u < n_; ++u)
        out.push_back({v + 1, u + 1, color_[static_cast<std::size_t>(v) * n_ + u]});
    return out;
  }

 private:
  std::size_t idx(int v, int c) const { return static_cast<std::size_t>(v) * k_ + c; }

  bool remaining_graphical(int from) const {
    std::vector<int> seq(n_ - from);
    for (int c = 0; c < k_; ++c) {
      for (int w = from; w < n_; ++w) seq[w - from] = rem_[idx(w, c)];
      if (!is_graphical(seq)) return false;
    }
    return true;
  }

  bool row_start(int v) {
    if (v >= n_ - 1) return true;
    if (!remaining_graphical(v)) return false;
    return place(v, v + 1);
  }

  // v still needs rem[v][c] edges of color c among u' >= next, each of which
  // must itself still want color c.
  bool row_feasible(int v, int next) const {
    for (int c = 0; c < k_; ++c) {
      const int need = rem_[idx(v, c)];
      if (need == 0) continue;
      int avail = 0;
      for (int w = next; w < n_; ++w) avail += rem_[idx(w, c)] > 0;
      if (avail < need) return false;
    }
    return true;
  }

  bool place(int v, int u) {
    if (u == n_) return row_start(v + 1);
    if (!clock_.tick()) return false;

    // Havel–Hakimi flavour: offer u the colors it needs most.
    std::array<int, 64> order{};
    int m = 0;
    for (int c = 0; c < k_; ++c)
      if (rem_[idx(v, c)] > 0 && rem_[idx(u, c)] > 0) order[m++] = c;
    std::stable_sort(order.begin(), order.begin() + m, [&](int a, int b) {
      return rem_[idx(u, a)] > rem_[idx(u, b)];
    });

    for (int i = 0; i < m; ++i) {
      const int c = order[i];
      --rem_[idx(v, c)];
      --rem_[idx(u, c)];
      color_[static_cast<std::size_t>(v) * n_ + u] = c + 1;
      if (row_feasible(v, u + 1) && place(v, u + 1)) return true;
      ++rem_[idx(v, c)];
      ++rem_[idx(u, c)];
      if (clock_.exceeded()) return false;
    }
    return false;
  }

  int n_, k_;
  Clock& clock_;
  std::vector<int> rem_;
  std::vector<int> color_;
};

bool is_complete(const PlainGraph& g) {
  return g.edges.size() == static_cast<std::size_t>(g.n) * (g.n - 1) / 2;
}

}  // namespace

TupleTargetCandidates::TupleTargetCandidates(int n, int r, int k, std::uint64_t seed)
    : n_(n), r_(r), k_(k) {
  if (n < 1 || k < 1 || r < k) {
    throw Error(ErrorCode::NoCandidates, "no positive " + std::to_string(k) +
                                             "-tuples sum to " + std::to_string(r));
  }
  if (binomial(r - 1, k - 1) < n) {
    throw Error(ErrorCode::NoCandidates,
                "binom(" + std::to_string(r - 1) + "," + std::to_string(k - 1) + ") = " +
                    std::to_string(binomial(r - 1, k - 1)) + " < " + std::to_string(n));
  }
  // Compositions of r into k positive parts.
  Tuple cur(k, 1);
  std::function<void(int, int)> gen = [&](int pos, int left) {
    if (pos == k - 1) {
      cur[pos] = left;
      pool_.push_back(cur);
      return;
    }
    for (int a = 1; a <= left - (k - 1 - pos); ++a) {
      cur[pos] = a;
      gen(pos + 1, left - a);
    }
  };
  gen(0, r);

  // Most balanced tuples first; they leave the most freedom per color.
  auto spread = [&](const Tuple& t) {
    long s = 0;
    for (int a : t) s += static_cast<long>(a * k - r) * (a * k - r);
    return s;
  };
  std::stable_sort(pool_.begin(), pool_.end(),
                   [&](const Tuple& a, const Tuple& b) { return spread(a) < spread(b); });
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    auto first = pool_.begin();
    while (first != pool_.end()) {
      auto last = std::find_if(first, pool_.end(),
                               [&](const Tuple& t) { return spread(t) != spread(*first); });
      std::shuffle(first, last, rng);
      first = last;
    }
  }
}

bool TupleTargetCandidates::acceptable(const std::vector<Tuple>& set) const {
  std::vector<int> seq(set.size());
  for (int c = 0; c < k_; ++c) {
    for (std::size_t i = 0; i < set.size(); ++i) seq[i] = set[i][c];
    if (!is_graphical(seq)) return false;
  }
  return true;
}

bool TupleTargetCandidates::advance() {
  const int p = static_cast<int>(pool_.size());
  if (!started_) {
    started_ = true;
    choice_.resize(n_);
    std::iota(choice_.begin(), choice_.end(), 0);
    return true;
  }
  int i = n_ - 1;
  while (i >= 0 && choice_[i] == p - n_ + i) --i;
  if (i < 0) return false;
  ++choice_[i];
  for (int j = i + 1; j < n_; ++j) choice_[j] = choice_[j - 1] + 1;
  return true;
}

std::optional<std::vector<Tuple>> TupleTargetCandidates::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    std::vector<Tuple> set;
    set.reserve(n_);
    for (int i : choice_) set.push_back(pool_[i]);
    if (acceptable(set)) return set;
    ++rejected_;
  }
  return std::nullopt;
}

SearchOutcome search_kaleidoscope(const PlainGraph& g, int k, const SearchBudget& budget,
                                  SearchMode mode) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "palette must be >= 1");
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u - 1];
    ++deg[v - 1];
  }
  if (g.n < 1 || std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) {
    throw Error(ErrorCode::NotRegular, "host graph is not regular");
  }
  const int r = deg.front();
  if (k > 64) throw Error(ErrorCode::InvalidArgument, "palette too large for search");

  if (mode == SearchMode::Exhaustive || !is_complete(g)) {
    return EdgeOrderSearch(g, k, budget, mode == SearchMode::Pruned).run();
  }

  SearchOutcome out;
  Clock clock(budget);
  std::optional<TupleTargetCandidates> candidates;
  try {
    candidates.emplace(g.n, r, k, budget.seed);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoCandidates) throw;
    // The counting bound alone certifies nonexistence.
    out.status = SearchStatus::ExhaustedNoSolution;
    return out;
  }
  while (auto targets = candidates->next()) {
    if (!clock.tick()) break;
    CompleteRealizer realizer(g.n, k, *targets, clock);
    if (realizer.run()) {
      out.status = SearchStatus::Found;
      out.witness = checked_witness(g.n, k, realizer.edges());
      out.nodes_explored = clock.nodes;
      out.assignments_checked = 1;
      return out;
    }
    if (clock.exceeded()) break;
  }
  out.nodes_explored = clock.nodes;
  out.status = clock.exceeded() ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedNoSolution;
  return out;
}

bool bipartite_witness_ok(const ColoredGraph& w, int a, int b, const std::vector<Color>& colors,
                          const std::vector<VertexPair>& couples) {
  if (w.order() != a + b || w.size() != static_cast<std::size_t>(a) * b) return false;
  for (const auto& e : w.edges()) {
    if (!(e.u <= a && e.v > a)) return false;
    if (std::find(colors.begin(), colors.end(), e.color) == colors.end()) return false;
  }
  std::vector<STuple> tuples;
  for (Vertex v = 1; v <= a + b; ++v) {
    tuples.push_back(s_tuple(w, v, colors));
    for (int cnt : tuples.back().counts)
      if (cnt == 0) return false;
  }
  for (auto [x, y] : couples)
    if (tuples[x - 1] == tuples[y - 1]) return false;
  return true;
}

SearchOutcome search_bipartite_completion(int a, int b, const std::vector<Color>& colors,
                                          const std::vector<VertexPair>& couples,
                                          const SearchBudget& budget) {
  if (a < 1 || b < 1 || colors.empty()) {
    throw Error(ErrorCode::InvalidArgument, "parts and color set must be nonempty");
  }
  const int s = static_cast<int>(colors.size());
  if (a < s || b < s) {
    throw Error(ErrorCode::InfeasibleDegree,
                "part degree " + std::to_string(std::min(a, b)) + " < " + std::to_string(s) +
                    " colors");
  }
  const int n = a + b;
  for (auto [x, y] : couples) {
    if (x < 1 || x > n || y < 1 || y > n || x == y) {
      throw Error(ErrorCode::VertexOutOfRange, "couple (" + std::to_string(x) + "," +
                                                   std::to_string(y) + ")");
    }
  }
  std::vector<Color> sorted_colors = colors;
  std::sort(sorted_colors.begin(), sorted_colors.end());

  Clock clock(budget);
  std::vector<int> counts(static_cast<std::size_t>(n) * s, 0);
  std::vector<int> undecided(n);
  for (int v = 0; v < n; ++v) undecided[v] = v < a ? b : a;
  std::vector<int> pick(static_cast<std::size_t>(a) * b, 0);

  auto cnt = [&](int v, int ci) -> int& { return counts[static_cast<std::size_t>(v) * s + ci]; };
  auto coverable = [&](int v) {
    int missing = 0;
    for (int ci = 0; ci < s; ++ci) missing += cnt(v, ci) == 0;
    return missing <= undecided[v];
  };
  auto couples_ok = [&](int v) {
    for (auto [x, y] : couples) {
      const int other = x - 1 == v ? y - 1 : (y - 1 == v ? x - 1 : -1);
      if (other < 0 || undecided[other] != 0) continue;
      bool same = true;
      for (int ci = 0; ci < s && same; ++ci) same = cnt(v, ci) == cnt(other, ci);
      if (same) return false;
    }
    return true;
  };

  std::function<bool(int)> dfs = [&](int e) -> bool {
    if (!clock.tick()) return false;
    if (e == a * b) return true;
    const int u = e / b;
    const int v = a + e % b;
    for (int ci = 0; ci < s; ++ci) {
      ++cnt(u, ci);
      ++cnt(v, ci);
      --undecided[u];
      --undecided[v];
      pick[e] = ci;
      const bool ok = coverable(u) && coverable(v) && (undecided[u] || couples_ok(u)) &&
                      (undecided[v] || couples_ok(v));
      if (ok && dfs(e + 1)) return true;
      --cnt(u, ci);
      --cnt(v, ci);
      ++undecided[u];
      ++undecided[v];
      if (clock.exceeded()) return false;
    }
    return false;
  };

  SearchOutcome out;
  if (dfs(0)) {
    std::vector<ColoredEdge> edges;
    for (int e = 0; e < a * b; ++e)
      edges.push_back({e / b + 1, a + e % b + 1, sorted_colors[pick[e]]});
    auto w = ColoredGraph::build(n, sorted_colors.back(), edges);
    if (!bipartite_witness_ok(w, a, b, colors, couples)) {
      throw std::logic_error("bipartite search produced an invalid witness");
    }
    out.status = SearchStatus::Found;
    out.witness = std::move(w);
    out.assignments_checked = 1;
  } else {
    out.status = clock.exceeded() ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedNoSolution;
  }
  out.nodes_explored = clock.nodes;
  return out;
}

}  // namespace kaleido
