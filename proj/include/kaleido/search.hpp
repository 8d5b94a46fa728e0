#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "kaleido/graph.hpp"

namespace kaleido {

struct SearchBudget {
  std::uint64_t node_limit = 200'000'000;
  std::chrono::milliseconds time_limit{std::chrono::minutes(5)};
  std::uint64_t seed = 0;
};

enum class SearchStatus { Found, ExhaustedNoSolution, BudgetExceeded };

const char* to_string(SearchStatus status);

struct SearchOutcome {
  SearchStatus status = SearchStatus::BudgetExceeded;
  std::optional<ColoredGraph> witness;
  std::uint64_t nodes_explored = 0;
  /// Complete colorings tested at the leaves; in exhaustive mode with no
  /// witness this equals k^|E|.
  std::uint64_t assignments_checked = 0;
};

enum class SearchMode {
  /// Tuple targets first, then per-color degree-constrained realization
  /// (complete hosts); edge-order backtracking with pruning otherwise.
  Pruned,
  /// Every one of the k^|E| colorings is generated and checked.
  Exhaustive,
};

/// An uncolored simple graph; edges given as (u, v) pairs on 1..n.
struct PlainGraph {
  int n = 0;
  std::vector<VertexPair> edges;

  static PlainGraph complete(int n);
  static PlainGraph from(const ColoredGraph& g);
};

/// Looks for a k-kaleidoscopic coloring of a regular graph. A Found witness
/// has been re-checked with verify_kaleidoscope. Throws NotRegular.
SearchOutcome search_kaleidoscope(const PlainGraph& g, int k, const SearchBudget& budget = {},
                                  SearchMode mode = SearchMode::Pruned);

/// Colors K_{a,b} from `colors` so that every vertex sees every color and
/// each listed couple gets different color-set tuples. Left part is 1..a,
/// right part a+1..a+b. The witness is the lexicographically least
/// assignment over edges ordered (left, right) with colors ascending; its
/// palette is max(colors). Throws InfeasibleDegree.
SearchOutcome search_bipartite_completion(int a, int b, const std::vector<Color>& colors,
                                          const std::vector<VertexPair>& couples,
                                          const SearchBudget& budget = {});

/// Checks a bipartite witness against the constraints it was searched for.
bool bipartite_witness_ok(const ColoredGraph& w, int a, int b, const std::vector<Color>& colors,
                          const std::vector<VertexPair>& couples);

using Tuple = std::vector<int>;

/// Lazily enumerates n-sets of distinct positive k-tuples summing to r whose
/// per-color sums are even and whose per-color sequences are graphical in K_n.
/// Throws NoCandidates when fewer than n such tuples exist.
class TupleTargetCandidates {
 public:
  TupleTargetCandidates(int n, int r, int k, std::uint64_t seed = 0);

  /// All positive k-tuples summing to r in enumeration order.
  const std::vector<Tuple>& pool() const noexcept { return pool_; }

  std::optional<std::vector<Tuple>> next();

  std::uint64_t sets_rejected() const noexcept { return rejected_; }

 private:
  bool advance();
  bool acceptable(const std::vector<Tuple>& set) const;

  int n_, r_, k_;
  std::vector<Tuple> pool_;
  std::vector<int> choice_;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t rejected_ = 0;
};

inline TupleTargetCandidates tuple_target_candidates(int n, int r, int k,
                                                     std::uint64_t seed = 0) {
  return TupleTargetCandidates(n, r, k, seed);
}

/// Erdős–Gallai test.
bool is_graphical(std::vector<int> degrees);

}  // namespace kaleido
