#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kaleido/base_cache.hpp"
#include "kaleido/graph.hpp"
#include "kaleido/trace.hpp"

namespace kaleido {

/// E(K_m), m even, split into m/2 - 1 Hamiltonian cycles and a perfect
/// matching.
struct Decomposition {
  int m = 0;
  /// Each cycle lists all m vertices in traversal order, starting at its
  /// lowest id; the closing edge runs from the last entry back to the first.
  std::vector<std::vector<Vertex>> cycles;
  std::vector<VertexPair> matching;
};

/// Rotational zig-zag construction with vertex m as the hub and 1..m-1 on
/// the rim. Throws OddOrder, OrderTooSmall.
Decomposition walecki_decompose(int m);

/// Edges v_i v_j with i + j >= m + 1 over labels 1..m.
struct ThresholdGraph {
  int m = 0;
  std::vector<VertexPair> edges;

  std::vector<int> degrees() const;
};

/// Throws OrderTooSmall for m < 2.
ThresholdGraph threshold_graph(int m);

/// The (n-3)-kaleidoscopic coloring of K_n built from a Hamiltonian
/// decomposition. Odd n peels off vertex n and decomposes K_{n-1}.
/// Throws OrderTooSmall for n < 6.
ColoredGraph base_coloring_n_minus_3(int n);

/// Collapses colors k..n-3 of a base coloring into k. Throws
/// TargetOutOfRange unless ceil(n/2) <= k <= n-3 and the palette is n-3.
ColoredGraph merge_colors(const ColoredGraph& base, int k);

/// Colors {1,2} on the complete bipartite graph between v_1..v_h (left,
/// index 0..h-1) and v'_1..v'_h (right). Entry [i-1][j-1] is the color of
/// v_i v'_j. Throws HalfTooSmall for h < 5.
using BipartiteColoring = std::vector<std::vector<Color>>;
BipartiteColoring bipartite_threshold_coloring(int half, bool k4_patch);

/// Which branch handles (n, k); precedence BaseK3, BaseNminus3, Case1,
/// SpecialSmall, then the Case 2 branches. Throws RangeViolation.
CaseLabel classify(int n, int k);

/// The (n', k') subproblems the branch for (n, k) recurses into.
std::vector<std::pair<int, int>> recursion_children(int n, int k);

struct CompleteResult {
  ColoredGraph graph;
  ConstructionTrace trace;
};

/// A k-kaleidoscopic coloring of K_n for 3 <= k <= n-3. Base k = 3 instances
/// come from `cache` (the process default when null).
CompleteResult construct_complete(int n, int k, BaseColoringCache* cache = nullptr);

/// (9,4), (11,4), (11,5): trimmed threshold graphs inside the parts and a
/// searched cross coloring. Throws NotASpecialCase.
CompleteResult special_small(int n, int k);

/// The couples that share a {1,2}-tuple inside the parts of a special case,
/// in the ids special_small uses.
std::vector<VertexPair> special_small_couples(int n, int k);

}  // namespace kaleido
