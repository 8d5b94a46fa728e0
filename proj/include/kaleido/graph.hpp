#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kaleido/error.hpp"

namespace kaleido {

using Vertex = int;  // 1-based
using Color = int;   // 1-based

/// An edge with its color, canonicalized so that u < v.
struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

using VertexPair = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 1..n whose every edge carries exactly
/// one color from 1..k. Immutable once built; all invariants are enforced by
/// the factory.
class ColoredGraph {
 public:
  /// Canonicalizes and validates `edges`. Throws Error with SelfLoop,
  /// DuplicateEdge (also for the same pair under two colors),
  /// ColorOutOfRange or VertexOutOfRange.
  static ColoredGraph build(int n, int k, std::span<const ColoredEdge> edges);
  static ColoredGraph build(int n, int k, std::initializer_list<ColoredEdge> edges) {
    return build(n, k, std::span<const ColoredEdge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  int palette() const noexcept { return k_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Edges sorted by (u, v).
  const std::vector<ColoredEdge>& edges() const noexcept { return edges_; }

  std::optional<Color> color_of(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return color_of(a, b).has_value(); }

  /// W_c: the (u, v) pairs colored c, sorted.
  std::vector<VertexPair> color_class(Color c) const;

  std::vector<int> degrees() const;

  /// Same graph with every color passed through `recolor`, which must map
  /// into 1..new_k.
  template <typename F>
  ColoredGraph recolored(int new_k, F&& recolor) const {
    std::vector<ColoredEdge> out = edges_;
    for (auto& e : out) e.color = recolor(e.color);
    return build(n_, new_k, out);
  }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  ColoredGraph(int n, int k, std::vector<ColoredEdge> edges)
      : n_(n), k_(k), edges_(std::move(edges)) {}

  int n_ = 0;
  int k_ = 0;
  std::vector<ColoredEdge> edges_;
};

/// c_m(v) = (a_1, ..., a_k).
struct MultisetColor {
  std::vector<int> counts;

  int degree() const;
  friend auto operator<=>(const MultisetColor&, const MultisetColor&) = default;
};

/// The restriction of c_m(v) to an ordered color subset.
struct STuple {
  std::vector<Color> colors;
  std::vector<int> counts;

  friend auto operator<=>(const STuple&, const STuple&) = default;
};

struct CoverageFailure {
  Vertex vertex = 0;
  Color missing = 0;
  friend auto operator<=>(const CoverageFailure&, const CoverageFailure&) = default;
};

struct VerificationReport {
  bool valid = false;
  std::optional<int> regular_degree;
  std::vector<CoverageFailure> coverage_failures;
  std::vector<VertexPair> duplicate_pairs;
  std::vector<std::string> structural_errors;
};

inline ColoredGraph build_graph(int n, int k, std::span<const ColoredEdge> edges) {
  return ColoredGraph::build(n, k, edges);
}

STuple s_tuple(const ColoredGraph& g, Vertex v, std::span<const Color> colors);
MultisetColor multiset_color(const ColoredGraph& g, Vertex v);

/// All n multiset-colors at once, index v-1.
std::vector<MultisetColor> multiset_colors(const ColoredGraph& g);

/// Never throws on a well-formed graph; every violation is listed.
VerificationReport verify_kaleidoscope(const ColoredGraph& g);

/// Number of positive integer triples summing to r, i.e. binom(r-1, 2).
std::int64_t tuple_count(int r);

std::int64_t binomial(int n, int r);

/// The colors 1..k in order.
std::vector<Color> full_palette(int k);

}  // namespace kaleido
