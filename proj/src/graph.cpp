#include "kaleido/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kaleido {

ColoredGraph ColoredGraph::build(int n, int k, std::span<const ColoredEdge> edges) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "vertex count must be >= 1");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "palette size must be >= 1");

  std::vector<ColoredEdge> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw Error(ErrorCode::VertexOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + ") outside 1.." +
                                                   std::to_string(n));
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(e.u));
    if (e.color < 1 || e.color > k) {
      throw Error(ErrorCode::ColorOutOfRange,
                  "color " + std::to_string(e.color) + " outside 1.." + std::to_string(k));
    }
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.color});
  }
  std::sort(canon.begin(), canon.end());
  for (std::size_t i = 1; i < canon.size(); ++i) {
    if (canon[i].u == canon[i - 1].u && canon[i].v == canon[i - 1].v) {
      throw Error(ErrorCode::DuplicateEdge,
                  "(" + std::to_string(canon[i].u) + "," + std::to_string(canon[i].v) + ")");
    }
  }
  return ColoredGraph(n, k, std::move(canon));
}

std::optional<Color> ColoredGraph::color_of(Vertex a, Vertex b) const {
  const ColoredEdge key{std::min(a, b), std::max(a, b), 0};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                             [](const ColoredEdge& x, const ColoredEdge& y) {
                               return std::tie(x.u, x.v) < std::tie(y.u, y.v);
                             });
  if (it != edges_.end() && it->u == key.u && it->v == key.v) return it->color;
  return std::nullopt;
}

std::vector<VertexPair> ColoredGraph::color_class(Color c) const {
  std::vector<VertexPair> out;
  for (const auto& e : edges_)
    if (e.color == c) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<int> ColoredGraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u - 1];
    ++deg[e.v - 1];
  }
  return deg;
}

int MultisetColor::degree() const { return std::accumulate(counts.begin(), counts.end(), 0); }

std::vector<MultisetColor> multiset_colors(const ColoredGraph& g) {
  std::vector<MultisetColor> out(g.order(), MultisetColor{std::vector<int>(g.palette(), 0)});
  for (const auto& e : g.edges()) {
    ++out[e.u - 1].counts[e.color - 1];
    ++out[e.v - 1].counts[e.color - 1];
  }
  return out;
}

STuple s_tuple(const ColoredGraph& g, Vertex v, std::span<const Color> colors) {
  if (v < 1 || v > g.order()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  if (colors.empty()) throw Error(ErrorCode::InvalidArgument, "empty color subset");
  std::vector<int> per_color(g.palette(), 0);
  for (const auto& e : g.edges()) {
    if (e.u == v || e.v == v) ++per_color[e.color - 1];
  }
  STuple t;
  for (Color c : colors) {
    if (c < 1 || c > g.palette()) {
      throw Error(ErrorCode::ColorOutOfRange, "color " + std::to_string(c));
    }
    if (std::find(t.colors.begin(), t.colors.end(), c) != t.colors.end()) {
      throw Error(ErrorCode::InvalidArgument, "repeated color " + std::to_string(c));
    }
    t.colors.push_back(c);
    t.counts.push_back(per_color[c - 1]);
  }
  return t;
}

MultisetColor multiset_color(const ColoredGraph& g, Vertex v) {
  const auto palette = full_palette(g.palette());
  return MultisetColor{s_tuple(g, v, palette).counts};
}

VerificationReport verify_kaleidoscope(const ColoredGraph& g) {
  VerificationReport report;

  // ColoredGraph enforces these already; re-checked so a report is
  // self-contained evidence.
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (!(e.u < e.v)) report.structural_errors.push_back("non-canonical edge");
    if (e.color < 1 || e.color > g.palette()) report.structural_errors.push_back("bad color");
    if (i > 0 && edges[i - 1].u == e.u && edges[i - 1].v == e.v)
      report.structural_errors.push_back("duplicate edge");
  }

  const auto tuples = multiset_colors(g);
  for (int v = 1; v <= g.order(); ++v) {
    for (int c = 1; c <= g.palette(); ++c) {
      if (tuples[v - 1].counts[c - 1] == 0) report.coverage_failures.push_back({v, c});
    }
  }

  std::map<MultisetColor, std::vector<Vertex>> groups;
  for (int v = 1; v <= g.order(); ++v) groups[tuples[v - 1]].push_back(v);
  for (const auto& [tuple, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        report.duplicate_pairs.emplace_back(members[i], members[j]);
  }
  std::sort(report.duplicate_pairs.begin(), report.duplicate_pairs.end());

  const auto deg = g.degrees();
  if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end()) {
    report.regular_degree = deg.front();
  }

  report.valid = report.coverage_failures.empty() && report.duplicate_pairs.empty() &&
                 report.structural_errors.empty();
  return report;
}

std::int64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::int64_t tuple_count(int r) {
  if (r < 3) throw Error(ErrorCode::DegreeTooSmall, "r = " + std::to_string(r) + " < 3");
  return binomial(r - 1, 2);
}

std::vector<Color> full_palette(int k) {
  std::vector<Color> out(k);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

}  // namespace kaleido
