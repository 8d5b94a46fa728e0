#include "kaleido/complete.hpp"

#include <algorithm>

#include "kaleido/search.hpp"

namespace kaleido {

namespace {

std::string name(std::string_view stem, int index) {
  return std::string(stem) + "_" + std::to_string(index);
}

struct Labeled {
  std::vector<ColoredEdge> edges;
  LabelTable labels;
};

/// Copies `g` into vertex ids offset+1.. with colors shifted by `shift`.
void embed(const ColoredGraph& g, int offset, int shift, std::vector<ColoredEdge>& out) {
  for (const auto& e : g.edges()) out.push_back({e.u + offset, e.v + offset, e.color + shift});
}

Labeled base_coloring_labeled(int n) {
  if (n < 6) throw Error(ErrorCode::OrderTooSmall, "n = " + std::to_string(n) + " < 6");
  Labeled out;
  const bool even = n % 2 == 0;
  const int m = even ? n : n - 1;
  const auto dec = walecki_decompose(m);
  const int cycles = m / 2 - 1;

  // Every cycle but the last gets a proper coloring with 2i-1, 2i.
  for (int i = 1; i < cycles; ++i) {
    const auto& cyc = dec.cycles[i - 1];
    for (int t = 0; t < m; ++t) {
      out.edges.push_back({cyc[t], cyc[(t + 1) % m], t % 2 == 0 ? 2 * i - 1 : 2 * i});
    }
  }
  const Color matching_color = even ? n - 3 : n - 4;
  for (auto [a, b] : dec.matching) out.edges.push_back({a, b, matching_color});

  // Last cycle, walked as v_1..v_m; edge j joins v_j and v_{j+1}.
  const auto& last = dec.cycles.back();
  auto v = [&](int j) { return last[(j - 1) % m]; };
  for (int j = 1; j <= m; ++j) {
    Color c;
    if (even) {
      c = (j + 1) / 2;  // both edges at v_{2i} get color i
    } else {
      c = j % 2 == 1 ? (j + 1) / 2 : n - 3;
    }
    out.edges.push_back({v(j), v(j + 1), c});
  }
  for (int j = 1; j <= m; ++j) out.labels.emplace_back(v(j), name("v", j));

  if (!even) {
    const Vertex apex = n;
    const int half = m / 2;
    for (int i = 1; i <= half; ++i) out.edges.push_back({apex, v(2 * i - 1), i});
    for (int i = 1; i <= half; ++i) {
      out.edges.push_back({apex, v(2 * i), i <= half - 3 ? half + i : n - 3});
    }
    out.labels.emplace_back(apex, "v");
  }
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

bool in_special_set(int n, int k) {
  return (n == 9 && k == 4) || (n == 11 && (k == 4 || k == 5));
}

int ceil_half(int n) { return (n + 1) / 2; }

/// H = F - (v_a v_b) as a membership test over labels 1..m.
std::vector<std::vector<bool>> trimmed_threshold(int m, Vertex a, Vertex b) {
  std::vector<std::vector<bool>> in(m + 1, std::vector<bool>(m + 1, false));
  for (auto [x, y] : threshold_graph(m).edges) in[x][y] = in[y][x] = true;
  if (!in[a][b]) {
    throw std::logic_error("edge to trim is not in the threshold graph");
  }
  in[a][b] = in[b][a] = false;
  return in;
}

/// Colors K_m on ids offset+1..offset+m: color `inside` on H, `outside` on
/// the rest.
void color_part(const std::vector<std::vector<bool>>& h, int m, int offset, Color inside,
                Color outside, std::vector<ColoredEdge>& out) {
  for (int x = 1; x <= m; ++x)
    for (int y = x + 1; y <= m; ++y)
      out.push_back({offset + x, offset + y, h[x][y] ? inside : outside});
}

}  // namespace

Decomposition walecki_decompose(int m) {
  if (m < 4) throw Error(ErrorCode::OrderTooSmall, "m = " + std::to_string(m) + " < 4");
  if (m % 2 != 0) throw Error(ErrorCode::OddOrder, "m = " + std::to_string(m));
  const int p = m / 2;
  const int rim = m - 1;
  const Vertex hub = m;
  auto id = [&](int x) { return ((x % rim) + rim) % rim + 1; };

  Decomposition d;
  d.m = m;
  for (int i = 0; i < p - 1; ++i) {
    std::vector<Vertex> cyc{hub, id(i)};
    for (int t = 1; t < p; ++t) {
      cyc.push_back(id(i + t));
      cyc.push_back(id(i - t));
    }
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    d.cycles.push_back(std::move(cyc));
  }
  // Cycle i uses the rim chords whose endpoints sum to 2i or 2i+1; the
  // leftover sum class rim-1 plus the hub spoke to the fixed point p-1 is
  // the matching.
  d.matching.emplace_back(id(p - 1), hub);
  for (int a = 0; a < rim; ++a) {
    const int b = ((rim - 1 - a) % rim + rim) % rim;
    if (a < b) d.matching.emplace_back(id(a), id(b));
  }
  std::sort(d.matching.begin(), d.matching.end());
  return d;
}

std::vector<int> ThresholdGraph::degrees() const {
  std::vector<int> deg(m, 0);
  for (auto [a, b] : edges) {
    ++deg[a - 1];
    ++deg[b - 1];
  }
  return deg;
}

ThresholdGraph threshold_graph(int m) {
  if (m < 2) throw Error(ErrorCode::OrderTooSmall, "m = " + std::to_string(m) + " < 2");
  ThresholdGraph t{m, {}};
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (i + j >= m + 1) t.edges.emplace_back(i, j);
  return t;
}

ColoredGraph base_coloring_n_minus_3(int n) {
  auto labeled = base_coloring_labeled(n);
  return ColoredGraph::build(n, n - 3, labeled.edges);
}

ColoredGraph merge_colors(const ColoredGraph& base, int k) {
  const int n = base.order();
  if (base.palette() != n - 3 || k < ceil_half(n) || k > n - 3) {
    throw Error(ErrorCode::TargetOutOfRange, "k = " + std::to_string(k) + " outside " +
                                                 std::to_string(ceil_half(n)) + ".." +
                                                 std::to_string(n - 3));
  }
  return base.recolored(k, [k](Color c) { return c <= k - 1 ? c : k; });
}

BipartiteColoring bipartite_threshold_coloring(int half, bool k4_patch) {
  const int h = half;
  if (h < 5) throw Error(ErrorCode::HalfTooSmall, "n/2 = " + std::to_string(h) + " < 5");
  // w_i = v_{i-1}, w_1 = v_h; w'_j = v'_{j+1}, w'_h = v'_1.
  auto w_of_v = [h](int a) { return a == h ? 1 : a + 1; };
  auto wp_of_vp = [h](int b) { return b == 1 ? h : b - 1; };
  BipartiteColoring out(h, std::vector<Color>(h, 2));
  for (int a = 1; a <= h; ++a) {
    for (int b = 1; b <= h; ++b) {
      const int s = w_of_v(a) + wp_of_vp(b);
      if (s >= h + 1 && s <= 2 * h - 1) out[a - 1][b - 1] = 1;
    }
  }
  if (k4_patch) {
    // w'_{h-2} w_h is v'_{h-1} v_{h-1}.
    out[h - 2][h - 2] = 2;
  }
  return out;
}

CaseLabel classify(int n, int k) {
  if (k < 3 || k > n - 3) {
    throw Error(ErrorCode::RangeViolation,
                "k = " + std::to_string(k) + " for n = " + std::to_string(n) +
                    "; valid range is 3.." + std::to_string(n - 3));
  }
  if (k == 3) return CaseLabel::BaseK3;
  if (k == n - 3) return CaseLabel::BaseNminus3;
  if (k >= ceil_half(n)) return CaseLabel::Case1;
  if (in_special_set(n, k)) return CaseLabel::SpecialSmall;
  if (n % 2 == 0) return k == 4 ? CaseLabel::Case2EvenK4 : CaseLabel::Case2EvenGeneral;
  if (n >= 13) {
    if (k == 4) return CaseLabel::Case2OddK4;
    if (k == 5) return CaseLabel::Case2OddK5;
    return CaseLabel::Case2OddGeneral;
  }
  throw std::logic_error("dispatcher has no case for n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
}

std::vector<std::pair<int, int>> recursion_children(int n, int k) {
  switch (classify(n, k)) {
    case CaseLabel::Case2EvenGeneral: return {{n / 2, k - 2}};
    case CaseLabel::Case2OddK4:
    case CaseLabel::Case2OddK5: return {{ceil_half(n), 3}, {n / 2, 3}};
    case CaseLabel::Case2OddGeneral: return {{ceil_half(n), k - 3}, {n / 2, k - 3}};
    default: return {};
  }
}

std::vector<VertexPair> special_small_couples(int n, int k) {
  if (!in_special_set(n, k)) {
    throw Error(ErrorCode::NotASpecialCase,
                "(" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
  if (n == 9) return {{1, 2}, {3, 4}, {5, 6}, {8, 9}};  // K_4: v, K_5: v'
  return {{1, 2}, {4, 5}, {7, 8}, {10, 11}};            // K_5: v', K_6: v''
}

CompleteResult special_small(int n, int k) {
  const auto couples = special_small_couples(n, k);
  const int a = n == 9 ? 4 : 5;
  const int b = n - a;
  const std::string left_stem = n == 9 ? "v" : "v'";
  const std::string right_stem = n == 9 ? "v'" : "v''";

  // H_4 = F_4 - v_2v_4, H_5 = F_5 - v'_2v'_5, H_6 = F_6 - v''_3v''_6.
  auto trim = [](int m) {
    switch (m) {
      case 4: return trimmed_threshold(4, 2, 4);
      case 5: return trimmed_threshold(5, 2, 5);
      default: return trimmed_threshold(6, 3, 6);
    }
  };
  std::vector<ColoredEdge> edges;
  color_part(trim(a), a, 0, 1, 2, edges);
  color_part(trim(b), b, a, 1, 2, edges);

  std::vector<Color> cross_colors{3, 4};
  if (k == 5) cross_colors.push_back(5);
  const auto outcome = search_bipartite_completion(a, b, cross_colors, couples);
  if (outcome.status != SearchStatus::Found) {
    throw Error(ErrorCode::SearchFailed, "no cross coloring for special case (" +
                                             std::to_string(n) + "," + std::to_string(k) + ")");
  }
  for (const auto& e : outcome.witness->edges()) edges.push_back(e);

  CompleteResult result{ColoredGraph::build(n, k, edges),
                        ConstructionTrace{CaseLabel::SpecialSmall, n, k, {}, {}}};
  for (int i = 1; i <= a; ++i) result.trace.labels.emplace_back(i, name(left_stem, i));
  for (int j = 1; j <= b; ++j) result.trace.labels.emplace_back(a + j, name(right_stem, j));
  return result;
}

CompleteResult construct_complete(int n, int k, BaseColoringCache* cache) {
  const CaseLabel label = classify(n, k);
  if (cache == nullptr) cache = &default_base_cache();

  ConstructionTrace trace{label, n, k, {}, {}};
  std::vector<ColoredEdge> edges;

  auto plain_labels = [&](int from, int count, const std::string& stem) {
    for (int i = 1; i <= count; ++i) trace.labels.emplace_back(from + i, name(stem, i));
  };

  switch (label) {
    case CaseLabel::BaseK3: {
      plain_labels(0, n, "v");
      return {cache->get(n, 3), std::move(trace)};
    }
    case CaseLabel::BaseNminus3:
    case CaseLabel::Case1: {
      auto base = base_coloring_labeled(n);
      trace.labels = std::move(base.labels);
      auto g = ColoredGraph::build(n, n - 3, base.edges);
      if (label == CaseLabel::Case1) g = merge_colors(g, k);
      return {std::move(g), std::move(trace)};
    }
    case CaseLabel::SpecialSmall:
      return special_small(n, k);

    case CaseLabel::Case2EvenGeneral:
    case CaseLabel::Case2EvenK4: {
      const int h = n / 2;
      const bool k4 = label == CaseLabel::Case2EvenK4;
      if (k4) {
        const auto inner = trimmed_threshold(h, h, h / 2);
        color_part(inner, h, 0, 3, 4, edges);
        color_part(inner, h, h, 3, 4, edges);
      } else {
        // Literally the same coloring on both halves, so v_i and v'_i agree
        // on colors 3..k.
        auto child = construct_complete(h, k - 2, cache);
        embed(child.graph, 0, 2, edges);
        embed(child.graph, h, 2, edges);
        trace.children.push_back(std::move(child.trace));
      }
      const auto cross = bipartite_threshold_coloring(h, k4);
      for (int a = 1; a <= h; ++a)
        for (int b = 1; b <= h; ++b) edges.push_back({a, h + b, cross[a - 1][b - 1]});
      for (int i = 1; i <= h; ++i) {
        trace.labels.emplace_back(i, name("v", i) + "/" + name("w", i == h ? 1 : i + 1));
      }
      for (int i = 1; i <= h; ++i) {
        trace.labels.emplace_back(h + i, name("v'", i) + "/" + name("w'", i == 1 ? h : i - 1));
      }
      break;
    }

    case CaseLabel::Case2OddK4:
    case CaseLabel::Case2OddK5:
    case CaseLabel::Case2OddGeneral: {
      const int big = ceil_half(n);
      const int small = n / 2;
      const int child_k = label == CaseLabel::Case2OddGeneral ? k - 3 : 3;
      const int shift = k - child_k;
      auto left = construct_complete(big, child_k, cache);
      auto right = construct_complete(small, child_k, cache);
      embed(left.graph, 0, shift, edges);
      embed(right.graph, big, shift, edges);
      trace.children.push_back(std::move(left.trace));
      trace.children.push_back(std::move(right.trace));
      for (int i = 1; i <= big; ++i) {
        for (int j = 1; j <= small; ++j) {
          Color c = 1;
          if (label == CaseLabel::Case2OddK5) {
            c = (i + j) % 2 == 1 ? 1 : 2;
          } else if (label == CaseLabel::Case2OddGeneral) {
            c = (i + j) % 3 == 0 ? 3 : (i + j) % 3;
          }
          edges.push_back({i, big + j, c});
        }
      }
      plain_labels(0, big, "v");
      plain_labels(big, small, "v'");
      break;
    }
  }
  return {ColoredGraph::build(n, k, edges), std::move(trace)};
}

}  // namespace kaleido
