#include "kaleido/regular3.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kaleido/complete.hpp"

namespace kaleido {

namespace {

CoordEdge ordered(const TriCoord& a, const TriCoord& b) {
  return a < b ? CoordEdge{a, b} : CoordEdge{b, a};
}

std::string coord_text(const TriCoord& x) {
  return "(" + std::to_string(x.s1) + "," + std::to_string(x.s2) + "," + std::to_string(x.s3) +
         ")";
}

/// Threshold edges over a row listed by position.
void row_graph(const std::vector<TriCoord>& row, std::vector<CoordEdge>& out) {
  if (row.size() < 2) return;
  for (auto [a, b] : threshold_graph(static_cast<int>(row.size())).edges) {
    out.push_back(ordered(row[a - 1], row[b - 1]));
  }
}

struct Layout {
  int r;
  Frame frame;
  TriCoord gone;

  TriCoord at(int row, int pos) const { return coord_of({frame, row, pos}, r); }

  /// Family edges that would touch the removed vertex do not exist.
  void keep(std::vector<CoordEdge>& out, int r1, int p1, int r2, int p2) const {
    const auto a = at(r1, p1);
    const auto b = at(r2, p2);
    if (a == gone || b == gone) return;
    out.push_back(ordered(a, b));
  }
};

/// A, the E_j and either the B or the B' pattern, all in one frame.
void cross_row_families(const Layout& L, bool b_prime, std::vector<EdgeFamily>& out) {
  const int r = L.r;
  const int q = (r - 3) / 4;
  const int mid = (r - 1) / 2;

  EdgeFamily a{FamilyTag::A, L.frame, 0, {}, {}};
  for (int i = 1; i <= q; ++i) L.keep(a.edges, 1, mid + 2 * i, 2, mid + 2 * i - 1);
  out.push_back(std::move(a));

  for (int j = 1; j <= q; ++j) {
    EdgeFamily e{FamilyTag::E, L.frame, j, {}, {}};
    for (int i = 1; i <= r - 4 * j - 1; ++i) {
      L.keep(e.edges, i, r - i - 2 * j, i + 2, r - i - 2 * j - 1);
    }
    out.push_back(std::move(e));
  }

  EdgeFamily b{b_prime ? FamilyTag::BPrime : FamilyTag::B, L.frame, 0, {}, {}};
  for (int i = 1; i <= q; ++i) {
    if (b_prime) {
      L.keep(b.edges, 4 * i - 1, (r - 4 * i + 1) / 2, 4 * i + 1, (r - 4 * i - 1) / 2);
    } else {
      L.keep(b.edges, 4 * i - 3, (r - 4 * i + 3) / 2, 4 * i - 1, (r - 4 * i + 1) / 2);
    }
  }
  out.push_back(std::move(b));
}

}  // namespace

std::string frame_name(Frame f) {
  switch (f) {
    case Frame::H: return "H";
    case Frame::HPrime: return "H'";
    case Frame::HDoublePrime: return "H''";
  }
  return "?";
}

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::RowGraph: return "F";
    case FamilyTag::A: return "A";
    case FamilyTag::B: return "B";
    case FamilyTag::BPrime: return "B'";
    case FamilyTag::E: return "E";
    case FamilyTag::Patch: return "patch";
  }
  return "?";
}

void check_regular3_degree(int r) {
  if (r < 7 || r % 4 != 3) {
    throw Error(ErrorCode::BadDegree,
                "r = " + std::to_string(r) + " (need r >= 7 and r ≡ 3 mod 4)");
  }
}

TriCoord coord_of(const FrameIndex& idx, int r) {
  const int i = idx.row;
  const int j = idx.pos;
  if (r < 3 || i < 1 || i > r - 2 || j < 1 || j > r - 1 - i) {
    throw Error(ErrorCode::IndexOutOfRange, frame_name(idx.frame) + "_{" + std::to_string(i) +
                                                "," + std::to_string(j) + "} for r = " +
                                                std::to_string(r));
  }
  switch (idx.frame) {
    case Frame::H: return {j, i, r - i - j};
    case Frame::HPrime: return {r - i - j, j, i};
    case Frame::HDoublePrime: return {i, r - i - j, j};
  }
  return {};
}

FrameIndex frame_index_of(const TriCoord& x, Frame frame, int r) {
  if (x.s1 < 1 || x.s2 < 1 || x.s3 < 1 || x.sum() != r) {
    throw Error(ErrorCode::IndexOutOfRange, coord_text(x) + " is not a coordinate for r = " +
                                                std::to_string(r));
  }
  switch (frame) {
    case Frame::H: return {frame, x.s2, x.s1};
    case Frame::HPrime: return {frame, x.s3, x.s2};
    case Frame::HDoublePrime: return {frame, x.s1, x.s3};
  }
  return {};
}

TriCoord removed_vertex(int r) { return coord_of({Frame::H, r - 2, 1}, r); }

std::vector<EdgeFamily> build_color_class(Color c, int r) {
  check_regular3_degree(r);
  if (c < 1 || c > 3) throw Error(ErrorCode::ColorOutOfRange, "color " + std::to_string(c));

  const Frame frame = c == 1 ? Frame::H : (c == 2 ? Frame::HPrime : Frame::HDoublePrime);
  const Layout L{r, frame, removed_vertex(r)};
  const int mid = (r - 1) / 2;
  std::vector<EdgeFamily> out;

  // Row graphs. Color 1 stops at row r-3 (row r-2 is only the removed
  // vertex); color 2 drops the removed vertex from the end of row 1; color 3
  // puts H''_{2,1} in its place at the start of row 1.
  const int last_row = c == 1 ? r - 3 : r - 2;
  for (int i = 1; i <= last_row; ++i) {
    std::vector<TriCoord> row;
    for (int j = 1; j <= r - 1 - i; ++j) row.push_back(L.at(i, j));
    if (i == 1 && c == 2) row.pop_back();
    if (i == 1 && c == 3) row.front() = L.at(2, 1);
    EdgeFamily f{FamilyTag::RowGraph, frame, i, {}, {}};
    row_graph(row, f.edges);
    out.push_back(std::move(f));
  }

  cross_row_families(L, /*b_prime=*/c != 1, out);

  if (c == 2) {
    out.push_back({FamilyTag::Patch, frame, 0, {ordered(L.at(2, r - 3), L.at(1, mid))}, {}});
  } else if (c == 3) {
    out.push_back({FamilyTag::Patch,
                   frame,
                   0,
                   {ordered(L.at(1, mid), L.at(2, r - 3))},
                   {ordered(L.at(2, 1), L.at(2, r - 3))}});
  }
  return out;
}

std::vector<CoordEdge> assemble_color_class(const std::vector<EdgeFamily>& families) {
  std::set<CoordEdge> edges;
  for (const auto& f : families) {
    if (f.tag == FamilyTag::Patch) continue;
    for (const auto& e : f.edges) {
      if (!edges.insert(ordered(e.first, e.second)).second) {
        throw Error(ErrorCode::PatchMismatch,
                    "edge " + coord_text(e.first) + coord_text(e.second) + " in two families");
      }
    }
  }
  for (const auto& f : families) {
    if (f.tag != FamilyTag::Patch) continue;
    for (const auto& e : f.removed) {
      if (edges.erase(ordered(e.first, e.second)) == 0) {
        throw Error(ErrorCode::PatchMismatch,
                    "patch removes absent edge " + coord_text(e.first) + coord_text(e.second));
      }
    }
    for (const auto& e : f.edges) {
      if (!edges.insert(ordered(e.first, e.second)).second) {
        throw Error(ErrorCode::PatchMismatch,
                    "patch adds present edge " + coord_text(e.first) + coord_text(e.second));
      }
    }
  }
  return {edges.begin(), edges.end()};
}

std::vector<TriCoord> regular3_vertices(int r) {
  check_regular3_degree(r);
  const auto gone = removed_vertex(r);
  std::vector<TriCoord> out;
  for (int i = 1; i <= r - 2; ++i) {
    for (int j = 1; j <= r - 1 - i; ++j) {
      const auto x = coord_of({Frame::H, i, j}, r);
      if (x != gone) out.push_back(x);
    }
  }
  return out;
}

std::string regular3_label(const TriCoord& x, int r) {
  std::string out;
  for (Frame f : {Frame::H, Frame::HPrime, Frame::HDoublePrime}) {
    const auto idx = frame_index_of(x, f, r);
    if (!out.empty()) out += " = ";
    out += frame_name(f) + "_{" + std::to_string(idx.row) + "," + std::to_string(idx.pos) + "}";
  }
  return out + " " + coord_text(x);
}

LabelTable regular3_labels(int r) {
  LabelTable out;
  const auto verts = regular3_vertices(r);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    out.emplace_back(static_cast<Vertex>(i + 1), regular3_label(verts[i], r));
  }
  return out;
}

ColoredGraph construct_regular3(int r) {
  const auto verts = regular3_vertices(r);
  std::map<TriCoord, Vertex> id;
  for (std::size_t i = 0; i < verts.size(); ++i) id.emplace(verts[i], static_cast<Vertex>(i + 1));

  std::vector<ColoredEdge> edges;
  for (Color c = 1; c <= 3; ++c) {
    for (const auto& [a, b] : assemble_color_class(build_color_class(c, r))) {
      const auto ia = id.find(a);
      const auto ib = id.find(b);
      if (ia == id.end() || ib == id.end()) {
        throw Error(ErrorCode::PatchMismatch, "edge leaves the vertex set");
      }
      edges.push_back({ia->second, ib->second, c});
    }
  }
  return ColoredGraph::build(static_cast<int>(verts.size()), 3, edges);
}

}  // namespace kaleido
