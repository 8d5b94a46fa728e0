#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kaleido/graph.hpp"
#include "kaleido/trace.hpp"

namespace kaleido {

/// Position of a vertex in the triangular layout; s_c is also its target
/// color-c degree.
struct TriCoord {
  int s1 = 0;
  int s2 = 0;
  int s3 = 0;

  int sum() const noexcept { return s1 + s2 + s3; }
  int operator[](Color c) const { return c == 1 ? s1 : (c == 2 ? s2 : s3); }
  friend auto operator<=>(const TriCoord&, const TriCoord&) = default;
};

/// H is the base orientation, H' and H'' the layout rotated by 2π/3 and 4π/3.
enum class Frame { H, HPrime, HDoublePrime };

std::string frame_name(Frame f);

/// Row i (1..r-2) and position j (1..r-1-i) within one frame.
struct FrameIndex {
  Frame frame = Frame::H;
  int row = 0;
  int pos = 0;

  friend auto operator<=>(const FrameIndex&, const FrameIndex&) = default;
};

/// H_{i,j} = (j, i, r-i-j), H'_{i,j} = (r-i-j, j, i), H''_{i,j} = (i, r-i-j, j).
/// Throws IndexOutOfRange.
TriCoord coord_of(const FrameIndex& idx, int r);

/// Inverse of coord_of within one frame. Throws IndexOutOfRange.
FrameIndex frame_index_of(const TriCoord& x, Frame frame, int r);

/// The vertex every frame drops: H_{r-2,1} = H'_{1,r-2} = H''_{1,1}.
TriCoord removed_vertex(int r);

enum class FamilyTag { RowGraph, A, B, BPrime, E, Patch };

std::string family_name(FamilyTag tag);

using CoordEdge = std::pair<TriCoord, TriCoord>;

/// One named edge set of a color class. Patch families may also remove
/// edges; removal of an absent edge is an error at assembly.
struct EdgeFamily {
  FamilyTag tag = FamilyTag::RowGraph;
  Frame frame = Frame::H;
  /// Row for RowGraph, j for E, 0 otherwise.
  int index = 0;
  std::vector<CoordEdge> edges;
  std::vector<CoordEdge> removed;
};

/// The families of color c in {1,2,3}. Throws BadDegree unless r ≡ 3 (mod 4)
/// and r >= 7.
std::vector<EdgeFamily> build_color_class(Color c, int r);

/// Union of the families with patches applied; each pair is ordered
/// (smaller, larger). Throws PatchMismatch when a patch removes a missing
/// edge or adds an existing one.
std::vector<CoordEdge> assemble_color_class(const std::vector<EdgeFamily>& families);

/// Vertex coordinates in id order: rows of H (s2) ascending, then position
/// (s1), with the removed vertex left out. Entry id-1.
std::vector<TriCoord> regular3_vertices(int r);

/// "H_{2,3} = H'_{4,3} = H''_{3,4} (3,2,4)"
std::string regular3_label(const TriCoord& x, int r);
LabelTable regular3_labels(int r);

/// The r-regular 3-kaleidoscope of order binom(r-1,2) - 1 whose
/// multiset-colors are the coordinates. Throws BadDegree.
ColoredGraph construct_regular3(int r);

/// Throws BadDegree unless r ≡ 3 (mod 4), r >= 7.
void check_regular3_degree(int r);

}  // namespace kaleido
