#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kaleido/graph.hpp"
#include "kaleido/trace.hpp"

namespace kaleido {

inline constexpr int kSchemaVersion = 1;

/// On-disk form of a coloring. Edges are kept canonical and ascending so the
/// serialized text is byte-stable.
struct ColoringDocument {
  int schema_version = kSchemaVersion;
  int n = 0;
  int k = 0;
  std::vector<ColoredEdge> edges;
  LabelTable labels;
  std::optional<ConstructionTrace> trace;

  friend bool operator==(const ColoringDocument&, const ColoringDocument&) = default;
};

ColoringDocument make_document(const ColoredGraph& g, LabelTable labels = {},
                               const std::optional<ConstructionTrace>& trace = std::nullopt);

/// Validates through ColoredGraph::build, so malformed edge lists surface as
/// the graph-core errors.
ColoredGraph to_graph(const ColoringDocument& doc);

std::string serialize(const ColoringDocument& doc);

/// Throws Error(MalformedDocument) on anything that is not a well-formed
/// document of a supported schema version.
ColoringDocument parse_document(std::string_view text);

ColoringDocument read_document(const std::filesystem::path& path);

/// Writes via a temporary sibling and rename, so readers never observe a
/// partial file.
void write_text_atomic(const std::filesystem::path& path, std::string_view text);

/// Header `vertex,a_1,...,a_k`, then one multiset-color row per vertex.
std::string export_csv(const ColoredGraph& g);

/// Graphviz text with `color=<int>` on every edge and optional vertex labels.
std::string export_dot(const ColoredGraph& g, const LabelTable& labels = {});

}  // namespace kaleido
