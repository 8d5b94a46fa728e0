#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kaleido/graph.hpp"

namespace kaleido {

/// Which branch of the complete-graph case analysis produced a coloring.
enum class CaseLabel {
  BaseK3,
  BaseNminus3,
  Case1,
  Case2EvenK4,
  Case2EvenGeneral,
  Case2OddK4,
  Case2OddK5,
  Case2OddGeneral,
  SpecialSmall,
};

std::string_view to_string(CaseLabel label);
std::optional<CaseLabel> parse_case_label(std::string_view text);

using LabelTable = std::vector<std::pair<Vertex, std::string>>;

/// Audit trail of one construct_complete call: the case that fired, the
/// recursive subproblems it solved, and the names of its vertices.
struct ConstructionTrace {
  CaseLabel label = CaseLabel::BaseK3;
  int n = 0;
  int k = 0;
  std::vector<ConstructionTrace> children;
  LabelTable labels;

  /// "Case2EvenGeneral → (6,3)"
  std::string summary_line() const;

  /// Copy without vertex labels at any depth.
  ConstructionTrace stripped() const;

  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

}  // namespace kaleido
