#include "kaleido/trace.hpp"

#include <array>

namespace kaleido {

namespace {
constexpr std::array kLabels{
    std::pair{CaseLabel::BaseK3, std::string_view("BaseK3")},
    std::pair{CaseLabel::BaseNminus3, std::string_view("BaseNminus3")},
    std::pair{CaseLabel::Case1, std::string_view("Case1")},
    std::pair{CaseLabel::Case2EvenK4, std::string_view("Case2EvenK4")},
    std::pair{CaseLabel::Case2EvenGeneral, std::string_view("Case2EvenGeneral")},
    std::pair{CaseLabel::Case2OddK4, std::string_view("Case2OddK4")},
    std::pair{CaseLabel::Case2OddK5, std::string_view("Case2OddK5")},
    std::pair{CaseLabel::Case2OddGeneral, std::string_view("Case2OddGeneral")},
    std::pair{CaseLabel::SpecialSmall, std::string_view("SpecialSmall")},
};
}  // namespace

std::string_view to_string(CaseLabel label) {
  for (auto [l, s] : kLabels)
    if (l == label) return s;
  return "?";
}

std::optional<CaseLabel> parse_case_label(std::string_view text) {
  for (auto [l, s] : kLabels)
    if (s == text) return l;
  return std::nullopt;
}

std::string ConstructionTrace::summary_line() const {
  std::string out(to_string(label));
  if (children.empty()) return out;
  out += " → ";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(children[i].n) + "," + std::to_string(children[i].k) + ")";
  }
  return out;
}

ConstructionTrace ConstructionTrace::stripped() const {
  ConstructionTrace out{label, n, k, {}, {}};
  for (const auto& c : children) out.children.push_back(c.stripped());
  return out;
}

}  // namespace kaleido
