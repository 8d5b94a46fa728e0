#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "kaleido/graph.hpp"
#include "kaleido/search.hpp"

namespace kaleido {

/// Read-through store of search-produced base colorings of K_n, keyed by
/// (n, k). Entries live in memory and, when a directory is configured, as
/// `Kn-k.json` documents in it. Every entry re-verifies on load; corrupt or
/// invalid files are recomputed and overwritten.
class BaseColoringCache {
 public:
  explicit BaseColoringCache(std::optional<std::filesystem::path> dir = std::nullopt,
                             SearchBudget budget = {});

  /// Throws Error(SearchFailed) when the oracle neither finds a coloring nor
  /// stays within budget.
  ColoredGraph get(int n, int k);

  const std::optional<std::filesystem::path>& directory() const noexcept { return dir_; }

  static std::filesystem::path file_name(int n, int k);

 private:
  std::optional<ColoredGraph> load(int n, int k) const;

  std::optional<std::filesystem::path> dir_;
  SearchBudget budget_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, ColoredGraph> memo_;
};

/// Process-wide cache; its directory comes from KALEIDO_CACHE_DIR if set.
BaseColoringCache& default_base_cache();

}  // namespace kaleido
