#include "kaleido/base_cache.hpp"

#include <cstdlib>

#include "kaleido/document.hpp"

namespace kaleido {

BaseColoringCache::BaseColoringCache(std::optional<std::filesystem::path> dir,
                                     SearchBudget budget)
    : dir_(std::move(dir)), budget_(budget) {}

std::filesystem::path BaseColoringCache::file_name(int n, int k) {
  return "K" + std::to_string(n) + "-" + std::to_string(k) + ".json";
}

std::optional<ColoredGraph> BaseColoringCache::load(int n, int k) const {
  if (!dir_) return std::nullopt;
  const auto path = *dir_ / file_name(n, k);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    auto g = to_graph(read_document(path));
    const auto report = verify_kaleidoscope(g);
    if (g.order() != n || g.palette() != k || g.size() != static_cast<std::size_t>(n) * (n - 1) / 2 ||
        !report.valid) {
      return std::nullopt;
    }
    return g;
  } catch (const Error&) {
    return std::nullopt;
  }
}

ColoredGraph BaseColoringCache::get(int n, int k) {
  // One lock for lookup and fill: concurrent readers wait instead of racing
  // to search for the same key.
  std::lock_guard lock(mutex_);
  if (auto it = memo_.find({n, k}); it != memo_.end()) return it->second;

  auto g = load(n, k);
  if (!g) {
    auto outcome = search_kaleidoscope(PlainGraph::complete(n), k, budget_);
    if (outcome.status != SearchStatus::Found) {
      throw Error(ErrorCode::SearchFailed, "no " + std::to_string(k) +
                                               "-kaleidoscopic coloring of K_" +
                                               std::to_string(n) + " (" +
                                               to_string(outcome.status) + ")");
    }
    g = std::move(outcome.witness);
    if (dir_) {
      std::error_code ec;
      std::filesystem::create_directories(*dir_, ec);
      try {
        write_text_atomic(*dir_ / file_name(n, k), serialize(make_document(*g)));
      } catch (const Error&) {
        // A read-only cache directory only costs a recomputation later.
      }
    }
  }
  memo_.emplace(std::pair{n, k}, *g);
  return *g;
}

BaseColoringCache& default_base_cache() {
  static BaseColoringCache cache = [] {
    std::optional<std::filesystem::path> dir;
    if (const char* env = std::getenv("KALEIDO_CACHE_DIR"); env && *env) dir = env;
    return BaseColoringCache(dir);
  }();
  return cache;
}

}  // namespace kaleido
