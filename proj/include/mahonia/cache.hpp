#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mahonia/pattern.hpp"
#include "mahonia/qpoly.hpp"
#include "mahonia/statistic.hpp"

namespace mahonia {

std::uint64_t fnv1a64(const std::string& text);

/// Distribution cache keyed by "stat|patterns|n". Always memoizes in
/// memory; with a directory it also persists one JSON file per key, named by
/// the key's hash and published by rename so readers never see partial files.
class DistributionCache
{
public:
  explicit DistributionCache(std::optional<std::filesystem::path> dir = std::nullopt);

  /// Process-wide instance; persists under $MAHONIA_CACHE_DIR when set.
  static DistributionCache& global();

  static std::string key(const StatSpec& spec, const std::vector<VincularPattern>& patterns,
                         int n);

  std::optional<QPoly> lookup(const std::string& key);
  void store(const std::string& key, const QPoly& poly);
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

private:
  std::filesystem::path file_for(const std::string& key) const;

  std::optional<std::filesystem::path> dir_;
  std::mutex mu_;
  std::map<std::string, QPoly> memory_;
};

/// distribution() through the cache.
QPoly cached_distribution(const StatSpec& spec, int n, const std::vector<VincularPattern>& patterns,
                          DistributionCache& cache = DistributionCache::global());

/// distributions() through the cache; only missing entries are enumerated.
std::vector<QPoly> cached_distributions(const std::vector<StatSpec>& specs, int n,
                                        const std::vector<VincularPattern>& patterns,
                                        DistributionCache& cache = DistributionCache::global());

} // namespace mahonia
