#include "mahonia/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace mahonia {

std::uint64_t fnv1a64(const std::string& text)
{
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

DistributionCache::DistributionCache(std::optional<std::filesystem::path> dir)
: dir_(std::move(dir))
{
  if (dir_)
    std::filesystem::create_directories(*dir_);
}

DistributionCache& DistributionCache::global()
{
  static DistributionCache instance = [] {
    const char* env = std::getenv("MAHONIA_CACHE_DIR");
    if (env && *env)
      return DistributionCache(std::filesystem::path(env));
    return DistributionCache();
  }();
  return instance;
}

std::string DistributionCache::key(const StatSpec& spec,
                                   const std::vector<VincularPattern>& patterns, int n)
{
  return spec.canonical() + "|" + canonical_set(patterns) + "|" + std::to_string(n);
}

std::filesystem::path DistributionCache::file_for(const std::string& key) const
{
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(fnv1a64(key)));
  return *dir_ / name;
}

std::optional<QPoly> DistributionCache::lookup(const std::string& key)
{
  {
    std::lock_guard lock(mu_);
    auto it = memory_.find(key);
    if (it != memory_.end())
      return it->second;
  }
  if (!dir_)
    return std::nullopt;
  std::ifstream in(file_for(key));
  if (!in)
    return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    // a hash collision shows up as a different stored key
    if (j.at("key").get<std::string>() != key)
      return std::nullopt;
    QPoly p = j.at("poly").get<QPoly>();
    std::lock_guard lock(mu_);
    memory_.emplace(key, p);
    return p;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void DistributionCache::store(const std::string& key, const QPoly& poly)
{
  {
    std::lock_guard lock(mu_);
    memory_[key] = poly;
  }
  if (!dir_)
    return;
  static std::atomic<unsigned> counter{0};
  auto target = file_for(key);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << ::getpid() << "."
           << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  auto tmp = *dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    out << nlohmann::json{{"key", key}, {"poly", poly}}.dump() << "\n";
    if (!out)
      return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec)
    std::filesystem::remove(tmp, ec);
}

QPoly cached_distribution(const StatSpec& spec, int n, const std::vector<VincularPattern>& patterns,
                          DistributionCache& cache)
{
  return cached_distributions({spec}, n, patterns, cache).front();
}

std::vector<QPoly> cached_distributions(const std::vector<StatSpec>& specs, int n,
                                        const std::vector<VincularPattern>& patterns,
                                        DistributionCache& cache)
{
  std::vector<QPoly> out(specs.size());
  std::vector<StatSpec> missing;
  std::vector<size_t> where;
  for (size_t i = 0; i < specs.size(); ++i) {
    if (auto hit = cache.lookup(DistributionCache::key(specs[i], patterns, n))) {
      out[i] = *hit;
    } else {
      missing.push_back(specs[i]);
      where.push_back(i);
    }
  }
  if (missing.empty())
    return out;
  auto fresh = distributions(missing, n, patterns);
  for (size_t j = 0; j < missing.size(); ++j) {
    cache.store(DistributionCache::key(missing[j], patterns, n), fresh[j]);
    out[where[j]] = fresh[j];
  }
  return out;
}

} // namespace mahonia
