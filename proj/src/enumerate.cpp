#include "mahonia/enumerate.hpp"

#include <exception>

#include <omp.h>

namespace mahonia {

namespace {

struct Search
{
  int n;
  std::vector<const VincularPattern*> prune;
  std::vector<VincularPattern> filter;
  std::vector<int> word;
  std::vector<char> used;
  const Visitor* visit = nullptr;
  std::vector<std::vector<int>>* prefixes = nullptr;
  int stop_depth = -1;

  Search(int n_, const std::vector<VincularPattern>& patterns)
  : n(n_), used(n_ + 1, 0)
  {
    for (const auto& p : patterns) {
      if (p.classical())
        prune.push_back(&p);
      else
        filter.push_back(p);
    }
    word.reserve(n);
  }

  bool admissible() const
  {
    int len = static_cast<int>(word.size());
    for (const auto* p : prune)
      if (occurs_ending_at(*p, word.data(), len))
        return false;
    return true;
  }

  bool seed(const std::vector<int>& prefix)
  {
    for (int x : prefix) {
      if (x < 1 || x > n || used[x])
        return false;
      word.push_back(x);
      used[x] = 1;
      if (!admissible())
        return false;
    }
    return true;
  }

  void run()
  {
    int len = static_cast<int>(word.size());
    if (len == stop_depth) {
      prefixes->push_back(word);
      return;
    }
    if (len == n) {
      Permutation p(word);
      if (avoids(p, filter))
        (*visit)(p);
      return;
    }
    for (int x = 1; x <= n; ++x) {
      if (used[x])
        continue;
      word.push_back(x);
      used[x] = 1;
      if (admissible())
        run();
      used[x] = 0;
      word.pop_back();
    }
  }
};

} // namespace

void for_each_avoider(int n, const std::vector<VincularPattern>& patterns, const Visitor& visit)
{
  Search s(n, patterns);
  s.visit = &visit;
  s.run();
}

std::vector<Permutation> enumerate_avoiders(int n, const std::vector<VincularPattern>& patterns)
{
  std::vector<Permutation> out;
  for_each_avoider(n, patterns, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<std::vector<int>> shard_prefixes(int n, const std::vector<VincularPattern>& patterns,
                                             int depth)
{
  std::vector<std::vector<int>> out;
  Search s(n, patterns);
  s.prefixes = &out;
  s.stop_depth = std::min(depth, n);
  Visitor none = [](const Permutation&) {};
  s.visit = &none;
  s.run();
  return out;
}

void for_each_avoider_with_prefix(int n, const std::vector<VincularPattern>& patterns,
                                  const std::vector<int>& prefix, const Visitor& visit)
{
  Search s(n, patterns);
  s.visit = &visit;
  if (s.seed(prefix))
    s.run();
}

int default_shard_depth(int n) { return n >= 6 ? 2 : (n >= 1 ? 1 : 0); }

void parallel_shards(int count, const std::function<void(int)>& body)
{
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(mahonia_shard_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
}

std::vector<Permutation> enumerate_avoiders_parallel(int n,
                                                     const std::vector<VincularPattern>& patterns)
{
  auto prefixes = shard_prefixes(n, patterns, default_shard_depth(n));
  std::vector<std::vector<Permutation>> parts(prefixes.size());
  int count = static_cast<int>(prefixes.size());
  parallel_shards(count, [&](int i) {
    for_each_avoider_with_prefix(n, patterns, prefixes[i],
                                 [&](const Permutation& p) { parts[i].push_back(p); });
  });
  std::vector<Permutation> out;
  for (auto& part : parts)
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

} // namespace mahonia
