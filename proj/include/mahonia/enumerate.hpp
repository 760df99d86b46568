#pragma once

#include <functional>
#include <vector>

#include "mahonia/pattern.hpp"
#include "mahonia/permutation.hpp"

namespace mahonia {

using Visitor = std::function<void(const Permutation&)>;

/// Visit S_n(patterns) in lexicographic order. Classical members prune the
/// prefix tree; the remaining (vincular or restricted) members filter
/// complete words.
void for_each_avoider(int n, const std::vector<VincularPattern>& patterns, const Visitor& visit);

std::vector<Permutation> enumerate_avoiders(int n, const std::vector<VincularPattern>& patterns);

/// Prefixes of length min(depth, n) that survive classical pruning, in
/// lexicographic order. Enumerating each in turn reproduces the full stream.
std::vector<std::vector<int>> shard_prefixes(int n, const std::vector<VincularPattern>& patterns,
                                             int depth);

void for_each_avoider_with_prefix(int n, const std::vector<VincularPattern>& patterns,
                                  const std::vector<int>& prefix, const Visitor& visit);

/// Same stream as enumerate_avoiders, built from shards in parallel.
std::vector<Permutation> enumerate_avoiders_parallel(int n,
                                                     const std::vector<VincularPattern>& patterns);

/// Default shard depth: two letters once n is large enough to matter.
int default_shard_depth(int n);

/// Runs body(0..count-1) under OpenMP. The first exception thrown by any
/// shard is rethrown on the calling thread.
void parallel_shards(int count, const std::function<void(int)>& body);

} // namespace mahonia
