#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mahonia/permutation.hpp"

namespace mahonia {

/// A vincular pattern with optional value restrictions.
///
/// adjacency: j in 1..m-1 forces positions j and j+1
/// of an occurrence to be adjacent, 0 anchors the occurrence at the first
/// letter and m anchors it at the last letter.
struct VincularPattern
{
  Permutation pi;
  std::set<int> adjacency;
  std::vector<std::optional<int>> restriction;

  int length() const { return pi.size(); }
  bool classical() const;
  bool anchored_end() const { return adjacency.count(length()) > 0; }
  /// Canonical text in the literal grammar; parse_pattern(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const VincularPattern&, const VincularPattern&) = default;
};

/// Grammar: ['['] (digit | '<' digit digit+ '>')+ [']'] ['@(' v (',' v)* ')']
/// where v is a positive integer or '-'.
VincularPattern parse_pattern(std::string_view text);

/// Parse a comma-separated list such as "132,231" or "[21,<12>3".
/// Commas inside "@(...)" are not separators.
std::vector<VincularPattern> parse_pattern_list(std::string_view text);

using Occurrence = std::vector<int>;

long count_occurrences(const VincularPattern& p, const Permutation& s);
/// Occurrences as one-indexed strictly increasing position tuples.
std::vector<Occurrence> list_occurrences(const VincularPattern& p, const Permutation& s);
bool contains(const VincularPattern& p, const Permutation& s);
bool avoids(const Permutation& s, const std::vector<VincularPattern>& patterns);

/// True when some occurrence of the classical pattern p in word[0..len)
/// uses position len-1 as its last letter. The word need not be a
/// permutation; only relative order matters.
bool occurs_ending_at(const VincularPattern& p, const int* word, int len);

/// Canonical sorted text of a pattern set, used in cache keys and reports.
std::string canonical_set(const std::vector<VincularPattern>& patterns);

} // namespace mahonia
