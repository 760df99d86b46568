#pragma once

#include <set>
#include <utility>
#include <vector>

#include "mahonia/permutation.hpp"
#include "mahonia/polyomino.hpp"

namespace mahonia {

/// Involution on S_n(321) with maj(phi(s)) = mak(s), fixing DB and DT.
Permutation phi_321(const Permutation& s);
/// complement . phi_321 . reverse on S_n(123); an involution preserving des
/// with maj(phi(s)) = mak(s).
Permutation phi_123(const Permutation& s);
/// Bijection on S_n(132) fixing the head and DB (hence LRMin) with
/// maj(phi(s)) = foze(s).
Permutation phi_132(const Permutation& s);
/// Bijection on S_n(231) preserving des with mak(phi(s)) = foze(s).
Permutation phi_231(const Permutation& s);

/// Keeps the left-to-right minima of a 123-avoider and refills as a 132-avoider.
Permutation simion_schmidt(const Permutation& s);
/// The unique 132-avoider with the given (position, value) left-to-right
/// minima. Throws std::invalid_argument on infeasible data.
Permutation reconstruct_132_from_lrmin(int n, const std::vector<std::pair<int, int>>& minima);

using PairSet = std::set<std::pair<int, int>>;

/// Pair data of a 231-avoider:
///   peaks:   (top, bottom) of every maximal descending run of length >= 2
///   descents: (descent top, following descent bottom)
///   counts:  (descent top a, occurrences of <13>2 with middle letter a)
struct DescentPairData
{
  PairSet peaks, descents, counts;
};

DescentPairData descent_pair_data(const Permutation& s);

/// (position, value) of right-to-left minima.
std::vector<std::pair<int, int>> rl_minima(const Permutation& s);

struct AscentData
{
  int last = 0;
  std::set<int> asc; // positions
  std::set<int> ab;  // ascent bottom values
};

AscentData ascent_data(const Permutation& s);

Permutation reconstruct_231_from_rlmin(int n, const std::vector<std::pair<int, int>>& minima);
Permutation reconstruct_231_from_ascents(int n, const AscentData& data);
/// Fills each run with all remaining letters between its bottom and top,
/// right to left. Not injective on S_n(231) for n >= 3 (312 and 321 collide).
Permutation reconstruct_231_from_peaks(int n, const PairSet& peaks);
Permutation reconstruct_231_from_descents(int n, const PairSet& descents);
Permutation reconstruct_231_from_counts(int n, const PairSet& counts);

/// Delta^{-1}_A231 . phi_path . psi . gamma; inv(s) = mad(result).
Permutation phi_inv_to_mad(const Permutation& s);

/// upsilon^{-1} . phi_321 . upsilon on shortened polyominoes.
ShortenedPolyomino polyomino_transfer(const ShortenedPolyomino& h);

} // namespace mahonia
