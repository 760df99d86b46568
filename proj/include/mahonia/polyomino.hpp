#pragma once

#include <string>
#include <vector>

#include "mahonia/permutation.hpp"

namespace mahonia {

/// Two N/E lattice paths of n steps from the origin to a common endpoint;
/// upper stays weakly above lower and the two never share an N-step.
struct ShortenedPolyomino
{
  std::string upper; // P
  std::string lower; // Q

  int size() const { return static_cast<int>(upper.size()); }
  friend bool operator==(const ShortenedPolyomino&, const ShortenedPolyomino&) = default;
};

bool is_polyomino(const ShortenedPolyomino& h);
/// Throws std::invalid_argument if the pair is not a shortened polyomino.
ShortenedPolyomino make_polyomino(std::string upper, std::string lower);

std::vector<ShortenedPolyomino> enumerate_polyominoes(int n);

struct PolyStats
{
  int vcarea = 0;
  int vrarea = 0;
  int val = 0;
};

/// Per-step area of the lower path: the gap to the upper path's step in
/// the same column (E) or row (N). Index i-1 holds step i.
std::vector<int> step_areas(const ShortenedPolyomino& h);
/// Indices i with lower steps i, i+1 equal to EN.
std::vector<int> lower_valleys(const ShortenedPolyomino& h);
PolyStats poly_statistics(const ShortenedPolyomino& h);

/// Labels the upper path 1..n and reads the labels along the lower path.
Permutation upsilon(const ShortenedPolyomino& h);
ShortenedPolyomino upsilon_inv(const Permutation& s);

} // namespace mahonia
