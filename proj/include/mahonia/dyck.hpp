#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mahonia/integer.hpp"
#include "mahonia/permutation.hpp"

namespace mahonia {

/// A Dyck word over {U, D}. Step indices in the free functions below are
/// one-based, and a point's x-coordinate equals the number of steps before it.
class DyckPath
{
public:
  DyckPath() = default;
  explicit DyckPath(std::string word);
  static DyckPath parse(std::string_view text) { return DyckPath(std::string(text)); }

  /// Semilength n of a path in Dyck_n.
  int size() const { return static_cast<int>(w_.size()) / 2; }
  int length() const { return static_cast<int>(w_.size()); }
  bool empty() const { return w_.empty(); }
  char step(int i) const { return w_.at(i - 1); }
  const std::string& word() const { return w_; }
  std::string to_string() const { return w_; }

  DyckPath operator+(const DyckPath& o) const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
  std::string w_;
};

/// True for balanced words with nonnegative prefixes.
bool is_dyck_word(std::string_view w);

/// All of Dyck_n in lexicographic order of words (D < U).
std::vector<DyckPath> all_dyck_paths(int n);

struct TurnPoint
{
  int index; // step index of the U of a peak or the D of a valley
  int pos;   // x-coordinate of the turning point
  int height;
};

struct StepAnnotations
{
  std::vector<int> low;   // y of the lowest point of each step, index i-1
  std::vector<int> match; // matching step index, one-based
  std::vector<TurnPoint> peaks, valleys;
  std::vector<std::pair<int, int>> tunnels;
  std::vector<int> mass; // per step; zero unless UU or DD as defined
};

StepAnnotations annotate(const DyckPath& p);

struct PathStats
{
  int dr = 0, dd = 0, npea = 0, nval = 0;
  int spea = 0, stun = 0, sht = 0, sdowns = 0, area = 0;
  int Umass = 0, Dmass = 0, beta = 0;
};

PathStats path_statistics(const DyckPath& p);

/// Sum over D-steps of binomial(low height, k).
Int dyck_iota(const DyckPath& p, int k);
/// Sum over valleys of (pos - height)/2.
int valley_offset_sum(const DyckPath& p);
/// Sum over peaks of (pos - height)/2.
int peak_offset_sum(const DyckPath& p);
/// Sum over peaks of height >= 2 of (pos - height)/2 + 1. Under gamma these
/// peaks are the strict excedances, so this is den on S_n(321).
int excedance_peak_sum(const DyckPath& p);

/// Splits a nonempty path as U first D rest at its first return.
std::pair<DyckPath, DyckPath> first_return(const DyckPath& p);
/// Splits into prime factors U X D.
std::vector<DyckPath> prime_factors(const DyckPath& p);

enum class DeltaVariant { A231, A312, A132 };

DyckPath delta(const Permutation& s, DeltaVariant v);
Permutation delta_inv(const DyckPath& p, DeltaVariant v);

DyckPath gamma(const Permutation& s);
Permutation gamma_inv(const DyckPath& p);

/// The pairing (Q, R) -> P behind psi, and its inverse.
DyckPath delta_pair(const DyckPath& q, const DyckPath& r);
std::pair<DyckPath, DyckPath> delta_pair_inv(const DyckPath& p);

DyckPath psi(const DyckPath& p);
DyckPath psi_inv(const DyckPath& p);

DyckPath phi_path(const DyckPath& p);
DyckPath phi_path_inv(const DyckPath& p);

DyckPath theta(const DyckPath& p);
DyckPath theta_inv(const DyckPath& p);

DyckPath lambda(const DyckPath& p);
DyckPath lambda_inv(const DyckPath& p);

DyckPath omega_stump(const Permutation& s);

} // namespace mahonia
