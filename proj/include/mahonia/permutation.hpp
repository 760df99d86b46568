#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mahonia {

/// A permutation of [n] in one-line notation. Values are 1..n; storage is
/// zero-based, so values()[i] is sigma(i+1).
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation parse(std::string_view text);
  /// Standardize an arbitrary sequence of distinct integers.
  static Permutation from_word(const std::vector<int>& word);

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  int operator[](int i) const { return v_[i]; }
  /// One-indexed access, sigma(i).
  int at(int i) const { return v_.at(i - 1); }
  const std::vector<int>& values() const { return v_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> v_;
};

void to_json(nlohmann::json& j, const Permutation& p);
void from_json(const nlohmann::json& j, Permutation& p);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

/// Apply a word over {r, c, i} (also "reverse", "complement", "inverse"
/// separated by '.'), rightmost letter first as in function composition.
Permutation apply_trivial(std::string_view op, const Permutation& p);

/// The eight composite words reaching every element of the dihedral group.
const std::vector<std::string>& dihedral_words();

Permutation inflate(const Permutation& skeleton,
                    const std::vector<Permutation>& blocks);

enum class Schema { around_max, around_first, around_last };

struct Decomposition
{
  Permutation skeleton;
  std::vector<Permutation> blocks;
};

/// around_max:   231[s1, 1, s2]
/// around_first: 213[1, s1, s2]
/// around_last:  132[s1, s2, 1]
Decomposition block_decompose(const Permutation& p, Schema schema);

struct DescentProfile
{
  std::set<int> Des, Asc;
  std::set<int> DB, DT, AB, AT;
  int maj = 0;
  int des = 0;
};

struct ExtremaProfile
{
  std::set<int> LRMax, LRMin;
  std::set<int> peaks, valleys;
  int lrmax = 0;
  int lrmin = 0;
};

DescentProfile descent_profile(const Permutation& p);
ExtremaProfile extrema_profile(const Permutation& p);

int maj(const Permutation& p);
int des(const Permutation& p);
int inv(const Permutation& p);

/// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

} // namespace mahonia
