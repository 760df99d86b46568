#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mahonia/integer.hpp"
#include "mahonia/multipoly.hpp"
#include "mahonia/pattern.hpp"
#include "mahonia/permutation.hpp"
#include "mahonia/qpoly.hpp"

namespace mahonia {

enum class Builtin { none, den, head, last, imaj, iota, inc };

/// A statistic: either an integer combination of pattern counters or a
/// builtin. Linear terms are kept sorted by canonical pattern text.
struct StatSpec
{
  std::string name;
  std::vector<std::pair<VincularPattern, Int>> terms;
  Builtin builtin = Builtin::none;
  int iota_k = 0;

  bool linear() const { return builtin == Builtin::none; }
  /// Content key: "lin:..." for combinations, the builtin name otherwise.
  std::string canonical() const;
  std::string display() const { return name.empty() ? canonical() : name; }
};

/// The fourteen Mahonian 3-functions in table order.
const std::vector<std::string>& table_stat_names();

/// Catalog lookup; accepts the table names, den, head, last, imaj, inc and
/// "iota:k". Throws std::invalid_argument for unknown names.
StatSpec named(const std::string& name);

/// named() or a literal "lin: 2*2<31> + 1*<31>2 + <21>".
StatSpec parse_stat(std::string_view text);

StatSpec linear_stat(std::vector<std::pair<VincularPattern, Int>> terms, std::string name = {});

Int evaluate(const StatSpec& spec, const Permutation& p);

/// Increasing subsequences of length k+1; iota(-1) = 1.
Int iota(int k, const Permutation& p);
Int inc(const Permutation& p);
Int den(const Permutation& p);
inline int head(const Permutation& p) { return p.empty() ? 0 : p[0]; }
inline int last(const Permutation& p) { return p.empty() ? 0 : p[p.size() - 1]; }

/// Evaluates several statistics per permutation, counting each distinct
/// pattern once.
class StatBatch
{
public:
  explicit StatBatch(std::vector<StatSpec> specs);
  size_t size() const { return specs_.size(); }
  const std::vector<StatSpec>& specs() const { return specs_; }
  void evaluate(const Permutation& p, std::vector<Int>& out) const;

private:
  std::vector<StatSpec> specs_;
  std::vector<VincularPattern> patterns_;
  std::vector<std::vector<std::pair<size_t, Int>>> weights_;
};

/// Distribution over S_n(patterns), built from parallel shards.
QPoly distribution(const StatSpec& spec, int n, const std::vector<VincularPattern>& patterns);
/// Single-threaded reference for the same result.
QPoly distribution_serial(const StatSpec& spec, int n,
                          const std::vector<VincularPattern>& patterns);
/// One enumeration pass for several statistics.
std::vector<QPoly> distributions(const std::vector<StatSpec>& specs, int n,
                                 const std::vector<VincularPattern>& patterns);

/// Marks: des -> t, head -> u, last -> v; set marks DB, DT, AB, AT, LRMin
/// contribute one variable per member, named like "DB_3". The statistic
/// itself is q.
MultiPoly distribution_refined(const StatSpec& spec, int n,
                               const std::vector<VincularPattern>& patterns,
                               const std::vector<std::string>& marks);

/// The monomial of marks carried by one permutation.
Monomial mark_monomial(const Permutation& p, const std::vector<std::string>& marks);

} // namespace mahonia
