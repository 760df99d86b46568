#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mahonia/cache.hpp"
#include "mahonia/pattern.hpp"
#include "mahonia/qpoly.hpp"
#include "mahonia/statistic.hpp"

namespace mahonia {

struct NVerdict
{
  int n = 0;
  QPoly left, right;
  bool equal = false;
};

struct EquidistributionResult
{
  std::string stat1, set1, stat2, set2;
  std::vector<NVerdict> verdicts;
  std::optional<int> first_failure;

  bool holds() const { return !first_failure.has_value(); }
};

EquidistributionResult check_equidistribution(const StatSpec& stat1,
                                              const std::vector<VincularPattern>& set1,
                                              const StatSpec& stat2,
                                              const std::vector<VincularPattern>& set2, int nmax,
                                              DistributionCache& cache = DistributionCache::global());

/// The six classical patterns of length 3 in lexicographic order.
const std::vector<std::string>& patterns_of_length3();

enum class CellTag { black, red, absent };
std::string to_string(CellTag tag);

/// One cell entry: row statistic on S(left) against column statistic on
/// S(right). Rows precede columns in the table order.
struct ScanCell
{
  std::string row, col, left, right;
  CellTag tag = CellTag::absent;

  friend bool operator==(const ScanCell& a, const ScanCell& b)
  {
    return a.row == b.row && a.col == b.col && a.left == b.left && a.right == b.right;
  }
};

std::vector<ScanCell> load_manifest(const std::string& path);
/// Path of the bundled manifest of known equidistributions.
std::string default_manifest_path();

struct ScanReport
{
  std::vector<ScanCell> found;   // tagged from the manifest
  std::vector<ScanCell> missing; // manifest cells that did not verify
  int nmax = 0;

  int count(CellTag tag) const;
};

/// Every cell (i <= j in the given statistic order; on the diagonal only
/// left < right) whose distributions agree for all n = 1..nmax.
ScanReport scan_equidistributions(const std::vector<std::string>& stats,
                                  const std::vector<std::string>& patterns, int nmax,
                                  const std::vector<ScanCell>& manifest,
                                  DistributionCache& cache = DistributionCache::global());

struct WilfPartition
{
  std::string stat;
  std::vector<std::vector<std::string>> classes; // canonical pattern-set texts
  int nmax = 0;
};

/// All subsets of the given size of the length-3 patterns, as pattern lists.
std::vector<std::vector<VincularPattern>> pattern_subsets(int size);

WilfPartition st_wilf_classes(const StatSpec& stat,
                              const std::vector<std::vector<VincularPattern>>& pattern_sets,
                              int nmax, DistributionCache& cache = DistributionCache::global());

enum class HeadFamily { S123, S213, S123_213 };

/// Ballot number C_{n,k} = (n-k+1)/(n+1) binomial(n+k, n).
Int ballot(int n, int k);
Int catalan(int n);
QPoly head_closed_form(int n, HeadFamily family);

} // namespace mahonia
