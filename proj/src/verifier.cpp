#include "mahonia/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

namespace mahonia {

EquidistributionResult check_equidistribution(const StatSpec& stat1,
                                              const std::vector<VincularPattern>& set1,
                                              const StatSpec& stat2,
                                              const std::vector<VincularPattern>& set2, int nmax,
                                              DistributionCache& cache)
{
  EquidistributionResult r;
  r.stat1 = stat1.display();
  r.set1 = canonical_set(set1);
  r.stat2 = stat2.display();
  r.set2 = canonical_set(set2);
  for (int n = 1; n <= nmax; ++n) {
    NVerdict v;
    v.n = n;
    v.left = cached_distribution(stat1, n, set1, cache);
    v.right = cached_distribution(stat2, n, set2, cache);
    v.equal = v.left == v.right;
    if (!v.equal && !r.first_failure)
      r.first_failure = n;
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

const std::vector<std::string>& patterns_of_length3()
{
  static const std::vector<std::string> p = {"123", "132", "213", "231", "312", "321"};
  return p;
}

std::string to_string(CellTag tag)
{
  switch (tag) {
  case CellTag::black: return "black";
  case CellTag::red: return "red";
  case CellTag::absent: return "absent";
  }
  return "?";
}

std::string default_manifest_path() { return std::string(MAHONIA_DATA_DIR) + "/table2.json"; }

std::vector<ScanCell> load_manifest(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open manifest " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  std::vector<ScanCell> cells;
  for (const auto& c : j.at("cells")) {
    ScanCell s;
    s.row = c.at("row").get<std::string>();
    s.col = c.at("col").get<std::string>();
    s.left = c.at("left").get<std::string>();
    s.right = c.at("right").get<std::string>();
    std::string tag = c.at("tag").get<std::string>();
    if (tag == "black")
      s.tag = CellTag::black;
    else if (tag == "red")
      s.tag = CellTag::red;
    else
      throw std::runtime_error("manifest: unknown tag " + tag);
    cells.push_back(s);
  }
  return cells;
}

int ScanReport::count(CellTag tag) const
{
  return static_cast<int>(
    std::count_if(found.begin(), found.end(), [&](const ScanCell& c) { return c.tag == tag; }));
}

ScanReport scan_equidistributions(const std::vector<std::string>& stats,
                                  const std::vector<std::string>& patterns, int nmax,
                                  const std::vector<ScanCell>& manifest,
                                  DistributionCache& cache)
{
  std::vector<StatSpec> specs;
  for (const auto& s : stats)
    specs.push_back(parse_stat(s));
  // profile[stat][pattern] = distributions for n = 1..nmax
  std::vector<std::vector<std::vector<QPoly>>> profile(
    stats.size(), std::vector<std::vector<QPoly>>(patterns.size()));
  for (size_t p = 0; p < patterns.size(); ++p) {
    std::vector<VincularPattern> cls{parse_pattern(patterns[p])};
    for (int n = 1; n <= nmax; ++n) {
      auto polys = cached_distributions(specs, n, cls, cache);
      for (size_t s = 0; s < stats.size(); ++s)
        profile[s][p].push_back(polys[s]);
    }
  }
  ScanReport report;
  report.nmax = nmax;
  for (size_t i = 0; i < stats.size(); ++i) {
    for (size_t j = i; j < stats.size(); ++j) {
      for (size_t a = 0; a < patterns.size(); ++a) {
        for (size_t b = 0; b < patterns.size(); ++b) {
          if (i == j && a >= b)
            continue;
          if (profile[i][a] != profile[j][b])
            continue;
          ScanCell c{stats[i], stats[j], patterns[a], patterns[b], CellTag::absent};
          auto it = std::find(manifest.begin(), manifest.end(), c);
          if (it != manifest.end())
            c.tag = it->tag;
          report.found.push_back(c);
        }
      }
    }
  }
  for (const auto& m : manifest) {
    bool in_scope = std::count(stats.begin(), stats.end(), m.row) &&
                    std::count(stats.begin(), stats.end(), m.col) &&
                    std::count(patterns.begin(), patterns.end(), m.left) &&
                    std::count(patterns.begin(), patterns.end(), m.right);
    if (in_scope && std::find(report.found.begin(), report.found.end(), m) == report.found.end())
      report.missing.push_back(m);
  }
  return report;
}

std::vector<std::vector<VincularPattern>> pattern_subsets(int size)
{
  const auto& all = patterns_of_length3();
  int m = static_cast<int>(all.size());
  std::vector<std::vector<VincularPattern>> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(mask) != size)
      continue;
    std::vector<VincularPattern> set;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i))
        set.push_back(parse_pattern(all[i]));
    out.push_back(set);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return canonical_set(x) < canonical_set(y);
  });
  return out;
}

WilfPartition st_wilf_classes(const StatSpec& stat,
                              const std::vector<std::vector<VincularPattern>>& pattern_sets,
                              int nmax, DistributionCache& cache)
{
  WilfPartition w;
  w.stat = stat.display();
  w.nmax = nmax;
  std::vector<std::vector<QPoly>> keys;
  for (const auto& set : pattern_sets) {
    std::vector<QPoly> profile;
    for (int n = 1; n <= nmax; ++n)
      profile.push_back(cached_distribution(stat, n, set, cache));
    auto it = std::find(keys.begin(), keys.end(), profile);
    if (it == keys.end()) {
      keys.push_back(profile);
      w.classes.push_back({canonical_set(set)});
    } else {
      w.classes[it - keys.begin()].push_back(canonical_set(set));
    }
  }
  return w;
}

Int ballot(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  return checked_mul(n - k + 1, binomial(n + k, n)) / (n + 1);
}

Int catalan(int n) { return binomial(2 * n, n) / (n + 1); }

QPoly head_closed_form(int n, HeadFamily family)
{
  if (n < 1)
    throw std::invalid_argument("head_closed_form: need n >= 1");
  QPoly p;
  for (int k = 1; k <= n; ++k) {
    switch (family) {
    case HeadFamily::S123: p.add_term(k, ballot(n - 1, k - 1)); break;
    case HeadFamily::S213: p.add_term(k, checked_mul(catalan(k - 1), catalan(n - k))); break;
    case HeadFamily::S123_213: p.add_term(k, k == 1 ? 1 : (Int{1} << (k - 2))); break;
    }
  }
  return p;
}

} // namespace mahonia
