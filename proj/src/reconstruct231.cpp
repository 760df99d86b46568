#include <algorithm>
#include <map>
#include <stdexcept>

#include "mahonia/bijections.hpp"
#include "mahonia/pattern.hpp"

namespace mahonia {

namespace {

using Run = std::vector<int>; // decreasing letters of one descending run

[[noreturn]] void inconsistent(const char* what)
{
  throw std::invalid_argument(std::string("inconsistent ") + what + " data");
}

std::vector<Run> descending_runs(const Permutation& s)
{
  std::vector<Run> runs;
  int i = 0;
  while (i < s.size()) {
    Run r{s[i]};
    while (i + 1 < s.size() && s[i] > s[i + 1])
      r.push_back(s[++i]);
    if (r.size() >= 2)
      runs.push_back(r);
    ++i;
  }
  return runs;
}

/// Orders runs by bottom letter and interleaves the free letters:
/// A_1 run_1 A_2 ... run_m A_{m+1}, with A_j the free letters between the
/// previous and current bottoms.
Permutation assemble(int n, std::vector<Run> runs, const char* what)
{
  std::vector<char> used(n + 1, 0);
  for (const auto& r : runs) {
    for (int x : r) {
      if (x < 1 || x > n || used[x])
        inconsistent(what);
      used[x] = 1;
    }
  }
  std::sort(runs.begin(), runs.end(),
            [](const Run& a, const Run& b) { return a.back() < b.back(); });
  std::vector<int> out;
  int prev = 0;
  for (const auto& r : runs) {
    for (int x = prev + 1; x < r.back(); ++x)
      if (!used[x])
        out.push_back(x);
    out.insert(out.end(), r.begin(), r.end());
    prev = r.back();
  }
  for (int x = prev + 1; x <= n; ++x)
    if (!used[x])
      out.push_back(x);
  if (static_cast<int>(out.size()) != n)
    inconsistent(what);
  Permutation p(out);
  if (!avoids(p, {parse_pattern("231")}))
    inconsistent(what);
  return p;
}

} // namespace

std::vector<std::pair<int, int>> rl_minima(const Permutation& s)
{
  std::vector<std::pair<int, int>> out;
  int lo = s.size() + 1;
  for (int i = s.size() - 1; i >= 0; --i) {
    if (s[i] < lo) {
      lo = s[i];
      out.emplace_back(i + 1, s[i]);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

AscentData ascent_data(const Permutation& s)
{
  AscentData d;
  auto dp = descent_profile(s);
  d.last = s.empty() ? 0 : s[s.size() - 1];
  d.asc = dp.Asc;
  d.ab = dp.AB;
  return d;
}

DescentPairData descent_pair_data(const Permutation& s)
{
  DescentPairData d;
  for (const auto& r : descending_runs(s))
    d.peaks.emplace(r.front(), r.back());
  for (int i = 0; i + 1 < s.size(); ++i) {
    if (s[i] <= s[i + 1])
      continue;
    d.descents.emplace(s[i], s[i + 1]);
    auto restricted = parse_pattern("<13>2@(-," + std::to_string(s[i]) + ",-)");
    d.counts.emplace(s[i], static_cast<int>(count_occurrences(restricted, s)));
  }
  return d;
}

Permutation reconstruct_231_from_rlmin(int n, const std::vector<std::pair<int, int>>& minima)
{
  std::vector<std::pair<int, int>> mirrored;
  for (auto [pos, val] : minima)
    mirrored.emplace_back(n + 1 - pos, val);
  std::sort(mirrored.begin(), mirrored.end());
  Permutation p = reverse(reconstruct_132_from_lrmin(n, mirrored));
  if (rl_minima(p) != minima)
    inconsistent("right-to-left minima");
  return p;
}

Permutation reconstruct_231_from_ascents(int n, const AscentData& data)
{
  if (data.asc.size() != data.ab.size())
    inconsistent("ascent");
  if (n == 0)
    return {};
  std::vector<std::pair<int, int>> minima;
  auto v = data.ab.begin();
  for (int pos : data.asc)
    minima.emplace_back(pos, *v++);
  minima.emplace_back(n, data.last);
  Permutation p = reconstruct_231_from_rlmin(n, minima);
  auto check = ascent_data(p);
  if (check.last != data.last || check.asc != data.asc || check.ab != data.ab)
    inconsistent("ascent");
  return p;
}

Permutation reconstruct_231_from_peaks(int n, const PairSet& peaks)
{
  std::vector<char> taken(n + 1, 0);
  for (auto [p, v] : peaks) {
    if (p <= v || p > n || v < 1)
      inconsistent("peak");
    taken[p] = taken[v] = 1;
  }
  std::vector<std::pair<int, int>> order(peaks.begin(), peaks.end());
  std::sort(order.begin(), order.end(),
            [](auto a, auto b) { return a.second > b.second; });
  std::vector<Run> runs;
  for (auto [p, v] : order) {
    Run r{p};
    for (int x = p - 1; x > v; --x) {
      if (!taken[x]) {
        r.push_back(x);
        taken[x] = 1;
      }
    }
    r.push_back(v);
    runs.push_back(r);
  }
  Permutation s = assemble(n, runs, "peak");
  if (descent_pair_data(s).peaks != peaks)
    inconsistent("peak");
  return s;
}

Permutation reconstruct_231_from_descents(int n, const PairSet& descents)
{
  std::map<int, int> next;
  std::set<int> bottoms;
  for (auto [a, b] : descents) {
    if (a <= b || !next.emplace(a, b).second || !bottoms.insert(b).second)
      inconsistent("descent pair");
  }
  std::vector<Run> runs;
  for (auto [a, b] : next) {
    if (bottoms.count(a))
      continue;
    Run r{a};
    int x = a;
    while (next.count(x)) {
      x = next[x];
      r.push_back(x);
    }
    runs.push_back(r);
  }
  Permutation s = assemble(n, runs, "descent pair");
  if (descent_pair_data(s).descents != descents)
    inconsistent("descent pair");
  return s;
}

Permutation reconstruct_231_from_counts(int n, const PairSet& counts)
{
  std::vector<std::pair<int, int>> peaked; // (top, bottom)
  std::set<int> plain;                     // descent tops with zero count
  std::vector<char> taken(n + 1, 0);
  for (auto [a, c] : counts) {
    if (a < 1 || a > n || c < 0)
      inconsistent("count");
    if (c > 0) {
      peaked.emplace_back(a, a - c);
      if (a - c < 1 || taken[a - c])
        inconsistent("count");
      taken[a - c] = 1;
    } else {
      plain.insert(a);
    }
    taken[a] = 1;
  }
  std::sort(peaked.begin(), peaked.end(),
            [](auto x, auto y) { return x.second > y.second; });
  std::vector<Run> runs;
  for (auto [p, v] : peaked) {
    Run r{p};
    for (int x = p - 1; x > v; --x) {
      if (plain.count(x)) {
        r.push_back(x);
        plain.erase(x);
      }
    }
    r.push_back(v);
    runs.push_back(r);
  }
  if (!plain.empty()) {
    // what is left opens the word; its bottom is the least letter still free
    Run r(plain.rbegin(), plain.rend());
    int bottom = 1;
    while (bottom <= n && taken[bottom])
      ++bottom;
    if (bottom > n)
      inconsistent("count");
    r.push_back(bottom);
    runs.push_back(r);
  }
  Permutation s = assemble(n, runs, "count");
  if (descent_pair_data(s).counts != counts)
    inconsistent("count");
  return s;
}

} // namespace mahonia
