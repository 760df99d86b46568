#include "mahonia/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "mahonia/dyck.hpp"
#include "mahonia/pattern.hpp"

namespace mahonia {

namespace {

void require_avoids(const Permutation& s, const char* pattern, const char* what)
{
  if (!avoids(s, {parse_pattern(pattern)}))
    throw std::invalid_argument(std::string(what) + ": " + s.to_string() + " contains " + pattern);
}

} // namespace

Permutation phi_321(const Permutation& s)
{
  require_avoids(s, "321", "phi_321");
  int n = s.size();
  std::vector<int> tops, bottoms;
  for (int i = 0; i + 1 < n; ++i) {
    if (s[i] > s[i + 1]) {
      tops.push_back(s[i]);
      bottoms.push_back(s[i + 1]);
    }
  }
  std::vector<char> fixed(n + 2, 0), red(n + 2, 0);
  for (int x : tops)
    fixed[x] = 1;
  for (int x : bottoms)
    fixed[x] = 1;
  for (int x : extrema_profile(s).LRMax)
    red[x] = 1;
  // a free letter straddled by some descent pair trades colour
  for (int z = 1; z <= n; ++z) {
    if (fixed[z])
      continue;
    bool straddled = false;
    for (size_t k = 0; k < tops.size(); ++k)
      straddled = straddled || (bottoms[k] < z && z < tops[k]);
    if (straddled)
      red[z] = !red[z];
  }
  int t = static_cast<int>(tops.size());
  std::vector<int> upper{0}, lower;
  upper.insert(upper.end(), tops.begin(), tops.end());
  lower = bottoms;
  lower.push_back(n + 1);
  std::vector<int> out;
  for (int k = 0; k < t; ++k) {
    for (int x = upper[k] + 1; x <= upper[k + 1]; ++x)
      if (red[x])
        out.push_back(x);
    for (int x = lower[k]; x < lower[k + 1]; ++x)
      if (!red[x])
        out.push_back(x);
  }
  for (int x = upper[t] + 1; x <= n; ++x)
    if (red[x])
      out.push_back(x);
  if (static_cast<int>(out.size()) != n)
    throw std::logic_error("phi_321 lost letters on " + s.to_string());
  return Permutation(out);
}

Permutation phi_123(const Permutation& s)
{
  require_avoids(s, "123", "phi_123");
  return complement(phi_321(reverse(s)));
}

Permutation reconstruct_132_from_lrmin(int n, const std::vector<std::pair<int, int>>& minima)
{
  std::vector<int> out(n, 0);
  std::vector<char> used(n + 2, 0);
  int prev_pos = 0, prev_val = n + 1;
  for (auto [pos, val] : minima) {
    if (pos <= prev_pos || pos > n || val >= prev_val || val < 1)
      throw std::invalid_argument("left-to-right minima must decrease at increasing positions");
    out[pos - 1] = val;
    used[val] = 1;
    prev_pos = pos;
    prev_val = val;
  }
  if (n > 0 && (minima.empty() || minima.front().first != 1))
    throw std::invalid_argument("the first letter is always a left-to-right minimum");
  int current = n + 1;
  for (int i = 0; i < n; ++i) {
    if (out[i]) {
      current = out[i];
      continue;
    }
    int x = current + 1;
    while (x <= n && used[x])
      ++x;
    if (x > n)
      throw std::invalid_argument("no remaining letter exceeds the minimum at position " +
                                  std::to_string(i + 1));
    out[i] = x;
    used[x] = 1;
  }
  return Permutation(out);
}

Permutation simion_schmidt(const Permutation& s)
{
  require_avoids(s, "123", "simion_schmidt");
  std::vector<std::pair<int, int>> minima;
  int lo = s.size() + 1;
  for (int i = 0; i < s.size(); ++i) {
    if (s[i] < lo) {
      lo = s[i];
      minima.emplace_back(i + 1, s[i]);
    }
  }
  return reconstruct_132_from_lrmin(s.size(), minima);
}

Permutation phi_132(const Permutation& s)
{
  require_avoids(s, "132", "phi_132");
  int n = s.size();
  if (n == 0)
    return s;
  auto dp = descent_profile(s);
  std::set<int> positions{1};
  for (int i : dp.Des)
    positions.insert(n - s.at(i) + 1 + 1);
  std::set<int> values(dp.DB.begin(), dp.DB.end());
  values.insert(s[0]);
  std::vector<std::pair<int, int>> minima;
  auto v = values.rbegin();
  for (int pos : positions)
    minima.emplace_back(pos, *v++);
  return reconstruct_132_from_lrmin(n, minima);
}

Permutation phi_231(const Permutation& s)
{
  require_avoids(s, "231", "phi_231");
  int n = s.size();
  PairSet q;
  std::set<int> images;
  for (int a : descent_profile(s).DT) {
    auto restricted = parse_pattern("<13>2@(-," + std::to_string(a) + ",-)");
    int f = (n - a + 2) + static_cast<int>(count_occurrences(restricted, s));
    if (!images.insert(f).second)
      throw std::logic_error("phi_231: descent-top map not injective on " + s.to_string());
    q.emplace(f, n - a + 1);
  }
  return reconstruct_231_from_descents(n, q);
}

Permutation phi_inv_to_mad(const Permutation& s)
{
  return delta_inv(phi_path(psi(gamma(s))), DeltaVariant::A231);
}

ShortenedPolyomino polyomino_transfer(const ShortenedPolyomino& h)
{
  return upsilon_inv(phi_321(upsilon(h)));
}

} // namespace mahonia
