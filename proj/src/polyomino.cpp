#include "mahonia/polyomino.hpp"

#include <stdexcept>

#include "mahonia/pattern.hpp"

namespace mahonia {

namespace {

struct Walk
{
  std::vector<int> x, y; // coordinates before each step, plus the endpoint
};

Walk walk(const std::string& w)
{
  Walk r;
  int x = 0, y = 0;
  for (char c : w) {
    r.x.push_back(x);
    r.y.push_back(y);
    if (c == 'E')
      ++x;
    else
      ++y;
  }
  r.x.push_back(x);
  r.y.push_back(y);
  return r;
}

bool valid_steps(const std::string& w)
{
  for (char c : w)
    if (c != 'N' && c != 'E')
      return false;
  return true;
}

void extend(std::string& p, std::string& q, int px, int qx, int n,
            std::vector<ShortenedPolyomino>& out)
{
  int k = static_cast<int>(p.size());
  if (k == n) {
    if (px == qx)
      out.push_back({p, q});
    return;
  }
  for (char a : {'E', 'N'}) {
    for (char b : {'E', 'N'}) {
      if (px == qx && a == 'N' && b == 'N')
        continue;
      int npx = px + (a == 'E');
      int nqx = qx + (b == 'E');
      if (npx > nqx)
        continue;
      p.push_back(a);
      q.push_back(b);
      extend(p, q, npx, nqx, n, out);
      p.pop_back();
      q.pop_back();
    }
  }
}

} // namespace

bool is_polyomino(const ShortenedPolyomino& h)
{
  int n = h.size();
  if (static_cast<int>(h.lower.size()) != n || !valid_steps(h.upper) || !valid_steps(h.lower))
    return false;
  auto P = walk(h.upper), Q = walk(h.lower);
  for (int k = 0; k <= n; ++k) {
    if (P.x[k] > Q.x[k])
      return false;
    if (k < n && P.x[k] == Q.x[k] && h.upper[k] == 'N' && h.lower[k] == 'N')
      return false;
  }
  return P.x[n] == Q.x[n];
}

ShortenedPolyomino make_polyomino(std::string upper, std::string lower)
{
  ShortenedPolyomino h{std::move(upper), std::move(lower)};
  if (!is_polyomino(h))
    throw std::invalid_argument("not a shortened polyomino: " + h.upper + " / " + h.lower);
  return h;
}

std::vector<ShortenedPolyomino> enumerate_polyominoes(int n)
{
  std::vector<ShortenedPolyomino> out;
  std::string p, q;
  extend(p, q, 0, 0, n, out);
  return out;
}

std::vector<int> step_areas(const ShortenedPolyomino& h)
{
  int n = h.size();
  auto P = walk(h.upper), Q = walk(h.lower);
  std::vector<int> area(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (h.upper[j] != h.lower[i])
        continue;
      if (h.lower[i] == 'E' && P.x[j] == Q.x[i])
        area[i] = P.y[j] - Q.y[i];
      if (h.lower[i] == 'N' && P.y[j] == Q.y[i])
        area[i] = Q.x[i] - P.x[j];
    }
  }
  return area;
}

std::vector<int> lower_valleys(const ShortenedPolyomino& h)
{
  std::vector<int> v;
  for (int i = 0; i + 1 < h.size(); ++i)
    if (h.lower[i] == 'E' && h.lower[i + 1] == 'N')
      v.push_back(i + 1);
  return v;
}

PolyStats poly_statistics(const ShortenedPolyomino& h)
{
  auto area = step_areas(h);
  PolyStats s;
  for (int i : lower_valleys(h)) {
    s.vcarea += area[i - 1];
    s.vrarea += area[i];
    ++s.val;
  }
  return s;
}

Permutation upsilon(const ShortenedPolyomino& h)
{
  if (!is_polyomino(h))
    throw std::invalid_argument("upsilon: not a shortened polyomino");
  int n = h.size();
  auto P = walk(h.upper), Q = walk(h.lower);
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (h.upper[j] != h.lower[i])
        continue;
      bool same = h.lower[i] == 'E' ? P.x[j] == Q.x[i] : P.y[j] == Q.y[i];
      if (same)
        out[i] = j + 1;
    }
  }
  return Permutation(out);
}

ShortenedPolyomino upsilon_inv(const Permutation& s)
{
  if (!avoids(s, {parse_pattern("321")}))
    throw std::invalid_argument("upsilon_inv: " + s.to_string() + " contains 321");
  int n = s.size();
  ShortenedPolyomino h{std::string(n, 'N'), std::string(n, 'N')};
  for (int i = 1; i <= n; ++i) {
    if (s.at(i) >= i) {
      h.lower[i - 1] = 'E';
      h.upper[s.at(i) - 1] = 'E';
    }
  }
  if (!is_polyomino(h) || upsilon(h) != s)
    throw std::logic_error("upsilon_inv failed to invert " + s.to_string());
  return h;
}

} // namespace mahonia
