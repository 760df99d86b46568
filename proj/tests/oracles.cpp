#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::vector<Word> permutations(int n)
{
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do
    out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Pattern pattern(const std::string& text)
{
  Pattern p;
  std::vector<int> group; // group id per letter, letters in one <...> share it
  size_t i = 0;
  if (i < text.size() && text[i] == '[') {
    p.at_start = true;
    ++i;
  }
  int g = 0;
  for (; i < text.size() && text[i] != ']' && text[i] != '@'; ++i) {
    if (text[i] == '<') {
      ++g;
      for (++i; text[i] != '>'; ++i) {
        p.letters.push_back(text[i] - '0');
        group.push_back(g);
      }
      ++g;
    } else {
      p.letters.push_back(text[i] - '0');
      group.push_back(g++);
    }
  }
  if (i < text.size() && text[i] == ']') {
    p.at_end = true;
    ++i;
  }
  int m = static_cast<int>(p.letters.size());
  p.adjacent.assign(std::max(m - 1, 0), false);
  for (int j = 0; j + 1 < m; ++j)
    p.adjacent[j] = group[j] == group[j + 1];
  p.value.assign(m, 0);
  if (i < text.size()) {
    // @(a,b,...)
    i += 2;
    for (int j = 0; j < m; ++j) {
      size_t end = text.find_first_of(",)", i);
      std::string item = text.substr(i, end - i);
      p.value[j] = item == "-" ? 0 : std::stoi(item);
      i = end + 1;
    }
  }
  return p;
}

long count(const Pattern& p, const Word& w)
{
  int n = static_cast<int>(w.size()), m = static_cast<int>(p.letters.size());
  if (m > n || m == 0)
    return 0;
  long total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m)
      continue;
    std::vector<int> pos;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i))
        pos.push_back(i);
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int b = 0; b < m && ok; ++b)
        if ((p.letters[a] < p.letters[b]) != (w[pos[a]] < w[pos[b]]))
          ok = false;
    for (int j = 0; j + 1 < m && ok; ++j)
      if (p.adjacent[j] && pos[j + 1] != pos[j] + 1)
        ok = false;
    if (p.at_start && pos.front() != 0)
      ok = false;
    if (p.at_end && pos.back() != n - 1)
      ok = false;
    for (int j = 0; j < m && ok; ++j)
      if (p.value[j] && w[pos[j]] != p.value[j])
        ok = false;
    total += ok;
  }
  return total;
}

long count(const std::string& text, const Word& w) { return count(pattern(text), w); }

bool contains(const std::string& classical, const Word& w) { return count(classical, w) > 0; }

std::vector<Word> avoiders(int n, const std::vector<std::string>& classical)
{
  std::vector<Word> out;
  for (const auto& w : permutations(n))
    if (std::none_of(classical.begin(), classical.end(),
                     [&](const std::string& p) { return contains(p, w); }))
      out.push_back(w);
  return out;
}

int maj(const Word& w)
{
  int s = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1])
      s += static_cast<int>(i) + 1;
  return s;
}

int des(const Word& w)
{
  int s = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    s += w[i] > w[i + 1];
  return s;
}

int inv(const Word& w)
{
  int s = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      s += w[i] > w[j];
  return s;
}

int den(const Word& w)
{
  Word exc, nexc;
  int s = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    int pos = static_cast<int>(i) + 1;
    if (w[i] > pos) {
      exc.push_back(w[i]);
      s += pos;
    } else {
      nexc.push_back(w[i]);
    }
  }
  return s + inv(exc) + inv(nexc);
}

long iota(int k, const Word& w)
{
  if (k == -1)
    return 1;
  std::string inc;
  for (int i = 1; i <= k + 1; ++i)
    inc += static_cast<char>('0' + i);
  return count(inc, w);
}

long inc(const Word& w)
{
  long s = iota(1, w);
  for (int k = 2; k < static_cast<int>(w.size()); ++k)
    s += (k % 2 ? 1 : -1) * (1L << (k - 2)) * iota(k, w);
  return s;
}

long stat(const std::string& name, const Word& w)
{
  static const std::map<std::string, std::vector<std::string>> defs = {
    {"maj", {"1<32>", "2<31>", "3<21>", "<21>"}},
    {"inv", {"<23>1", "<31>2", "<32>1", "<21>"}},
    {"mak", {"1<32>", "<31>2", "<32>1", "<21>"}},
    {"makl", {"1<32>", "2<31>", "<32>1", "<21>"}},
    {"mad", {"2<31>", "2<31>", "<31>2", "<21>"}},
    {"bast", {"<13>2", "<21>3", "<32>1", "<21>"}},
    {"bast2", {"<13>2", "<31>2", "<32>1", "<21>"}},
    {"bast3", {"1<32>", "3<12>", "3<21>", "<21>"}},
    {"foze", {"<21>3", "3<21>", "<13>2", "<21>"}},
    {"foze2", {"1<32>", "2<31>", "2<31>", "<21>"}},
    {"foze3", {"<23>1", "<31>2", "<31>2", "<21>"}},
    {"sist", {"<13>2", "<13>2", "2<13>", "<21>"}},
    {"sist2", {"<13>2", "<13>2", "2<31>", "<21>"}},
    {"sist3", {"<13>2", "2<31>", "2<31>", "<21>"}},
  };
  auto it = defs.find(name);
  if (it != defs.end()) {
    long s = 0;
    for (const auto& p : it->second)
      s += count(p, w);
    return s;
  }
  if (name == "den")
    return den(w);
  if (name == "head")
    return w.empty() ? 0 : w.front();
  if (name == "last")
    return w.empty() ? 0 : w.back();
  if (name == "inc")
    return inc(w);
  throw std::invalid_argument("oracle: unknown statistic " + name);
}

Counts tally(const std::vector<long>& values)
{
  Counts c;
  for (long v : values) {
    if (v < 0)
      throw std::invalid_argument("oracle: negative statistic");
    if (static_cast<long>(c.size()) <= v)
      c.resize(v + 1, 0);
    ++c[v];
  }
  return c;
}

Counts distribution(const std::function<long(const Word&)>& f, const std::vector<Word>& set)
{
  std::vector<long> v;
  for (const auto& w : set)
    v.push_back(f(w));
  return tally(v);
}

Counts poly_mul(const Counts& a, const Counts& b)
{
  if (a.empty() || b.empty())
    return {};
  Counts c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

Counts q_factorial(int n)
{
  Counts r{1};
  for (int i = 1; i <= n; ++i)
    r = poly_mul(r, Counts(i, 1));
  return r;
}

std::int64_t catalan(int n)
{
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 0; k < m; ++k)
      c[m] += c[k] * c[m - 1 - k];
  return c[n];
}

std::int64_t binom(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

std::vector<std::string> dyck_paths(int n)
{
  std::vector<std::string> out;
  for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
    std::string w;
    int h = 0;
    bool ok = true;
    for (int i = 0; i < 2 * n && ok; ++i) {
      bool up = mask & (1u << (2 * n - 1 - i));
      w += up ? 'U' : 'D';
      h += up ? 1 : -1;
      ok = h >= 0;
    }
    if (ok && h == 0)
      out.push_back(w);
  }
  return out;
}

std::vector<int> heights(const std::string& w)
{
  std::vector<int> h{0};
  for (char c : w)
    h.push_back(h.back() + (c == 'U' ? 1 : -1));
  return h;
}

std::vector<Turn> peaks(const std::string& w)
{
  auto h = heights(w);
  std::vector<Turn> out;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == 'U' && w[i + 1] == 'D')
      out.push_back({static_cast<int>(i) + 1, h[i + 1]});
  return out;
}

std::vector<Turn> valleys(const std::string& w)
{
  auto h = heights(w);
  std::vector<Turn> out;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == 'D' && w[i + 1] == 'U')
      out.push_back({static_cast<int>(i) + 1, h[i + 1]});
  return out;
}

int dr(const std::string& w)
{
  int s = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    s += w[i] == 'U' && w[i + 1] == 'U';
  return s;
}

int npea(const std::string& w) { return static_cast<int>(peaks(w).size()); }
int nval(const std::string& w) { return static_cast<int>(valleys(w).size()); }

int spea(const std::string& w)
{
  int s = 0;
  for (auto p : peaks(w))
    s += p.height - 1;
  return s;
}

int stun(const std::string& w)
{
  auto h = heights(w);
  int s = 0;
  for (auto v : valleys(w)) {
    int x = v.pos - 1;
    while (h[x] != v.height)
      --x;
    s += (v.pos - x) / 2;
  }
  return s;
}

int sht(const std::string& w)
{
  auto h = heights(w);
  int s = 0;
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] == 'U')
      s += (h[i] + 1) / 2;
  return s;
}

int sdowns(const std::string& w)
{
  auto h = heights(w);
  int s = 0;
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] == 'D')
      s += h[i] / 2; // h[i] is the top of the step
  return s;
}

int area(const std::string& w)
{
  auto h = heights(w);
  int n2 = static_cast<int>(w.size()), s = 0;
  for (int x = 1; x < n2; ++x)
    for (int y = 1; y + 1 <= h[x]; ++y)
      s += (x + y) % 2 == 1;
  return s;
}

int umass(const std::string& w)
{
  std::vector<int> match(w.size()), stack;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'U') {
      stack.push_back(static_cast<int>(i));
    } else {
      match[stack.back()] = static_cast<int>(i);
      stack.pop_back();
    }
  }
  int s = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == 'U' && w[i + 1] == 'U')
      s += (match[i] - match[i + 1] - 1) / 2;
  return s;
}

int beta(const std::string& w)
{
  int s = 0;
  for (auto v : valleys(w))
    s += static_cast<int>(std::count(w.begin(), w.begin() + v.pos, 'D'));
  return s;
}

namespace {

bool valid_polyomino(const std::string& p, const std::string& q)
{
  if (std::count(p.begin(), p.end(), 'E') != std::count(q.begin(), q.end(), 'E'))
    return false;
  // column heights: y at which each path takes its k-th E step
  auto columns = [](const std::string& s) {
    std::vector<int> c;
    int y = 0;
    for (char ch : s) {
      if (ch == 'E')
        c.push_back(y);
      else
        ++y;
    }
    return c;
  };
  auto cp = columns(p), cq = columns(q);
  for (size_t k = 0; k < cp.size(); ++k)
    if (cp[k] < cq[k])
      return false;
  // no shared N-step: same (x, y) start for an N step in both paths
  auto north = [](const std::string& s) {
    std::vector<std::pair<int, int>> v;
    int x = 0, y = 0;
    for (char ch : s) {
      if (ch == 'N')
        v.emplace_back(x, y++);
      else
        ++x;
    }
    return v;
  };
  auto np = north(p), nq = north(q);
  for (auto a : np)
    if (std::find(nq.begin(), nq.end(), a) != nq.end())
      return false;
  return true;
}

std::vector<std::string> ne_words(int n)
{
  std::vector<std::string> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::string w;
    for (int i = 0; i < n; ++i)
      w += mask & (1u << (n - 1 - i)) ? 'N' : 'E';
    out.push_back(w);
  }
  return out;
}

// area between step i (0-based) of lower and the step of upper in the same
// column (E) or row (N)
int step_area(const std::string& p, const std::string& q, int i)
{
  int x = 0, y = 0;
  for (int k = 0; k < i; ++k)
    (q[k] == 'E' ? x : y)++;
  int px = 0, py = 0;
  for (char ch : p) {
    if (q[i] == 'E' && ch == 'E' && px == x)
      return py - y;
    if (q[i] == 'N' && ch == 'N' && py == y)
      return x - px;
    (ch == 'E' ? px : py)++;
  }
  throw std::logic_error("oracle: no projection");
}

} // namespace

std::vector<std::pair<std::string, std::string>> polyominoes(int n)
{
  std::vector<std::pair<std::string, std::string>> out;
  auto words = ne_words(n);
  for (const auto& p : words)
    for (const auto& q : words)
      if (valid_polyomino(p, q))
        out.emplace_back(p, q);
  return out;
}

int lower_valleys(const std::string& q)
{
  int s = 0;
  for (size_t i = 0; i + 1 < q.size(); ++i)
    s += q[i] == 'E' && q[i + 1] == 'N';
  return s;
}

int vcarea(const std::string& p, const std::string& q)
{
  int s = 0;
  for (size_t i = 0; i + 1 < q.size(); ++i)
    if (q[i] == 'E' && q[i + 1] == 'N')
      s += step_area(p, q, static_cast<int>(i));
  return s;
}

int vrarea(const std::string& p, const std::string& q)
{
  int s = 0;
  for (size_t i = 0; i + 1 < q.size(); ++i)
    if (q[i] == 'E' && q[i + 1] == 'N')
      s += step_area(p, q, static_cast<int>(i) + 1);
  return s;
}

} // namespace oracle
