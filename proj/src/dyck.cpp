#include "mahonia/dyck.hpp"

#include <algorithm>
#include <stdexcept>

#include "mahonia/pattern.hpp"

namespace mahonia {

DyckPath::DyckPath(std::string word)
: w_(std::move(word))
{
  if (!is_dyck_word(w_))
    throw std::invalid_argument("not a Dyck word: \"" + w_ + "\"");
}

DyckPath DyckPath::operator+(const DyckPath& o) const
{
  DyckPath r;
  r.w_ = w_ + o.w_;
  return r;
}

bool is_dyck_word(std::string_view w)
{
  int h = 0;
  for (char c : w) {
    if (c == 'U')
      ++h;
    else if (c == 'D')
      --h;
    else
      return false;
    if (h < 0)
      return false;
  }
  return h == 0;
}

namespace {

void grow(std::string& w, int ups, int downs, int n, std::vector<DyckPath>& out)
{
  if (ups == n && downs == n) {
    out.emplace_back(w);
    return;
  }
  if (downs < ups) {
    w.push_back('D');
    grow(w, ups, downs + 1, n, out);
    w.pop_back();
  }
  if (ups < n) {
    w.push_back('U');
    grow(w, ups + 1, downs, n, out);
    w.pop_back();
  }
}

DyckPath wrap(const DyckPath& inner) { return DyckPath("U" + inner.word() + "D"); }

const DyckPath kUD("UD");

void require_avoids(const Permutation& s, const char* pattern, const char* what)
{
  if (!avoids(s, {parse_pattern(pattern)}))
    throw std::invalid_argument(std::string(what) + ": " + s.to_string() + " contains " + pattern);
}

std::string repeat(char c, int k) { return std::string(std::max(k, 0), c); }

} // namespace

std::vector<DyckPath> all_dyck_paths(int n)
{
  std::vector<DyckPath> out;
  std::string w;
  grow(w, 0, 0, n, out);
  return out;
}

StepAnnotations annotate(const DyckPath& p)
{
  const std::string& w = p.word();
  int len = p.length();
  StepAnnotations a;
  a.low.resize(len);
  a.match.resize(len);
  a.mass.assign(len, 0);
  std::vector<int> y(len + 1, 0);
  std::vector<int> stack;
  for (int i = 0; i < len; ++i) {
    y[i + 1] = y[i] + (w[i] == 'U' ? 1 : -1);
    a.low[i] = std::min(y[i], y[i + 1]);
    if (w[i] == 'U') {
      stack.push_back(i);
    } else {
      a.match[i] = stack.back() + 1;
      a.match[stack.back()] = i + 1;
      stack.pop_back();
    }
  }
  for (int i = 0; i + 1 < len; ++i) {
    if (w[i] == 'U' && w[i + 1] == 'D')
      a.peaks.push_back({i + 1, i + 1, y[i + 1]});
    if (w[i] == 'D' && w[i + 1] == 'U') {
      int x = i + 1;
      int prev = x - 2;
      while (y[prev] != y[x])
        --prev;
      a.valleys.push_back({i + 1, x, y[x]});
      a.tunnels.emplace_back(prev + 1, x);
    }
    if (w[i] == 'U' && w[i + 1] == 'U')
      a.mass[i] = (a.match[i] - a.match[i + 1] - 1) / 2;
    if (w[i] == 'D' && w[i + 1] == 'D')
      a.mass[i + 1] = (a.match[i] - a.match[i + 1] - 1) / 2;
  }
  return a;
}

PathStats path_statistics(const DyckPath& p)
{
  const std::string& w = p.word();
  auto a = annotate(p);
  PathStats s;
  int downs_seen = 0;
  size_t next_valley = 0;
  for (int i = 0; i < p.length(); ++i) {
    bool up = w[i] == 'U';
    if (up) {
      s.sht += (a.low[i] + 1) / 2;
      s.area += a.low[i];
      s.Umass += a.mass[i];
    } else {
      s.sdowns += (a.low[i] + 1) / 2;
      s.Dmass += a.mass[i];
      ++downs_seen;
    }
    if (i + 1 < p.length()) {
      s.dr += up && w[i + 1] == 'U';
      s.dd += !up && w[i + 1] == 'D';
    }
    if (next_valley < a.valleys.size() && a.valleys[next_valley].index == i + 1) {
      s.beta += downs_seen;
      ++next_valley;
    }
  }
  s.npea = static_cast<int>(a.peaks.size());
  s.nval = static_cast<int>(a.valleys.size());
  for (const auto& pk : a.peaks)
    s.spea += pk.height - 1;
  for (const auto& [from, to] : a.tunnels)
    s.stun += (to - from + 1) / 2;
  return s;
}

Int dyck_iota(const DyckPath& p, int k)
{
  auto a = annotate(p);
  Int s = 0;
  for (int i = 0; i < p.length(); ++i)
    if (p.word()[i] == 'D')
      s = checked_add(s, binomial(a.low[i], k));
  return s;
}

int valley_offset_sum(const DyckPath& p)
{
  int s = 0;
  for (const auto& v : annotate(p).valleys)
    s += (v.pos - v.height) / 2;
  return s;
}

int peak_offset_sum(const DyckPath& p)
{
  int s = 0;
  for (const auto& pk : annotate(p).peaks)
    s += (pk.pos - pk.height) / 2;
  return s;
}

int excedance_peak_sum(const DyckPath& p)
{
  int s = 0;
  for (const auto& pk : annotate(p).peaks)
    if (pk.height >= 2)
      s += (pk.pos - pk.height) / 2 + 1;
  return s;
}

std::pair<DyckPath, DyckPath> first_return(const DyckPath& p)
{
  if (p.empty())
    throw std::invalid_argument("first_return of the empty path");
  const std::string& w = p.word();
  int h = 0;
  size_t i = 0;
  do {
    h += w[i] == 'U' ? 1 : -1;
    ++i;
  } while (h != 0);
  return {DyckPath(w.substr(1, i - 2)), DyckPath(w.substr(i))};
}

std::vector<DyckPath> prime_factors(const DyckPath& p)
{
  std::vector<DyckPath> out;
  DyckPath rest = p;
  while (!rest.empty()) {
    auto [inner, tail] = first_return(rest);
    out.push_back(wrap(inner));
    rest = tail;
  }
  return out;
}

DyckPath delta(const Permutation& s, DeltaVariant v)
{
  static const char* names[] = {"231", "312", "132"};
  require_avoids(s, names[static_cast<int>(v)], "delta");
  if (s.empty())
    return {};
  if (s.size() == 1)
    return kUD;
  switch (v) {
  case DeltaVariant::A231: {
    auto d = block_decompose(s, Schema::around_first);
    return wrap(delta(d.blocks[1], v)) + delta(d.blocks[2], v);
  }
  case DeltaVariant::A312: {
    auto d = block_decompose(s, Schema::around_last);
    return delta(d.blocks[0], v) + wrap(delta(d.blocks[1], v));
  }
  case DeltaVariant::A132: {
    auto d = block_decompose(s, Schema::around_max);
    return wrap(delta(d.blocks[0], v)) + delta(d.blocks[2], v);
  }
  }
  throw std::logic_error("unreachable");
}

Permutation delta_inv(const DyckPath& p, DeltaVariant v)
{
  if (p.empty())
    return {};
  const Permutation one = Permutation::identity(1);
  switch (v) {
  case DeltaVariant::A231: {
    auto [inner, rest] = first_return(p);
    return inflate(Permutation({2, 1, 3}), {one, delta_inv(inner, v), delta_inv(rest, v)});
  }
  case DeltaVariant::A312: {
    // the U matching the final D
    const std::string& w = p.word();
    int h = 0;
    int i = p.length() - 1;
    do {
      h += w[i] == 'D' ? 1 : -1;
      --i;
    } while (h != 0);
    DyckPath head(w.substr(0, i + 1));
    DyckPath inner(w.substr(i + 2, p.length() - i - 3));
    return inflate(Permutation({1, 3, 2}), {delta_inv(head, v), delta_inv(inner, v), one});
  }
  case DeltaVariant::A132: {
    auto [inner, rest] = first_return(p);
    return inflate(Permutation({2, 3, 1}), {delta_inv(inner, v), one, delta_inv(rest, v)});
  }
  }
  throw std::logic_error("unreachable");
}

DyckPath gamma(const Permutation& s)
{
  require_avoids(s, "321", "gamma");
  int n = s.size();
  std::string w;
  int x = 0, y = 0;
  for (int i = 1; i <= n; ++i) {
    if (s.at(i) < i)
      continue;
    w += repeat('D', (i - 1) - x);
    w += repeat('U', s.at(i) - y);
    x = i - 1;
    y = s.at(i);
  }
  w += repeat('D', n - x);
  return DyckPath(w);
}

Permutation gamma_inv(const DyckPath& p)
{
  int n = p.size();
  std::vector<int> out(n, 0);
  std::vector<char> used(n + 1, 0);
  int ups = 0, downs = 0;
  const std::string& w = p.word();
  for (int i = 0; i < p.length(); ++i) {
    if (w[i] == 'U') {
      ++ups;
      if (i + 1 < p.length() && w[i + 1] == 'D') {
        out[downs] = ups;
        used[ups] = 1;
      }
    } else {
      ++downs;
    }
  }
  int next = 1;
  for (int i = 0; i < n; ++i) {
    if (out[i])
      continue;
    while (used[next])
      ++next;
    out[i] = next;
    used[next] = 1;
  }
  return Permutation(out);
}

namespace {

using Runs = std::vector<std::pair<int, int>>;

Runs runs_of(const DyckPath& p)
{
  Runs r;
  const std::string& w = p.word();
  size_t i = 0;
  while (i < w.size()) {
    int ups = 0, downs = 0;
    while (i < w.size() && w[i] == 'U') {
      ++ups;
      ++i;
    }
    while (i < w.size() && w[i] == 'D') {
      ++downs;
      ++i;
    }
    r.emplace_back(ups, downs);
  }
  return r;
}

std::string word_of(const Runs& runs)
{
  std::string w;
  for (auto [u, d] : runs)
    w += repeat('U', u) + repeat('D', d);
  return w;
}

} // namespace

DyckPath delta_pair(const DyckPath& q, const DyckPath& r)
{
  Runs a = q.empty() ? Runs{{0, 0}} : runs_of(q);
  int s = static_cast<int>(a.size());
  if (r.empty()) {
    Runs out = a;
    out[0].first += 1;
    out[0].second += 1;
    return DyckPath(word_of(out));
  }
  Runs c = runs_of(r);
  std::string w = repeat('U', a[0].first + 1) + "D";
  for (int i = 1; i < s; ++i)
    w += repeat('U', a[i].first) + repeat('D', a[i - 1].second);
  w += repeat('U', c[0].first) + repeat('D', a[s - 1].second + c[0].second);
  w += word_of(Runs(c.begin() + 1, c.end()));
  return DyckPath(w);
}

std::pair<DyckPath, DyckPath> delta_pair_inv(const DyckPath& p)
{
  if (p.empty())
    throw std::invalid_argument("delta_pair_inv of the empty path");
  Runs e = runs_of(p);
  if (p.word() == "UD" || e[0].second >= 2) {
    Runs q = e;
    q[0].first -= 1;
    q[0].second -= 1;
    return {DyckPath(word_of(q)), DyckPath()};
  }
  int t = static_cast<int>(e.size());
  std::vector<int> valley(t);
  int h = 0;
  for (int i = 0; i < t; ++i) {
    h += e[i].first - e[i].second;
    valley[i] = h;
  }
  int s = -1;
  for (int i = 1; i < t; ++i) {
    if (e[i].second > valley[i - 1]) {
      s = i; // zero-based index of run s+1
      break;
    }
  }
  if (s < 0)
    throw std::logic_error("delta_pair_inv: no split run");
  Runs q(s);
  q[0].first = e[0].first - 1;
  for (int j = 1; j < s; ++j)
    q[j].first = e[j].first;
  for (int j = 0; j + 1 < s; ++j)
    q[j].second = e[j + 1].second;
  q[s - 1].second = valley[s - 1];
  Runs r;
  r.emplace_back(e[s].first, e[s].second - valley[s - 1]);
  for (int j = s + 1; j < t; ++j)
    r.push_back(e[j]);
  return {DyckPath(word_of(q)), DyckPath(word_of(r))};
}

DyckPath psi(const DyckPath& p)
{
  if (p.empty())
    return {};
  auto [q, r] = delta_pair_inv(p);
  if (r.empty())
    return kUD + psi(q);
  if (q.empty())
    return wrap(psi(r));
  return wrap(psi(q)) + psi(r);
}

DyckPath psi_inv(const DyckPath& p)
{
  if (p.empty())
    return {};
  auto [w1, w2] = first_return(p);
  if (w1.empty())
    return delta_pair(psi_inv(w2), {});
  if (w2.empty())
    return delta_pair({}, psi_inv(w1));
  return delta_pair(psi_inv(w1), psi_inv(w2));
}

DyckPath phi_path(const DyckPath& p)
{
  if (p.empty())
    return {};
  auto parts = prime_factors(p);
  // nested[i] encodes the first i inner paths
  DyckPath nested;
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    auto inner = first_return(parts[i]).first;
    nested = wrap(nested) + phi_path(inner);
  }
  return wrap(nested) + phi_path(first_return(parts.back()).first);
}

DyckPath phi_path_inv(const DyckPath& p)
{
  if (p.empty())
    return {};
  auto [nested, tail] = first_return(p);
  std::vector<DyckPath> inner;
  while (!nested.empty()) {
    auto [a, b] = first_return(nested);
    inner.push_back(phi_path_inv(b));
    nested = a;
  }
  std::reverse(inner.begin(), inner.end());
  inner.push_back(phi_path_inv(tail));
  DyckPath out;
  for (const auto& x : inner)
    out = out + wrap(x);
  return out;
}

DyckPath theta(const DyckPath& p)
{
  DyckPath out;
  for (const auto& prime : prime_factors(p)) {
    if (prime.word() == "UD") {
      out = out + kUD;
      continue;
    }
    auto blocks = prime_factors(first_return(prime).first);
    int s = static_cast<int>(blocks.size());
    std::string w = repeat('U', s + 1) + "D";
    for (const auto& b : blocks)
      w += theta(first_return(b).first).word() + "D";
    out = out + DyckPath(w);
  }
  return out;
}

DyckPath theta_inv(const DyckPath& p)
{
  DyckPath out;
  for (const auto& prime : prime_factors(p)) {
    const std::string& w = prime.word();
    int lead = 0;
    while (w[lead] == 'U')
      ++lead;
    int s = lead - 1;
    if (s == 0) {
      out = out + kUD;
      continue;
    }
    std::string inner;
    size_t i = lead + 1;
    int h = s;
    for (int b = 0; b < s; ++b) {
      size_t start = i;
      int base = h;
      while (true) {
        int next = h + (w[i] == 'U' ? 1 : -1);
        if (next < base)
          break;
        h = next;
        ++i;
      }
      DyckPath seg(w.substr(start, i - start));
      inner += "U" + theta_inv(seg).word() + "D";
      ++i; // the closing D
      --h;
    }
    out = out + wrap(DyckPath(inner));
  }
  return out;
}

DyckPath lambda(const DyckPath& p) { return theta_inv(phi_path(psi(p))); }

DyckPath lambda_inv(const DyckPath& p) { return psi_inv(phi_path_inv(theta(p))); }

DyckPath omega_stump(const Permutation& s)
{
  require_avoids(s, "231", "omega_stump");
  int n = s.size();
  auto des_pos = descent_profile(s).Des;
  auto ides_pos = descent_profile(inverse(s)).Des;
  std::vector<int> d(des_pos.begin(), des_pos.end());
  std::vector<int> di(ides_pos.begin(), ides_pos.end());
  if (d.size() != di.size())
    throw std::logic_error("omega_stump: des(s) != des(s^-1)");
  d.push_back(n);
  di.push_back(n);
  std::string w;
  int pu = 0, pd = 0;
  for (size_t j = 0; j < d.size(); ++j) {
    w += repeat('U', di[j] - pu) + repeat('D', d[j] - pd);
    pu = di[j];
    pd = d[j];
  }
  if (!is_dyck_word(w))
    throw std::logic_error("omega_stump produced a non-Dyck word " + w);
  return DyckPath(w);
}

} // namespace mahonia
