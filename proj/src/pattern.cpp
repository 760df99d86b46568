#include "mahonia/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace mahonia {

bool VincularPattern::classical() const
{
  if (!adjacency.empty())
    return false;
  for (const auto& r : restriction)
    if (r)
      return false;
  return true;
}

std::string VincularPattern::to_string() const
{
  int m = length();
  std::string s;
  if (adjacency.count(0))
    s += '[';
  int j = 0;
  while (j < m) {
    int end = j;
    while (end + 1 < m && adjacency.count(end + 1))
      ++end;
    if (end > j)
      s += '<';
    for (int t = j; t <= end; ++t)
      s += static_cast<char>('0' + pi[t]);
    if (end > j)
      s += '>';
    j = end + 1;
  }
  if (m > 0 && adjacency.count(m))
    s += ']';
  bool restricted = std::any_of(restriction.begin(), restriction.end(),
                                [](const auto& r) { return r.has_value(); });
  if (restricted) {
    s += "@(";
    for (int t = 0; t < m; ++t) {
      if (t)
        s += ',';
      s += restriction[t] ? std::to_string(*restriction[t]) : "-";
    }
    s += ')';
  }
  return s;
}

namespace {

[[noreturn]] void malformed(std::string_view text, const std::string& why)
{
  throw std::invalid_argument("malformed pattern \"" + std::string(text) + "\": " + why);
}

} // namespace

VincularPattern parse_pattern(std::string_view text)
{
  VincularPattern p;
  std::vector<int> digits;
  size_t i = 0;
  bool anchor_start = false, anchor_end = false;
  if (i < text.size() && text[i] == '[') {
    anchor_start = true;
    ++i;
  }
  int group_start = -1;
  while (i < text.size() && text[i] != ']' && text[i] != '@') {
    char ch = text[i];
    if (ch == '<') {
      if (group_start >= 0)
        malformed(text, "nested '<'");
      group_start = static_cast<int>(digits.size());
    } else if (ch == '>') {
      if (group_start < 0)
        malformed(text, "unmatched '>'");
      int len = static_cast<int>(digits.size()) - group_start;
      if (len < 2)
        malformed(text, "adjacent group needs at least two letters");
      for (int t = group_start; t + 1 < static_cast<int>(digits.size()); ++t)
        p.adjacency.insert(t + 1);
      group_start = -1;
    } else if (ch >= '1' && ch <= '9') {
      digits.push_back(ch - '0');
    } else {
      malformed(text, std::string("unexpected character '") + ch + "'");
    }
    ++i;
  }
  if (group_start >= 0)
    malformed(text, "unclosed '<'");
  if (i < text.size() && text[i] == ']') {
    anchor_end = true;
    ++i;
  }
  if (digits.empty())
    malformed(text, "no letters");
  try {
    p.pi = Permutation(digits);
  } catch (const std::invalid_argument&) {
    malformed(text, "letters are not a permutation of [m]");
  }
  int m = p.length();
  if (anchor_start)
    p.adjacency.insert(0);
  if (anchor_end)
    p.adjacency.insert(m);
  p.restriction.assign(m, std::nullopt);
  if (i < text.size()) {
    if (text.substr(i, 2) != "@(" || text.back() != ')')
      malformed(text, "expected \"@(...)\" restriction");
    std::string_view body = text.substr(i + 2, text.size() - i - 3);
    std::vector<std::string> items;
    size_t start = 0;
    while (start <= body.size()) {
      size_t end = body.find(',', start);
      if (end == std::string_view::npos)
        end = body.size();
      items.emplace_back(body.substr(start, end - start));
      start = end + 1;
    }
    if (static_cast<int>(items.size()) != m)
      malformed(text, "restriction arity " + std::to_string(items.size()) + " differs from length " +
                          std::to_string(m));
    for (int t = 0; t < m; ++t) {
      const std::string& it = items[t];
      if (it == "-")
        continue;
      if (it.empty() || !std::all_of(it.begin(), it.end(), [](char c) { return c >= '0' && c <= '9'; }))
        malformed(text, "bad restriction entry '" + it + "'");
      int v = std::stoi(it);
      if (v < 1)
        malformed(text, "restriction values are positive");
      p.restriction[t] = v;
    }
  }
  return p;
}

std::vector<VincularPattern> parse_pattern_list(std::string_view text)
{
  std::vector<VincularPattern> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(')
      ++depth;
    else if (i < text.size() && text[i] == ')')
      --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view item = text.substr(start, i - start);
      while (!item.empty() && item.front() == ' ')
        item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ')
        item.remove_suffix(1);
      if (!item.empty())
        out.push_back(parse_pattern(item));
      start = i + 1;
    }
  }
  return out;
}

namespace {

struct Matcher
{
  const VincularPattern& p;
  const int* w;
  int n;
  int m;
  int pos[16] = {};
  std::vector<Occurrence>* sink = nullptr;
  bool stop_at_first = false;
  long found = 0;

  bool fits(int j, int at) const
  {
    int x = w[at];
    if (p.restriction[j] && *p.restriction[j] != x)
      return false;
    for (int t = 0; t < j; ++t)
      if ((w[pos[t]] < x) != (p.pi[t] < p.pi[j]))
        return false;
    return true;
  }

  void run(int j)
  {
    if (j == m) {
      ++found;
      if (sink) {
        Occurrence o(pos, pos + m);
        for (int& x : o)
          ++x;
        sink->push_back(std::move(o));
      }
      return;
    }
    int lo, hi;
    if (j == 0) {
      lo = 0;
      hi = p.adjacency.count(0) ? 0 : n - m;
    } else if (p.adjacency.count(j)) {
      lo = hi = pos[j - 1] + 1;
    } else {
      lo = pos[j - 1] + 1;
      hi = n - (m - j);
    }
    if (j == m - 1 && p.adjacency.count(m))
      lo = std::max(lo, n - 1);
    for (int at = lo; at <= hi && at < n; ++at) {
      if (!fits(j, at))
        continue;
      pos[j] = at;
      run(j + 1);
      if (stop_at_first && found)
        return;
    }
  }
};

} // namespace

long count_occurrences(const VincularPattern& p, const Permutation& s)
{
  if (p.length() > s.size() || p.length() == 0)
    return 0;
  Matcher mt{p, s.values().data(), s.size(), p.length()};
  mt.run(0);
  return mt.found;
}

std::vector<Occurrence> list_occurrences(const VincularPattern& p, const Permutation& s)
{
  std::vector<Occurrence> out;
  if (p.length() > s.size() || p.length() == 0)
    return out;
  Matcher mt{p, s.values().data(), s.size(), p.length()};
  mt.sink = &out;
  mt.run(0);
  return out;
}

bool contains(const VincularPattern& p, const Permutation& s)
{
  if (p.length() > s.size() || p.length() == 0)
    return false;
  Matcher mt{p, s.values().data(), s.size(), p.length()};
  mt.stop_at_first = true;
  mt.run(0);
  return mt.found > 0;
}

bool avoids(const Permutation& s, const std::vector<VincularPattern>& patterns)
{
  for (const auto& p : patterns)
    if (contains(p, s))
      return false;
  return true;
}

namespace {

bool ending_search(const VincularPattern& p, const int* w, int last, int j, int* pos)
{
  int m = p.length();
  if (j == m - 1) {
    int x = w[last];
    for (int t = 0; t < j; ++t)
      if ((w[pos[t]] < x) != (p.pi[t] < p.pi[j]))
        return false;
    return true;
  }
  int lo = j ? pos[j - 1] + 1 : 0;
  int hi = last - (m - 1 - j);
  for (int at = lo; at <= hi; ++at) {
    bool ok = true;
    for (int t = 0; t < j && ok; ++t)
      ok = (w[pos[t]] < w[at]) == (p.pi[t] < p.pi[j]);
    if (!ok)
      continue;
    pos[j] = at;
    if (ending_search(p, w, last, j + 1, pos))
      return true;
  }
  return false;
}

} // namespace

bool occurs_ending_at(const VincularPattern& p, const int* word, int len)
{
  int m = p.length();
  if (m == 0 || len < m)
    return false;
  int pos[16];
  return ending_search(p, word, len - 1, 0, pos);
}

std::string canonical_set(const std::vector<VincularPattern>& patterns)
{
  std::vector<std::string> names;
  for (const auto& p : patterns)
    names.push_back(p.to_string());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::string s = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i)
      s += ',';
    s += names[i];
  }
  return s + "}";
}

} // namespace mahonia
