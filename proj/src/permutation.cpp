#include "mahonia/permutation.hpp"
#include "mahonia/integer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mahonia {

Int binomial(int n, int k)
{
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i)
    r = checked_mul(r, n - k + i) / i;
  return r;
}

Permutation::Permutation(std::vector<int> values)
: v_(std::move(values))
{
  std::vector<char> seen(v_.size() + 1, 0);
  for (int x : v_) {
    if (x < 1 || x > size() || seen[x])
      throw std::invalid_argument("not a permutation of [n]");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n)
{
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text)
{
  std::vector<int> v;
  if (text.find(',') != std::string_view::npos) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t end = text.find(',', start);
      if (end == std::string_view::npos)
        end = text.size();
      std::string item(text.substr(start, end - start));
      if (item.empty())
        throw std::invalid_argument("empty entry in permutation text");
      size_t used = 0;
      int x = std::stoi(item, &used);
      if (used != item.size())
        throw std::invalid_argument("bad permutation entry: " + item);
      v.push_back(x);
      start = end + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument(std::string("bad permutation letter '") + ch + "'");
      v.push_back(ch - '0');
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(const std::vector<int>& word)
{
  std::vector<int> idx(word.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> v(word.size());
  for (size_t r = 0; r < idx.size(); ++r)
    v[idx[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const
{
  std::string s;
  bool wide = size() > 9;
  for (int i = 0; i < size(); ++i) {
    if (wide && i)
      s += ',';
    s += std::to_string(v_[i]);
  }
  return s;
}

void to_json(nlohmann::json& j, const Permutation& p) { j = p.values(); }

void from_json(const nlohmann::json& j, Permutation& p)
{
  p = Permutation(j.get<std::vector<int>>());
}

Permutation reverse(const Permutation& p)
{
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p)
{
  std::vector<int> v = p.values();
  for (int& x : v)
    x = p.size() + 1 - x;
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p)
{
  std::vector<int> v(p.size());
  for (int i = 0; i < p.size(); ++i)
    v[p[i] - 1] = i + 1;
  return Permutation(std::move(v));
}

Permutation apply_trivial(std::string_view op, const Permutation& p)
{
  std::vector<std::string> letters;
  if (op.find('.') != std::string_view::npos || op == "reverse" || op == "complement" ||
      op == "inverse") {
    size_t start = 0;
    while (start <= op.size()) {
      size_t end = op.find('.', start);
      if (end == std::string_view::npos)
        end = op.size();
      letters.emplace_back(op.substr(start, end - start));
      start = end + 1;
    }
  } else {
    for (char ch : op)
      letters.emplace_back(1, ch);
  }
  Permutation r = p;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const std::string& w = *it;
    if (w == "r" || w == "reverse")
      r = reverse(r);
    else if (w == "c" || w == "complement")
      r = complement(r);
    else if (w == "i" || w == "inverse")
      r = inverse(r);
    else if (w == "e" || w.empty())
      continue;
    else
      throw std::invalid_argument("unknown trivial bijection '" + w + "'");
  }
  return r;
}

const std::vector<std::string>& dihedral_words()
{
  static const std::vector<std::string> words = {"e", "r", "c", "i", "rc", "ri", "ci", "rci"};
  return words;
}

Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& blocks)
{
  if (static_cast<int>(blocks.size()) != skeleton.size())
    throw std::invalid_argument("inflate: number of blocks differs from skeleton length");
  // offset[v] = total size of blocks whose skeleton value is below v
  std::vector<int> size_by_value(skeleton.size() + 1, 0);
  for (int i = 0; i < skeleton.size(); ++i)
    size_by_value[skeleton[i]] = blocks[i].size();
  std::vector<int> offset(skeleton.size() + 2, 0);
  for (int v = 1; v <= skeleton.size(); ++v)
    offset[v + 1] = offset[v] + size_by_value[v];
  std::vector<int> out;
  for (int i = 0; i < skeleton.size(); ++i)
    for (int x : blocks[i].values())
      out.push_back(offset[skeleton[i]] + x);
  return Permutation(std::move(out));
}

namespace {

Permutation slice(const Permutation& p, int from, int to)
{
  std::vector<int> w(p.values().begin() + from, p.values().begin() + to);
  return Permutation::from_word(w);
}

[[noreturn]] void mismatch(const char* schema, int position)
{
  throw std::invalid_argument(std::string("block_decompose: permutation does not fit ") +
                              schema + " at position " + std::to_string(position));
}

} // namespace

Decomposition block_decompose(const Permutation& p, Schema schema)
{
  int n = p.size();
  if (n == 0)
    throw std::invalid_argument("block_decompose: empty permutation");
  if (n == 1)
    return {Permutation::identity(1), {Permutation::identity(1)}};

  switch (schema) {
  case Schema::around_max: {
    int k = 0;
    while (p[k] != n)
      ++k;
    // letters before n take the values n-k..n-1
    for (int i = 0; i < k; ++i)
      if (p[i] < n - k)
        mismatch("231[s1,1,s2]", i + 1);
    return {Permutation({2, 3, 1}), {slice(p, 0, k), Permutation::identity(1), slice(p, k + 1, n)}};
  }
  case Schema::around_first: {
    int a = p[0];
    for (int i = 1; i < a; ++i)
      if (p[i] > a)
        mismatch("213[1,s1,s2]", i + 1);
    return {Permutation({2, 1, 3}), {Permutation::identity(1), slice(p, 1, a), slice(p, a, n)}};
  }
  case Schema::around_last: {
    int k = p[n - 1] - 1;
    for (int i = 0; i < k; ++i)
      if (p[i] > k)
        mismatch("132[s1,s2,1]", i + 1);
    return {Permutation({1, 3, 2}), {slice(p, 0, k), slice(p, k, n - 1), Permutation::identity(1)}};
  }
  }
  throw std::logic_error("unreachable");
}

DescentProfile descent_profile(const Permutation& p)
{
  DescentProfile d;
  for (int i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) {
      d.Des.insert(i + 1);
      d.DT.insert(p[i]);
      d.DB.insert(p[i + 1]);
      d.maj += i + 1;
      ++d.des;
    } else {
      d.Asc.insert(i + 1);
      d.AB.insert(p[i]);
      d.AT.insert(p[i + 1]);
    }
  }
  return d;
}

ExtremaProfile extrema_profile(const Permutation& p)
{
  ExtremaProfile e;
  int hi = 0, lo = p.size() + 1;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > hi) {
      hi = p[i];
      e.LRMax.insert(p[i]);
    }
    if (p[i] < lo) {
      lo = p[i];
      e.LRMin.insert(p[i]);
    }
    if (i > 0 && i + 1 < p.size()) {
      if (p[i - 1] < p[i] && p[i] > p[i + 1])
        e.peaks.insert(p[i]);
      if (p[i - 1] > p[i] && p[i] < p[i + 1])
        e.valleys.insert(p[i]);
    }
  }
  e.lrmax = static_cast<int>(e.LRMax.size());
  e.lrmin = static_cast<int>(e.LRMin.size());
  return e;
}

int maj(const Permutation& p)
{
  int s = 0;
  for (int i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1])
      s += i + 1;
  return s;
}

int des(const Permutation& p)
{
  int s = 0;
  for (int i = 0; i + 1 < p.size(); ++i)
    s += p[i] > p[i + 1];
  return s;
}

int inv(const Permutation& p)
{
  int s = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      s += p[i] > p[j];
  return s;
}

std::vector<Permutation> all_permutations(int n)
{
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

} // namespace mahonia
