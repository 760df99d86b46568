#include "mahonia/statistic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mahonia {

namespace {

struct TableEntry
{
  const char* name;
  std::vector<std::pair<const char*, Int>> terms;
};

const std::vector<TableEntry>& table()
{
  static const std::vector<TableEntry> t = {
    {"maj", {{"1<32>", 1}, {"2<31>", 1}, {"3<21>", 1}, {"<21>", 1}}},
    {"inv", {{"<23>1", 1}, {"<31>2", 1}, {"<32>1", 1}, {"<21>", 1}}},
    {"mak", {{"1<32>", 1}, {"<31>2", 1}, {"<32>1", 1}, {"<21>", 1}}},
    {"makl", {{"1<32>", 1}, {"2<31>", 1}, {"<32>1", 1}, {"<21>", 1}}},
    {"mad", {{"2<31>", 2}, {"<31>2", 1}, {"<21>", 1}}},
    {"bast", {{"<13>2", 1}, {"<21>3", 1}, {"<32>1", 1}, {"<21>", 1}}},
    {"bast2", {{"<13>2", 1}, {"<31>2", 1}, {"<32>1", 1}, {"<21>", 1}}},
    {"bast3", {{"1<32>", 1}, {"3<12>", 1}, {"3<21>", 1}, {"<21>", 1}}},
    {"foze", {{"<21>3", 1}, {"3<21>", 1}, {"<13>2", 1}, {"<21>", 1}}},
    {"foze2", {{"1<32>", 1}, {"2<31>", 2}, {"<21>", 1}}},
    {"foze3", {{"<23>1", 1}, {"<31>2", 2}, {"<21>", 1}}},
    {"sist", {{"<13>2", 2}, {"2<13>", 1}, {"<21>", 1}}},
    {"sist2", {{"<13>2", 2}, {"2<31>", 1}, {"<21>", 1}}},
    {"sist3", {{"<13>2", 1}, {"2<31>", 2}, {"<21>", 1}}},
  };
  return t;
}

std::string trim(std::string_view s)
{
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string_view::npos)
    return {};
  size_t b = s.find_last_not_of(" \t");
  return std::string(s.substr(a, b - a + 1));
}

int word_inversions(const std::vector<int>& w)
{
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      c += w[i] > w[j];
  return c;
}

} // namespace

const std::vector<std::string>& table_stat_names()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : table())
      out.push_back(e.name);
    return out;
  }();
  return names;
}

StatSpec linear_stat(std::vector<std::pair<VincularPattern, Int>> terms, std::string name)
{
  std::map<std::string, std::pair<VincularPattern, Int>> merged;
  for (auto& [p, c] : terms) {
    auto key = p.to_string();
    auto it = merged.find(key);
    if (it == merged.end())
      merged.emplace(key, std::make_pair(std::move(p), c));
    else
      it->second.second = checked_add(it->second.second, c);
  }
  StatSpec s;
  s.name = std::move(name);
  for (auto& [key, pc] : merged)
    if (pc.second != 0)
      s.terms.push_back(std::move(pc));
  return s;
}

std::string StatSpec::canonical() const
{
  switch (builtin) {
  case Builtin::den: return "den";
  case Builtin::head: return "head";
  case Builtin::last: return "last";
  case Builtin::imaj: return "imaj";
  case Builtin::inc: return "inc";
  case Builtin::iota: return "iota:" + std::to_string(iota_k);
  case Builtin::none: break;
  }
  std::string s = "lin:";
  for (size_t i = 0; i < terms.size(); ++i) {
    s += i ? " + " : " ";
    s += std::to_string(terms[i].second) + "*" + terms[i].first.to_string();
  }
  return s;
}

StatSpec named(const std::string& name)
{
  for (const auto& e : table()) {
    if (name != e.name)
      continue;
    std::vector<std::pair<VincularPattern, Int>> terms;
    for (const auto& [text, c] : e.terms)
      terms.emplace_back(parse_pattern(text), c);
    return linear_stat(std::move(terms), name);
  }
  StatSpec s;
  s.name = name;
  if (name == "den")
    s.builtin = Builtin::den;
  else if (name == "head")
    s.builtin = Builtin::head;
  else if (name == "last")
    s.builtin = Builtin::last;
  else if (name == "imaj")
    s.builtin = Builtin::imaj;
  else if (name == "inc")
    s.builtin = Builtin::inc;
  else if (name.rfind("iota:", 0) == 0) {
    s.builtin = Builtin::iota;
    try {
      size_t used = 0;
      s.iota_k = std::stoi(name.substr(5), &used);
      if (used != name.size() - 5 || s.iota_k < -1)
        throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad iota index in \"" + name + "\"");
    }
  } else {
    throw std::invalid_argument("unknown statistic \"" + name + "\"");
  }
  return s;
}

StatSpec parse_stat(std::string_view text)
{
  std::string t = trim(text);
  if (t.rfind("lin:", 0) != 0)
    return named(t);
  std::string_view body = std::string_view(t).substr(4);
  std::vector<std::pair<VincularPattern, Int>> terms;
  int depth = 0;
  Int sign = 1;
  std::string cur;
  auto flush = [&] {
    std::string term = trim(cur);
    cur.clear();
    if (term.empty())
      return;
    Int coeff = 1;
    auto star = term.find('*');
    std::string pat = term;
    if (star != std::string::npos) {
      std::string num = trim(std::string_view(term).substr(0, star));
      try {
        size_t used = 0;
        coeff = std::stoll(num, &used);
        if (used != num.size())
          throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad coefficient \"" + num + "\" in statistic literal");
      }
      pat = trim(std::string_view(term).substr(star + 1));
    }
    terms.emplace_back(parse_pattern(pat), checked_mul(sign, coeff));
  };
  bool seen = false;
  for (char ch : body) {
    if (ch == '(')
      ++depth;
    else if (ch == ')')
      --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (seen && trim(cur).empty())
        throw std::invalid_argument("empty term in statistic literal");
      flush();
      sign = ch == '-' ? -1 : 1;
      seen = true;
      continue;
    }
    cur += ch;
  }
  if (trim(cur).empty())
    throw std::invalid_argument("statistic literal ends without a term");
  flush();
  if (terms.empty())
    throw std::invalid_argument("statistic literal has no terms");
  return linear_stat(std::move(terms));
}

Int iota(int k, const Permutation& p)
{
  if (k < -1)
    return 0;
  if (k == -1)
    return 1;
  int n = p.size();
  int len = k + 1;
  if (len > n)
    return 0;
  // ends[i][l]: increasing subsequences of length l+1 ending at i
  std::vector<std::vector<Int>> ends(n, std::vector<Int>(len, 0));
  Int total = 0;
  for (int i = 0; i < n; ++i) {
    ends[i][0] = 1;
    for (int j = 0; j < i; ++j) {
      if (p[j] > p[i])
        continue;
      for (int l = 1; l < len; ++l)
        ends[i][l] = checked_add(ends[i][l], ends[j][l - 1]);
    }
    total = checked_add(total, ends[i][len - 1]);
  }
  return total;
}

Int inc(const Permutation& p)
{
  Int r = iota(1, p);
  Int pow2 = 1;
  for (int k = 2; k < p.size(); ++k) {
    Int term = checked_mul(pow2, iota(k, p));
    r = (k % 2 == 0) ? checked_sub(r, term) : checked_add(r, term);
    pow2 = checked_mul(pow2, 2);
  }
  return r;
}

Int den(const Permutation& p)
{
  std::vector<int> exc, nexc;
  Int positions = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.at(i) > i) {
      exc.push_back(p.at(i));
      positions += i;
    } else {
      nexc.push_back(p.at(i));
    }
  }
  return word_inversions(exc) + word_inversions(nexc) + positions;
}

Int evaluate(const StatSpec& spec, const Permutation& p)
{
  switch (spec.builtin) {
  case Builtin::den: return den(p);
  case Builtin::head: return head(p);
  case Builtin::last: return last(p);
  case Builtin::imaj: return maj(inverse(p));
  case Builtin::inc: return inc(p);
  case Builtin::iota: return iota(spec.iota_k, p);
  case Builtin::none: break;
  }
  Int s = 0;
  for (const auto& [pat, c] : spec.terms)
    s = checked_add(s, checked_mul(c, count_occurrences(pat, p)));
  return s;
}

StatBatch::StatBatch(std::vector<StatSpec> specs)
: specs_(std::move(specs)), weights_(specs_.size())
{
  std::map<std::string, size_t> index;
  for (size_t s = 0; s < specs_.size(); ++s) {
    for (const auto& [pat, c] : specs_[s].terms) {
      auto [it, fresh] = index.try_emplace(pat.to_string(), patterns_.size());
      if (fresh)
        patterns_.push_back(pat);
      weights_[s].emplace_back(it->second, c);
    }
  }
}

void StatBatch::evaluate(const Permutation& p, std::vector<Int>& out) const
{
  std::vector<Int> counts(patterns_.size());
  for (size_t i = 0; i < patterns_.size(); ++i)
    counts[i] = count_occurrences(patterns_[i], p);
  out.assign(specs_.size(), 0);
  for (size_t s = 0; s < specs_.size(); ++s) {
    if (!specs_[s].linear()) {
      out[s] = mahonia::evaluate(specs_[s], p);
      continue;
    }
    Int v = 0;
    for (const auto& [idx, c] : weights_[s])
      v = checked_add(v, checked_mul(c, counts[idx]));
    out[s] = v;
  }
}

Monomial mark_monomial(const Permutation& p, const std::vector<std::string>& marks)
{
  Monomial m;
  auto add = [&](const std::string& var, int e) {
    if (e != 0)
      m = monomial_product(m, Monomial{{var, e}});
  };
  DescentProfile dp;
  ExtremaProfile ep;
  bool have_dp = false, have_ep = false;
  auto descents = [&]() -> const DescentProfile& {
    if (!have_dp) {
      dp = descent_profile(p);
      have_dp = true;
    }
    return dp;
  };
  auto extrema = [&]() -> const ExtremaProfile& {
    if (!have_ep) {
      ep = extrema_profile(p);
      have_ep = true;
    }
    return ep;
  };
  auto add_set = [&](const std::string& prefix, const std::set<int>& s) {
    for (int x : s)
      add(prefix + "_" + std::to_string(x), 1);
  };
  for (const auto& mark : marks) {
    if (mark == "des")
      add("t", descents().des);
    else if (mark == "head")
      add("u", head(p));
    else if (mark == "last")
      add("v", last(p));
    else if (mark == "DB")
      add_set("DB", descents().DB);
    else if (mark == "DT")
      add_set("DT", descents().DT);
    else if (mark == "AB")
      add_set("AB", descents().AB);
    else if (mark == "AT")
      add_set("AT", descents().AT);
    else if (mark == "LRMin")
      add_set("LRMin", extrema().LRMin);
    else
      throw std::invalid_argument("unknown mark \"" + mark + "\"");
  }
  return m;
}

} // namespace mahonia
