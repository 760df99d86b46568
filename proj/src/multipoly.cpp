#include "mahonia/multipoly.hpp"

#include <stdexcept>

namespace mahonia {

Monomial monomial_product(const Monomial& a, const Monomial& b)
{
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e)
        r.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial monomial_power(const Monomial& a, int e)
{
  if (e == 0)
    return {};
  Monomial r = a;
  for (auto& [v, x] : r)
    x *= e;
  return r;
}

int exponent_of(const Monomial& m, const std::string& var)
{
  for (const auto& [v, e] : m)
    if (v == var)
      return e;
  return 0;
}

MultiPoly MultiPoly::constant(Int c)
{
  MultiPoly p;
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::term(Monomial m, Int c)
{
  MultiPoly p;
  p.add_term(std::move(m), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& var, int e)
{
  return term(e ? Monomial{{var, e}} : Monomial{});
}

Int MultiPoly::coeff(const Monomial& m) const
{
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(Monomial m, Int c)
{
  if (c == 0)
    return;
  auto [it, fresh] = terms_.try_emplace(std::move(m), 0);
  it->second = checked_add(it->second, c);
  if (it->second == 0)
    terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
  MultiPoly r;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_)
      r.add_term(monomial_product(a, b), checked_mul(x, y));
  return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const Monomial& m) const
{
  MultiPoly r;
  for (const auto& [mono, c] : terms_) {
    Monomial rest;
    int e = 0;
    for (const auto& ve : mono) {
      if (ve.first == var)
        e = ve.second;
      else
        rest.push_back(ve);
    }
    r.add_term(monomial_product(rest, monomial_power(m, e)), c);
  }
  return r;
}

MultiPoly MultiPoly::twist(const std::string& var, const std::string& q, int shift) const
{
  if (shift == 0)
    return *this;
  MultiPoly r;
  for (const auto& [mono, c] : terms_) {
    int e = exponent_of(mono, var);
    r.add_term(monomial_product(mono, Monomial{{q, shift * e}}), c);
  }
  return r;
}

QPoly MultiPoly::to_qpoly(const std::string& var) const
{
  QPoly p;
  for (const auto& [mono, c] : terms_) {
    int e = 0;
    for (const auto& [v, x] : mono) {
      if (v != var)
        throw std::invalid_argument("to_qpoly: variable '" + v + "' remains");
      e = x;
    }
    p.add_term(e, c);
  }
  return p;
}

MultiPoly MultiPoly::from_qpoly(const QPoly& p, const std::string& var)
{
  MultiPoly r;
  for (int e = p.low(); !p.is_zero() && e <= p.degree(); ++e)
    r.add_term(e ? Monomial{{var, e}} : Monomial{}, p.coeff(e));
  return r;
}

std::string MultiPoly::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string s;
  for (const auto& [mono, c] : terms_) {
    Int mag = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    std::string body;
    for (const auto& [v, e] : mono) {
      if (!body.empty())
        body += '*';
      body += v;
      if (e != 1)
        body += '^' + std::to_string(e);
    }
    if (body.empty())
      s += std::to_string(mag);
    else if (mag == 1)
      s += body;
    else
      s += std::to_string(mag) + '*' + body;
  }
  return s;
}

void to_json(nlohmann::json& j, const MultiPoly& p)
{
  j = nlohmann::json::array();
  for (const auto& [mono, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : mono)
      exps[v] = e;
    j.push_back({{"exponents", exps}, {"coeff", c}});
  }
}

} // namespace mahonia
