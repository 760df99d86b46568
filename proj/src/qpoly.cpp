#include "mahonia/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace mahonia {

QPoly::QPoly(std::vector<Int> coeffs, int low)
: low_(low), c_(std::move(coeffs))
{
  normalize();
}

QPoly QPoly::monomial(int exponent, Int c) { return QPoly({c}, exponent); }

void QPoly::normalize()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0)
    ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + lead);
    low_ += static_cast<int>(lead);
  }
  if (c_.empty())
    low_ = 0;
}

Int QPoly::coeff(int e) const
{
  if (c_.empty() || e < low_ || e > degree())
    return 0;
  return c_[e - low_];
}

std::vector<Int> QPoly::ascending() const
{
  if (c_.empty())
    return {};
  if (low_ < 0)
    throw std::domain_error("polynomial has negative powers");
  std::vector<Int> out(low_, 0);
  out.insert(out.end(), c_.begin(), c_.end());
  return out;
}

Int QPoly::sum() const
{
  Int s = 0;
  for (Int c : c_)
    s = checked_add(s, c);
  return s;
}

void QPoly::add_term(int e, Int c)
{
  if (c == 0)
    return;
  if (c_.empty()) {
    low_ = e;
    c_ = {c};
    return;
  }
  if (e < low_) {
    c_.insert(c_.begin(), low_ - e, 0);
    low_ = e;
  }
  if (e > degree())
    c_.resize(e - low_ + 1, 0);
  c_[e - low_] = checked_add(c_[e - low_], c);
  normalize();
}

QPoly& QPoly::operator+=(const QPoly& o)
{
  if (o.c_.empty())
    return *this;
  if (c_.empty())
    return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(degree(), o.degree());
  std::vector<Int> r(hi - lo + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    r[low_ - lo + i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i)
    r[o.low_ - lo + i] = checked_add(r[o.low_ - lo + i], o.c_[i]);
  low_ = lo;
  c_ = std::move(r);
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += o.scaled(-1); }

QPoly QPoly::operator*(const QPoly& o) const
{
  if (c_.empty() || o.c_.empty())
    return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
  }
  return QPoly(std::move(r), low_ + o.low_);
}

QPoly QPoly::scaled(Int c) const
{
  std::vector<Int> r = c_;
  for (Int& x : r)
    x = checked_mul(x, c);
  return QPoly(std::move(r), low_);
}

QPoly QPoly::shifted(int by) const
{
  QPoly r = *this;
  if (!r.c_.empty())
    r.low_ += by;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const
{
  if (d.is_zero())
    throw std::domain_error("division by zero polynomial");
  QPoly rem = *this;
  QPoly quo;
  Int lead = d.c_.back();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Int top = rem.c_.back();
    if (top % lead != 0)
      throw std::domain_error("non-integral polynomial division");
    Int f = top / lead;
    quo.add_term(shift, f);
    rem -= d.shifted(shift).scaled(f);
  }
  return {quo, rem};
}

QPoly QPoly::divide_exact(const QPoly& d) const
{
  auto [q, r] = divmod(d);
  if (!r.is_zero())
    throw std::domain_error("polynomial division left a nonzero remainder");
  return q;
}

namespace {

std::string power(const std::string& var, int e, bool latex)
{
  if (e == 0)
    return "";
  if (e == 1)
    return var;
  if (latex)
    return var + "^{" + std::to_string(e) + "}";
  return var + "^" + std::to_string(e);
}

std::string render(const QPoly& p, const std::string& var, bool latex)
{
  if (p.is_zero())
    return "0";
  std::string s;
  for (int e = p.low(); e <= p.degree(); ++e) {
    Int c = p.coeff(e);
    if (c == 0)
      continue;
    Int mag = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    std::string pw = power(var, e, latex);
    if (pw.empty())
      s += std::to_string(mag);
    else if (mag == 1)
      s += pw;
    else
      s += std::to_string(mag) + (latex ? "" : "*") + pw;
  }
  return s;
}

} // namespace

std::string QPoly::to_string(const std::string& var) const { return render(*this, var, false); }
std::string QPoly::to_latex(const std::string& var) const { return render(*this, var, true); }

void to_json(nlohmann::json& j, const QPoly& p)
{
  if (p.low() >= 0)
    j = p.ascending();
  else
    j = nlohmann::json{{"low", p.low()}, {"coeffs", p.coeffs()}};
}

void from_json(const nlohmann::json& j, QPoly& p)
{
  if (j.is_array())
    p = QPoly(j.get<std::vector<Int>>());
  else
    p = QPoly(j.at("coeffs").get<std::vector<Int>>(), j.at("low").get<int>());
}

} // namespace mahonia
