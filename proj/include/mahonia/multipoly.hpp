#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mahonia/integer.hpp"
#include "mahonia/qpoly.hpp"

namespace mahonia {

/// Sorted (variable, exponent) pairs with nonzero exponents.
using Monomial = std::vector<std::pair<std::string, int>>;

Monomial monomial_product(const Monomial& a, const Monomial& b);
Monomial monomial_power(const Monomial& a, int e);
int exponent_of(const Monomial& m, const std::string& var);

/// Sparse multivariate Laurent polynomial with named variables.
class MultiPoly
{
public:
  MultiPoly() = default;
  static MultiPoly constant(Int c);
  static MultiPoly term(Monomial m, Int c = 1);
  static MultiPoly variable(const std::string& var, int e = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  Int coeff(const Monomial& m) const;

  void add_term(Monomial m, Int c);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const { MultiPoly r = *this; return r += o; }
  MultiPoly operator*(const MultiPoly& o) const;

  /// Replace var^e by m^e throughout; m empty sets var to 1.
  MultiPoly substitute(const std::string& var, const Monomial& m) const;
  /// Replace var^e by var^e * q^(shift*e), the t <- q^A t substitution.
  MultiPoly twist(const std::string& var, const std::string& q, int shift) const;
  /// Univariate view; throws if any variable other than var remains.
  QPoly to_qpoly(const std::string& var = "q") const;
  static MultiPoly from_qpoly(const QPoly& p, const std::string& var = "q");

  std::string to_string() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
  std::map<Monomial, Int> terms_;
};

void to_json(nlohmann::json& j, const MultiPoly& p);

} // namespace mahonia
