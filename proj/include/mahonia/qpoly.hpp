#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mahonia/integer.hpp"

namespace mahonia {

/// Exact Laurent polynomial in q stored densely from its lowest exponent.
/// Distributions of nonnegative statistics have low() == 0 and serialize as
/// a plain ascending coefficient list.
class QPoly
{
public:
  QPoly() = default;
  QPoly(std::vector<Int> coeffs, int low = 0);
  static QPoly constant(Int c) { return QPoly({c}); }
  static QPoly monomial(int exponent, Int c = 1);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  /// Highest exponent; meaningless for the zero polynomial.
  int degree() const { return low_ + static_cast<int>(c_.size()) - 1; }
  Int coeff(int exponent) const;
  /// Coefficients from low() upward.
  const std::vector<Int>& coeffs() const { return c_; }
  /// Dense list from q^0; requires low() >= 0.
  std::vector<Int> ascending() const;
  Int sum() const;

  void add_term(int exponent, Int c);
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator*(const QPoly& o) const;
  QPoly operator+(const QPoly& o) const { QPoly r = *this; return r += o; }
  QPoly operator-(const QPoly& o) const { QPoly r = *this; return r -= o; }
  QPoly scaled(Int c) const;
  QPoly shifted(int by) const;

  /// Quotient and remainder; the divisor's leading coefficient must divide
  /// every intermediate leading term, otherwise std::domain_error.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  /// Exact division; std::domain_error on nonzero remainder.
  QPoly divide_exact(const QPoly& d) const;

  std::string to_string(const std::string& var = "q") const;
  std::string to_latex(const std::string& var = "q") const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

private:
  void normalize();

  int low_ = 0;
  std::vector<Int> c_;
};

void to_json(nlohmann::json& j, const QPoly& p);
void from_json(const nlohmann::json& j, QPoly& p);

} // namespace mahonia
