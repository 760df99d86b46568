#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "mahonia/integer.hpp"
#include "mahonia/multipoly.hpp"
#include "mahonia/qpoly.hpp"
#include "mahonia/statistic.hpp"

namespace mahonia {

QPoly q_int(int n);
QPoly q_factorial(int n);
/// Exact division of q-factorials; throws std::domain_error on remainder.
QPoly q_binomial(int n, int k);
QPoly macmahon_q_catalan(int n);

enum class CarlitzVariant { C, Ctilde };

/// C: sum_k q^{(k+1)(n-k-1)} C_k C_{n-k-1}; Ctilde: sum_k q^k Ct_k Ct_{n-k-1}.
QPoly carlitz_riordan(int n, CarlitzVariant v);

/// Level weights of a continued fraction 1/(1 - w_0/(1 - w_1/(...))), each
/// w_k = coeff * q^qexp * z^zexp with zexp >= 1.
struct LevelWeight
{
  Int coeff = 1;
  int qexp = 0;
  int zexp = 1;
};

struct CFSpec
{
  std::string name;
  std::function<LevelWeight(int)> weight;
};

CFSpec cfrak1(); // q^{ceil(k/2)} z
CFSpec cfrak2(); // q^k z

/// Coefficients of z^0..z^N, exact modulo z^{N+1}.
std::vector<QPoly> cf_truncate(const CFSpec& spec, int N);

/// Renders a truncated series as "1 + z + (1 + q)*z^2 + ...".
std::string series_to_string(const std::vector<QPoly>& series);

// Coefficient order for the recursion over S(312). <31>2 and 3<12> never
// occur in a 312-avoider, so they have no slot.
constexpr int kAlphaSize = 11;
const std::array<std::string, kAlphaSize>& alpha_patterns();

using AlphaVector = std::array<Int, kAlphaSize>;

/// The linear statistic sum alpha_i * pattern_i.
StatSpec stat_from_alpha(const AlphaVector& alpha);
/// Coefficients of a linear statistic restricted to S(312); patterns that
/// cannot occur there are dropped, any other unknown pattern throws.
AlphaVector alpha_from_stat(const StatSpec& spec);

struct GenfuncCoeffs
{
  Int A1 = 0, A2 = 0, B1 = 0, B2 = 0, C = 0;
};

/// Exponent shifts for the summand with |s1| = k in F_n.
GenfuncCoeffs genfunc_coeffs(const AlphaVector& alpha, int n, int k);

/// sum over S_n(312) of q^{stat} t^{des} u^{head} v^{last}.
MultiPoly genfunc_312(const AlphaVector& alpha, int n);

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix pascal(int m);
IntMatrix pascal_inverse(int m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

enum class TransformDir { B, Binv };
/// B*A or B^{-1}*A on the leading m x m block; exact because both factors
/// are lower triangular in the row index.
IntMatrix binomial_transform(const IntMatrix& a, TransformDir dir, int m);

/// Row k holds the exponents of level k: column 0 for q, column 1 for z.
IntMatrix cf_matrix(const CFSpec& spec, int m);

} // namespace mahonia
