#include "mahonia/qseries.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mahonia {

QPoly q_int(int n)
{
  if (n < 0)
    throw std::invalid_argument("q_int: negative argument");
  return QPoly(std::vector<Int>(n, 1));
}

QPoly q_factorial(int n)
{
  QPoly r = QPoly::constant(1);
  for (int i = 2; i <= n; ++i)
    r = r * q_int(i);
  return r;
}

QPoly q_binomial(int n, int k)
{
  if (k < 0 || k > n)
    throw std::invalid_argument("q_binomial: need 0 <= k <= n");
  return q_factorial(n).divide_exact(q_factorial(k) * q_factorial(n - k));
}

QPoly macmahon_q_catalan(int n) { return q_binomial(2 * n, n).divide_exact(q_int(n + 1)); }

QPoly carlitz_riordan(int n, CarlitzVariant v)
{
  std::vector<QPoly> c{QPoly::constant(1)};
  for (int m = 1; m <= n; ++m) {
    QPoly s;
    for (int k = 0; k < m; ++k) {
      int e = v == CarlitzVariant::C ? (k + 1) * (m - k - 1) : k;
      s += (c[k] * c[m - k - 1]).shifted(e);
    }
    c.push_back(s);
  }
  return c[n];
}

CFSpec cfrak1()
{
  return {"cfrak1", [](int k) { return LevelWeight{1, (k + 1) / 2, 1}; }};
}

CFSpec cfrak2()
{
  return {"cfrak2", [](int k) { return LevelWeight{1, k, 1}; }};
}

namespace {

using Series = std::vector<QPoly>;

/// 1 / (1 - x) for x with zero constant term.
Series geometric(const Series& x, int N)
{
  Series g(N + 1);
  g[0] = QPoly::constant(1);
  for (int m = 1; m <= N; ++m)
    for (int i = 1; i <= m; ++i)
      if (!x[i].is_zero())
        g[m] += x[i] * g[m - i];
  return g;
}

} // namespace

std::vector<QPoly> cf_truncate(const CFSpec& spec, int N)
{
  if (N < 0)
    throw std::invalid_argument("cf_truncate: negative order");
  Series f(N + 1);
  f[0] = QPoly::constant(1);
  for (int level = N; level >= 0; --level) {
    LevelWeight w = spec.weight(level);
    if (w.zexp < 1)
      throw std::invalid_argument("continued fraction weight without z");
    Series x(N + 1);
    for (int i = 0; i + w.zexp <= N; ++i)
      x[i + w.zexp] = f[i].shifted(w.qexp).scaled(w.coeff);
    f = geometric(x, N);
  }
  return f;
}

std::string series_to_string(const std::vector<QPoly>& series)
{
  std::string s;
  for (size_t k = 0; k < series.size(); ++k) {
    const QPoly& c = series[k];
    if (c.is_zero())
      continue;
    if (!s.empty())
      s += " + ";
    std::string coeff = c.to_string();
    bool single = c.coeffs().size() == 1 && c.coeffs()[0] > 0;
    std::string zpart = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    if (zpart.empty())
      s += single ? coeff : "(" + coeff + ")";
    else if (c == QPoly::constant(1))
      s += zpart;
    else
      s += (single ? coeff : "(" + coeff + ")") + "*" + zpart;
  }
  return s.empty() ? "0" : s;
}

const std::array<std::string, kAlphaSize>& alpha_patterns()
{
  static const std::array<std::string, kAlphaSize> p = {
    "<12>3", "1<23>", "<13>2", "1<32>", "<21>3", "2<13>",
    "<23>1", "2<31>", "<32>1", "3<21>", "<21>"};
  return p;
}

StatSpec stat_from_alpha(const AlphaVector& alpha)
{
  std::vector<std::pair<VincularPattern, Int>> terms;
  for (int i = 0; i < kAlphaSize; ++i)
    if (alpha[i] != 0)
      terms.emplace_back(parse_pattern(alpha_patterns()[i]), alpha[i]);
  return linear_stat(std::move(terms));
}

AlphaVector alpha_from_stat(const StatSpec& spec)
{
  if (!spec.linear())
    throw std::invalid_argument("alpha_from_stat: " + spec.display() + " is not linear");
  AlphaVector a{};
  for (const auto& [pat, c] : spec.terms) {
    std::string key = pat.to_string();
    auto it = std::find(alpha_patterns().begin(), alpha_patterns().end(), key);
    if (it != alpha_patterns().end()) {
      a[it - alpha_patterns().begin()] += c;
      continue;
    }
    if (key == "<31>2" || key == "3<12>")
      continue;
    throw std::invalid_argument("alpha_from_stat: pattern " + key + " has no slot");
  }
  return a;
}

namespace {

enum Slot { a12_3, a1_23, a13_2, a1_32, a21_3, a2_13, a23_1, a2_31, a32_1, a3_21, a21 };

using Key = std::array<int, 4>; // exponents of q, t, u, v
using Table = std::map<Key, Int>;

} // namespace

GenfuncCoeffs genfunc_coeffs(const AlphaVector& a, int n, int k)
{
  Int r = n - k - 1;
  Int d1 = k > 0, d2 = r > 0;
  GenfuncCoeffs g;
  g.A1 = a[a32_1] - a[a23_1] + r * (a[a21_3] - a[a12_3]);
  g.A2 = (k + 1) * (a[a1_32] - a[a1_23]);
  g.B1 = a[a2_31] - a[a3_21];
  g.B2 = a[a13_2] - a[a12_3];
  g.C = a[a12_3] * r * std::max<Int>(k, 1) * d2 + d1 * r * a[a21_3] +
        d2 * (k + 1) * (r - 1) * a[a1_23] - d2 * a[a13_2] + d2 * k * a[a2_13] +
        d1 * (k - 1) * a[a23_1] - d1 * a[a2_31] + k * a[a3_21] + d1 * a[a21];
  return g;
}

MultiPoly genfunc_312(const AlphaVector& alpha, int n)
{
  if (n < 0)
    throw std::invalid_argument("genfunc_312: negative n");
  std::vector<Table> f(n + 1);
  f[0][{0, 0, 0, 0}] = 1;
  for (int m = 1; m <= n; ++m) {
    Table total;
    for (int k = 0; k < m; ++k) {
      int r = m - k - 1;
      auto g = genfunc_coeffs(alpha, m, k);
      // left block: t -> q^A1 t, v -> q^B1; right block: t -> q^A2 t, u -> q^B2
      for (const auto& [lk, lc] : f[k]) {
        Int le = lk[0] + g.A1 * lk[1] + g.B1 * lk[3];
        for (const auto& [rk, rc] : f[r]) {
          Int re = rk[0] + g.A2 * rk[1] + g.B2 * rk[2];
          Key key{static_cast<int>(le + re + g.C), lk[1] + rk[1] + (k > 0), lk[2] + 1,
                  r > 0 ? rk[3] + k + 1 : 1};
          total[key] = checked_add(total[key], checked_mul(lc, rc));
        }
      }
    }
    f[m] = std::move(total);
  }
  static const char* names[] = {"q", "t", "u", "v"};
  MultiPoly out;
  for (const auto& [key, c] : f[n]) {
    Monomial mono;
    for (int i = 0; i < 4; ++i)
      if (key[i] != 0)
        mono.emplace_back(names[i], key[i]);
    std::sort(mono.begin(), mono.end());
    out.add_term(std::move(mono), c);
  }
  return out;
}

IntMatrix pascal(int m)
{
  IntMatrix b(m, std::vector<Int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      b[i][j] = binomial(i, j);
  return b;
}

IntMatrix pascal_inverse(int m)
{
  IntMatrix b = pascal(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      if ((i - j) % 2)
        b[i][j] = -b[i][j];
  return b;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
  size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(rows, std::vector<Int>(cols, 0));
  for (size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner)
      throw std::invalid_argument("matrix shapes do not match");
    for (size_t k = 0; k < inner; ++k)
      for (size_t j = 0; j < cols; ++j)
        c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
  }
  return c;
}

IntMatrix binomial_transform(const IntMatrix& a, TransformDir dir, int m)
{
  IntMatrix block(m, std::vector<Int>(m, 0));
  for (int i = 0; i < m && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; j < m && j < static_cast<int>(a[i].size()); ++j)
      block[i][j] = a[i][j];
  return multiply(dir == TransformDir::B ? pascal(m) : pascal_inverse(m), block);
}

IntMatrix cf_matrix(const CFSpec& spec, int m)
{
  IntMatrix a(m, std::vector<Int>(std::max(m, 2), 0));
  for (int k = 0; k < m; ++k) {
    LevelWeight w = spec.weight(k);
    if (w.coeff != 1)
      throw std::invalid_argument("cf_matrix: weights must be monic");
    a[k][0] = w.qexp;
    a[k][1] = w.zexp;
  }
  return a;
}

} // namespace mahonia
