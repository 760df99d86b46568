#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mahonia/bijections.hpp"
#include "mahonia/cache.hpp"
#include "mahonia/dyck.hpp"
#include "mahonia/polyomino.hpp"
#include "mahonia/qseries.hpp"
#include "mahonia/statistic.hpp"
#include "mahonia/verifier.hpp"

using namespace mahonia;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

std::vector<std::string> split(const std::string& text, char sep = ',')
{
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty())
      out.push_back(item);
  return out;
}

std::string render(const QPoly& p, const std::string& format)
{
  if (format == "json")
    return json(p).dump();
  if (format == "latex")
    return p.to_latex();
  if (format == "csv") {
    std::string s = "exponent,count\n";
    for (int e = p.low(); !p.is_zero() && e <= p.degree(); ++e)
      s += std::to_string(e) + "," + std::to_string(p.coeff(e)) + "\n";
    return s;
  }
  return p.to_string();
}

std::string render(const MultiPoly& p, const std::string& format)
{
  if (format == "json")
    return json(p).dump();
  if (format == "csv") {
    std::string s = "monomial,count\n";
    for (const auto& [mono, c] : p.terms()) {
      std::string m;
      for (const auto& [var, e] : mono)
        m += (m.empty() ? "" : "*") + var + (e == 1 ? "" : "^" + std::to_string(e));
      s += (m.empty() ? "1" : m) + "," + std::to_string(c) + "\n";
    }
    return s;
  }
  return p.to_string();
}

int run_dist(const std::string& stat, const std::string& avoid, int n,
             const std::string& marks, const std::string& format)
{
  StatSpec spec = parse_stat(stat);
  auto patterns = parse_pattern_list(avoid);
  if (!marks.empty()) {
    std::cout << render(distribution_refined(spec, n, patterns, split(marks)), format) << "\n";
    return kPass;
  }
  std::cout << render(cached_distribution(spec, n, patterns), format) << "\n";
  return kPass;
}

int run_equidist(const std::string& s1, const std::string& a1, const std::string& s2,
                 const std::string& a2, int nmax)
{
  auto r = check_equidistribution(parse_stat(s1), parse_pattern_list(a1), parse_stat(s2),
                                  parse_pattern_list(a2), nmax);
  for (const auto& v : r.verdicts) {
    std::cout << "n=" << v.n << " " << (v.equal ? "equal" : "DIFFER") << "\n";
    if (!v.equal)
      std::cout << "  " << r.stat1 << " on S(" << r.set1 << "): " << v.left.to_string() << "\n"
                << "  " << r.stat2 << " on S(" << r.set2 << "): " << v.right.to_string() << "\n";
  }
  return r.holds() ? kPass : kCounterexample;
}

int run_scan(const std::string& stats_arg, const std::string& patterns_arg, int nmax,
             const std::string& manifest_path)
{
  std::vector<std::string> stats =
    stats_arg == "all" ? table_stat_names() : split(stats_arg);
  std::vector<std::string> patterns =
    patterns_arg == "all3" ? patterns_of_length3() : split(patterns_arg);
  auto manifest = load_manifest(manifest_path);
  auto report = scan_equidistributions(stats, patterns, nmax, manifest);
  const auto& table = table_stat_names();
  auto in_table = [&](const std::string& s) {
    return std::find(table.begin(), table.end(), s) != table.end();
  };
  int extras = 0;
  for (const auto& c : report.found) {
    std::cout << c.row << " " << c.col << " " << c.left << "," << c.right << " "
              << to_string(c.tag) << "\n";
    if (c.tag == CellTag::absent && in_table(c.row) && in_table(c.col))
      ++extras;
  }
  for (const auto& c : report.missing)
    std::cout << c.row << " " << c.col << " " << c.left << "," << c.right << " MISSING\n";
  std::cout << "found " << report.found.size() << " (black " << report.count(CellTag::black)
            << ", red " << report.count(CellTag::red) << ", absent "
            << report.count(CellTag::absent) << "), missing " << report.missing.size()
            << ", nmax " << nmax << "\n";
  return report.missing.empty() && extras == 0 ? kPass : kCounterexample;
}

int run_wilf(const std::string& stat, int nmax, int subsets)
{
  auto w = st_wilf_classes(parse_stat(stat), pattern_subsets(subsets), nmax);
  for (const auto& cls : w.classes) {
    for (size_t i = 0; i < cls.size(); ++i)
      std::cout << (i ? " " : "") << cls[i];
    std::cout << "\n";
  }
  return kPass;
}

bool is_permutation_text(const std::string& s)
{
  return !s.empty() && s.find_first_not_of("0123456789, ") == std::string::npos;
}

int run_map(const std::string& name, const std::string& input)
{
  auto perm = [&] { return Permutation::parse(input); };
  auto path = [&] { return DyckPath::parse(input); };
  if (name == "phi321") std::cout << phi_321(perm()).to_string();
  else if (name == "phi123") std::cout << phi_123(perm()).to_string();
  else if (name == "phi132") std::cout << phi_132(perm()).to_string();
  else if (name == "phi231") std::cout << phi_231(perm()).to_string();
  else if (name == "simion") std::cout << simion_schmidt(perm()).to_string();
  else if (name == "invmad") std::cout << phi_inv_to_mad(perm()).to_string();
  else if (name == "gamma") std::cout << gamma(perm()).to_string();
  else if (name == "omega") std::cout << omega_stump(perm()).to_string();
  else if (name == "delta231" || name == "delta312" || name == "delta132") {
    DeltaVariant v = name == "delta231"   ? DeltaVariant::A231
                     : name == "delta312" ? DeltaVariant::A312
                                          : DeltaVariant::A132;
    // a Dyck word maps back to the permutation
    if (is_permutation_text(input))
      std::cout << delta(perm(), v).to_string();
    else
      std::cout << delta_inv(path(), v).to_string();
  }
  else if (name == "psi") std::cout << psi(path()).to_string();
  else if (name == "phipath") std::cout << phi_path(path()).to_string();
  else if (name == "theta") std::cout << theta(path()).to_string();
  else if (name == "lambda") std::cout << lambda(path()).to_string();
  else if (name == "upsilon") {
    // "P/Q" gives the permutation; a permutation gives its polyomino
    auto parts = split(input, '/');
    if (parts.size() == 2) {
      std::cout << upsilon(make_polyomino(parts[0], parts[1])).to_string();
    } else {
      auto h = upsilon_inv(perm());
      std::cout << h.upper << "/" << h.lower;
    }
  }
  else
    throw CLI::ValidationError("--name", "unknown map " + name);
  std::cout << "\n";
  return kPass;
}

int run_cf(const std::string& which, int order)
{
  CFSpec spec = which == "cfrak1" ? cfrak1() : cfrak2();
  std::cout << series_to_string(cf_truncate(spec, order)) << "\n";
  return kPass;
}

int run_genfunc(const std::string& alpha_text, int n)
{
  auto items = split(alpha_text);
  if (static_cast<int>(items.size()) != kAlphaSize) {
    std::string order;
    for (const auto& p : alpha_patterns())
      order += (order.empty() ? "" : ",") + p;
    throw CLI::ValidationError("--alpha", "expected " + std::to_string(kAlphaSize) +
                                            " coefficients in the order " + order);
  }
  AlphaVector alpha{};
  bool negative = false;
  for (int i = 0; i < kAlphaSize; ++i) {
    alpha[i] = std::stoll(items[i]);
    negative |= alpha[i] < 0;
  }
  if (negative)
    std::cerr << "note: negative coefficients; the statistic may take negative values\n";
  std::cout << genfunc_312(alpha, n).to_string() << "\n";
  return kPass;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Pattern-avoiding permutation statistics and equidistribution checks"};
  app.require_subcommand(1);

  std::string stat, avoid, marks, format = "text";
  int n = 0;
  auto* dist = app.add_subcommand("dist", "distribution of a statistic over an avoidance class");
  dist->add_option("--stat", stat, "catalog name or lin:...")->required();
  dist->add_option("--avoid", avoid, "comma-separated patterns (empty for all of S_n)");
  dist->add_option("--n", n)->required()->check(CLI::Range(0, 12));
  dist->add_option("--marks", marks, "des,head,last,DB,DT,AB,AT,LRMin");
  dist->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "latex", "text"}));

  std::string stat1, avoid1, stat2, avoid2;
  int max_n = 0;
  auto* eq = app.add_subcommand("equidist", "compare two distributions for n = 1..max-n");
  eq->add_option("--stat1", stat1)->required();
  eq->add_option("--avoid1", avoid1);
  eq->add_option("--stat2", stat2)->required();
  eq->add_option("--avoid2", avoid2);
  eq->add_option("--max-n", max_n)->required()->check(CLI::Range(1, 12));

  std::string stats_arg, patterns_arg, manifest = default_manifest_path();
  auto* scan = app.add_subcommand("scan", "find all equidistributed cells");
  scan->add_option("--stats", stats_arg)->required();
  scan->add_option("--patterns", patterns_arg)->required();
  scan->add_option("--max-n", max_n)->required()->check(CLI::Range(1, 12));
  scan->add_option("--manifest", manifest)->check(CLI::ExistingFile);

  int subsets = 1;
  auto* wilf = app.add_subcommand("wilf", "st-Wilf classes of length-3 pattern sets");
  wilf->add_option("--stat", stat)->required();
  wilf->add_option("--max-n", max_n)->required()->check(CLI::Range(1, 12));
  wilf->add_option("--subsets", subsets)->check(CLI::IsMember({1, 2, 3}));

  std::string name, input;
  auto* map = app.add_subcommand("map", "apply a bijection");
  map->add_option("--name", name)->required();
  map->add_option("--input", input)->required();

  std::string which;
  int order = 0;
  auto* cf = app.add_subcommand("cf", "truncated continued fraction");
  cf->add_option("--which", which)->required()->check(CLI::IsMember({"cfrak1", "cfrak2"}));
  cf->add_option("--order", order)->required()->check(CLI::Range(0, 40));

  std::string alpha;
  auto* gf = app.add_subcommand("genfunc", "refined generating function over S_n(312)");
  gf->add_option("--alpha", alpha, "11 comma-separated coefficients")->required();
  gf->add_option("--n", n)->required()->check(CLI::Range(0, 14));

  try {
    app.parse(argc, argv);
    if (*dist) return run_dist(stat, avoid, n, marks, format);
    if (*eq) return run_equidist(stat1, avoid1, stat2, avoid2, max_n);
    if (*scan) return run_scan(stats_arg, patterns_arg, max_n, manifest);
    if (*wilf) return run_wilf(stat, max_n, subsets);
    if (*map) return run_map(name, input);
    if (*cf) return run_cf(which, order);
    if (*gf) return run_genfunc(alpha, n);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
