// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "mahonia/bijections.hpp"
#include "mahonia/dyck.hpp"
#include "mahonia/enumerate.hpp"
#include "mahonia/polyomino.hpp"
#include "mahonia/qseries.hpp"
#include "mahonia/statistic.hpp"
#include "mahonia/verifier.hpp"
#include "oracles.hpp"

using namespace mahonia;

namespace {

struct Outcome
{
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what)
  {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<Int> counts(const oracle::Counts& c) { return {c.begin(), c.end()}; }

std::string join(const std::set<std::string>& items)
{
  std::string out;
  for (const auto& s : items)
    out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::vector<VincularPattern> cls(const std::string& text) { return parse_pattern_list(text); }

std::vector<Permutation> avoiders(int n, const std::string& pat)
{
  return enumerate_avoiders(n, cls(pat));
}

std::string show(const Permutation& s) { return s.to_string(); }

DistributionCache& shared_cache()
{
  static DistributionCache cache;
  return cache;
}

std::vector<StatSpec> table_specs()
{
  std::vector<StatSpec> specs;
  for (const auto& name : table_stat_names())
    specs.push_back(named(name));
  return specs;
}

// 1. Every table statistic is Mahonian on S_n.
Outcome mahonity()
{
  Outcome o;
  auto specs = table_specs();
  for (int n = 1; n <= 8; ++n) {
    auto expected = counts(oracle::q_factorial(n));
    auto got = distributions(specs, n, {});
    for (size_t i = 0; i < specs.size(); ++i)
      o.require(got[i].ascending() == expected,
                specs[i].name + " on S_" + std::to_string(n) + " is " + got[i].to_string());
  }
  o.detail = o.pass ? "14 statistics x n = 1..8" : o.detail;
  return o;
}

void prefill(int nmax)
{
  auto specs = table_specs();
  for (const auto& pat : patterns_of_length3())
    for (int n = 1; n <= nmax; ++n)
      cached_distributions(specs, n, cls(pat), shared_cache());
}

// 2. Manifest cells verify: black for n <= 9, red for n <= 10.
Outcome manifest_cells()
{
  Outcome o;
  prefill(10);
  auto cells = load_manifest(default_manifest_path());
  int black = 0, red = 0, failed = 0;
  std::set<std::string> columns;
  for (const auto& c : cells) {
    int nmax = c.tag == CellTag::red ? 10 : 9;
    auto r = check_equidistribution(named(c.row), cls(c.left), named(c.col), cls(c.right), nmax,
                                    shared_cache());
    if (!r.holds()) {
      ++failed;
      columns.insert(c.row == "foze2" || c.row == "foze3" ? c.row : c.col);
    }
    o.require(r.holds(), c.row + "/" + c.col + " (" + c.left + "," + c.right + ") fails at n = " +
                           std::to_string(r.first_failure.value_or(0)));
    (c.tag == CellTag::red ? red : black) += 1;
  }
  if (o.pass)
    o.detail = std::to_string(black) + " black cells to n = 9, " + std::to_string(red) +
               " red cells to n = 10";
  else
    o.detail = std::to_string(failed) + " of " + std::to_string(cells.size()) +
               " cells fail, all touching " + join(columns) + "; first " + o.detail;
  return o;
}

// 3. The scanner finds exactly the manifest cells.
Outcome scanner_completeness()
{
  Outcome o;
  auto manifest = load_manifest(default_manifest_path());
  auto report = scan_equidistributions(table_stat_names(), patterns_of_length3(), 9, manifest,
                                       shared_cache());
  int absent = report.count(CellTag::absent);
  std::string first_extra;
  std::set<std::string> touched;
  auto touch = [&](const std::string& row, const std::string& col) {
    touched.insert(row == "foze2" || row == "foze3" ? row : col);
  };
  for (const auto& c : report.found)
    if (c.tag == CellTag::absent) {
      touch(c.row, c.col);
      if (first_extra.empty())
        first_extra = c.row + "/" + c.col + " (" + c.left + "," + c.right + ")";
    }
  for (const auto& c : report.missing)
    touch(c.row, c.col);
  o.require(absent == 0 && report.missing.empty() &&
              static_cast<int>(report.found.size()) == static_cast<int>(manifest.size()),
            std::to_string(absent) + " extra cells (first " + first_extra + ") and " +
              std::to_string(report.missing.size()) + " missing, all touching " + join(touched));
  if (o.pass)
    o.detail = std::to_string(report.found.size()) + " cells found, none extra, none missing";
  return o;
}

long st(const char* name, const Permutation& s) { return evaluate(named(name), s); }

// 4. Bijections transport statistics, exhaustively for n <= 8.
Outcome transport()
{
  Outcome o;
  const int N = 8;
  long checked = 0;
  for (int n = 0; n <= N; ++n) {
    for (const auto& s : avoiders(n, "321")) {
      auto t = phi_321(s);
      auto a = descent_profile(s), b = descent_profile(t);
      o.require(maj(t) == st("mak", s) && a.DB == b.DB && a.DT == b.DT, "phi_321 at " + show(s));
      auto g = gamma(s);
      auto gs = path_statistics(g);
      o.require(inv(s) == gs.spea && extrema_profile(s).lrmax == gs.npea, "gamma at " + show(s));
      auto m = phi_inv_to_mad(s);
      o.require(inv(s) == st("mad", m), "inv/mad at " + show(s));
      ++checked;
    }
    for (const auto& s : avoiders(n, "231")) {
      auto t = phi_231(s);
      o.require(st("mak", t) == st("foze", s) && des(t) == des(s), "phi_231 at " + show(s));
      o.require(maj(s) == path_statistics(omega_stump(s)).beta, "omega at " + show(s));
      ++checked;
    }
    for (const auto& s : avoiders(n, "132")) {
      auto t = phi_132(s);
      o.require(maj(t) == st("foze", s) &&
                  extrema_profile(t).LRMin == extrema_profile(s).LRMin,
                "phi_132 at " + show(s));
      ++checked;
    }
    for (const auto& p : all_dyck_paths(n)) {
      auto st0 = path_statistics(p);
      o.require(st0.spea == path_statistics(psi(p)).stun, "psi at " + p.word());
      auto ph = path_statistics(phi_path(p));
      o.require(st0.stun == ph.Umass + ph.dr, "phi_path at " + p.word());
      auto th = path_statistics(theta(p));
      o.require(st0.sht == th.Umass + th.dr, "theta at " + p.word());
      o.require(st0.spea == path_statistics(lambda(p)).sht, "lambda at " + p.word());
      ++checked;
    }
  }
  if (o.pass)
    o.detail = "ten transports, " + std::to_string(checked) + " objects, n <= 8";
  return o;
}

// 5. Involutions and round trips.
Outcome round_trips()
{
  Outcome o;
  for (int n = 0; n <= 8; ++n)
    for (const auto& s : avoiders(n, "321"))
      o.require(phi_321(phi_321(s)) == s, "phi_321 twice at " + show(s));
  for (int n = 0; n <= 7; ++n) {
    auto size = static_cast<size_t>(oracle::catalan(n));
    for (const auto& s : avoiders(n, "321"))
      o.require(gamma_inv(gamma(s)) == s, "gamma at " + show(s));
    for (const auto& s : avoiders(n, "123"))
      o.require(phi_123(phi_123(s)) == s, "phi_123 twice at " + show(s));
    struct Variant
    {
      DeltaVariant v;
      const char* pat;
    };
    for (Variant v : {Variant{DeltaVariant::A231, "231"}, Variant{DeltaVariant::A312, "312"},
                      Variant{DeltaVariant::A132, "132"}})
      for (const auto& s : avoiders(n, v.pat))
        o.require(delta_inv(delta(s, v.v), v.v) == s, "delta at " + show(s));
    std::set<Permutation> img132, img231;
    std::set<DyckPath> omega_img;
    for (const auto& s : avoiders(n, "132"))
      img132.insert(phi_132(s));
    for (const auto& s : avoiders(n, "231")) {
      img231.insert(phi_231(s));
      omega_img.insert(omega_stump(s));
    }
    o.require(img132.size() == size && img231.size() == size && omega_img.size() == size,
              "phi_132, phi_231 or omega not bijective at n = " + std::to_string(n));
    for (const auto& p : all_dyck_paths(n)) {
      o.require(psi_inv(psi(p)) == p && psi(psi_inv(p)) == p, "psi at " + p.word());
      o.require(phi_path_inv(phi_path(p)) == p && phi_path(phi_path_inv(p)) == p,
                "phi_path at " + p.word());
      o.require(theta_inv(theta(p)) == p && theta(theta_inv(p)) == p, "theta at " + p.word());
      o.require(lambda_inv(lambda(p)) == p && lambda(lambda_inv(p)) == p, "lambda at " + p.word());
      if (n >= 1) {
        auto [q, r] = delta_pair_inv(p);
        o.require(delta_pair(q, r) == p, "delta pairing at " + p.word());
      }
      o.require(gamma(gamma_inv(p)) == p, "gamma inverse at " + p.word());
    }
    if (n >= 1) {
      auto polys = enumerate_polyominoes(n);
      o.require(polys.size() == size, "|H_" + std::to_string(n) + "| = " + std::to_string(polys.size()));
      for (const auto& h : polys)
        o.require(upsilon_inv(upsilon(h)) == h, "upsilon at " + h.upper + "/" + h.lower);
      for (const auto& s : avoiders(n, "321"))
        o.require(upsilon(upsilon_inv(s)) == s, "upsilon inverse at " + show(s));
    }
  }
  if (o.pass)
    o.detail = "phi_321 involution to n = 8; all maps with inverses and |H_n| = C_n to n = 7";
  return o;
}

// 6. Column and row valley areas trade places under the transfer.
Outcome polyomino_identity()
{
  Outcome o;
  long total = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& [p, q] : oracle::polyominoes(n)) {
      auto h = make_polyomino(p, q);
      auto t = polyomino_transfer(h);
      o.require(oracle::vcarea(t.upper, t.lower) == oracle::vrarea(p, q) &&
                  oracle::lower_valleys(t.lower) == oracle::lower_valleys(q),
                "transfer at " + p + "/" + q);
      ++total;
    }
  if (o.pass)
    o.detail = std::to_string(total) + " polyominoes, n <= 7";
  return o;
}

// 7. q-series identities.
Outcome qseries_identities()
{
  Outcome o;
  for (int n = 0; n <= 9; ++n) {
    o.require(carlitz_riordan(n, CarlitzVariant::C) == distribution(named("inv"), n, cls("132")),
              "C_n vs inv on S_n(132) at n = " + std::to_string(n));
    o.require(carlitz_riordan(n, CarlitzVariant::Ctilde) ==
                distribution(named("inv"), n, cls("231")),
              "Ctilde_n vs inv on S_n(231) at n = " + std::to_string(n));
    o.require(distribution(named("inc"), n, cls("132")) == distribution(named("inv"), n, cls("321")),
              "inc vs inv at n = " + std::to_string(n));
  }
  for (int n = 0; n <= 8; ++n) {
    QPoly both;
    for (const auto& s : avoiders(n, "231"))
      both.add_term(static_cast<int>(maj(s) + st("mak", s)), 1);
    o.require(macmahon_q_catalan(n) == both, "q-Catalan at n = " + std::to_string(n));
  }
  auto one = cf_truncate(cfrak1(), 8), two = cf_truncate(cfrak2(), 8);
  for (int n = 0; n <= 8; ++n) {
    o.require(one[n] == distribution(named("mad"), n, cls("231")), "cfrak1 vs mad");
    o.require(one[n] == distribution(named("sist"), n, cls("132")), "cfrak1 vs sist");
    o.require(two[n] == distribution(named("mad"), n, cls("312")), "cfrak2 vs mad");
    o.require(two[n] == distribution(named("sist"), n, cls("213")), "cfrak2 vs sist");
  }
  for (const auto& s : avoiders(8, "132"))
    o.require(inc(s) == path_statistics(delta(s, DeltaVariant::A132)).sdowns,
              "inc vs sdowns at " + show(s));
  if (o.pass)
    o.detail = "Carlitz to n = 9, q-Catalan to n = 8, four continued fractions to z^8, inc";
  return o;
}

// 8. The refined recursion over S_n(312).
Outcome genfunc_oracle()
{
  Outcome o;
  std::mt19937 rng(20240531);
  std::uniform_int_distribution<int> coef(0, 4);
  std::map<int, std::vector<oracle::Word>> av;
  for (int n = 0; n <= 7; ++n)
    av[n] = oracle::avoiders(n, {"312"});
  for (int trial = 0; trial < 25; ++trial) {
    AlphaVector alpha{};
    for (auto& a : alpha)
      a = coef(rng);
    for (int n = 0; n <= 7; ++n) {
      std::vector<long> values;
      for (const auto& w : av[n]) {
        long s = 0;
        for (int i = 0; i < kAlphaSize; ++i)
          s += alpha[i] * oracle::count(alpha_patterns()[i], w);
        values.push_back(s);
      }
      auto g = genfunc_312(alpha, n).substitute("t", {}).substitute("u", {}).substitute("v", {});
      o.require(g.to_qpoly().ascending() == counts(oracle::tally(values)),
                "random alpha trial " + std::to_string(trial) + " at n = " + std::to_string(n));
    }
  }
  AlphaVector maj_alpha = alpha_from_stat(named("maj"));
  for (int n = 0; n <= 7; ++n)
    o.require(genfunc_312(maj_alpha, n) ==
                distribution_refined(named("maj"), n, cls("312"), {"des", "head", "last"}),
              "maj refinement at n = " + std::to_string(n));
  if (o.pass)
    o.detail = "25 random vectors and the maj vector, n <= 7";
  return o;
}

using Family = std::set<std::string>;
using Partition = std::set<std::set<Family>>;

Family family(const std::string& text)
{
  std::string body = text;
  if (!body.empty() && body.front() == '{')
    body = body.substr(1, body.size() - 2);
  auto items = parse_pattern_list(body);
  Family f;
  for (const auto& p : items)
    f.insert(p.to_string());
  return f;
}

Partition partition_of(const WilfPartition& w)
{
  Partition part;
  for (const auto& c : w.classes) {
    std::set<Family> members;
    for (const auto& text : c)
      members.insert(family(text));
    part.insert(members);
  }
  return part;
}

Family complement_family(const Family& f)
{
  Family out;
  for (const auto& p : f)
    out.insert(complement(Permutation::parse(p)).to_string());
  return out;
}

/// The stated classes, merged with their images under complementation, with
/// every other family of the given size in a class of its own.
Partition expected_partition(const std::vector<std::vector<std::string>>& stated, int size)
{
  std::vector<std::set<Family>> classes;
  for (const auto& c : stated) {
    std::set<Family> a, b;
    for (const auto& t : c) {
      a.insert(family(t));
      b.insert(complement_family(family(t)));
    }
    classes.push_back(a);
    classes.push_back(b);
  }
  // merge overlapping classes
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < classes.size() && !merged; ++i)
      for (size_t j = i + 1; j < classes.size() && !merged; ++j) {
        bool overlap = std::any_of(classes[i].begin(), classes[i].end(),
                                   [&](const Family& f) { return classes[j].count(f) > 0; });
        if (overlap) {
          classes[i].insert(classes[j].begin(), classes[j].end());
          classes.erase(classes.begin() + j);
          merged = true;
        }
      }
  }
  Partition part(classes.begin(), classes.end());
  for (const auto& set : pattern_subsets(size)) {
    Family f = family(canonical_set(set));
    bool covered = std::any_of(classes.begin(), classes.end(),
                               [&](const std::set<Family>& c) { return c.count(f) > 0; });
    if (!covered)
      part.insert({f});
  }
  return part;
}

// 9. Wilf classes for mak and head, head closed forms.
Outcome wilf_classes()
{
  Outcome o;
  auto& cache = shared_cache();
  auto mak = partition_of(st_wilf_classes(named("mak"), pattern_subsets(1), 8, cache));
  o.require(mak == expected_partition({{"123"}, {"321"}, {"132", "312"}, {"213", "231"}}, 1),
            "mak singleton classes differ");

  auto head1 = partition_of(st_wilf_classes(named("head"), pattern_subsets(1), 8, cache));
  o.require(head1 == expected_partition({{"123", "132"}, {"321", "312"}, {"231", "213"}}, 1),
            "head singleton classes differ");
  auto head2 = partition_of(st_wilf_classes(named("head"), pattern_subsets(2), 8, cache));
  o.require(head2 == expected_partition({{"123,213", "132,213", "132,231"},
                                         {"231,321", "213,312", "231,312"}},
                                        2),
            "head pair classes differ");
  std::vector<std::vector<std::string>> stated3 = {
    {"213,231,321", "213,231,312"},
    {"132,213,231", "123,213,231"},
    {"132,213,321", "132,213,312", "132,231,321", "132,231,312", "123,213,312"}};
  auto head3 = partition_of(st_wilf_classes(named("head"), pattern_subsets(3), 8, cache));
  o.require(head3 == expected_partition(stated3, 3), "head triple classes differ");
  // the last stated class is one member short; its complement image adds it
  bool literal = true;
  for (const auto& cls3 : head3)
    if (cls3.count(family("132,213,321")))
      literal = cls3.size() == 5;

  for (int n = 1; n <= 9; ++n) {
    o.require(head_closed_form(n, HeadFamily::S123) == distribution(named("head"), n, cls("123")),
              "head on S_n(123) at n = " + std::to_string(n));
    o.require(head_closed_form(n, HeadFamily::S213) == distribution(named("head"), n, cls("213")),
              "head on S_n(213) at n = " + std::to_string(n));
    o.require(head_closed_form(n, HeadFamily::S123_213) ==
                distribution(named("head"), n, cls("123,213")),
              "head on S_n(123,213) at n = " + std::to_string(n));
  }
  if (o.pass)
    o.detail = std::string("mak and head classes at nmax = 8, closed forms to n = 9") +
               (literal ? "" : "; the stated 5-member triple class also holds 123,231,312");
  return o;
}

// 10. Valley and peak offset formulas.
Outcome offset_formulas()
{
  Outcome o;
  long peak_misses = 0, total = 0;
  bool excess_is_fixed_points = true, corrected_holds = true, corrected_equidistributed = true;
  std::string first_miss;
  for (int n = 0; n <= 8; ++n) {
    for (const auto& s : avoiders(n, "231")) {
      std::string w = omega_stump(s).word();
      int sum = 0;
      for (auto v : oracle::valleys(w))
        sum += (v.pos - v.height) / 2;
      o.require(maj(s) == sum, "valley formula at " + show(s));
    }
    for (const auto& s : avoiders(n, "321")) {
      std::string w = gamma(s).word();
      int sum = oracle::npea(w), strict = 0;
      for (auto p : oracle::peaks(w)) {
        sum += (p.pos - p.height) / 2;
        if (p.height >= 2)
          strict += (p.pos - p.height) / 2 + 1;
      }
      int fixed = 0;
      for (int i = 0; i < s.size(); ++i)
        if (s[i] == i + 1)
          fixed += i + 1;
      int den = oracle::den(s.values());
      ++total;
      if (den != sum) {
        if (peak_misses++ == 0)
          first_miss = show(s);
        excess_is_fixed_points &= sum - den == fixed;
      }
      corrected_holds &= den == strict;
    }
    std::vector<long> valley, peak, strict;
    for (const auto& w : oracle::dyck_paths(n)) {
      valley.push_back(valley_offset_sum(DyckPath(w)));
      peak.push_back(path_statistics(DyckPath(w)).npea + peak_offset_sum(DyckPath(w)));
      strict.push_back(excedance_peak_sum(DyckPath(w)));
    }
    o.require(oracle::tally(valley) == oracle::tally(peak),
              "offset statistics differ on Dyck_" + std::to_string(n));
    corrected_equidistributed &= oracle::tally(valley) == oracle::tally(strict);
  }
  if (peak_misses) {
    o.pass = false;
    o.detail = "peak formula fails on " + std::to_string(peak_misses) + " of " +
               std::to_string(total) + " permutations in S_n(321), first at " + first_miss +
               (excess_is_fixed_points ? "; the excess is always the sum of fixed points" : "") +
               (corrected_holds ? "; restricted to peaks of height >= 2 it holds" : "") +
               (corrected_equidistributed ? " and is equidistributed with the valley form" : "") +
               (o.detail.empty() ? "" : "; " + o.detail);
  }
  if (o.pass)
    o.detail = "pointwise on S_n(231), S_n(321) and equidistributed on Dyck_n, n <= 8";
  return o;
}

} // namespace

int main()
{
  std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
    {"Mahonian distributions of the table statistics", mahonity},
    {"manifest cells verify", manifest_cells},
    {"scanner reproduces the manifest exactly", scanner_completeness},
    {"bijections transport statistics", transport},
    {"involutions and round trips", round_trips},
    {"polyomino valley areas", polyomino_identity},
    {"q-series identities", qseries_identities},
    {"refined recursion over S_n(312)", genfunc_oracle},
    {"Wilf classes and head closed forms", wilf_classes},
    {"valley and peak offset formulas", offset_formulas},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%s) [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
