#include <map>

#include "mahonia/enumerate.hpp"
#include "mahonia/statistic.hpp"

namespace mahonia {

namespace {

using Tally = std::map<Int, Int>;

QPoly to_poly(const Tally& t)
{
  QPoly p;
  for (const auto& [e, c] : t)
    p.add_term(static_cast<int>(e), c);
  return p;
}

void merge(Tally& into, const Tally& from)
{
  for (const auto& [e, c] : from)
    into[e] = checked_add(into[e], c);
}

} // namespace

QPoly distribution_serial(const StatSpec& spec, int n,
                          const std::vector<VincularPattern>& patterns)
{
  Tally t;
  for_each_avoider(n, patterns, [&](const Permutation& p) { t[evaluate(spec, p)] += 1; });
  return to_poly(t);
}

std::vector<QPoly> distributions(const std::vector<StatSpec>& specs, int n,
                                 const std::vector<VincularPattern>& patterns)
{
  StatBatch batch(specs);
  auto prefixes = shard_prefixes(n, patterns, default_shard_depth(n));
  int shards = static_cast<int>(prefixes.size());
  std::vector<std::vector<Tally>> parts(shards, std::vector<Tally>(specs.size()));
  parallel_shards(shards, [&](int i) {
    std::vector<Int> values;
    for_each_avoider_with_prefix(n, patterns, prefixes[i], [&](const Permutation& p) {
      batch.evaluate(p, values);
      for (size_t s = 0; s < values.size(); ++s)
        parts[i][s][values[s]] += 1;
    });
  });
  std::vector<QPoly> out;
  for (size_t s = 0; s < specs.size(); ++s) {
    Tally total;
    for (const auto& part : parts)
      merge(total, part[s]);
    out.push_back(to_poly(total));
  }
  return out;
}

QPoly distribution(const StatSpec& spec, int n, const std::vector<VincularPattern>& patterns)
{
  return distributions({spec}, n, patterns).front();
}

MultiPoly distribution_refined(const StatSpec& spec, int n,
                               const std::vector<VincularPattern>& patterns,
                               const std::vector<std::string>& marks)
{
  auto prefixes = shard_prefixes(n, patterns, default_shard_depth(n));
  int shards = static_cast<int>(prefixes.size());
  std::vector<MultiPoly> parts(shards);
  parallel_shards(shards, [&](int i) {
    for_each_avoider_with_prefix(n, patterns, prefixes[i], [&](const Permutation& p) {
      Monomial m = mark_monomial(p, marks);
      Int e = evaluate(spec, p);
      if (e != 0)
        m = monomial_product(m, Monomial{{"q", static_cast<int>(e)}});
      parts[i].add_term(std::move(m), 1);
    });
  });
  MultiPoly total;
  for (const auto& part : parts)
    total += part;
  return total;
}

} // namespace mahonia
