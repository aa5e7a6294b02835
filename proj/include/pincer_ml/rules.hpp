#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pincer_ml/error.hpp"
#include "pincer_ml/itemset.hpp"
#include "pincer_ml/ratio.hpp"
#include "pincer_ml/transactions.hpp"

namespace pincer_ml {

/// Largest maximal set whose subsets we agree to enumerate.
inline constexpr std::size_t kMaxExpandSize = 24;

struct Rule {
  Itemset antecedent;
  Itemset consequent;
  Support support = 0;  // support of antecedent ∪ consequent
  Ratio confidence;
  int level = 1;

  friend bool operator==(const Rule&, const Rule&) = default;
};

inline Ratio support_fraction(Support count, std::size_t n_transactions) {
  if (n_transactions == 0) return Ratio(0, 1);
  return Ratio(static_cast<std::int64_t>(count), static_cast<std::int64_t>(n_transactions));
}

namespace detail {

template <typename Visit>
void for_each_nonempty_subset(const Itemset& s, Visit&& visit) {
  const std::size_t n = s.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<ItemIndex> items;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask >> b & 1U) items.push_back(s[b]);
    }
    visit(Itemset(std::move(items)), mask);
  }
}

}  // namespace detail

/// Every nonempty subset of the maximal sets, with supports from one extra
/// database pass. Membership needs no counting (downward closure); the pass
/// only supplies the numbers.
inline std::vector<FrequentSet> expand_frequent(const ItemsetSet& mfs, const LevelMatrix& matrix, PassCounter& counter) {
  std::vector<FrequentSet> out;
  if (mfs.empty()) return out;
  ItemsetSet subsets;
  for (const auto& m : mfs) {
    if (m.size() > kMaxExpandSize) {
      throw Error(ErrorKind::ItemsetTooLarge, "maximal set of size " + std::to_string(m.size()) +
                                                  " exceeds the expansion limit of " + std::to_string(kMaxExpandSize));
    }
    detail::for_each_nonempty_subset(m, [&](Itemset s, std::uint64_t) { subsets.insert(std::move(s)); });
  }
  for (auto& [s, support] : count_many(matrix, subsets, counter)) out.push_back(FrequentSet{s, support});
  std::sort(out.begin(), out.end(),
            [](const FrequentSet& a, const FrequentSet& b) { return BySizeThenItems{}(a.itemset, b.itemset); });
  return out;
}

/// Rules X → Z∖X over each frequent Z with |Z| ≥ 2, kept when
/// support(Z) / support(X) ≥ min_conf. Sorted by descending confidence,
/// descending support, then antecedent and consequent.
inline std::vector<Rule> generate_rules(const std::vector<FrequentSet>& frequent, const Ratio& min_conf, int level) {
  if (min_conf <= Ratio(0, 1) || min_conf > Ratio(1, 1)) {
    throw Error(ErrorKind::InvalidConfidence, "minimum confidence must be in (0, 1], got " + min_conf.str());
  }
  std::map<Itemset, Support> support;
  for (const auto& f : frequent) support.emplace(f.itemset, f.support);

  std::vector<Rule> rules;
  for (const auto& z : frequent) {
    const std::size_t n = z.itemset.size();
    if (n < 2) continue;
    if (n > kMaxExpandSize) throw Error(ErrorKind::ItemsetTooLarge, "itemset of size " + std::to_string(n));
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    detail::for_each_nonempty_subset(z.itemset, [&](Itemset x, std::uint64_t mask) {
      if (mask == full) return;
      auto it = support.find(x);
      if (it == support.end() || it->second == 0) {
        throw Error(ErrorKind::MissingSubsetSupport, "no support recorded for a subset of a size-" +
                                                         std::to_string(n) + " frequent set");
      }
      Ratio conf(static_cast<std::int64_t>(z.support), static_cast<std::int64_t>(it->second));
      if (conf < min_conf) return;
      std::vector<ItemIndex> rest;
      for (std::size_t b = 0; b < n; ++b) {
        if (!(mask >> b & 1U)) rest.push_back(z.itemset[b]);
      }
      rules.push_back(Rule{std::move(x), Itemset(std::move(rest)), z.support, conf, level});
    });
  }
  std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    if (a.support != b.support) return a.support > b.support;
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
  });
  return rules;
}

}  // namespace pincer_ml
