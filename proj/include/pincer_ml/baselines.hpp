#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pincer_ml/border.hpp"
#include "pincer_ml/error.hpp"
#include "pincer_ml/itemset.hpp"
#include "pincer_ml/multilevel.hpp"
#include "pincer_ml/pincer.hpp"
#include "pincer_ml/transactions.hpp"

namespace pincer_ml {

struct AprioriResult {
  std::vector<FrequentSet> frequent;  // sorted by size, then items
  std::vector<PassRecord> trace;
};

/// Classic levelwise search: one pass per candidate size k.
inline AprioriResult apriori(const LevelMatrix& matrix, Support minsup, PassCounter& counter) {
  if (minsup < 1) throw Error(ErrorKind::InvalidMinsup, "minimum support must be >= 1");
  AprioriResult result;
  ItemsetSet candidates;
  for (ItemIndex j = 0; j < matrix.width(); ++j) candidates.insert(Itemset{j});
  for (std::size_t k = 1; !candidates.empty(); ++k) {
    ItemsetSet frequent_k;
    for (const auto& [s, support] : count_many(matrix, candidates, counter)) {
      if (support >= minsup) {
        frequent_k.insert(s);
        result.frequent.push_back(FrequentSet{s, support});
      }
    }
    PassRecord rec;
    rec.k = k;
    rec.candidates = candidates.size();
    rec.frequent = frequent_k.size();
    rec.infrequent = candidates.size() - frequent_k.size();
    rec.passes = counter.passes();
    result.trace.push_back(rec);
    candidates = apriori_prune(join(frequent_k), frequent_k);
  }
  std::sort(result.frequent.begin(), result.frequent.end(),
            [](const FrequentSet& a, const FrequentSet& b) { return BySizeThenItems{}(a.itemset, b.itemset); });
  return result;
}

/// Members of `frequent` with no frequent proper superset.
inline std::vector<FrequentSet> maximal_of(const std::vector<FrequentSet>& frequent) {
  ItemsetSet all;
  std::map<Itemset, Support> support;
  for (const auto& f : frequent) {
    all.insert(f.itemset);
    support.emplace(f.itemset, f.support);
  }
  std::vector<FrequentSet> out;
  for (const auto& m : maximal_members(all)) out.push_back(FrequentSet{m, support.at(m)});
  std::sort(out.begin(), out.end(),
            [](const FrequentSet& a, const FrequentSet& b) { return BySizeThenItems{}(a.itemset, b.itemset); });
  return out;
}

/// Per-level Apriori with frequent-parents descent: the multilevel baseline
/// the Pincer driver is measured against.
inline MultiLevelResult ml_t2l1(const TransactionDB& db, const LevelConfig& config) {
  return detail::run_levels(db, config, DescentPolicy::FrequentParents, "ml_t2l1", [](LevelResult& lr) {
    PassCounter counter;
    AprioriResult ar = apriori(lr.matrix, lr.minsup, counter);
    lr.maximal = maximal_of(ar.frequent);
    lr.frequent = std::move(ar.frequent);
    lr.trace = std::move(ar.trace);
    lr.passes = counter.passes();
  });
}

struct ComparisonRow {
  int level = 1;
  std::size_t k = 0;
  std::size_t candidates_a = 0;
  std::size_t candidates_b = 0;
  std::size_t mfcs_counted_a = 0;
  std::size_t mfcs_counted_b = 0;
  std::size_t frequent_a = 0;
  std::size_t frequent_b = 0;

  std::int64_t candidates_delta() const noexcept {
    return static_cast<std::int64_t>(candidates_a) - static_cast<std::int64_t>(candidates_b);
  }
  std::int64_t frequent_delta() const noexcept {
    return static_cast<std::int64_t>(frequent_a) - static_cast<std::int64_t>(frequent_b);
  }
};

struct LevelPasses {
  int level = 1;
  std::size_t passes_a = 0;
  std::size_t passes_b = 0;
};

/// Side-by-side per-level, per-k counts of two runs over the same data.
struct ComparisonReport {
  std::string algorithm_a;
  std::string algorithm_b;
  std::vector<ComparisonRow> rows;
  std::vector<LevelPasses> level_passes;
  std::size_t total_passes_a = 0;
  std::size_t total_passes_b = 0;
  std::size_t total_candidates_a = 0;
  std::size_t total_candidates_b = 0;
  std::size_t expansion_passes_a = 0;
  std::size_t expansion_passes_b = 0;
};

inline ComparisonReport compare(const MultiLevelResult& a, const MultiLevelResult& b) {
  if (a.fingerprint != b.fingerprint || a.n_transactions != b.n_transactions) {
    throw Error(ErrorKind::InputMismatch, "runs were made on different datasets");
  }
  ComparisonReport report;
  report.algorithm_a = a.algorithm;
  report.algorithm_b = b.algorithm;

  std::map<std::pair<int, std::size_t>, ComparisonRow> rows;
  std::map<int, LevelPasses> passes;
  auto row = [&](int level, std::size_t k) -> ComparisonRow& {
    auto& r = rows[{level, k}];
    r.level = level;
    r.k = k;
    return r;
  };
  for (const auto& l : a.levels) {
    passes[l.level].level = l.level;
    passes[l.level].passes_a = l.passes;
    for (const auto& t : l.trace) {
      auto& r = row(l.level, t.k);
      r.candidates_a = t.candidates;
      r.mfcs_counted_a = t.mfcs_counted;
      r.frequent_a = t.frequent;
    }
  }
  for (const auto& l : b.levels) {
    passes[l.level].level = l.level;
    passes[l.level].passes_b = l.passes;
    for (const auto& t : l.trace) {
      auto& r = row(l.level, t.k);
      r.candidates_b = t.candidates;
      r.mfcs_counted_b = t.mfcs_counted;
      r.frequent_b = t.frequent;
    }
  }
  for (auto& [key, r] : rows) report.rows.push_back(r);
  for (auto& [level, p] : passes) report.level_passes.push_back(p);
  report.total_passes_a = a.total_passes();
  report.total_passes_b = b.total_passes();
  report.total_candidates_a = a.total_candidates();
  report.total_candidates_b = b.total_candidates();
  report.expansion_passes_a = a.total_expansion_passes();
  report.expansion_passes_b = b.total_expansion_passes();
  return report;
}

}  // namespace pincer_ml
