#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pincer_ml/error.hpp"
#include "pincer_ml/itemset.hpp"
#include "pincer_ml/pincer.hpp"
#include "pincer_ml/ratio.hpp"
#include "pincer_ml/rules.hpp"
#include "pincer_ml/taxonomy.hpp"
#include "pincer_ml/transactions.hpp"

namespace pincer_ml {

/// Which level-(l+1) items stay in play after mining level l.
enum class DescentPolicy {
  FrequentParents,      // children of every frequent level-l item
  MaximalItemsetItems,  // children of the items of the largest maximal set(s)
};

inline std::string_view to_string(DescentPolicy p) noexcept {
  return p == DescentPolicy::FrequentParents ? "frequent-parents" : "maximal-itemset-items";
}

inline DescentPolicy parse_policy(std::string_view text) {
  if (text == "frequent-parents") return DescentPolicy::FrequentParents;
  if (text == "maximal-itemset-items") return DescentPolicy::MaximalItemsetItems;
  throw Error(ErrorKind::InvalidConfig, "unknown descent policy '" + std::string(text) + "'");
}

struct LevelConfig {
  std::vector<Support> minsup_per_level;  // index 0 is level 1
  DescentPolicy descent_policy = DescentPolicy::FrequentParents;
  int total_levels = kDefaultLevels;
  Ratio min_conf{1, 2};

  /// Throws on invalid settings; returns non-fatal warnings.
  std::vector<std::string> validate() const {
    if (total_levels < 1) throw Error(ErrorKind::InvalidConfig, "total_levels must be >= 1");
    if (minsup_per_level.size() != static_cast<std::size_t>(total_levels)) {
      throw Error(ErrorKind::InvalidConfig, "expected " + std::to_string(total_levels) +
                                                " minimum supports, got " + std::to_string(minsup_per_level.size()));
    }
    for (Support s : minsup_per_level) {
      if (s < 1) throw Error(ErrorKind::InvalidMinsup, "minimum support must be >= 1");
    }
    if (min_conf <= Ratio(0, 1) || min_conf > Ratio(1, 1)) {
      throw Error(ErrorKind::InvalidConfidence, "minimum confidence must be in (0, 1], got " + min_conf.str());
    }
    std::vector<std::string> warnings;
    for (std::size_t l = 1; l < minsup_per_level.size(); ++l) {
      if (minsup_per_level[l] > minsup_per_level[l - 1]) {
        warnings.push_back("level " + std::to_string(l + 1) + " minimum support " +
                           std::to_string(minsup_per_level[l]) + " exceeds level " + std::to_string(l) + "'s " +
                           std::to_string(minsup_per_level[l - 1]));
      }
    }
    return warnings;
  }
};

struct LevelResult {
  int level = 1;
  Support minsup = 1;
  LevelMatrix matrix;
  std::vector<FrequentSet> maximal;   // sorted by size, then items
  std::vector<FrequentSet> frequent;  // sorted by size, then items
  std::vector<Rule> rules;
  std::vector<PassRecord> trace;
  std::size_t passes = 0;            // passes spent finding the frequent sets
  std::size_t expansion_passes = 0;  // extra passes spent filling in supports

  const std::vector<ItemCode>& vocabulary() const noexcept { return matrix.vocabulary(); }
};

struct MultiLevelResult {
  std::string algorithm;
  std::uint64_t fingerprint = 0;
  std::size_t n_transactions = 0;
  std::vector<LevelResult> levels;

  std::size_t total_passes() const noexcept {
    std::size_t n = 0;
    for (const auto& l : levels) n += l.passes;
    return n;
  }
  std::size_t total_expansion_passes() const noexcept {
    std::size_t n = 0;
    for (const auto& l : levels) n += l.expansion_passes;
    return n;
  }
  /// Bottom-up candidates (C_k) counted over all levels.
  std::size_t total_candidates() const noexcept {
    std::size_t n = 0;
    for (const auto& l : levels)
      for (const auto& r : l.trace) n += r.candidates;
    return n;
  }
  /// MFCS members counted alongside the candidates.
  std::size_t total_mfcs_counted() const noexcept {
    std::size_t n = 0;
    for (const auto& l : levels)
      for (const auto& r : l.trace) n += r.mfcs_counted;
    return n;
  }
};

/// Depth-`level` taxonomy codes whose parent survives the previous level.
inline std::set<ItemCode> descend_vocabulary(const Taxonomy& taxonomy, int level,
                                             std::span<const ItemCode> prior_vocabulary,
                                             const std::vector<FrequentSet>& prior_maximal, DescentPolicy policy) {
  if (level < 2 || level > taxonomy.total_levels()) {
    throw Error(ErrorKind::LevelOutOfRange, "cannot descend to level " + std::to_string(level));
  }
  std::set<ItemCode> parents;
  std::size_t widest = 0;
  for (const auto& m : prior_maximal) widest = std::max(widest, m.itemset.size());
  for (const auto& m : prior_maximal) {
    if (policy == DescentPolicy::MaximalItemsetItems && m.itemset.size() != widest) continue;
    for (ItemIndex j : m.itemset) parents.insert(prior_vocabulary[j]);
  }
  std::set<ItemCode> out;
  if (parents.empty()) return out;
  for (const auto& code : taxonomy.codes_at(level)) {
    if (parents.contains(generalize(code, level - 1))) out.insert(code);
  }
  return out;
}

inline std::set<ItemCode> descend_vocabulary(const Taxonomy& taxonomy, int level,
                                             std::span<const ItemCode> prior_vocabulary, const PincerResult& prior,
                                             DescentPolicy policy) {
  return descend_vocabulary(taxonomy, level, prior_vocabulary, prior.mfs, policy);
}

namespace detail {

/// Shared top-down driver. `mine_level` fills maximal/frequent/trace/passes.
template <typename MineLevel>
MultiLevelResult run_levels(const TransactionDB& db, const LevelConfig& config, DescentPolicy policy,
                            std::string algorithm, MineLevel&& mine_level) {
  config.validate();
  if (config.total_levels != db.taxonomy().total_levels()) {
    throw Error(ErrorKind::InvalidConfig, "config has " + std::to_string(config.total_levels) +
                                              " levels, taxonomy has " +
                                              std::to_string(db.taxonomy().total_levels()));
  }
  MultiLevelResult result;
  result.algorithm = std::move(algorithm);
  result.fingerprint = db.fingerprint();
  result.n_transactions = db.size();
  if (db.empty()) return result;

  std::optional<std::set<ItemCode>> filter;
  for (int level = 1; level <= config.total_levels; ++level) {
    LevelResult lr;
    lr.level = level;
    lr.minsup = config.minsup_per_level[static_cast<std::size_t>(level - 1)];
    lr.matrix = project_to_level(db, level, filter);
    if (lr.matrix.width() == 0) break;
    mine_level(lr);
    lr.rules = generate_rules(lr.frequent, config.min_conf, level);
    const bool exhausted = lr.maximal.empty();
    result.levels.push_back(std::move(lr));
    if (exhausted || level == config.total_levels) break;
    const LevelResult& prior = result.levels.back();
    filter = descend_vocabulary(db.taxonomy(), level + 1, prior.vocabulary(), prior.maximal, policy);
  }
  return result;
}

}  // namespace detail

/// Progressive deepening: mine level 1 with Pincer search, keep the items the
/// policy selects, descend, and repeat with that level's own threshold.
inline MultiLevelResult mine_multilevel(const TransactionDB& db, const LevelConfig& config) {
  return detail::run_levels(db, config, config.descent_policy, "pincer", [](LevelResult& lr) {
    PincerResult pr = pincer_search(lr.matrix, lr.minsup);
    PassCounter expansion;
    lr.frequent = expand_frequent(pr.maximal_itemsets(), lr.matrix, expansion);
    lr.maximal = std::move(pr.mfs);
    lr.trace = std::move(pr.trace.iterations);
    lr.passes = pr.trace.passes;
    lr.expansion_passes = expansion.passes();
  });
}

}  // namespace pincer_ml
