#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pincer_ml/error.hpp"
#include "pincer_ml/itemset.hpp"
#include "pincer_ml/transactions.hpp"

namespace pincer_ml::oracle {

inline constexpr std::size_t kMaxVocabulary = 24;

struct OracleResult {
  std::map<Itemset, Support> frequent;
  ItemsetSet maximal;
};

// Exhaustive reference miner. Deliberately shares nothing with the engine
// beyond LevelMatrix::test: supports come from a row scan, the enumeration is
// a plain depth-first walk, and maximality is a quadratic superset check.
inline OracleResult brute_force(const LevelMatrix& matrix, Support minsup) {
  if (matrix.width() > kMaxVocabulary) {
    throw Error(ErrorKind::VocabularyTooLarge, "vocabulary of " + std::to_string(matrix.width()) +
                                                   " items exceeds the oracle limit of " +
                                                   std::to_string(kMaxVocabulary));
  }
  if (minsup < 1) throw Error(ErrorKind::InvalidMinsup, "minimum support must be >= 1");

  const std::size_t n = matrix.n_transactions();
  const std::size_t width = matrix.width();
  std::vector<std::vector<bool>> rows(n, std::vector<bool>(width));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t j = 0; j < width; ++j) rows[t][j] = matrix.test(t, static_cast<ItemIndex>(j));

  auto support_of = [&](const std::vector<ItemIndex>& items) {
    Support s = 0;
    for (const auto& row : rows) {
      bool all = true;
      for (ItemIndex j : items) all = all && row[j];
      if (all) ++s;
    }
    return s;
  };

  std::vector<std::pair<std::vector<ItemIndex>, Support>> found;
  std::vector<ItemIndex> current;
  auto extend = [&](auto&& self, ItemIndex from) -> void {
    for (ItemIndex j = from; j < width; ++j) {
      current.push_back(j);
      const Support s = support_of(current);
      if (s >= minsup) {
        found.emplace_back(current, s);
        self(self, j + 1);
      }
      current.pop_back();
    }
  };
  extend(extend, 0);

  auto contains_all = [](const std::vector<ItemIndex>& big, const std::vector<ItemIndex>& small) {
    for (ItemIndex x : small)
      if (std::find(big.begin(), big.end(), x) == big.end()) return false;
    return true;
  };

  OracleResult out;
  for (const auto& [items, s] : found) {
    out.frequent.emplace(Itemset(items), s);
    bool has_superset = false;
    for (const auto& [other, unused] : found) {
      if (other.size() > items.size() && contains_all(other, items)) {
        has_superset = true;
        break;
      }
    }
    if (!has_superset) out.maximal.insert(Itemset(items));
  }
  return out;
}

}  // namespace pincer_ml::oracle
