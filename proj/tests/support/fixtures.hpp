#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pincer_ml/pincer_ml.hpp"

namespace pincer_ml::testing {

inline std::string data_path(std::string_view name) { return std::string(PINCER_ML_DATA_DIR) + "/" + std::string(name); }

inline Taxonomy bookstore_taxonomy() {
  std::ifstream in(data_path("bookstore_taxonomy.csv"));
  return load_taxonomy_csv(in);
}

inline TransactionDB bookstore() {
  std::ifstream in(data_path("bookstore.csv"));
  return load_transactions_csv(in, bookstore_taxonomy());
}

/// Itemset from code texts, resolved against a matrix vocabulary.
inline Itemset codes(const LevelMatrix& m, const std::vector<std::string_view>& texts) {
  std::vector<ItemIndex> items;
  for (auto t : texts) {
    auto idx = m.index_of(parse_code(t, m.vocabulary().empty() ? 3 : m.vocabulary().front().total_levels()));
    if (!idx) throw std::invalid_argument("code not in vocabulary: " + std::string(t));
    items.push_back(*idx);
  }
  return Itemset(std::move(items));
}

/// Level-1 codes "A**", "B**", ... for synthetic matrices.
inline std::vector<ItemCode> letter_vocabulary(std::size_t n) {
  static constexpr std::string_view kSymbols = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  std::vector<ItemCode> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(parse_code(std::string(1, kSymbols.at(i)) + "**"));
  return out;
}

/// Random Boolean matrix with per-cell density drawn per instance, so that
/// both sparse and dense (long maximal sets) cases show up.
inline LevelMatrix random_matrix(std::mt19937_64& rng, std::size_t max_items, std::size_t max_transactions) {
  std::uniform_int_distribution<std::size_t> items_d(1, max_items);
  std::uniform_int_distribution<std::size_t> txn_d(1, max_transactions);
  std::uniform_real_distribution<double> density_d(0.15, 0.8);
  const std::size_t items = items_d(rng);
  const std::size_t txns = txn_d(rng);
  std::bernoulli_distribution cell(density_d(rng));
  std::vector<Itemset> rows;
  for (std::size_t t = 0; t < txns; ++t) {
    std::vector<ItemIndex> r;
    for (ItemIndex j = 0; j < items; ++j)
      if (cell(rng)) r.push_back(j);
    rows.emplace_back(std::move(r));
  }
  return LevelMatrix(1, letter_vocabulary(items), rows);
}

inline ItemsetSet random_family(std::mt19937_64& rng, std::size_t universe, std::size_t count, double density) {
  std::bernoulli_distribution cell(density);
  ItemsetSet out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<ItemIndex> s;
    for (ItemIndex j = 0; j < universe; ++j)
      if (cell(rng)) s.push_back(j);
    if (!s.empty()) out.insert(Itemset(std::move(s)));
  }
  return out;
}

/// Brute-force support: row scan, independent of the bitmap path.
inline Support scan_support(const LevelMatrix& m, const Itemset& s) {
  Support n = 0;
  for (std::size_t t = 0; t < m.n_transactions(); ++t) {
    bool all = true;
    for (ItemIndex j : s) all = all && m.test(t, j);
    n += all ? 1 : 0;
  }
  return n;
}

}  // namespace pincer_ml::testing
