#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ranges>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "pincer_ml/csv.hpp"
#include "pincer_ml/error.hpp"
#include "pincer_ml/itemset.hpp"
#include "pincer_ml/ratio.hpp"
#include "pincer_ml/taxonomy.hpp"

namespace pincer_ml {

struct Transaction {
  std::string tid;
  std::vector<ItemCode> items;  // sorted leaf codes, no duplicates
};

/// Raw market-basket data over the leaves of a taxonomy.
class TransactionDB {
 public:
  TransactionDB() = default;
  TransactionDB(Taxonomy taxonomy, std::vector<Transaction> transactions)
      : taxonomy_(std::move(taxonomy)), transactions_(std::move(transactions)) {}

  const Taxonomy& taxonomy() const noexcept { return taxonomy_; }
  const std::vector<Transaction>& transactions() const noexcept { return transactions_; }
  std::size_t size() const noexcept { return transactions_.size(); }
  bool empty() const noexcept { return transactions_.empty(); }

  /// FNV-1a over the canonical text of the transactions.
  std::uint64_t fingerprint() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::string_view s) {
      for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
    };
    for (const auto& t : transactions_) {
      mix(t.tid);
      mix(":");
      for (const auto& item : t.items) {
        mix(item.text());
        mix(",");
      }
      mix(";");
    }
    return h;
  }

 private:
  Taxonomy taxonomy_;
  std::vector<Transaction> transactions_;
};

struct TransactionRecord {
  std::string tid;
  std::string item;
  std::size_t position = 0;
};

/// Groups (tid, item) pairs by tid in first-appearance order.
inline TransactionDB load_transactions(const std::vector<TransactionRecord>& records, const Taxonomy& taxonomy) {
  std::vector<Transaction> txns;
  std::unordered_map<std::string, std::size_t> slot;
  for (const auto& rec : records) {
    ItemCode code;
    try {
      code = parse_code(rec.item, taxonomy.total_levels());
    } catch (const Error& e) {
      throw Error(e.kind(), "record " + std::to_string(rec.position) + ": " + e.what());
    }
    if (!taxonomy.is_leaf(code)) {
      throw Error(ErrorKind::UnknownItem,
                  "record " + std::to_string(rec.position) + ": '" + rec.item + "' is not a taxonomy leaf");
    }
    auto [it, inserted] = slot.emplace(rec.tid, txns.size());
    if (inserted) txns.push_back(Transaction{rec.tid, {}});
    txns[it->second].items.push_back(std::move(code));
  }
  for (auto& t : txns) {
    std::sort(t.items.begin(), t.items.end());
    t.items.erase(std::unique(t.items.begin(), t.items.end()), t.items.end());
  }
  return TransactionDB(taxonomy, std::move(txns));
}

/// Reads a `tid,item` CSV.
inline TransactionDB load_transactions_csv(std::istream& in, const Taxonomy& taxonomy) {
  std::vector<TransactionRecord> records;
  for (auto& row : csv::read(in, {"tid", "item"})) {
    records.push_back(TransactionRecord{std::move(row.fields[0]), std::move(row.fields[1]), row.line});
  }
  return load_transactions(records, taxonomy);
}

/// Counts full database sweeps. One call to count_many is one sweep.
class PassCounter {
 public:
  std::size_t passes() const noexcept { return passes_; }
  void record_pass() noexcept { ++passes_; }

 private:
  std::size_t passes_ = 0;
};

/// Boolean transaction-by-item matrix for one taxonomy level, stored
/// column-wise: one packed bitmap of transactions per vocabulary item.
class LevelMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  LevelMatrix() = default;

  /// `rows[t]` lists the vocabulary indices present in transaction t.
  LevelMatrix(int level, std::vector<ItemCode> vocabulary, const std::vector<Itemset>& rows)
      : level_(level), vocabulary_(std::move(vocabulary)), n_transactions_(rows.size()) {
    for (std::size_t j = 0; j < vocabulary_.size(); ++j) {
      if (vocabulary_[j].depth() != level) {
        throw Error(ErrorKind::LevelOutOfRange,
                    "vocabulary code '" + vocabulary_[j].text() + "' is not at level " + std::to_string(level));
      }
      if (j > 0 && !(vocabulary_[j - 1] < vocabulary_[j])) {
        throw Error(ErrorKind::MalformedInput, "vocabulary must be strictly sorted");
      }
    }
    words_ = (n_transactions_ + kWordBits - 1) / kWordBits;
    columns_.assign(vocabulary_.size() * words_, 0);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      for (ItemIndex j : rows[t]) {
        if (j >= vocabulary_.size()) throw Error(ErrorKind::IndexOutOfRange, "row item " + std::to_string(j));
        columns_[j * words_ + t / kWordBits] |= Word{1} << (t % kWordBits);
      }
    }
  }

  int level() const noexcept { return level_; }
  const std::vector<ItemCode>& vocabulary() const noexcept { return vocabulary_; }
  std::size_t width() const noexcept { return vocabulary_.size(); }
  std::size_t n_transactions() const noexcept { return n_transactions_; }

  bool test(std::size_t transaction, ItemIndex item) const noexcept {
    return (columns_[item * words_ + transaction / kWordBits] >> (transaction % kWordBits)) & 1U;
  }

  Itemset row(std::size_t transaction) const {
    std::vector<ItemIndex> items;
    for (ItemIndex j = 0; j < width(); ++j) {
      if (test(transaction, j)) items.push_back(j);
    }
    return Itemset(std::move(items));
  }

  std::optional<ItemIndex> index_of(const ItemCode& code) const {
    auto it = std::lower_bound(vocabulary_.begin(), vocabulary_.end(), code);
    if (it == vocabulary_.end() || *it != code) return std::nullopt;
    return static_cast<ItemIndex>(it - vocabulary_.begin());
  }

  std::vector<ItemCode> codes_of(const Itemset& s) const {
    std::vector<ItemCode> out;
    out.reserve(s.size());
    for (ItemIndex j : s) out.push_back(vocabulary_.at(j));
    return out;
  }

  std::span<const Word> column(ItemIndex item) const noexcept {
    return std::span<const Word>(columns_).subspan(item * words_, words_);
  }
  std::size_t words_per_column() const noexcept { return words_; }

 private:
  int level_ = 1;
  std::vector<ItemCode> vocabulary_;
  std::size_t n_transactions_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> columns_;
};

/// Generalizes every transaction to `level`, collapsing duplicates. Without a
/// filter the vocabulary is every taxonomy code at that level; with one it is
/// exactly the filter.
inline LevelMatrix project_to_level(const TransactionDB& db, int level,
                                    const std::optional<std::set<ItemCode>>& vocabulary_filter = std::nullopt) {
  const Taxonomy& tax = db.taxonomy();
  if (level < 1 || level > tax.total_levels()) {
    throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(level) + " outside [1, " +
                                                std::to_string(tax.total_levels()) + "]");
  }
  std::vector<ItemCode> vocabulary;
  if (vocabulary_filter) {
    for (const auto& code : *vocabulary_filter) {
      if (code.depth() != level) {
        throw Error(ErrorKind::LevelOutOfRange,
                    "filter code '" + code.text() + "' is not at level " + std::to_string(level));
      }
      vocabulary.push_back(code);
    }
  } else {
    vocabulary = tax.codes_at(level);
  }
  std::map<ItemCode, ItemIndex> index;
  for (std::size_t j = 0; j < vocabulary.size(); ++j) index.emplace(vocabulary[j], static_cast<ItemIndex>(j));

  std::vector<Itemset> rows;
  rows.reserve(db.size());
  for (const auto& t : db.transactions()) {
    std::vector<ItemIndex> bits;
    for (const auto& item : t.items) {
      if (auto it = index.find(generalize(item, level)); it != index.end()) bits.push_back(it->second);
    }
    rows.emplace_back(std::move(bits));
  }
  return LevelMatrix(level, std::move(vocabulary), rows);
}

/// Number of transactions containing every item of `itemset`, by AND-ing
/// item bitmaps and counting set bits.
inline Support count_support(const LevelMatrix& matrix, const Itemset& itemset) {
  if (itemset.empty()) return matrix.n_transactions();
  if (itemset.back() >= matrix.width()) {
    throw Error(ErrorKind::IndexOutOfRange, "item index " + std::to_string(itemset.back()) + " >= vocabulary size " +
                                                std::to_string(matrix.width()));
  }
  const std::size_t words = matrix.words_per_column();
  Support total = 0;
  for (std::size_t w = 0; w < words; ++w) {
    LevelMatrix::Word acc = ~LevelMatrix::Word{0};
    for (ItemIndex j : itemset) {
      acc &= matrix.column(j)[w];
      if (acc == 0) break;
    }
    total += static_cast<Support>(std::popcount(acc));
  }
  return total;
}

/// Counts a batch of itemsets in a single sweep.
template <std::ranges::input_range R>
  requires std::same_as<std::ranges::range_value_t<R>, Itemset>
std::map<Itemset, Support> count_many(const LevelMatrix& matrix, const R& itemsets, PassCounter& counter) {
  counter.record_pass();
  std::map<Itemset, Support> out;
  for (const Itemset& s : itemsets) {
    if (!out.contains(s)) out.emplace(s, count_support(matrix, s));
  }
  return out;
}

enum class SupportMode { Absolute, Fractional };

/// Turns a user threshold into an absolute transaction count. Fractional
/// thresholds round up: ceil(fraction * n).
inline Support resolve_threshold(const Ratio& value, SupportMode mode, std::size_t n_transactions) {
  if (mode == SupportMode::Absolute) {
    if (value.den() != 1 || value.num() < 1) {
      throw Error(ErrorKind::InvalidMinsup, "absolute minimum support must be a positive integer, got " + value.str());
    }
    return static_cast<Support>(value.num());
  }
  if (value <= Ratio(0, 1) || value > Ratio(1, 1)) {
    throw Error(ErrorKind::InvalidMinsup, "fractional minimum support must be in (0, 1], got " + value.str());
  }
  const auto count = value.ceil_times(static_cast<std::int64_t>(n_transactions));
  return static_cast<Support>(std::max<std::int64_t>(count, 1));
}

}  // namespace pincer_ml
