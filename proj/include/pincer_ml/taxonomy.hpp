#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pincer_ml/csv.hpp"
#include "pincer_ml/error.hpp"

namespace pincer_ml {

inline constexpr char kWildcard = '*';
inline constexpr int kDefaultLevels = 3;

/// Hierarchical item identifier: one branch symbol per level, most
/// significant first, padded with `*` up to the fixed code width
/// ("A11", "C1*", "E**").
class ItemCode {
 public:
  ItemCode() = default;

  /// Fixed width of the code (number of taxonomy levels).
  int total_levels() const noexcept { return static_cast<int>(text_.size()); }
  /// Number of non-wildcard symbols.
  int depth() const noexcept { return depth_; }
  bool is_leaf() const noexcept { return depth_ == total_levels(); }

  std::string_view path() const noexcept { return std::string_view(text_).substr(0, depth_); }
  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const ItemCode&, const ItemCode&) = default;
  friend std::strong_ordering operator<=>(const ItemCode& a, const ItemCode& b) noexcept {
    return a.text_ <=> b.text_;
  }

 private:
  friend ItemCode parse_code(std::string_view, int);
  friend ItemCode generalize(const ItemCode&, int);

  ItemCode(std::string text, int depth) : text_(std::move(text)), depth_(depth) {}

  std::string text_;
  int depth_ = 0;
};

inline ItemCode parse_code(std::string_view text, int total_levels = kDefaultLevels) {
  const std::string shown(text);
  if (total_levels < 1) throw Error(ErrorKind::LevelOutOfRange, "total_levels must be >= 1");
  if (static_cast<int>(text.size()) != total_levels) {
    throw Error(ErrorKind::BadLength, "code '" + shown + "' has length " + std::to_string(text.size()) +
                                          ", expected " + std::to_string(total_levels));
  }
  int depth = 0;
  bool in_suffix = false;
  for (char c : text) {
    if (c == kWildcard) {
      in_suffix = true;
    } else if (std::isalnum(static_cast<unsigned char>(c))) {
      if (in_suffix) throw Error(ErrorKind::WildcardNotSuffix, "code '" + shown + "'");
      ++depth;
    } else {
      throw Error(ErrorKind::BadSymbol, "code '" + shown + "' contains '" + std::string(1, c) + "'");
    }
  }
  if (depth == 0) throw Error(ErrorKind::EmptyCode, "code '" + shown + "' has no branch symbols");
  return ItemCode(shown, depth);
}

/// Ancestor of `code` at `level`; identity when level == code.depth().
inline ItemCode generalize(const ItemCode& code, int level) {
  if (level < 1 || level > code.depth()) {
    throw Error(ErrorKind::LevelOutOfRange, "cannot generalize '" + code.text() + "' to level " +
                                                std::to_string(level));
  }
  std::string text = code.text();
  std::fill(text.begin() + level, text.end(), kWildcard);
  return ItemCode(std::move(text), level);
}

/// Strict ancestry: `a` is shallower than `b` and a prefix of it.
inline bool is_ancestor(const ItemCode& a, const ItemCode& b) noexcept {
  return a.total_levels() == b.total_levels() && a.depth() < b.depth() && b.path().starts_with(a.path());
}

struct TaxonomyRecord {
  std::string code;
  std::string name;
  std::size_t position = 0;  // source line or record index, used in diagnostics
};

/// Code-to-name catalog closed under ancestors. Immutable once loaded.
class Taxonomy {
 public:
  int total_levels() const noexcept { return total_levels_; }
  const std::vector<ItemCode>& leaves() const noexcept { return leaves_; }
  bool contains(const ItemCode& code) const { return names_.contains(code); }
  bool is_leaf(const ItemCode& code) const { return code.is_leaf() && contains(code); }

  const std::string& name_of(const ItemCode& code) const {
    auto it = names_.find(code);
    if (it == names_.end()) throw Error(ErrorKind::UnknownItem, "'" + code.text() + "' is not in the taxonomy");
    return it->second;
  }

  /// All codes of depth `level`, sorted by text.
  std::vector<ItemCode> codes_at(int level) const {
    if (level < 1 || level > total_levels_) {
      throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(level));
    }
    std::vector<ItemCode> out;
    for (const auto& [code, name] : names_) {
      if (code.depth() == level) out.push_back(code);
    }
    return out;
  }

  const std::map<ItemCode, std::string>& names() const noexcept { return names_; }

 private:
  friend Taxonomy load_taxonomy(const std::vector<TaxonomyRecord>&, int);

  int total_levels_ = kDefaultLevels;
  std::vector<ItemCode> leaves_;
  std::map<ItemCode, std::string> names_;
};

inline Taxonomy load_taxonomy(const std::vector<TaxonomyRecord>& records, int total_levels = kDefaultLevels) {
  if (records.empty()) throw Error(ErrorKind::EmptyTaxonomy, "no taxonomy records");
  Taxonomy tax;
  tax.total_levels_ = total_levels;
  std::map<ItemCode, std::string> explicit_names;
  std::map<ItemCode, std::size_t> first_seen;
  for (const auto& rec : records) {
    ItemCode code;
    try {
      code = parse_code(rec.code, total_levels);
    } catch (const Error& e) {
      throw Error(e.kind(), "record " + std::to_string(rec.position) + ": " + e.what());
    }
    if (auto [it, inserted] = first_seen.emplace(code, rec.position); !inserted) {
      throw Error(ErrorKind::DuplicateCode, "'" + code.text() + "' at record " + std::to_string(rec.position) +
                                                " already defined at record " + std::to_string(it->second));
    }
    explicit_names.emplace(code, rec.name);
    if (code.is_leaf()) tax.leaves_.push_back(code);
  }
  if (tax.leaves_.empty()) throw Error(ErrorKind::EmptyTaxonomy, "no fully-specified codes");
  std::sort(tax.leaves_.begin(), tax.leaves_.end());

  for (const auto& leaf : tax.leaves_) {
    for (int level = 1; level <= total_levels; ++level) {
      const ItemCode anc = generalize(leaf, level);
      auto it = explicit_names.find(anc);
      tax.names_.emplace(anc, it != explicit_names.end() ? it->second : anc.text());
    }
  }
  for (const auto& [code, name] : explicit_names) {
    if (!tax.names_.contains(code)) {
      throw Error(ErrorKind::OrphanCode, "'" + code.text() + "' at record " + std::to_string(first_seen[code]) +
                                             " has no fully-specified descendant");
    }
  }
  return tax;
}

/// Reads a `code,name` CSV.
inline Taxonomy load_taxonomy_csv(std::istream& in, int total_levels = kDefaultLevels) {
  std::vector<TaxonomyRecord> records;
  for (auto& row : csv::read(in, {"code", "name"})) {
    records.push_back(TaxonomyRecord{std::move(row.fields[0]), std::move(row.fields[1]), row.line});
  }
  return load_taxonomy(records, total_levels);
}

}  // namespace pincer_ml

template <>
struct std::hash<pincer_ml::ItemCode> {
  std::size_t operator()(const pincer_ml::ItemCode& c) const noexcept { return std::hash<std::string>{}(c.text()); }
};
