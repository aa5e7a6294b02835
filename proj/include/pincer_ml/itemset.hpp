#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

namespace pincer_ml {

using ItemIndex = std::uint32_t;
using Support = std::size_t;

/// Strictly increasing sequence of vocabulary indices.
class Itemset {
 public:
  Itemset() = default;
  Itemset(std::initializer_list<ItemIndex> items) : items_(items) { normalize(); }
  explicit Itemset(std::vector<ItemIndex> items) : items_(std::move(items)) { normalize(); }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  ItemIndex operator[](std::size_t i) const noexcept { return items_[i]; }
  ItemIndex back() const noexcept { return items_.back(); }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  std::span<const ItemIndex> items() const noexcept { return items_; }

  bool contains(ItemIndex item) const noexcept { return std::binary_search(items_.begin(), items_.end(), item); }

  /// this ⊆ other
  bool subset_of(const Itemset& other) const noexcept {
    return size() <= other.size() && std::includes(other.begin(), other.end(), begin(), end());
  }
  bool proper_subset_of(const Itemset& other) const noexcept { return size() < other.size() && subset_of(other); }

  Itemset with(ItemIndex item) const {
    Itemset out = *this;
    auto pos = std::lower_bound(out.items_.begin(), out.items_.end(), item);
    if (pos == out.items_.end() || *pos != item) out.items_.insert(pos, item);
    return out;
  }

  Itemset without(ItemIndex item) const {
    Itemset out = *this;
    auto pos = std::lower_bound(out.items_.begin(), out.items_.end(), item);
    if (pos != out.items_.end() && *pos == item) out.items_.erase(pos);
    return out;
  }

  /// Shares the first `n` items with `other`.
  bool same_prefix(const Itemset& other, std::size_t n) const noexcept {
    return size() >= n && other.size() >= n && std::equal(begin(), begin() + n, other.begin());
  }

  friend bool operator==(const Itemset&, const Itemset&) = default;
  // Lexicographic by index; ties broken by length.
  friend std::strong_ordering operator<=>(const Itemset& a, const Itemset& b) noexcept {
    return a.items_ <=> b.items_;
  }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<ItemIndex> items_;
};

using ItemsetSet = std::set<Itemset>;

/// Output order for itemset listings: by size, then lexicographic.
struct BySizeThenItems {
  bool operator()(const Itemset& a, const Itemset& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct FrequentSet {
  Itemset itemset;
  Support support = 0;

  friend bool operator==(const FrequentSet&, const FrequentSet&) = default;
};

/// X ⊆ some member of `family`.
inline bool covered_by(const Itemset& x, const ItemsetSet& family) {
  return std::any_of(family.begin(), family.end(), [&](const Itemset& m) { return x.subset_of(m); });
}

/// Drops members that are subsets of other members.
inline ItemsetSet maximal_members(const ItemsetSet& family) {
  std::vector<const Itemset*> by_size;
  for (const auto& s : family) by_size.push_back(&s);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Itemset* a, const Itemset* b) { return a->size() > b->size(); });
  ItemsetSet out;
  std::vector<const Itemset*> kept;
  for (const Itemset* s : by_size) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Itemset* k) { return s->subset_of(*k); });
    if (!dominated) {
      kept.push_back(s);
      out.insert(*s);
    }
  }
  return out;
}

inline bool is_antichain(const ItemsetSet& family) {
  for (auto a = family.begin(); a != family.end(); ++a) {
    for (auto b = family.begin(); b != family.end(); ++b) {
      if (a != b && a->subset_of(*b)) return false;
    }
  }
  return true;
}

}  // namespace pincer_ml

template <>
struct std::hash<pincer_ml::Itemset> {
  std::size_t operator()(const pincer_ml::Itemset& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto i : s) h = (h ^ i) * 1099511628211ULL;
    return h;
  }
};
