#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "pincer_ml/error.hpp"
#include "pincer_ml/itemset.hpp"

namespace pincer_ml {

/// The two antichains driving the bidirectional search: `mfcs` bounds the
/// maximal frequent sets from above, `mfs` holds the ones already confirmed.
struct BorderState {
  ItemsetSet mfcs;
  ItemsetSet mfs;

  friend bool operator==(const BorderState&, const BorderState&) = default;
};

namespace detail {

inline std::size_t uniform_size(const ItemsetSet& family, const char* what) {
  if (family.empty()) return 0;
  const std::size_t k = family.begin()->size();
  for (const auto& s : family) {
    if (s.size() != k) {
      throw Error(ErrorKind::MixedSizes, std::string(what) + " mixes itemsets of size " + std::to_string(k) +
                                             " and " + std::to_string(s.size()));
    }
  }
  return k;
}

}  // namespace detail

/// Prefix join: pairs of k-itemsets sharing their first k-1 items yield a
/// (k+1)-itemset. For k = 1 this is every pair.
inline ItemsetSet join(const ItemsetSet& frequent_k) {
  const std::size_t k = detail::uniform_size(frequent_k, "join input");
  ItemsetSet out;
  if (k == 0) return out;
  // std::set order groups itemsets with a common (k-1)-prefix contiguously.
  for (auto a = frequent_k.begin(); a != frequent_k.end(); ++a) {
    for (auto b = std::next(a); b != frequent_k.end() && a->same_prefix(*b, k - 1); ++b) {
      out.insert(a->with(b->back()));
    }
  }
  return out;
}

/// Keeps candidates whose every k-subset is in `frequent_k`.
inline ItemsetSet apriori_prune(const ItemsetSet& candidates, const ItemsetSet& frequent_k) {
  const std::size_t k = detail::uniform_size(frequent_k, "frequent set");
  const std::size_t k1 = detail::uniform_size(candidates, "candidate set");
  if (!candidates.empty() && !frequent_k.empty() && k1 != k + 1) {
    throw Error(ErrorKind::MixedSizes, "candidates of size " + std::to_string(k1) + " against frequent sets of size " +
                                           std::to_string(k));
  }
  ItemsetSet out;
  for (const auto& c : candidates) {
    bool all_frequent = std::all_of(c.begin(), c.end(), [&](ItemIndex drop) { return frequent_k.contains(c.without(drop)); });
    if (all_frequent) out.insert(c);
  }
  return out;
}

/// Splinters every MFCS member that contains a newly found infrequent set:
/// the member is replaced by its one-item-smaller subsets that avoid that set,
/// skipping any already covered by another member and the empty set. The
/// result is an antichain and no member contains any set in `infrequent`.
inline BorderState mfcs_gen(BorderState state, const ItemsetSet& infrequent) {
  if (infrequent.empty()) return state;
  std::vector<Itemset> mfcs(state.mfcs.begin(), state.mfcs.end());
  for (const auto& s : infrequent) {
    std::vector<Itemset> hit;
    std::vector<Itemset> kept;
    for (auto& m : mfcs) (s.subset_of(m) ? hit : kept).push_back(std::move(m));
    mfcs = std::move(kept);
    for (std::size_t h = 0; h < hit.size(); ++h) {
      const Itemset& m = hit[h];
      for (ItemIndex e : s) {
        Itemset splinter = m.without(e);
        if (splinter.empty()) continue;
        auto covers = [&](const Itemset& other) { return splinter.subset_of(other); };
        // Members of `hit` not yet processed are still part of the MFCS.
        bool covered = std::any_of(mfcs.begin(), mfcs.end(), covers) ||
                       std::any_of(hit.begin() + static_cast<std::ptrdiff_t>(h) + 1, hit.end(), covers);
        if (!covered) mfcs.push_back(std::move(splinter));
      }
    }
  }
  state.mfcs = maximal_members(ItemsetSet(mfcs.begin(), mfcs.end()));
  return state;
}

/// Restores (k+1)-candidates lying inside confirmed maximal sets that the
/// prefix join cannot produce.
inline ItemsetSet recover(ItemsetSet candidates, const ItemsetSet& frequent_k, const ItemsetSet& mfs) {
  for (const auto& l : frequent_k) {
    if (l.empty()) continue;
    const Itemset prefix(std::vector<ItemIndex>(l.begin(), l.end() - 1));
    for (const auto& m : mfs) {
      if (!prefix.subset_of(m)) continue;
      for (ItemIndex item : m) {
        if (item <= l.back()) continue;
        Itemset extended = l.with(item);
        if (extended.subset_of(m)) candidates.insert(std::move(extended));
      }
    }
  }
  return candidates;
}

/// Drops candidates outside every MFCS member (cannot be frequent) and
/// candidates inside an MFS member (already known frequent).
inline ItemsetSet pincer_prune(const ItemsetSet& candidates, const BorderState& state) {
  ItemsetSet out;
  for (const auto& c : candidates) {
    if (covered_by(c, state.mfcs) && !covered_by(c, state.mfs)) out.insert(c);
  }
  return out;
}

}  // namespace pincer_ml
