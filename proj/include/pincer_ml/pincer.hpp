#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "pincer_ml/border.hpp"
#include "pincer_ml/error.hpp"
#include "pincer_ml/itemset.hpp"
#include "pincer_ml/transactions.hpp"

namespace pincer_ml {

/// One iteration of a levelwise search.
struct PassRecord {
  std::size_t k = 0;
  std::size_t candidates = 0;     // |C_k| counted this iteration
  std::size_t frequent = 0;       // |L_k|, including known-frequent subsets of MFS
  std::size_t infrequent = 0;     // |S_k|
  std::size_t mfcs_counted = 0;   // MFCS members counted alongside C_k
  std::size_t mfcs = 0;           // |MFCS| after the update
  std::size_t mfs = 0;            // |MFS| after the update
  std::size_t passes = 0;         // cumulative database passes

  friend bool operator==(const PassRecord&, const PassRecord&) = default;
};

struct PincerTrace {
  std::vector<PassRecord> iterations;
  std::size_t passes = 0;
};

struct PincerResult {
  std::vector<FrequentSet> mfs;        // sorted by size, then items
  std::set<ItemIndex> frequent_items;  // union of the MFS members
  PincerTrace trace;

  ItemsetSet maximal_itemsets() const {
    ItemsetSet out;
    for (const auto& f : mfs) out.insert(f.itemset);
    return out;
  }
};

/// Border snapshot handed to an observer after each iteration.
struct PincerSnapshot {
  std::size_t k;
  const BorderState& state;
  const ItemsetSet& infrequent_so_far;
};

struct PincerOptions {
  std::function<void(const PincerSnapshot&)> observer;
};

/// Maximal frequent itemsets of `matrix` at absolute threshold `minsup`.
///
/// Each database pass counts the bottom-up candidates C_k together with the
/// not-yet-counted MFCS members. MFCS members found frequent move to the MFS;
/// the infrequent candidates S_k splinter the MFCS. The next candidates come
/// from join, Apriori prune, and recovery, then the Pincer prune drops those
/// outside the MFCS and sets aside those inside the MFS as known frequent.
/// Known-frequent sets still feed the next join but are never counted.
inline PincerResult pincer_search(const LevelMatrix& matrix, Support minsup, const PincerOptions& options = {}) {
  if (minsup < 1) throw Error(ErrorKind::InvalidMinsup, "minimum support must be >= 1");
  PincerResult result;
  if (matrix.width() == 0) return result;

  PassCounter counter;
  BorderState state;
  {
    std::vector<ItemIndex> all(matrix.width());
    for (ItemIndex j = 0; j < all.size(); ++j) all[j] = j;
    state.mfcs.insert(Itemset(std::move(all)));
  }
  std::map<Itemset, Support> known;
  ItemsetSet infrequent_so_far;

  auto promote = [&] {
    for (auto it = state.mfcs.begin(); it != state.mfcs.end();) {
      auto sup = known.find(*it);
      if (sup == known.end() || sup->second < minsup) {
        ++it;
        continue;
      }
      if (!covered_by(*it, state.mfs)) {
        std::erase_if(state.mfs, [&](const Itemset& m) { return m.proper_subset_of(*it); });
        state.mfs.insert(*it);
      }
      it = state.mfcs.erase(it);
    }
    // Members inside a confirmed maximal set need no further work.
    std::erase_if(state.mfcs, [&](const Itemset& m) { return covered_by(m, state.mfs); });
  };

  ItemsetSet to_count_candidates;
  for (ItemIndex j = 0; j < matrix.width(); ++j) to_count_candidates.insert(Itemset{j});
  ItemsetSet known_frequent;  // size-k candidates inside the MFS

  for (std::size_t k = 1;; ++k) {
    PassRecord rec;
    rec.k = k;
    rec.candidates = to_count_candidates.size();

    std::vector<Itemset> batch(to_count_candidates.begin(), to_count_candidates.end());
    for (const auto& m : state.mfcs) {
      if (!known.contains(m) && !to_count_candidates.contains(m)) {
        batch.push_back(m);
        ++rec.mfcs_counted;
      }
    }
    if (!batch.empty()) known.merge(count_many(matrix, batch, counter));

    promote();

    ItemsetSet frequent_k = known_frequent;
    ItemsetSet infrequent_k;
    for (const auto& c : to_count_candidates) {
      (known.at(c) >= minsup ? frequent_k : infrequent_k).insert(c);
    }
    infrequent_so_far.insert(infrequent_k.begin(), infrequent_k.end());
    state = mfcs_gen(std::move(state), infrequent_k);
    promote();

    rec.frequent = frequent_k.size();
    rec.infrequent = infrequent_k.size();
    rec.mfcs = state.mfcs.size();
    rec.mfs = state.mfs.size();
    rec.passes = counter.passes();
    result.trace.iterations.push_back(rec);
    if (options.observer) options.observer(PincerSnapshot{k, state, infrequent_so_far});

    ItemsetSet generated = recover(apriori_prune(join(frequent_k), frequent_k), frequent_k, state.mfs);
    known_frequent.clear();
    for (const auto& c : generated) {
      if (covered_by(c, state.mfs)) known_frequent.insert(c);
    }
    to_count_candidates = pincer_prune(generated, state);

    const bool mfcs_resolved =
        std::all_of(state.mfcs.begin(), state.mfcs.end(), [&](const Itemset& m) { return known.contains(m); });
    if (to_count_candidates.empty() && known_frequent.empty() && mfcs_resolved) break;
  }

  for (const auto& m : state.mfs) result.mfs.push_back(FrequentSet{m, known.at(m)});
  std::sort(result.mfs.begin(), result.mfs.end(),
            [](const FrequentSet& a, const FrequentSet& b) { return BySizeThenItems{}(a.itemset, b.itemset); });
  for (const auto& m : state.mfs) result.frequent_items.insert(m.begin(), m.end());
  result.trace.passes = counter.passes();
  return result;
}

}  // namespace pincer_ml
