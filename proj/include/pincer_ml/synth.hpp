#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pincer_ml/error.hpp"
#include "pincer_ml/taxonomy.hpp"
#include "pincer_ml/transactions.hpp"

namespace pincer_ml::synth {

/// Synthetic three-level basket data. Leaf i gets code
/// `<alphabet[i/4]><1+(i/2)%2><1+i%2>`, so every level-1 branch has two
/// level-2 children with two leaves each.
struct SynthSpec {
  std::size_t items = 10;
  std::size_t transactions = 40;
  double density = 0.2;        // chance each leaf appears as noise
  std::size_t planted = 0;     // leaves 0..planted-1 form a planted itemset
  double planted_rate = 0.4;   // chance a transaction contains the planted itemset
};

inline constexpr std::string_view kAlphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

inline std::string leaf_code(std::size_t i) {
  if (i / 4 >= kAlphabet.size()) throw Error(ErrorKind::InvalidConfig, "too many synthetic items");
  return std::string{kAlphabet[i / 4], static_cast<char>('1' + (i / 2) % 2), static_cast<char>('1' + i % 2)};
}

struct SynthData {
  std::vector<TaxonomyRecord> taxonomy;
  std::vector<TransactionRecord> transactions;
};

inline SynthData generate(const SynthSpec& spec, std::uint64_t seed) {
  if (spec.items == 0) throw Error(ErrorKind::InvalidConfig, "need at least one item");
  if (spec.planted > spec.items) throw Error(ErrorKind::InvalidConfig, "planted itemset larger than item count");
  if (spec.density < 0.0 || spec.density > 1.0 || spec.planted_rate < 0.0 || spec.planted_rate > 1.0) {
    throw Error(ErrorKind::InvalidConfig, "rates must lie in [0, 1]");
  }
  SynthData data;
  for (std::size_t i = 0; i < spec.items; ++i) {
    data.taxonomy.push_back(TaxonomyRecord{leaf_code(i), "item " + std::to_string(i), i + 1});
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution noise(spec.density);
  std::bernoulli_distribution plant(spec.planted_rate);
  std::size_t position = 0;
  for (std::size_t t = 0; t < spec.transactions; ++t) {
    const std::string tid = "T" + std::to_string(t + 1);
    const bool planted = spec.planted > 0 && plant(rng);
    bool any = false;
    for (std::size_t i = 0; i < spec.items; ++i) {
      const bool hit = noise(rng);
      if ((planted && i < spec.planted) || hit) {
        data.transactions.push_back(TransactionRecord{tid, leaf_code(i), ++position});
        any = true;
      }
    }
    if (!any) {
      // Every transaction holds at least one item so tids are never lost.
      std::uniform_int_distribution<std::size_t> pick(0, spec.items - 1);
      data.transactions.push_back(TransactionRecord{tid, leaf_code(pick(rng)), ++position});
    }
  }
  return data;
}

}  // namespace pincer_ml::synth
