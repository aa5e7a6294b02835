// Mines the bundled bookstore data level by level and prints the maximal
// frequent itemsets together with the strongest rules.

#include <fstream>
#include <iostream>

#include "pincer_ml/pincer_ml.hpp"

int main() {
  using namespace pincer_ml;
  std::ifstream tax_in(PINCER_ML_DATA_DIR "/bookstore_taxonomy.csv");
  std::ifstream txn_in(PINCER_ML_DATA_DIR "/bookstore.csv");
  const Taxonomy taxonomy = load_taxonomy_csv(tax_in);
  const TransactionDB db = load_transactions_csv(txn_in, taxonomy);

  LevelConfig config;
  config.minsup_per_level = {3, 2, 2};
  config.descent_policy = DescentPolicy::MaximalItemsetItems;
  config.min_conf = Ratio(4, 5);

  for (const auto& level : mine_multilevel(db, config).levels) {
    std::cout << "level " << level.level << " (" << level.passes << " passes)\n";
    for (const auto& m : level.maximal) {
      std::cout << "  maximal";
      for (const auto& code : level.matrix.codes_of(m.itemset)) std::cout << ' ' << code.text();
      std::cout << "  support " << m.support << '\n';
    }
    for (const auto& r : level.rules) {
      std::cout << "  rule";
      for (const auto& code : level.matrix.codes_of(r.antecedent)) std::cout << ' ' << code.text();
      std::cout << " ->";
      for (const auto& code : level.matrix.codes_of(r.consequent)) std::cout << ' ' << code.text();
      std::cout << "  confidence " << r.confidence << '\n';
    }
  }
}
