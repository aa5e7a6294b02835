#pragma once

#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pincer_ml/baselines.hpp"
#include "pincer_ml/multilevel.hpp"
#include "pincer_ml/rules.hpp"

namespace pincer_ml::report {

using Json = nlohmann::ordered_json;

inline Json itemset_json(const LevelMatrix& matrix, const Itemset& s) {
  Json arr = Json::array();
  for (const auto& code : matrix.codes_of(s)) arr.push_back(code.text());
  return arr;
}

inline std::string itemset_text(const LevelMatrix& matrix, const Itemset& s) {
  std::string out = "{";
  for (const auto& code : matrix.codes_of(s)) out += (out.size() > 1 ? ", " : "") + code.text();
  return out + "}";
}

inline Json trace_json(const std::vector<PassRecord>& trace) {
  Json arr = Json::array();
  for (const auto& r : trace) {
    arr.push_back(Json{{"k", r.k},
                       {"candidates", r.candidates},
                       {"mfcs_counted", r.mfcs_counted},
                       {"frequent", r.frequent},
                       {"infrequent", r.infrequent},
                       {"mfcs", r.mfcs},
                       {"mfs", r.mfs},
                       {"passes", r.passes}});
  }
  return arr;
}

inline Json level_json(const LevelResult& lr, std::size_t n_transactions) {
  Json vocab = Json::array();
  for (const auto& c : lr.vocabulary()) vocab.push_back(c.text());
  Json maximal = Json::array();
  for (const auto& f : lr.maximal) maximal.push_back(Json{{"items", itemset_json(lr.matrix, f.itemset)}, {"support", f.support}});
  Json frequent = Json::array();
  for (const auto& f : lr.frequent) {
    frequent.push_back(Json{{"items", itemset_json(lr.matrix, f.itemset)},
                            {"support", f.support},
                            {"fraction", support_fraction(f.support, n_transactions).str()}});
  }
  Json rules = Json::array();
  for (const auto& r : lr.rules) {
    rules.push_back(Json{{"antecedent", itemset_json(lr.matrix, r.antecedent)},
                         {"consequent", itemset_json(lr.matrix, r.consequent)},
                         {"support", r.support},
                         {"confidence", r.confidence.str()},
                         {"confidence_value", r.confidence.value()}});
  }
  return Json{{"level", lr.level},
              {"minsup", lr.minsup},
              {"vocabulary", vocab},
              {"maximal", maximal},
              {"frequent", frequent},
              {"rules", rules},
              {"trace", trace_json(lr.trace)},
              {"passes", lr.passes},
              {"expansion_passes", lr.expansion_passes}};
}

/// Comparable body of a mining report (everything except `meta`).
inline Json mining_body(const MultiLevelResult& result) {
  Json levels = Json::array();
  for (const auto& lr : result.levels) levels.push_back(level_json(lr, result.n_transactions));
  return Json{{"algorithm", result.algorithm},
              {"n_transactions", result.n_transactions},
              {"levels", levels},
              {"totals",
               Json{{"passes", result.total_passes()},
                    {"expansion_passes", result.total_expansion_passes()},
                    {"candidates", result.total_candidates()},
                    {"mfcs_counted", result.total_mfcs_counted()}}}};
}

inline Json comparison_body(const ComparisonReport& rep) {
  const std::string& a = rep.algorithm_a;
  const std::string& b = rep.algorithm_b;
  Json levels = Json::array();
  for (const auto& lp : rep.level_passes) {
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
      if (r.level != lp.level) continue;
      rows.push_back(Json{{"k", r.k},
                          {"candidates", Json{{a, r.candidates_a}, {b, r.candidates_b}}},
                          {"mfcs_counted", Json{{a, r.mfcs_counted_a}, {b, r.mfcs_counted_b}}},
                          {"frequent", Json{{a, r.frequent_a}, {b, r.frequent_b}}},
                          {"delta", Json{{"candidates", r.candidates_delta()}, {"frequent", r.frequent_delta()}}}});
    }
    levels.push_back(Json{{"level", lp.level}, {"passes", Json{{a, lp.passes_a}, {b, lp.passes_b}}}, {"rows", rows}});
  }
  return Json{{"algorithms", Json::array({a, b})},
              {"levels", levels},
              {"totals",
               Json{{"passes", Json{{a, rep.total_passes_a}, {b, rep.total_passes_b}}},
                    {"expansion_passes", Json{{a, rep.expansion_passes_a}, {b, rep.expansion_passes_b}}},
                    {"candidates", Json{{a, rep.total_candidates_a}, {b, rep.total_candidates_b}}}}}};
}

inline std::string render_mining_text(const MultiLevelResult& result) {
  std::ostringstream os;
  os << "algorithm: " << result.algorithm << "\ntransactions: " << result.n_transactions << "\n";
  for (const auto& lr : result.levels) {
    os << "\n== level " << lr.level << " (minsup " << lr.minsup << ", " << lr.vocabulary().size() << " items, "
       << lr.passes << " passes + " << lr.expansion_passes << " expansion) ==\n";
    os << "maximal:\n";
    for (const auto& f : lr.maximal) os << "  " << itemset_text(lr.matrix, f.itemset) << " = " << f.support << "\n";
    os << "frequent: " << lr.frequent.size() << " itemsets\n";
    for (const auto& f : lr.frequent) os << "  " << itemset_text(lr.matrix, f.itemset) << " = " << f.support << "\n";
    os << "rules: " << lr.rules.size() << "\n";
    for (const auto& r : lr.rules) {
      os << "  " << itemset_text(lr.matrix, r.antecedent) << " -> " << itemset_text(lr.matrix, r.consequent)
         << "  support " << r.support << "  confidence " << r.confidence << " (" << std::fixed
         << std::setprecision(3) << r.confidence.value() << ")\n";
      os.unsetf(std::ios::floatfield);
    }
  }
  os << "\ntotal passes: " << result.total_passes() << " (+" << result.total_expansion_passes()
     << " expansion), candidates: " << result.total_candidates() << "\n";
  return os.str();
}

inline std::string render_comparison_text(const ComparisonReport& rep) {
  std::ostringstream os;
  const auto& a = rep.algorithm_a;
  const auto& b = rep.algorithm_b;
  for (const auto& lp : rep.level_passes) {
    os << "== level " << lp.level << " ==  passes " << a << "=" << lp.passes_a << " " << b << "=" << lp.passes_b << "\n";
    os << std::left << std::setw(6) << "k" << std::setw(30) << ("candidates " + a + "/" + b)
       << ("frequent " + a + "/" + b) << "\n";
    for (const auto& r : rep.rows) {
      if (r.level != lp.level) continue;
      os << std::left << std::setw(6) << r.k << std::setw(30)
         << (std::to_string(r.candidates_a) + "/" + std::to_string(r.candidates_b))
         << (std::to_string(r.frequent_a) + "/" + std::to_string(r.frequent_b)) << "\n";
    }
  }
  os << "total passes " << a << "=" << rep.total_passes_a << " " << b << "=" << rep.total_passes_b << "\n";
  os << "total candidates " << a << "=" << rep.total_candidates_a << " " << b << "=" << rep.total_candidates_b << "\n";
  return os.str();
}

}  // namespace pincer_ml::report
