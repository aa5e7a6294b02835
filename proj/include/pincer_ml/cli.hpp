#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pincer_ml/baselines.hpp"
#include "pincer_ml/error.hpp"
#include "pincer_ml/multilevel.hpp"
#include "pincer_ml/oracle.hpp"
#include "pincer_ml/ratio.hpp"
#include "pincer_ml/report.hpp"
#include "pincer_ml/synth.hpp"
#include "pincer_ml/taxonomy.hpp"
#include "pincer_ml/transactions.hpp"

namespace pincer_ml::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kRuntimeError = 1,
  kConfigError = 2,
  kOracleLimit = 3,
};

enum class OutputFormat { Json, Text };

struct RunConfig {
  std::string taxonomy_path;
  std::string transactions_path;
  std::string minsup_text = "3,2,2";
  std::vector<Ratio> minsup_per_level;
  Ratio min_conf{1, 2};
  std::string min_conf_text = "0.5";
  DescentPolicy descent_policy = DescentPolicy::FrequentParents;
  SupportMode support_mode = SupportMode::Absolute;
  int total_levels = kDefaultLevels;
  std::string output_path;
  OutputFormat output_format = OutputFormat::Json;
};

/// Test seam: lets a test corrupt the engine's per-level output before the
/// oracle comparison runs.
struct Hooks {
  std::function<void(LevelResult&)> tamper;
};

/// Raised for problems with flags or input paths (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<Ratio> parse_minsup_list(const std::string& text) {
  std::vector<Ratio> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(Ratio::parse(part));
    } catch (const Error& e) {
      throw ConfigError(std::string("--minsup: ") + e.what());
    }
  }
  if (out.empty()) throw ConfigError("--minsup: no values given");
  return out;
}

struct LoadedInput {
  TransactionDB db;
  LevelConfig level_config;
  std::vector<std::string> warnings;
};

inline std::ifstream open_input(const std::string& path, const char* what) {
  if (path.empty()) throw ConfigError(std::string("missing --") + what + " path");
  if (!std::filesystem::is_regular_file(path)) throw ConfigError(std::string(what) + " file not found: " + path);
  std::ifstream in(path);
  if (!in) throw ConfigError(std::string("cannot read ") + what + " file: " + path);
  return in;
}

inline LoadedInput load_input(const RunConfig& cfg) {
  auto tax_in = open_input(cfg.taxonomy_path, "taxonomy");
  auto txn_in = open_input(cfg.transactions_path, "transactions");
  LoadedInput input;
  Taxonomy tax = load_taxonomy_csv(tax_in, cfg.total_levels);
  input.db = load_transactions_csv(txn_in, tax);

  LevelConfig lc;
  lc.total_levels = cfg.total_levels;
  lc.descent_policy = cfg.descent_policy;
  lc.min_conf = cfg.min_conf;
  try {
    for (const auto& r : cfg.minsup_per_level) {
      lc.minsup_per_level.push_back(resolve_threshold(r, cfg.support_mode, input.db.size()));
    }
    input.warnings = lc.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  input.level_config = std::move(lc);
  return input;
}

inline report::Json meta_json(const RunConfig& cfg, const std::string& command, const LevelConfig& lc) {
  report::Json minsup_in = report::Json::array();
  for (const auto& r : cfg.minsup_per_level) minsup_in.push_back(r.str());
  return report::Json{{"tool", "pincer-ml"},
                      {"version", kVersion},
                      {"command", command},
                      {"taxonomy", cfg.taxonomy_path},
                      {"transactions", cfg.transactions_path},
                      {"config",
                       report::Json{{"minsup", minsup_in},
                                    {"minsup_resolved", lc.minsup_per_level},
                                    {"min_conf", cfg.min_conf.str()},
                                    {"policy", std::string(to_string(cfg.descent_policy))},
                                    {"support_mode", cfg.support_mode == SupportMode::Absolute ? "absolute" : "fractional"},
                                    {"levels", cfg.total_levels}}}};
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output_path, std::ios::binary);
  if (!f) throw ConfigError("cannot write output file: " + cfg.output_path);
  f << text;
}

inline report::Json with_meta(report::Json meta, const report::Json& body) {
  report::Json doc{{"meta", std::move(meta)}};
  for (const auto& [key, value] : body.items()) doc[key] = value;
  return doc;
}

inline int cmd_mine(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  LoadedInput input = load_input(cfg);
  for (const auto& w : input.warnings) err << "warning: " << w << "\n";
  const MultiLevelResult result = mine_multilevel(input.db, input.level_config);
  if (cfg.output_format == OutputFormat::Text) {
    emit(cfg, report::render_mining_text(result), out);
  } else {
    emit(cfg, with_meta(meta_json(cfg, "mine", input.level_config), report::mining_body(result)).dump(2) + "\n", out);
  }
  return kOk;
}

inline int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  LoadedInput input = load_input(cfg);
  for (const auto& w : input.warnings) err << "warning: " << w << "\n";
  const MultiLevelResult pincer = mine_multilevel(input.db, input.level_config);
  const MultiLevelResult baseline = ml_t2l1(input.db, input.level_config);
  const ComparisonReport rep = compare(pincer, baseline);
  if (cfg.output_format == OutputFormat::Text) {
    emit(cfg, report::render_comparison_text(rep), out);
  } else {
    emit(cfg, with_meta(meta_json(cfg, "compare", input.level_config), report::comparison_body(rep)).dump(2) + "\n",
         out);
  }
  return kOk;
}

inline int cmd_oracle_check(const RunConfig& cfg, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  LoadedInput input = load_input(cfg);
  MultiLevelResult result = mine_multilevel(input.db, input.level_config);
  for (auto& lr : result.levels) {
    if (hooks.tamper) hooks.tamper(lr);
    const auto expected = oracle::brute_force(lr.matrix, lr.minsup);

    std::map<Itemset, Support> got_max;
    for (const auto& f : lr.maximal) got_max.emplace(f.itemset, f.support);
    std::map<Itemset, Support> want_max;
    for (const auto& m : expected.maximal) want_max.emplace(m, expected.frequent.at(m));
    std::map<Itemset, Support> got_freq;
    for (const auto& f : lr.frequent) got_freq.emplace(f.itemset, f.support);

    auto first_difference = [&](const std::map<Itemset, Support>& got, const std::map<Itemset, Support>& want,
                                const char* what) -> bool {
      for (const auto& [s, sup] : want) {
        auto it = got.find(s);
        if (it == got.end() || it->second != sup) {
          err << "level " << lr.level << ": " << what << " mismatch at " << report::itemset_text(lr.matrix, s)
              << ": oracle support " << sup << ", engine "
              << (it == got.end() ? std::string("missing") : std::to_string(it->second)) << "\n";
          return true;
        }
      }
      for (const auto& [s, sup] : got) {
        if (!want.contains(s)) {
          err << "level " << lr.level << ": " << what << " mismatch at " << report::itemset_text(lr.matrix, s)
              << ": engine reports support " << sup << ", oracle does not list it\n";
          return true;
        }
      }
      return false;
    };
    if (first_difference(got_max, want_max, "maximal") || first_difference(got_freq, expected.frequent, "frequent")) {
      out << "FAIL\n";
      return kRuntimeError;
    }
    out << "level " << lr.level << ": ok (" << want_max.size() << " maximal, " << expected.frequent.size()
        << " frequent)\n";
  }
  out << "PASS\n";
  return kOk;
}

struct GenOptions {
  synth::SynthSpec spec;
  std::optional<std::uint64_t> seed;
};

inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PINCER_ML_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("PINCER_ML_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline int cmd_gen(const RunConfig& cfg, const GenOptions& opts, std::ostream& out) {
  if (cfg.taxonomy_path.empty() || cfg.transactions_path.empty()) {
    throw ConfigError("gen needs --taxonomy and --transactions output paths");
  }
  synth::SynthData data;
  try {
    data = synth::generate(opts.spec, resolve_seed(opts.seed));
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  std::ofstream tax(cfg.taxonomy_path, std::ios::binary);
  std::ofstream txn(cfg.transactions_path, std::ios::binary);
  if (!tax || !txn) throw ConfigError("cannot write generator output");
  tax << "code,name\n";
  for (const auto& r : data.taxonomy) tax << r.code << "," << csv_field(r.name) << "\n";
  txn << "tid,item\n";
  for (const auto& r : data.transactions) txn << r.tid << "," << r.item << "\n";
  out << "wrote " << data.taxonomy.size() << " items and " << opts.spec.transactions << " transactions\n";
  return kOk;
}

/// Entry point shared by the executable and in-process tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const Hooks& hooks = {}) {
  CLI::App app{"Multilevel association-rule mining with Pincer search", "pincer-ml"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string policy = "frequent-parents";
  std::string mode = "absolute";
  std::string format = "json";
  GenOptions gen;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--taxonomy", cfg.taxonomy_path, "Taxonomy CSV (code,name)");
    sub->add_option("--transactions", cfg.transactions_path, "Transactions CSV (tid,item)");
    sub->add_option("--levels", cfg.total_levels, "Code width / number of taxonomy levels")->capture_default_str();
  };
  auto add_mining = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--minsup", cfg.minsup_text, "Per-level minimum support, comma separated")->capture_default_str();
    sub->add_option("--min-conf", cfg.min_conf_text, "Minimum rule confidence")->capture_default_str();
    sub->add_option("--policy", policy, "Level descent policy")
        ->check(CLI::IsMember({"frequent-parents", "maximal-itemset-items"}))
        ->capture_default_str();
    sub->add_option("--support-mode", mode, "Interpret --minsup as counts or fractions")
        ->check(CLI::IsMember({"absolute", "fractional"}))
        ->capture_default_str();
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--out", cfg.output_path, "Write the report here instead of stdout");
  };

  auto* mine = app.add_subcommand("mine", "Mine frequent itemsets and rules level by level");
  add_mining(mine);
  auto* cmp = app.add_subcommand("compare", "Compare Pincer search against per-level Apriori");
  add_mining(cmp);
  auto* check = app.add_subcommand("oracle-check", "Verify the engine against brute-force enumeration");
  add_mining(check);
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic taxonomy and transaction file");
  add_common(gen_cmd);
  gen_cmd->add_option("--n-items", gen.spec.items, "Number of leaf items")->capture_default_str();
  gen_cmd->add_option("--n-transactions", gen.spec.transactions, "Number of transactions")->capture_default_str();
  gen_cmd->add_option("--density", gen.spec.density, "Per-item noise probability")->capture_default_str();
  gen_cmd->add_option("--plant", gen.spec.planted, "Size of a planted itemset (0 = none)")->capture_default_str();
  gen_cmd->add_option("--plant-rate", gen.spec.planted_rate, "Share of transactions holding the planted set")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed (default: $PINCER_ML_SEED or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    cfg.descent_policy = parse_policy(policy);
    cfg.support_mode = mode == "fractional" ? SupportMode::Fractional : SupportMode::Absolute;
    cfg.output_format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
    if (*gen_cmd) return cmd_gen(cfg, gen, out);
    cfg.minsup_per_level = parse_minsup_list(cfg.minsup_text);
    try {
      cfg.min_conf = Ratio::parse(cfg.min_conf_text);
    } catch (const Error& e) {
      throw ConfigError(std::string("--min-conf: ") + e.what());
    }
    if (*mine) return cmd_mine(cfg, out, err);
    if (*cmp) return cmd_compare(cfg, out, err);
    return cmd_oracle_check(cfg, out, err, hooks);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::VocabularyTooLarge: return kOracleLimit;
      case ErrorKind::InvalidConfig:
      case ErrorKind::InvalidMinsup:
      case ErrorKind::InvalidConfidence: return kConfigError;
      default: return kRuntimeError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}

}  // namespace pincer_ml::cli
