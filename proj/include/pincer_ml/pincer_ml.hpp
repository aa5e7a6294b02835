#pragma once

// Core mining library. The CLI layer (cli.hpp, report.hpp) additionally needs
// the vendored CLI11 and nlohmann/json headers.

#include "pincer_ml/baselines.hpp"
#include "pincer_ml/border.hpp"
#include "pincer_ml/error.hpp"
#include "pincer_ml/itemset.hpp"
#include "pincer_ml/multilevel.hpp"
#include "pincer_ml/oracle.hpp"
#include "pincer_ml/pincer.hpp"
#include "pincer_ml/ratio.hpp"
#include "pincer_ml/rules.hpp"
#include "pincer_ml/synth.hpp"
#include "pincer_ml/taxonomy.hpp"
#include "pincer_ml/transactions.hpp"
