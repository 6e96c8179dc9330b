#pragma once

#include <map>
#include <span>
#include <string>

#include "wsd/corpus.hpp"
#include "wsd/engine.hpp"

namespace wsd {

struct ScoreSlice {
  size_t n_gold = 0;
  size_t n_attempted = 0;
  size_t n_correct = 0;

  double precision() const {
    return n_attempted ? double(n_correct) / double(n_attempted) : 0.0;
  }
  double recall() const {
    return n_gold ? double(n_correct) / double(n_gold) : 0.0;
  }
  double f1() const;
};

struct ScoreReport {
  ScoreSlice overall;
  // POS comes from the instance's gold keys, so scoring needs no dataset.
  std::map<Pos, ScoreSlice> by_pos;
  // Instance-id prefix before the first '.', the combined-corpus layout.
  std::map<std::string, ScoreSlice> by_dataset;
};

// A prediction is correct when its key is in the instance's gold set.
// Instances without a prediction count against recall only. Predicted ids
// absent from the gold keys raise FormatError (they mean a dataset mix-up).
ScoreReport score(const GoldKeys& gold, std::span<const Prediction> preds);

// 1 / (alpha/p + (1-alpha)/r); 0 whenever either input is 0. alpha = 0.5
// reduces to F1. Throws std::invalid_argument for alpha outside [0, 1].
double f_alpha(double p, double r, double alpha);

// Pools the counts of several reports (micro-average).
ScoreSlice pool(std::span<const ScoreSlice> slices);

std::string format_report_text(const ScoreReport& report, bool by_dataset);
// Line-oriented "metric<TAB>slice<TAB>value" form.
std::string format_report_tsv(const ScoreReport& report, bool by_dataset);

}  // namespace wsd
