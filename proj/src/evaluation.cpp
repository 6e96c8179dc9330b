#include "wsd/evaluation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wsd/error.hpp"
#include "wsd/heuristics.hpp"

namespace wsd {

double ScoreSlice::f1() const {
  double p = precision(), r = recall();
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

double f_alpha(double p, double r, double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("alpha must be in [0, 1]");
  if (p <= 0.0 || r <= 0.0) return 0.0;
  return 1.0 / (alpha / p + (1.0 - alpha) / r);
}

ScoreSlice pool(std::span<const ScoreSlice> slices) {
  ScoreSlice out;
  for (const ScoreSlice& s : slices) {
    out.n_gold += s.n_gold;
    out.n_attempted += s.n_attempted;
    out.n_correct += s.n_correct;
  }
  return out;
}

namespace {

std::string dataset_of(const std::string& instance_id) {
  size_t dot = instance_id.find('.');
  return dot == std::string::npos ? instance_id : instance_id.substr(0, dot);
}

}  // namespace

ScoreReport score(const GoldKeys& gold, std::span<const Prediction> preds) {
  ScoreReport report;

  // Every gold instance counts toward recall; its POS comes from a key.
  for (const auto& [id, keys] : gold.by_instance) {
    Pos pos = sense_key_word(*keys.begin()).second;
    ++report.overall.n_gold;
    ++report.by_pos[pos].n_gold;
    ++report.by_dataset[dataset_of(id)].n_gold;
  }

  for (const Prediction& p : preds) {
    auto it = gold.by_instance.find(p.instance_id);
    if (it == gold.by_instance.end())
      throw FormatError("predicted instance '" + p.instance_id +
                        "' is not in the gold keys (dataset mix-up?)");
    Pos pos = sense_key_word(*it->second.begin()).second;
    bool correct = it->second.contains(p.sense_key);
    auto bump = [&](ScoreSlice& s) {
      ++s.n_attempted;
      if (correct) ++s.n_correct;
    };
    bump(report.overall);
    bump(report.by_pos[pos]);
    bump(report.by_dataset[dataset_of(p.instance_id)]);
  }
  return report;
}

namespace {

void emit_slice(std::ostream& out, const std::string& name,
                const ScoreSlice& s) {
  out << name << "\tgold=" << s.n_gold << "\tattempted=" << s.n_attempted
      << "\tcorrect=" << s.n_correct << "\tP=" << 100.0 * s.precision()
      << "\tR=" << 100.0 * s.recall() << "\tF1=" << 100.0 * s.f1() << "\n";
}

}  // namespace

std::string format_report_text(const ScoreReport& report, bool by_dataset) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  emit_slice(out, "all", report.overall);
  for (const auto& [pos, slice] : report.by_pos)
    emit_slice(out, std::string("pos:") + to_char(pos), slice);
  if (by_dataset)
    for (const auto& [name, slice] : report.by_dataset)
      emit_slice(out, "dataset:" + name, slice);
  return out.str();
}

std::string format_report_tsv(const ScoreReport& report, bool by_dataset) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(4);
  auto rows = [&](const std::string& slice, const ScoreSlice& s) {
    out << "precision\t" << slice << '\t' << 100.0 * s.precision() << '\n';
    out << "recall\t" << slice << '\t' << 100.0 * s.recall() << '\n';
    out << "f1\t" << slice << '\t' << 100.0 * s.f1() << '\n';
  };
  rows("all", report.overall);
  for (const auto& [pos, slice] : report.by_pos)
    rows(std::string("pos:") + to_char(pos), slice);
  if (by_dataset)
    for (const auto& [name, slice] : report.by_dataset)
      rows("dataset:" + name, slice);
  return out.str();
}

}  // namespace wsd
