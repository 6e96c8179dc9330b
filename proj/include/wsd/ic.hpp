#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <unordered_map>

#include "wsd/wordnet.hpp"

namespace wsd {

class HeuristicStore;

// Per-synset information content ic(c) = -ln(count(c) / root_total) derived
// from corpus frequency counts propagated up the hypernym taxonomy.
// Immutable once built; concurrent reads are unrestricted.
class IcTable {
 public:
  // 0 for virtual roots; synsets absent from the table use the smoothing
  // count. Never negative.
  double ic(SynsetId id) const;

  double count(SynsetId id) const;  // smoothed lookup
  double root_total(Pos pos) const { return root_totals_[pos_index(pos)]; }
  bool empty() const { return counts_.empty(); }
  size_t size() const { return counts_.size(); }

  void set_count(SynsetId id, double count);
  void set_root_total(Pos pos, double total) {
    root_totals_[pos_index(pos)] = total;
  }
  double smoothing() const { return smoothing_; }

  const std::unordered_map<uint64_t, double>& counts() const {
    return counts_;
  }

 private:
  std::unordered_map<uint64_t, double> counts_;  // pack(id) -> count
  std::array<double, 4> root_totals_ = {0, 0, 0, 0};
  double smoothing_ = 1.0;  // additive count for unseen synsets
};

// Reads the standard IC ".dat" layout: a "wnver::<hash>" header (a missing
// header is tolerated with a warning), then "<offset><pos> <count> [ROOT]"
// lines. Counts of ROOT-flagged entries accumulate into the per-POS totals.
IcTable load_ic_file(const std::filesystem::path& path);

// Writes the same layout; ROOT flags every taxonomy root. Output is sorted
// so that save/load round-trips reproduce the table bit for bit.
void save_ic_file(const IcTable& table, const WordNetGraph& graph,
                  const std::filesystem::path& path);

// Builds a table from tagged-corpus sense counts: each sense's count lands
// on its synset and every hypernym ancestor, then every synset receives
// add-one smoothing. Sense keys that do not resolve in the graph are
// skipped and tallied into *unresolved when given.
IcTable compute_ic(const WordNetGraph& graph, const HeuristicStore& counts,
                   size_t* unresolved = nullptr);

}  // namespace wsd
