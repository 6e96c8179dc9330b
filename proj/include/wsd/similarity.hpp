#pragma once

#include <optional>
#include <shared_mutex>
#include <span>
#include <string_view>
#include <unordered_map>

#include "wsd/ic.hpp"
#include "wsd/wordnet.hpp"

namespace wsd {

enum class Measure { path, lch, wup, jcn };

std::optional<Measure> measure_from_string(std::string_view name);
const char* measure_name(Measure m);

// How to score pairs outside the noun/verb taxonomies (cross-POS pairs and
// adjective/adverb pairs, which carry no hypernyms).
enum class CrossPosStrategy {
  zero,             // such pairs score 0
  full_graph_path,  // 1/(1+d) over the full relation graph, undirected
};

struct SimilarityConfig {
  Measure measure = Measure::jcn;
  double jcn_zero_denominator_cap = 1e6;
  CrossPosStrategy cross_pos_strategy = CrossPosStrategy::full_graph_path;
  bool normalize_per_matrix = true;  // consumed by the matrix builder
};

// Pairwise sense-to-sense similarity. Same-POS noun/verb pairs use the
// configured measure over the taxonomy; everything else follows the
// cross-POS strategy. Values are symmetric, finite and >= 0.
//
// Stateless apart from a memo table that is safe under concurrent
// insert-or-read, so one scorer may serve many threads.
class SimilarityScorer {
 public:
  // `ic` may be null unless the measure is jcn.
  SimilarityScorer(const WordNetGraph& graph, const IcTable* ic,
                   SimilarityConfig cfg);

  double similarity(SynsetId a, SynsetId b) const;

  // Scores one synset against many. Cross-POS targets share a single graph
  // search, which matters when b spans a document context.
  void similarity_row(SynsetId a, std::span<const SynsetId> bs,
                      std::span<double> out) const;

  const SimilarityConfig& config() const { return cfg_; }
  const WordNetGraph& graph() const { return graph_; }

 private:
  bool taxonomic_pair(SynsetId a, SynsetId b) const;
  double taxonomic(SynsetId a, SynsetId b) const;
  double from_path_len(std::optional<int> d) const;
  double lch(SynsetId a, SynsetId b) const;
  double wup(SynsetId a, SynsetId b) const;
  double jcn(SynsetId a, SynsetId b) const;

  std::optional<double> cached(uint64_t key) const;
  double remember(uint64_t key, double value) const;

  const WordNetGraph& graph_;
  const IcTable* ic_;
  SimilarityConfig cfg_;

  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<uint64_t, double> memo_;
};

}  // namespace wsd
