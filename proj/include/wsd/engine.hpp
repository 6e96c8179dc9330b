#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wsd/corpus.hpp"
#include "wsd/heuristics.hpp"
#include "wsd/matrix.hpp"
#include "wsd/similarity.hpp"

namespace wsd {

enum class HeuristicSource { semcor, semcor_omsti, off };

struct EngineConfig {
  SimilarityConfig similarity;
  HeuristicSource heuristic_source = HeuristicSource::semcor;
  bool doc_ctx_enabled = true;
  bool doc_cf_enabled = true;
  PosSet pos_of_interest = PosSet::all();
  PosSet doc_ctx_pos = {Pos::noun, Pos::verb};
};

enum class Provenance : uint8_t {
  scsmm,             // resolved by the matrix chain (or a direct sense)
  sentence_fallback, // resolved against the sentence's chosen senses
  doc_carry_forward, // resolved against the document's chosen senses
  heuristic_only,    // no similarity signal anywhere; frequency argmax
};

const char* provenance_name(Provenance p);

struct Prediction {
  std::string instance_id;
  std::string sense_key;
  Provenance provenance = Provenance::scsmm;
};

// Similarity matrix between the senses of two consecutive ambiguous terms:
// rows follow the first term's sense ranks, columns the second's.
struct Csm {
  size_t prev_term = 0;  // positions within the sentence's chain
  size_t curr_term = 0;
  Matrix values;
  double scale_applied = 1.0;  // recorded max-normalization divisor
};

// The chain state: products[k] = csms[0] * csms[1] * ... * csms[k], so each
// products[k] cell (r, c) accumulates every sense path from sense r of the
// first term to sense c of term k+1.
struct ProductChain {
  std::vector<Csm> csms;
  std::vector<Matrix> products;
};

struct RunSummary {
  std::array<size_t, 4> by_provenance = {0, 0, 0, 0};
  size_t predicted = 0;
  size_t skipped_unknown_lemma = 0;  // lemma/POS missing from the graph
  size_t skipped_pos_filter = 0;     // outside the POS of interest

  void add(Provenance p) {
    ++by_provenance[static_cast<size_t>(p)];
    ++predicted;
  }
  void merge(const RunSummary& o);
};

// Sequential multiplication of the queued matrices into cumulative products.
ProductChain scsmm(std::vector<Csm> csms);

// Greedy decomposition of the final product's argmax cell into one sense
// index per chain term. The first term's sense is the argmax row, the last
// term's the argmax column; intermediate senses maximize
// products[k](r, j) * csms[k+1](j, c) walking backwards. Ties resolve to
// the lowest sense index. Returns nullopt when the final product is all
// zero (no context survived the chain).
std::optional<std::vector<size_t>> backtrace(const ProductChain& chain);

// The full disambiguator over parsed documents. Immutable dependencies may
// be shared; distinct documents can run on distinct threads.
class Disambiguator {
 public:
  // `store` may be null iff the heuristic source is `off`; `scorer` must
  // outlive the disambiguator.
  Disambiguator(const WordNetGraph& graph, const SimilarityScorer& scorer,
                const HeuristicStore* store, EngineConfig cfg);

  std::vector<Prediction> disambiguate_document(const Document& doc,
                                                RunSummary* summary = nullptr) const;

  // Documents are independent work units; `jobs` > 1 fans them out across
  // threads. Output is sorted by instance id either way.
  std::vector<Prediction> disambiguate_corpus(std::span<const Document> docs,
                                              int jobs = 1,
                                              RunSummary* summary = nullptr) const;

  // Mean similarity of one sense against the document context; 1 (the
  // multiplicative neutral) when the context is empty or disabled.
  double doc_ctx_sim(SynsetId sense, const DocumentContext& ctx) const;

  // One chain matrix: cell(i, j) = sim(s_i, s_j) * H(s_i)H(s_j) *
  // DocCtx(s_i)DocCtx(s_j), each factor subject to its enable flag, then
  // max-normalized when configured.
  Csm build_csm(std::span<const SenseEntry> prev,
                std::span<const SenseEntry> curr,
                const DocumentContext& ctx) const;

  const EngineConfig& config() const { return cfg_; }

 private:
  struct SentenceOutcome;
  double heuristic_weight(const SenseEntry& sense) const;
  Matrix raw_similarity_matrix(std::span<const SenseEntry> prev,
                               std::span<const SenseEntry> curr) const;
  // Sense index with the highest mean similarity to the context synsets;
  // nullopt when the context is empty or no sense scores above zero.
  std::optional<size_t> best_by_mean_similarity(
      std::span<const SenseEntry> senses,
      std::span<const SynsetId> context) const;
  size_t heuristic_argmax(std::span<const SenseEntry> senses) const;
  SentenceOutcome disambiguate_sentence(const Sentence& sentence,
                                        const DocumentContext& ctx,
                                        RunSummary& summary) const;

  const WordNetGraph& graph_;
  const SimilarityScorer& scorer_;
  const HeuristicStore* store_;
  EngineConfig cfg_;
};

// Maximum-relatedness baseline: each target takes the sense maximizing the
// sum over the other window terms of the best similarity to any of their
// senses, counting only contributions above the threshold. window == 0
// means the whole sentence.
std::vector<Prediction> disambiguate_baseline_pedersen(
    const SimilarityScorer& scorer, const WordNetGraph& graph,
    const Sentence& sentence, const PosSet& pos_filter, size_t window = 0,
    double threshold = 0.0, RunSummary* summary = nullptr);

std::vector<Prediction> baseline_wn_first(const WordNetGraph& graph,
                                          std::span<const Document> docs,
                                          const PosSet& pos_filter,
                                          RunSummary* summary = nullptr);

std::vector<Prediction> baseline_mfs(const WordNetGraph& graph,
                                     const HeuristicStore& store,
                                     std::span<const Document> docs,
                                     const PosSet& pos_filter,
                                     RunSummary* summary = nullptr);

// "instance_id sense_key" lines sorted by instance id, LF-terminated.
void write_predictions(std::ostream& out, std::vector<Prediction> preds);

}  // namespace wsd
