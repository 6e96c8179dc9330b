#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "wsd/pos.hpp"
#include "wsd/wordnet.hpp"

namespace wsd {

// One token of a sentence. Scored target instances carry an instance id;
// plain context tokens do not.
struct TermInstance {
  std::optional<std::string> instance_id;
  std::string lemma;
  std::optional<Pos> pos;  // absent for function words and unknown tags
  std::string surface;

  bool is_target() const { return instance_id.has_value(); }
};

struct Sentence {
  std::string id;
  std::vector<TermInstance> tokens;  // document order
};

// A monosemous document term used as global context.
struct ContextEntry {
  std::string lemma;
  Pos pos = Pos::noun;
  SenseEntry sense;
  double tfidf = 0.0;  // always > 0; used as an inclusion filter
};

struct DocumentContext {
  std::vector<ContextEntry> entries;  // first-occurrence order
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  DocumentContext context;  // filled by attach_document_contexts
};

// instance id -> acceptable sense keys (multi-key lines allowed).
struct GoldKeys {
  std::map<std::string, std::set<std::string>> by_instance;
};

struct PosStats {
  size_t n_terms = 0;
  size_t n_ambiguous = 0;
  // Sense-count statistics over ambiguous target instances only.
  double mean_granularity = 0.0;
  int max_senses = 0;
  int mode_senses = 0;  // ties resolve to the smaller count
  double median_senses = 0.0;
};

struct DatasetStats {
  size_t n_docs = 0;
  size_t n_sentences = 0;  // sentences that contain at least one target
  size_t n_terms = 0;      // target instances
  size_t n_monosemous = 0;
  size_t n_ambiguous = 0;
  size_t n_unknown = 0;  // targets whose (lemma, pos) is not in the graph
  int avg_sentence_size = 0;  // round(n_terms / n_sentences)
  double ambiguity_rate = 0.0;
  std::array<PosStats, 4> per_pos;  // indexed by pos_index
};

// Parses a corpus/text/sentence/(wf|instance) evaluation dataset. Instances
// must carry id, lemma and pos; wf tokens may omit them. Sentence and token
// order is preserved.
std::vector<Document> parse_dataset(const std::filesystem::path& xml_path);
std::vector<Document> parse_dataset_string(std::string xml,
                                           std::string origin);

// Emits the same XML subset; parse(serialize(parse(x))) is a fixed point on
// ids, lemmas, POS and order.
std::string serialize_dataset(std::span<const Document> docs);

// Parses "instance_id key [key...]" lines. Duplicate ids and empty key sets
// are errors.
GoldKeys parse_gold_keys(const std::filesystem::path& path);

struct ContextConfig {
  PosSet pos = {Pos::noun, Pos::verb};
};

// Document context: terms of the configured POS whose (lemma, pos) has
// exactly one sense and whose tf-idf over the dataset's own documents is
// positive (tf = raw in-document count, idf = ln(N/df)).
void attach_document_contexts(std::vector<Document>& docs,
                              const WordNetGraph& graph,
                              const ContextConfig& cfg = {});

DatasetStats dataset_stats(std::span<const Document> docs,
                           const WordNetGraph& graph);

}  // namespace wsd
