#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>

#include "wsd/wordnet.hpp"

namespace wsd {

// Sense-frequency counts observed in a tagged training corpus, keyed by
// sense key. Word totals are aggregated per (lemma, pos) as counts arrive.
class HeuristicStore {
 public:
  // Accumulates a count for one sense key; the key's lemma and POS are
  // derived from the key itself. Throws FormatError for unparseable keys.
  void add(const std::string& sense_key, double count);

  double sense_count(const std::string& sense_key) const;
  double word_count(std::string_view lemma, Pos pos) const;
  bool has_word(std::string_view lemma, Pos pos) const;

  size_t size() const { return sense_counts_.size(); }
  bool empty() const { return sense_counts_.empty(); }
  const std::unordered_map<std::string, double>& sense_counts() const {
    return sense_counts_;
  }

  std::string source_label;

 private:
  std::unordered_map<std::string, double> sense_counts_;
  std::unordered_map<std::string, double> word_counts_;  // "lemma|p"
};

// Splits a sense key into its lemma and POS (key ss_type digit; satellites
// count as adjectives). Throws FormatError when the key is malformed.
std::pair<std::string, Pos> sense_key_word(std::string_view sense_key);

// Parses the SemCor cntlist: whitespace-separated lines holding a tag
// count, a sense key and a sense number. The token containing '%' is the
// key; the pairing of the two remaining integers is auto-detected (sense
// numbers stay <= 99) and must be consistent across the whole file.
HeuristicStore load_semcor_cntlist(const std::filesystem::path& path);

// Parses "instance_id sense_key [sense_key...]" lines; every listed key
// gains one count. Blank and '#' comment lines are skipped.
HeuristicStore load_key_file_counts(const std::filesystem::path& path);

// Summed counts of both stores.
HeuristicStore merge_counts(const HeuristicStore& a, const HeuristicStore& b,
                            std::string label);

// The sense-frequency weight in (0, 1]:
//   count(s)/count(w)  when the sense was observed,
//   1/count(w)         when the word was observed but this sense was not,
//   1                  when the word is absent from the store entirely.
double heuristic(const HeuristicStore& store, const SenseEntry& sense);

// Sense with the highest training-corpus count; ties and words absent from
// the store resolve to the lowest sense number. Throws NoSenseError when
// the (lemma, pos) has no senses at all.
const SenseEntry& mfs_sense(const HeuristicStore& store,
                            const WordNetGraph& graph, std::string_view lemma,
                            Pos pos);

// First sense by dictionary rank. Throws NoSenseError when absent.
const SenseEntry& wn_first_sense(const WordNetGraph& graph,
                                 std::string_view lemma, Pos pos);

}  // namespace wsd
