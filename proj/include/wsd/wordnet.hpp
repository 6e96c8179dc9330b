#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsd/pos.hpp"

namespace wsd {

// A synset is addressed by its POS and the byte offset it occupies in the
// data.<pos> file. Offset 0 is reserved for the per-POS virtual root placed
// above the real taxonomy roots, so that depth and least-common-subsumer
// queries are total within a POS.
struct SynsetId {
  Pos pos = Pos::noun;
  uint32_t offset = 0;

  bool is_virtual_root() const { return offset == 0; }
  friend bool operator==(const SynsetId&, const SynsetId&) = default;
  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;
};

// Packs an id into a hashable 64-bit key.
constexpr uint64_t pack(SynsetId id) {
  return (uint64_t{id.offset} << 2) | uint64_t(pos_index(id.pos));
}

std::string to_string(SynsetId id);  // "00000160-n"

enum class Relation : uint8_t {
  hypernym,
  instance_hypernym,
  hyponym,
  instance_hyponym,
  member_holonym,
  substance_holonym,
  part_holonym,
  member_meronym,
  substance_meronym,
  part_meronym,
  attribute,
  derivation,
  antonym,
  similar_to,
  participle_of,
  pertainym,
  also_see,
  entailment,
  cause,
  verb_group,
  domain_topic,
  member_topic,
  domain_region,
  member_region,
  domain_usage,
  member_usage,
};

struct Synset {
  SynsetId id;
  bool satellite = false;  // adjective-cluster satellite (ss_type 's')
  std::vector<std::string> lemmas;      // as written, markers stripped
  std::vector<std::string> sense_keys;  // parallel to lemmas
  std::string gloss;
  std::vector<std::pair<Relation, SynsetId>> relations;
};

// One ranked sense of a (lemma, pos) pair.
struct SenseEntry {
  std::string lemma;  // lowercase, underscores join multiword expressions
  Pos pos = Pos::noun;
  int sense_number = 0;  // 1-based rank from the index file
  std::string sense_key;
  SynsetId synset;
};

enum class EdgeFilter {
  // Hypernym/instance-hypernym edges, undirected; the per-POS virtual roots
  // are traversable so same-POS noun/verb queries are total.
  taxonomy,
  // Every relation type, undirected; virtual roots excluded, so genuinely
  // unrelated synsets stay disconnected.
  all,
};

// Immutable in-memory view of a WordNet 3.0 database directory. Loading is
// single-threaded; afterwards any number of threads may read concurrently.
class WordNetGraph {
 public:
  // Senses ranked by corpus frequency, exactly as listed in index.<pos>.
  // The lemma is normalized (lowercased, spaces to underscores) before
  // lookup; an absent lemma yields an empty span.
  std::span<const SenseEntry> senses_of(std::string_view lemma, Pos pos) const;

  const SenseEntry* sense_by_key(std::string_view sense_key) const;

  const Synset* find(SynsetId id) const;
  const Synset& at(SynsetId id) const;  // throws std::out_of_range

  // Deepest common hypernym ancestor of two same-POS noun/verb synsets.
  // Falls back to the per-POS virtual root when the real taxonomies are
  // disjoint (verbs have several roots). Ties resolve to the smaller id.
  // Throws std::invalid_argument for cross-POS or adj/adv input.
  std::optional<SynsetId> lcs(SynsetId a, SynsetId b) const;

  // Breadth-first shortest path in edges; 0 when a == b, nullopt when the
  // two synsets are disconnected under the chosen edge filter.
  std::optional<int> shortest_path_len(SynsetId a, SynsetId b,
                                       EdgeFilter filter) const;

  // One search from `src` filling distances to every target (nullopt where
  // unreachable). Equivalent to calling shortest_path_len per target.
  void shortest_path_to_many(SynsetId src, std::span<const SynsetId> targets,
                             EdgeFilter filter,
                             std::span<std::optional<int>> out) const;

  // Hypernym-chain depth in edges below the per-POS virtual root (the
  // shortest chain when a synset has several hypernyms). 0 for virtual
  // roots and for adj/adv synsets, which carry no taxonomy.
  int depth(SynsetId id) const;

  // Depth of the deepest noun/verb synset of the given POS.
  int max_depth(Pos pos) const;

  // Direct hypernym (and instance-hypernym) parents; empty for roots.
  std::vector<SynsetId> hypernyms(SynsetId id) const;

  // The synset itself plus every hypernym ancestor, ending with the per-POS
  // virtual root. Each ancestor appears once.
  std::vector<SynsetId> ancestor_set(SynsetId id) const;

  // Root synsets (direct children of the virtual root) of one POS, sorted.
  std::vector<SynsetId> taxonomy_roots(Pos pos) const;

  size_t synset_count() const { return synsets_.size(); }
  const std::vector<Synset>& synsets() const { return synsets_; }

 private:
  friend WordNetGraph load_wordnet(const std::filesystem::path&);

  struct Csr {
    std::vector<uint32_t> head;  // node -> first edge index
    std::vector<uint32_t> adj;
  };

  uint32_t node_of(SynsetId id) const;  // dense node, virtual roots included
  SynsetId id_of(uint32_t node) const;
  void bfs_to_many(uint32_t src, std::span<const uint32_t> targets,
                   const Csr& g, std::span<std::optional<int>> out) const;

  std::vector<Synset> synsets_;
  std::unordered_map<uint64_t, uint32_t> dense_;  // pack(id) -> synset index
  std::unordered_map<std::string, std::vector<SenseEntry>> index_;
  std::unordered_map<std::string, const SenseEntry*> key_index_;
  Csr taxonomy_;  // over synsets + 4 virtual root nodes appended at the end
  Csr full_;
  Csr parents_;  // directed hypernym edges, child -> parent
  std::vector<int32_t> depth_;
  std::array<int, 4> max_depth_ = {0, 0, 0, 0};
};

// Parses index.{noun,verb,adj,adv}, data.{noun,verb,adj,adv} and index.sense
// from a WordNet 3.0 database directory. Throws FormatError on malformed
// lines (with file and line number) and on dangling relation targets.
WordNetGraph load_wordnet(const std::filesystem::path& db_dir);

// Lowercases and joins tokens with underscores, the index-file convention.
std::string normalize_lemma(std::string_view raw);

}  // namespace wsd
