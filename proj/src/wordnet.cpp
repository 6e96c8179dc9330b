#include "wsd/wordnet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <stdexcept>

#include "wsd/error.hpp"

namespace wsd {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("missing file: " + path.string());
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return content;
}

// Whitespace tokenizer over one line, reporting file:line on underruns.
struct LineTokens {
  std::vector<std::string_view> toks;
  size_t i = 0;
  const std::string* file;
  size_t line_no;

  LineTokens(std::string_view line, const std::string* f, size_t n)
      : file(f), line_no(n) {
    size_t a = 0;
    while (a < line.size()) {
      while (a < line.size() && line[a] == ' ') ++a;
      size_t b = a;
      while (b < line.size() && line[b] != ' ') ++b;
      if (b > a) toks.push_back(line.substr(a, b - a));
      a = b;
    }
  }

  std::string_view next(const char* what) {
    if (i >= toks.size())
      throw FormatError(*file, line_no, std::string("truncated line, expected ") + what);
    return toks[i++];
  }

  bool done() const { return i >= toks.size(); }

  long next_int(const char* what, int base = 10) {
    std::string_view t = next(what);
    long value = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value, base);
    if (ec != std::errc() || p != t.data() + t.size())
      throw FormatError(*file, line_no,
                        std::string("expected ") + what + ", got '" + std::string(t) + "'");
    return value;
  }
};

std::optional<Relation> relation_from_symbol(std::string_view s) {
  if (s == "!") return Relation::antonym;
  if (s == "@") return Relation::hypernym;
  if (s == "@i") return Relation::instance_hypernym;
  if (s == "~") return Relation::hyponym;
  if (s == "~i") return Relation::instance_hyponym;
  if (s == "#m") return Relation::member_holonym;
  if (s == "#s") return Relation::substance_holonym;
  if (s == "#p") return Relation::part_holonym;
  if (s == "%m") return Relation::member_meronym;
  if (s == "%s") return Relation::substance_meronym;
  if (s == "%p") return Relation::part_meronym;
  if (s == "=") return Relation::attribute;
  if (s == "+") return Relation::derivation;
  if (s == ";c") return Relation::domain_topic;
  if (s == "-c") return Relation::member_topic;
  if (s == ";r") return Relation::domain_region;
  if (s == "-r") return Relation::member_region;
  if (s == ";u") return Relation::domain_usage;
  if (s == "-u") return Relation::member_usage;
  if (s == "*") return Relation::entailment;
  if (s == ">") return Relation::cause;
  if (s == "^") return Relation::also_see;
  if (s == "$") return Relation::verb_group;
  if (s == "&") return Relation::similar_to;
  if (s == "<") return Relation::participle_of;
  if (s == "\\") return Relation::pertainym;
  return std::nullopt;
}

// Strips the adjective syntactic markers "(p)", "(a)", "(ip)".
std::string_view strip_marker(std::string_view word) {
  if (word.size() >= 3 && word.back() == ')') {
    size_t open = word.rfind('(');
    if (open != std::string_view::npos) return word.substr(0, open);
  }
  return word;
}

const char* data_file_name(Pos p) {
  switch (p) {
    case Pos::noun: return "data.noun";
    case Pos::verb: return "data.verb";
    case Pos::adj: return "data.adj";
    case Pos::adv: return "data.adv";
  }
  return "";
}

const char* index_file_name(Pos p) {
  switch (p) {
    case Pos::noun: return "index.noun";
    case Pos::verb: return "index.verb";
    case Pos::adj: return "index.adj";
    case Pos::adv: return "index.adv";
  }
  return "";
}

// Per-thread scratch for BFS so concurrent readers never contend.
struct BfsScratch {
  std::vector<uint32_t> stamp;
  std::vector<int32_t> dist;
  std::vector<uint32_t> queue;
  uint32_t epoch = 0;

  void prepare(size_t n) {
    if (stamp.size() < n) {
      stamp.assign(n, 0);
      dist.assign(n, 0);
      epoch = 0;
    }
    ++epoch;
    if (epoch == 0) {  // stamp wrap-around
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    queue.clear();
  }
};

BfsScratch& bfs_scratch() {
  thread_local BfsScratch scratch;
  return scratch;
}

}  // namespace

std::string to_string(SynsetId id) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08u-%c", id.offset, to_char(id.pos));
  return buf;
}

std::string normalize_lemma(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw)
    out += c == ' ' ? '_' : char(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::span<const SenseEntry> WordNetGraph::senses_of(std::string_view lemma,
                                                    Pos pos) const {
  std::string key = normalize_lemma(lemma);
  key += '|';
  key += to_char(pos);
  auto it = index_.find(key);
  if (it == index_.end()) return {};
  return it->second;
}

const SenseEntry* WordNetGraph::sense_by_key(std::string_view sense_key) const {
  auto it = key_index_.find(std::string(sense_key));
  return it == key_index_.end() ? nullptr : it->second;
}

const Synset* WordNetGraph::find(SynsetId id) const {
  auto it = dense_.find(pack(id));
  return it == dense_.end() ? nullptr : &synsets_[it->second];
}

const Synset& WordNetGraph::at(SynsetId id) const {
  const Synset* s = find(id);
  if (!s) throw std::out_of_range("unknown synset " + to_string(id));
  return *s;
}

uint32_t WordNetGraph::node_of(SynsetId id) const {
  if (id.is_virtual_root())
    return uint32_t(synsets_.size()) + uint32_t(pos_index(id.pos));
  auto it = dense_.find(pack(id));
  if (it == dense_.end())
    throw std::out_of_range("unknown synset " + to_string(id));
  return it->second;
}

SynsetId WordNetGraph::id_of(uint32_t node) const {
  if (node >= synsets_.size())
    return SynsetId{kAllPos[node - synsets_.size()], 0};
  return synsets_[node].id;
}

int WordNetGraph::depth(SynsetId id) const {
  if (id.is_virtual_root()) return 0;
  return depth_[node_of(id)];
}

int WordNetGraph::max_depth(Pos pos) const { return max_depth_[pos_index(pos)]; }

std::vector<SynsetId> WordNetGraph::hypernyms(SynsetId id) const {
  std::vector<SynsetId> out;
  uint32_t n = node_of(id);
  for (uint32_t e = parents_.head[n]; e < parents_.head[n + 1]; ++e) {
    uint32_t p = parents_.adj[e];
    if (p < synsets_.size()) out.push_back(synsets_[p].id);
  }
  return out;
}

std::vector<SynsetId> WordNetGraph::ancestor_set(SynsetId id) const {
  std::vector<SynsetId> out;
  auto& scratch = bfs_scratch();
  scratch.prepare(synsets_.size() + 4);
  uint32_t start = node_of(id);
  scratch.stamp[start] = scratch.epoch;
  scratch.queue.push_back(start);
  for (size_t q = 0; q < scratch.queue.size(); ++q) {
    uint32_t n = scratch.queue[q];
    out.push_back(id_of(n));
    for (uint32_t e = parents_.head[n]; e < parents_.head[n + 1]; ++e) {
      uint32_t p = parents_.adj[e];
      if (scratch.stamp[p] == scratch.epoch) continue;
      scratch.stamp[p] = scratch.epoch;
      scratch.queue.push_back(p);
    }
  }
  return out;
}

std::vector<SynsetId> WordNetGraph::taxonomy_roots(Pos pos) const {
  std::vector<SynsetId> out;
  if (pos != Pos::noun && pos != Pos::verb) return out;
  for (const Synset& s : synsets_) {
    if (s.id.pos != pos) continue;
    uint32_t n = node_of(s.id);
    bool has_parent = false;
    for (uint32_t e = parents_.head[n]; e < parents_.head[n + 1]; ++e)
      if (parents_.adj[e] < synsets_.size()) has_parent = true;
    if (!has_parent) out.push_back(s.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SynsetId> WordNetGraph::lcs(SynsetId a, SynsetId b) const {
  if (a.pos != b.pos)
    throw std::invalid_argument("lcs: cross-POS input (" + to_string(a) +
                                " vs " + to_string(b) + ")");
  if (a.pos != Pos::noun && a.pos != Pos::verb)
    throw std::invalid_argument("lcs: no taxonomy for POS '" +
                                std::string(1, to_char(a.pos)) + "'");
  std::vector<SynsetId> anc_a = ancestor_set(a);
  std::vector<SynsetId> anc_b = ancestor_set(b);
  std::sort(anc_b.begin(), anc_b.end());
  std::optional<SynsetId> best;
  int best_depth = -1;
  for (SynsetId c : anc_a) {
    if (!std::binary_search(anc_b.begin(), anc_b.end(), c)) continue;
    int d = depth(c);
    if (d > best_depth || (d == best_depth && best && c < *best)) {
      best = c;
      best_depth = d;
    }
  }
  return best;
}

void WordNetGraph::bfs_to_many(uint32_t src, std::span<const uint32_t> targets,
                               const Csr& g,
                               std::span<std::optional<int>> out) const {
  for (auto& o : out) o.reset();
  std::unordered_map<uint32_t, std::vector<size_t>> wanted;
  size_t remaining = 0;
  for (size_t t = 0; t < targets.size(); ++t) {
    if (targets[t] == src) {
      out[t] = 0;
    } else {
      wanted[targets[t]].push_back(t);
      ++remaining;
    }
  }
  if (remaining == 0) return;
  auto& scratch = bfs_scratch();
  scratch.prepare(g.head.size() - 1);
  scratch.stamp[src] = scratch.epoch;
  scratch.dist[src] = 0;
  scratch.queue.push_back(src);
  for (size_t q = 0; q < scratch.queue.size() && remaining > 0; ++q) {
    uint32_t n = scratch.queue[q];
    int32_t d = scratch.dist[n];
    for (uint32_t e = g.head[n]; e < g.head[n + 1]; ++e) {
      uint32_t m = g.adj[e];
      if (scratch.stamp[m] == scratch.epoch) continue;
      scratch.stamp[m] = scratch.epoch;
      scratch.dist[m] = d + 1;
      scratch.queue.push_back(m);
      if (auto it = wanted.find(m); it != wanted.end()) {
        for (size_t t : it->second) out[t] = d + 1;
        remaining -= it->second.size();
        wanted.erase(it);
      }
    }
  }
}

std::optional<int> WordNetGraph::shortest_path_len(SynsetId a, SynsetId b,
                                                   EdgeFilter filter) const {
  std::optional<int> out[1];
  shortest_path_to_many(a, {&b, 1}, filter, out);
  return out[0];
}

void WordNetGraph::shortest_path_to_many(
    SynsetId src, std::span<const SynsetId> targets, EdgeFilter filter,
    std::span<std::optional<int>> out) const {
  const Csr& g = filter == EdgeFilter::taxonomy ? taxonomy_ : full_;
  std::vector<uint32_t> t(targets.size());
  for (size_t i = 0; i < targets.size(); ++i) t[i] = node_of(targets[i]);
  bfs_to_many(node_of(src), t, g, out);
}

// ---------------------------------------------------------------------------
// Loading

namespace {

struct RawPointer {
  Relation rel;
  SynsetId target;
};

struct RawSynset {
  Synset synset;
  std::vector<RawPointer> pointers;
};

struct Builder {
  std::vector<RawSynset> raw;
  // lemma(lower) '|' pos '|' offset  ->  sense key, from index.sense
  std::unordered_map<std::string, std::string> key_of_lemma_in_synset;

  static std::string lemma_synset_key(std::string_view lemma, SynsetId id) {
    std::string k = normalize_lemma(lemma);
    k += '|';
    k += to_char(id.pos);
    k += '|';
    k += std::to_string(id.offset);
    return k;
  }
};

void parse_data_file(const std::filesystem::path& dir, Pos pos, Builder& b) {
  const std::string fname = (dir / data_file_name(pos)).string();
  std::string content = read_file(fname);
  size_t line_no = 0;
  size_t at = 0;
  while (at < content.size()) {
    size_t end = content.find('\n', at);
    if (end == std::string::npos) end = content.size();
    std::string_view line(content.data() + at, end - at);
    at = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == ' ') continue;  // license header

    size_t bar = line.find(" | ");
    std::string_view head = bar == std::string_view::npos ? line : line.substr(0, bar);
    LineTokens t(head, &fname, line_no);

    RawSynset rs;
    rs.synset.id.pos = pos;
    rs.synset.id.offset = uint32_t(t.next_int("synset offset"));
    if (rs.synset.id.offset == 0)
      throw FormatError(fname, line_no, "synset offset 0 is reserved");
    t.next_int("lex_filenum");
    std::string_view ss_type = t.next("ss_type");
    auto ss_pos = ss_type.size() == 1 ? pos_from_char(ss_type[0]) : std::nullopt;
    if (!ss_pos || *ss_pos != pos)
      throw FormatError(fname, line_no,
                        "ss_type '" + std::string(ss_type) + "' does not match " +
                            data_file_name(pos));
    rs.synset.satellite = ss_type[0] == 's';

    long w_cnt = t.next_int("word count", 16);
    if (w_cnt < 1) throw FormatError(fname, line_no, "word count must be >= 1");
    for (long w = 0; w < w_cnt; ++w) {
      rs.synset.lemmas.emplace_back(strip_marker(t.next("word")));
      t.next("lex_id");
    }

    long p_cnt = t.next_int("pointer count");
    for (long p = 0; p < p_cnt; ++p) {
      std::string_view sym = t.next("pointer symbol");
      auto rel = relation_from_symbol(sym);
      if (!rel)
        throw FormatError(fname, line_no,
                          "unknown pointer symbol '" + std::string(sym) + "'");
      if ((*rel == Relation::hypernym || *rel == Relation::instance_hypernym) &&
          pos != Pos::noun && pos != Pos::verb)
        throw FormatError(fname, line_no,
                          "hypernym pointer on a synset without a taxonomy");
      long target_offset = t.next_int("pointer offset");
      std::string_view tp = t.next("pointer pos");
      auto target_pos = tp.size() == 1 ? pos_from_char(tp[0]) : std::nullopt;
      if (!target_pos)
        throw FormatError(fname, line_no, "bad pointer pos '" + std::string(tp) + "'");
      t.next("pointer source/target");
      rs.pointers.push_back(
          {*rel, SynsetId{*target_pos, uint32_t(target_offset)}});
    }

    // data.verb carries frame lists between pointers and the gloss.
    if (pos == Pos::verb && !t.done()) {
      long f_cnt = t.next_int("frame count");
      for (long f = 0; f < f_cnt; ++f) {
        if (t.next("frame '+'") != "+")
          throw FormatError(fname, line_no, "malformed frame list");
        t.next("frame number");
        t.next("frame word number");
      }
    }
    if (!t.done())
      throw FormatError(fname, line_no, "trailing tokens before gloss");
    if (bar != std::string_view::npos)
      rs.synset.gloss = std::string(line.substr(bar + 3));
    b.raw.push_back(std::move(rs));
  }
}

struct IndexedLemma {
  std::string lemma;
  Pos pos;
  std::vector<uint32_t> offsets;  // frequency order = sense rank
};

void parse_index_file(const std::filesystem::path& dir, Pos pos,
                      std::vector<IndexedLemma>& out) {
  const std::string fname = (dir / index_file_name(pos)).string();
  std::string content = read_file(fname);
  size_t line_no = 0;
  size_t at = 0;
  while (at < content.size()) {
    size_t end = content.find('\n', at);
    if (end == std::string::npos) end = content.size();
    std::string_view line(content.data() + at, end - at);
    at = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == ' ') continue;

    LineTokens t(line, &fname, line_no);
    IndexedLemma entry;
    entry.lemma = normalize_lemma(t.next("lemma"));
    std::string_view p = t.next("pos");
    auto parsed = p.size() == 1 ? pos_from_char(p[0]) : std::nullopt;
    if (!parsed || *parsed != pos)
      throw FormatError(fname, line_no, "pos '" + std::string(p) + "' does not match " +
                                            index_file_name(pos));
    entry.pos = pos;
    long synset_cnt = t.next_int("synset count");
    if (synset_cnt < 1)
      throw FormatError(fname, line_no, "synset count must be >= 1");
    long p_cnt = t.next_int("pointer-type count");
    for (long i = 0; i < p_cnt; ++i) t.next("pointer symbol");
    t.next_int("sense count");
    t.next_int("tagsense count");
    for (long i = 0; i < synset_cnt; ++i)
      entry.offsets.push_back(uint32_t(t.next_int("synset offset")));
    if (!t.done()) throw FormatError(fname, line_no, "trailing tokens");
    out.push_back(std::move(entry));
  }
}

void parse_sense_index(const std::filesystem::path& dir, Builder& b) {
  const std::string fname = (dir / "index.sense").string();
  std::string content = read_file(fname);
  size_t line_no = 0;
  size_t at = 0;
  while (at < content.size()) {
    size_t end = content.find('\n', at);
    if (end == std::string::npos) end = content.size();
    std::string_view line(content.data() + at, end - at);
    at = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    LineTokens t(line, &fname, line_no);
    std::string_view key = t.next("sense key");
    size_t pct = key.find('%');
    if (pct == std::string_view::npos || pct + 1 >= key.size())
      throw FormatError(fname, line_no, "malformed sense key '" + std::string(key) + "'");
    char ss = key[pct + 1];
    Pos pos;
    switch (ss) {
      case '1': pos = Pos::noun; break;
      case '2': pos = Pos::verb; break;
      case '3':
      case '5': pos = Pos::adj; break;
      case '4': pos = Pos::adv; break;
      default:
        throw FormatError(fname, line_no,
                          "bad ss_type in sense key '" + std::string(key) + "'");
    }
    long offset = t.next_int("synset offset");
    t.next_int("sense number");
    // Optional trailing tag count; ignored.
    std::string map_key = Builder::lemma_synset_key(
        key.substr(0, pct), SynsetId{pos, uint32_t(offset)});
    b.key_of_lemma_in_synset[map_key] = std::string(key);
  }
}

}  // namespace

WordNetGraph load_wordnet(const std::filesystem::path& db_dir) {
  Builder b;
  for (Pos pos : kAllPos) parse_data_file(db_dir, pos, b);

  WordNetGraph g;
  g.synsets_.reserve(b.raw.size());
  for (auto& rs : b.raw) {
    uint32_t idx = uint32_t(g.synsets_.size());
    auto [it, fresh] = g.dense_.emplace(pack(rs.synset.id), idx);
    if (!fresh)
      throw FormatError("duplicate synset " + to_string(rs.synset.id));
    g.synsets_.push_back(std::move(rs.synset));
  }

  // Resolve pointers now that every synset is known.
  for (size_t i = 0; i < b.raw.size(); ++i) {
    Synset& s = g.synsets_[i];
    for (const RawPointer& p : b.raw[i].pointers) {
      if (!g.dense_.contains(pack(p.target)))
        throw FormatError("dangling pointer " + to_string(s.id) + " -> " +
                          to_string(p.target));
      s.relations.emplace_back(p.rel, p.target);
    }
  }

  parse_sense_index(db_dir, b);

  // Sense keys for every lemma of every synset.
  for (Synset& s : g.synsets_) {
    for (const std::string& lemma : s.lemmas) {
      auto it = b.key_of_lemma_in_synset.find(Builder::lemma_synset_key(lemma, s.id));
      if (it == b.key_of_lemma_in_synset.end())
        throw FormatError("index.sense has no key for '" + lemma + "' in " +
                          to_string(s.id));
      s.sense_keys.push_back(it->second);
    }
  }

  // The lemma index, ranked as listed in the index files.
  std::vector<IndexedLemma> indexed;
  for (Pos pos : kAllPos) parse_index_file(db_dir, pos, indexed);
  for (IndexedLemma& entry : indexed) {
    std::string key = entry.lemma;
    key += '|';
    key += to_char(entry.pos);
    std::vector<SenseEntry>& senses = g.index_[key];
    if (!senses.empty())
      throw FormatError("duplicate index entry for '" + entry.lemma + "' (" +
                        std::string(1, to_char(entry.pos)) + ")");
    for (size_t i = 0; i < entry.offsets.size(); ++i) {
      SenseEntry se;
      se.lemma = entry.lemma;
      se.pos = entry.pos;
      se.sense_number = int(i) + 1;
      se.synset = SynsetId{entry.pos, entry.offsets[i]};
      if (!g.dense_.contains(pack(se.synset)))
        throw FormatError("index entry '" + entry.lemma + "' references missing " +
                          to_string(se.synset));
      auto it = b.key_of_lemma_in_synset.find(
          Builder::lemma_synset_key(entry.lemma, se.synset));
      if (it == b.key_of_lemma_in_synset.end())
        throw FormatError("index.sense has no key for '" + entry.lemma + "' in " +
                          to_string(se.synset));
      se.sense_key = it->second;
      senses.push_back(std::move(se));
    }
  }

  for (const auto& [key, senses] : g.index_)
    for (const SenseEntry& se : senses) g.key_index_[se.sense_key] = &se;

  // Adjacency. Nodes: synsets, then one virtual root per POS.
  const size_t n = g.synsets_.size();
  const size_t nodes = n + 4;
  std::vector<std::vector<uint32_t>> parents(nodes), taxo(nodes), full(nodes);

  auto vroot = [&](Pos p) { return uint32_t(n + pos_index(p)); };

  for (size_t i = 0; i < n; ++i) {
    const Synset& s = g.synsets_[i];
    for (const auto& [rel, target] : s.relations) {
      uint32_t j = g.dense_.at(pack(target));
      full[i].push_back(j);
      full[j].push_back(uint32_t(i));
      if (rel == Relation::hypernym || rel == Relation::instance_hypernym) {
        parents[i].push_back(j);
        taxo[i].push_back(j);
        taxo[j].push_back(uint32_t(i));
      }
    }
  }
  // Attach noun/verb taxonomy roots to their virtual root.
  for (size_t i = 0; i < n; ++i) {
    const Synset& s = g.synsets_[i];
    if (s.id.pos != Pos::noun && s.id.pos != Pos::verb) continue;
    if (!parents[i].empty()) continue;
    uint32_t r = vroot(s.id.pos);
    parents[i].push_back(r);
    taxo[i].push_back(r);
    taxo[r].push_back(uint32_t(i));
  }

  auto build_csr = [nodes](WordNetGraph::Csr& csr,
                           std::vector<std::vector<uint32_t>>& adj) {
    csr.head.assign(nodes + 1, 0);
    for (size_t i = 0; i < nodes; ++i) {
      std::sort(adj[i].begin(), adj[i].end());
      adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
      csr.head[i + 1] = csr.head[i] + uint32_t(adj[i].size());
    }
    csr.adj.clear();
    csr.adj.reserve(csr.head[nodes]);
    for (size_t i = 0; i < nodes; ++i)
      csr.adj.insert(csr.adj.end(), adj[i].begin(), adj[i].end());
  };
  build_csr(g.parents_, parents);
  build_csr(g.taxonomy_, taxo);
  build_csr(g.full_, full);

  // Depths: directed breadth-first walk down from the virtual roots.
  g.depth_.assign(nodes, 0);
  std::vector<std::vector<uint32_t>> children(nodes);
  for (size_t i = 0; i < nodes; ++i)
    for (uint32_t p : parents[i]) children[p].push_back(uint32_t(i));
  for (Pos pos : {Pos::noun, Pos::verb}) {
    std::deque<uint32_t> queue{vroot(pos)};
    std::vector<bool> seen(nodes, false);
    seen[vroot(pos)] = true;
    while (!queue.empty()) {
      uint32_t node = queue.front();
      queue.pop_front();
      for (uint32_t c : children[node]) {
        if (seen[c]) continue;
        seen[c] = true;
        g.depth_[c] = g.depth_[node] + 1;
        queue.push_back(c);
      }
    }
    int deepest = 0;
    for (size_t i = 0; i < n; ++i)
      if (g.synsets_[i].id.pos == pos) deepest = std::max(deepest, int(g.depth_[i]));
    g.max_depth_[pos_index(pos)] = deepest;
  }

  return g;
}

}  // namespace wsd
