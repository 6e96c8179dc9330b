#include "wsd/heuristics.hpp"

#include <charconv>
#include <fstream>

#include "wsd/error.hpp"

namespace wsd {

namespace {

std::string word_key(std::string_view lemma, Pos pos) {
  std::string k(lemma);
  k += '|';
  k += to_char(pos);
  return k;
}

bool parse_count(std::string_view tok, long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size() && out >= 0;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  size_t a = 0;
  while (a < line.size()) {
    while (a < line.size() && (line[a] == ' ' || line[a] == '\t')) ++a;
    size_t b = a;
    while (b < line.size() && line[b] != ' ' && line[b] != '\t') ++b;
    if (b > a) toks.push_back(line.substr(a, b - a));
    a = b;
  }
  return toks;
}

}  // namespace

std::pair<std::string, Pos> sense_key_word(std::string_view sense_key) {
  size_t pct = sense_key.find('%');
  if (pct == std::string_view::npos || pct == 0 || pct + 1 >= sense_key.size())
    throw FormatError("malformed sense key '" + std::string(sense_key) + "'");
  Pos pos;
  switch (sense_key[pct + 1]) {
    case '1': pos = Pos::noun; break;
    case '2': pos = Pos::verb; break;
    case '3':
    case '5': pos = Pos::adj; break;
    case '4': pos = Pos::adv; break;
    default:
      throw FormatError("bad ss_type in sense key '" + std::string(sense_key) + "'");
  }
  return {std::string(sense_key.substr(0, pct)), pos};
}

void HeuristicStore::add(const std::string& sense_key, double count) {
  auto [lemma, pos] = sense_key_word(sense_key);
  sense_counts_[sense_key] += count;
  word_counts_[word_key(lemma, pos)] += count;
}

double HeuristicStore::sense_count(const std::string& sense_key) const {
  auto it = sense_counts_.find(sense_key);
  return it == sense_counts_.end() ? 0.0 : it->second;
}

double HeuristicStore::word_count(std::string_view lemma, Pos pos) const {
  auto it = word_counts_.find(word_key(lemma, pos));
  return it == word_counts_.end() ? 0.0 : it->second;
}

bool HeuristicStore::has_word(std::string_view lemma, Pos pos) const {
  return word_counts_.contains(word_key(lemma, pos));
}

HeuristicStore load_semcor_cntlist(const std::filesystem::path& path) {
  const std::string fname = path.string();
  std::ifstream in(path);
  if (!in) throw FormatError("missing file: " + fname);

  struct Row {
    std::string key;
    long first_int = 0;   // the two non-key integers, in line order
    long second_int = 0;
    size_t line_no = 0;
  };
  std::vector<Row> rows;
  size_t key_position = 1;  // column of the sense key on the first data line

  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto toks = split_ws(line);
    if (toks.size() != 3)
      throw FormatError(fname, line_no, "expected 3 columns, found " +
                                            std::to_string(toks.size()));
    size_t key_at = toks.size();
    for (size_t i = 0; i < toks.size(); ++i)
      if (toks[i].find('%') != std::string_view::npos) {
        key_at = i;
        break;
      }
    if (key_at == toks.size())
      throw FormatError(fname, line_no, "no sense key ('%' token) on line");

    Row row;
    row.key = std::string(toks[key_at]);
    row.line_no = line_no;
    if (rows.empty()) key_position = key_at;
    std::vector<long> ints;
    for (size_t i = 0; i < toks.size(); ++i) {
      if (i == key_at) continue;
      long v = 0;
      if (!parse_count(toks[i], v))
        throw FormatError(fname, line_no,
                          "expected an integer, got '" + std::string(toks[i]) + "'");
      ints.push_back(v);
    }
    row.first_int = ints[0];
    row.second_int = ints[1];
    rows.push_back(std::move(row));
  }

  // Column-order detection: one of the two integers is the sense number
  // (<= 99) and the same positional choice must hold for every line. When
  // both orders are plausible, the key position decides: "cnt key snum" is
  // the cntlist layout, "key snum cnt" the cntlist.rev one.
  bool count_first_ok = true;   // (count, sense_number)
  bool count_second_ok = true;  // (sense_number, count)
  for (const Row& r : rows) {
    if (r.second_int > 99) count_first_ok = false;
    if (r.first_int > 99) count_second_ok = false;
  }
  if (!rows.empty() && !count_first_ok && !count_second_ok)
    throw FormatError(fname, rows.front().line_no,
                      "cannot detect cntlist column order (no consistent "
                      "sense-number column)");
  bool count_first =
      count_first_ok && count_second_ok ? key_position != 0 : count_first_ok;

  HeuristicStore store;
  store.source_label = "semcor";
  for (const Row& r : rows) {
    long count = count_first ? r.first_int : r.second_int;
    if (count == 0) continue;  // untagged senses carry no evidence
    try {
      store.add(r.key, double(count));
    } catch (const FormatError& e) {
      throw FormatError(fname, r.line_no, e.what());
    }
  }
  return store;
}

HeuristicStore load_key_file_counts(const std::filesystem::path& path) {
  const std::string fname = path.string();
  std::ifstream in(path);
  if (!in) throw FormatError("missing file: " + fname);

  HeuristicStore store;
  store.source_label = "keys";
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto toks = split_ws(line);
    if (toks.size() < 2)
      throw FormatError(fname, line_no, "expected 'instance_id key [key...]'");
    for (size_t i = 1; i < toks.size(); ++i) {
      if (toks[i].find('%') == std::string_view::npos)
        throw FormatError(fname, line_no,
                          "'" + std::string(toks[i]) + "' is not a sense key");
      try {
        store.add(std::string(toks[i]), 1.0);
      } catch (const FormatError& e) {
        throw FormatError(fname, line_no, e.what());
      }
    }
  }
  return store;
}

HeuristicStore merge_counts(const HeuristicStore& a, const HeuristicStore& b,
                            std::string label) {
  HeuristicStore out;
  out.source_label = std::move(label);
  for (const auto& [key, count] : a.sense_counts()) out.add(key, count);
  for (const auto& [key, count] : b.sense_counts()) out.add(key, count);
  return out;
}

double heuristic(const HeuristicStore& store, const SenseEntry& sense) {
  double word = store.word_count(sense.lemma, sense.pos);
  if (word <= 0.0) return 1.0;  // word never observed: neutral weight
  double count = store.sense_count(sense.sense_key);
  if (count <= 0.0) return 1.0 / word;  // word observed, this sense never
  return count / word;
}

const SenseEntry& mfs_sense(const HeuristicStore& store,
                            const WordNetGraph& graph, std::string_view lemma,
                            Pos pos) {
  auto senses = graph.senses_of(lemma, pos);
  if (senses.empty())
    throw NoSenseError("no senses for '" + std::string(lemma) + "' (" +
                       std::string(1, to_char(pos)) + ")");
  const SenseEntry* best = &senses[0];
  double best_count = store.sense_count(senses[0].sense_key);
  for (const SenseEntry& s : senses.subspan(1)) {
    double c = store.sense_count(s.sense_key);
    if (c > best_count) {  // ties keep the lower sense number
      best = &s;
      best_count = c;
    }
  }
  return *best;
}

const SenseEntry& wn_first_sense(const WordNetGraph& graph,
                                 std::string_view lemma, Pos pos) {
  auto senses = graph.senses_of(lemma, pos);
  if (senses.empty())
    throw NoSenseError("no senses for '" + std::string(lemma) + "' (" +
                       std::string(1, to_char(pos)) + ")");
  return senses[0];
}

}  // namespace wsd
