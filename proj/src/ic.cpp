#include "wsd/ic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include "wsd/error.hpp"
#include "wsd/heuristics.hpp"

namespace wsd {

double IcTable::count(SynsetId id) const {
  auto it = counts_.find(pack(id));
  return it == counts_.end() ? smoothing_ : it->second;
}

void IcTable::set_count(SynsetId id, double count) {
  counts_[pack(id)] = count;
}

double IcTable::ic(SynsetId id) const {
  if (id.is_virtual_root()) return 0.0;
  double total = root_totals_[pos_index(id.pos)];
  if (total <= 0.0) return 0.0;
  double p = count(id) / total;
  if (p >= 1.0) return 0.0;
  return -std::log(p);
}

IcTable load_ic_file(const std::filesystem::path& path) {
  const std::string fname = path.string();
  std::ifstream in(path);
  if (!in) throw FormatError("missing file: " + fname);

  IcTable table;
  std::string line;
  size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("wnver::", 0) == 0) {
      saw_header = true;
      continue;
    }
    if (line_no == 1 && !saw_header)
      std::cerr << "warning: " << fname << " has no wnver:: header\n";

    size_t sp = line.find(' ');
    if (sp == std::string::npos || sp < 2)
      throw FormatError(fname, line_no, "expected '<offset><pos> <count> [ROOT]'");
    std::string_view id_tok(line.data(), sp);
    char pos_letter = id_tok.back();
    auto pos = pos_from_char(pos_letter);
    if (!pos)
      throw FormatError(fname, line_no,
                        std::string("unknown POS letter '") + pos_letter + "'");
    uint32_t offset = 0;
    auto [p, ec] = std::from_chars(id_tok.data(), id_tok.data() + id_tok.size() - 1, offset);
    if (ec != std::errc() || p != id_tok.data() + id_tok.size() - 1)
      throw FormatError(fname, line_no, "bad synset offset in '" + std::string(id_tok) + "'");

    size_t count_end = line.find(' ', sp + 1);
    std::string_view count_tok =
        count_end == std::string::npos
            ? std::string_view(line).substr(sp + 1)
            : std::string_view(line).substr(sp + 1, count_end - sp - 1);
    double count = 0.0;
    try {
      size_t used = 0;
      count = std::stod(std::string(count_tok), &used);
      if (used != count_tok.size()) throw std::invalid_argument("trailing");
    } catch (...) {
      throw FormatError(fname, line_no, "non-numeric count '" + std::string(count_tok) + "'");
    }

    bool is_root = false;
    if (count_end != std::string::npos) {
      std::string_view rest = std::string_view(line).substr(count_end + 1);
      while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      if (rest == "ROOT") is_root = true;
      else if (!rest.empty())
        throw FormatError(fname, line_no, "unexpected trailing '" + std::string(rest) + "'");
    }

    SynsetId id{*pos, offset};
    table.set_count(id, count);
    if (is_root)
      table.set_root_total(*pos, table.root_total(*pos) + count);
  }
  return table;
}

void save_ic_file(const IcTable& table, const WordNetGraph& graph,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "wnver::3.0\n";

  std::vector<SynsetId> roots;
  for (Pos pos : {Pos::noun, Pos::verb})
    for (SynsetId r : graph.taxonomy_roots(pos)) roots.push_back(r);
  std::sort(roots.begin(), roots.end(),
            [](SynsetId a, SynsetId b) { return pack(a) < pack(b); });

  std::vector<uint64_t> keys;
  keys.reserve(table.counts().size());
  for (const auto& [k, v] : table.counts()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());

  out.precision(17);
  for (uint64_t k : keys) {
    SynsetId id{kAllPos[k & 3], uint32_t(k >> 2)};
    char buf[12];
    std::snprintf(buf, sizeof buf, "%08u%c", id.offset, to_char(id.pos));
    out << buf << ' ' << table.counts().at(k);
    if (std::binary_search(roots.begin(), roots.end(), id,
                           [](SynsetId a, SynsetId b) { return pack(a) < pack(b); }))
      out << " ROOT";
    out << '\n';
  }
}

IcTable compute_ic(const WordNetGraph& graph, const HeuristicStore& counts,
                   size_t* unresolved) {
  std::unordered_map<uint64_t, double> raw;
  size_t skipped = 0;
  for (const auto& [key, count] : counts.sense_counts()) {
    const SenseEntry* sense = graph.sense_by_key(key);
    if (!sense) {
      ++skipped;
      continue;
    }
    SynsetId synset = sense->synset;
    if (synset.pos == Pos::noun || synset.pos == Pos::verb) {
      for (SynsetId ancestor : graph.ancestor_set(synset)) {
        if (ancestor.is_virtual_root()) continue;
        raw[pack(ancestor)] += count;
      }
    } else {
      raw[pack(synset)] += count;
    }
  }
  if (unresolved) *unresolved = skipped;

  IcTable table;
  for (const Synset& s : graph.synsets()) {
    auto it = raw.find(pack(s.id));
    double c = it == raw.end() ? 0.0 : it->second;
    table.set_count(s.id, c + 1.0);  // add-one smoothing everywhere
  }
  for (Pos pos : {Pos::noun, Pos::verb}) {
    double total = 0.0;
    for (SynsetId r : graph.taxonomy_roots(pos)) total += table.count(r);
    table.set_root_total(pos, total);
  }
  return table;
}

}  // namespace wsd
