#include "wsd/pos.hpp"

namespace wsd {

std::optional<Pos> pos_from_char(char c) {
  switch (c) {
    case 'n': return Pos::noun;
    case 'v': return Pos::verb;
    case 'a':
    case 's': return Pos::adj;
    case 'r': return Pos::adv;
    default: return std::nullopt;
  }
}

std::optional<Pos> pos_from_tag(std::string_view tag) {
  if (tag == "NOUN") return Pos::noun;
  if (tag == "VERB") return Pos::verb;
  if (tag == "ADJ") return Pos::adj;
  if (tag == "ADV") return Pos::adv;
  return std::nullopt;
}

const char* pos_name(Pos p) {
  switch (p) {
    case Pos::noun: return "noun";
    case Pos::verb: return "verb";
    case Pos::adj: return "adj";
    case Pos::adv: return "adv";
  }
  return "?";
}

std::optional<PosSet> pos_set_from_string(std::string_view csv) {
  PosSet set;
  size_t i = 0;
  while (i < csv.size()) {
    size_t j = csv.find(',', i);
    if (j == std::string_view::npos) j = csv.size();
    std::string_view item = csv.substr(i, j - i);
    if (item == "adj") item = "a";
    if (item == "adv") item = "r";
    if (item.size() != 1) return std::nullopt;
    auto p = pos_from_char(item[0]);
    if (!p) return std::nullopt;
    set.insert(*p);
    i = j + 1;
  }
  if (set.empty()) return std::nullopt;
  return set;
}

std::string to_string(PosSet set) {
  std::string out;
  for (Pos p : kAllPos) {
    if (!set.contains(p)) continue;
    if (!out.empty()) out += ',';
    out += to_char(p);
  }
  return out;
}

}  // namespace wsd
