#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

namespace wsd {

// Part of speech, carrying the single-letter tag used by the database files.
enum class Pos : char { noun = 'n', verb = 'v', adj = 'a', adv = 'r' };

inline constexpr std::array<Pos, 4> kAllPos = {Pos::noun, Pos::verb, Pos::adj,
                                               Pos::adv};

constexpr char to_char(Pos p) { return static_cast<char>(p); }

constexpr int pos_index(Pos p) {
  switch (p) {
    case Pos::noun: return 0;
    case Pos::verb: return 1;
    case Pos::adj: return 2;
    case Pos::adv: return 3;
  }
  return 0;
}

// Accepts the database letters; 's' (adjective satellite) maps to adj.
std::optional<Pos> pos_from_char(char c);

// Accepts the coarse corpus tags NOUN/VERB/ADJ/ADV.
std::optional<Pos> pos_from_tag(std::string_view tag);

const char* pos_name(Pos p);

// A small set of POS values, e.g. the POS-of-interest filter.
class PosSet {
 public:
  constexpr PosSet() = default;
  constexpr PosSet(std::initializer_list<Pos> ps) {
    for (Pos p : ps) insert(p);
  }
  static constexpr PosSet all() {
    return {Pos::noun, Pos::verb, Pos::adj, Pos::adv};
  }
  constexpr void insert(Pos p) { bits_ |= uint8_t{1} << pos_index(p); }
  constexpr bool contains(Pos p) const {
    return bits_ & (uint8_t{1} << pos_index(p));
  }
  constexpr bool empty() const { return bits_ == 0; }
  friend constexpr bool operator==(PosSet, PosSet) = default;

 private:
  uint8_t bits_ = 0;
};

// Parses "n,v,a,r" style lists; rejects unknown letters.
std::optional<PosSet> pos_set_from_string(std::string_view csv);
std::string to_string(PosSet set);

}  // namespace wsd
