#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wsd::xml {

// Minimal pull reader for the evaluation-corpus XML subset: elements,
// attributes, character data, comments and the XML declaration. No
// namespaces, no DTD. Malformed input raises FormatError with the line.

struct Attribute {
  std::string name;
  std::string value;
};

enum class EventType { start_element, end_element, text, eof };

struct Event {
  EventType type = EventType::eof;
  std::string name;                    // element events
  std::vector<Attribute> attributes;   // start_element only
  bool self_closing = false;           // start_element only
  std::string text;                    // text events, entities decoded
  size_t line = 0;
};

class Reader {
 public:
  Reader(std::string content, std::string origin);
  Event next();

 private:
  [[noreturn]] void fail(const std::string& what) const;
  char peek() const;
  char take();
  bool eat(char c);
  void skip_ws();
  std::string read_name();
  std::string read_attr_value();
  std::string decode(std::string_view raw) const;

  std::string content_;
  std::string origin_;
  size_t at_ = 0;
  size_t line_ = 1;
  bool seen_root_ = false;
};

std::string escape(std::string_view text);

}  // namespace wsd::xml
