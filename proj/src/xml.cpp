#include "wsd/xml.hpp"

#include <cctype>

#include "wsd/error.hpp"

namespace wsd::xml {

Reader::Reader(std::string content, std::string origin)
    : content_(std::move(content)), origin_(std::move(origin)) {}

void Reader::fail(const std::string& what) const {
  throw FormatError(origin_, line_, what);
}

char Reader::peek() const { return at_ < content_.size() ? content_[at_] : '\0'; }

char Reader::take() {
  if (at_ >= content_.size()) fail("unexpected end of input");
  char c = content_[at_++];
  if (c == '\n') ++line_;
  return c;
}

bool Reader::eat(char c) {
  if (peek() != c) return false;
  take();
  return true;
}

void Reader::skip_ws() {
  while (at_ < content_.size() && std::isspace(static_cast<unsigned char>(content_[at_]))) take();
}

static bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || c == ':';
}

std::string Reader::read_name() {
  std::string name;
  while (name_char(peek())) name += take();
  if (name.empty()) fail("expected a name");
  return name;
}

std::string Reader::read_attr_value() {
  char quote = take();
  if (quote != '"' && quote != '\'') fail("attribute value must be quoted");
  std::string raw;
  while (peek() != quote) raw += take();
  take();  // closing quote
  return decode(raw);
}

std::string Reader::decode(std::string_view raw) const {
  std::string out;
  out.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != '&') {
      out += raw[i];
      continue;
    }
    size_t end = raw.find(';', i);
    if (end == std::string_view::npos) fail("unterminated entity reference");
    std::string_view ent = raw.substr(i + 1, end - i - 1);
    if (ent == "amp") out += '&';
    else if (ent == "lt") out += '<';
    else if (ent == "gt") out += '>';
    else if (ent == "apos") out += '\'';
    else if (ent == "quot") out += '"';
    else if (!ent.empty() && ent[0] == '#') {
      int code = 0;
      try {
        code = ent[1] == 'x' || ent[1] == 'X'
                   ? std::stoi(std::string(ent.substr(2)), nullptr, 16)
                   : std::stoi(std::string(ent.substr(1)));
      } catch (...) {
        fail("bad character reference '&" + std::string(ent) + ";'");
      }
      if (code <= 0 || code > 0x10FFFF) fail("character reference out of range");
      // Encode as UTF-8.
      if (code < 0x80) {
        out += char(code);
      } else if (code < 0x800) {
        out += char(0xC0 | (code >> 6));
        out += char(0x80 | (code & 0x3F));
      } else if (code < 0x10000) {
        out += char(0xE0 | (code >> 12));
        out += char(0x80 | ((code >> 6) & 0x3F));
        out += char(0x80 | (code & 0x3F));
      } else {
        out += char(0xF0 | (code >> 18));
        out += char(0x80 | ((code >> 12) & 0x3F));
        out += char(0x80 | ((code >> 6) & 0x3F));
        out += char(0x80 | (code & 0x3F));
      }
    } else {
      fail("unknown entity '&" + std::string(ent) + ";'");
    }
    i = end;
  }
  return out;
}

Event Reader::next() {
  while (at_ < content_.size()) {
    size_t line = line_;
    if (peek() != '<') {
      std::string raw;
      while (at_ < content_.size() && peek() != '<') raw += take();
      std::string text = decode(raw);
      // Whitespace between elements is not a text event.
      if (text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      return {EventType::text, {}, {}, false, std::move(text), line};
    }
    take();  // '<'
    if (eat('?')) {  // declaration / processing instruction
      while (true) {
        if (take() == '?' && eat('>')) break;
      }
      continue;
    }
    if (eat('!')) {  // comment only; no DTD support
      if (!(eat('-') && eat('-'))) fail("unsupported '<!' construct");
      int dashes = 0;
      while (true) {
        char c = take();
        if (c == '-') ++dashes;
        else if (c == '>' && dashes >= 2) break;
        else dashes = 0;
      }
      continue;
    }
    if (eat('/')) {
      std::string name = read_name();
      skip_ws();
      if (!eat('>')) fail("malformed end tag </" + name + ">");
      return {EventType::end_element, std::move(name), {}, false, {}, line};
    }
    Event ev;
    ev.type = EventType::start_element;
    ev.line = line;
    ev.name = read_name();
    while (true) {
      skip_ws();
      if (eat('>')) break;
      if (eat('/')) {
        if (!eat('>')) fail("malformed empty-element tag");
        ev.self_closing = true;
        break;
      }
      Attribute attr;
      attr.name = read_name();
      skip_ws();
      if (!eat('=')) fail("attribute '" + attr.name + "' missing '='");
      skip_ws();
      attr.value = read_attr_value();
      ev.attributes.push_back(std::move(attr));
    }
    seen_root_ = true;
    return ev;
  }
  if (!seen_root_) fail("no root element");
  return {EventType::eof, {}, {}, false, {}, line_};
}

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace wsd::xml
