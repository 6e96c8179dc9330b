#pragma once

#include <stdexcept>
#include <string>

namespace wsd {

// Input-format problems: malformed database files, corpora, or key files.
// The CLI maps these to exit code 2; every other failure exits with 1.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
  FormatError(const std::string& file, size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
};

// Raised when a (lemma, pos) has no sense in the dictionary at all.
class NoSenseError : public std::runtime_error {
 public:
  explicit NoSenseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wsd
