#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "wsd/heuristics.hpp"
#include "wsd/wordnet.hpp"

namespace wsdtest {

inline std::filesystem::path fixture_dir() { return WSD_FIXTURE_DIR; }

inline const wsd::WordNetGraph& mini_graph() {
  static wsd::WordNetGraph graph = wsd::load_wordnet(fixture_dir() / "wordnet_mini");
  return graph;
}

inline const wsd::HeuristicStore& mini_cntlist() {
  static wsd::HeuristicStore store =
      wsd::load_semcor_cntlist(fixture_dir() / "semcor.cntlist");
  return store;
}

inline wsd::SynsetId nid(uint32_t offset) { return {wsd::Pos::noun, offset}; }
inline wsd::SynsetId vid(uint32_t offset) { return {wsd::Pos::verb, offset}; }

// Scratch file helper for malformed-input tests.
class TempFile {
 public:
  explicit TempFile(const std::string& name, const std::string& content) {
    path_ = std::filesystem::temp_directory_path() / ("wsdtest_" + name);
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::mt19937& rng() {
  static std::mt19937 gen(20240811u);
  return gen;
}

}  // namespace wsdtest
