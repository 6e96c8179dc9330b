#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "helpers.hpp"

namespace {

std::string fixture(const std::string& name) {
  return (wsdtest::fixture_dir() / name).string();
}

std::string out_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("wsdtest_cli_" + name)).string();
}

int run(const std::string& args, const std::string& stdout_to = "/dev/null") {
  std::string cmd = std::string(WSD_CLI_PATH) + " " + args + " > " + stdout_to + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string engine_args() {
  return "disambiguate --dataset " + fixture("corpus.data.xml") +
         " --wordnet " + fixture("wordnet_mini") +
         " --semcor-cntlist " + fixture("semcor.cntlist");
}

}  // namespace

TEST_CASE("disambiguate with default flags reproduces the golden output") {
  std::string out = out_path("golden");
  REQUIRE(run(engine_args() + " --out " + out) == 0);
  CHECK(slurp(out) == slurp(fixture("golden_predictions.txt")));
}

TEST_CASE("disambiguate then score round-trips without edits") {
  std::string out = out_path("roundtrip");
  REQUIRE(run(engine_args() + " --out " + out) == 0);
  std::string report = out_path("report");
  REQUIRE(run("score --gold " + fixture("corpus.gold.key.txt") + " --pred " + out,
              report) == 0);
  CHECK(slurp(report).find("gold=8") != std::string::npos);
}

TEST_CASE("thread count changes nothing in the output bytes") {
  std::string a = out_path("jobs1"), b = out_path("jobs8");
  REQUIRE(run(engine_args() + " --jobs 1 --out " + a) == 0);
  REQUIRE(run(engine_args() + " --jobs 8 --out " + b) == 0);
  std::string bytes = slurp(a);
  CHECK(!bytes.empty());
  CHECK(bytes == slurp(b));
}

TEST_CASE("the POS filter restricts predictions") {
  std::string out = out_path("nouns");
  REQUIRE(run(engine_args() + " --pos n --out " + out) == 0);
  std::istringstream lines(slurp(out));
  std::string line;
  size_t count = 0;
  while (std::getline(lines, line)) {
    ++count;
    CHECK(line.find("%1:") != std::string::npos);  // noun sense keys only
  }
  CHECK(count == 5);  // bank x2, river, money, faculty
}

TEST_CASE("baselines are scoreable files") {
  std::string out = out_path("wn1st");
  REQUIRE(run(engine_args() + " --baseline wn1st --out " + out) == 0);
  std::string report = out_path("wn1st_report");
  REQUIRE(run("score --gold " + fixture("corpus.gold.key.txt") + " --pred " + out +
              " --format tsv", report) == 0);
  CHECK(slurp(report).find("f1\tall") != std::string::npos);

  REQUIRE(run(engine_args() + " --baseline mfs --out " + out_path("mfs")) == 0);
  REQUIRE(run(engine_args() + " --baseline pedersen --sim path --out " +
              out_path("pedersen")) == 0);
}

TEST_CASE("exit codes separate format errors from runtime errors") {
  // Unknown instance id in the prediction file: format problem, exit 2.
  wsdtest::TempFile bad_pred("cli_badpred.txt", "zzz.t0 bank%1:17:00::\n");
  CHECK(run("score --gold " + fixture("corpus.gold.key.txt") + " --pred " +
            bad_pred.path().string()) == 2);
  // The mix-up guard survives a POS filter that would drop the stray id.
  CHECK(run("score --gold " + fixture("corpus.gold.key.txt") + " --pred " +
            bad_pred.path().string() + " --pos v") == 2);
  // Unusable flag value: usage problem, exit 2.
  CHECK(run(engine_args() + " --baseline nosuch") == 2);
  // Missing database files: input problem, exit 2.
  CHECK(run("stats --dataset " + fixture("corpus.data.xml") +
            " --wordnet /no/such/dir") == 2);
}

TEST_CASE("sim prints 1.0 for identical sense keys under wup") {
  std::string out = out_path("sim");
  REQUIRE(run("sim --wordnet " + fixture("wordnet_mini") +
              " --k1 bank%1:17:00:: --k2 bank%1:17:00:: --measure wup", out) == 0);
  CHECK(slurp(out) == "1.000\n");
  // Disconnected pair.
  REQUIRE(run("sim --wordnet " + fixture("wordnet_mini") +
              " --k1 think%2:31:00:: --k2 money%1:21:00:: --measure path", out) == 0);
  CHECK(slurp(out) == "0.000\n");
}

TEST_CASE("stats emits the machine-readable table") {
  std::string out = out_path("stats");
  REQUIRE(run("stats --dataset " + fixture("corpus.data.xml") + " --wordnet " +
              fixture("wordnet_mini") + " --format tsv", out) == 0);
  std::string text = slurp(out);
  CHECK(text.find("terms\t8") != std::string::npos);
  CHECK(text.find("docs\t2") != std::string::npos);
}
