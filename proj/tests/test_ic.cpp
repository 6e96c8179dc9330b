#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "helpers.hpp"
#include "wsd/error.hpp"
#include "wsd/heuristics.hpp"
#include "wsd/ic.hpp"

using namespace wsd;
using namespace wsdtest;

TEST_CASE("load_ic_file: ROOT totals and the ln-ratio definition") {
  IcTable table = load_ic_file(fixture_dir() / "ic-fixture.dat");

  CHECK(table.root_total(Pos::noun) == 1000.0);
  CHECK(table.root_total(Pos::verb) == 600.0);

  CHECK(table.ic(nid(100)) == 0.0);  // ROOT entry: p = 1
  CHECK(table.ic(nid(110)) == doctest::Approx(std::log(1000.0 / 600.0)));
  CHECK(table.ic(nid(160)) == doctest::Approx(std::log(20.0)));
  // Half the POS total is exactly ln 2.
  CHECK(table.ic(vid(410)) == doctest::Approx(std::log(2.0)));
  // Synsets absent from the file fall back to the smoothing count.
  CHECK(table.ic(nid(120)) == doctest::Approx(std::log(1000.0)));
  // The virtual root is 0 by definition.
  CHECK(table.ic(SynsetId{Pos::noun, 0}) == 0.0);
}

TEST_CASE("load_ic_file: format errors") {
  TempFile bad_pos("ic_badpos.dat", "wnver::x\n00000100z 5 ROOT\n");
  CHECK_THROWS_AS(load_ic_file(bad_pos.path()), FormatError);

  TempFile bad_count("ic_badcount.dat", "wnver::x\n00000100n five\n");
  CHECK_THROWS_AS(load_ic_file(bad_count.path()), FormatError);

  // A missing header is tolerated.
  TempFile no_header("ic_nohdr.dat", "00000100n 5 ROOT\n");
  IcTable t = load_ic_file(no_header.path());
  CHECK(t.root_total(Pos::noun) == 5.0);
}

TEST_CASE("compute_ic: empty corpus leaves a uniform zero-information table") {
  const WordNetGraph& g = mini_graph();
  IcTable table = compute_ic(g, HeuristicStore{});
  CHECK(table.ic(nid(100)) == 0.0);
  CHECK(table.ic(nid(160)) == 0.0);
  CHECK(table.ic(nid(390)) == 0.0);
}

TEST_CASE("compute_ic: one occurrence reaches the synset and every ancestor") {
  const WordNetGraph& g = mini_graph();
  HeuristicStore store;
  store.add("walk%2:38:00::", 1.0);
  IcTable table = compute_ic(g, store);

  CHECK(table.count(vid(410)) == 2.0);  // 1 + smoothing
  CHECK(table.count(vid(400)) == 2.0);  // ancestor
  CHECK(table.count(vid(430)) == 1.0);  // untouched sibling
  CHECK(table.count(vid(420)) == 1.0);  // child is not an ancestor
}

TEST_CASE("compute_ic: fixture counts equal hand propagation") {
  const WordNetGraph& g = mini_graph();
  size_t unresolved = 0;
  IcTable table = compute_ic(g, mini_cntlist(), &unresolved);
  CHECK(unresolved == 0);

  // Verb tree: walk senses 90+5+5 plus travel's own 3 pool at the root.
  CHECK(table.count(vid(410)) == 91.0);
  CHECK(table.count(vid(400)) == 104.0);
  CHECK(table.count(vid(450)) == 13.0);  // think 10 + 2 + smoothing
  CHECK(table.count(vid(420)) == 1.0);
  CHECK(table.root_total(Pos::verb) == 117.0);
  CHECK(table.ic(vid(410)) == doctest::Approx(-std::log(91.0 / 117.0)));

  // Unresolvable keys are skipped, not fatal.
  HeuristicStore drifted;
  drifted.add("walk%2:38:00::", 2.0);
  drifted.add("ghost%1:99:99::", 7.0);
  IcTable t2 = compute_ic(g, drifted, &unresolved);
  CHECK(unresolved == 1);
  CHECK(t2.count(vid(410)) == 3.0);
}

TEST_CASE("ic is monotone non-increasing along hypernym chains") {
  const WordNetGraph& g = mini_graph();
  IcTable table = compute_ic(g, mini_cntlist());
  for (const Synset& s : g.synsets()) {
    if (s.id.pos != Pos::noun && s.id.pos != Pos::verb) continue;
    for (SynsetId parent : g.hypernyms(s.id)) {
      CHECK(table.count(parent) >= table.count(s.id));
      CHECK(table.ic(parent) <= table.ic(s.id));
    }
  }
}

TEST_CASE("computed tables survive a save/load round trip bit for bit") {
  const WordNetGraph& g = mini_graph();
  IcTable table = compute_ic(g, mini_cntlist());

  auto path = std::filesystem::temp_directory_path() / "wsdtest_roundtrip.dat";
  save_ic_file(table, g, path);
  IcTable loaded = load_ic_file(path);
  std::filesystem::remove(path);

  REQUIRE(loaded.counts().size() == table.counts().size());
  for (const auto& [key, count] : table.counts()) {
    auto it = loaded.counts().find(key);
    REQUIRE(it != loaded.counts().end());
    CHECK(it->second == count);  // exact, not approximate
  }
  for (Pos pos : {Pos::noun, Pos::verb})
    CHECK(loaded.root_total(pos) == table.root_total(pos));
  for (const Synset& s : g.synsets())
    CHECK(loaded.ic(s.id) == table.ic(s.id));
}
