#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include "helpers.hpp"
#include "wsd/error.hpp"
#include "wsd/wordnet.hpp"

using namespace wsd;
using namespace wsdtest;

namespace {

// Test-side oracle: every simple path over the synsets' own relation lists,
// treated undirected. Independent of the graph's search structures.
std::optional<int> brute_shortest_all_edges(const WordNetGraph& g, SynsetId a,
                                            SynsetId b) {
  std::map<SynsetId, std::set<SynsetId>> adj;
  for (const Synset& s : g.synsets())
    for (const auto& [rel, target] : s.relations) {
      adj[s.id].insert(target);
      adj[target].insert(s.id);
    }
  std::set<SynsetId> visited{a};
  std::set<SynsetId> frontier{a};
  int steps = 0;
  while (!frontier.empty()) {
    if (frontier.contains(b)) return steps;
    std::set<SynsetId> next;
    for (SynsetId u : frontier)
      for (SynsetId v : adj[u])
        if (visited.insert(v).second) next.insert(v);
    frontier = std::move(next);
    ++steps;
  }
  return std::nullopt;
}

// Oracle for the least common subsumer: intersect full ancestor sets and
// take the deepest member.
std::optional<SynsetId> brute_lcs(const WordNetGraph& g, SynsetId a, SynsetId b) {
  auto anc_a = g.ancestor_set(a);
  auto anc_b = g.ancestor_set(b);
  std::optional<SynsetId> best;
  for (SynsetId x : anc_a)
    for (SynsetId y : anc_b)
      if (x == y && (!best || g.depth(x) > g.depth(*best))) best = x;
  return best;
}

}  // namespace

TEST_CASE("senses are ranked exactly as the index file lists them") {
  const WordNetGraph& g = mini_graph();

  auto bank = g.senses_of("bank", Pos::noun);
  REQUIRE(bank.size() == 4);
  CHECK(bank[0].sense_number == 1);
  CHECK(bank[0].synset == nid(160));
  CHECK(bank[1].synset == nid(210));
  CHECK(bank[2].synset == nid(240));
  CHECK(bank[3].synset == nid(250));
  CHECK(bank[0].sense_key == "bank%1:17:00::");
  CHECK(bank[1].sense_key == "bank%1:14:00::");

  auto walk = g.senses_of("walk", Pos::verb);
  REQUIRE(walk.size() == 3);
  CHECK(walk[0].sense_key == "walk%2:38:00::");

  CHECK(g.senses_of("faculty", Pos::noun).size() == 2);
  CHECK(g.senses_of("zzzz-not-a-word", Pos::noun).empty());
  CHECK(g.senses_of("walk", Pos::noun).size() == 1);  // noun homograph
}

TEST_CASE("lemma lookup normalizes case and spaces") {
  const WordNetGraph& g = mini_graph();
  CHECK(g.senses_of("Bank", Pos::noun).size() == 4);
  CHECK(g.senses_of("body of water", Pos::noun).size() == 1);
  CHECK(g.senses_of("body_of_water", Pos::noun).size() == 1);
}

TEST_CASE("sense numbers cover 1..k with no gaps for every lemma") {
  const WordNetGraph& g = mini_graph();
  std::set<std::pair<std::string, Pos>> words;
  for (const Synset& s : g.synsets())
    for (const std::string& lemma : s.lemmas)
      words.insert({normalize_lemma(lemma), s.id.pos});
  REQUIRE(!words.empty());
  for (const auto& [lemma, pos] : words) {
    auto senses = g.senses_of(lemma, pos);
    REQUIRE_MESSAGE(!senses.empty(), lemma);
    for (size_t i = 0; i < senses.size(); ++i)
      CHECK(senses[i].sense_number == int(i) + 1);
  }
}

TEST_CASE("every relation target resolves after load") {
  const WordNetGraph& g = mini_graph();
  for (const Synset& s : g.synsets())
    for (const auto& [rel, target] : s.relations)
      CHECK(g.find(target) != nullptr);
}

TEST_CASE("sense keys round-trip through the key index") {
  const WordNetGraph& g = mini_graph();
  const SenseEntry* e = g.sense_by_key("bank%1:14:00::");
  REQUIRE(e != nullptr);
  CHECK(e->lemma == "bank");
  CHECK(e->sense_number == 2);
  CHECK(g.sense_by_key("nosuch%1:00:00::") == nullptr);
}

TEST_CASE("lcs: reflexivity, ancestor case, and the brute-force oracle") {
  const WordNetGraph& g = mini_graph();
  SynsetId bank1 = nid(160), slope = nid(150), river = nid(180);

  CHECK(g.lcs(bank1, bank1) == bank1);
  CHECK(g.lcs(bank1, slope) == slope);  // direct hypernym

  // Deepest shared ancestor of riverbank and river is the formation node.
  auto l = g.lcs(bank1, river);
  REQUIRE(l.has_value());
  CHECK(*l == nid(140));
  CHECK(l == brute_lcs(g, bank1, river));

  // Verb taxonomies are disjoint; the virtual root is the only subsumer.
  auto cross_tree = g.lcs(vid(410), vid(460));
  REQUIRE(cross_tree.has_value());
  CHECK(cross_tree->is_virtual_root());

  CHECK_THROWS_AS((void)g.lcs(bank1, vid(410)), std::invalid_argument);
  CHECK_THROWS_AS((void)g.lcs({Pos::adj, 500}, {Pos::adj, 510}),
                  std::invalid_argument);
}

TEST_CASE("lcs depth never exceeds either argument's depth") {
  const WordNetGraph& g = mini_graph();
  std::vector<SynsetId> nouns;
  for (const Synset& s : g.synsets())
    if (s.id.pos == Pos::noun) nouns.push_back(s.id);
  for (SynsetId a : nouns)
    for (SynsetId b : nouns) {
      auto l = g.lcs(a, b);
      REQUIRE(l.has_value());
      CHECK(g.depth(*l) <= std::min(g.depth(a), g.depth(b)));
    }
}

TEST_CASE("shortest paths match exhaustive enumeration over the full graph") {
  const WordNetGraph& g = mini_graph();
  const SynsetId probes[] = {nid(160), nid(210), nid(180), nid(230),
                             vid(410), vid(440), vid(450), {Pos::adj, 520}};
  for (SynsetId a : probes)
    for (SynsetId b : probes) {
      auto got = g.shortest_path_len(a, b, EdgeFilter::all);
      auto want = brute_shortest_all_edges(g, a, b);
      CHECK_MESSAGE(got == want, to_string(a), " vs ", to_string(b));
    }
}

TEST_CASE("taxonomy paths: trivial cases and virtual-root traversal") {
  const WordNetGraph& g = mini_graph();
  CHECK(g.shortest_path_len(nid(160), nid(160), EdgeFilter::taxonomy) == 0);
  CHECK(g.shortest_path_len(nid(160), nid(150), EdgeFilter::taxonomy) == 1);
  // riverbank - slope - formation - river
  CHECK(g.shortest_path_len(nid(160), nid(180), EdgeFilter::taxonomy) == 3);
  // Disjoint verb trees connect only through the virtual root.
  CHECK(g.shortest_path_len(vid(410), vid(450), EdgeFilter::taxonomy) == 3);
  // The full-relation graph excludes virtual roots, so they stay apart.
  CHECK(g.shortest_path_len(vid(460), nid(230), EdgeFilter::all) == std::nullopt);
  // Cross-POS derivation edge bridges the verb and noun components.
  CHECK(g.shortest_path_len(vid(440), nid(240), EdgeFilter::all) == 1);
}

TEST_CASE("shortest_path_len is symmetric and respects the triangle inequality") {
  const WordNetGraph& g = mini_graph();
  std::vector<SynsetId> ids;
  for (const Synset& s : g.synsets()) ids.push_back(s.id);
  std::uniform_int_distribution<size_t> pick(0, ids.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    SynsetId a = ids[pick(rng())], b = ids[pick(rng())], c = ids[pick(rng())];
    auto ab = g.shortest_path_len(a, b, EdgeFilter::all);
    auto ba = g.shortest_path_len(b, a, EdgeFilter::all);
    CHECK(ab == ba);
    auto ac = g.shortest_path_len(a, c, EdgeFilter::all);
    auto cb = g.shortest_path_len(c, b, EdgeFilter::all);
    if (ab && ac && cb) CHECK(*ab <= *ac + *cb);
  }
}

TEST_CASE("depths descend from the virtual root") {
  const WordNetGraph& g = mini_graph();
  CHECK(g.depth(nid(100)) == 1);   // top noun
  CHECK(g.depth(nid(160)) == 5);   // riverbank
  CHECK(g.depth(nid(390)) == 6);   // deepest noun
  CHECK(g.depth(nid(180)) == 4);   // two hypernyms, shorter chain wins
  CHECK(g.max_depth(Pos::noun) == 6);
  CHECK(g.max_depth(Pos::verb) == 4);
  for (const Synset& s : g.synsets()) {
    if (s.id.pos != Pos::noun && s.id.pos != Pos::verb) continue;
    auto parents = g.hypernyms(s.id);
    if (parents.empty()) {
      CHECK(g.depth(s.id) == 1);
      continue;
    }
    bool ok = false;
    for (SynsetId p : parents)
      if (g.depth(s.id) >= g.depth(p) + 1) ok = true;
    CHECK(ok);
  }
}

TEST_CASE("loader handles production-database quirks") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "wsdtest_quirks";
  fs::remove_all(dir);
  fs::create_directories(dir);

  // Byte offsets repeat across POS files, adjective words carry syntactic
  // markers, instance hypernyms use '@i', and data-file words keep their
  // capitalization while the index is lowercase.
  std::ofstream(dir / "data.noun")
      << "00001740 03 n 01 entity 0 002 ~ 00001930 n 0000 ~i 08221897 n 0000 "
         "| that which exists\n"
      << "00001930 03 n 01 physical_entity 0 001 @ 00001740 n 0000 | physical\n"
      << "08221897 15 n 02 Berlin 0 German_capital 0 001 @i 00001740 n 0000 "
         "| capital of Germany\n";
  std::ofstream(dir / "data.verb")
      << "00001740 29 v 02 breathe 0 respire 3 001 ~ 00002325 v 0000 02 + 02 00 "
         "+ 08 00 | draw air\n"
      << "00002325 29 v 01 exhale 0 001 @ 00001740 v 0000 01 + 02 00 | breathe out\n";
  std::ofstream(dir / "data.adj")
      << "00001740 00 a 02 able 0 capable(p) 0 001 & 00002098 a 0000 | having skill\n"
      << "00002098 00 s 01 unable 0 001 & 00001740 a 0000 | lacking skill\n";
  std::ofstream(dir / "data.adv")
      << "00000600 02 r 01 ably 0 000 | with skill\n";
  std::ofstream(dir / "index.noun")
      << "berlin n 1 1 @i 1 0 08221897\n"
      << "entity n 1 1 ~ 1 0 00001740\n"
      << "german_capital n 1 1 @i 1 0 08221897\n"
      << "physical_entity n 1 1 @ 1 0 00001930\n";
  std::ofstream(dir / "index.verb")
      << "breathe v 1 1 ~ 1 1 00001740\n"
      << "exhale v 1 1 @ 1 0 00002325\n"
      << "respire v 1 1 ~ 1 0 00001740\n";
  std::ofstream(dir / "index.adj")
      << "able a 1 1 & 1 1 00001740\n"
      << "capable a 1 1 & 1 0 00001740\n"
      << "unable a 1 1 & 1 0 00002098\n";
  std::ofstream(dir / "index.adv") << "ably r 1 0 1 0 00000600\n";
  std::ofstream(dir / "index.sense")
      << "able%3:00:00:: 00001740 1 10\n"
      << "ably%4:02:00:: 00000600 1 0\n"
      << "berlin%1:15:00:: 08221897 1 1\n"
      << "breathe%2:29:00:: 00001740 1 5\n"
      << "capable%3:00:00:: 00001740 1 0\n"
      << "entity%1:03:00:: 00001740 1 0\n"
      << "exhale%2:29:00:: 00002325 1 0\n"
      << "german_capital%1:15:00:: 08221897 1 0\n"
      << "physical_entity%1:03:00:: 00001930 1 0\n"
      << "respire%2:29:00:: 00001740 1 0\n"
      << "unable%5:00:00:able:00 00002098 1 0\n";

  WordNetGraph g = load_wordnet(dir);
  fs::remove_all(dir);

  // The same offset resolves per POS.
  CHECK(g.at({Pos::noun, 1740}).lemmas[0] == "entity");
  CHECK(g.at({Pos::verb, 1740}).lemmas[0] == "breathe");
  CHECK(g.at({Pos::adj, 1740}).lemmas[0] == "able");

  // Markers are stripped and mixed-case data words stay findable.
  CHECK(g.at({Pos::adj, 1740}).lemmas[1] == "capable");
  CHECK(g.senses_of("capable", Pos::adj).size() == 1);
  CHECK(g.senses_of("German capital", Pos::noun).size() == 1);
  CHECK(g.at({Pos::noun, 8221897}).sense_keys[1] == "german_capital%1:15:00::");

  // Instance hypernyms join the taxonomy.
  CHECK(g.depth({Pos::noun, 8221897}) == 2);
  CHECK(g.lcs({Pos::noun, 8221897}, {Pos::noun, 1930}) == SynsetId{Pos::noun, 1740});

  // Satellites answer to the adjective POS.
  const SenseEntry* sat = g.sense_by_key("unable%5:00:00:able:00");
  REQUIRE(sat != nullptr);
  CHECK(sat->pos == Pos::adj);
  CHECK(g.at(sat->synset).satellite);
}

TEST_CASE("loader rejects missing and malformed databases") {
  CHECK_THROWS_AS(load_wordnet("/no/such/dir"), FormatError);

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "wsdtest_baddb";
  fs::remove_all(dir);
  fs::copy(fixture_dir() / "wordnet_mini", dir);

  SUBCASE("truncated data line reports file and line number") {
    std::ofstream(dir / "data.adv", std::ios::app)
        << "00000620 02 r 01 badly 0 001 !\n";
    try {
      load_wordnet(dir);
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      std::string what = e.what();
      CHECK(what.find("data.adv") != std::string::npos);
      CHECK(what.find(":4") != std::string::npos);
    }
  }

  SUBCASE("dangling pointer target is rejected") {
    std::ofstream(dir / "data.adv", std::ios::app)
        << "00000620 02 r 01 badly 0 001 ! 00009999 r 0101 | in a bad way\n";
    CHECK_THROWS_WITH_AS(load_wordnet(dir),
                         doctest::Contains("dangling"), FormatError);
  }

  SUBCASE("index entry referencing a missing synset is rejected") {
    std::ofstream(dir / "index.adv", std::ios::app)
        << "badly r 1 1 ! 1 0 00009999\n";
    CHECK_THROWS_AS(load_wordnet(dir), FormatError);
  }

  fs::remove_all(dir);
}
