#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "wsd/error.hpp"
#include "wsd/evaluation.hpp"

using namespace wsd;
using namespace wsdtest;

namespace {

GoldKeys gold_of(std::initializer_list<std::pair<std::string, std::string>> rows) {
  GoldKeys gold;
  for (const auto& [id, key] : rows) gold.by_instance[id].insert(key);
  return gold;
}

Prediction pred(const std::string& id, const std::string& key) {
  return {id, key, Provenance::scsmm};
}

}  // namespace

TEST_CASE("precision, recall and F1 from the correct/attempted/gold counts") {
  GoldKeys gold = gold_of({{"i1", "a%1:01:00::"},
                           {"i2", "b%1:01:00::"},
                           {"i3", "c%1:01:00::"},
                           {"i4", "d%1:01:00::"},
                           {"i5", "e%1:01:00::"}});

  SUBCASE("full coverage, all correct") {
    std::vector<Prediction> preds;
    for (const auto& [id, keys] : gold.by_instance)
      preds.push_back(pred(id, *keys.begin()));
    ScoreReport r = score(gold, preds);
    CHECK(r.overall.precision() == 1.0);
    CHECK(r.overall.recall() == 1.0);
    CHECK(r.overall.f1() == 1.0);
  }

  SUBCASE("3 correct of 4 attempted of 5 gold") {
    std::vector<Prediction> preds = {pred("i1", "a%1:01:00::"),
                                     pred("i2", "b%1:01:00::"),
                                     pred("i3", "c%1:01:00::"),
                                     pred("i4", "wrong%1:01:00::")};
    ScoreReport r = score(gold, preds);
    CHECK(r.overall.precision() == doctest::Approx(0.75));
    CHECK(r.overall.recall() == doctest::Approx(0.6));
    CHECK(r.overall.f1() == doctest::Approx(2.0 * 0.45 / 1.35));
  }

  SUBCASE("empty predictions score zero everywhere") {
    ScoreReport r = score(gold, {});
    CHECK(r.overall.precision() == 0.0);
    CHECK(r.overall.recall() == 0.0);
    CHECK(r.overall.f1() == 0.0);
  }

  SUBCASE("a prediction outside the gold set is an input error") {
    std::vector<Prediction> preds = {pred("nope", "a%1:01:00::")};
    CHECK_THROWS_AS(score(gold, preds), FormatError);
  }
}

TEST_CASE("any gold key of a multi-key instance counts as correct") {
  GoldKeys gold;
  gold.by_instance["i1"] = {"a%1:01:00::", "b%1:01:00::"};
  std::vector<Prediction> preds = {pred("i1", "b%1:01:00::")};
  ScoreReport r = score(gold, preds);
  CHECK(r.overall.n_correct == 1);
}

TEST_CASE("POS and dataset slices come from keys and id prefixes") {
  GoldKeys gold = gold_of({{"se2.d0.t0", "run%2:38:00::"},
                           {"se2.d0.t1", "cat%1:05:00::"},
                           {"se3.d0.t0", "dog%1:05:00::"}});
  std::vector<Prediction> preds = {pred("se2.d0.t0", "run%2:38:00::"),
                                   pred("se2.d0.t1", "other%1:05:00::"),
                                   pred("se3.d0.t0", "dog%1:05:00::")};
  ScoreReport r = score(gold, preds);
  CHECK(r.by_pos.at(Pos::verb).n_correct == 1);
  CHECK(r.by_pos.at(Pos::noun).n_gold == 2);
  CHECK(r.by_pos.at(Pos::noun).n_correct == 1);
  CHECK(r.by_dataset.at("se2").n_attempted == 2);
  CHECK(r.by_dataset.at("se3").f1() == 1.0);

  // Micro-pooling the dataset slices reproduces the overall counts.
  std::vector<ScoreSlice> slices;
  for (const auto& [name, slice] : r.by_dataset) slices.push_back(slice);
  ScoreSlice pooled = pool(slices);
  CHECK(pooled.n_gold == r.overall.n_gold);
  CHECK(pooled.n_correct == r.overall.n_correct);
}

TEST_CASE("scoring ignores prediction order") {
  GoldKeys gold = gold_of({{"i1", "a%1:01:00::"}, {"i2", "b%1:01:00::"}});
  std::vector<Prediction> preds = {pred("i2", "b%1:01:00::"),
                                   pred("i1", "x%1:01:00::")};
  ScoreReport fwd = score(gold, preds);
  std::reverse(preds.begin(), preds.end());
  ScoreReport rev = score(gold, preds);
  CHECK(fwd.overall.n_correct == rev.overall.n_correct);
  CHECK(fwd.overall.n_attempted == rev.overall.n_attempted);
}

TEST_CASE("coverage identity: full coverage pins P = R = F1") {
  std::uniform_int_distribution<size_t> gold_size(1, 40);
  for (int trial = 0; trial < 100; ++trial) {
    size_t n = gold_size(rng());
    GoldKeys gold;
    std::vector<Prediction> preds;
    std::bernoulli_distribution correct(0.6);
    size_t expect_correct = 0;
    for (size_t i = 0; i < n; ++i) {
      std::string id = "i" + std::to_string(i);
      gold.by_instance[id].insert("a%1:01:00::");
      bool ok = correct(rng());
      expect_correct += ok;
      preds.push_back(pred(id, ok ? "a%1:01:00::" : "b%1:01:00::"));
    }
    ScoreReport r = score(gold, preds);
    CHECK(r.overall.precision() == r.overall.recall());
    if (expect_correct > 0)
      CHECK(r.overall.f1() ==
            doctest::Approx(r.overall.precision()).epsilon(1e-12));
  }
}

TEST_CASE("f_alpha generalizes F1") {
  CHECK(f_alpha(0.5, 0.5, 0.5) == doctest::Approx(0.5));
  CHECK(f_alpha(0.8, 0.4, 0.25) == doctest::Approx(1.0 / (0.3125 + 1.875)));
  CHECK(f_alpha(0.0, 0.9, 0.5) == 0.0);
  CHECK(f_alpha(0.9, 0.0, 0.5) == 0.0);
  CHECK_THROWS_AS(f_alpha(0.5, 0.5, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(f_alpha(0.5, 0.5, -0.1), std::invalid_argument);

  std::uniform_real_distribution<double> unit(0.01, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    double p = unit(rng()), r = unit(rng());
    double f1 = 2.0 * p * r / (p + r);
    CHECK(f_alpha(p, r, 0.5) == doctest::Approx(f1));
    CHECK(f1 <= std::max(p, r) + 1e-12);
    CHECK(f1 >= std::min(p, r) - 1e-12);
  }
}
