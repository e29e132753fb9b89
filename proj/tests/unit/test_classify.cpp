/*
   Copyright 2026 The assocclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#include <doctest.h>

#include <cmath>
#include <random>

#include "assocclass/classify.hpp"
#include "assocclass/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace assocclass;

namespace {

const TrainedModel& reference_model() {
  static const auto m = load_model(testing::fixture("reference_model.json"));
  return m;
}

ClassificationResult classify_fixture(const std::string& name, ScoringMode mode) {
  return classify_document(reference_model(), testing::slurp(testing::fixture(name)),
                           Lexicon::bundled(), mode);
}

oracle::Model to_oracle(const TrainedModel& m) {
  oracle::Model o;
  o.doc_count = m.doc_count;
  for (const auto& f : m.features)
    o.features.push_back({oracle::Set(f.itemset.begin(), f.itemset.end()), f.per_class_count});
  return o;
}

double runner_up_margin(const ClassificationResult& r) {
  double second = -INFINITY;
  for (std::size_t c = 0; c < r.scores.size(); ++c)
    if (c != r.predicted_index) second = std::max(second, r.scores[c]);
  return r.scores[r.predicted_index] - second;
}

/// Random model over a small vocabulary, classes named c0..cN.
TrainedModel random_model(std::mt19937& rng) {
  std::uniform_int_distribution<int> n_classes(2, 4), n_features(1, 10), size(2, 4), word(0, 11),
      count(0, 6), docs(1, 40);
  const int classes = n_classes(rng);
  std::vector<std::string> names;
  std::vector<std::size_t> doc_count;
  for (int c = 0; c < classes; ++c) {
    names.push_back("c" + std::to_string(c));
    doc_count.push_back(static_cast<std::size_t>(docs(rng)));
  }
  std::vector<FeatureCounts> features;
  std::set<Itemset> seen;
  for (int i = n_features(rng); i > 0; --i) {
    std::vector<std::string> items;
    for (int k = size(rng); k > 0; --k) items.push_back("w" + std::to_string(word(rng)));
    Itemset set(items);
    if (set.size() < 2 || !seen.insert(set).second) continue;
    std::vector<std::size_t> counts;
    for (int c = 0; c < classes; ++c) counts.push_back(static_cast<std::size_t>(count(rng)));
    features.push_back({set, counts});
  }
  if (features.empty()) features.push_back({{"w0", "w1"}, std::vector<std::size_t>(classes, 1)});
  return assemble_model(names, doc_count, features, ModelConfig{});
}

Itemset random_words(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(0, 8), word(0, 11);
  std::vector<std::string> items;
  for (int k = n(rng); k > 0; --k) items.push_back("w" + std::to_string(word(rng)));
  return Itemset(items);
}

}  // namespace

TEST_CASE("subset matching on the feedback-control abstract") {
  const auto r = classify_fixture("abstract_feedback_control.txt", ScoringMode::Subset);
  CHECK(r.frequent_words.size() == 12);
  REQUIRE(r.matched.size() == 7);
  auto has = [&](Itemset feature, Itemset shared) {
    return std::any_of(r.matched.begin(), r.matched.end(), [&](const MatchEvidence& m) {
      return reference_model().features[m.feature].itemset == feature && m.intersection == shared;
    });
  };
  CHECK(has({"problem", "graph", "algorithm"}, {"algorithm", "problem"}));
  CHECK(has({"condition", "algorithm"}, {"algorithm", "condition"}));
  CHECK(r.factor_count == 6);  // two matches share {algorithm, system}
  CHECK(r.predicted == "Computer Science");
  CHECK_FALSE(r.tie);
  CHECK(r.matched_any);
  CHECK(runner_up_margin(r) >= 1.0);

  const auto expected = oracle::products(to_oracle(reference_model()),
                                         oracle::Set(r.frequent_words.begin(), r.frequent_words.end()), 0);
  for (std::size_t c = 0; c < 3; ++c)
    CHECK(std::abs(r.scores[c] - std::log10(static_cast<double>(expected[c]))) < 1e-9);
  // Frozen from the long-double oracle.
  CHECK(std::abs(r.scores[0] - -11.411724) < 1e-6);
  CHECK(std::abs(r.scores[1] - -12.550338) < 1e-6);
  CHECK(std::abs(r.scores[2] - -13.320198) < 1e-6);
}

TEST_CASE("weighted matching on the t-spanner abstract") {
  const auto r = classify_fixture("abstract_t_spanner.txt", ScoringMode::Weighted);
  REQUIRE(r.matched.size() == 3);
  std::map<Itemset, double> fractions;
  for (const auto& m : r.matched) fractions[reference_model().features[m.feature].itemset] = m.fraction();
  CHECK(fractions[Itemset{"graph", "algorithm"}] == 1.0);
  CHECK(fractions[Itemset{"problem", "graph", "algorithm"}] == doctest::Approx(2.0 / 3.0));
  CHECK(fractions[Itemset{"time", "bound", "algorithm"}] == doctest::Approx(2.0 / 3.0));
  CHECK(r.predicted == "Computer Science");
  CHECK(runner_up_margin(r) >= 1.0);

  // 47/115 * 6/150 * (4/150 * 2/3) * (3/150 * 2/3)
  const long double cs = 47.0L / 115 * (6.0L / 150) * (4.0L / 150 * 2 / 3) * (3.0L / 150 * 2 / 3);
  CHECK(std::abs(r.scores[0] - std::log10(static_cast<double>(cs))) < 1e-12);
  const auto linear = r.linear_scores();
  REQUIRE(linear.has_value());
  CHECK(std::abs((*linear)[0] - static_cast<double>(cs)) < 1e-18);
}

TEST_CASE("no matches fall back to the priors") {
  const auto r = classify_document(reference_model(), "alpha beta gamma", Lexicon::bundled(),
                                   ScoringMode::Subset);
  CHECK_FALSE(r.matched_any);
  CHECK(r.factor_count == 0);
  CHECK(r.predicted == "Electrical & Electronic");
  for (std::size_t c = 0; c < 3; ++c) CHECK(r.scores[c] == std::log10(reference_model().prior[c]));
}

TEST_CASE("sharing one word is not a match") {
  CHECK(match_word_sets(reference_model(), {"graph", "zebra", "quokka"}).empty());
}

TEST_CASE("ties are flagged and go to the earlier class") {
  const auto m = assemble_model({"a", "b"}, {5, 5}, {{{"x", "y"}, {2, 0}}, {{"v", "w"}, {0, 2}}},
                                ModelConfig{});
  const auto r = score(m, match_word_sets(m, {"v", "w", "x", "y"}), ScoringMode::Subset);
  CHECK(r.tie);
  CHECK(r.predicted_index == 0);
}

TEST_CASE("linear scores are withheld past the factor limit") {
  std::vector<FeatureCounts> fs;
  Itemset words;
  for (int i = 0; i < 16; ++i) {
    const auto a = "p" + std::to_string(i) + "a", b = "p" + std::to_string(i) + "b";
    fs.push_back({{a, b}, {1, 0}});
    words = words.union_with({a, b});
  }
  const auto m = assemble_model({"x", "y"}, {1, 1}, fs, ModelConfig{});
  const auto r = score(m, match_word_sets(m, words), ScoringMode::Weighted);
  CHECK(r.factor_count == 16);
  CHECK_FALSE(r.linear_scores().has_value());
}

TEST_CASE("evidence from another model is rejected") {
  const auto m = assemble_model({"a", "b"}, {1, 1}, {{{"x", "y"}, {1, 0}}}, ModelConfig{});
  const std::vector<MatchEvidence> bogus{{5, {"x", "y"}, 2}};
  CHECK_THROWS_AS(score(m, bogus, ScoringMode::Subset), Error);
}

TEST_CASE("property: scores agree with the direct-product oracle") {
  for (unsigned seed = 0; seed < 300; ++seed) {
    std::mt19937 rng(seed);
    const auto m = random_model(rng);
    const auto words = random_words(rng);
    const auto matches = match_word_sets(m, words);
    const oracle::Set owords(words.begin(), words.end());

    // Evidence soundness and completeness.
    std::size_t qualifying = 0;
    for (const auto& f : m.features) qualifying += f.itemset.intersection(words).size() >= 2;
    REQUIRE(matches.size() == qualifying);
    for (const auto& e : matches) {
      REQUIRE(e.intersection == m.features[e.feature].itemset.intersection(words));
      REQUIRE(e.fraction() > 0.0);
      REQUIRE(e.fraction() <= 1.0);
    }

    for (int mode = 0; mode < 2; ++mode) {
      const auto r = score(m, matches, mode ? ScoringMode::Weighted : ScoringMode::Subset);
      REQUIRE(r.matched_any == !matches.empty());
      const auto expected = oracle::products(to_oracle(m), owords, mode);
      std::size_t best = 0;
      for (std::size_t c = 0; c < expected.size(); ++c) {
        REQUIRE(std::abs(r.scores[c] - static_cast<double>(std::log10(expected[c]))) < 1e-9);
        if (expected[c] > expected[best]) best = c;
      }
      // Argmax agreement when the oracle has a clear winner.
      bool clear = true;
      for (std::size_t c = 0; c < expected.size(); ++c)
        if (c != best && expected[c] > expected[best] * (1 - 1e-9L)) clear = false;
      if (clear) {
        REQUIRE(r.predicted_index == best);
        REQUIRE_FALSE(r.tie);
      }
    }
  }
}

TEST_CASE("property: argmax survives scaling the priors") {
  for (unsigned seed = 0; seed < 150; ++seed) {
    std::mt19937 rng(seed + 5000);
    const auto m = random_model(rng);
    const auto matches = match_word_sets(m, random_words(rng));
    const auto base = score(m, matches, ScoringMode::Subset);
    if (base.tie || (base.scores.size() > 1 && [&] {
          auto s = base.scores;
          std::sort(s.rbegin(), s.rend());
          return s[0] - s[1] < 1e-9;
        }()))
      continue;
    for (double k : {0.5, 3.0, 1e-6}) {
      auto scaled = m;
      for (auto& p : scaled.prior) p *= k;
      REQUIRE(score(scaled, matches, ScoringMode::Subset).predicted_index == base.predicted_index);
      REQUIRE(score(scaled, matches, ScoringMode::Weighted).predicted_index ==
              score(m, matches, ScoringMode::Weighted).predicted_index);
    }
  }
}

TEST_CASE("property: permuting model features leaves scores bit-identical") {
  for (unsigned seed = 0; seed < 150; ++seed) {
    std::mt19937 rng(seed + 9000);
    const auto m = random_model(rng);
    const auto words = random_words(rng);
    auto permuted = m;
    std::shuffle(permuted.features.begin(), permuted.features.end(), rng);
    for (auto mode : {ScoringMode::Subset, ScoringMode::Weighted}) {
      const auto a = score(m, match_word_sets(m, words), mode);
      auto shuffled = match_word_sets(permuted, words);
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const auto b = score(permuted, shuffled, mode);
      REQUIRE(a.scores == b.scores);
      REQUIRE(a.predicted == b.predicted);
    }
  }
}

TEST_CASE("property: weighted equals subset when every match is full and distinct") {
  for (unsigned seed = 0; seed < 150; ++seed) {
    std::mt19937 rng(seed + 13000);
    const auto m = random_model(rng);
    // Take the full itemsets of a random subset of features with distinct words.
    std::vector<MatchEvidence> matches;
    Itemset used;
    for (std::size_t i = 0; i < m.features.size(); ++i) {
      const auto& f = m.features[i].itemset;
      if (!used.intersection(f).empty() || rng() % 2) continue;
      used = used.union_with(f);
      matches.push_back({i, f, f.size()});
    }
    const auto s = score(m, matches, ScoringMode::Subset);
    const auto w = score(m, matches, ScoringMode::Weighted);
    REQUIRE(s.predicted_index == w.predicted_index);
    for (std::size_t c = 0; c < s.scores.size(); ++c) REQUIRE(std::abs(s.scores[c] - w.scores[c]) < 1e-12);
  }
}
