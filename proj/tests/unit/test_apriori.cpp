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

#include <random>

#include "assocclass/apriori.hpp"
#include "assocclass/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace assocclass;

namespace {

TransactionDB nine() { return load_transactions(testing::fixture("nine_transactions.txt")); }
TransactionDB words() { return load_transactions(testing::fixture("word_transactions.txt")); }

Level level(std::initializer_list<std::pair<Itemset, std::size_t>> xs) {
  Level out;
  for (const auto& [s, n] : xs) out.push_back({s, n});
  return out;
}

TransactionDB to_db(const oracle::Db& db) {
  std::vector<Itemset> rows;
  for (const auto& t : db) rows.emplace_back(std::vector<std::string>(t.begin(), t.end()));
  return TransactionDB(std::move(rows));
}

oracle::Set to_set(const Itemset& s) { return {s.begin(), s.end()}; }

const Level kL1 = level({{{"I1"}, 6}, {{"I2"}, 7}, {{"I3"}, 6}, {{"I4"}, 2}, {{"I5"}, 2}});
const Level kL2 = level({{{"I1", "I2"}, 4},
                         {{"I1", "I3"}, 4},
                         {{"I1", "I5"}, 2},
                         {{"I2", "I3"}, 4},
                         {{"I2", "I4"}, 2},
                         {{"I2", "I5"}, 2}});
const Level kL3 = level({{{"I1", "I2", "I3"}, 2}, {{"I1", "I2", "I5"}, 2}});

}  // namespace

TEST_CASE("transaction file parsing") {
  const auto db = parse_transactions("# header\n a , b\n\nc\n#x\nb,a,a\n");
  REQUIRE(db.size() == 3);
  CHECK(db.transactions()[0] == Itemset{"a", "b"});
  CHECK(db.transactions()[2] == Itemset{"a", "b"});
  CHECK(db.item_universe() == Itemset{"a", "b", "c"});
  try {
    parse_transactions("a,b\na,,b\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(nine().size() == 9);
  CHECK(words().size() == 5);
}

TEST_CASE("support_count") {
  const auto db = nine();
  CHECK(support_count(db, {"I1"}) == 6);
  CHECK(support_count(db, {"I1", "I2"}) == 4);
  CHECK(support_count(db, {"I1", "I9"}) == 0);
}

TEST_CASE("find_frequent_1_itemsets") {
  CHECK(find_frequent_1_itemsets(nine(), 2) == kL1);
  CHECK(find_frequent_1_itemsets(nine(), 7) == level({{{"I2"}, 7}}));
  CHECK(find_frequent_1_itemsets(TransactionDB(std::vector<Itemset>{Itemset{}}), 1).empty());
}

TEST_CASE("apriori_join") {
  // The prefix rule also pairs {I2,I3} with {I2,I4}; prune removes the result.
  CHECK(apriori_join(kL2) == std::vector<Itemset>{{"I1", "I2", "I3"},
                                                  {"I1", "I2", "I5"},
                                                  {"I1", "I3", "I5"},
                                                  {"I2", "I3", "I4"},
                                                  {"I2", "I3", "I5"},
                                                  {"I2", "I4", "I5"}});
  const auto c2 = apriori_join(kL1);
  CHECK(c2.size() == 10);
  CHECK(c2.front() == Itemset{"I1", "I2"});
  CHECK(c2.back() == Itemset{"I4", "I5"});
  CHECK(apriori_join(level({{{"a", "b"}, 3}})).empty());
  try {
    apriori_join(level({{{"a"}, 1}, {{"a", "b"}, 1}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RaggedLevel);
    CHECK(std::string(e.what()) == "ragged level");
  }
}

TEST_CASE("apriori_prune") {
  const auto joined = apriori_join(kL2);
  CHECK(apriori_prune(joined, kL2) ==
        std::vector<Itemset>{{"I1", "I2", "I3"}, {"I1", "I2", "I5"}});
  const std::vector<Itemset> c4{{"I1", "I2", "I3", "I5"}};
  CHECK(apriori_prune(c4, kL3).empty());
  CHECK(apriori_prune({}, kL3).empty());
}

TEST_CASE("mining the nine-transaction database") {
  const auto r = mine_frequent_itemsets(nine(), MinSupport::count(2));
  REQUIRE(r.levels.size() == 3);
  CHECK(r.levels[0] == kL1);
  CHECK(r.levels[1] == kL2);
  CHECK(r.levels[2] == kL3);
  CHECK(r.candidate_counts == std::vector<std::size_t>{5, 10, 2, 0});
  CHECK(r.min_support_count == 2);
  CHECK(r.total_transactions == 9);
  CHECK(r.support_of({"I1", "I2", "I5"}) == std::optional<std::size_t>(2));
  CHECK_FALSE(r.support_of({"I4", "I5"}).has_value());
  CHECK(r.frequent_count() == 13);
}

TEST_CASE("mining edge cases") {
  const auto one = mine_frequent_itemsets(TransactionDB({Itemset{"a", "b"}}), MinSupport::count(1));
  REQUIRE(one.levels.size() == 2);
  CHECK(one.levels[0] == level({{{"a"}, 1}, {{"b"}, 1}}));
  CHECK(one.levels[1] == level({{{"a", "b"}, 1}}));
  try {
    mine_frequent_itemsets(TransactionDB{}, MinSupport::count(1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyCorpus);
  }
}

TEST_CASE("fractional support") {
  CHECK(MinSupport::fraction(0.02).resolve(115) == 2);
  CHECK(MinSupport::fraction(0.4).resolve(5) == 2);
  CHECK(MinSupport::fraction(0.01).resolve(5) == 1);
  CHECK(MinSupport::fraction(1.0).resolve(9) == 9);
  CHECK(MinSupport::fraction(0.29).resolve(100) == 29);  // 28.999999999999996 in binary
  CHECK(MinSupport::count(4).resolve(2) == 4);
  CHECK_THROWS_AS(MinSupport::fraction(0.0), Error);
  CHECK_THROWS_AS(MinSupport::fraction(1.5), Error);
  CHECK_THROWS_AS(MinSupport::count(0), Error);

  const auto r = mine_frequent_itemsets(words(), MinSupport::fraction(0.4));
  CHECK(r.min_support_count == 2);
  CHECK(r.support_of({"algorithm", "graph", "parallel"}) == std::optional<std::size_t>(2));
}

TEST_CASE("rules over the word transactions") {
  const auto r = mine_frequent_itemsets(words(), MinSupport::fraction(0.4));
  const auto rules = generate_rules(r, 1.0);
  auto has = [&](Itemset a, Itemset b) {
    return std::any_of(rules.begin(), rules.end(),
                       [&](const auto& x) { return x.antecedent == a && x.consequent == b; });
  };
  CHECK(has({"algorithm", "graph"}, {"parallel"}));
  CHECK(has({"network", "processor"}, {"system"}));
  CHECK(has({"design"}, {"system"}));
  CHECK(has({"load"}, {"power"}));
  CHECK(has({"power"}, {"load"}));
  for (const auto& x : rules) {
    CHECK(x.confidence == 1.0);
    CHECK(x.support == doctest::Approx(0.4));
  }

  std::set<std::pair<oracle::Set, oracle::Set>> got;
  for (const auto& x : rules) got.emplace(to_set(x.antecedent), to_set(x.consequent));
  oracle::Db db;
  const auto source = words();
  for (const auto& t : source.transactions()) db.push_back(to_set(t));
  CHECK(got == oracle::rules(db, 2, 1.0));
  CHECK(got.size() == rules.size());

  // Best achievable confidence here is 1/2.
  const auto weak = mine_frequent_itemsets(parse_transactions("a,b\na\nb\n"), MinSupport::count(1));
  CHECK(generate_rules(weak, 0.5).size() == 2);
  CHECK(generate_rules(weak, 0.6).empty());
  CHECK_THROWS_AS(generate_rules(r, 1.5), Error);
}

TEST_CASE("rules carry counts and confidence") {
  const auto r = mine_frequent_itemsets(nine(), MinSupport::count(2));
  for (const auto& x : generate_rules(r, 1e-9)) {
    CHECK(x.antecedent.intersection(x.consequent).empty());
    CHECK(x.support_count == *r.support_of(x.antecedent.union_with(x.consequent)));
    CHECK(x.antecedent_count == *r.support_of(x.antecedent));
    CHECK(x.confidence == static_cast<double>(x.support_count) / x.antecedent_count);
    CHECK(x.support == static_cast<double>(x.support_count) / 9.0);
  }
}

TEST_CASE("maximal itemsets") {
  const auto r = mine_frequent_itemsets(nine(), MinSupport::count(2));
  const auto m = maximal_itemsets(r, 2);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == FrequentItemset{{"I1", "I2", "I3"}, 2});
  CHECK(m[1] == FrequentItemset{{"I1", "I2", "I5"}, 2});
  CHECK(m[2] == FrequentItemset{{"I2", "I4"}, 2});
  CHECK(maximal_itemsets(r, 1).size() == 3);
}

TEST_CASE("property: miner equals exhaustive oracle, with closure and anti-monotonicity") {
  for (unsigned seed = 0; seed < 200; ++seed) {
    std::mt19937 rng(seed);
    const auto odb = oracle::random_db(rng, 8, 12);
    const auto db = to_db(odb);
    const std::size_t min_count = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const auto r = mine_frequent_itemsets(db, MinSupport::count(min_count));

    std::map<oracle::Set, std::size_t> got;
    for (std::size_t k = 0; k < r.levels.size(); ++k) {
      REQUIRE_FALSE(r.levels[k].empty());
      REQUIRE(std::is_sorted(r.levels[k].begin(), r.levels[k].end(),
                             [](const auto& a, const auto& b) { return a.itemset < b.itemset; }));
      for (const auto& f : r.levels[k]) {
        REQUIRE(f.itemset.size() == k + 1);
        REQUIRE(f.support_count >= min_count);
        got.emplace(to_set(f.itemset), f.support_count);
        // Downward closure.
        if (k > 0)
          for (std::size_t i = 0; i <= k; ++i) REQUIRE(r.support_of(f.itemset.without(i)));
      }
      // C_k after pruning is a superset of L_k.
      REQUIRE(r.candidate_counts[k] >= r.levels[k].size());
    }
    REQUIRE(got == oracle::frequent_itemsets(odb, min_count));

    // Anti-monotonicity on random pairs drawn from the universe.
    const auto& u = db.item_universe();
    if (u.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
      for (int trial = 0; trial < 10; ++trial) {
        const Itemset a{u[pick(rng)], u[pick(rng)]};
        const Itemset b{u[pick(rng)]};
        REQUIRE(support_count(db, a.union_with(b)) <=
                std::min(support_count(db, a), support_count(db, b)));
      }
    }

    const double conf = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
    std::set<std::pair<oracle::Set, oracle::Set>> rules;
    for (const auto& x : generate_rules(r, conf)) rules.emplace(to_set(x.antecedent), to_set(x.consequent));
    REQUIRE(rules == oracle::rules(odb, min_count, conf));
  }
}

TEST_CASE("property: thread count does not change the result") {
  for (unsigned seed = 0; seed < 100; ++seed) {
    std::mt19937 rng(seed + 1000);
    const auto db = to_db(oracle::random_db(rng, 12, 60));
    const auto base = mine_frequent_itemsets(db, MinSupport::count(2), {1});
    for (unsigned threads : {2u, 3u, 8u, 0u})
      REQUIRE(mine_frequent_itemsets(db, MinSupport::count(2), {threads}) == base);
  }
}
