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

#pragma once

// Brute-force reference computations. These deliberately avoid the library's
// mining, matching and scoring code: itemsets are std::set<std::string>,
// subsets are enumerated by bitmask and every count is taken directly.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Set = std::set<std::string>;
using Db = std::vector<Set>;

inline std::size_t count(const Db& db, const Set& s) {
  std::size_t n = 0;
  for (const auto& t : db) {
    bool all = true;
    for (const auto& item : s) all = all && t.count(item);
    n += all;
  }
  return n;
}

/// Every non-empty itemset with support >= min_count (min_count >= 1). Such an
/// itemset is a subset of some transaction, so enumerating the subsets of each
/// transaction by bitmask covers the whole search space.
inline std::map<Set, std::size_t> frequent_itemsets(const Db& db, std::size_t min_count) {
  std::set<Set> seen;
  for (const auto& t : db) {
    const std::vector<std::string> items(t.begin(), t.end());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << items.size()); ++mask) {
      Set s;
      for (std::size_t i = 0; i < items.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) s.insert(items[i]);
      seen.insert(std::move(s));
    }
  }
  std::map<Set, std::size_t> out;
  for (const auto& s : seen)
    if (const auto n = count(db, s); n >= min_count) out.emplace(s, n);
  return out;
}

/// Every split A => F\A of every frequent F with |F| >= 2.
inline std::set<std::pair<Set, Set>> rules(const Db& db, std::size_t min_count,
                                           double min_confidence) {
  std::set<std::pair<Set, Set>> out;
  for (const auto& [f, n] : frequent_itemsets(db, min_count)) {
    if (f.size() < 2) continue;
    const std::vector<std::string> items(f.begin(), f.end());
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << items.size()); ++mask) {
      Set a, b;
      for (std::size_t i = 0; i < items.size(); ++i)
        ((mask >> i) & 1 ? a : b).insert(items[i]);
      // Integer cross-multiplication: n / count(a) >= min_confidence.
      if (static_cast<long double>(n) >= min_confidence * static_cast<long double>(count(db, a)) - 1e-12L)
        out.emplace(a, b);
    }
  }
  return out;
}

inline Db random_db(std::mt19937& rng, std::size_t max_items, std::size_t max_transactions) {
  std::uniform_int_distribution<std::size_t> n_items(1, max_items);
  std::uniform_int_distribution<std::size_t> n_tx(1, max_transactions);
  const auto items = n_items(rng);
  const auto rows = n_tx(rng);
  std::bernoulli_distribution pick(0.45);
  Db db;
  for (std::size_t r = 0; r < rows; ++r) {
    Set t;
    for (std::size_t i = 0; i < items; ++i)
      if (pick(rng)) t.insert("i" + std::to_string(i));
    db.push_back(std::move(t));
  }
  return db;
}

/// Linear Naive Bayes products computed directly from counts, in long double.
/// `features` carry per-class counts; probabilities are (n_k+1)/(n_c+V).
struct Feature {
  Set items;
  std::vector<std::size_t> counts;
};

struct Model {
  std::vector<std::size_t> doc_count;
  std::vector<Feature> features;
};

inline std::vector<std::size_t> owned(const Model& m) {
  std::vector<std::size_t> owned(m.doc_count.size(), 0);
  for (const auto& f : m.features) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < f.counts.size(); ++c)
      if (f.counts[c] > f.counts[best]) best = c;
    ++owned[best];
  }
  return owned;
}

inline long double probability(const Model& m, const Feature& f, std::size_t c) {
  const auto n_c = owned(m)[c];
  return static_cast<long double>(f.counts[c] + 1) /
         static_cast<long double>(n_c + m.features.size());
}

/// mode: 0 = subset (one factor per distinct shared subset, max per class),
/// 1 = weighted (every feature, scaled by matched fraction).
inline std::vector<long double> products(const Model& m, const Set& words, int mode) {
  std::size_t total = 0;
  for (auto n : m.doc_count) total += n;
  std::vector<long double> out;
  for (std::size_t c = 0; c < m.doc_count.size(); ++c) {
    long double p = static_cast<long double>(m.doc_count[c]) / static_cast<long double>(total);
    std::map<Set, long double> best;
    for (const auto& f : m.features) {
      Set shared;
      for (const auto& w : f.items)
        if (words.count(w)) shared.insert(w);
      if (shared.size() < 2) continue;
      const auto prob = probability(m, f, c);
      if (mode == 1) {
        p *= prob * static_cast<long double>(shared.size()) / static_cast<long double>(f.items.size());
      } else {
        auto [it, inserted] = best.emplace(shared, prob);
        if (!inserted && prob > it->second) it->second = prob;
      }
    }
    for (const auto& [s, prob] : best) p *= prob;
    out.push_back(p);
  }
  return out;
}

}  // namespace oracle
