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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "assocclass/itemset.hpp"
#include "assocclass/preprocess.hpp"

namespace assocclass {

class TransactionDB {
 public:
  TransactionDB() = default;
  explicit TransactionDB(std::vector<Itemset> transactions);

  /// Items of each transaction, labels dropped.
  static TransactionDB from(std::span<const Transaction> transactions);

  const std::vector<Itemset>& transactions() const noexcept { return transactions_; }
  /// Union of all transactions.
  const Itemset& item_universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return transactions_.size(); }
  bool empty() const noexcept { return transactions_.empty(); }

 private:
  std::vector<Itemset> transactions_;
  Itemset universe_;
};

/// One transaction per line, items separated by commas and trimmed. Blank
/// lines and lines starting with '#' are skipped. Empty items are a parse
/// error naming the line.
TransactionDB parse_transactions(std::string_view text);
TransactionDB load_transactions(const std::filesystem::path& path);

struct FrequentItemset {
  Itemset itemset;
  std::size_t support_count = 0;

  friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
};

using Level = std::vector<FrequentItemset>;

/// Minimum support given either as an absolute transaction count or as a
/// fraction of the database size.
class MinSupport {
 public:
  static MinSupport count(std::size_t min_count);
  static MinSupport fraction(double min_fraction);

  bool is_fraction() const noexcept { return is_fraction_; }
  double value() const noexcept { return value_; }

  /// Absolute count for a database of `transactions` rows:
  /// max(1, floor(fraction * transactions)) for fractions.
  std::size_t resolve(std::size_t transactions) const;

 private:
  MinSupport(bool is_fraction, double value) : is_fraction_(is_fraction), value_(value) {}

  bool is_fraction_;
  double value_;
};

struct MiningOptions {
  /// Worker threads for support counting; 0 picks hardware concurrency.
  /// Output is identical for every value.
  unsigned threads = 1;
};

struct MiningResult {
  std::vector<Level> levels;  // levels[k-1] holds L_k; never ends with an empty level
  /// |C_k| after pruning, for every level attempted (C_1 = distinct items).
  std::vector<std::size_t> candidate_counts;
  std::size_t min_support_count = 0;
  std::size_t total_transactions = 0;

  /// Support count of a frequent itemset, or nullopt if it was not reported.
  std::optional<std::size_t> support_of(const Itemset& itemset) const;
  std::size_t frequent_count() const;

  friend bool operator==(const MiningResult&, const MiningResult&) = default;
};

struct AssociationRule {
  Itemset antecedent;
  Itemset consequent;
  std::size_t support_count = 0;     // of antecedent ∪ consequent
  std::size_t antecedent_count = 0;
  double support = 0.0;              // support_count / total transactions
  double confidence = 0.0;           // support_count / antecedent_count

  friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

std::size_t support_count(const TransactionDB& db, const Itemset& itemset);

/// L_1: single items meeting `min_count`, in canonical order.
Level find_frequent_1_itemsets(const TransactionDB& db, std::size_t min_count);

/// Self-join of L_{k-1}: members sharing their first k-2 items are combined.
/// Throws Error(RaggedLevel) when input sizes differ.
std::vector<Itemset> apriori_join(std::span<const FrequentItemset> previous);

/// Drops candidates having a (k-1)-subset absent from `previous`.
std::vector<Itemset> apriori_prune(std::span<const Itemset> candidates,
                                   std::span<const FrequentItemset> previous);

/// Support counts of `candidates`, aligned with the input.
std::vector<std::size_t> count_support(const TransactionDB& db,
                                       std::span<const Itemset> candidates,
                                       const MiningOptions& options = {});

/// Level-wise Apriori. Throws Error(EmptyCorpus) on an empty database.
MiningResult mine_frequent_itemsets(const TransactionDB& db, MinSupport min_support,
                                    const MiningOptions& options = {});

/// Every rule A => F\A over frequent itemsets F (|F| >= 2) and non-empty
/// proper subsets A whose confidence reaches `min_confidence`. Ordered by F
/// (level, then canonical), then A by size and canonical order.
std::vector<AssociationRule> generate_rules(const MiningResult& result, double min_confidence);

/// Frequent itemsets of at least `min_size` items with no frequent proper
/// superset, in canonical order.
std::vector<FrequentItemset> maximal_itemsets(const MiningResult& result,
                                              std::size_t min_size = 1);

}  // namespace assocclass
