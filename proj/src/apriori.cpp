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

#include "assocclass/apriori.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <thread>
#include <unordered_set>

#include "assocclass/corpus.hpp"
#include "assocclass/error.hpp"
#include "text.hpp"

namespace assocclass {

TransactionDB::TransactionDB(std::vector<Itemset> transactions)
    : transactions_(std::move(transactions)) {
  for (const auto& t : transactions_) universe_ = universe_.union_with(t);
}

TransactionDB TransactionDB::from(std::span<const Transaction> transactions) {
  std::vector<Itemset> rows;
  rows.reserve(transactions.size());
  for (const auto& t : transactions) rows.push_back(t.items);
  return TransactionDB(std::move(rows));
}

TransactionDB parse_transactions(std::string_view text) {
  std::vector<Itemset> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const auto line = detail::trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> items;
    std::size_t field = 0;
    while (field <= line.size()) {
      auto comma = line.find(',', field);
      if (comma == std::string_view::npos) comma = line.size();
      const auto item = detail::trim(line.substr(field, comma - field));
      if (item.empty())
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": empty item");
      items.emplace_back(item);
      field = comma + 1;
    }
    rows.emplace_back(std::move(items));
  }
  return TransactionDB(std::move(rows));
}

TransactionDB load_transactions(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw Error(ErrorCode::NotFound, "transaction file not found: " + path.string());
  return parse_transactions(read_text_file(path));
}

MinSupport MinSupport::count(std::size_t min_count) {
  if (min_count < 1) throw Error(ErrorCode::InvalidArgument, "minimum support count must be >= 1");
  return MinSupport(false, static_cast<double>(min_count));
}

MinSupport MinSupport::fraction(double min_fraction) {
  if (!(min_fraction > 0.0 && min_fraction <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "minimum support fraction must be in (0, 1]");
  return MinSupport(true, min_fraction);
}

std::size_t MinSupport::resolve(std::size_t transactions) const {
  if (!is_fraction_) return static_cast<std::size_t>(value_);
  // The epsilon keeps products such as 0.29 * 100 from flooring to 28.
  const double product = value_ * static_cast<double>(transactions);
  const auto floored = static_cast<std::size_t>(std::floor(product + 1e-9));
  return std::max<std::size_t>(1, floored);
}

std::optional<std::size_t> MiningResult::support_of(const Itemset& itemset) const {
  if (itemset.empty() || itemset.size() > levels.size()) return std::nullopt;
  const auto& level = levels[itemset.size() - 1];
  const auto it = std::lower_bound(
      level.begin(), level.end(), itemset,
      [](const FrequentItemset& f, const Itemset& key) { return f.itemset < key; });
  if (it == level.end() || it->itemset != itemset) return std::nullopt;
  return it->support_count;
}

std::size_t MiningResult::frequent_count() const {
  std::size_t n = 0;
  for (const auto& level : levels) n += level.size();
  return n;
}

std::size_t support_count(const TransactionDB& db, const Itemset& itemset) {
  return static_cast<std::size_t>(
      std::count_if(db.transactions().begin(), db.transactions().end(),
                    [&](const Itemset& t) { return t.includes(itemset); }));
}

Level find_frequent_1_itemsets(const TransactionDB& db, std::size_t min_count) {
  std::map<std::string, std::size_t, std::less<>> counts;
  for (const auto& t : db.transactions())
    for (const auto& item : t) ++counts[item];

  Level level;
  for (const auto& [item, count] : counts)
    if (count >= min_count) level.push_back({Itemset{item}, count});
  return level;
}

std::vector<Itemset> apriori_join(std::span<const FrequentItemset> previous) {
  if (previous.empty()) return {};
  const std::size_t width = previous.front().itemset.size();
  std::vector<const Itemset*> sorted;
  sorted.reserve(previous.size());
  for (const auto& f : previous) {
    if (f.itemset.size() != width) throw Error(ErrorCode::RaggedLevel, "ragged level");
    sorted.push_back(&f.itemset);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const Itemset* a, const Itemset* b) { return *a < *b; });

  const auto same_prefix = [width](const Itemset& a, const Itemset& b) {
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(width - 1), b.begin());
  };

  // In canonical order, itemsets sharing a (k-2)-prefix are contiguous.
  std::vector<Itemset> candidates;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size() && same_prefix(*sorted[i], *sorted[j]); ++j) {
      if (sorted[i]->items().back() < sorted[j]->items().back())
        candidates.push_back(sorted[i]->union_with(*sorted[j]));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

std::vector<Itemset> apriori_prune(std::span<const Itemset> candidates,
                                   std::span<const FrequentItemset> previous) {
  std::unordered_set<Itemset, ItemsetHash> frequent;
  frequent.reserve(previous.size());
  for (const auto& f : previous) frequent.insert(f.itemset);

  std::vector<Itemset> kept;
  for (const auto& candidate : candidates) {
    bool all_frequent = true;
    for (std::size_t i = 0; i < candidate.size() && all_frequent; ++i)
      all_frequent = frequent.contains(candidate.without(i));
    if (all_frequent) kept.push_back(candidate);
  }
  return kept;
}

std::vector<std::size_t> count_support(const TransactionDB& db,
                                       std::span<const Itemset> candidates,
                                       const MiningOptions& options) {
  std::vector<std::size_t> counts(candidates.size(), 0);
  const auto count_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) counts[c] = support_count(db, candidates[c]);
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);
  constexpr std::size_t kMinPerThread = 64;
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, candidates.size() / kMinPerThread)));
  if (threads <= 1) {
    count_range(0, candidates.size());
    return counts;
  }

  std::vector<std::jthread> workers;
  const std::size_t chunk = (candidates.size() + threads - 1) / threads;
  for (std::size_t begin = 0; begin < candidates.size(); begin += chunk)
    workers.emplace_back(count_range, begin, std::min(candidates.size(), begin + chunk));
  workers.clear();  // joins
  return counts;
}

MiningResult mine_frequent_itemsets(const TransactionDB& db, MinSupport min_support,
                                    const MiningOptions& options) {
  if (db.empty()) throw Error(ErrorCode::EmptyCorpus, "empty corpus");

  MiningResult result;
  result.total_transactions = db.size();
  result.min_support_count = min_support.resolve(db.size());

  auto level = find_frequent_1_itemsets(db, result.min_support_count);
  result.candidate_counts.push_back(db.item_universe().size());
  while (!level.empty()) {
    result.levels.push_back(std::move(level));
    const auto& previous = result.levels.back();

    const auto candidates = apriori_prune(apriori_join(previous), previous);
    result.candidate_counts.push_back(candidates.size());
    if (candidates.empty()) break;

    const auto counts = count_support(db, candidates, options);
    level = Level{};
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (counts[i] >= result.min_support_count) level.push_back({candidates[i], counts[i]});
  }
  return result;
}

std::vector<AssociationRule> generate_rules(const MiningResult& result, double min_confidence) {
  if (!(min_confidence > 0.0 && min_confidence <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "minimum confidence must be in (0, 1]");
  constexpr std::size_t kMaxRuleItems = 24;

  std::vector<AssociationRule> rules;
  for (std::size_t k = 2; k <= result.levels.size(); ++k) {
    for (const auto& frequent : result.levels[k - 1]) {
      if (k > kMaxRuleItems)
        throw Error(ErrorCode::InvalidArgument, "itemset too large for rule generation");
      std::vector<AssociationRule> local;
      const std::uint32_t full = (1u << k) - 1;
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::vector<std::string> lhs;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1u << i)) lhs.push_back(frequent.itemset[i]);
        Itemset antecedent(std::move(lhs));
        const auto antecedent_count = result.support_of(antecedent);
        if (!antecedent_count)
          throw Error(ErrorCode::InvalidArgument,
                      "mining result is not downward closed at {" + antecedent.join() + "}");
        const double confidence =
            static_cast<double>(frequent.support_count) / static_cast<double>(*antecedent_count);
        if (confidence + 1e-12 < min_confidence) continue;
        auto consequent = frequent.itemset.difference(antecedent);
        local.push_back({std::move(antecedent), std::move(consequent), frequent.support_count,
                         *antecedent_count,
                         static_cast<double>(frequent.support_count) /
                             static_cast<double>(result.total_transactions),
                         confidence});
      }
      std::sort(local.begin(), local.end(), [](const AssociationRule& a, const AssociationRule& b) {
        if (a.antecedent.size() != b.antecedent.size())
          return a.antecedent.size() < b.antecedent.size();
        return a.antecedent < b.antecedent;
      });
      std::move(local.begin(), local.end(), std::back_inserter(rules));
    }
  }
  return rules;
}

std::vector<FrequentItemset> maximal_itemsets(const MiningResult& result, std::size_t min_size) {
  std::vector<FrequentItemset> maximal;
  for (std::size_t k = std::max<std::size_t>(1, min_size); k <= result.levels.size(); ++k) {
    // Downward closure: a frequent superset implies a frequent (k+1)-superset,
    // so it is enough to mark the k-subsets of L_{k+1}.
    std::unordered_set<Itemset, ItemsetHash> covered;
    if (k < result.levels.size())
      for (const auto& g : result.levels[k])
        for (std::size_t i = 0; i < g.itemset.size(); ++i) covered.insert(g.itemset.without(i));
    for (const auto& f : result.levels[k - 1])
      if (!covered.contains(f.itemset)) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const FrequentItemset& a, const FrequentItemset& b) { return a.itemset < b.itemset; });
  return maximal;
}

}  // namespace assocclass
