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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace assocclass {

/// A set of distinct items held in strictly ascending (byte-wise) order.
///
/// Every constructor canonicalizes its input, so two itemsets built from the
/// same items in any order compare and hash equal. The lexicographic order on
/// the item vectors is the canonical order used for levels, features and
/// match lists throughout the library.
class Itemset {
 public:
  using value_type = std::string;
  using const_iterator = std::vector<std::string>::const_iterator;

  Itemset() = default;
  explicit Itemset(std::vector<std::string> items);
  Itemset(std::initializer_list<std::string_view> items);

  const std::vector<std::string>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const std::string& operator[](std::size_t i) const { return items_[i]; }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }

  bool contains(std::string_view item) const;
  /// True when every item of `other` is also in this set.
  bool includes(const Itemset& other) const;

  Itemset intersection(const Itemset& other) const;
  Itemset union_with(const Itemset& other) const;
  Itemset difference(const Itemset& other) const;
  /// Copy with the item at `index` removed.
  Itemset without(std::size_t index) const;

  std::string join(std::string_view separator = ",") const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend std::strong_ordering operator<=>(const Itemset& a, const Itemset& b) {
    return a.items_ <=> b.items_;
  }

 private:
  struct Sorted {};
  Itemset(Sorted, std::vector<std::string> items) : items_(std::move(items)) {}

  std::vector<std::string> items_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& set) const noexcept;
};

}  // namespace assocclass
