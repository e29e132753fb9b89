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

#include "assocclass/itemset.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

namespace assocclass {

Itemset::Itemset(std::vector<std::string> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Itemset::Itemset(std::initializer_list<std::string_view> items)
    : Itemset(std::vector<std::string>(items.begin(), items.end())) {}

bool Itemset::contains(std::string_view item) const {
  return std::binary_search(items_.begin(), items_.end(), item, std::less<>{});
}

bool Itemset::includes(const Itemset& other) const {
  return std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
}

Itemset Itemset::intersection(const Itemset& other) const {
  std::vector<std::string> out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out));
  return Itemset(Sorted{}, std::move(out));
}

Itemset Itemset::union_with(const Itemset& other) const {
  std::vector<std::string> out;
  out.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out));
  return Itemset(Sorted{}, std::move(out));
}

Itemset Itemset::difference(const Itemset& other) const {
  std::vector<std::string> out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(out));
  return Itemset(Sorted{}, std::move(out));
}

Itemset Itemset::without(std::size_t index) const {
  std::vector<std::string> out;
  out.reserve(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (i != index) out.push_back(items_[i]);
  return Itemset(Sorted{}, std::move(out));
}

std::string Itemset::join(std::string_view separator) const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out.append(separator);
    out.append(items_[i]);
  }
  return out;
}

std::size_t ItemsetHash::operator()(const Itemset& set) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& item : set) {
    h ^= std::hash<std::string>{}(item) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace assocclass
