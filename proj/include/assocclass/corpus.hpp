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
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace assocclass {

struct LabeledDocument {
  std::string id;  // "<class>/<filename>"
  std::string class_label;
  std::string raw_text;

  friend bool operator==(const LabeledDocument&, const LabeledDocument&) = default;
};

/// A set of lowercase, whitespace-free words read from a one-word-per-line
/// file. Used both for stop words and for the plural-exception table.
class WordList {
 public:
  using Set = std::set<std::string, std::less<>>;

  WordList() = default;
  explicit WordList(Set words);

  /// Parses the line format: '#' comment lines and blank lines are skipped,
  /// surrounding whitespace is trimmed, words are lowercased and deduplicated.
  static WordList parse(std::string_view text);

  bool contains(std::string_view word) const;
  const Set& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }

  /// Stable 64-bit FNV-1a digest of the sorted word list, as "fnv1a64:<hex>".
  std::string digest() const;

  friend bool operator==(const WordList&, const WordList&) = default;

 private:
  Set words_;
};

using StopWordList = WordList;

/// Loads `<root>/<class>/<file>` documents ordered by id. Hidden entries
/// (leading '.') are skipped; regular files directly under root are ignored.
std::vector<LabeledDocument> load_corpus(const std::filesystem::path& root);

StopWordList load_stopwords(const std::filesystem::path& path);
WordList load_plural_exceptions(const std::filesystem::path& path);

/// Reads a whole file; throws Error(Io) naming the file on failure.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace assocclass
