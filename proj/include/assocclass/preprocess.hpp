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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "assocclass/corpus.hpp"
#include "assocclass/itemset.hpp"

namespace assocclass {

/// Word lists consulted while turning text into a transaction.
struct Lexicon {
  StopWordList stopwords;
  WordList plural_exceptions;

  /// The lists compiled in from data/stopwords.txt and
  /// data/plural_exceptions.txt.
  static const Lexicon& bundled();
};

/// Splits on every code point that is not a letter, a digit, or a hyphen with
/// a letter/digit on both sides. Tokens are lowercased; tokens of fewer than
/// three code points and all-digit tokens are dropped.
std::vector<std::string> tokenize(std::string_view raw_text);

/// Singular form of a lowercase token. Exceptions and words ending in "ss",
/// "us" or "is" are kept; otherwise one trailing 's' is removed, provided at
/// least three characters remain.
std::string normalize_plural(std::string_view token, const WordList& exceptions);

struct TokenOccurrence {
  std::string token;
  std::size_t count = 0;
  std::size_t first_position = 0;  // index into the tokenize() output

  friend bool operator==(const TokenOccurrence&, const TokenOccurrence&) = default;
};

/// Words occurring at least twice after stop-word removal and plural
/// normalization, ordered by first position.
std::vector<TokenOccurrence> extract_frequent_words(std::span<const std::string> tokens,
                                                    const StopWordList& stopwords,
                                                    const WordList& plural_exceptions);

/// Keeps at most `max_words` words ranked by count descending, then by first
/// position ascending.
Itemset select_transaction_words(std::span<const TokenOccurrence> frequent,
                                 std::size_t max_words);

struct PreprocessOptions {
  std::size_t max_words = 13;
  /// Documents with fewer selected words are not used for training.
  std::size_t min_training_words = 13;
};

struct Transaction {
  std::string doc_id;
  std::optional<std::string> class_label;
  Itemset items;
  std::size_t frequent_word_count = 0;  // before the max_words cap
  bool trainable = false;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

Transaction make_transaction(const LabeledDocument& doc, const Lexicon& lexicon,
                             const PreprocessOptions& options);

/// Unlabeled variant used at prediction time.
Transaction make_transaction(std::string_view doc_id, std::string_view raw_text,
                             const Lexicon& lexicon, const PreprocessOptions& options);

}  // namespace assocclass
