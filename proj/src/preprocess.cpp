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

#include "assocclass/preprocess.hpp"

#include <algorithm>
#include <unordered_map>

#include "text.hpp"

namespace assocclass {

namespace detail {
extern const std::string_view kBundledStopwords;
extern const std::string_view kBundledPluralExceptions;
}  // namespace detail

namespace {

constexpr std::size_t kMinTokenLength = 3;

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

const Lexicon& Lexicon::bundled() {
  static const Lexicon lexicon{WordList::parse(detail::kBundledStopwords),
                               WordList::parse(detail::kBundledPluralExceptions)};
  return lexicon;
}

std::vector<std::string> tokenize(std::string_view raw_text) {
  std::vector<std::string> tokens;
  std::string current;

  const auto flush = [&] {
    if (!current.empty() && detail::code_point_count(current) >= kMinTokenLength &&
        !all_digits(current))
      tokens.push_back(current);
    current.clear();
  };

  std::size_t pos = 0;
  char32_t previous = 0;
  while (pos < raw_text.size()) {
    const char32_t cp = detail::decode_utf8(raw_text, pos);
    if (detail::is_word_char(cp)) {
      detail::append_utf8(current, detail::to_lower(cp));
    } else if (cp == '-' && detail::is_word_char(previous) && pos < raw_text.size()) {
      std::size_t lookahead = pos;
      if (detail::is_word_char(detail::decode_utf8(raw_text, lookahead)))
        current.push_back('-');
      else
        flush();
    } else {
      flush();
    }
    previous = cp;
  }
  flush();
  return tokens;
}

std::string normalize_plural(std::string_view token, const WordList& exceptions) {
  if (exceptions.contains(token) || ends_with(token, "ss") || ends_with(token, "us") ||
      ends_with(token, "is"))
    return std::string(token);
  if (ends_with(token, "s") && detail::code_point_count(token) > kMinTokenLength)
    return std::string(token.substr(0, token.size() - 1));
  return std::string(token);
}

std::vector<TokenOccurrence> extract_frequent_words(std::span<const std::string> tokens,
                                                    const StopWordList& stopwords,
                                                    const WordList& plural_exceptions) {
  std::vector<TokenOccurrence> seen;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t position = 0; position < tokens.size(); ++position) {
    if (stopwords.contains(tokens[position])) continue;
    auto word = normalize_plural(tokens[position], plural_exceptions);
    const auto [it, inserted] = index.try_emplace(word, seen.size());
    if (inserted)
      seen.push_back({std::move(word), 1, position});
    else
      ++seen[it->second].count;
  }
  std::erase_if(seen, [](const TokenOccurrence& t) { return t.count < 2; });
  return seen;
}

Itemset select_transaction_words(std::span<const TokenOccurrence> frequent,
                                 std::size_t max_words) {
  std::vector<const TokenOccurrence*> ranked;
  ranked.reserve(frequent.size());
  for (const auto& t : frequent) ranked.push_back(&t);
  // Token breaks the (count, position) tie only for malformed input with
  // duplicated positions, keeping the order total.
  std::sort(ranked.begin(), ranked.end(), [](const TokenOccurrence* a, const TokenOccurrence* b) {
    if (a->count != b->count) return a->count > b->count;
    if (a->first_position != b->first_position) return a->first_position < b->first_position;
    return a->token < b->token;
  });
  if (ranked.size() > max_words) ranked.resize(max_words);

  std::vector<std::string> words;
  words.reserve(ranked.size());
  for (const auto* t : ranked) words.push_back(t->token);
  return Itemset(std::move(words));
}

Transaction make_transaction(std::string_view doc_id, std::string_view raw_text,
                             const Lexicon& lexicon, const PreprocessOptions& options) {
  const auto tokens = tokenize(raw_text);
  const auto frequent =
      extract_frequent_words(tokens, lexicon.stopwords, lexicon.plural_exceptions);

  Transaction tx;
  tx.doc_id = std::string(doc_id);
  tx.frequent_word_count = frequent.size();
  tx.items = select_transaction_words(frequent, options.max_words);
  tx.trainable = tx.items.size() >= std::max<std::size_t>(2, options.min_training_words);
  return tx;
}

Transaction make_transaction(const LabeledDocument& doc, const Lexicon& lexicon,
                             const PreprocessOptions& options) {
  auto tx = make_transaction(doc.id, doc.raw_text, lexicon, options);
  tx.class_label = doc.class_label;
  return tx;
}

}  // namespace assocclass
