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

#include "assocclass/corpus.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

#include "assocclass/error.hpp"
#include "text.hpp"

namespace fs = std::filesystem;

namespace assocclass {

namespace {

bool is_hidden(const fs::path& p) {
  const auto name = p.filename().string();
  return !name.empty() && name.front() == '.';
}

std::string normalize_word(std::string_view raw) {
  auto word = detail::lowercase(detail::trim(raw));
  if (word.empty()) throw Error(ErrorCode::InvalidArgument, "empty word in word list");
  if (word.find_first_of(" \t\r\n\f\v") != std::string::npos)
    throw Error(ErrorCode::InvalidArgument, "word list entry contains whitespace: '" + word + "'");
  return word;
}

WordList load_word_list(const fs::path& path, const char* what) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec))
    throw Error(ErrorCode::NotFound, std::string(what) + " not found: " + path.string());
  return WordList::parse(read_text_file(path));
}

}  // namespace

WordList::WordList(Set words) {
  for (const auto& w : words) words_.insert(normalize_word(w));
}

WordList WordList::parse(std::string_view text) {
  Set words;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = detail::trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') words.insert(normalize_word(line));
    start = end + 1;
  }
  WordList list;
  list.words_ = std::move(words);
  return list;
}

bool WordList::contains(std::string_view word) const { return words_.find(word) != words_.end(); }

std::string WordList::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& w : words_) {
    for (const char c : w) mix(static_cast<unsigned char>(c));
    mix('\n');
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return std::string("fnv1a64:") + buf;
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "cannot read file: " + path.string());
  return ss.str();
}

std::vector<LabeledDocument> load_corpus(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec))
    throw Error(ErrorCode::NotFound, "corpus not found: " + root.string());

  std::vector<LabeledDocument> docs;
  for (const auto& class_entry : fs::directory_iterator(root)) {
    if (!class_entry.is_directory() || is_hidden(class_entry.path())) continue;
    const auto label = class_entry.path().filename().string();
    for (const auto& file : fs::directory_iterator(class_entry.path())) {
      if (!file.is_regular_file() || is_hidden(file.path())) continue;
      const auto name = file.path().filename().string();
      docs.push_back({label + "/" + name, label, read_text_file(file.path())});
    }
  }
  if (docs.empty()) throw Error(ErrorCode::EmptyCorpus, "empty corpus: " + root.string());

  std::sort(docs.begin(), docs.end(),
            [](const LabeledDocument& a, const LabeledDocument& b) { return a.id < b.id; });
  return docs;
}

StopWordList load_stopwords(const fs::path& path) {
  return load_word_list(path, "stopword file");
}

WordList load_plural_exceptions(const fs::path& path) {
  return load_word_list(path, "plural exception file");
}

}  // namespace assocclass
