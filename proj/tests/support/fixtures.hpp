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

// Shared fixture helpers for the test suites.

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

inline std::filesystem::path data_dir() { return ASSOCCLASS_DATA_DIR; }
inline std::filesystem::path fixture(const std::string& name) {
  return data_dir() / "fixtures" / name;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << text;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("assocclass-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

struct EngineeredClass {
  std::string name;
  std::size_t documents;
  std::size_t word_sets;
};

/// Writes a corpus whose mining at min_support 0.02 yields exactly
/// `word_sets` maximal two-word sets per class. Feature f of a class is a
/// word pair placed in documents f and f+1; all other words are unique to
/// their document, so no other pair reaches the count of 2. Every document
/// carries exactly 13 words, each written twice.
inline void write_engineered_corpus(const std::filesystem::path& root,
                                    const std::vector<EngineeredClass>& classes) {
  constexpr std::size_t kWordsPerDoc = 13;
  for (const auto& cls : classes) {
    std::vector<std::vector<std::string>> docs(cls.documents);
    for (std::size_t f = 0; f < cls.word_sets; ++f) {
      const auto stem = cls.name + "-pair-" + std::to_string(f);
      for (const auto d : {f, (f + 1) % cls.documents}) {
        docs[d].push_back(stem + "-alpha");
        docs[d].push_back(stem + "-beta");
      }
    }
    for (std::size_t d = 0; d < cls.documents; ++d) {
      for (std::size_t w = 0; docs[d].size() < kWordsPerDoc; ++w)
        docs[d].push_back(cls.name + "-doc-" + std::to_string(d) + "-word-" + std::to_string(w));
      std::string text;
      for (int rep = 0; rep < 2; ++rep) {
        for (const auto& word : docs[d]) text += word + " ";
        text += ".\n";
      }
      char name[32];
      std::snprintf(name, sizeof name, "doc%03zu.txt", d);
      write_file(root / cls.name / name, text);
    }
  }
}

/// Class layout of the 115-abstract training set: 47/48/20 documents
/// yielding 43/47/17 word sets.
inline std::vector<EngineeredClass> reference_layout() {
  return {{"CS", 47, 43}, {"EE", 48, 47}, {"ME", 20, 17}};
}

}  // namespace testing
