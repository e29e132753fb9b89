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

#include "assocclass/itemset.hpp"
#include "assocclass/model.hpp"
#include "assocclass/preprocess.hpp"

namespace assocclass {

struct MatchEvidence {
  std::size_t feature = 0;  // index into TrainedModel::features
  Itemset intersection;     // at least two words
  std::size_t feature_size = 0;

  double fraction() const {
    return static_cast<double>(intersection.size()) / static_cast<double>(feature_size);
  }

  friend bool operator==(const MatchEvidence&, const MatchEvidence&) = default;
};

/// Linear scores are only reported up to this many factors.
inline constexpr std::size_t kMaxLinearFactors = 15;

struct ClassificationResult {
  ScoringMode mode = ScoringMode::Subset;
  std::vector<double> scores;  // log10, indexed like TrainedModel::classes
  std::size_t predicted_index = 0;
  std::string predicted;
  bool tie = false;
  bool matched_any = false;
  std::vector<MatchEvidence> matched;
  std::size_t factor_count = 0;  // probability factors after the prior
  Itemset frequent_words;

  /// 10^score per class when factor_count <= kMaxLinearFactors.
  std::optional<std::vector<double>> linear_scores() const;
};

/// Every feature sharing two or more words with `frequent_words`, ordered by
/// feature itemset.
std::vector<MatchEvidence> match_word_sets(const TrainedModel& model,
                                           const Itemset& frequent_words);

/// Subset mode groups matches by intersection and takes, per class, the
/// largest probability within each group. Weighted mode multiplies every
/// match's probability by its matched fraction. Both add log10 factors to the
/// log10 prior.
ClassificationResult score(const TrainedModel& model, std::span<const MatchEvidence> matches,
                           ScoringMode mode);

/// Preprocesses with the model's max_words (no training floor), matches and
/// scores.
ClassificationResult classify_document(const TrainedModel& model, std::string_view raw_text,
                                       const Lexicon& lexicon, ScoringMode mode);

}  // namespace assocclass
