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

#include "assocclass/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "assocclass/error.hpp"

namespace assocclass {

std::optional<std::vector<double>> ClassificationResult::linear_scores() const {
  if (factor_count > kMaxLinearFactors) return std::nullopt;
  std::vector<double> linear;
  linear.reserve(scores.size());
  for (const double s : scores) linear.push_back(std::pow(10.0, s));
  return linear;
}

std::vector<MatchEvidence> match_word_sets(const TrainedModel& model,
                                           const Itemset& frequent_words) {
  std::vector<MatchEvidence> matches;
  for (std::size_t i = 0; i < model.features.size(); ++i) {
    const auto& feature = model.features[i].itemset;
    auto shared = frequent_words.intersection(feature);
    if (shared.size() >= 2) matches.push_back({i, std::move(shared), feature.size()});
  }
  std::stable_sort(matches.begin(), matches.end(),
                   [&](const MatchEvidence& a, const MatchEvidence& b) {
                     return model.features[a.feature].itemset < model.features[b.feature].itemset;
                   });
  return matches;
}

ClassificationResult score(const TrainedModel& model, std::span<const MatchEvidence> matches,
                           ScoringMode mode) {
  if (mode != ScoringMode::Subset && mode != ScoringMode::Weighted)
    throw Error(ErrorCode::InvalidArgument, "unknown mode");
  const std::size_t n_classes = model.classes.size();
  if (n_classes == 0) throw Error(ErrorCode::InvalidArgument, "model has no classes");

  // Accumulate in canonical feature order so scores do not depend on how the
  // model's feature list happens to be ordered.
  std::vector<const MatchEvidence*> ordered;
  ordered.reserve(matches.size());
  for (const auto& m : matches) {
    if (m.feature >= model.features.size() || m.intersection.size() < 2)
      throw Error(ErrorCode::InvalidArgument, "match evidence does not belong to this model");
    ordered.push_back(&m);
  }
  std::sort(ordered.begin(), ordered.end(), [&](const MatchEvidence* a, const MatchEvidence* b) {
    const auto& fa = model.features[a->feature].itemset;
    const auto& fb = model.features[b->feature].itemset;
    if (fa != fb) return fa < fb;
    return a->intersection < b->intersection;
  });

  ClassificationResult result;
  result.mode = mode;
  result.scores.resize(n_classes);
  for (std::size_t c = 0; c < n_classes; ++c) result.scores[c] = std::log10(model.prior[c]);

  if (mode == ScoringMode::Subset) {
    std::map<Itemset, std::vector<double>> groups;
    for (const auto* m : ordered) {
      const auto& prob = model.features[m->feature].per_class_prob;
      auto [it, inserted] = groups.try_emplace(m->intersection, prob);
      if (!inserted)
        for (std::size_t c = 0; c < n_classes; ++c) it->second[c] = std::max(it->second[c], prob[c]);
    }
    for (const auto& [shared, factor] : groups)
      for (std::size_t c = 0; c < n_classes; ++c) result.scores[c] += std::log10(factor[c]);
    result.factor_count = groups.size();
  } else {
    for (const auto* m : ordered) {
      const auto& prob = model.features[m->feature].per_class_prob;
      const double fraction = m->fraction();
      for (std::size_t c = 0; c < n_classes; ++c)
        result.scores[c] += std::log10(prob[c] * fraction);
    }
    result.factor_count = ordered.size();
  }

  const auto best = std::max_element(result.scores.begin(), result.scores.end());
  result.predicted_index = static_cast<std::size_t>(best - result.scores.begin());
  result.predicted = model.classes[result.predicted_index];
  result.tie = std::count(result.scores.begin(), result.scores.end(), *best) > 1;
  result.matched.assign(matches.begin(), matches.end());
  result.matched_any = !result.matched.empty();
  return result;
}

ClassificationResult classify_document(const TrainedModel& model, std::string_view raw_text,
                                       const Lexicon& lexicon, ScoringMode mode) {
  const PreprocessOptions options{model.config.max_words, 0};
  auto tx = make_transaction("", raw_text, lexicon, options);
  const auto matches = match_word_sets(model, tx.items);
  auto result = score(model, matches, mode);
  result.frequent_words = std::move(tx.items);
  return result;
}

}  // namespace assocclass
