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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assocclass/apriori.hpp"
#include "assocclass/corpus.hpp"
#include "assocclass/itemset.hpp"
#include "assocclass/preprocess.hpp"

namespace assocclass {

enum class ScoringMode { Subset, Weighted };

std::string_view to_string(ScoringMode mode);
/// Accepts "subset" or "weighted"; anything else is Error(InvalidArgument).
ScoringMode parse_scoring_mode(std::string_view name);

struct ModelConfig {
  double min_support = 0.02;
  double min_confidence = 0.75;  // reported only; features are not filtered by it
  std::size_t max_words = 13;
  std::size_t min_training_words = 13;
  ScoringMode mode = ScoringMode::Subset;
  std::string stopwords_digest;
  std::string exceptions_digest;

  /// Throws Error(InvalidArgument) unless 0 < min_support <= 1,
  /// 0 < min_confidence <= 1 and max_words >= 2.
  void validate() const;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

/// A mined word set used as one Naive Bayes attribute. Per-class vectors are
/// indexed like TrainedModel::classes.
struct WordSetFeature {
  Itemset itemset;
  std::vector<std::size_t> per_class_count;
  std::vector<double> per_class_prob;
  std::size_t owner = 0;

  friend bool operator==(const WordSetFeature&, const WordSetFeature&) = default;
};

struct TrainedModel {
  std::vector<std::string> classes;  // sorted
  std::vector<double> prior;
  std::vector<std::size_t> doc_count;
  std::vector<std::size_t> wordset_count;  // features owned per class
  std::size_t vocabulary_size = 0;
  std::vector<WordSetFeature> features;  // canonical itemset order
  ModelConfig config;

  /// Throws Error(NotFound) for an unknown label.
  std::size_t class_index(std::string_view label) const;

  friend bool operator==(const TrainedModel&, const TrainedModel&) = default;
};

/// prior[c] = doc_count[c] / sum. Error(InvalidArgument) "no classes" on
/// empty input or on a zero count.
std::vector<double> compute_priors(std::span<const std::size_t> doc_count);

/// m-estimate (n_k + 1) / (n_c + vocabulary_size).
double estimate_probability(std::size_t n_k, std::size_t n_c, std::size_t vocabulary_size);

struct FeatureCounts {
  Itemset itemset;
  std::vector<std::size_t> per_class_count;
};

/// Derives owners, word-set counts, priors and probabilities from raw counts.
/// Shared by training and by model loading so both produce identical values.
/// Owner ties go to the lower class index.
TrainedModel assemble_model(std::vector<std::string> classes,
                            std::vector<std::size_t> doc_count,
                            std::vector<FeatureCounts> features, ModelConfig config);

/// Mines all transactions together, keeps maximal frequent itemsets of two or
/// more words as features and tallies per-class containment counts.
/// Errors: fewer than two classes is "degenerate corpus"; nothing mined is
/// "no features (lower min_support)".
TrainedModel build_model(std::span<const Transaction> transactions, MinSupport min_support,
                         const ModelConfig& config, const MiningOptions& options = {});

struct TrainingReport {
  std::size_t documents_scanned = 0;
  std::size_t documents_used = 0;
  std::size_t documents_excluded = 0;  // fewer than min_training_words words
};

struct TrainingOutcome {
  TrainedModel model;
  TrainingReport report;
};

/// Full pipeline: preprocess every document, drop those below the training
/// floor, build the model at config.min_support. Lexicon digests are recorded
/// in the model config.
TrainingOutcome train_model(std::span<const LabeledDocument> documents, const Lexicon& lexicon,
                            ModelConfig config, const MiningOptions& options = {});

inline constexpr int kModelSchemaVersion = 1;

std::string serialize_model(const TrainedModel& model);
TrainedModel parse_model(std::string_view json_text);
void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

}  // namespace assocclass
