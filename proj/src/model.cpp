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

#include "assocclass/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "assocclass/error.hpp"

namespace assocclass {

std::string_view to_string(ScoringMode mode) {
  switch (mode) {
    case ScoringMode::Subset:
      return "subset";
    case ScoringMode::Weighted:
      return "weighted";
  }
  throw Error(ErrorCode::InvalidArgument, "unknown mode");
}

ScoringMode parse_scoring_mode(std::string_view name) {
  if (name == "subset") return ScoringMode::Subset;
  if (name == "weighted") return ScoringMode::Weighted;
  throw Error(ErrorCode::InvalidArgument, "unknown mode: " + std::string(name));
}

void ModelConfig::validate() const {
  if (!(min_support > 0.0 && min_support <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "min_support must be in (0, 1]");
  if (!(min_confidence > 0.0 && min_confidence <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "min_confidence must be in (0, 1]");
  if (max_words < 2) throw Error(ErrorCode::InvalidArgument, "max_words must be >= 2");
  (void)to_string(mode);
}

std::size_t TrainedModel::class_index(std::string_view label) const {
  const auto it = std::find(classes.begin(), classes.end(), label);
  if (it == classes.end()) throw Error(ErrorCode::NotFound, "unknown class: " + std::string(label));
  return static_cast<std::size_t>(it - classes.begin());
}

std::vector<double> compute_priors(std::span<const std::size_t> doc_count) {
  if (doc_count.empty()) throw Error(ErrorCode::InvalidArgument, "no classes");
  if (std::find(doc_count.begin(), doc_count.end(), 0u) != doc_count.end())
    throw Error(ErrorCode::InvalidArgument, "class with zero documents");
  const auto total = std::accumulate(doc_count.begin(), doc_count.end(), std::size_t{0});
  std::vector<double> prior;
  prior.reserve(doc_count.size());
  for (const auto n : doc_count)
    prior.push_back(static_cast<double>(n) / static_cast<double>(total));
  return prior;
}

double estimate_probability(std::size_t n_k, std::size_t n_c, std::size_t vocabulary_size) {
  if (vocabulary_size < 1) throw Error(ErrorCode::InvalidArgument, "vocabulary_size must be >= 1");
  return static_cast<double>(n_k + 1) / static_cast<double>(n_c + vocabulary_size);
}

TrainedModel assemble_model(std::vector<std::string> classes, std::vector<std::size_t> doc_count,
                            std::vector<FeatureCounts> features, ModelConfig config) {
  const std::size_t n_classes = classes.size();
  if (n_classes == 0) throw Error(ErrorCode::InvalidArgument, "no classes");
  if (doc_count.size() != n_classes)
    throw Error(ErrorCode::InvalidArgument, "doc_count does not match classes");
  if (features.empty()) throw Error(ErrorCode::NoFeatures, "no features (lower min_support)");

  // Canonical class order, carrying every per-class vector along.
  std::vector<std::size_t> order(n_classes);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return classes[a] < classes[b]; });

  TrainedModel model;
  model.config = std::move(config);
  for (const auto i : order) {
    if (classes[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty class label");
    if (!model.classes.empty() && model.classes.back() == classes[i])
      throw Error(ErrorCode::InvalidArgument, "duplicate class: " + classes[i]);
    model.classes.push_back(classes[i]);
    model.doc_count.push_back(doc_count[i]);
  }
  model.prior = compute_priors(model.doc_count);

  std::sort(features.begin(), features.end(),
            [](const FeatureCounts& a, const FeatureCounts& b) { return a.itemset < b.itemset; });
  model.wordset_count.assign(n_classes, 0);
  model.features.reserve(features.size());
  for (auto& f : features) {
    if (f.itemset.size() < 2)
      throw Error(ErrorCode::InvalidArgument, "feature with fewer than two items: {" +
                                                  f.itemset.join() + "}");
    if (!model.features.empty() && model.features.back().itemset == f.itemset)
      throw Error(ErrorCode::InvalidArgument, "duplicate feature: {" + f.itemset.join() + "}");
    if (f.per_class_count.size() != n_classes)
      throw Error(ErrorCode::InvalidArgument, "feature class counts do not match classes");

    WordSetFeature feature;
    feature.itemset = std::move(f.itemset);
    for (const auto i : order) feature.per_class_count.push_back(f.per_class_count[i]);
    feature.owner = static_cast<std::size_t>(
        std::max_element(feature.per_class_count.begin(), feature.per_class_count.end()) -
        feature.per_class_count.begin());
    ++model.wordset_count[feature.owner];
    model.features.push_back(std::move(feature));
  }

  model.vocabulary_size = model.features.size();
  for (auto& feature : model.features) {
    feature.per_class_prob.reserve(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c)
      feature.per_class_prob.push_back(estimate_probability(
          feature.per_class_count[c], model.wordset_count[c], model.vocabulary_size));
  }
  return model;
}

TrainedModel build_model(std::span<const Transaction> transactions, MinSupport min_support,
                         const ModelConfig& config, const MiningOptions& options) {
  config.validate();

  std::map<std::string, std::size_t> class_docs;
  for (const auto& t : transactions) {
    if (!t.class_label || t.class_label->empty())
      throw Error(ErrorCode::InvalidArgument, "unlabeled training transaction: " + t.doc_id);
    if (t.items.size() < 2)
      throw Error(ErrorCode::InvalidArgument,
                  "training transaction with fewer than two items: " + t.doc_id);
    ++class_docs[*t.class_label];
  }
  if (class_docs.size() < 2) throw Error(ErrorCode::DegenerateCorpus, "degenerate corpus");

  std::vector<std::string> classes;
  std::vector<std::size_t> doc_count;
  for (const auto& [label, n] : class_docs) {
    classes.push_back(label);
    doc_count.push_back(n);
  }

  const auto db = TransactionDB::from(transactions);
  const auto mined = mine_frequent_itemsets(db, min_support, options);
  const auto maximal = maximal_itemsets(mined, 2);
  if (maximal.empty()) throw Error(ErrorCode::NoFeatures, "no features (lower min_support)");

  std::vector<FeatureCounts> features;
  features.reserve(maximal.size());
  for (const auto& m : maximal) {
    FeatureCounts f{m.itemset, std::vector<std::size_t>(classes.size(), 0)};
    for (const auto& t : transactions) {
      if (!t.items.includes(m.itemset)) continue;
      const auto c = std::lower_bound(classes.begin(), classes.end(), *t.class_label) -
                     classes.begin();
      ++f.per_class_count[static_cast<std::size_t>(c)];
    }
    features.push_back(std::move(f));
  }
  return assemble_model(std::move(classes), std::move(doc_count), std::move(features), config);
}

TrainingOutcome train_model(std::span<const LabeledDocument> documents, const Lexicon& lexicon,
                            ModelConfig config, const MiningOptions& options) {
  config.validate();
  config.stopwords_digest = lexicon.stopwords.digest();
  config.exceptions_digest = lexicon.plural_exceptions.digest();

  const PreprocessOptions preprocess{config.max_words, config.min_training_words};
  TrainingReport report;
  std::vector<Transaction> transactions;
  for (const auto& doc : documents) {
    ++report.documents_scanned;
    auto tx = make_transaction(doc, lexicon, preprocess);
    if (!tx.trainable) {
      ++report.documents_excluded;
      continue;
    }
    transactions.push_back(std::move(tx));
  }
  report.documents_used = transactions.size();

  auto model =
      build_model(transactions, MinSupport::fraction(config.min_support), config, options);
  return {std::move(model), report};
}

}  // namespace assocclass
