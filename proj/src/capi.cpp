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

#include "assocclass/assocclass.h"

#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "assocclass/apriori.hpp"
#include "assocclass/classify.hpp"
#include "assocclass/corpus.hpp"
#include "assocclass/error.hpp"
#include "assocclass/model.hpp"
#include "assocclass/preprocess.hpp"

namespace ac = assocclass;

struct ac_lexicon {
  ac::Lexicon lexicon;
  std::string stopwords_digest;
  std::string exceptions_digest;
};

struct ac_model {
  ac::TrainedModel model;
};

struct ac_result {
  ac::ClassificationResult result;
  std::optional<std::vector<double>> linear;
};

struct ac_transactions {
  ac::TransactionDB db;
};

struct ac_mining {
  ac::MiningResult result;
};

struct ac_rules {
  std::vector<ac::AssociationRule> rules;
};

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

thread_local std::string last_error;

ac_status to_status(ac::ErrorCode code) {
  switch (code) {
    case ac::ErrorCode::InvalidArgument:
      return AC_ERR_INVALID_ARGUMENT;
    case ac::ErrorCode::NotFound:
      return AC_ERR_NOT_FOUND;
    case ac::ErrorCode::EmptyCorpus:
      return AC_ERR_EMPTY_CORPUS;
    case ac::ErrorCode::Io:
      return AC_ERR_IO;
    case ac::ErrorCode::Parse:
      return AC_ERR_PARSE;
    case ac::ErrorCode::UnsupportedVersion:
      return AC_ERR_UNSUPPORTED_VERSION;
    case ac::ErrorCode::DegenerateCorpus:
      return AC_ERR_DEGENERATE_CORPUS;
    case ac::ErrorCode::NoFeatures:
      return AC_ERR_NO_FEATURES;
    case ac::ErrorCode::RaggedLevel:
      return AC_ERR_RAGGED_LEVEL;
  }
  return AC_ERR_INTERNAL;
}

ac_status fail(ac_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

/// Runs `body`, converting exceptions into a status and last_error.
template <typename Body>
ac_status guarded(Body&& body) noexcept {
  try {
    body();
    return AC_OK;
  } catch (const ac::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(AC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AC_ERR_INTERNAL, "unknown error");
  }
}

const ac::Lexicon& lexicon_or_bundled(const ac_lexicon* lexicon) {
  return lexicon ? lexicon->lexicon : ac::Lexicon::bundled();
}

ac::ScoringMode to_mode(ac_mode mode) {
  switch (mode) {
    case AC_MODE_SUBSET:
      return ac::ScoringMode::Subset;
    case AC_MODE_WEIGHTED:
      return ac::ScoringMode::Weighted;
  }
  throw ac::Error(ac::ErrorCode::InvalidArgument, "unknown mode");
}

ac_mode from_mode(ac::ScoringMode mode) {
  return mode == ac::ScoringMode::Weighted ? AC_MODE_WEIGHTED : AC_MODE_SUBSET;
}

const ac::WordSetFeature* feature_at(const ac_model* m, size_t f) {
  return m && f < m->model.features.size() ? &m->model.features[f] : nullptr;
}

const ac::FrequentItemset* mined_at(const ac_mining* m, size_t k, size_t index) {
  if (!m || k == 0 || k > m->result.levels.size()) return nullptr;
  const auto& level = m->result.levels[k - 1];
  return index < level.size() ? &level[index] : nullptr;
}

const ac::AssociationRule* rule_at(const ac_rules* r, size_t i) {
  return r && i < r->rules.size() ? &r->rules[i] : nullptr;
}

const ac::MatchEvidence* match_at(const ac_result* r, size_t i) {
  return r && i < r->result.matched.size() ? &r->result.matched[i] : nullptr;
}

const char* item_at(const ac::Itemset& set, size_t i) {
  return i < set.size() ? set[i].c_str() : nullptr;
}

#define AC_REQUIRE(cond, what) \
  if (!(cond)) return fail(AC_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* ac_version(void) { return "1.0.0"; }

const char* ac_last_error(void) { return last_error.c_str(); }

const char* ac_status_name(ac_status status) {
  switch (status) {
    case AC_OK:
      return "ok";
    case AC_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case AC_ERR_NOT_FOUND:
      return "not found";
    case AC_ERR_EMPTY_CORPUS:
      return "empty corpus";
    case AC_ERR_IO:
      return "i/o error";
    case AC_ERR_PARSE:
      return "parse error";
    case AC_ERR_UNSUPPORTED_VERSION:
      return "unsupported version";
    case AC_ERR_DEGENERATE_CORPUS:
      return "degenerate corpus";
    case AC_ERR_NO_FEATURES:
      return "no features";
    case AC_ERR_RAGGED_LEVEL:
      return "ragged level";
    case AC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

ac_status ac_mode_parse(const char* name, ac_mode* out) {
  AC_REQUIRE(name && out, "null argument");
  return guarded([&] { *out = from_mode(ac::parse_scoring_mode(name)); });
}

const char* ac_mode_name(ac_mode mode) {
  switch (mode) {
    case AC_MODE_SUBSET:
      return "subset";
    case AC_MODE_WEIGHTED:
      return "weighted";
  }
  return nullptr;
}

// ---- lexicon

ac_status ac_lexicon_load(const char* stopwords_path, const char* exceptions_path,
                          ac_lexicon** out) {
  AC_REQUIRE(out, "null output handle");
  *out = nullptr;
  return guarded([&] {
    const auto& bundled = ac::Lexicon::bundled();
    auto handle = std::make_unique<ac_lexicon>();
    handle->lexicon.stopwords =
        stopwords_path ? ac::load_stopwords(stopwords_path) : bundled.stopwords;
    handle->lexicon.plural_exceptions =
        exceptions_path ? ac::load_plural_exceptions(exceptions_path) : bundled.plural_exceptions;
    handle->stopwords_digest = handle->lexicon.stopwords.digest();
    handle->exceptions_digest = handle->lexicon.plural_exceptions.digest();
    *out = handle.release();
  });
}

void ac_lexicon_free(ac_lexicon* lexicon) { delete lexicon; }

const char* ac_lexicon_stopwords_digest(const ac_lexicon* lexicon) {
  return lexicon ? lexicon->stopwords_digest.c_str() : nullptr;
}

const char* ac_lexicon_exceptions_digest(const ac_lexicon* lexicon) {
  return lexicon ? lexicon->exceptions_digest.c_str() : nullptr;
}

// ---- training

void ac_train_options_init(ac_train_options* options) {
  if (!options) return;
  const ac::ModelConfig defaults;
  options->min_support = defaults.min_support;
  options->min_confidence = defaults.min_confidence;
  options->max_words = defaults.max_words;
  options->min_training_words = defaults.min_training_words;
  options->threads = 1;
}

ac_status ac_model_train(const char* corpus_root, const ac_lexicon* lexicon,
                         const ac_train_options* options, ac_model** out,
                         ac_train_report* report) {
  AC_REQUIRE(corpus_root && options && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    ac::ModelConfig config;
    config.min_support = options->min_support;
    config.min_confidence = options->min_confidence;
    config.max_words = options->max_words;
    config.min_training_words = options->min_training_words;
    config.validate();

    const auto documents = ac::load_corpus(corpus_root);
    auto outcome = ac::train_model(documents, lexicon_or_bundled(lexicon), config,
                                   ac::MiningOptions{options->threads});
    if (report) {
      report->documents_scanned = outcome.report.documents_scanned;
      report->documents_used = outcome.report.documents_used;
      report->documents_excluded = outcome.report.documents_excluded;
    }
    *out = new ac_model{std::move(outcome.model)};
  });
}

// ---- model

ac_status ac_model_load(const char* path, ac_model** out) {
  AC_REQUIRE(path && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new ac_model{ac::load_model(path)}; });
}

ac_status ac_model_save(const ac_model* model, const char* path) {
  AC_REQUIRE(model && path, "null argument");
  return guarded([&] { ac::save_model(model->model, path); });
}

void ac_model_free(ac_model* model) { delete model; }

size_t ac_model_class_count(const ac_model* m) { return m ? m->model.classes.size() : 0; }

const char* ac_model_class_name(const ac_model* m, size_t cls) {
  return m && cls < m->model.classes.size() ? m->model.classes[cls].c_str() : nullptr;
}

double ac_model_prior(const ac_model* m, size_t cls) {
  return m && cls < m->model.prior.size() ? m->model.prior[cls] : kNaN;
}

size_t ac_model_doc_count(const ac_model* m, size_t cls) {
  return m && cls < m->model.doc_count.size() ? m->model.doc_count[cls] : 0;
}

size_t ac_model_wordset_count(const ac_model* m, size_t cls) {
  return m && cls < m->model.wordset_count.size() ? m->model.wordset_count[cls] : 0;
}

size_t ac_model_vocabulary_size(const ac_model* m) { return m ? m->model.vocabulary_size : 0; }

size_t ac_model_max_words(const ac_model* m) { return m ? m->model.config.max_words : 0; }

double ac_model_min_support(const ac_model* m) { return m ? m->model.config.min_support : kNaN; }

double ac_model_min_confidence(const ac_model* m) {
  return m ? m->model.config.min_confidence : kNaN;
}

ac_mode ac_model_default_mode(const ac_model* m) {
  return m ? from_mode(m->model.config.mode) : AC_MODE_SUBSET;
}

const char* ac_model_stopwords_digest(const ac_model* m) {
  return m ? m->model.config.stopwords_digest.c_str() : nullptr;
}

const char* ac_model_exceptions_digest(const ac_model* m) {
  return m ? m->model.config.exceptions_digest.c_str() : nullptr;
}

size_t ac_model_feature_count(const ac_model* m) { return m ? m->model.features.size() : 0; }

size_t ac_model_feature_size(const ac_model* m, size_t f) {
  const auto* feature = feature_at(m, f);
  return feature ? feature->itemset.size() : 0;
}

const char* ac_model_feature_item(const ac_model* m, size_t f, size_t item) {
  const auto* feature = feature_at(m, f);
  return feature ? item_at(feature->itemset, item) : nullptr;
}

size_t ac_model_feature_class_count(const ac_model* m, size_t f, size_t cls) {
  const auto* feature = feature_at(m, f);
  return feature && cls < feature->per_class_count.size() ? feature->per_class_count[cls] : 0;
}

double ac_model_feature_probability(const ac_model* m, size_t f, size_t cls) {
  const auto* feature = feature_at(m, f);
  return feature && cls < feature->per_class_prob.size() ? feature->per_class_prob[cls] : kNaN;
}

size_t ac_model_feature_owner(const ac_model* m, size_t f) {
  const auto* feature = feature_at(m, f);
  return feature ? feature->owner : 0;
}

// ---- classification

ac_status ac_classify_text(const ac_model* model, const ac_lexicon* lexicon, const char* text,
                           size_t length, ac_mode mode, ac_result** out) {
  AC_REQUIRE(model && out && (text || length == 0), "null argument");
  *out = nullptr;
  return guarded([&] {
    auto result = ac::classify_document(model->model, std::string_view(text ? text : "", length),
                                        lexicon_or_bundled(lexicon), to_mode(mode));
    auto linear = result.linear_scores();
    *out = new ac_result{std::move(result), std::move(linear)};
  });
}

void ac_result_free(ac_result* result) { delete result; }

ac_mode ac_result_mode(const ac_result* r) {
  return r ? from_mode(r->result.mode) : AC_MODE_SUBSET;
}

size_t ac_result_class_count(const ac_result* r) { return r ? r->result.scores.size() : 0; }

size_t ac_result_predicted(const ac_result* r) { return r ? r->result.predicted_index : 0; }

const char* ac_result_predicted_label(const ac_result* r) {
  return r ? r->result.predicted.c_str() : nullptr;
}

int ac_result_tie(const ac_result* r) { return r && r->result.tie ? 1 : 0; }

int ac_result_matched_any(const ac_result* r) { return r && r->result.matched_any ? 1 : 0; }

double ac_result_score(const ac_result* r, size_t cls) {
  return r && cls < r->result.scores.size() ? r->result.scores[cls] : kNaN;
}

size_t ac_result_factor_count(const ac_result* r) { return r ? r->result.factor_count : 0; }

int ac_result_linear_score(const ac_result* r, size_t cls, double* out) {
  if (!r || !r->linear || cls >= r->linear->size() || !out) return 0;
  *out = (*r->linear)[cls];
  return 1;
}

size_t ac_result_word_count(const ac_result* r) { return r ? r->result.frequent_words.size() : 0; }

const char* ac_result_word(const ac_result* r, size_t index) {
  return r ? item_at(r->result.frequent_words, index) : nullptr;
}

size_t ac_result_match_count(const ac_result* r) { return r ? r->result.matched.size() : 0; }

size_t ac_result_match_feature(const ac_result* r, size_t match) {
  const auto* m = match_at(r, match);
  return m ? m->feature : 0;
}

size_t ac_result_match_intersection_size(const ac_result* r, size_t match) {
  const auto* m = match_at(r, match);
  return m ? m->intersection.size() : 0;
}

const char* ac_result_match_intersection_item(const ac_result* r, size_t match, size_t item) {
  const auto* m = match_at(r, match);
  return m ? item_at(m->intersection, item) : nullptr;
}

double ac_result_match_fraction(const ac_result* r, size_t match) {
  const auto* m = match_at(r, match);
  return m ? m->fraction() : kNaN;
}

// ---- mining

ac_status ac_transactions_load(const char* path, ac_transactions** out) {
  AC_REQUIRE(path && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new ac_transactions{ac::load_transactions(path)}; });
}

ac_status ac_transactions_parse(const char* text, size_t length, ac_transactions** out) {
  AC_REQUIRE(out && (text || length == 0), "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ac_transactions{ac::parse_transactions(std::string_view(text ? text : "", length))};
  });
}

void ac_transactions_free(ac_transactions* transactions) { delete transactions; }

size_t ac_transactions_count(const ac_transactions* t) { return t ? t->db.size() : 0; }

ac_status ac_mine_count(const ac_transactions* transactions, size_t min_count, unsigned threads,
                        ac_mining** out) {
  AC_REQUIRE(transactions && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ac_mining{ac::mine_frequent_itemsets(
        transactions->db, ac::MinSupport::count(min_count), ac::MiningOptions{threads})};
  });
}

ac_status ac_mine_fraction(const ac_transactions* transactions, double min_support,
                           unsigned threads, ac_mining** out) {
  AC_REQUIRE(transactions && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ac_mining{ac::mine_frequent_itemsets(
        transactions->db, ac::MinSupport::fraction(min_support), ac::MiningOptions{threads})};
  });
}

void ac_mining_free(ac_mining* mining) { delete mining; }

size_t ac_mining_min_support_count(const ac_mining* m) {
  return m ? m->result.min_support_count : 0;
}

size_t ac_mining_total_transactions(const ac_mining* m) {
  return m ? m->result.total_transactions : 0;
}

size_t ac_mining_level_count(const ac_mining* m) { return m ? m->result.levels.size() : 0; }

size_t ac_mining_level_size(const ac_mining* m, size_t k) {
  return m && k >= 1 && k <= m->result.levels.size() ? m->result.levels[k - 1].size() : 0;
}

const char* ac_mining_item(const ac_mining* m, size_t k, size_t index, size_t item) {
  const auto* f = mined_at(m, k, index);
  return f ? item_at(f->itemset, item) : nullptr;
}

size_t ac_mining_support(const ac_mining* m, size_t k, size_t index) {
  const auto* f = mined_at(m, k, index);
  return f ? f->support_count : 0;
}

size_t ac_mining_candidate_level_count(const ac_mining* m) {
  return m ? m->result.candidate_counts.size() : 0;
}

size_t ac_mining_candidate_count(const ac_mining* m, size_t k) {
  return m && k >= 1 && k <= m->result.candidate_counts.size() ? m->result.candidate_counts[k - 1]
                                                               : 0;
}

ac_status ac_rules_generate(const ac_mining* mining, double min_confidence, ac_rules** out) {
  AC_REQUIRE(mining && out, "null argument");
  *out = nullptr;
  return guarded(
      [&] { *out = new ac_rules{ac::generate_rules(mining->result, min_confidence)}; });
}

void ac_rules_free(ac_rules* rules) { delete rules; }

size_t ac_rules_count(const ac_rules* r) { return r ? r->rules.size() : 0; }

size_t ac_rule_antecedent_size(const ac_rules* r, size_t rule) {
  const auto* x = rule_at(r, rule);
  return x ? x->antecedent.size() : 0;
}

const char* ac_rule_antecedent_item(const ac_rules* r, size_t rule, size_t item) {
  const auto* x = rule_at(r, rule);
  return x ? item_at(x->antecedent, item) : nullptr;
}

size_t ac_rule_consequent_size(const ac_rules* r, size_t rule) {
  const auto* x = rule_at(r, rule);
  return x ? x->consequent.size() : 0;
}

const char* ac_rule_consequent_item(const ac_rules* r, size_t rule, size_t item) {
  const auto* x = rule_at(r, rule);
  return x ? item_at(x->consequent, item) : nullptr;
}

size_t ac_rule_support_count(const ac_rules* r, size_t rule) {
  const auto* x = rule_at(r, rule);
  return x ? x->support_count : 0;
}

double ac_rule_support(const ac_rules* r, size_t rule) {
  const auto* x = rule_at(r, rule);
  return x ? x->support : kNaN;
}

double ac_rule_confidence(const ac_rules* r, size_t rule) {
  const auto* x = rule_at(r, rule);
  return x ? x->confidence : kNaN;
}

}  // extern "C"
