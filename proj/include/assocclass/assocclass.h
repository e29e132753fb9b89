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

/*
 * C interface to the assocclass library.
 *
 * All objects are opaque handles created by an ac_*_load / ac_*_train /
 * ac_mine_* / ac_classify_* call and released with the matching ac_*_free.
 * Fallible calls return an ac_status; on failure ac_last_error() returns a
 * message describing the failure (per thread, valid until the next failing
 * call on the same thread). Strings returned by accessors are owned by the
 * handle and stay valid until it is freed. Accessors given an out-of-range
 * index return 0, NaN or NULL.
 *
 * Handles are immutable after creation and may be read from several threads.
 */
#ifndef ASSOCCLASS_ASSOCCLASS_H
#define ASSOCCLASS_ASSOCCLASS_H

#include <stddef.h>

#if defined(ASSOCCLASS_BUILDING_LIBRARY)
#define ASSOCCLASS_API __attribute__((visibility("default")))
#else
#define ASSOCCLASS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ac_status {
  AC_OK = 0,
  AC_ERR_INVALID_ARGUMENT = 1,
  AC_ERR_NOT_FOUND = 2,
  AC_ERR_EMPTY_CORPUS = 3,
  AC_ERR_IO = 4,
  AC_ERR_PARSE = 5,
  AC_ERR_UNSUPPORTED_VERSION = 6,
  AC_ERR_DEGENERATE_CORPUS = 7,
  AC_ERR_NO_FEATURES = 8,
  AC_ERR_RAGGED_LEVEL = 9,
  AC_ERR_INTERNAL = 100
} ac_status;

typedef enum ac_mode { AC_MODE_SUBSET = 0, AC_MODE_WEIGHTED = 1 } ac_mode;

typedef struct ac_lexicon ac_lexicon;
typedef struct ac_model ac_model;
typedef struct ac_result ac_result;
typedef struct ac_transactions ac_transactions;
typedef struct ac_mining ac_mining;
typedef struct ac_rules ac_rules;

ASSOCCLASS_API const char* ac_version(void);
ASSOCCLASS_API const char* ac_last_error(void);
ASSOCCLASS_API const char* ac_status_name(ac_status status);

/* Parses "subset" / "weighted". */
ASSOCCLASS_API ac_status ac_mode_parse(const char* name, ac_mode* out);
ASSOCCLASS_API const char* ac_mode_name(ac_mode mode);

/* ---- lexicon ---------------------------------------------------------- */

/* Either path may be NULL to use the bundled list. */
ASSOCCLASS_API ac_status ac_lexicon_load(const char* stopwords_path, const char* exceptions_path,
                                         ac_lexicon** out);
ASSOCCLASS_API void ac_lexicon_free(ac_lexicon* lexicon);
ASSOCCLASS_API const char* ac_lexicon_stopwords_digest(const ac_lexicon* lexicon);
ASSOCCLASS_API const char* ac_lexicon_exceptions_digest(const ac_lexicon* lexicon);

/* ---- training ---------------------------------------------------------- */

typedef struct ac_train_options {
  double min_support;        /* fraction in (0, 1] */
  double min_confidence;     /* fraction in (0, 1], recorded in the model */
  size_t max_words;          /* words kept per document, >= 2 */
  size_t min_training_words; /* documents with fewer words are not trained on */
  unsigned threads;          /* support counting workers, 0 = hardware concurrency */
} ac_train_options;

typedef struct ac_train_report {
  size_t documents_scanned;
  size_t documents_used;
  size_t documents_excluded;
} ac_train_report;

/* 0.02 / 0.75 / 13 / 13 / 1 */
ASSOCCLASS_API void ac_train_options_init(ac_train_options* options);

/* lexicon and report may be NULL. */
ASSOCCLASS_API ac_status ac_model_train(const char* corpus_root, const ac_lexicon* lexicon,
                                        const ac_train_options* options, ac_model** out,
                                        ac_train_report* report);

/* ---- model ------------------------------------------------------------- */

ASSOCCLASS_API ac_status ac_model_load(const char* path, ac_model** out);
ASSOCCLASS_API ac_status ac_model_save(const ac_model* model, const char* path);
ASSOCCLASS_API void ac_model_free(ac_model* model);

ASSOCCLASS_API size_t ac_model_class_count(const ac_model* model);
ASSOCCLASS_API const char* ac_model_class_name(const ac_model* model, size_t cls);
ASSOCCLASS_API double ac_model_prior(const ac_model* model, size_t cls);
ASSOCCLASS_API size_t ac_model_doc_count(const ac_model* model, size_t cls);
ASSOCCLASS_API size_t ac_model_wordset_count(const ac_model* model, size_t cls);
ASSOCCLASS_API size_t ac_model_vocabulary_size(const ac_model* model);
ASSOCCLASS_API size_t ac_model_max_words(const ac_model* model);
ASSOCCLASS_API double ac_model_min_support(const ac_model* model);
ASSOCCLASS_API double ac_model_min_confidence(const ac_model* model);
ASSOCCLASS_API ac_mode ac_model_default_mode(const ac_model* model);
ASSOCCLASS_API const char* ac_model_stopwords_digest(const ac_model* model);
ASSOCCLASS_API const char* ac_model_exceptions_digest(const ac_model* model);

ASSOCCLASS_API size_t ac_model_feature_count(const ac_model* model);
ASSOCCLASS_API size_t ac_model_feature_size(const ac_model* model, size_t feature);
ASSOCCLASS_API const char* ac_model_feature_item(const ac_model* model, size_t feature,
                                                 size_t item);
ASSOCCLASS_API size_t ac_model_feature_class_count(const ac_model* model, size_t feature,
                                                   size_t cls);
ASSOCCLASS_API double ac_model_feature_probability(const ac_model* model, size_t feature,
                                                   size_t cls);
ASSOCCLASS_API size_t ac_model_feature_owner(const ac_model* model, size_t feature);

/* ---- classification ---------------------------------------------------- */

/* lexicon may be NULL for the bundled lists. text need not be terminated. */
ASSOCCLASS_API ac_status ac_classify_text(const ac_model* model, const ac_lexicon* lexicon,
                                          const char* text, size_t length, ac_mode mode,
                                          ac_result** out);
ASSOCCLASS_API void ac_result_free(ac_result* result);

ASSOCCLASS_API ac_mode ac_result_mode(const ac_result* result);
ASSOCCLASS_API size_t ac_result_class_count(const ac_result* result);
ASSOCCLASS_API size_t ac_result_predicted(const ac_result* result);
ASSOCCLASS_API const char* ac_result_predicted_label(const ac_result* result);
ASSOCCLASS_API int ac_result_tie(const ac_result* result);
ASSOCCLASS_API int ac_result_matched_any(const ac_result* result);
/* log10 score */
ASSOCCLASS_API double ac_result_score(const ac_result* result, size_t cls);
ASSOCCLASS_API size_t ac_result_factor_count(const ac_result* result);
/* Returns 1 and writes the linear score when at most 15 factors were used. */
ASSOCCLASS_API int ac_result_linear_score(const ac_result* result, size_t cls, double* out);

ASSOCCLASS_API size_t ac_result_word_count(const ac_result* result);
ASSOCCLASS_API const char* ac_result_word(const ac_result* result, size_t index);

ASSOCCLASS_API size_t ac_result_match_count(const ac_result* result);
ASSOCCLASS_API size_t ac_result_match_feature(const ac_result* result, size_t match);
ASSOCCLASS_API size_t ac_result_match_intersection_size(const ac_result* result, size_t match);
ASSOCCLASS_API const char* ac_result_match_intersection_item(const ac_result* result,
                                                             size_t match, size_t item);
ASSOCCLASS_API double ac_result_match_fraction(const ac_result* result, size_t match);

/* ---- mining ------------------------------------------------------------ */

ASSOCCLASS_API ac_status ac_transactions_load(const char* path, ac_transactions** out);
ASSOCCLASS_API ac_status ac_transactions_parse(const char* text, size_t length,
                                               ac_transactions** out);
ASSOCCLASS_API void ac_transactions_free(ac_transactions* transactions);
ASSOCCLASS_API size_t ac_transactions_count(const ac_transactions* transactions);

ASSOCCLASS_API ac_status ac_mine_count(const ac_transactions* transactions, size_t min_count,
                                       unsigned threads, ac_mining** out);
ASSOCCLASS_API ac_status ac_mine_fraction(const ac_transactions* transactions,
                                          double min_support, unsigned threads,
                                          ac_mining** out);
ASSOCCLASS_API void ac_mining_free(ac_mining* mining);

ASSOCCLASS_API size_t ac_mining_min_support_count(const ac_mining* mining);
ASSOCCLASS_API size_t ac_mining_total_transactions(const ac_mining* mining);
/* Number of non-empty levels; level k (1-based) holds k-itemsets. */
ASSOCCLASS_API size_t ac_mining_level_count(const ac_mining* mining);
ASSOCCLASS_API size_t ac_mining_level_size(const ac_mining* mining, size_t k);
ASSOCCLASS_API const char* ac_mining_item(const ac_mining* mining, size_t k, size_t index,
                                          size_t item);
ASSOCCLASS_API size_t ac_mining_support(const ac_mining* mining, size_t k, size_t index);
/* Number of candidate levels generated (C_1 ... C_n), and |C_k| after pruning. */
ASSOCCLASS_API size_t ac_mining_candidate_level_count(const ac_mining* mining);
ASSOCCLASS_API size_t ac_mining_candidate_count(const ac_mining* mining, size_t k);

ASSOCCLASS_API ac_status ac_rules_generate(const ac_mining* mining, double min_confidence,
                                           ac_rules** out);
ASSOCCLASS_API void ac_rules_free(ac_rules* rules);
ASSOCCLASS_API size_t ac_rules_count(const ac_rules* rules);
ASSOCCLASS_API size_t ac_rule_antecedent_size(const ac_rules* rules, size_t rule);
ASSOCCLASS_API const char* ac_rule_antecedent_item(const ac_rules* rules, size_t rule,
                                                   size_t item);
ASSOCCLASS_API size_t ac_rule_consequent_size(const ac_rules* rules, size_t rule);
ASSOCCLASS_API const char* ac_rule_consequent_item(const ac_rules* rules, size_t rule,
                                                   size_t item);
ASSOCCLASS_API size_t ac_rule_support_count(const ac_rules* rules, size_t rule);
ASSOCCLASS_API double ac_rule_support(const ac_rules* rules, size_t rule);
ASSOCCLASS_API double ac_rule_confidence(const ac_rules* rules, size_t rule);

#ifdef __cplusplus
}
#endif

#endif /* ASSOCCLASS_ASSOCCLASS_H */
