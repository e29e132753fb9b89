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

// assocclass: train, classify, mine and inspect from the command line.
// Exit codes: 0 success, 1 usage or configuration error, 2 data error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "assocclass/assocclass.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Lexicon = std::unique_ptr<ac_lexicon, Deleter<ac_lexicon, ac_lexicon_free>>;
using Model = std::unique_ptr<ac_model, Deleter<ac_model, ac_model_free>>;
using Result = std::unique_ptr<ac_result, Deleter<ac_result, ac_result_free>>;
using Transactions =
    std::unique_ptr<ac_transactions, Deleter<ac_transactions, ac_transactions_free>>;
using Mining = std::unique_ptr<ac_mining, Deleter<ac_mining, ac_mining_free>>;
using Rules = std::unique_ptr<ac_rules, Deleter<ac_rules, ac_rules_free>>;

/// Thrown to unwind with an exit code after the message has been printed.
struct Exit {
  int code;
};

void check(ac_status status, const std::string& context) {
  if (status == AC_OK) return;
  std::cerr << "assocclass: " << context << ": " << ac_last_error() << "\n";
  throw Exit{status == AC_ERR_INVALID_ARGUMENT ? kExitUsage : kExitData};
}

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

std::string join_items(size_t n, auto&& item_at, const char* sep) {
  std::string out;
  for (size_t i = 0; i < n; ++i) {
    if (i) out += sep;
    out += item_at(i);
  }
  return out;
}

std::vector<std::string> item_vector(size_t n, auto&& item_at) {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) out.emplace_back(item_at(i));
  return out;
}

Lexicon open_lexicon(const std::string& stopwords, const std::string& exceptions) {
  ac_lexicon* raw = nullptr;
  check(ac_lexicon_load(stopwords.empty() ? nullptr : stopwords.c_str(),
                        exceptions.empty() ? nullptr : exceptions.c_str(), &raw),
        "loading word lists");
  return Lexicon(raw);
}

Model open_model(const std::string& path) {
  ac_model* raw = nullptr;
  check(ac_model_load(path.c_str(), &raw), "loading model " + path);
  return Model(raw);
}

// ---- train

struct TrainArgs {
  std::string corpus;
  std::string out;
  std::string stopwords;
  std::string exceptions;
  ac_train_options options{};
  std::optional<size_t> min_words;
};

int run_train(TrainArgs& args) {
  if (args.min_words)
    args.options.min_training_words = *args.min_words;
  else
    args.options.min_training_words = args.options.max_words;

  const auto lexicon = open_lexicon(args.stopwords, args.exceptions);
  ac_model* raw = nullptr;
  ac_train_report report{};
  check(ac_model_train(args.corpus.c_str(), lexicon.get(), &args.options, &raw, &report),
        "training on " + args.corpus);
  const Model model(raw);
  check(ac_model_save(model.get(), args.out.c_str()), "writing " + args.out);

  std::cout << "documents: scanned=" << report.documents_scanned
            << " used=" << report.documents_used << " excluded=" << report.documents_excluded
            << "\n";
  const size_t n_classes = ac_model_class_count(model.get());
  std::string tally = "vocabulary=" + std::to_string(ac_model_vocabulary_size(model.get()));
  for (size_t c = 0; c < n_classes; ++c) {
    const std::string name = ac_model_class_name(model.get(), c);
    std::cout << "class " << name << ": documents=" << ac_model_doc_count(model.get(), c)
              << " prior=" << fmt("%.6f", ac_model_prior(model.get(), c))
              << " wordsets=" << ac_model_wordset_count(model.get(), c) << "\n";
    tally += ", " + name + "=" + std::to_string(ac_model_wordset_count(model.get(), c));
  }
  std::cout << tally << "\n";
  std::cout << "model written to " << args.out << "\n";
  return kExitOk;
}

// ---- classify

struct ClassifyArgs {
  std::string model;
  std::string mode;
  std::string stopwords;
  std::string exceptions;
  bool json = false;
  std::vector<std::string> inputs;
};

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "assocclass: cannot read input " << path << "\n";
    throw Exit{kExitData};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json result_json(const ac_model* model, const ac_result* r, const std::string& input) {
  const size_t n_classes = ac_result_class_count(r);
  json scores = json::object();
  json linear = json::object();
  bool has_linear = true;
  for (size_t c = 0; c < n_classes; ++c) {
    scores[ac_model_class_name(model, c)] = ac_result_score(r, c);
    double value = 0.0;
    if (ac_result_linear_score(r, c, &value))
      linear[ac_model_class_name(model, c)] = value;
    else
      has_linear = false;
  }
  json matches = json::array();
  for (size_t m = 0; m < ac_result_match_count(r); ++m) {
    const size_t f = ac_result_match_feature(r, m);
    matches.push_back({
        {"feature", item_vector(ac_model_feature_size(model, f),
                                [&](size_t i) { return ac_model_feature_item(model, f, i); })},
        {"intersection",
         item_vector(ac_result_match_intersection_size(r, m),
                     [&](size_t i) { return ac_result_match_intersection_item(r, m, i); })},
        {"fraction", ac_result_match_fraction(r, m)},
    });
  }
  json out = {
      {"input", input},
      {"predicted", ac_result_predicted_label(r)},
      {"mode", ac_mode_name(ac_result_mode(r))},
      {"scores_log10", scores},
      {"linear_scores", has_linear ? linear : json(nullptr)},
      {"factor_count", ac_result_factor_count(r)},
      {"matched_any", ac_result_matched_any(r) != 0},
      {"tie", ac_result_tie(r) != 0},
      {"frequent_words", item_vector(ac_result_word_count(r),
                                     [&](size_t i) { return ac_result_word(r, i); })},
      {"matches", matches},
  };
  return out;
}

std::string result_line(const ac_model* model, const ac_result* r, const std::string& input) {
  const size_t n_classes = ac_result_class_count(r);
  std::string line = input + "\t" + ac_mode_name(ac_result_mode(r)) + "\tlog10:";
  for (size_t c = 0; c < n_classes; ++c)
    line += std::string(c ? " " : "") + ac_model_class_name(model, c) + "=" +
            fmt("%.6f", ac_result_score(r, c));
  double value = 0.0;
  if (n_classes && ac_result_linear_score(r, 0, &value)) {
    line += "\tlinear:";
    for (size_t c = 0; c < n_classes; ++c) {
      ac_result_linear_score(r, c, &value);
      line += std::string(c ? " " : "") + ac_model_class_name(model, c) + "=" + fmt("%.6g", value);
    }
  }
  line += "\tmatches=" + std::to_string(ac_result_match_count(r));
  line += ac_result_matched_any(r) ? "\tmatched" : "\tprior-only";
  if (ac_result_tie(r)) line += "\ttie";
  line += "\t";
  line += ac_result_predicted_label(r);
  return line;
}

int run_classify(const ClassifyArgs& args) {
  const auto model = open_model(args.model);
  const auto lexicon = open_lexicon(args.stopwords, args.exceptions);

  const std::string model_digest = ac_model_stopwords_digest(model.get());
  if (!model_digest.empty() && model_digest != ac_lexicon_stopwords_digest(lexicon.get()))
    std::cerr << "assocclass: warning: stop-word list differs from the one used in training\n";

  ac_mode mode = ac_model_default_mode(model.get());
  if (!args.mode.empty()) check(ac_mode_parse(args.mode.c_str(), &mode), "--mode");

  json results = json::array();
  for (const auto& input : args.inputs) {
    const auto text = read_input(input);
    ac_result* raw = nullptr;
    check(ac_classify_text(model.get(), lexicon.get(), text.data(), text.size(), mode, &raw),
          "classifying " + input);
    const Result result(raw);
    if (args.json)
      results.push_back(result_json(model.get(), result.get(), input));
    else
      std::cout << result_line(model.get(), result.get(), input) << "\n";
  }
  if (args.json) std::cout << json{{"results", results}}.dump(2) << "\n";
  return kExitOk;
}

// ---- mine

struct MineArgs {
  std::string transactions;
  std::optional<size_t> min_count;
  std::optional<double> min_support;
  double min_confidence = 0.75;
  unsigned threads = 1;
};

int run_mine(const MineArgs& args) {
  ac_transactions* raw_tx = nullptr;
  check(ac_transactions_load(args.transactions.c_str(), &raw_tx), "reading " + args.transactions);
  const Transactions tx(raw_tx);

  ac_mining* raw_mining = nullptr;
  if (args.min_count)
    check(ac_mine_count(tx.get(), *args.min_count, args.threads, &raw_mining), "mining");
  else
    check(ac_mine_fraction(tx.get(), *args.min_support, args.threads, &raw_mining), "mining");
  const Mining mining(raw_mining);
  const auto* m = mining.get();

  ac_rules* raw_rules = nullptr;
  check(ac_rules_generate(m, args.min_confidence, &raw_rules), "generating rules");
  const Rules rules(raw_rules);

  std::cout << "# transactions=" << ac_mining_total_transactions(m)
            << " min_support_count=" << ac_mining_min_support_count(m) << "\n";
  const size_t attempted = ac_mining_candidate_level_count(m);
  for (size_t k = 1; k <= attempted; ++k) {
    const size_t frequent = ac_mining_level_size(m, k);
    std::cout << "# level " << k << ": candidates=" << ac_mining_candidate_count(m, k)
              << " frequent=" << frequent << "\n";
    for (size_t i = 0; i < frequent; ++i)
      std::cout << join_items(k, [&](size_t j) { return ac_mining_item(m, k, i, j); }, ",")
                << "\t" << ac_mining_support(m, k, i) << "\n";
  }

  const auto* r = rules.get();
  std::cout << "# rules min_confidence=" << fmt("%g", args.min_confidence)
            << " count=" << ac_rules_count(r) << "\n";
  for (size_t i = 0; i < ac_rules_count(r); ++i) {
    std::cout << join_items(ac_rule_antecedent_size(r, i),
                            [&](size_t j) { return ac_rule_antecedent_item(r, i, j); }, ",")
              << " => "
              << join_items(ac_rule_consequent_size(r, i),
                            [&](size_t j) { return ac_rule_consequent_item(r, i, j); }, ",")
              << "\tsupport=" << fmt("%.6g", ac_rule_support(r, i))
              << "\tconfidence=" << fmt("%.6g", ac_rule_confidence(r, i))
              << "\tcount=" << ac_rule_support_count(r, i) << "\n";
  }
  return kExitOk;
}

// ---- inspect

int run_inspect(const std::string& path) {
  const auto model = open_model(path);
  const auto* m = model.get();
  const size_t n_classes = ac_model_class_count(m);

  std::cout << "# vocabulary=" << ac_model_vocabulary_size(m)
            << " min_support=" << fmt("%g", ac_model_min_support(m))
            << " min_confidence=" << fmt("%g", ac_model_min_confidence(m))
            << " max_words=" << ac_model_max_words(m)
            << " mode=" << ac_mode_name(ac_model_default_mode(m)) << "\n";
  for (size_t c = 0; c < n_classes; ++c)
    std::cout << "# class " << ac_model_class_name(m, c)
              << ": documents=" << ac_model_doc_count(m, c)
              << " prior=" << fmt("%.6f", ac_model_prior(m, c))
              << " wordsets=" << ac_model_wordset_count(m, c) << "\n";

  std::vector<size_t> order(ac_model_feature_count(m));
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const size_t oa = ac_model_feature_owner(m, a);
    const size_t ob = ac_model_feature_owner(m, b);
    if (oa != ob) return oa < ob;
    return ac_model_feature_class_count(m, a, oa) > ac_model_feature_class_count(m, b, ob);
  });

  for (const size_t f : order) {
    std::string counts, probs;
    for (size_t c = 0; c < n_classes; ++c) {
      const std::string name = ac_model_class_name(m, c);
      counts += (c ? " " : "") + name + ":" + std::to_string(ac_model_feature_class_count(m, f, c));
      probs += (c ? " " : "") + name + ":" + fmt("%.6g", ac_model_feature_probability(m, f, c));
    }
    std::cout << join_items(ac_model_feature_size(m, f),
                            [&](size_t i) { return ac_model_feature_item(m, f, i); }, ", ")
              << " | " << counts << " | " << probs
              << " | owner=" << ac_model_class_name(m, ac_model_feature_owner(m, f)) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Associated word-set text classification"};
  app.require_subcommand(1);

  TrainArgs train;
  ac_train_options_init(&train.options);
  auto* train_cmd = app.add_subcommand("train", "Train a model from a labeled corpus directory");
  train_cmd->add_option("--corpus", train.corpus, "Corpus root (one subdirectory per class)")
      ->required();
  train_cmd->add_option("--out", train.out, "Model file to write")->required();
  train_cmd->add_option("--min-support", train.options.min_support, "Minimum support fraction")
      ->capture_default_str();
  train_cmd->add_option("--min-confidence", train.options.min_confidence,
                        "Minimum confidence (recorded in the model)")
      ->capture_default_str();
  train_cmd->add_option("--max-words", train.options.max_words, "Frequent words kept per document")
      ->capture_default_str();
  train_cmd->add_option("--min-words", train.min_words,
                        "Training floor on frequent words per document (default: --max-words)");
  train_cmd->add_option("--stopwords", train.stopwords, "Stop-word file (default: bundled)");
  train_cmd->add_option("--exceptions", train.exceptions,
                        "Plural-exception file (default: bundled)");
  train_cmd->add_option("--threads", train.options.threads, "Support counting threads (0 = auto)")
      ->capture_default_str();

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand("classify", "Classify documents with a trained model");
  classify_cmd->add_option("--model", classify.model, "Model file")->required();
  classify_cmd->add_option("--mode", classify.mode, "subset or weighted (default: model's)")
      ->check(CLI::IsMember({"subset", "weighted"}));
  classify_cmd->add_flag("--json", classify.json, "Machine-readable output");
  classify_cmd->add_option("--stopwords", classify.stopwords, "Stop-word file (default: bundled)");
  classify_cmd->add_option("--exceptions", classify.exceptions,
                           "Plural-exception file (default: bundled)");
  classify_cmd->add_option("inputs", classify.inputs, "Text files to classify")->required();

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Mine frequent itemsets and rules");
  mine_cmd->add_option("--transactions", mine.transactions, "Transaction file")->required();
  auto* count_opt = mine_cmd->add_option("--min-count", mine.min_count, "Minimum support count");
  auto* support_opt =
      mine_cmd->add_option("--min-support", mine.min_support, "Minimum support fraction");
  count_opt->excludes(support_opt);
  support_opt->excludes(count_opt);
  mine_cmd->add_option("--min-confidence", mine.min_confidence, "Minimum rule confidence")
      ->capture_default_str();
  mine_cmd->add_option("--threads", mine.threads, "Support counting threads (0 = auto)")
      ->capture_default_str();

  std::string inspect_model;
  auto* inspect_cmd = app.add_subcommand("inspect", "Print a model's word-set table");
  inspect_cmd->add_option("--model", inspect_model, "Model file")->required();

  try {
    app.parse(argc, argv);
    if (mine_cmd->parsed() && !mine.min_count && !mine.min_support)
      throw CLI::RequiredError("--min-count or --min-support");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (train_cmd->parsed()) return run_train(train);
    if (classify_cmd->parsed()) return run_classify(classify);
    if (mine_cmd->parsed()) return run_mine(mine);
    if (inspect_cmd->parsed()) return run_inspect(inspect_model);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
