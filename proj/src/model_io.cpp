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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "assocclass/corpus.hpp"
#include "assocclass/error.hpp"
#include "assocclass/model.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace assocclass {

namespace {

constexpr double kStoredValueTolerance = 1e-12;

std::string decimal(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::Parse, "model field '" + field + "': " + what);
}

const json& require(const json& object, const char* key, const std::string& path) {
  if (!object.is_object()) fail(path, "expected object");
  const auto it = object.find(key);
  if (it == object.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::size_t as_count(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) fail(path, "expected non-negative integer");
  return value.get<std::size_t>();
}

double as_double(const json& value, const std::string& path) {
  if (!value.is_number()) fail(path, "expected number");
  return value.get<double>();
}

std::string as_string(const json& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected string");
  return value.get<std::string>();
}

double as_decimal(const json& value, const std::string& path) {
  const auto text = as_string(value, path);
  double out = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || end != text.data() + text.size())
    fail(path, "malformed decimal '" + text + "'");
  return out;
}

/// Reads an object keyed by class name into a vector aligned with `classes`.
template <typename T, typename Read>
std::vector<T> per_class(const json& object, const std::vector<std::string>& classes,
                         const std::string& path, Read read) {
  if (!object.is_object()) fail(path, "expected object keyed by class");
  if (object.size() != classes.size()) fail(path, "expected one entry per class");
  std::vector<T> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(read(require(object, c.c_str(), path), path + "." + c));
  return out;
}

void check_close(double stored, double derived, const std::string& path) {
  if (std::fabs(stored - derived) > kStoredValueTolerance)
    fail(path, "stored value " + decimal(stored) + " disagrees with derived " + decimal(derived));
}

json per_class_json(const std::vector<std::string>& classes, auto&& value_of) {
  json object = json::object();
  for (std::size_t c = 0; c < classes.size(); ++c) object[classes[c]] = value_of(c);
  return object;
}

}  // namespace

std::string serialize_model(const TrainedModel& model) {
  const auto& classes = model.classes;
  json doc;
  doc["schema_version"] = kModelSchemaVersion;
  doc["classes"] = classes;
  doc["priors"] = per_class_json(classes, [&](std::size_t c) { return decimal(model.prior[c]); });
  doc["doc_count"] = per_class_json(classes, [&](std::size_t c) { return model.doc_count[c]; });
  doc["wordset_count"] =
      per_class_json(classes, [&](std::size_t c) { return model.wordset_count[c]; });
  doc["vocabulary_size"] = model.vocabulary_size;
  doc["config"] = {
      {"min_support", model.config.min_support},
      {"min_confidence", model.config.min_confidence},
      {"max_words", model.config.max_words},
      {"min_training_words", model.config.min_training_words},
      {"mode", std::string(to_string(model.config.mode))},
      {"stopwords_digest", model.config.stopwords_digest},
      {"exceptions_digest", model.config.exceptions_digest},
  };
  json features = json::array();
  for (const auto& f : model.features) {
    features.push_back({
        {"items", f.itemset.items()},
        {"per_class_count",
         per_class_json(classes, [&](std::size_t c) { return f.per_class_count[c]; })},
        {"owner", classes[f.owner]},
        {"per_class_prob",
         per_class_json(classes, [&](std::size_t c) { return decimal(f.per_class_prob[c]); })},
    });
  }
  doc["features"] = std::move(features);
  return doc.dump(2) + "\n";
}

TrainedModel parse_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    const auto offset = std::min<std::size_t>(e.byte, json_text.size());
    std::size_t line = 1;
    for (std::size_t i = 0; i + 1 < offset; ++i)
      if (json_text[i] == '\n') ++line;
    throw Error(ErrorCode::Parse, "malformed model file at line " + std::to_string(line) + ": " +
                                      e.what());
  }
  if (!doc.is_object()) fail("<root>", "expected object");

  const auto& version = require(doc, "schema_version", "");
  if (!version.is_number_integer()) fail("schema_version", "expected integer");
  if (version.get<long long>() != kModelSchemaVersion)
    throw Error(ErrorCode::UnsupportedVersion,
                "unsupported model version: " + std::to_string(version.get<long long>()));

  const auto& classes_json = require(doc, "classes", "");
  if (!classes_json.is_array()) fail("classes", "expected array");
  std::vector<std::string> classes;
  for (std::size_t i = 0; i < classes_json.size(); ++i)
    classes.push_back(as_string(classes_json[i], "classes[" + std::to_string(i) + "]"));

  const auto doc_count = per_class<std::size_t>(require(doc, "doc_count", ""), classes,
                                                "doc_count", as_count);
  const auto priors =
      per_class<double>(require(doc, "priors", ""), classes, "priors", as_decimal);
  const auto wordset_count = per_class<std::size_t>(require(doc, "wordset_count", ""), classes,
                                                    "wordset_count", as_count);
  const auto vocabulary_size = as_count(require(doc, "vocabulary_size", ""), "vocabulary_size");

  const auto& cfg = require(doc, "config", "");
  ModelConfig config;
  config.min_support = as_double(require(cfg, "min_support", "config"), "config.min_support");
  config.min_confidence =
      as_double(require(cfg, "min_confidence", "config"), "config.min_confidence");
  config.max_words = as_count(require(cfg, "max_words", "config"), "config.max_words");
  config.min_training_words =
      as_count(require(cfg, "min_training_words", "config"), "config.min_training_words");
  try {
    config.mode = parse_scoring_mode(as_string(require(cfg, "mode", "config"), "config.mode"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    fail("config.mode", e.what());
  }
  config.stopwords_digest =
      as_string(require(cfg, "stopwords_digest", "config"), "config.stopwords_digest");
  config.exceptions_digest =
      as_string(require(cfg, "exceptions_digest", "config"), "config.exceptions_digest");

  const auto& features_json = require(doc, "features", "");
  if (!features_json.is_array()) fail("features", "expected array");
  std::vector<FeatureCounts> features;
  std::vector<std::string> owners;
  for (std::size_t i = 0; i < features_json.size(); ++i) {
    const auto path = "features[" + std::to_string(i) + "]";
    const auto& f = features_json[i];
    const auto& items_json = require(f, "items", path);
    if (!items_json.is_array()) fail(path + ".items", "expected array");
    std::vector<std::string> items;
    for (std::size_t j = 0; j < items_json.size(); ++j)
      items.push_back(as_string(items_json[j], path + ".items[" + std::to_string(j) + "]"));
    const auto n_items = items.size();
    Itemset itemset(std::move(items));
    if (itemset.size() != n_items) fail(path + ".items", "duplicate item");
    features.push_back({std::move(itemset),
                        per_class<std::size_t>(require(f, "per_class_count", path), classes,
                                               path + ".per_class_count", as_count)});
    owners.push_back(as_string(require(f, "owner", path), path + ".owner"));
  }

  TrainedModel model;
  try {
    model = assemble_model(classes, doc_count, features, config);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, std::string("inconsistent model: ") + e.what());
  }

  // Stored derived values must agree with what the counts imply.
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto ci = model.class_index(classes[c]);
    check_close(priors[c], model.prior[ci], "priors." + classes[c]);
    if (wordset_count[c] != model.wordset_count[ci])
      fail("wordset_count." + classes[c], "does not match feature owners");
  }
  if (vocabulary_size != model.vocabulary_size)
    fail("vocabulary_size", "does not match the number of features");
  for (std::size_t i = 0; i < features_json.size(); ++i) {
    const auto path = "features[" + std::to_string(i) + "]";
    const Itemset& key = features[i].itemset;
    const auto it = std::lower_bound(
        model.features.begin(), model.features.end(), key,
        [](const WordSetFeature& f, const Itemset& k) { return f.itemset < k; });
    if (model.classes[it->owner] != owners[i])
      fail(path + ".owner", "'" + owners[i] + "' is not the class with the largest count");
    const auto probs = features_json[i].find("per_class_prob");
    if (probs == features_json[i].end()) continue;
    const auto stored = per_class<double>(*probs, classes, path + ".per_class_prob", as_decimal);
    for (std::size_t c = 0; c < classes.size(); ++c)
      check_close(stored[c], it->per_class_prob[model.class_index(classes[c])],
                  path + ".per_class_prob." + classes[c]);
  }
  return model;
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
  const auto text = serialize_model(model);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write model file: " + path.string());
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "cannot write model file: " + path.string());
}

TrainedModel load_model(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw Error(ErrorCode::NotFound, "model file not found: " + path.string());
  return parse_model(read_text_file(path));
}

}  // namespace assocclass
