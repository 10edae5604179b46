#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "geps/common.hpp"

namespace geps::corpus {

enum class EventKind { QueryIssued, Click, View, Purchase };

const char* event_kind_name(EventKind k);

struct EventRecord {
  std::string session;
  int64_t ts = 0;
  EventKind kind = EventKind::QueryIssued;
  std::string query;               // QueryIssued, Click
  std::vector<int32_t> terms;      // QueryIssued
  std::string product;             // Click, View, Purchase
  std::vector<std::string> serp;   // QueryIssued: products shown, in rank order
  std::string order;               // Purchase
};

struct Query {
  std::string id;
  std::vector<int32_t> terms;
};

struct Product {
  std::string id;
  std::vector<int32_t> description;
  double price = -1.0;  // < 0 means unknown
  bool has_price() const { return price >= 0.0; }
};

struct Impression {
  std::string query_id;
  std::vector<std::string> serp;
  std::set<std::string> clicked;
  std::set<std::string> purchased;
  std::string session;
  int64_t ts = 0;
};

struct Dataset {
  std::map<std::string, Query> queries;
  std::map<std::string, Product> products;
  std::vector<EventRecord> events;
  std::vector<Impression> impressions;      // filled by build_impressions
  std::vector<std::string> term_of_id;
  std::unordered_map<std::string, int32_t> vocab;
  // Per event: impression index a Click/Purchase was attributed to, -1 if none.
  // Same length as `events` once build_impressions has run.
  std::vector<int32_t> event_impression;

  int32_t intern_term(const std::string& term);
  // Returns the existing id or -1; never extends the vocabulary.
  int32_t lookup_term(const std::string& term) const;
  const std::string& term(int32_t id) const;
};

enum class LogSchema { Jsonl, Cikm };

struct LoadStats {
  size_t lines = 0;
  size_t malformed = 0;
  size_t dropped_textless_queries = 0;
  std::vector<size_t> malformed_line_numbers;  // 1-based, capped at 20
};

// Native schema: `path` is either an events .jsonl file or a directory holding
// events.jsonl plus an optional products.jsonl catalog. The CIKM schema reads
// the contest CSV directory layout and converts it to the same Dataset.
Dataset load_logs(const std::string& path, LogSchema schema, LoadStats* stats = nullptr);

// Writes events.jsonl + products.jsonl into `dir`. save/load round-trips
// byte-identically for datasets produced by this codebase.
void save_logs(const Dataset& d, const std::string& dir);
std::string events_to_jsonl(const Dataset& d);
std::string products_to_jsonl(const Dataset& d);

// Internal: CIKM CSV directory -> Dataset (documented in README).
Dataset load_cikm_dir(const std::string& dir, LoadStats* stats);

struct SynthConfig {
  int num_topics = 20;
  int queries_per_topic = 100;
  int products_per_topic = 50;
  int vocab_size = 3000;
  int sessions = 2500;
  double zipf_exponent = 1.1;
  double click_noise = 0.1;
  uint64_t seed = 1;
  void validate() const;
};

struct SynthResult {
  Dataset dataset;
  // Planted topical truth, the hidden qrels sidecar: query -> same-topic products.
  std::map<std::string, std::vector<std::string>> topical;
  std::map<std::string, int> query_topic;
  std::map<std::string, int> product_topic;

  std::string topical_qrels_text() const;  // "qid 0 pid 1" lines
};

SynthResult synthesize(const SynthConfig& cfg);

struct BuildStats {
  size_t clicks_outside_serp = 0;
  size_t unattributed_clicks = 0;
  size_t unattributed_purchases = 0;
};

// One impression per QueryIssued event that carries a SERP; clicked/purchased
// sets filled from later events of the same session. Impressions come out in
// timestamp order. Idempotent.
const std::vector<Impression>& build_impressions(Dataset& d, BuildStats* stats = nullptr);

enum class SplitMode { Original, Chronological };

struct Split {
  SplitMode mode = SplitMode::Original;
  std::vector<int32_t> train;  // impression indices
  std::vector<int32_t> test;
};

// For `test_fraction` of multi-query sessions, the session's final impression
// goes to test. Selection is a seeded uniform draw over those sessions.
Split split_original(const Dataset& d, double test_fraction = 0.3, uint64_t seed = 1);

// Impressions strictly before `cutoff_ts` train, the rest test.
Split split_chronological(const Dataset& d, int64_t cutoff_ts);

std::string split_to_json(const Split& s);
Split split_from_json(const std::string& text);

// Descriptions extended with the terms of train queries whose impressions
// clicked the product (unique queries, appended in ascending query id order).
// Covers every product; untouched ones map to their original description.
std::map<std::string, std::vector<int32_t>> augment_documents(const Dataset& d, const Split& s);

// Events that a model trained on `split` may consume: everything up to the
// last train impression's timestamp. Used for view/order meta-paths and for
// feature counting, so test-side behavior never leaks into training inputs.
int64_t train_horizon_ts(const Dataset& d, const Split& s);

// Action-graded qrels over the given impressions: 2 purchased, 1 clicked,
// 0 shown only. Keys are impression ids ("i<index>"), one eval unit per
// impression.
std::map<std::pair<std::string, std::string>, int> action_qrels(const Dataset& d,
                                                                const std::vector<int32_t>& imps);
std::string impression_qid(int32_t index);

}  // namespace geps::corpus
