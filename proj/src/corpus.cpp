#include "geps/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace geps::corpus {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::QueryIssued: return "query";
    case EventKind::Click: return "click";
    case EventKind::View: return "view";
    case EventKind::Purchase: return "purchase";
  }
  return "?";
}

int32_t Dataset::intern_term(const std::string& term) {
  auto it = vocab.find(term);
  if (it != vocab.end()) return it->second;
  int32_t id = static_cast<int32_t>(term_of_id.size());
  term_of_id.push_back(term);
  vocab.emplace(term, id);
  return id;
}

int32_t Dataset::lookup_term(const std::string& term) const {
  auto it = vocab.find(term);
  return it == vocab.end() ? -1 : it->second;
}

const std::string& Dataset::term(int32_t id) const { return term_of_id.at(id); }

// ---------------------------------------------------------------------------
// JSON Lines log format
// ---------------------------------------------------------------------------

namespace {

std::string id_from_json(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<int64_t>());
  throw ValidationError("id field must be string or integer");
}

void ensure_product(Dataset& d, const std::string& pid) {
  auto it = d.products.find(pid);
  if (it == d.products.end()) d.products.emplace(pid, Product{pid, {}, -1.0});
}

bool parse_event_line(Dataset& d, const std::string& line, EventRecord* out, bool* textless) {
  nlohmann::json j = nlohmann::json::parse(line);
  if (!j.is_object()) return false;
  EventRecord e;
  std::string type = j.at("type").get<std::string>();
  e.session = id_from_json(j.at("session"));
  e.ts = j.at("ts").get<int64_t>();
  if (type == "query") {
    e.kind = EventKind::QueryIssued;
    e.query = id_from_json(j.at("query"));
    if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty()) {
      *textless = true;
      return true;  // well-formed, but dropped for lacking text
    }
    for (const auto& t : j["terms"]) {
      e.terms.push_back(d.intern_term(t.is_string() ? t.get<std::string>()
                                                    : std::to_string(t.get<int64_t>())));
    }
    if (j.contains("product")) {
      const auto& p = j["product"];
      if (p.is_array()) {
        for (const auto& x : p) e.serp.push_back(id_from_json(x));
      } else {
        e.serp.push_back(id_from_json(p));
      }
    }
  } else if (type == "click") {
    e.kind = EventKind::Click;
    e.query = id_from_json(j.at("query"));
    e.product = id_from_json(j.at("product"));
  } else if (type == "view") {
    e.kind = EventKind::View;
    e.product = id_from_json(j.at("product"));
  } else if (type == "purchase") {
    e.kind = EventKind::Purchase;
    e.order = id_from_json(j.at("order"));
    e.product = id_from_json(j.at("product"));
  } else {
    return false;
  }
  *out = std::move(e);
  return true;
}

void register_event(Dataset& d, EventRecord e) {
  if (e.kind == EventKind::QueryIssued) {
    auto it = d.queries.find(e.query);
    if (it == d.queries.end()) d.queries.emplace(e.query, Query{e.query, e.terms});
    for (const auto& pid : e.serp) ensure_product(d, pid);
  }
  if (!e.product.empty()) ensure_product(d, e.product);
  d.events.push_back(std::move(e));
}

void load_events_jsonl(Dataset& d, const std::string& path, LoadStats* stats) {
  std::istringstream in(read_file(path));
  std::string line;
  size_t lineno = 0;
  LoadStats local;
  LoadStats& st = stats ? *stats : local;
  std::vector<size_t>& bad = st.malformed_line_numbers;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ++st.lines;
    EventRecord e;
    bool textless = false;
    bool ok = false;
    try {
      ok = parse_event_line(d, line, &e, &textless);
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) {
      ++st.malformed;
      if (bad.size() < 20) bad.push_back(lineno);
      continue;
    }
    if (textless) {
      ++st.dropped_textless_queries;
      continue;
    }
    register_event(d, std::move(e));
  }
  if (st.lines > 0 && st.malformed * 100 > st.lines) {
    std::string where;
    for (size_t n : bad) where += (where.empty() ? "" : ",") + std::to_string(n);
    throw ValidationError("more than 1% malformed lines in " + path + " (lines " + where + ")");
  }
}

void load_products_jsonl(Dataset& d, const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const std::exception&) {
      throw ValidationError("malformed product line " + std::to_string(lineno) + " in " + path);
    }
    Product p;
    p.id = id_from_json(j.at("product"));
    if (j.contains("terms")) {
      for (const auto& t : j["terms"]) {
        p.description.push_back(d.intern_term(
            t.is_string() ? t.get<std::string>() : std::to_string(t.get<int64_t>())));
      }
    }
    if (j.contains("price")) p.price = j["price"].get<double>();
    d.products[p.id] = std::move(p);
  }
}

}  // namespace

Dataset load_logs(const std::string& path, LogSchema schema, LoadStats* stats) {
  if (schema == LogSchema::Cikm) return load_cikm_dir(path, stats);
  Dataset d;
  if (fs::is_directory(path)) {
    fs::path dir(path);
    fs::path catalog = dir / "products.jsonl";
    if (fs::exists(catalog)) load_products_jsonl(d, catalog.string());
    load_events_jsonl(d, (dir / "events.jsonl").string(), stats);
  } else {
    load_events_jsonl(d, path, stats);
  }
  return d;
}

std::string events_to_jsonl(const Dataset& d) {
  std::string out;
  for (const EventRecord& e : d.events) {
    ojson j;
    j["type"] = event_kind_name(e.kind);
    j["session"] = e.session;
    j["ts"] = e.ts;
    switch (e.kind) {
      case EventKind::QueryIssued: {
        j["query"] = e.query;
        ojson terms = ojson::array();
        for (int32_t t : e.terms) terms.push_back(d.term(t));
        j["terms"] = std::move(terms);
        if (!e.serp.empty()) j["product"] = e.serp;
        break;
      }
      case EventKind::Click:
        j["query"] = e.query;
        j["product"] = e.product;
        break;
      case EventKind::View:
        j["product"] = e.product;
        break;
      case EventKind::Purchase:
        j["product"] = e.product;
        j["order"] = e.order;
        break;
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string products_to_jsonl(const Dataset& d) {
  std::string out;
  for (const auto& [pid, p] : d.products) {
    ojson j;
    j["product"] = pid;
    ojson terms = ojson::array();
    for (int32_t t : p.description) terms.push_back(d.term(t));
    j["terms"] = std::move(terms);
    if (p.has_price()) j["price"] = p.price;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void save_logs(const Dataset& d, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  write_file_atomic((fs::path(dir) / "events.jsonl").string(), events_to_jsonl(d));
  write_file_atomic((fs::path(dir) / "products.jsonl").string(), products_to_jsonl(d));
}

// ---------------------------------------------------------------------------
// Synthetic click logs
// ---------------------------------------------------------------------------

void SynthConfig::validate() const {
  if (num_topics < 1 || queries_per_topic < 1 || products_per_topic < 1 || vocab_size < 1 ||
      sessions < 1)
    throw ValidationError("synth: all counts must be >= 1");
  if (zipf_exponent <= 0) throw ValidationError("synth: zipf_exponent must be positive");
  if (click_noise < 0 || click_noise > 0.5)
    throw ValidationError("synth: click_noise must lie in [0, 0.5]");
  int shared = std::max(1, vocab_size / 10);
  int per_topic = (vocab_size - shared) / (2 * num_topics);
  if (per_topic < 4)
    throw ValidationError("synth: vocab_size too small for num_topics (need >= 4 query and "
                          "4 description terms per topic)");
}

namespace {

// Cheap cumulative-weight sampler; alias tables live in the sgns module and
// this generator must not depend on it.
struct WeightedPicker {
  std::vector<double> cum;
  explicit WeightedPicker(const std::vector<double>& w) {
    cum.resize(w.size());
    double acc = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      acc += w[i];
      cum[i] = acc;
    }
  }
  int operator()(Rng& rng) const {
    double u = std::uniform_real_distribution<double>(0.0, cum.back())(rng);
    return static_cast<int>(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
  }
};

std::string padded(const char* prefix, int n, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%0*d", prefix, width, n);
  return buf;
}

}  // namespace

SynthResult synthesize(const SynthConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);

  SynthResult res;
  Dataset& d = res.dataset;

  const int T = cfg.num_topics;
  const int num_queries = T * cfg.queries_per_topic;
  const int num_products = T * cfg.products_per_topic;

  // Vocabulary: a shared pool plus per-topic query-term and description-term
  // blocks. The two blocks barely overlap, so queries and descriptions share
  // few terms directly and matching has to come from click structure.
  const int shared = std::max(1, cfg.vocab_size / 10);
  const int block = (cfg.vocab_size - shared) / (2 * T);
  std::vector<int32_t> shared_terms, qblock_start(T), dblock_start(T);
  for (int i = 0; i < shared; ++i) shared_terms.push_back(d.intern_term(padded("w", i, 6)));
  int next = shared;
  for (int t = 0; t < T; ++t) {
    qblock_start[t] = next;
    for (int i = 0; i < block; ++i) d.intern_term(padded("w", next + i, 6));
    next += block;
    dblock_start[t] = next;
    for (int i = 0; i < block; ++i) d.intern_term(padded("w", next + i, 6));
    next += block;
  }

  auto uniform_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };

  // Queries: topic = index mod T, global popularity Zipf over the index.
  std::vector<std::string> query_ids(num_queries);
  std::vector<int> query_topic(num_queries);
  std::vector<double> query_weight(num_queries);
  for (int i = 0; i < num_queries; ++i) {
    query_ids[i] = padded("q", i, 5);
    query_topic[i] = i % T;
    query_weight[i] = std::pow(i + 1.0, -cfg.zipf_exponent);
    Query q;
    q.id = query_ids[i];
    int len = uniform_int(2, 4);
    for (int k = 0; k < len; ++k) {
      if (coin(0.15))
        q.terms.push_back(shared_terms[uniform_int(0, shared - 1)]);
      else
        q.terms.push_back(qblock_start[query_topic[i]] + uniform_int(0, block - 1));
    }
    d.queries.emplace(q.id, std::move(q));
    res.query_topic[query_ids[i]] = query_topic[i];
  }

  // Products: topic = index mod T, popularity Zipf over the within-topic rank.
  std::vector<std::string> product_ids(num_products);
  std::vector<int> product_topic(num_products);
  std::vector<double> product_weight(num_products);
  for (int j = 0; j < num_products; ++j) {
    product_ids[j] = padded("p", j, 5);
    product_topic[j] = j % T;
    int within_rank = j / T;
    product_weight[j] = std::pow(within_rank + 1.0, -cfg.zipf_exponent);
    Product p;
    p.id = product_ids[j];
    // The least popular product of each topic ships without a description
    // (synthetic cold-start).
    bool cold = cfg.products_per_topic >= 10 && within_rank == cfg.products_per_topic - 1;
    if (!cold) {
      int len = uniform_int(4, 8);
      for (int k = 0; k < len; ++k) {
        if (coin(0.10))
          p.description.push_back(shared_terms[uniform_int(0, shared - 1)]);
        else if (coin(0.04))
          p.description.push_back(qblock_start[product_topic[j]] + uniform_int(0, block - 1));
        else
          p.description.push_back(dblock_start[product_topic[j]] + uniform_int(0, block - 1));
      }
    }
    if (!coin(0.05)) {
      double price = std::exp(std::normal_distribution<double>(3.0, 0.8)(rng));
      p.price = std::round(price * 100.0) / 100.0;
    }
    d.products.emplace(p.id, std::move(p));
    res.product_topic[product_ids[j]] = product_topic[j];
  }

  for (int i = 0; i < num_queries; ++i) {
    auto& v = res.topical[query_ids[i]];
    for (int j = 0; j < num_products; ++j)
      if (product_topic[j] == query_topic[i]) v.push_back(product_ids[j]);
  }

  WeightedPicker pick_query(query_weight);
  std::vector<WeightedPicker> pick_topic_query, pick_topic_product;
  for (int t = 0; t < T; ++t) {
    std::vector<double> wq(num_queries, 0.0), wp(num_products, 0.0);
    for (int i = 0; i < num_queries; ++i)
      if (query_topic[i] == t) wq[i] = query_weight[i];
    for (int j = 0; j < num_products; ++j)
      if (product_topic[j] == t) wp[j] = product_weight[j];
    pick_topic_query.emplace_back(wq);
    pick_topic_product.emplace_back(wp);
  }

  const int serp_size = 10;
  const int topical_slots = 7;

  for (int s = 0; s < cfg.sessions; ++s) {
    std::string sid = padded("s", s, 6);
    int64_t ts = static_cast<int64_t>(s + 1) * 1000;

    int first = pick_query(rng);
    int topic = query_topic[first];
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    int nq = u < 0.15 ? 3 : (u < 0.45 ? 2 : 1);

    std::string order_id;
    for (int qi = 0; qi < nq; ++qi) {
      int q = qi == 0 ? first : pick_topic_query[topic](rng);

      // Candidates: mostly same-topic products plus a few distractors,
      // ordered by a popularity-driven engine score.
      std::vector<int> serp;
      auto add_distinct = [&](int candidate) {
        if (std::find(serp.begin(), serp.end(), candidate) == serp.end()) serp.push_back(candidate);
      };
      int guard = 0;
      while (static_cast<int>(serp.size()) < std::min(topical_slots, cfg.products_per_topic) &&
             guard++ < 200)
        add_distinct(pick_topic_product[topic](rng));
      guard = 0;
      while (static_cast<int>(serp.size()) < serp_size && guard++ < 400) {
        int j = uniform_int(0, num_products - 1);
        if (T > 1 && product_topic[j] == topic) continue;
        add_distinct(j);
      }
      std::vector<std::pair<double, int>> engine;
      for (int j : serp) {
        double score = std::log(product_weight[j]) + std::normal_distribution<double>(0.0, 1.0)(rng);
        engine.emplace_back(-score, j);
      }
      std::sort(engine.begin(), engine.end());

      EventRecord ev;
      ev.session = sid;
      ev.ts = ts++;
      ev.kind = EventKind::QueryIssued;
      ev.query = query_ids[q];
      ev.terms = d.queries.at(query_ids[q]).terms;
      for (auto& [negscore, j] : engine) ev.serp.push_back(product_ids[j]);
      std::vector<int> serp_order;
      for (auto& [negscore, j] : engine) serp_order.push_back(j);
      d.events.push_back(std::move(ev));

      // Clicks: relevance (same topic) times popularity, mild position bias;
      // with probability click_noise a click lands anywhere on the page.
      double uc = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      int nclicks = uc < 0.15 ? 3 : (uc < 0.55 ? 2 : 1);
      std::vector<double> w(serp_order.size(), 0.0);
      for (size_t pos = 0; pos < serp_order.size(); ++pos) {
        int j = serp_order[pos];
        if (product_topic[j] == topic) w[pos] = product_weight[j] / (1.0 + 0.15 * pos);
      }
      WeightedPicker pick_click(w);
      std::set<int> clicked;
      for (int c = 0; c < nclicks; ++c) {
        int pos;
        if (coin(cfg.click_noise)) {
          pos = uniform_int(0, static_cast<int>(serp_order.size()) - 1);
        } else {
          pos = pick_click(rng);
        }
        int j = serp_order[pos];
        if (!clicked.insert(j).second) continue;
        EventRecord ce;
        ce.session = sid;
        ce.ts = ts++;
        ce.kind = EventKind::Click;
        ce.query = query_ids[q];
        ce.product = product_ids[j];
        d.events.push_back(std::move(ce));
      }
      for (int j : clicked) {
        if (!coin(0.25)) continue;
        if (order_id.empty()) order_id = padded("o", s, 6);
        EventRecord pe;
        pe.session = sid;
        pe.ts = ts++;
        pe.kind = EventKind::Purchase;
        pe.product = product_ids[j];
        pe.order = order_id;
        d.events.push_back(std::move(pe));
      }
    }

    // A browsing session alongside each search session: topic-coherent views.
    std::string bid = padded("b", s, 6);
    int64_t bts = static_cast<int64_t>(s + 1) * 1000 + 500;
    int btopic = uniform_int(0, T - 1);
    int nviews = uniform_int(2, 6);
    std::set<int> seen;
    for (int v = 0; v < nviews; ++v) {
      int j = pick_topic_product[btopic](rng);
      if (!seen.insert(j).second) continue;
      EventRecord ve;
      ve.session = bid;
      ve.ts = bts++;
      ve.kind = EventKind::View;
      ve.product = product_ids[j];
      d.events.push_back(std::move(ve));
    }
  }

  build_impressions(d);
  return res;
}

std::string SynthResult::topical_qrels_text() const {
  std::string out;
  for (const auto& [qid, pids] : topical)
    for (const auto& pid : pids) out += qid + " 0 " + pid + " 1\n";
  return out;
}

// ---------------------------------------------------------------------------
// Impressions and splits
// ---------------------------------------------------------------------------

const std::vector<Impression>& build_impressions(Dataset& d, BuildStats* stats) {
  BuildStats local;
  BuildStats& st = stats ? *stats : local;
  d.impressions.clear();
  d.event_impression.assign(d.events.size(), -1);

  std::vector<Impression> imps;
  std::unordered_map<std::string, std::vector<int>> session_imps;

  for (size_t ei = 0; ei < d.events.size(); ++ei) {
    const EventRecord& e = d.events[ei];
    switch (e.kind) {
      case EventKind::QueryIssued: {
        if (e.serp.empty()) break;  // no recorded SERP, nothing to rank
        Impression imp;
        imp.query_id = e.query;
        imp.serp = e.serp;
        imp.session = e.session;
        imp.ts = e.ts;
        session_imps[e.session].push_back(static_cast<int>(imps.size()));
        d.event_impression[ei] = static_cast<int32_t>(imps.size());
        imps.push_back(std::move(imp));
        break;
      }
      case EventKind::Click: {
        auto it = session_imps.find(e.session);
        if (it == session_imps.end() || it->second.empty()) {
          ++st.unattributed_clicks;
          break;
        }
        Impression& imp = imps[it->second.back()];
        if (std::find(imp.serp.begin(), imp.serp.end(), e.product) == imp.serp.end()) {
          imp.serp.push_back(e.product);
          ++st.clicks_outside_serp;
        }
        imp.clicked.insert(e.product);
        d.event_impression[ei] = it->second.back();
        break;
      }
      case EventKind::Purchase: {
        auto it = session_imps.find(e.session);
        bool done = false;
        if (it != session_imps.end()) {
          for (auto ri = it->second.rbegin(); ri != it->second.rend(); ++ri) {
            if (imps[*ri].clicked.count(e.product)) {
              imps[*ri].purchased.insert(e.product);
              d.event_impression[ei] = *ri;
              done = true;
              break;
            }
          }
        }
        if (!done) ++st.unattributed_purchases;
        break;
      }
      case EventKind::View:
        break;
    }
  }

  // Emit in timestamp order (stable on ties) and remap attributions.
  std::vector<int> perm(imps.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return imps[a].ts < imps[b].ts; });
  std::vector<int32_t> old_to_new(imps.size());
  d.impressions.resize(imps.size());
  for (size_t n = 0; n < perm.size(); ++n) {
    old_to_new[perm[n]] = static_cast<int32_t>(n);
    d.impressions[n] = std::move(imps[perm[n]]);
  }
  for (auto& x : d.event_impression)
    if (x >= 0) x = old_to_new[x];
  return d.impressions;
}

Split split_original(const Dataset& d, double test_fraction, uint64_t seed) {
  if (test_fraction < 0.0 || test_fraction > 1.0)
    throw ValidationError("split: test fraction must lie in [0, 1]");
  if (d.impressions.size() < 2) throw ValidationError("split: need at least 2 impressions");

  std::map<std::string, std::vector<int32_t>> by_session;
  for (size_t i = 0; i < d.impressions.size(); ++i)
    by_session[d.impressions[i].session].push_back(static_cast<int32_t>(i));

  std::vector<std::string> multi;
  for (const auto& [sid, v] : by_session)
    if (v.size() >= 2) multi.push_back(sid);
  if (multi.empty())
    throw ValidationError("split: no multi-query sessions; use the chronological split instead");

  size_t k = static_cast<size_t>(std::llround(test_fraction * static_cast<double>(multi.size())));
  if (k == 0)
    throw ValidationError("split: test fraction selects zero sessions; increase it or use the "
                          "chronological split");
  Rng rng(seed);
  std::shuffle(multi.begin(), multi.end(), rng);
  multi.resize(k);
  std::set<std::string> selected(multi.begin(), multi.end());

  Split s;
  s.mode = SplitMode::Original;
  for (const auto& [sid, v] : by_session) {
    bool take_last = selected.count(sid) > 0;
    for (size_t i = 0; i < v.size(); ++i) {
      if (take_last && i + 1 == v.size())
        s.test.push_back(v[i]);
      else
        s.train.push_back(v[i]);
    }
  }
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.test.begin(), s.test.end());
  return s;
}

Split split_chronological(const Dataset& d, int64_t cutoff_ts) {
  Split s;
  s.mode = SplitMode::Chronological;
  for (size_t i = 0; i < d.impressions.size(); ++i) {
    if (d.impressions[i].ts < cutoff_ts)
      s.train.push_back(static_cast<int32_t>(i));
    else
      s.test.push_back(static_cast<int32_t>(i));
  }
  if (s.train.empty()) throw ValidationError("split: cutoff leaves the train side empty");
  if (s.test.empty()) throw ValidationError("split: cutoff leaves the test side empty");
  return s;
}

std::string split_to_json(const Split& s) {
  ojson j;
  j["mode"] = s.mode == SplitMode::Original ? "original" : "chronological";
  j["train"] = s.train;
  j["test"] = s.test;
  return j.dump() + "\n";
}

Split split_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Split s;
  std::string mode = j.at("mode").get<std::string>();
  if (mode == "original")
    s.mode = SplitMode::Original;
  else if (mode == "chronological")
    s.mode = SplitMode::Chronological;
  else
    throw ValidationError("split: unknown mode " + mode);
  s.train = j.at("train").get<std::vector<int32_t>>();
  s.test = j.at("test").get<std::vector<int32_t>>();
  return s;
}

std::map<std::string, std::vector<int32_t>> augment_documents(const Dataset& d, const Split& s) {
  std::map<std::string, std::set<std::string>> clicked_by;
  for (int32_t i : s.train) {
    const Impression& imp = d.impressions.at(i);
    for (const auto& pid : imp.clicked) clicked_by[pid].insert(imp.query_id);
  }
  std::map<std::string, std::vector<int32_t>> out;
  for (const auto& [pid, p] : d.products) {
    std::vector<int32_t> doc = p.description;
    auto it = clicked_by.find(pid);
    if (it != clicked_by.end()) {
      for (const auto& qid : it->second) {
        const auto& terms = d.queries.at(qid).terms;
        doc.insert(doc.end(), terms.begin(), terms.end());
      }
    }
    out.emplace(pid, std::move(doc));
  }
  return out;
}

int64_t train_horizon_ts(const Dataset& d, const Split& s) {
  int64_t horizon = std::numeric_limits<int64_t>::min();
  for (int32_t i : s.train) horizon = std::max(horizon, d.impressions.at(i).ts);
  return horizon;
}

std::string impression_qid(int32_t index) { return padded("i", index, 6); }

std::map<std::pair<std::string, std::string>, int> action_qrels(const Dataset& d,
                                                                const std::vector<int32_t>& imps) {
  std::map<std::pair<std::string, std::string>, int> q;
  for (int32_t i : imps) {
    const Impression& imp = d.impressions.at(i);
    std::string qid = impression_qid(i);
    for (const auto& pid : imp.serp) {
      int grade = imp.purchased.count(pid) ? 2 : (imp.clicked.count(pid) ? 1 : 0);
      q[{qid, pid}] = grade;
    }
  }
  return q;
}

}  // namespace geps::corpus
