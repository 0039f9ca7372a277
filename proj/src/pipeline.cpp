#include "sensediff/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "sensediff/evalstats.hpp"
#include "sensediff/io.hpp"
#include "sensediff/topics.hpp"

namespace sensediff {
namespace pipeline {

namespace {

std::uint64_t fnv64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Indexed parallel map; output slots keep results deterministic regardless
// of the worker count.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    std::size_t i;
    while ((i = next.fetch_add(1)) < count) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n = std::min(workers, count);
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct CorpusHandle {
  std::string label;
  std::filesystem::path source;
};

std::vector<CorpusHandle> corpora(const RunConfig& config) {
  return {{config.label_a, config.corpus_a}, {config.label_b, config.corpus_b}};
}

void require_readable(const std::filesystem::path& p, const char* field) {
  if (p.empty())
    throw ConfigError(std::string("missing config field '") + field + "'");
  if (!std::filesystem::exists(p))
    throw ConfigError(std::string("config field '") + field +
                      "': no such file: " + p.string());
}

}  // namespace

ArtifactPaths artifact_paths(const RunConfig& config,
                             const std::string& label) {
  ArtifactPaths p;
  p.counts_tsv = config.out_dir / (label + ".counts.tsv");
  p.counts_meta = config.out_dir / (label + ".counts.meta.json");
  p.dt_tsv = config.out_dir / (label + ".dt.tsv");
  p.dt_meta = config.out_dir / (label + ".dt.meta.json");
  return p;
}

void build(const RunConfig& config) {
  require_readable(config.corpus_a, "corpus_a");
  require_readable(config.corpus_b, "corpus_b");
  if (!config.policy.pos_tagged)
    std::cerr << "warning: input is untagged; the NN/NNS target filter is "
                 "disabled\n";
  for (const auto& corpus : corpora(config)) {
    const TokenStream ts =
        read_token_file(corpus.source.string(), config.policy);
    const FeatureCounts fc = count_features(ts, config.window);
    const DTNetwork dt = build_dt(fc, config.dt);

    const ArtifactPaths paths = artifact_paths(config, corpus.label);
    nlohmann::json source_meta{
        {"source", corpus.source.string()},
        {"source_digest", digest_file(corpus.source)},
        {"label", corpus.label},
        {"skipped_lines", ts.skipped_lines}};
    save_feature_counts(fc, paths.counts_tsv, paths.counts_meta, source_meta);
    nlohmann::json dt_meta{
        {"source", corpus.source.string()},
        {"source_digest", source_meta["source_digest"]},
        {"label", corpus.label},
        {"counts_digest", digest_file(paths.counts_tsv)}};
    save_dt(dt, paths.dt_tsv, paths.dt_meta, dt_meta);
  }
}

namespace {

void check_fresh(const RunConfig& config, const std::string& label,
                 const std::filesystem::path& source) {
  const ArtifactPaths paths = artifact_paths(config, label);
  for (const auto& p :
       {paths.counts_tsv, paths.counts_meta, paths.dt_tsv, paths.dt_meta})
    if (!std::filesystem::exists(p))
      throw DataError("missing artifact " + p.string() +
                      "; run the build step first");
  const nlohmann::json meta = nlohmann::json::parse(read_file(paths.dt_meta));
  if (meta.at("source_digest").get<std::string>() != digest_file(source))
    throw DataError("corpus " + source.string() +
                    " changed since the build step; artifacts for '" + label +
                    "' are stale, re-run build");
  if (meta.at("counts_digest").get<std::string>() !=
      digest_file(paths.counts_tsv))
    throw DataError("counts artifact for '" + label +
                    "' changed since the build step; re-run build");
}

}  // namespace

DTNetwork load_built_dt(const RunConfig& config, const std::string& label) {
  const auto source = label == config.label_a ? config.corpus_a : config.corpus_b;
  check_fresh(config, label, source);
  const ArtifactPaths paths = artifact_paths(config, label);
  return load_dt(paths.dt_tsv, paths.dt_meta);
}

std::string candidates_jsonl(const std::vector<CandidateSense>& candidates) {
  std::string out;
  for (const auto& c : candidates) {
    out += c.to_json().dump();
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> shared_targets(const DTNetwork& a, const DTNetwork& b) {
  const auto ta = a.eligible_targets();
  const auto tb = b.eligible_targets();
  std::vector<std::string> out;
  std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                        std::back_inserter(out));
  return out;
}

void sort_candidates(std::vector<CandidateSense>* candidates) {
  std::stable_sort(candidates->begin(), candidates->end(),
                   [](const CandidateSense& x, const CandidateSense& y) {
                     if (x.word != y.word) return x.word < y.word;
                     const auto mx = method_name(x.method);
                     const auto my = method_name(y.method);
                     if (mx != my) return mx < my;
                     if (x.source_corpus != y.source_corpus)
                       return x.source_corpus < y.source_corpus;
                     if (x.novelty != y.novelty) return x.novelty > y.novelty;
                     return x.payload.dump() < y.payload.dump();
                   });
}

struct MitraOutcome {
  std::vector<CandidateSense> candidates;
  SenseClusterSet set_a, set_b;
  std::string skipped;  // non-empty when the word could not be clustered
};

MitraOutcome run_mitra_word(const RunConfig& config, const DTNetwork& dt_a,
                            const DTNetwork& dt_b, const std::string& word) {
  MitraOutcome out;
  try {
    const std::uint64_t word_seed = config.seed ^ fnv64(word);
    out.set_a = induce_senses(dt_a, word, config.cw_runs, word_seed,
                              config.cw_min_agree, config.cw_max_iter,
                              config.ego_size, config.label_a);
    out.set_b = induce_senses(dt_b, word, config.cw_runs,
                              word_seed + 0x9e3779b9ull, config.cw_min_agree,
                              config.cw_max_iter, config.ego_size,
                              config.label_b);
  } catch (const TooFewNeighborsError& e) {
    out.skipped = word + " (" + e.what() + ")";
    return out;
  }
  auto flag = [&](const SenseClusterSet& mine, const SenseClusterSet& other) {
    auto found = flag_mitra(mine, other, config.mitra_threshold,
                            config.mitra_min_size);
    out.candidates.insert(out.candidates.end(), found.begin(), found.end());
  };
  flag(out.set_a, out.set_b);
  flag(out.set_b, out.set_a);
  return out;
}

struct ComparatorContext {
  const RunConfig& config;
  const DTNetwork& dt_a;
  const DTNetwork& dt_b;
  std::vector<CandidateSense>* candidates;
  std::vector<std::string>* skipped;
  std::set<std::string>* mitra_flagged_words;
};

void run_mitra(const ComparatorContext& ctx,
               const std::vector<std::string>& words) {
  std::vector<MitraOutcome> outcomes(words.size());
  parallel_for(words.size(), ctx.config.workers, [&](std::size_t i) {
    outcomes[i] = run_mitra_word(ctx.config, ctx.dt_a, ctx.dt_b, words[i]);
  });
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto& o = outcomes[i];
    if (!o.skipped.empty()) {
      ctx.skipped->push_back(o.skipped);
      continue;
    }
    if (!o.candidates.empty()) {
      ctx.mitra_flagged_words->insert(words[i]);
      const auto dir = ctx.config.out_dir / "clusters";
      write_file(dir / (words[i] + "." + ctx.config.label_a + ".json"),
                 cluster_set_to_json(o.set_a).dump(2) + "\n");
      write_file(dir / (words[i] + "." + ctx.config.label_b + ".json"),
                 cluster_set_to_json(o.set_b).dump(2) + "\n");
    }
    for (auto& c : o.candidates) ctx.candidates->push_back(std::move(c));
  }
}

void run_mccarthy(const ComparatorContext& ctx,
                  const std::vector<std::string>& words) {
  if (ctx.config.inventory.empty())
    throw ConfigError(
        "method 'mccarthy' needs config field 'inventory'; none given");
  require_readable(ctx.config.inventory, "inventory");
  const SenseInventory inv = SenseInventory::load(ctx.config.inventory.string());

  // Per-corpus IC from that corpus's word marginals.
  auto ic_for = [&](const std::string& label) {
    const ArtifactPaths paths = artifact_paths(ctx.config, label);
    const FeatureCounts fc =
        load_feature_counts(paths.counts_tsv, paths.counts_meta);
    ICTable table = information_content(inv, fc.word_marginal);
    save_ic_table(table, ctx.config.out_dir / (label + ".ic.tsv"));
    return table;
  };
  const ICTable ic_a = ic_for(ctx.config.label_a);
  const ICTable ic_b = ic_for(ctx.config.label_b);

  struct Outcome {
    std::vector<CandidateSense> candidates;
    PrevalenceProfile profile_a, profile_b;
    std::string skipped;
  };
  std::vector<Outcome> outcomes(words.size());
  parallel_for(words.size(), ctx.config.workers, [&](std::size_t i) {
    auto& o = outcomes[i];
    const auto& word = words[i];
    try {
      o.profile_a = prevalence_scores(word, ctx.dt_a, inv, ic_a,
                                      ctx.config.label_a);
      o.profile_b = prevalence_scores(word, ctx.dt_b, inv, ic_b,
                                      ctx.config.label_b);
    } catch (const NoSenseError&) {
      o.skipped = word + " (no synsets in inventory)";
      return;
    }
    normalize(o.profile_a);
    normalize(o.profile_b);
    if (o.profile_a.degenerate || o.profile_b.degenerate) {
      o.skipped = word + " (degenerate prevalence profile)";
      return;
    }
    o.candidates = flag_mccarthy(o.profile_a, o.profile_b,
                                 ctx.config.mccarthy_upper,
                                 ctx.config.mccarthy_lower, ctx.config.top_m);
  });
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto& o = outcomes[i];
    if (!o.skipped.empty()) {
      ctx.skipped->push_back(o.skipped);
      continue;
    }
    if (!o.candidates.empty()) {
      const auto dir = ctx.config.out_dir / "profiles";
      write_file(dir / (words[i] + "." + ctx.config.label_a + ".json"),
                 o.profile_a.to_json().dump(2) + "\n");
      write_file(dir / (words[i] + "." + ctx.config.label_b + ".json"),
                 o.profile_b.to_json().dump(2) + "\n");
    }
    for (auto& c : o.candidates) ctx.candidates->push_back(std::move(c));
  }
}

void run_lau(const ComparatorContext& ctx,
             const std::vector<std::string>& words) {
  const TokenStream ts_a =
      read_token_file(ctx.config.corpus_a.string(), ctx.config.policy);
  const TokenStream ts_b =
      read_token_file(ctx.config.corpus_b.string(), ctx.config.policy);

  struct Outcome {
    std::vector<CandidateSense> candidates;
    std::optional<TopicModel> model_a, model_b;
    std::string skipped;
  };
  std::vector<Outcome> outcomes(words.size());
  parallel_for(words.size(), ctx.config.workers, [&](std::size_t i) {
    auto& o = outcomes[i];
    const auto& word = words[i];
    UsageContexts uc_a = build_usage_contexts(ts_a, word,
                                              ctx.config.context_window);
    UsageContexts uc_b = build_usage_contexts(ts_b, word,
                                              ctx.config.context_window);
    if (uc_a.documents.empty() || uc_b.documents.empty()) {
      o.skipped = word + " (no usage contexts in one corpus)";
      return;
    }
    const std::uint64_t word_seed = ctx.config.lau_seed ^ fnv64(word);
    TopicModel model_a = induce_topics(uc_a, ctx.config.lau, word_seed,
                                       ctx.config.lau_iters);
    model_a.corpus_id = ctx.config.label_a;
    TopicModel model_b = induce_topics(uc_b, ctx.config.lau,
                                       word_seed + 0x9e3779b9ull,
                                       ctx.config.lau_iters);
    model_b.corpus_id = ctx.config.label_b;
    auto found_a = flag_lau(model_a, model_b, ctx.config.lau_threshold);
    auto found_b = flag_lau(model_b, model_a, ctx.config.lau_threshold);
    o.candidates.insert(o.candidates.end(), found_a.begin(), found_a.end());
    o.candidates.insert(o.candidates.end(), found_b.begin(), found_b.end());
    if (!o.candidates.empty()) {
      o.model_a = std::move(model_a);
      o.model_b = std::move(model_b);
    }
  });
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto& o = outcomes[i];
    if (!o.skipped.empty()) {
      ctx.skipped->push_back(o.skipped);
      continue;
    }
    if (o.model_a) {
      const auto dir = ctx.config.out_dir / "topics";
      auto stem_a = words[i] + "." + ctx.config.label_a;
      auto stem_b = words[i] + "." + ctx.config.label_b;
      save_topic_model(*o.model_a, dir / (stem_a + ".json"),
                       dir / (stem_a + ".tsv"));
      save_topic_model(*o.model_b, dir / (stem_b + ".json"),
                       dir / (stem_b + ".tsv"));
    }
    for (auto& c : o.candidates) ctx.candidates->push_back(std::move(c));
  }
}

}  // namespace

CompareResult compare(const RunConfig& config, const std::string& method,
                      const std::vector<std::string>& words, bool all_words) {
  if (method != "mitra" && method != "mccarthy" && method != "lau" &&
      method != "all")
    throw ConfigError("unknown method: " + method);
  require_readable(config.corpus_a, "corpus_a");
  require_readable(config.corpus_b, "corpus_b");

  const DTNetwork dt_a = load_built_dt(config, config.label_a);
  const DTNetwork dt_b = load_built_dt(config, config.label_b);

  std::vector<std::string> targets = words;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  if (targets.empty()) targets = shared_targets(dt_a, dt_b);

  CompareResult result;
  std::set<std::string> mitra_flagged;
  ComparatorContext ctx{config, dt_a, dt_b, &result.candidates,
                        &result.skipped_words, &mitra_flagged};

  const bool want_mitra = method == "mitra" || method == "all";
  const bool want_mccarthy = method == "mccarthy" || method == "all";
  const bool want_lau = method == "lau" || method == "all";

  if (want_mitra || (want_lau && !all_words && words.empty()))
    run_mitra(ctx, targets);
  if (!want_mitra) {
    // mitra ran only to scope lau; drop its candidates
    result.candidates.clear();
  }
  if (want_mccarthy) run_mccarthy(ctx, targets);
  if (want_lau) {
    std::vector<std::string> lau_targets = targets;
    if (!all_words && words.empty()) {
      lau_targets.assign(mitra_flagged.begin(), mitra_flagged.end());
      if (lau_targets.empty())
        std::cerr << "warning: no mitra candidates to scope lau; "
                     "pass --all-words or a words file to widen the scope\n";
    }
    run_lau(ctx, lau_targets);
  }

  sort_candidates(&result.candidates);

  nlohmann::json counts;
  for (const auto& m : {Method::mitra, Method::mccarthy, Method::lau}) {
    nlohmann::json per_corpus;
    per_corpus[config.label_a] = 0;
    per_corpus[config.label_b] = 0;
    for (const auto& c : result.candidates)
      if (c.method == m)
        per_corpus[c.source_corpus] = per_corpus[c.source_corpus].get<int>() + 1;
    counts[method_name(m)] = per_corpus;
  }
  result.summary = nlohmann::json{{"method", method},
                                  {"targets", targets.size()},
                                  {"candidates", result.candidates.size()},
                                  {"counts", counts},
                                  {"skipped_words", result.skipped_words}};

  write_file(config.out_dir / "candidates.jsonl",
             candidates_jsonl(result.candidates));
  write_file(config.out_dir / "summary.json", result.summary.dump(2) + "\n");
  return result;
}

namespace {

using FlagKey = std::string;  // "word|corpus|index-or-synset"

bool is_subset(const std::set<FlagKey>& inner, const std::set<FlagKey>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

nlohmann::json sweep_lau(const RunConfig& config,
                         const std::vector<std::string>& words,
                         const std::vector<double>& grid) {
  const TokenStream ts_a = read_token_file(config.corpus_a.string(),
                                           config.policy);
  const TokenStream ts_b = read_token_file(config.corpus_b.string(),
                                           config.policy);

  // Max similarity per topic is threshold-free; compute once per word.
  struct TopicRow {
    std::string word, corpus;
    std::size_t index;
    double max_sim;
  };
  std::vector<std::vector<TopicRow>> rows(words.size());
  parallel_for(words.size(), config.workers, [&](std::size_t i) {
    const auto& word = words[i];
    UsageContexts uc_a = build_usage_contexts(ts_a, word, config.context_window);
    UsageContexts uc_b = build_usage_contexts(ts_b, word, config.context_window);
    if (uc_a.documents.empty() || uc_b.documents.empty()) return;
    const std::uint64_t word_seed = config.lau_seed ^ fnv64(word);
    TopicModel a = induce_topics(uc_a, config.lau, word_seed, config.lau_iters);
    a.corpus_id = config.label_a;
    TopicModel b = induce_topics(uc_b, config.lau, word_seed + 0x9e3779b9ull,
                                 config.lau_iters);
    b.corpus_id = config.label_b;
    auto collect = [&](const TopicModel& mine, const TopicModel& other) {
      // threshold 1.0 flags every topic, exposing each max similarity
      for (const auto& c : flag_lau(mine, other, 1.0))
        rows[i].push_back(TopicRow{word, mine.corpus_id,
                                   c.payload.at("topic_index").get<std::size_t>(),
                                   c.payload.at("max_similarity").get<double>()});
    };
    collect(a, b);
    collect(b, a);
  });

  std::vector<TopicRow> all;
  for (auto& r : rows) all.insert(all.end(), r.begin(), r.end());

  nlohmann::json cells = nlohmann::json::array();
  std::vector<std::set<FlagKey>> flag_sets;
  for (double threshold : grid) {
    std::set<FlagKey> flagged;
    for (const auto& row : all)
      if (row.max_sim < threshold)
        flagged.insert(row.word + "|" + row.corpus + "|" +
                       std::to_string(row.index));
    cells.push_back(nlohmann::json{
        {"threshold", threshold},
        {"count", flagged.size()},
        {"flagged", std::vector<FlagKey>(flagged.begin(), flagged.end())}});
    flag_sets.push_back(std::move(flagged));
  }

  // Lower thresholds are stricter: each cell nests in every higher one.
  bool nested = true;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid.size(); ++j)
      if (grid[i] <= grid[j] && !is_subset(flag_sets[i], flag_sets[j]))
        nested = false;

  return nlohmann::json{{"method", "lau"},
                        {"grid", grid},
                        {"cells", cells},
                        {"nesting_verified", nested}};
}

nlohmann::json sweep_mccarthy(const RunConfig& config,
                              const std::vector<std::string>& words,
                              const std::vector<double>& upper_grid,
                              const std::vector<double>& lower_grid) {
  if (config.inventory.empty())
    throw ConfigError(
        "method 'mccarthy' needs config field 'inventory'; none given");
  require_readable(config.inventory, "inventory");
  const SenseInventory inv = SenseInventory::load(config.inventory.string());
  const DTNetwork dt_a = load_built_dt(config, config.label_a);
  const DTNetwork dt_b = load_built_dt(config, config.label_b);
  auto ic_for = [&](const std::string& label) {
    const ArtifactPaths paths = artifact_paths(config, label);
    const FeatureCounts fc =
        load_feature_counts(paths.counts_tsv, paths.counts_meta);
    return information_content(inv, fc.word_marginal);
  };
  const ICTable ic_a = ic_for(config.label_a);
  const ICTable ic_b = ic_for(config.label_b);

  struct ProfilePair {
    PrevalenceProfile a, b;
    bool ok = false;
  };
  std::vector<ProfilePair> profiles(words.size());
  parallel_for(words.size(), config.workers, [&](std::size_t i) {
    auto& p = profiles[i];
    try {
      p.a = prevalence_scores(words[i], dt_a, inv, ic_a, config.label_a);
      p.b = prevalence_scores(words[i], dt_b, inv, ic_b, config.label_b);
    } catch (const NoSenseError&) {
      return;
    } catch (const UnknownWordError&) {
      return;
    }
    normalize(p.a);
    normalize(p.b);
    p.ok = !p.a.degenerate && !p.b.degenerate;
  });

  nlohmann::json cells = nlohmann::json::array();
  std::map<std::pair<double, double>, std::set<FlagKey>> flag_sets;
  for (double upper : upper_grid) {
    for (double lower : lower_grid) {
      std::set<FlagKey> flagged;
      for (const auto& p : profiles) {
        if (!p.ok) continue;
        for (const auto& c :
             flag_mccarthy(p.a, p.b, upper, lower, config.top_m))
          flagged.insert(c.word + "|" + c.source_corpus + "|" +
                         c.payload.at("synset_id").get<std::string>());
      }
      cells.push_back(nlohmann::json{
          {"upper", upper},
          {"lower", lower},
          {"count", flagged.size()},
          {"flagged", std::vector<FlagKey>(flagged.begin(), flagged.end())}});
      flag_sets[{upper, lower}] = std::move(flagged);
    }
  }

  // Raising upper or dropping lower only removes candidates.
  bool nested = true;
  for (const auto& [p1, s1] : flag_sets)
    for (const auto& [p2, s2] : flag_sets)
      if (p1.first >= p2.first && p1.second <= p2.second &&
          !is_subset(s1, s2))
        nested = false;

  return nlohmann::json{{"method", "mccarthy"},
                        {"upper_grid", upper_grid},
                        {"lower_grid", lower_grid},
                        {"cells", cells},
                        {"nesting_verified", nested}};
}

}  // namespace

nlohmann::json sweep(const RunConfig& config, const std::string& method,
                     const std::vector<std::string>& words,
                     std::vector<double> lau_grid,
                     std::vector<double> upper_grid,
                     std::vector<double> lower_grid) {
  if (method != "lau" && method != "mccarthy")
    throw ConfigError("sweep supports methods 'lau' and 'mccarthy', got: " +
                      method);
  const DTNetwork dt_a = load_built_dt(config, config.label_a);
  const DTNetwork dt_b = load_built_dt(config, config.label_b);
  std::vector<std::string> targets = words;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  if (targets.empty()) targets = shared_targets(dt_a, dt_b);

  nlohmann::json report = method == "lau"
                              ? sweep_lau(config, targets, lau_grid)
                              : sweep_mccarthy(config, targets, upper_grid,
                                               lower_grid);
  write_file(config.out_dir / ("sweep_" + method + ".json"),
             report.dump(2) + "\n");
  return report;
}

nlohmann::json eval(const std::filesystem::path& responses_csv) {
  const auto records = load_responses_file(responses_csv.string());
  if (records.empty()) throw DataError("responses CSV has no data rows");
  return evaluation_report(records);
}

nlohmann::json export_report(const std::filesystem::path& out_dir) {
  const auto jsonl_path = out_dir / "candidates.jsonl";
  if (!std::filesystem::exists(jsonl_path))
    throw DataError("no candidates.jsonl under " + out_dir.string() +
                    "; run the compare step first");
  std::istringstream in(read_file(jsonl_path));
  std::string line;
  std::map<std::string, std::map<std::string, int>> counts;
  std::map<std::string, std::set<std::string>> words;
  std::size_t total = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError("bad JSONL line in " + jsonl_path.string() + ": " +
                      e.what());
    }
    const auto method = j.at("method").get<std::string>();
    const auto corpus = j.at("source_corpus").get<std::string>();
    ++counts[method][corpus];
    words[method].insert(j.at("word").get<std::string>());
    ++total;
  }
  nlohmann::json by_method;
  for (const auto& [method, per_corpus] : counts) {
    nlohmann::json mj{{"words", words[method].size()}};
    for (const auto& [corpus, n] : per_corpus) mj["senses"][corpus] = n;
    by_method[method] = mj;
  }
  nlohmann::json report{{"candidates", total}, {"methods", by_method}};
  write_file(out_dir / "report.json", report.dump(2) + "\n");
  return report;
}

}  // namespace pipeline
}  // namespace sensediff
