#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sensediff/candidate.hpp"
#include "sensediff/config.hpp"
#include "sensediff/crosscorpus.hpp"
#include "sensediff/inventory.hpp"
#include "sensediff/prevalence.hpp"

namespace sensediff {
namespace pipeline {

// Per-corpus artifact paths under the output directory.
struct ArtifactPaths {
  std::filesystem::path counts_tsv, counts_meta, dt_tsv, dt_meta;
};
ArtifactPaths artifact_paths(const RunConfig& config, const std::string& label);

// Ingests both corpora and persists counts + DT networks with digests.
void build(const RunConfig& config);

// Loads a corpus's DT, refusing stale artifacts (input digest mismatch).
DTNetwork load_built_dt(const RunConfig& config, const std::string& label);

struct CompareResult {
  std::vector<CandidateSense> candidates;
  nlohmann::json summary;               // per-method per-corpus counts
  std::vector<std::string> skipped_words;
};

// Runs one or all comparators over the target words; when `words` is empty
// the targets are derived (shared DT vocabulary, nouns when tagged; for lau
// the words flagged by mitra unless all_words is set). Writes
// candidates.jsonl and summary.json under out_dir.
CompareResult compare(const RunConfig& config, const std::string& method,
                      const std::vector<std::string>& words = {},
                      bool all_words = false);

// Threshold sweep over the pinned grids; verifies the nesting structure
// between cells and writes sweep_<method>.json.
nlohmann::json sweep(const RunConfig& config, const std::string& method,
                     const std::vector<std::string>& words = {},
                     std::vector<double> lau_grid = {0.30, 0.35, 0.40},
                     std::vector<double> upper_grid = {0.45, 0.40, 0.35},
                     std::vector<double> lower_grid = {0.05, 0.10, 0.15});

// Scores an annotation CSV into the report JSON.
nlohmann::json eval(const std::filesystem::path& responses_csv);

// Re-reads candidates.jsonl and summarizes counts per method and corpus.
nlohmann::json export_report(const std::filesystem::path& out_dir);

std::string candidates_jsonl(const std::vector<CandidateSense>& candidates);

}  // namespace pipeline
}  // namespace sensediff
