#pragma once

#include <map>
#include <string>
#include <vector>

#include "sensediff/candidate.hpp"
#include "sensediff/dtnet.hpp"
#include "sensediff/inventory.hpp"

namespace sensediff {

// Per-synset prevalence scores of one word in one corpus:
//   PS_i = sum over DT neighbors n of dss(w,n) * wnss(ws_i,n) / sum_i' wnss(ws_i',n)
// with the per-neighbor terms kept so PS decomposes exactly.
struct PrevalenceProfile {
  std::string word;
  std::string corpus_id;
  std::map<std::string, double> raw;         // synset id -> PS
  std::map<std::string, double> normalized;  // synset id -> NPS
  std::map<std::string, std::vector<std::pair<std::string, double>>>
      contributions;                         // synset id -> (neighbor, term)
  std::vector<std::string> skipped_neighbors;  // zero wnss across all synsets
  bool degenerate = false;                     // every raw score is zero

  nlohmann::json to_json() const;
};

PrevalenceProfile prevalence_scores(const std::string& w, const DTNetwork& dt,
                                    const SenseInventory& inv,
                                    const ICTable& ic,
                                    const std::string& corpus_id = "");

// Fills the normalized part: NPS_i = PS_i / sum PS. An all-zero raw vector
// normalizes to all zeros with the degenerate flag set.
PrevalenceProfile& normalize(PrevalenceProfile& profile);

// A synset is flagged specific to a corpus when its NPS is strictly above
// `upper` there and strictly below `lower` in the other corpus. Both
// directions are evaluated; degenerate profiles flag nothing.
std::vector<CandidateSense> flag_mccarthy(const PrevalenceProfile& a,
                                          const PrevalenceProfile& b,
                                          double upper = 0.4,
                                          double lower = 0.1,
                                          std::size_t top_m = 20);

// The neighbors contributing most to PS of the synset, descending, ties by
// neighbor name.
std::vector<std::string> representative_cluster(const PrevalenceProfile& p,
                                                const std::string& synset,
                                                std::size_t top_m);

}  // namespace sensediff
