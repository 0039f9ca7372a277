#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sensediff/errors.hpp"

namespace sensediff {

// How raw tokens are turned into normalized surface forms.
struct NormPolicy {
  bool fold_case = true;
  bool strip_punct = true;       // leading/trailing punctuation only
  std::size_t min_token_len = 1;
  bool pos_tagged = false;       // input tokens carry a token_POS suffix
};

struct Token {
  std::string text;
  std::string pos;  // empty when the input is untagged
};

struct TokenStream {
  std::vector<std::vector<Token>> sentences;
  bool has_pos = false;
  std::size_t skipped_lines = 0;                 // malformed (non-UTF-8) lines
  std::vector<std::size_t> skipped_line_numbers; // 1-based
};

// Applies the normalization policy to one already-split token.
// Returns an empty string when the token is dropped.
std::string normalize_token(const std::string& raw, const NormPolicy& policy);

// One sentence per input line, whitespace-tokenized. Lines that are not
// valid UTF-8 are skipped and counted with their line number.
TokenStream normalize_tokens(const std::vector<std::string>& raw_lines,
                             const NormPolicy& policy);
TokenStream read_token_stream(std::istream& in, const NormPolicy& policy);
TokenStream read_token_file(const std::string& path, const NormPolicy& policy);

// Word/feature co-occurrence counts with marginals. Stored entries are
// always >= 1; marginals are derivable from pair_count and kept consistent.
struct FeatureCounts {
  std::unordered_map<std::string,
                     std::unordered_map<std::string, std::uint64_t>> pair_count;
  std::unordered_map<std::string, std::uint64_t> word_marginal;
  std::unordered_map<std::string, std::uint64_t> feature_marginal;
  std::uint64_t total = 0;
  std::size_t window = 0;
  bool has_pos = false;
  // Words observed with tag NN or NNS; empty when has_pos is false.
  std::unordered_set<std::string> noun_targets;

  std::uint64_t pair(const std::string& w, const std::string& f) const;
  bool has_pair(const std::string& w, const std::string& f) const;

  // Associative, commutative merge of partial counts. Windows must match.
  void merge(const FeatureCounts& other);
};

// Counts, for every token position, each token within +-window in the same
// sentence (the position itself excluded) once as a feature.
FeatureCounts count_features(const TokenStream& ts, std::size_t window);

// Lexicographer's Mutual Information:
//   LMI(w,f) = c(w,f) * log2( c(w,f) * total / (c(w) * c(f)) )
// Throws ReferenceError when (w,f) is not a stored pair.
double lmi_weight(const FeatureCounts& fc, const std::string& w,
                  const std::string& f);

}  // namespace sensediff
