#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sensediff/candidate.hpp"
#include "sensediff/corpus.hpp"

namespace sensediff {

// One bag-of-words document per occurrence of the target word, built from
// the +-c tokens around it in its sentence. The target word never appears
// in a bag; empty bags are dropped.
struct UsageContexts {
  std::string word;
  std::vector<std::vector<std::string>> documents;
};

UsageContexts build_usage_contexts(const TokenStream& ts, const std::string& w,
                                   std::size_t half_window);

struct HdpHyper {
  double gamma = 1.0;   // top-level concentration
  double alpha0 = 1.0;  // per-document concentration
  double beta = 0.01;   // symmetric topic-word smoothing
};

struct Topic {
  double weight = 0.0;             // fraction of tokens assigned
  std::vector<double> word_probs;  // over the model vocabulary, sums to 1
};

// Topics induced over one word's usage contexts in one corpus.
struct TopicModel {
  std::string word;
  std::string corpus_id;
  std::vector<std::string> vocab;  // sorted
  std::vector<Topic> topics;       // weight descending
  std::uint64_t seed = 0;
  int iterations = 0;

  // (word, prob) pairs of the topic's most probable words.
  std::vector<std::pair<std::string, double>> top_words(std::size_t topic,
                                                        std::size_t count) const;
};

// Collapsed Gibbs sampling with direct topic assignment; the topic count
// emerges from the sampler. Deterministic for a fixed (input, hyper, seed,
// iters).
TopicModel induce_topics(const UsageContexts& uc, const HdpHyper& hyper,
                         std::uint64_t seed, int iters);

// Jensen-Shannon divergence with base-2 logs: H(M) - (H(P)+H(Q))/2 over
// M = (P+Q)/2, with 0*log(0) = 0. Both inputs must be same-length
// distributions summing to 1 within 1e-6.
double js_divergence(std::span<const double> p, std::span<const double> q);

// 1 - JS.
double sim(std::span<const double> p, std::span<const double> q);

// A multinomial over its own vocabulary standing in for an inventory sense.
struct SenseDistribution {
  std::string sense_id;
  std::vector<std::string> vocab;  // sorted
  std::vector<double> probs;
};

// Uniform distribution over a synset's lemmas plus the content tokens of its
// gloss (normalized, length >= 3, function words dropped).
SenseDistribution make_sense_distribution(const std::string& sense_id,
                                          const std::vector<std::string>& lemmas,
                                          const std::string& gloss);

// Sorted union of two vocabularies.
std::vector<std::string> vocab_union(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b);

// Re-indexes a distribution onto a target vocabulary; absent words get 0.
std::vector<double> project(const std::vector<std::string>& from_vocab,
                            const std::vector<double>& probs,
                            const std::vector<std::string>& to_vocab);

// Topic-to-sense affinity of one topic against a sense set:
//   sum_i Sim(s_i, t_j) / sum_l sum_k Sim(s_k, t_l)
// 0 when every similarity is 0 (degenerate).
double ts_affinity(std::size_t topic_index,
                   const std::vector<SenseDistribution>& senses,
                   const TopicModel& model);
std::vector<double> ts_affinities(const std::vector<SenseDistribution>& senses,
                                  const TopicModel& model);

// Flags topics of `mine` whose maximum similarity against all topics of
// `other` (over the union vocabulary) is strictly below the threshold.
std::vector<CandidateSense> flag_lau(const TopicModel& mine,
                                     const TopicModel& other,
                                     double threshold = 0.35);

}  // namespace sensediff
