#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sensediff/dtnet.hpp"

namespace sensediff {

struct SenseCluster {
  int id = 0;
  std::vector<std::string> members;  // sorted
  std::size_t size() const { return members.size(); }
};

// The induced sense clusters of one word in one corpus. Clusters are
// disjoint, non-empty, ordered by (size desc, first member asc), with ids
// assigned in that order so re-serialization is stable.
struct SenseClusterSet {
  std::string word;
  std::string corpus_id;
  std::vector<SenseCluster> clusters;
};

// One randomized label-propagation run. Every node ends with exactly one
// label; a pass visits nodes in a seed-determined permutation (re-drawn per
// pass) and each node adopts the label with maximum summed edge weight in
// its neighborhood, ties broken by smallest label. Stops when a full pass
// changes nothing, or after max_iter passes.
std::map<std::string, int> chinese_whispers(const EgoNetwork& g,
                                            std::uint64_t seed, int max_iter);

// Runs CW with seeds base_seed .. base_seed+runs-1 and keeps two nodes
// together iff they share a cluster in strictly more than min_agree of the
// runs; connected components of that co-occurrence graph become the final
// clusters.
SenseClusterSet induce_senses(const DTNetwork& dt, const std::string& w,
                              int runs, std::uint64_t base_seed,
                              double min_agree, int max_iter = 50,
                              std::size_t ego_size = 200,
                              const std::string& corpus_id = "");

// The voting step on a fixed ego network; exposed for tests that plant a
// graph directly.
SenseClusterSet induce_senses_on(const EgoNetwork& ego, int runs,
                                 std::uint64_t base_seed, double min_agree,
                                 int max_iter = 50,
                                 const std::string& corpus_id = "");

}  // namespace sensediff
