#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sensediff/candidate.hpp"
#include "sensediff/induce.hpp"

namespace sensediff {

// Fraction of the cluster's members that appear in no cluster of the other
// corpus's set.
double novelty_fraction(const SenseCluster& c, const SenseClusterSet& other);

// Flags the clusters of `mine` with size >= min_size whose novelty fraction
// is strictly above the threshold. Ordered by novelty descending, ties by
// cluster id. Both sets must describe the same word.
std::vector<CandidateSense> flag_mitra(const SenseClusterSet& mine,
                                       const SenseClusterSet& other,
                                       double threshold = 0.8,
                                       std::size_t min_size = 10);

}  // namespace sensediff
