#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sensediff/corpus.hpp"

namespace sensediff {

struct DtParams {
  std::size_t features_per_word = 1000;  // p: features kept per word
  std::size_t neighbors_per_word = 200;  // k: neighbors kept per word
  std::uint64_t min_marginal = 5;        // words below are left out of the DT
};

struct Neighbor {
  std::string word;
  double score;  // dss: size of the top-p feature set intersection
};

// Per-word ranked neighbor lists. Lists are sorted by dss descending,
// ties broken lexicographically; a word never lists itself; all dss > 0.
struct DTNetwork {
  std::map<std::string, std::vector<Neighbor>> neighbors;
  DtParams params;
  bool has_pos = false;
  std::set<std::string> noun_targets;  // carried from the counts

  bool contains(const std::string& w) const;
  // Null when w has no neighbor list.
  const std::vector<Neighbor>* find(const std::string& w) const;
  double dss(const std::string& w, const std::string& n) const;  // 0 if absent

  // Words usable as analysis targets: in the network, and tagged NN/NNS
  // when the source corpus carried POS tags.
  std::vector<std::string> eligible_targets() const;
};

// Keeps each word's top-p features by LMI (ties by feature name), scores
// word pairs by feature-set overlap, and keeps the top-k neighbors with
// dss >= 1 per word.
DTNetwork build_dt(const FeatureCounts& fc, const DtParams& params);

struct EgoEdge {
  std::string u, v;  // u < v
  double weight;
};

// The graph over a word's top-n DT neighbors; the center is not a node.
struct EgoNetwork {
  std::string center;
  std::vector<std::string> nodes;  // sorted
  std::vector<EgoEdge> edges;      // sorted by (u, v)
};

// Nodes are w's top-n neighbors; u,v are joined iff either lists the other,
// with weight dss(u,v) (the larger one if both lists carry it).
EgoNetwork ego_network(const DTNetwork& dt, const std::string& w,
                       std::size_t n);

}  // namespace sensediff
