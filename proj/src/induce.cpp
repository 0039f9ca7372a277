#include "sensediff/induce.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace sensediff {

namespace {

struct IndexedGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<std::pair<int, double>>> adj;
};

IndexedGraph index_graph(const EgoNetwork& g) {
  IndexedGraph ig;
  ig.nodes = g.nodes;  // already sorted
  ig.adj.resize(ig.nodes.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(ig.nodes.size()); ++i)
    index[ig.nodes[i]] = i;
  for (const auto& e : g.edges) {
    const int u = index.at(e.u);
    const int v = index.at(e.v);
    ig.adj[u].emplace_back(v, e.weight);
    ig.adj[v].emplace_back(u, e.weight);
  }
  return ig;
}

std::vector<int> cw_labels(const IndexedGraph& ig, std::uint64_t seed,
                           int max_iter) {
  const int n = static_cast<int>(ig.nodes.size());
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);

  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> weight(n, 0.0);
  std::vector<int> seen;

  for (int pass = 0; pass < max_iter; ++pass) {
    std::shuffle(order.begin(), order.end(), rng);
    bool changed = false;
    for (int node : order) {
      if (ig.adj[node].empty()) continue;
      seen.clear();
      for (const auto& [nb, w] : ig.adj[node]) {
        const int label = labels[nb];
        if (weight[label] == 0.0) seen.push_back(label);
        weight[label] += w;
      }
      int best = labels[node];
      double best_weight = -1.0;
      for (int label : seen) {
        if (weight[label] > best_weight ||
            (weight[label] == best_weight && label < best)) {
          best = label;
          best_weight = weight[label];
        }
        weight[label] = 0.0;
      }
      if (best != labels[node]) {
        labels[node] = best;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return labels;
}

}  // namespace

std::map<std::string, int> chinese_whispers(const EgoNetwork& g,
                                            std::uint64_t seed, int max_iter) {
  if (g.nodes.empty()) throw DataError("chinese_whispers: empty graph");
  if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
  const IndexedGraph ig = index_graph(g);
  const std::vector<int> labels = cw_labels(ig, seed, max_iter);
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < ig.nodes.size(); ++i) out[ig.nodes[i]] = labels[i];
  return out;
}

SenseClusterSet induce_senses_on(const EgoNetwork& ego, int runs,
                                 std::uint64_t base_seed, double min_agree,
                                 int max_iter, const std::string& corpus_id) {
  if (runs < 3 || runs % 2 == 0)
    throw ConfigError("runs must be odd and >= 3");
  if (min_agree < 0.0 || min_agree > 1.0)
    throw ConfigError("min_agree must lie in [0,1]");

  const IndexedGraph ig = index_graph(ego);
  const int n = static_cast<int>(ig.nodes.size());

  // Votes: how often each node pair shares a CW cluster.
  std::vector<std::vector<int>> votes(n, std::vector<int>(n, 0));
  for (int r = 0; r < runs; ++r) {
    const std::vector<int> labels = cw_labels(ig, base_seed + r, max_iter);
    std::unordered_map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[labels[i]].push_back(i);
    for (const auto& [label, members] : groups)
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          ++votes[members[a]][members[b]];
  }

  // Connected components of the majority co-occurrence graph.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const double needed = min_agree * runs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (static_cast<double>(votes[a][b]) > needed) parent[find(a)] = find(b);

  std::unordered_map<int, std::vector<std::string>> components;
  for (int i = 0; i < n; ++i) components[find(i)].push_back(ig.nodes[i]);

  SenseClusterSet out;
  out.word = ego.center;
  out.corpus_id = corpus_id;
  for (auto& [root, members] : components) {
    std::sort(members.begin(), members.end());
    out.clusters.push_back(SenseCluster{0, std::move(members)});
  }
  std::sort(out.clusters.begin(), out.clusters.end(),
            [](const SenseCluster& a, const SenseCluster& b) {
              if (a.members.size() != b.members.size())
                return a.members.size() > b.members.size();
              return a.members.front() < b.members.front();
            });
  for (std::size_t i = 0; i < out.clusters.size(); ++i)
    out.clusters[i].id = static_cast<int>(i);
  return out;
}

SenseClusterSet induce_senses(const DTNetwork& dt, const std::string& w,
                              int runs, std::uint64_t base_seed,
                              double min_agree, int max_iter,
                              std::size_t ego_size,
                              const std::string& corpus_id) {
  const EgoNetwork ego = ego_network(dt, w, ego_size);
  return induce_senses_on(ego, runs, base_seed, min_agree, max_iter, corpus_id);
}

}  // namespace sensediff
