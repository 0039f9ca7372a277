#include "sensediff/dtnet.hpp"

#include <algorithm>
#include <unordered_map>

namespace sensediff {

bool DTNetwork::contains(const std::string& w) const {
  return neighbors.count(w) != 0;
}

const std::vector<Neighbor>* DTNetwork::find(const std::string& w) const {
  auto it = neighbors.find(w);
  return it == neighbors.end() ? nullptr : &it->second;
}

double DTNetwork::dss(const std::string& w, const std::string& n) const {
  const auto* list = find(w);
  if (!list) return 0.0;
  for (const auto& nb : *list)
    if (nb.word == n) return nb.score;
  return 0.0;
}

std::vector<std::string> DTNetwork::eligible_targets() const {
  std::vector<std::string> out;
  for (const auto& [w, list] : neighbors) {
    if (has_pos && !noun_targets.count(w)) continue;
    out.push_back(w);
  }
  return out;
}

DTNetwork build_dt(const FeatureCounts& fc, const DtParams& params) {
  if (params.features_per_word < 1 || params.neighbors_per_word < 1)
    throw ConfigError("DT parameters p and k must be >= 1");

  DTNetwork dt;
  dt.params = params;
  dt.has_pos = fc.has_pos;
  dt.noun_targets.insert(fc.noun_targets.begin(), fc.noun_targets.end());

  // Vocabulary entering the DT, in a fixed order.
  std::vector<std::string> vocab;
  vocab.reserve(fc.word_marginal.size());
  for (const auto& [w, m] : fc.word_marginal)
    if (m >= params.min_marginal) vocab.push_back(w);
  std::sort(vocab.begin(), vocab.end());

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) index[vocab[i]] = i;

  // Top-p features per word by (LMI desc, feature asc).
  std::vector<std::vector<std::string>> retained(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    const auto& feats = fc.pair_count.at(vocab[i]);
    std::vector<std::pair<double, const std::string*>> scored;
    scored.reserve(feats.size());
    for (const auto& [f, c] : feats)
      scored.emplace_back(lmi_weight(fc, vocab[i], f), &f);
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return *a.second < *b.second;
    });
    if (scored.size() > params.features_per_word)
      scored.resize(params.features_per_word);
    auto& kept = retained[i];
    kept.reserve(scored.size());
    for (const auto& [lmi, f] : scored) kept.push_back(*f);
    std::sort(kept.begin(), kept.end());
  }

  // Inverted index: feature -> words retaining it.
  std::unordered_map<std::string, std::vector<std::size_t>> postings;
  for (std::size_t i = 0; i < vocab.size(); ++i)
    for (const auto& f : retained[i]) postings[f].push_back(i);

  std::vector<std::uint32_t> overlap(vocab.size(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    touched.clear();
    for (const auto& f : retained[i]) {
      for (std::size_t j : postings[f]) {
        if (j == i) continue;
        if (overlap[j]++ == 0) touched.push_back(j);
      }
    }
    std::vector<Neighbor> list;
    list.reserve(touched.size());
    for (std::size_t j : touched) {
      list.push_back(Neighbor{vocab[j], static_cast<double>(overlap[j])});
      overlap[j] = 0;
    }
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) {
      if (a.score != b.score) return a.score > b.score;
      return a.word < b.word;
    });
    if (list.size() > params.neighbors_per_word)
      list.resize(params.neighbors_per_word);
    if (!list.empty()) dt.neighbors.emplace(vocab[i], std::move(list));
  }
  return dt;
}

EgoNetwork ego_network(const DTNetwork& dt, const std::string& w,
                       std::size_t n) {
  if (n < 2) throw ConfigError("ego network size must be >= 2");
  const auto* list = dt.find(w);
  if (!list) throw UnknownWordError("word not in DT network: " + w);
  if (list->size() < 2)
    throw TooFewNeighborsError("word has fewer than 2 DT neighbors: " + w);

  EgoNetwork ego;
  ego.center = w;
  const std::size_t count = std::min(n, list->size());
  ego.nodes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) ego.nodes.push_back((*list)[i].word);
  std::sort(ego.nodes.begin(), ego.nodes.end());

  for (std::size_t i = 0; i < ego.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < ego.nodes.size(); ++j) {
      const auto& u = ego.nodes[i];
      const auto& v = ego.nodes[j];
      const double uv = dt.dss(u, v);
      const double vu = dt.dss(v, u);
      const double weight = std::max(uv, vu);
      if (weight > 0.0) ego.edges.push_back(EgoEdge{u, v, weight});
    }
  }
  return ego;
}

}  // namespace sensediff
