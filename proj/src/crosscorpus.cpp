#include "sensediff/crosscorpus.hpp"

#include <algorithm>
#include <unordered_set>

namespace sensediff {

std::string method_name(Method m) {
  switch (m) {
    case Method::mitra: return "mitra";
    case Method::mccarthy: return "mccarthy";
    case Method::lau: return "lau";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "mitra") return Method::mitra;
  if (name == "mccarthy") return Method::mccarthy;
  if (name == "lau") return Method::lau;
  throw ConfigError("unknown method: " + name);
}

nlohmann::json CandidateSense::to_json() const {
  nlohmann::json j;
  j["word"] = word;
  j["source_corpus"] = source_corpus;
  j["method"] = method_name(method);
  j["novelty"] = novelty;
  j["members"] = members;
  for (auto& [key, value] : payload.items()) j[key] = value;
  return j;
}

namespace {

std::unordered_set<std::string> member_union(const SenseClusterSet& set) {
  std::unordered_set<std::string> out;
  for (const auto& c : set.clusters)
    out.insert(c.members.begin(), c.members.end());
  return out;
}

double novelty_against(const SenseCluster& c,
                       const std::unordered_set<std::string>& other_members) {
  if (c.members.empty()) throw DataError("novelty_fraction: empty cluster");
  std::size_t absent = 0;
  for (const auto& m : c.members)
    if (!other_members.count(m)) ++absent;
  return static_cast<double>(absent) / static_cast<double>(c.members.size());
}

}  // namespace

double novelty_fraction(const SenseCluster& c, const SenseClusterSet& other) {
  return novelty_against(c, member_union(other));
}

std::vector<CandidateSense> flag_mitra(const SenseClusterSet& mine,
                                       const SenseClusterSet& other,
                                       double threshold, std::size_t min_size) {
  if (mine.word != other.word)
    throw InputMismatchError("flag_mitra: cluster sets describe different words ('" +
                             mine.word + "' vs '" + other.word + "')");
  if (threshold < 0.0 || threshold > 1.0)
    throw ConfigError("mitra threshold must lie in [0,1]");

  const auto other_members = member_union(other);
  nlohmann::json other_clusters = nlohmann::json::array();
  for (const auto& c : other.clusters) other_clusters.push_back(c.members);

  std::vector<CandidateSense> flagged;
  for (const auto& c : mine.clusters) {
    if (c.size() < min_size) continue;
    const double novelty = novelty_against(c, other_members);
    if (novelty > threshold) {
      CandidateSense cand;
      cand.word = mine.word;
      cand.source_corpus = mine.corpus_id;
      cand.members = c.members;
      cand.novelty = novelty;
      cand.method = Method::mitra;
      cand.payload["cluster_id"] = c.id;
      cand.payload["cluster_size"] = c.size();
      cand.payload["other_corpus_clusters"] = other_clusters;
      flagged.push_back(std::move(cand));
    }
  }
  std::stable_sort(flagged.begin(), flagged.end(),
                   [](const CandidateSense& a, const CandidateSense& b) {
                     if (a.novelty != b.novelty) return a.novelty > b.novelty;
                     return a.payload["cluster_id"].get<int>() <
                            b.payload["cluster_id"].get<int>();
                   });
  return flagged;
}

}  // namespace sensediff
