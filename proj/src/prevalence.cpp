#include "sensediff/prevalence.hpp"

#include <algorithm>

namespace sensediff {

nlohmann::json PrevalenceProfile::to_json() const {
  nlohmann::json j;
  j["word"] = word;
  j["corpus_id"] = corpus_id;
  j["ps"] = raw;
  j["nps"] = normalized;
  j["skipped_neighbors"] = skipped_neighbors;
  j["degenerate"] = degenerate;
  return j;
}

PrevalenceProfile prevalence_scores(const std::string& w, const DTNetwork& dt,
                                    const SenseInventory& inv,
                                    const ICTable& ic,
                                    const std::string& corpus_id) {
  const auto synsets = inv.senses_of(w);
  if (synsets.empty())
    throw NoSenseError("word has no synsets in the inventory: " + w);
  const auto* neighbors = dt.find(w);
  if (!neighbors) throw UnknownWordError("word not in DT network: " + w);

  PrevalenceProfile profile;
  profile.word = w;
  profile.corpus_id = corpus_id;
  for (const auto& sid : synsets) profile.contributions[sid] = {};

  std::vector<double> wn(synsets.size());
  for (const auto& nb : *neighbors) {
    double denom = 0.0;
    for (std::size_t i = 0; i < synsets.size(); ++i) {
      wn[i] = wnss(inv, ic, synsets[i], nb.word);
      denom += wn[i];
    }
    if (denom == 0.0) {
      profile.skipped_neighbors.push_back(nb.word);
      continue;
    }
    for (std::size_t i = 0; i < synsets.size(); ++i)
      profile.contributions[synsets[i]].emplace_back(nb.word,
                                                     nb.score * wn[i] / denom);
  }

  // PS is the exact sum of the stored per-neighbor terms.
  for (const auto& sid : synsets) {
    double ps = 0.0;
    for (const auto& [nb, term] : profile.contributions[sid]) ps += term;
    profile.raw[sid] = ps;
  }
  return profile;
}

PrevalenceProfile& normalize(PrevalenceProfile& profile) {
  double sum = 0.0;
  for (const auto& [sid, ps] : profile.raw) sum += ps;
  profile.normalized.clear();
  if (sum == 0.0) {
    profile.degenerate = true;
    for (const auto& [sid, ps] : profile.raw) profile.normalized[sid] = 0.0;
  } else {
    for (const auto& [sid, ps] : profile.raw)
      profile.normalized[sid] = ps / sum;
  }
  return profile;
}

namespace {

void flag_direction(const PrevalenceProfile& mine,
                    const PrevalenceProfile& other, double upper, double lower,
                    std::size_t top_m, std::vector<CandidateSense>* out) {
  for (const auto& [sid, nps] : mine.normalized) {
    const double other_nps = other.normalized.at(sid);
    if (nps > upper && other_nps < lower) {
      CandidateSense cand;
      cand.word = mine.word;
      cand.source_corpus = mine.corpus_id;
      cand.members = representative_cluster(mine, sid, top_m);
      cand.novelty = nps - other_nps;
      cand.method = Method::mccarthy;
      cand.payload["synset_id"] = sid;
      cand.payload["nps_mine"] = nps;
      cand.payload["nps_other"] = other_nps;
      out->push_back(std::move(cand));
    }
  }
}

}  // namespace

std::vector<CandidateSense> flag_mccarthy(const PrevalenceProfile& a,
                                          const PrevalenceProfile& b,
                                          double upper, double lower,
                                          std::size_t top_m) {
  if (a.word != b.word)
    throw InputMismatchError("flag_mccarthy: profiles describe different words ('" +
                             a.word + "' vs '" + b.word + "')");
  auto keys = [](const std::map<std::string, double>& m) {
    std::vector<std::string> k;
    for (const auto& [id, v] : m) k.push_back(id);
    return k;
  };
  if (keys(a.normalized) != keys(b.normalized))
    throw InputMismatchError(
        "flag_mccarthy: profiles cover different synset universes for '" +
        a.word + "'");
  if (!(lower >= 0.0 && lower < upper && upper <= 1.0))
    throw ConfigError("mccarthy thresholds must satisfy 0 <= lower < upper <= 1");
  if (a.normalized.empty())
    throw InputMismatchError("flag_mccarthy: profiles not normalized");

  std::vector<CandidateSense> out;
  if (a.degenerate || b.degenerate) return out;  // excluded from flagging
  flag_direction(a, b, upper, lower, top_m, &out);
  flag_direction(b, a, upper, lower, top_m, &out);
  return out;
}

std::vector<std::string> representative_cluster(const PrevalenceProfile& p,
                                                const std::string& synset,
                                                std::size_t top_m) {
  auto it = p.contributions.find(synset);
  if (it == p.contributions.end())
    throw ReferenceError("no such synset in profile: " + synset);
  auto terms = it->second;
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  if (terms.size() > top_m) terms.resize(top_m);
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (const auto& [nb, term] : terms) out.push_back(nb);
  return out;
}

}  // namespace sensediff
