#include "sensediff/inventory.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <unordered_set>

namespace sensediff {

std::string SenseInventory::normalize_lemma(const std::string& lemma) {
  std::string out;
  out.reserve(lemma.size());
  for (unsigned char c : lemma) {
    if (c == ' ') {
      out.push_back('_');
    } else {
      out.push_back(c < 128 ? static_cast<char>(std::tolower(c))
                            : static_cast<char>(c));
    }
  }
  return out;
}

SenseInventory SenseInventory::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("synsets") || !j["synsets"].is_array())
    throw DataError("inventory JSON must be an object with a 'synsets' array");
  SenseInventory inv;
  for (const auto& sj : j["synsets"]) {
    Synset s;
    s.id = sj.at("id").get<std::string>();
    if (s.id.empty()) throw DataError("inventory: empty synset id");
    if (sj.contains("lemmas"))
      for (const auto& l : sj["lemmas"])
        s.lemmas.push_back(normalize_lemma(l.get<std::string>()));
    if (sj.contains("gloss")) s.gloss = sj["gloss"].get<std::string>();
    if (sj.contains("hypernyms"))
      for (const auto& h : sj["hypernyms"])
        s.hypernyms.push_back(h.get<std::string>());
    if (!inv.synsets_.emplace(s.id, std::move(s)).second)
      throw DataError("inventory: duplicate synset id: " +
                      sj.at("id").get<std::string>());
  }
  inv.build_indexes();
  return inv;
}

SenseInventory SenseInventory::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open inventory file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("inventory JSON parse error in " + path + ": " + e.what());
  }
  return from_json(j);
}

void SenseInventory::build_indexes() {
  for (const auto& [id, s] : synsets_) {
    for (const auto& parent : s.hypernyms)
      if (!synsets_.count(parent))
        throw ReferenceError("inventory: synset '" + id +
                             "' names missing hypernym '" + parent + "'");
    if (s.hypernyms.empty()) roots_.push_back(id);
    for (const auto& lemma : s.lemmas) lemma_index_[lemma].push_back(id);
  }
  for (auto& [lemma, ids] : lemma_index_) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }

  // Ancestor closure; DFS color marking doubles as cycle detection.
  enum class Color { white, grey, black };
  std::unordered_map<std::string, Color> color;
  for (const auto& [id, s] : synsets_) color[id] = Color::white;

  // Recursive closure with explicit memoization.
  std::vector<std::string> stack;
  auto close = [&](auto&& self, const std::string& id) -> void {
    if (color[id] == Color::black) return;
    if (color[id] == Color::grey)
      throw TaxonomyCycleError("inventory: hypernym cycle through '" + id + "'");
    color[id] = Color::grey;
    std::unordered_set<std::string> anc;
    anc.insert(id);
    for (const auto& parent : synsets_.at(id).hypernyms) {
      self(self, parent);
      const auto& pa = ancestors_.at(parent);
      anc.insert(pa.begin(), pa.end());
    }
    std::vector<std::string> sorted(anc.begin(), anc.end());
    std::sort(sorted.begin(), sorted.end());
    ancestors_[id] = std::move(sorted);
    color[id] = Color::black;
  };
  for (const auto& [id, s] : synsets_) close(close, id);
}

const Synset* SenseInventory::find(const std::string& id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

const Synset& SenseInventory::get(const std::string& id) const {
  const Synset* s = find(id);
  if (!s) throw ReferenceError("unknown synset id: " + id);
  return *s;
}

std::vector<std::string> SenseInventory::senses_of(
    const std::string& word) const {
  auto it = lemma_index_.find(normalize_lemma(word));
  return it == lemma_index_.end() ? std::vector<std::string>{} : it->second;
}

const std::vector<std::string>& SenseInventory::ancestors_of(
    const std::string& id) const {
  auto it = ancestors_.find(id);
  if (it == ancestors_.end()) throw ReferenceError("unknown synset id: " + id);
  return it->second;
}

std::vector<std::string> SenseInventory::synset_ids() const {
  std::vector<std::string> out;
  out.reserve(synsets_.size());
  for (const auto& [id, s] : synsets_) out.push_back(id);
  return out;
}

nlohmann::json SenseInventory::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [id, s] : synsets_) {
    nlohmann::json sj;
    sj["id"] = s.id;
    sj["lemmas"] = s.lemmas;
    sj["gloss"] = s.gloss;
    sj["hypernyms"] = s.hypernyms;
    arr.push_back(std::move(sj));
  }
  return nlohmann::json{{"synsets", std::move(arr)}};
}

double ICTable::of(const std::string& id) const {
  auto it = ic.find(id);
  if (it == ic.end()) throw ReferenceError("no IC for synset id: " + id);
  return it->second;
}

ICTable information_content(
    const SenseInventory& inv,
    const std::unordered_map<std::string, std::uint64_t>& lemma_counts,
    IcUnit unit) {
  if (lemma_counts.empty())
    throw DataError("information_content: empty lemma counts");

  ICTable table;
  table.unit = unit;

  std::unordered_map<std::string, double> mass;
  for (const auto& id : inv.synset_ids()) mass[id] = 0.0;

  for (const auto& [lemma, count] : lemma_counts) {
    const auto synsets = inv.senses_of(lemma);
    if (synsets.empty()) {
      table.skipped_lemmas.push_back(lemma);
      continue;
    }
    const double share =
        static_cast<double>(count) / static_cast<double>(synsets.size());
    for (const auto& sid : synsets) {
      for (const auto& anc : inv.ancestors_of(sid)) mass[anc] += share;
      table.total_mass += share;
    }
  }
  std::sort(table.skipped_lemmas.begin(), table.skipped_lemmas.end());

  // Single root: the root holds the whole mass. Multiple roots: a virtual
  // root above them holds it. Either way the normalizer is total mass + 1.
  const double denom = table.total_mass + 1.0;
  const double scale = unit == IcUnit::bits ? 1.0 / std::log(2.0) : 1.0;
  for (auto& [id, m] : mass)
    table.ic[id] = -std::log((m + 1.0) / denom) * scale;
  return table;
}

double lin_similarity(const SenseInventory& inv, const ICTable& ic,
                      const std::string& a, const std::string& b) {
  const auto& anc_a = inv.ancestors_of(a);
  const auto& anc_b = inv.ancestors_of(b);

  // Both lists are sorted; intersect and track the max-IC common ancestor.
  double best = -1.0;
  std::size_t i = 0, j = 0;
  while (i < anc_a.size() && j < anc_b.size()) {
    const int cmp = anc_a[i].compare(anc_b[j]);
    if (cmp == 0) {
      best = std::max(best, ic.of(anc_a[i]));
      ++i;
      ++j;
    } else if (cmp < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  if (best < 0.0) return 0.0;  // no common ancestor
  const double denom = ic.of(a) + ic.of(b);
  if (denom == 0.0) return 0.0;
  return 2.0 * best / denom;
}

double wnss(const SenseInventory& inv, const ICTable& ic,
            const std::string& synset_id, const std::string& word) {
  inv.get(synset_id);  // validate the synset side
  double best = 0.0;
  for (const auto& sid : inv.senses_of(word))
    best = std::max(best, lin_similarity(inv, ic, synset_id, sid));
  return best;
}

}  // namespace sensediff
