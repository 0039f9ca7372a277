#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "sensediff/errors.hpp"

namespace sensediff {

struct Synset {
  std::string id;
  std::vector<std::string> lemmas;     // normalized (lowercase, '_'-joined)
  std::string gloss;
  std::vector<std::string> hypernyms;  // parent synset ids
};

// Synsets with an acyclic hypernym taxonomy and a lemma -> synsets index.
class SenseInventory {
 public:
  static SenseInventory from_json(const nlohmann::json& j);
  static SenseInventory load(const std::string& path);

  const Synset* find(const std::string& id) const;
  const Synset& get(const std::string& id) const;  // ReferenceError if absent

  // Synset ids carrying the lemma; empty when the word is out of vocabulary.
  // Lookup normalizes to lowercase with spaces joined by underscores.
  std::vector<std::string> senses_of(const std::string& word) const;

  // Ancestors of `id` including itself.
  const std::vector<std::string>& ancestors_of(const std::string& id) const;

  const std::vector<std::string>& roots() const { return roots_; }
  std::vector<std::string> synset_ids() const;     // sorted
  std::size_t size() const { return synsets_.size(); }

  nlohmann::json to_json() const;

  static std::string normalize_lemma(const std::string& lemma);

 private:
  std::map<std::string, Synset> synsets_;
  std::unordered_map<std::string, std::vector<std::string>> lemma_index_;
  std::unordered_map<std::string, std::vector<std::string>> ancestors_;
  std::vector<std::string> roots_;

  void build_indexes();  // validates references and acyclicity
};

enum class IcUnit { nats, bits };

// Information content per synset: IC(s) = -log((mass(s)+1) / (mass(root)+1))
// with each lemma count split uniformly over the lemma's synsets and
// propagated to all ancestors. Multi-root inventories normalize against a
// virtual root holding the whole mass.
struct ICTable {
  std::unordered_map<std::string, double> ic;
  IcUnit unit = IcUnit::nats;
  double total_mass = 0.0;
  std::vector<std::string> skipped_lemmas;  // counted but not in the inventory

  double of(const std::string& id) const;  // ReferenceError if absent
};

ICTable information_content(
    const SenseInventory& inv,
    const std::unordered_map<std::string, std::uint64_t>& lemma_counts,
    IcUnit unit = IcUnit::nats);

// Lin similarity 2*IC(lcs) / (IC(a)+IC(b)) where lcs is the common ancestor
// of maximum IC; 0 when there is no common ancestor or both ICs are 0.
double lin_similarity(const SenseInventory& inv, const ICTable& ic,
                      const std::string& a, const std::string& b);

// Word-to-synset similarity: max Lin over the word's synsets; 0 when the
// word has none.
double wnss(const SenseInventory& inv, const ICTable& ic,
            const std::string& synset_id, const std::string& word);

}  // namespace sensediff
