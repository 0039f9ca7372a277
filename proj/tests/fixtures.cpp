#include "fixtures.hpp"

#include <sstream>

namespace fixtures {

namespace {

const std::vector<std::string> kCars = {
    "sedan",  "coupe",    "engine",  "chassis",  "turbo",    "brakes",
    "gearbox", "dashboard", "spoiler", "exhaust", "roadster", "convertible"};

const std::vector<std::string> kAnimals = {
    "prey",      "jungle",    "feline",   "predator", "habitat",   "rosette",
    "panther",   "leopard",   "rainforest", "carnivore", "whiskers", "fangs"};

const std::vector<std::string> kCarContext = {
    "garage", "highway", "gasoline", "mechanic", "traffic", "racing"};

const std::vector<std::string> kAnimalContext = {
    "savanna", "wildlife", "biologist", "territory", "prowl", "camouflage"};

const std::vector<std::string> kFiller = {
    "market",  "street", "coffee",  "morning", "river",  "bridge", "garden",
    "music",   "paper",  "meeting", "weather", "dinner", "travel", "letter",
    "school",  "office", "harbor",  "festival", "journey", "evening"};

// 30 sentences "g1 g2 g3 jaguar g4 g5 g6" rotating through the group.
void target_sentences(const std::vector<std::string>& group,
                      std::ostringstream* out) {
  for (int i = 0; i < 30; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (j == 3) *out << "jaguar ";
      *out << group[(6 * i + j) % group.size()] << (j == 5 ? "" : " ");
    }
    *out << '\n';
  }
}

// Every context word paired with every group word (chunks of three), so all
// group words share the full context-word feature set.
void context_sentences(const std::vector<std::string>& group,
                       const std::vector<std::string>& context,
                       std::ostringstream* out) {
  for (const auto& ctx : context)
    for (std::size_t chunk = 0; chunk + 2 < group.size(); chunk += 3)
      *out << ctx << ' ' << group[chunk] << ' ' << group[chunk + 1] << ' '
           << group[chunk + 2] << '\n';
}

void filler_sentences(std::ostringstream* out) {
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 6; ++j)
      *out << kFiller[(6 * i + j) % kFiller.size()] << (j == 5 ? "" : " ");
    *out << '\n';
  }
}

}  // namespace

const std::vector<std::string>& car_words() { return kCars; }
const std::vector<std::string>& animal_words() { return kAnimals; }
const std::vector<std::string>& car_context() { return kCarContext; }
const std::vector<std::string>& animal_context() { return kAnimalContext; }

std::string corpus_a_text() {
  std::ostringstream out;
  target_sentences(kCars, &out);
  target_sentences(kAnimals, &out);
  context_sentences(kCars, kCarContext, &out);
  context_sentences(kAnimals, kAnimalContext, &out);
  filler_sentences(&out);
  return out.str();
}

std::string corpus_b_text() {
  std::ostringstream out;
  target_sentences(kAnimals, &out);
  context_sentences(kAnimals, kAnimalContext, &out);
  context_sentences(kCars, kCarContext, &out);  // cars exist, sans jaguar
  filler_sentences(&out);
  return out.str();
}

nlohmann::json jaguar_inventory() {
  nlohmann::json synsets = nlohmann::json::array();
  auto add = [&](const std::string& id, std::vector<std::string> lemmas,
                 const std::string& gloss, std::vector<std::string> parents) {
    synsets.push_back(nlohmann::json{{"id", id},
                                     {"lemmas", lemmas},
                                     {"gloss", gloss},
                                     {"hypernyms", parents}});
  };
  add("entity", {"entity"}, "that which exists", {});
  add("animal", {"animal"}, "a living creature", {"entity"});
  add("feline", {"feline"}, "a cat family mammal", {"animal"});
  add("vehicle", {"vehicle"}, "a conveyance that transports people", {"entity"});
  add("car", {"car", "auto"}, "a motor vehicle with four wheels", {"vehicle"});
  add("jaguar.animal", {"jaguar"},
      "a large spotted feline of tropical america", {"feline"});
  add("jaguar.car", {"jaguar"}, "a british make of luxury motor car", {"car"});
  for (const auto& w : kAnimals)
    if (w != "feline")
      add("n." + w, {w}, "an animal kingdom term", {"feline"});
  for (const auto& w : kCars)
    add("v." + w, {w}, "a motoring term", {"car"});
  return nlohmann::json{{"synsets", synsets}};
}

nlohmann::json chain5_inventory() {
  return nlohmann::json::parse(R"({
    "synsets": [
      {"id": "entity",  "lemmas": ["entity"],  "gloss": "that which exists", "hypernyms": []},
      {"id": "animal",  "lemmas": ["animal", "jag"], "gloss": "a living creature", "hypernyms": ["entity"]},
      {"id": "cat",     "lemmas": ["cat"],     "gloss": "a small feline", "hypernyms": ["animal"]},
      {"id": "vehicle", "lemmas": ["vehicle"], "gloss": "a conveyance", "hypernyms": ["entity"]},
      {"id": "car",     "lemmas": ["car", "jag"], "gloss": "a motor vehicle", "hypernyms": ["vehicle"]}
    ]})");
}

}  // namespace fixtures
