#pragma once

#include <string>
#include <vector>

#include <json.hpp>

// Shared test fixtures: a planted corpus pair where "jaguar" keeps its
// animal sense in both corpora but carries an automotive sense only in
// corpus A, plus matching sense inventories.
namespace fixtures {

const std::vector<std::string>& car_words();      // 12
const std::vector<std::string>& animal_words();   // 12
const std::vector<std::string>& car_context();    // 6
const std::vector<std::string>& animal_context(); // 6

// One sentence per line, whitespace-tokenized, lowercase.
std::string corpus_a_text();  // jaguar with cars and with animals
std::string corpus_b_text();  // jaguar with animals only; cars occur sans jaguar

// Inventory where "jaguar" has exactly two synsets (animal, car) and every
// car/animal word has one synset under the matching branch.
nlohmann::json jaguar_inventory();

// Small 5-synset taxonomy (entity; animal<-entity; cat<-animal;
// vehicle<-entity; car<-vehicle) for hand-computed IC/Lin values.
nlohmann::json chain5_inventory();

}  // namespace fixtures
