#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace sensediff {

// Converts WordNet `data.pos` database files (the `wn_s`-style flat format
// with offsets, words and pointers) into the inventory JSON schema.
// Hypernym pointers (`@` and `@i`) become the hypernym edges; everything
// else is dropped. Synset ids are `<pos><offset>`.
nlohmann::json wordnet_to_inventory_json(
    const std::vector<std::string>& data_file_paths);

}  // namespace sensediff
