#include "sensediff/wordnet_import.hpp"

#include <fstream>
#include <sstream>

#include "sensediff/errors.hpp"
#include "sensediff/inventory.hpp"

namespace sensediff {

namespace {

// data.* line:
//   offset lex_filenum ss_type w_cnt word lex_id [word lex_id]...
//   p_cnt [ptr_symbol offset pos source/target]... | gloss
void parse_data_line(const std::string& line, const std::string& path,
                     std::size_t line_no, nlohmann::json* synsets) {
  std::istringstream iss(line);
  std::string offset, lex_filenum, ss_type;
  if (!(iss >> offset >> lex_filenum >> ss_type))
    throw DataError(path + ":" + std::to_string(line_no) +
                    ": malformed synset line");

  int w_cnt = 0;
  {
    std::string hex;
    if (!(iss >> hex))
      throw DataError(path + ":" + std::to_string(line_no) + ": missing w_cnt");
    w_cnt = static_cast<int>(std::strtol(hex.c_str(), nullptr, 16));
  }
  std::vector<std::string> lemmas;
  for (int i = 0; i < w_cnt; ++i) {
    std::string word, lex_id;
    if (!(iss >> word >> lex_id))
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": truncated word list");
    lemmas.push_back(SenseInventory::normalize_lemma(word));
  }

  int p_cnt = 0;
  if (!(iss >> p_cnt))
    throw DataError(path + ":" + std::to_string(line_no) + ": missing p_cnt");
  std::vector<std::string> hypernyms;
  for (int i = 0; i < p_cnt; ++i) {
    std::string symbol, target_offset, pos, source_target;
    if (!(iss >> symbol >> target_offset >> pos >> source_target))
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": truncated pointer list");
    if (symbol == "@" || symbol == "@i")
      hypernyms.push_back(pos + target_offset);
  }

  std::string gloss;
  const auto bar = line.find('|');
  if (bar != std::string::npos) {
    gloss = line.substr(bar + 1);
    const auto b = gloss.find_first_not_of(' ');
    if (b != std::string::npos) gloss = gloss.substr(b);
    else gloss.clear();
  }

  (*synsets).push_back(nlohmann::json{{"id", ss_type + offset},
                                      {"lemmas", lemmas},
                                      {"gloss", gloss},
                                      {"hypernyms", hypernyms}});
}

}  // namespace

nlohmann::json wordnet_to_inventory_json(
    const std::vector<std::string>& data_file_paths) {
  nlohmann::json synsets = nlohmann::json::array();
  for (const auto& path : data_file_paths) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open WordNet data file: " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line.front() == ' ') continue;  // license header
      parse_data_line(line, path, line_no, &synsets);
    }
  }
  nlohmann::json inventory{{"synsets", std::move(synsets)}};
  // Validates ids, references and acyclicity before anything is written.
  SenseInventory::from_json(inventory);
  return inventory;
}

}  // namespace sensediff
