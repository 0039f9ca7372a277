#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sensediff {

enum class Method { mitra, mccarthy, lau };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

// One flagged corpus-specific sense, in the shared interchange shape all
// three comparators emit. `novelty` is the method's own specificity score,
// always in [0,1]; method details live in `payload`.
struct CandidateSense {
  std::string word;
  std::string source_corpus;
  std::vector<std::string> members;
  double novelty = 0.0;
  Method method = Method::mitra;
  nlohmann::json payload;

  nlohmann::json to_json() const;
};

}  // namespace sensediff
