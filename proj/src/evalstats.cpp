#include "sensediff/evalstats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace sensediff {

Answer answer_from_string(const std::string& s) {
  std::string t;
  for (unsigned char c : s) t.push_back(static_cast<char>(std::tolower(c)));
  if (t == "yes" || t == "y") return Answer::Yes;
  if (t == "no" || t == "n") return Answer::No;
  if (t == "na" || t == "n/a") return Answer::NA;
  throw DataError("unrecognized answer: '" + s + "'");
}

std::string answer_to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::NA: return "NA";
  }
  return "?";
}

void validate_record(const AnnotationRecord& record) {
  if (record.responses.empty())
    throw DataError("candidate has no responses: " + record.candidate_id);
  for (const auto& r : record.responses) {
    if (r.q1 == Answer::NA)
      throw DataError("q1 cannot be NA (candidate " + record.candidate_id + ")");
    const bool na_expected = r.q1 == Answer::No;
    if ((r.q2 == Answer::NA) != na_expected)
      throw DataError("q2 must be NA exactly when q1 is No (candidate " +
                      record.candidate_id + ", annotator " + r.annotator + ")");
  }
}

namespace {

Answer response_answer(const AnnotatorResponse& r, Question q) {
  return q == Question::representation ? r.q1 : r.q2;
}

Vote vote_of(std::size_t yes, std::size_t no) {
  if (yes > no) return Vote::Yes;
  if (no > yes) return Vote::No;
  return Vote::Undecided;
}

}  // namespace

VoteSummary majority_vote(const std::vector<AnnotationRecord>& records,
                          Question q) {
  VoteSummary summary;
  std::size_t yes_votes = 0, undecided = 0, considered = 0;
  for (const auto& record : records) {
    validate_record(record);
    std::size_t yes = 0, no = 0;
    for (const auto& r : record.responses) {
      const Answer a = response_answer(r, q);
      if (a == Answer::Yes) ++yes;
      if (a == Answer::No) ++no;
    }
    if (yes + no == 0) {
      summary.excluded.push_back(record.candidate_id);
      continue;
    }
    ++considered;
    const Vote v = vote_of(yes, no);
    summary.per_candidate[record.candidate_id] = v;
    if (v == Vote::Yes) ++yes_votes;
    if (v == Vote::Undecided) ++undecided;
  }
  if (considered > 0) {
    summary.yes_fraction = static_cast<double>(yes_votes) / considered;
    summary.undecided_fraction = static_cast<double>(undecided) / considered;
    const std::size_t decided = considered - undecided;
    summary.yes_fraction_decided =
        decided > 0 ? static_cast<double>(yes_votes) / decided : 0.0;
  }
  return summary;
}

double average_accuracy(const std::vector<AnnotationRecord>& records,
                        Question q) {
  std::size_t yes = 0, valid = 0;
  for (const auto& record : records) {
    validate_record(record);
    for (const auto& r : record.responses) {
      const Answer a = response_answer(r, q);
      if (a == Answer::NA) continue;
      ++valid;
      if (a == Answer::Yes) ++yes;
    }
  }
  if (valid == 0) return 0.0;
  return static_cast<double>(yes) / static_cast<double>(valid);
}

ConfidenceSummary overall_confidence(
    const std::vector<AnnotationRecord>& records) {
  ConfidenceSummary summary;
  std::size_t majority_yes = 0, considered = 0;
  std::size_t confident = 0, responses = 0;
  for (const auto& record : records) {
    validate_record(record);
    std::size_t yes = 0, no = 0;
    for (const auto& r : record.responses) {
      const bool conf = r.q1 == Answer::Yes && r.q2 == Answer::Yes;
      ++responses;
      if (conf) {
        ++yes;
        ++confident;
      } else {
        ++no;
      }
    }
    ++considered;
    const Vote v = vote_of(yes, no);
    summary.per_candidate[record.candidate_id] = v;
    if (v == Vote::Yes) ++majority_yes;
  }
  if (considered > 0)
    summary.majority_yes_fraction =
        static_cast<double>(majority_yes) / considered;
  if (responses > 0)
    summary.average = static_cast<double>(confident) / responses;
  return summary;
}

double fleiss_kappa(const std::vector<std::vector<std::uint64_t>>& matrix,
                    std::uint64_t raters_per_item) {
  if (raters_per_item < 2)
    throw DataError("fleiss_kappa: need at least 2 raters per item");
  if (matrix.empty()) throw DataError("fleiss_kappa: empty matrix");
  const std::size_t categories = matrix.front().size();
  if (categories < 2)
    throw DataError("fleiss_kappa: need at least 2 categories");

  const double n = static_cast<double>(raters_per_item);
  const double items = static_cast<double>(matrix.size());
  std::vector<double> category_mass(categories, 0.0);
  double p_bar = 0.0;
  for (const auto& row : matrix) {
    if (row.size() != categories)
      throw DataError("fleiss_kappa: ragged matrix");
    std::uint64_t sum = 0;
    double sq = 0.0;
    for (std::size_t j = 0; j < categories; ++j) {
      sum += row[j];
      sq += static_cast<double>(row[j]) * static_cast<double>(row[j]);
      category_mass[j] += static_cast<double>(row[j]);
    }
    if (sum != raters_per_item)
      throw DataError("fleiss_kappa: row does not sum to the rater count");
    p_bar += (sq - n) / (n * (n - 1.0));
  }
  p_bar /= items;

  double pe = 0.0;
  for (double mass : category_mass) {
    const double pj = mass / (items * n);
    pe += pj * pj;
  }
  if (pe == 1.0) {
    if (p_bar == 1.0) return 1.0;
    throw UndefinedAgreementError(
        "fleiss_kappa: chance agreement is 1 but observed agreement is not");
  }
  return (p_bar - pe) / (1.0 - pe);
}

std::vector<AnnotationRecord> load_responses_csv(std::istream& in) {
  std::map<std::string, AnnotationRecord> by_candidate;
  std::vector<std::string> order;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
      // trim surrounding blanks
      const auto b = field.find_first_not_of(" \t");
      const auto e = field.find_last_not_of(" \t");
      fields.push_back(b == std::string::npos
                           ? ""
                           : field.substr(b, e - b + 1));
    }
    if (line_no == 1 && !fields.empty() && fields[0] == "candidate_id")
      continue;  // header
    if (fields.size() != 4)
      throw DataError("responses CSV line " + std::to_string(line_no) +
                      ": expected 4 fields, got " +
                      std::to_string(fields.size()));
    AnnotatorResponse r;
    r.annotator = fields[1];
    try {
      r.q1 = answer_from_string(fields[2]);
      r.q2 = answer_from_string(fields[3]);
    } catch (const DataError& e) {
      throw DataError("responses CSV line " + std::to_string(line_no) + ": " +
                      e.what());
    }
    if (r.q1 == Answer::NA)
      throw DataError("responses CSV line " + std::to_string(line_no) +
                      ": q1 cannot be NA");
    if ((r.q2 == Answer::NA) != (r.q1 == Answer::No))
      throw DataError("responses CSV line " + std::to_string(line_no) +
                      ": q2 must be NA exactly when q1 is No");
    if (!seen.insert({fields[0], fields[1]}).second)
      throw DataError("responses CSV line " + std::to_string(line_no) +
                      ": duplicate (candidate, annotator) pair");
    auto it = by_candidate.find(fields[0]);
    if (it == by_candidate.end()) {
      order.push_back(fields[0]);
      it = by_candidate.emplace(fields[0], AnnotationRecord{fields[0], {}}).first;
    }
    it->second.responses.push_back(std::move(r));
  }
  std::vector<AnnotationRecord> records;
  records.reserve(order.size());
  for (const auto& id : order) records.push_back(by_candidate.at(id));
  return records;
}

std::vector<AnnotationRecord> load_responses_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open responses file: " + path);
  return load_responses_csv(in);
}

namespace {

// Kappa matrix for q1 uses {Yes, No}; q2 keeps NA as a third category so
// every item row sums to the rater count.
nlohmann::json kappa_or_null(const std::vector<AnnotationRecord>& records,
                             Question q) {
  if (records.empty()) return nullptr;
  const std::size_t n = records.front().responses.size();
  for (const auto& r : records)
    if (r.responses.size() != n) return nullptr;  // unequal rater counts
  if (n < 2) return nullptr;
  const std::size_t categories = q == Question::representation ? 2 : 3;
  std::vector<std::vector<std::uint64_t>> matrix;
  for (const auto& record : records) {
    std::vector<std::uint64_t> row(categories, 0);
    for (const auto& resp : record.responses) {
      const Answer a = response_answer(resp, q);
      if (a == Answer::Yes) ++row[0];
      else if (a == Answer::No) ++row[1];
      else ++row[2];
    }
    matrix.push_back(std::move(row));
  }
  try {
    return fleiss_kappa(matrix, n);
  } catch (const UndefinedAgreementError&) {
    return nullptr;
  }
}

}  // namespace

nlohmann::json evaluation_report(const std::vector<AnnotationRecord>& records) {
  const VoteSummary rep = majority_vote(records, Question::representation);
  const VoteSummary dis = majority_vote(records, Question::discrimination);
  const ConfidenceSummary conf = overall_confidence(records);

  // Discrimination averages pooled over all valid responses, and pooled
  // over responses of decided candidates only.
  std::size_t yes_all = 0, valid_all = 0, yes_dec = 0, valid_dec = 0;
  for (const auto& record : records) {
    auto it = dis.per_candidate.find(record.candidate_id);
    const bool decided =
        it != dis.per_candidate.end() && it->second != Vote::Undecided;
    for (const auto& r : record.responses) {
      if (r.q2 == Answer::NA) continue;
      ++valid_all;
      if (decided) ++valid_dec;
      if (r.q2 == Answer::Yes) {
        ++yes_all;
        if (decided) ++yes_dec;
      }
    }
  }

  nlohmann::json j;
  j["candidates"] = records.size();
  j["sense_representation"] = {
      {"majority_yes", rep.yes_fraction},
      {"average", average_accuracy(records, Question::representation)}};
  j["sense_discrimination"] = {
      {"majority_yes_incl_undecided", dis.yes_fraction},
      {"majority_yes_excl_undecided", dis.yes_fraction_decided},
      {"average_incl_undecided",
       valid_all > 0 ? static_cast<double>(yes_all) / valid_all : 0.0},
      {"average_excl_undecided",
       valid_dec > 0 ? static_cast<double>(yes_dec) / valid_dec : 0.0},
      {"undecided", dis.undecided_fraction},
      {"excluded_candidates", dis.excluded}};
  j["overall_confidence"] = {{"majority_yes", conf.majority_yes_fraction},
                             {"average", conf.average}};
  j["fleiss_kappa"] = {
      {"q1", kappa_or_null(records, Question::representation)},
      {"q2", kappa_or_null(records, Question::discrimination)}};
  return j;
}

}  // namespace sensediff
