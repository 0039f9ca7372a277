#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sensediff/errors.hpp"

namespace sensediff {

enum class Answer { Yes, No, NA };

Answer answer_from_string(const std::string& s);
std::string answer_to_string(Answer a);

struct AnnotatorResponse {
  std::string annotator;
  Answer q1 = Answer::No;  // is the cluster a good representative sense?
  Answer q2 = Answer::NA;  // is it different from all senses in the other corpus?
};

// All responses for one candidate. Invariant: q2 is NA exactly when q1 is No.
struct AnnotationRecord {
  std::string candidate_id;
  std::vector<AnnotatorResponse> responses;
};

void validate_record(const AnnotationRecord& record);

enum class Question { representation, discrimination };

enum class Vote { Yes, No, Undecided };

struct VoteSummary {
  std::map<std::string, Vote> per_candidate;
  double yes_fraction = 0.0;        // |Yes| / |candidates with valid responses|
  double undecided_fraction = 0.0;
  double yes_fraction_decided = 0.0;  // |Yes| / |decided candidates|
  std::vector<std::string> excluded;  // candidates with zero valid responses
};

// Majority voting per candidate: Yes/No on a strict majority of valid
// responses, Undecided on ties. NA answers are excluded for q2.
VoteSummary majority_vote(const std::vector<AnnotationRecord>& records,
                          Question q);

// Fraction of valid responses that are Yes, pooled over all candidates.
double average_accuracy(const std::vector<AnnotationRecord>& records,
                        Question q);

struct ConfidenceSummary {
  std::map<std::string, Vote> per_candidate;
  double majority_yes_fraction = 0.0;
  double average = 0.0;  // confident responses / all responses
};

// An annotator is confident in a candidate iff both answers are Yes.
ConfidenceSummary overall_confidence(
    const std::vector<AnnotationRecord>& records);

// Fleiss' kappa over an items x categories count matrix where every row
// sums to raters_per_item.
double fleiss_kappa(const std::vector<std::vector<std::uint64_t>>& matrix,
                    std::uint64_t raters_per_item);

// CSV rows: candidate_id, annotator_id, q1, q2 (optional header).
std::vector<AnnotationRecord> load_responses_csv(std::istream& in);
std::vector<AnnotationRecord> load_responses_file(const std::string& path);

// Aggregate report: representation, discrimination (with and without the
// undecided candidates in the denominators), overall confidence, and
// Fleiss' kappa per question.
nlohmann::json evaluation_report(const std::vector<AnnotationRecord>& records);

}  // namespace sensediff
