#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "sensediff/corpus.hpp"
#include "sensediff/dtnet.hpp"
#include "sensediff/induce.hpp"
#include "sensediff/inventory.hpp"
#include "sensediff/topics.hpp"

namespace sensediff {

// Shortest exact decimal form of a double (round-trips bit-exactly).
std::string format_double(double x);

// FNV-1a 64-bit, hex-encoded. Used for artifact staleness checks.
std::string digest_bytes(const std::string& bytes);
std::string digest_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, const std::string& bytes);
std::string read_file(const std::filesystem::path& path);

// FeatureCounts: TSV `word \t feature \t count` sorted by (word, feature),
// plus a sidecar metadata JSON.
void save_feature_counts(const FeatureCounts& fc,
                         const std::filesystem::path& tsv_path,
                         const std::filesystem::path& meta_path,
                         const nlohmann::json& extra_meta = {});
FeatureCounts load_feature_counts(const std::filesystem::path& tsv_path,
                                  const std::filesystem::path& meta_path);

// DT: TSV `word \t neighbor \t dss` sorted by word then rank, plus sidecar.
void save_dt(const DTNetwork& dt, const std::filesystem::path& tsv_path,
             const std::filesystem::path& meta_path,
             const nlohmann::json& extra_meta = {});
DTNetwork load_dt(const std::filesystem::path& tsv_path,
                  const std::filesystem::path& meta_path);

nlohmann::json cluster_set_to_json(const SenseClusterSet& set);
SenseClusterSet cluster_set_from_json(const nlohmann::json& j);

// TopicModel: JSON with top words plus a sidecar TSV carrying every
// (topic, word, prob) row so JS can be recomputed exactly.
void save_topic_model(const TopicModel& model,
                      const std::filesystem::path& json_path,
                      const std::filesystem::path& tsv_path);
TopicModel load_topic_model(const std::filesystem::path& json_path);

// ICTable TSV: `synset_id \t ic`.
void save_ic_table(const ICTable& table, const std::filesystem::path& path);

}  // namespace sensediff
