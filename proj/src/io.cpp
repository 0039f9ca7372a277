#include "sensediff/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sensediff {

std::string format_double(double x) {
  char buf[64];
  // %.17g round-trips IEEE doubles; trim to the shortest form that does.
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string digest_bytes(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest_file(const std::filesystem::path& path) {
  return digest_bytes(read_file(path));
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("short write: " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

nlohmann::json policy_json(const FeatureCounts& fc) {
  return nlohmann::json{{"window", fc.window}};
}

std::vector<std::string> split_tsv(const std::string& line, std::size_t expect,
                                   const std::filesystem::path& path,
                                   std::size_t line_no) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  if (fields.size() != expect)
    throw DataError(path.string() + ":" + std::to_string(line_no) +
                    ": expected " + std::to_string(expect) + " fields");
  return fields;
}

}  // namespace

void save_feature_counts(const FeatureCounts& fc,
                         const std::filesystem::path& tsv_path,
                         const std::filesystem::path& meta_path,
                         const nlohmann::json& extra_meta) {
  std::vector<const std::string*> words;
  words.reserve(fc.pair_count.size());
  for (const auto& [w, feats] : fc.pair_count) words.push_back(&w);
  std::sort(words.begin(), words.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });

  std::ostringstream out;
  for (const auto* w : words) {
    const auto& feats = fc.pair_count.at(*w);
    std::vector<const std::string*> fs;
    fs.reserve(feats.size());
    for (const auto& [f, c] : feats) fs.push_back(&f);
    std::sort(fs.begin(), fs.end(), [](const std::string* a,
                                       const std::string* b) { return *a < *b; });
    for (const auto* f : fs)
      out << *w << '\t' << *f << '\t' << feats.at(*f) << '\n';
  }
  write_file(tsv_path, out.str());

  nlohmann::json meta = extra_meta;
  meta["total"] = fc.total;
  meta["window"] = fc.window;
  meta["policy"] = policy_json(fc);
  meta["has_pos"] = fc.has_pos;
  std::vector<std::string> nouns(fc.noun_targets.begin(), fc.noun_targets.end());
  std::sort(nouns.begin(), nouns.end());
  meta["noun_targets"] = nouns;
  meta["counts_digest"] = digest_file(tsv_path);
  write_file(meta_path, meta.dump(2) + "\n");
}

FeatureCounts load_feature_counts(const std::filesystem::path& tsv_path,
                                  const std::filesystem::path& meta_path) {
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(read_file(meta_path));
  } catch (const nlohmann::json::exception& e) {
    throw DataError("bad metadata JSON " + meta_path.string() + ": " + e.what());
  }
  FeatureCounts fc;
  fc.window = meta.at("window").get<std::size_t>();
  fc.has_pos = meta.at("has_pos").get<bool>();
  for (const auto& w : meta.at("noun_targets"))
    fc.noun_targets.insert(w.get<std::string>());

  std::istringstream in(read_file(tsv_path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_tsv(line, 3, tsv_path, line_no);
    const std::uint64_t c = std::stoull(fields[2]);
    fc.pair_count[fields[0]][fields[1]] += c;
    fc.word_marginal[fields[0]] += c;
    fc.feature_marginal[fields[1]] += c;
    fc.total += c;
  }
  if (fc.total != meta.at("total").get<std::uint64_t>())
    throw DataError("counts TSV total disagrees with metadata: " +
                    tsv_path.string());
  return fc;
}

void save_dt(const DTNetwork& dt, const std::filesystem::path& tsv_path,
             const std::filesystem::path& meta_path,
             const nlohmann::json& extra_meta) {
  std::ostringstream out;
  for (const auto& [w, list] : dt.neighbors)
    for (const auto& nb : list)
      out << w << '\t' << nb.word << '\t' << format_double(nb.score) << '\n';
  write_file(tsv_path, out.str());

  nlohmann::json meta = extra_meta;
  meta["features_per_word"] = dt.params.features_per_word;
  meta["neighbors_per_word"] = dt.params.neighbors_per_word;
  meta["min_marginal"] = dt.params.min_marginal;
  meta["has_pos"] = dt.has_pos;
  meta["noun_targets"] =
      std::vector<std::string>(dt.noun_targets.begin(), dt.noun_targets.end());
  meta["dt_digest"] = digest_file(tsv_path);
  write_file(meta_path, meta.dump(2) + "\n");
}

DTNetwork load_dt(const std::filesystem::path& tsv_path,
                  const std::filesystem::path& meta_path) {
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(read_file(meta_path));
  } catch (const nlohmann::json::exception& e) {
    throw DataError("bad metadata JSON " + meta_path.string() + ": " + e.what());
  }
  DTNetwork dt;
  dt.params.features_per_word = meta.at("features_per_word").get<std::size_t>();
  dt.params.neighbors_per_word =
      meta.at("neighbors_per_word").get<std::size_t>();
  dt.params.min_marginal = meta.at("min_marginal").get<std::uint64_t>();
  dt.has_pos = meta.at("has_pos").get<bool>();
  for (const auto& w : meta.at("noun_targets"))
    dt.noun_targets.insert(w.get<std::string>());

  std::istringstream in(read_file(tsv_path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_tsv(line, 3, tsv_path, line_no);
    dt.neighbors[fields[0]].push_back(
        Neighbor{fields[1], std::strtod(fields[2].c_str(), nullptr)});
  }
  return dt;
}

nlohmann::json cluster_set_to_json(const SenseClusterSet& set) {
  nlohmann::json clusters = nlohmann::json::array();
  for (const auto& c : set.clusters)
    clusters.push_back(nlohmann::json{{"id", c.id}, {"members", c.members}});
  return nlohmann::json{{"word", set.word},
                        {"corpus_id", set.corpus_id},
                        {"clusters", std::move(clusters)}};
}

SenseClusterSet cluster_set_from_json(const nlohmann::json& j) {
  SenseClusterSet set;
  set.word = j.at("word").get<std::string>();
  set.corpus_id = j.at("corpus_id").get<std::string>();
  for (const auto& cj : j.at("clusters")) {
    SenseCluster c;
    c.id = cj.at("id").get<int>();
    for (const auto& m : cj.at("members")) c.members.push_back(m);
    set.clusters.push_back(std::move(c));
  }
  return set;
}

void save_topic_model(const TopicModel& model,
                      const std::filesystem::path& json_path,
                      const std::filesystem::path& tsv_path) {
  std::ostringstream tsv;
  for (std::size_t k = 0; k < model.topics.size(); ++k)
    for (std::size_t w = 0; w < model.vocab.size(); ++w)
      tsv << k << '\t' << model.vocab[w] << '\t'
          << format_double(model.topics[k].word_probs[w]) << '\n';
  write_file(tsv_path, tsv.str());

  nlohmann::json topics = nlohmann::json::array();
  for (std::size_t k = 0; k < model.topics.size(); ++k) {
    nlohmann::json top = nlohmann::json::array();
    for (const auto& [w, p] : model.top_words(k, 20))
      top.push_back(nlohmann::json{{"word", w}, {"prob", p}});
    topics.push_back(nlohmann::json{
        {"weight", model.topics[k].weight},
        {"top_words", std::move(top)},
        {"full_distribution_ref",
         tsv_path.filename().string() + "#" + std::to_string(k)}});
  }
  nlohmann::json j{{"word", model.word},
                   {"corpus_id", model.corpus_id},
                   {"seed", model.seed},
                   {"iterations", model.iterations},
                   {"topics", std::move(topics)}};
  write_file(json_path, j.dump(2) + "\n");
}

TopicModel load_topic_model(const std::filesystem::path& json_path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(json_path));
  } catch (const nlohmann::json::exception& e) {
    throw DataError("bad topic model JSON " + json_path.string() + ": " +
                    e.what());
  }
  TopicModel model;
  model.word = j.at("word").get<std::string>();
  model.corpus_id = j.at("corpus_id").get<std::string>();
  model.seed = j.at("seed").get<std::uint64_t>();
  model.iterations = j.at("iterations").get<int>();
  const auto& topics = j.at("topics");
  if (topics.empty())
    throw DataError("topic model has no topics: " + json_path.string());

  const std::string ref =
      topics.front().at("full_distribution_ref").get<std::string>();
  const auto hash = ref.find('#');
  const std::filesystem::path tsv_path =
      json_path.parent_path() / ref.substr(0, hash);

  // First pass collects the vocabulary, second fills the distributions.
  std::vector<std::vector<std::pair<std::string, double>>> rows(topics.size());
  std::istringstream in(read_file(tsv_path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_tsv(line, 3, tsv_path, line_no);
    const std::size_t k = std::stoul(fields[0]);
    if (k >= rows.size())
      throw DataError("topic index out of range in " + tsv_path.string());
    rows[k].emplace_back(fields[1],
                         std::strtod(fields[2].c_str(), nullptr));
    if (k == 0) model.vocab.push_back(fields[1]);
  }
  if (!std::is_sorted(model.vocab.begin(), model.vocab.end()))
    throw DataError("topic model vocabulary not sorted: " + tsv_path.string());

  for (std::size_t k = 0; k < topics.size(); ++k) {
    Topic t;
    t.weight = topics[k].at("weight").get<double>();
    if (rows[k].size() != model.vocab.size())
      throw DataError("topic distribution length mismatch in " +
                      tsv_path.string());
    t.word_probs.reserve(rows[k].size());
    for (std::size_t w = 0; w < rows[k].size(); ++w) {
      if (rows[k][w].first != model.vocab[w])
        throw DataError("topic rows disagree on vocabulary in " +
                        tsv_path.string());
      t.word_probs.push_back(rows[k][w].second);
    }
    model.topics.push_back(std::move(t));
  }
  return model;
}

void save_ic_table(const ICTable& table, const std::filesystem::path& path) {
  std::vector<std::pair<std::string, double>> rows(table.ic.begin(),
                                                   table.ic.end());
  std::sort(rows.begin(), rows.end());
  std::ostringstream out;
  for (const auto& [id, ic] : rows)
    out << id << '\t' << format_double(ic) << '\n';
  write_file(path, out.str());
}

}  // namespace sensediff
