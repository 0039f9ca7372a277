#include "sensediff/config.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sensediff {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

class KeyValues {
 public:
  KeyValues(std::istream& in, const std::filesystem::path& origin)
      : origin_(origin) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      const std::string t = trim(line);
      if (t.empty()) continue;
      const auto eq = t.find('=');
      if (eq == std::string::npos)
        throw ConfigError(origin_.string() + ":" + std::to_string(line_no) +
                          ": expected `key = value`");
      const std::string key = trim(t.substr(0, eq));
      const std::string value = trim(t.substr(eq + 1));
      if (key.empty())
        throw ConfigError(origin_.string() + ":" + std::to_string(line_no) +
                          ": empty key");
      values_[key] = value;
    }
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string str(const std::string& key, const std::string& fallback) {
    mark(key);
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  std::filesystem::path path(const std::string& key,
                             const std::filesystem::path& fallback) {
    mark(key);
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::filesystem::path p = it->second;
    if (p.is_relative() && origin_.has_parent_path())
      p = origin_.parent_path() / p;
    return p;
  }

  template <typename T>
  T number(const std::string& key, T fallback) {
    mark(key);
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::istringstream ss(it->second);
    T out;
    ss >> out;
    if (ss.fail() || !ss.eof())
      throw ConfigError("config field '" + key + "': bad number '" +
                        it->second + "'");
    return out;
  }

  bool boolean(const std::string& key, bool fallback) {
    mark(key);
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw ConfigError("config field '" + key + "': expected true or false");
  }

  void check_unknown() const {
    for (const auto& [key, value] : values_)
      if (!used_.count(key))
        throw ConfigError("unknown config field '" + key + "'");
  }

 private:
  void mark(const std::string& key) { used_.insert(key); }

  std::filesystem::path origin_;
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

}  // namespace

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  KeyValues kv(in, path);

  RunConfig c;
  c.corpus_a = kv.path("corpus_a", "");
  c.corpus_b = kv.path("corpus_b", "");
  c.label_a = kv.str("label_a", c.label_a);
  c.label_b = kv.str("label_b", c.label_b);
  c.out_dir = kv.path("out_dir", c.out_dir);
  c.inventory = kv.path("inventory", "");

  c.policy.fold_case = kv.boolean("fold_case", c.policy.fold_case);
  c.policy.strip_punct = kv.boolean("strip_punct", c.policy.strip_punct);
  c.policy.min_token_len =
      kv.number<std::size_t>("min_token_len", c.policy.min_token_len);
  c.policy.pos_tagged = kv.boolean("pos_tagged", c.policy.pos_tagged);
  c.window = kv.number<std::size_t>("window", c.window);

  c.dt.features_per_word =
      kv.number<std::size_t>("dt_features", c.dt.features_per_word);
  c.dt.neighbors_per_word =
      kv.number<std::size_t>("dt_neighbors", c.dt.neighbors_per_word);
  c.dt.min_marginal = kv.number<std::uint64_t>("min_marginal", c.dt.min_marginal);
  c.ego_size = kv.number<std::size_t>("ego_size", c.ego_size);

  c.cw_runs = kv.number<int>("cw_runs", c.cw_runs);
  c.cw_min_agree = kv.number<double>("cw_min_agree", c.cw_min_agree);
  c.cw_max_iter = kv.number<int>("cw_max_iter", c.cw_max_iter);
  c.seed = kv.number<std::uint64_t>("seed", c.seed);

  c.mitra_threshold = kv.number<double>("mitra_threshold", c.mitra_threshold);
  c.mitra_min_size = kv.number<std::size_t>("mitra_min_size", c.mitra_min_size);

  c.mccarthy_upper = kv.number<double>("mccarthy_upper", c.mccarthy_upper);
  c.mccarthy_lower = kv.number<double>("mccarthy_lower", c.mccarthy_lower);
  c.top_m = kv.number<std::size_t>("top_m", c.top_m);

  c.context_window = kv.number<std::size_t>("context_window", c.context_window);
  c.lau.gamma = kv.number<double>("lau_gamma", c.lau.gamma);
  c.lau.alpha0 = kv.number<double>("lau_alpha0", c.lau.alpha0);
  c.lau.beta = kv.number<double>("lau_beta", c.lau.beta);
  c.lau_iters = kv.number<int>("lau_iters", c.lau_iters);
  c.lau_threshold = kv.number<double>("lau_threshold", c.lau_threshold);
  c.lau_seed = kv.number<std::uint64_t>("lau_seed", c.lau_seed);

  c.workers = kv.number<std::size_t>("workers", c.workers);

  kv.check_unknown();
  c.validate();
  return c;
}

void RunConfig::validate() const {
  auto in01 = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (corpus_a.empty()) throw ConfigError("missing config field 'corpus_a'");
  if (corpus_b.empty()) throw ConfigError("missing config field 'corpus_b'");
  if (label_a == label_b)
    throw ConfigError("config fields 'label_a' and 'label_b' must differ");
  if (window < 1) throw ConfigError("config field 'window' must be >= 1");
  if (dt.features_per_word < 1)
    throw ConfigError("config field 'dt_features' must be >= 1");
  if (dt.neighbors_per_word < 1)
    throw ConfigError("config field 'dt_neighbors' must be >= 1");
  if (ego_size < 2) throw ConfigError("config field 'ego_size' must be >= 2");
  if (cw_runs < 3 || cw_runs % 2 == 0)
    throw ConfigError("config field 'cw_runs' must be odd and >= 3");
  if (!in01(cw_min_agree))
    throw ConfigError("config field 'cw_min_agree' must lie in [0,1]");
  if (cw_max_iter < 1)
    throw ConfigError("config field 'cw_max_iter' must be >= 1");
  if (!in01(mitra_threshold))
    throw ConfigError("config field 'mitra_threshold' must lie in [0,1]");
  if (!in01(mccarthy_upper) || !in01(mccarthy_lower) ||
      mccarthy_lower >= mccarthy_upper)
    throw ConfigError(
        "config fields 'mccarthy_lower' < 'mccarthy_upper' must lie in [0,1]");
  if (context_window < 1)
    throw ConfigError("config field 'context_window' must be >= 1");
  if (lau.gamma <= 0.0 || lau.alpha0 <= 0.0 || lau.beta <= 0.0)
    throw ConfigError("config fields 'lau_gamma', 'lau_alpha0', 'lau_beta' "
                      "must be positive");
  if (lau_iters < 1) throw ConfigError("config field 'lau_iters' must be >= 1");
  if (!in01(lau_threshold))
    throw ConfigError("config field 'lau_threshold' must lie in [0,1]");
  if (workers < 1) throw ConfigError("config field 'workers' must be >= 1");
}

}  // namespace sensediff
