#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "sensediff/corpus.hpp"
#include "sensediff/dtnet.hpp"
#include "sensediff/topics.hpp"

namespace sensediff {

// Everything one run needs, loaded from a `key = value` file. Paths are
// resolved relative to the config file's directory. All seeds are explicit.
struct RunConfig {
  std::filesystem::path corpus_a;
  std::filesystem::path corpus_b;
  std::string label_a = "a";
  std::string label_b = "b";
  std::filesystem::path out_dir = "out";
  std::filesystem::path inventory;  // optional; required for mccarthy

  NormPolicy policy;
  std::size_t window = 3;
  DtParams dt;
  std::size_t ego_size = 200;

  int cw_runs = 5;
  double cw_min_agree = 0.5;
  int cw_max_iter = 50;
  std::uint64_t seed = 1;

  double mitra_threshold = 0.8;
  std::size_t mitra_min_size = 10;

  double mccarthy_upper = 0.4;
  double mccarthy_lower = 0.1;
  std::size_t top_m = 20;

  std::size_t context_window = 5;
  HdpHyper lau;
  int lau_iters = 1000;
  double lau_threshold = 0.35;
  std::uint64_t lau_seed = 7;

  std::size_t workers = 1;

  static RunConfig load(const std::filesystem::path& path);
  void validate() const;  // throws ConfigError naming the offending field
};

}  // namespace sensediff
