#include "sensediff/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sensediff/config.hpp"
#include "sensediff/io.hpp"
#include "sensediff/pipeline.hpp"
#include "sensediff/wordnet_import.hpp"

namespace sensediff {

namespace {

std::vector<std::string> read_words_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open words file: " + path);
  std::vector<std::string> words;
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  std::string words_file;
  std::uint64_t seed = 0;
  bool seed_set = false;

  RunConfig load() const {
    RunConfig config = RunConfig::load(config_path);
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (seed_set) {
      config.seed = seed;
      config.lau_seed = seed;
    }
    return config;
  }

  std::vector<std::string> words() const {
    return words_file.empty() ? std::vector<std::string>{}
                              : read_words_file(words_file);
  }
};

void add_common(CLI::App* cmd, CommonOpts* opts, bool with_words = true) {
  cmd->add_option("--config", opts->config_path, "run configuration file")
      ->required();
  cmd->add_option("--out", opts->out_dir, "output directory (overrides config)");
  if (with_words)
    cmd->add_option("--words-file", opts->words_file,
                    "whitespace-separated target words");
  cmd->add_option("--seed", opts->seed, "override the configured seeds")
      ->each([opts](const std::string&) { opts->seed_set = true; });
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"sensediff: find word senses specific to one of two corpora"};
  app.require_subcommand(1);

  CommonOpts build_opts;
  auto* build_cmd = app.add_subcommand(
      "build", "ingest both corpora and build counts + DT networks");
  add_common(build_cmd, &build_opts, false);

  CommonOpts compare_opts;
  std::string method = "all";
  bool all_words = false;
  auto* compare_cmd = app.add_subcommand(
      "compare", "flag corpus-specific senses with one or all methods");
  add_common(compare_cmd, &compare_opts);
  compare_cmd->add_option("--method", method, "mitra | mccarthy | lau | all")
      ->check(CLI::IsMember({"mitra", "mccarthy", "lau", "all"}));
  compare_cmd->add_flag("--all-words", all_words,
                        "run lau on every shared word, not just mitra's");

  CommonOpts sweep_opts;
  std::string sweep_method;
  std::vector<double> lau_grid{0.30, 0.35, 0.40};
  std::vector<double> upper_grid{0.45, 0.40, 0.35};
  std::vector<double> lower_grid{0.05, 0.10, 0.15};
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "count candidates across a threshold grid");
  add_common(sweep_cmd, &sweep_opts);
  sweep_cmd->add_option("--method", sweep_method, "lau | mccarthy")
      ->required()
      ->check(CLI::IsMember({"lau", "mccarthy"}));
  sweep_cmd->add_option("--grid", lau_grid, "lau thresholds");
  sweep_cmd->add_option("--upper-grid", upper_grid, "mccarthy upper thresholds");
  sweep_cmd->add_option("--lower-grid", lower_grid, "mccarthy lower thresholds");

  std::string responses_path, eval_out;
  auto* eval_cmd = app.add_subcommand(
      "eval", "score an annotation responses CSV into a report");
  eval_cmd->add_option("--responses", responses_path, "responses CSV")
      ->required();
  eval_cmd->add_option("--out", eval_out, "write the report JSON here");

  std::string report_dir, report_out;
  auto* report_cmd = app.add_subcommand(
      "export-report", "summarize candidates.jsonl into a counts report");
  report_cmd->add_option("--dir", report_dir, "output directory of a compare run")
      ->required();

  std::vector<std::string> wn_data;
  std::string wn_out;
  auto* import_cmd = app.add_subcommand(
      "import-wordnet", "convert WordNet data.* files to inventory JSON");
  import_cmd->add_option("--data", wn_data, "WordNet data files (data.noun ...)")
      ->required();
  import_cmd->add_option("--out", wn_out, "inventory JSON output path")
      ->required();

  std::vector<const char*> argv;
  argv.push_back("sensediff");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
    }

    if (build_cmd->parsed()) {
      pipeline::build(build_opts.load());
      std::cout << "built artifacts under " << build_opts.load().out_dir.string()
                << "\n";
    } else if (compare_cmd->parsed()) {
      const RunConfig config = compare_opts.load();
      const auto result =
          pipeline::compare(config, method, compare_opts.words(), all_words);
      std::cout << result.summary.dump(2) << "\n";
    } else if (sweep_cmd->parsed()) {
      const RunConfig config = sweep_opts.load();
      const auto report = pipeline::sweep(config, sweep_method,
                                          sweep_opts.words(), lau_grid,
                                          upper_grid, lower_grid);
      std::cout << report.dump(2) << "\n";
    } else if (eval_cmd->parsed()) {
      const auto report = pipeline::eval(responses_path);
      if (!eval_out.empty()) write_file(eval_out, report.dump(2) + "\n");
      std::cout << report.dump(2) << "\n";
    } else if (report_cmd->parsed()) {
      const auto report = pipeline::export_report(report_dir);
      std::cout << report.dump(2) << "\n";
    } else if (import_cmd->parsed()) {
      const auto inventory = wordnet_to_inventory_json(wn_data);
      write_file(wn_out, inventory.dump(2) + "\n");
      std::cout << "wrote " << inventory["synsets"].size() << " synsets to "
                << wn_out << "\n";
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace sensediff
