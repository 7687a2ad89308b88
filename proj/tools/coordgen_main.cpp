// Command-line front end: aggregate | expand | check.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coordgen/errors.hpp"
#include "coordgen/fuzz.hpp"
#include "coordgen/oracle.hpp"
#include "coordgen/pipeline.hpp"

namespace {

struct Options {
  std::string input_path;
  std::string lexicon_path;
  coordgen::PipelineConfig config;
  bool annotate = false;
  bool trace = false;
  std::string format = "text";
  int random_cases = 0;
  uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw coordgen::ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void add_common_flags(CLI::App* cmd, Options& opt, bool input_required) {
  cmd->add_option("--input", opt.input_path, "propositions (JSON array)")
      ->required(input_required);
  cmd->add_option("--lexicon", opt.lexicon_path, "lexicon (JSON array)")
      ->required(input_required);
  cmd->add_option("--max-md", opt.config.thresholds.max_multi_distinct,
                  "max conjuncts per multiple-distinct coordination")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-props", opt.config.thresholds.max_props_per_sentence,
                  "max propositions per sentence")
      ->check(CLI::PositiveNumber);
  cmd->add_flag_callback(
      "--no-parallel-override",
      [&opt] { opt.config.thresholds.parallel_override = false; },
      "never exceed --max-md, even for parallel structures");
  cmd->add_flag("--front-time", opt.config.layout.front_time,
                "realize MOD-TIME as a fronted adverbial");
  cmd->add_flag("--front-place", opt.config.layout.front_place,
                "realize MOD-PLACE as a fronted adverbial");
}

coordgen::PipelineResult run(const Options& opt, const coordgen::Lexicon& lex) {
  auto props = coordgen::parse_propositions(read_file(opt.input_path));
  return coordgen::run_pipeline(std::move(props), lex, opt.config);
}

int cmd_aggregate(const Options& opt) {
  coordgen::Lexicon lex = coordgen::Lexicon::from_file(opt.lexicon_path);
  coordgen::PipelineResult result = run(opt, lex);
  if (opt.format == "json") {
    std::cout << coordgen::trace_json(result).dump(2) << "\n";
    return 0;
  }
  for (const auto& s : result.sentences)
    std::cout << (opt.annotate ? s.annotated : s.text) << "\n";
  if (opt.trace) {
    nlohmann::json t = coordgen::trace_json(result);
    std::cerr << "nde: " << t["nde"].dump() << "\n"
              << "order: " << t["order"].dump() << "\n"
              << "mergeLog: " << t["mergeLog"].dump() << "\n";
  }
  return 0;
}

int cmd_expand(const Options& opt) {
  coordgen::Lexicon lex = coordgen::Lexicon::from_file(opt.lexicon_path);
  coordgen::PipelineResult result = run(opt, lex);
  std::vector<std::string> clauses;
  for (const auto& u : result.plan.units)
    for (auto& c : coordgen::expand_unit(u, lex, opt.config.layout))
      clauses.push_back(std::move(c));
  if (opt.format == "json") {
    nlohmann::json j;
    j["clauses"] = clauses;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& c : clauses) std::cout << c << "\n";
  return 0;
}

int cmd_check(const Options& opt) {
  if (opt.random_cases > 0) {
    auto failures = coordgen::run_fuzz(opt.seed, opt.random_cases);
    for (const auto& f : failures)
      std::cerr << "case " << f.case_index << ": " << f.what << "\n  "
                << f.detail << "\n";
    std::cout << (opt.random_cases - static_cast<int>(failures.size())) << "/"
              << opt.random_cases << " random cases equivalent\n";
    return failures.empty() ? 0 : 1;
  }
  coordgen::Lexicon lex = coordgen::Lexicon::from_file(opt.lexicon_path);
  coordgen::PipelineResult result = run(opt, lex);
  coordgen::EquivalenceReport report = coordgen::check_equivalence(
      result.input, result.plan.units, lex, opt.config.layout);
  if (report.pass) return 0;
  for (const auto& s : report.missing) std::cerr << "missing: " << s << "\n";
  for (const auto& s : report.unexpected)
    std::cerr << "unexpected: " << s << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clause aggregation with coordination, ellipsis and gapping"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* aggregate =
      app.add_subcommand("aggregate", "plan and realize sentences");
  add_common_flags(aggregate, opt, true);
  aggregate->add_flag("--annotate", opt.annotate,
                      "keep deleted material as [bracketed] text");
  aggregate->add_flag("--trace", opt.trace, "print per-stage trace to stderr");
  aggregate->add_option("--format", opt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* expand = app.add_subcommand(
      "expand", "print the clause set the aggregated output stands for");
  add_common_flags(expand, opt, true);
  expand->add_option("--format", opt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* check = app.add_subcommand(
      "check", "verify aggregated output against per-clause realization");
  add_common_flags(check, opt, false);
  check->add_option("--random", opt.random_cases,
                    "run N random end-to-end equivalence cases");
  check->add_option("--seed", opt.seed, "random generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(aggregate)) return cmd_aggregate(opt);
    if (app.got_subcommand(expand)) return cmd_expand(opt);
    if (app.got_subcommand(check)) {
      if (opt.random_cases == 0 &&
          (opt.input_path.empty() || opt.lexicon_path.empty())) {
        std::cerr << "check needs --input and --lexicon, or --random N\n";
        return 2;
      }
      return cmd_check(opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
