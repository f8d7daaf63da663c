// SPDX-License-Identifier: Apache-2.0
//
// affsemi: freeness certificates and relation witnesses for semigroups of
// affine maps x -> a x + b.
//
// Exit codes: 0 definitive answer, 2 inconclusive, 1 error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "affsemi/figure.hpp"
#include "affsemi/report.hpp"
#include "affsemi/system_io.hpp"

namespace {

using namespace affsemi;

constexpr int kExitError = 1;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

struct Settings {
  std::string input = "-";
  std::uint64_t max_depth = 10;
  std::uint64_t state_cap = 1'000'000;
  bool all = false;
  bool strict = false;
  bool timings = false;
  unsigned threads = 0;
  std::string seed = "1";
  std::vector<std::uint64_t> orbit_bounds{1000};
  bool emit_elements = false;
  std::string output;

  unsigned worker_count() const { return threads ? threads : std::max(1u, std::thread::hardware_concurrency()); }
};

Json header(const std::string& command, const SystemFile& file) {
  Json doc;
  doc["command"] = command;
  doc["input"] = input_json(file.system, file.name);
  return doc;
}

int run_analyze(const Settings& s, const SystemFile& file) {
  AnalyzeOptions opt;
  opt.max_depth = s.max_depth;
  opt.state_cap = s.state_cap;
  opt.all = s.all;
  opt.strict_paper_bound = s.strict;
  opt.timings = s.timings;
  opt.threads = s.worker_count();
  const auto result = analyze(file.system, opt, file.name);
  emit(result.document);
  return exit_code(result.outcome);
}

int run_certify_t1(const SystemFile& file) {
  const auto cert = certify_theorem1(file.system);
  Json doc = header("certify-t1", file);
  doc["certificate"] = to_json(cert);
  emit(doc);
  return cert.verdict == Verdict::FreeTheorem1 ? 0 : 2;
}

int run_certify_t2(const SystemFile& file) {
  if (file.system.size() != 2) throw Error(ErrorCode::InvalidArgument, "certify-t2 needs exactly two maps");
  const auto cert = certify_theorem2(file.system.maps()[0], file.system.maps()[1]);
  Json doc = header("certify-t2", file);
  doc["certificate"] = to_json(cert);
  emit(doc);
  return cert.verdict == Verdict::Inconclusive ? 2 : 0;
}

int run_search(const Settings& s, const SystemFile& file) {
  const auto report = search_relation(file.system, SearchOptions{s.max_depth, s.state_cap, s.worker_count()});
  Json doc = header("search", file);
  doc["max_depth"] = s.max_depth;
  doc["state_cap"] = s.state_cap;
  doc["search"] = to_json(report);
  emit(doc);
  return report.relation ? 0 : 2;
}

int run_bound(const Settings& s, const SystemFile& file) {
  Json doc = header("bound", file);
  doc["bound"] = bound_json(file.system, s.strict);
  const bool applies = doc["bound"]["applies"].get<bool>();
  emit(doc);
  return applies ? 0 : 2;
}

int run_orbit(const Settings& s, const SystemFile& file) {
  const Scalar seed = parse_scalar(s.seed, file.system.basis());
  const auto series = density_series(file.system, seed, s.orbit_bounds, s.emit_elements);
  Json doc = header("orbit", file);
  doc["label"] = "empirical, finite-range";
  doc["reports"] = Json::array();
  for (const auto& r : series) doc["reports"].push_back(to_json(r));
  emit(doc);
  return 0;
}

int run_plot(const Settings& s, const SystemFile& file) {
  const std::string svg = plot_figure(file.system);
  if (s.output.empty() || s.output == "-") {
    std::cout << svg;
  } else {
    std::ofstream out(s.output, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + s.output);
    out << svg;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Freeness certificates and relation search for semigroups of affine maps x -> a x + b.\n"
               "Words (i1,...,ik) denote f_i1 o ... o f_ik: the rightmost map is applied first."};
  app.require_subcommand(1);
  Settings s;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", s.input, "System file ('-' for stdin)")->required();
  };
  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--max-depth", s.max_depth, "Longest word length to enumerate")->capture_default_str();
    cmd->add_option("--state-cap", s.state_cap, "Maximum number of stored composites")->capture_default_str();
    cmd->add_option("--threads", s.threads, "Worker threads (0 = hardware concurrency)");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Run the certificate cascade");
  add_input(analyze_cmd);
  add_search(analyze_cmd);
  analyze_cmd->add_flag("--all", s.all, "Run every analysis");
  analyze_cmd->add_flag("--strict-paper-bound", s.strict, "Also report the unguarded counting bound");
  analyze_cmd->add_flag("--timings", s.timings, "Include timings (output no longer byte-stable)");

  auto* t1_cmd = app.add_subcommand("certify-t1", "Sorted fixed points and gap inequality");
  add_input(t1_cmd);
  auto* t2_cmd = app.add_subcommand("certify-t2", "Two-generator test (slopes > 1)");
  add_input(t2_cmd);

  auto* search_cmd = app.add_subcommand("search", "Breadth-first relation search");
  add_input(search_cmd);
  add_search(search_cmd);

  auto* bound_cmd = app.add_subcommand("bound", "Counting criterion and guaranteed relation depth");
  add_input(bound_cmd);
  bound_cmd->add_flag("--strict-paper-bound", s.strict, "Also report the unguarded counting bound");

  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit counts |orbit ∩ [1, N]| / N");
  add_input(orbit_cmd);
  orbit_cmd->add_option("--seed", s.seed, "Seed point (scalar grammar)")->capture_default_str();
  orbit_cmd->add_option("--orbit-bounds", s.orbit_bounds, "Strictly increasing bounds N")->delimiter(',');
  orbit_cmd->add_flag("--emit-elements", s.emit_elements, "List the orbit elements");

  auto* plot_cmd = app.add_subcommand("plot", "SVG of the inverse maps and ping-pong intervals");
  add_input(plot_cmd);
  plot_cmd->add_option("-o,--output", s.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    const SystemFile file = parse_system_file(read_input(s.input));
    if (*analyze_cmd) return run_analyze(s, file);
    if (*t1_cmd) return run_certify_t1(file);
    if (*t2_cmd) return run_certify_t2(file);
    if (*search_cmd) return run_search(s, file);
    if (*bound_cmd) return run_bound(s, file);
    if (*orbit_cmd) return run_orbit(s, file);
    if (*plot_cmd) return run_plot(s, file);
  } catch (const Error& e) {
    std::cerr << "affsemi: " << e.what() << "\n";
    Json doc;
    doc["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.message()}};
    emit(doc);
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "affsemi: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
