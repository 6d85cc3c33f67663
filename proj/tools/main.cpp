#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dtcell/error.hpp"
#include "report.hpp"

using namespace dtcell;
using report::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNonReduced = 3;
constexpr int kExitCheckFailed = 4;

struct RunConfig {
  std::string command;
  int n = 0;
  std::optional<std::string> letters;
  std::string u, v;
  std::optional<std::string> to;
  std::string format = "json";
  std::uint64_t seed = 2024;
  int specializations = 3;
  bool all_pairs = false;
  bool boundary_removed = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_input_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--n", cfg.n, "Rank of GL_n")->required()->check(CLI::Range(1, 9));
  app->add_option("--letters", cfg.letters, "Comma-separated signed letters, e.g. -1,2");
  app->add_option("--u", cfg.u, "Permutation u in one-line notation, e.g. 321");
  app->add_option("--v", cfg.v, "Permutation v in one-line notation");
  app->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
}

void add_check_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--seed", cfg.seed, "Seed for the specialization points");
  app->add_option("--specializations", cfg.specializations,
                  "Number of rational points; 0 checks symbolically")
      ->check(CLI::NonNegativeNumber);
  app->add_flag("--all-pairs", cfg.all_pairs, "Run on the greedy word of every pair (u, v)");
}

weyl::Permutation parse_permutation(const std::string& text, int n) {
  if (static_cast<int>(text.size()) != n)
    throw UsageError("permutation '" + text + "' must have " + std::to_string(n) + " digits");
  return weyl::Permutation::from_one_line(text);
}

// Exactly one of --letters and the pair --u/--v.
weyl::SignedWord resolve_word(const RunConfig& cfg) {
  const bool pair = !cfg.u.empty() || !cfg.v.empty();
  if (cfg.letters && pair) throw UsageError("give either --letters or --u/--v, not both");
  if (cfg.letters) return weyl::SignedWord(cfg.n, weyl::parse_letters(*cfg.letters));
  if (cfg.u.empty() || cfg.v.empty()) throw UsageError("an input word needs --letters or both --u and --v");
  return weyl::greedy_pair_word(parse_permutation(cfg.u, cfg.n), parse_permutation(cfg.v, cfg.n));
}

void require_json(const RunConfig& cfg) {
  if (cfg.format != "json") throw UsageError("command '" + cfg.command + "' only supports --format json");
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// Applies `body` to the greedy word of every pair in S_n x S_n on all
// hardware threads, keeping the pair order.
std::vector<json> for_all_pairs(int n, const std::function<json(const weyl::SignedWord&)>& body) {
  std::vector<weyl::SignedWord> words;
  for (const auto& u : weyl::all_permutations(n))
    for (const auto& v : weyl::all_permutations(n)) words.push_back(weyl::greedy_pair_word(u, v));
  std::vector<json> results(words.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < words.size(); k = next++) results[k] = body(words[k]);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), words.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

int run(const RunConfig& cfg) {
  const auto& c = cfg.command;
  if (c == "word greedy") {
    require_json(cfg);
    std::cout << json(resolve_word(cfg).letters()).dump() << "\n";
    return 0;
  }
  if (c == "word validate") {
    require_json(cfg);
    if (!cfg.letters) throw UsageError("word validate needs --letters");
    auto out = report::validate_json(cfg.n, weyl::parse_letters(*cfg.letters));
    print(out);
    return out["reduced"].get<bool>() ? 0 : kExitNonReduced;
  }
  if (c == "word moves") {
    require_json(cfg);
    auto w = resolve_word(cfg);
    if (!cfg.to) {
      print(report::moves_json(w));
      return 0;
    }
    auto out = report::move_path_json(w, weyl::SignedWord(cfg.n, weyl::parse_letters(*cfg.to)));
    print(out);
    return out["moves"].is_null() ? kExitCheckFailed : 0;
  }
  if (c == "graph") {
    auto g = plabic::build_graph(resolve_word(cfg));
    if (cfg.format == "dot") std::cout << report::graph_dot(g);
    else print(report::graph_json(g));
    return 0;
  }
  if (c == "quiver") {
    auto w = resolve_word(cfg);
    auto q = plabic::build_quivers(plabic::build_graph(w));
    const Seed& s = cfg.boundary_removed ? q.reduced : q.full;
    if (cfg.format == "dot") std::cout << report::quiver_dot(s);
    else print(report::quiver_json(w, s, cfg.boundary_removed));
    return 0;
  }
  if (c == "amalgamate") {
    require_json(cfg);
    print(report::amalgamation_json(resolve_word(cfg)));
    return 0;
  }
  if (c == "minors") {
    require_json(cfg);
    print(report::minors_json(resolve_word(cfg)));
    return 0;
  }

  require_json(cfg);
  std::function<json(const weyl::SignedWord&)> body;
  if (c == "dt check") {
    const report::CheckOptions opts{cfg.seed, cfg.specializations};
    body = [opts](const weyl::SignedWord& w) { return report::dt_report(w, opts); };
  } else if (c == "dt sequence") {
    body = report::sequence_json;
  } else if (c == "dt closed-form") {
    body = report::closed_form_json;
  } else {
    throw UsageError("unknown command '" + c + "'");
  }
  if (!cfg.all_pairs) {
    auto out = body(resolve_word(cfg));
    print(out);
    return out.value("pass", true) ? 0 : kExitCheckFailed;
  }
  if (cfg.letters || !cfg.u.empty() || !cfg.v.empty()) throw UsageError("--all-pairs takes no input word");
  auto results = for_all_pairs(cfg.n, body);
  bool pass = true;
  for (const auto& r : results) pass = pass && r.value("pass", true);
  print(json{{"schema_version", report::kSchemaVersion},
             {"n", cfg.n},
             {"seed", cfg.seed},
             {"pass", pass},
             {"reports", results}});
  return pass ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Donaldson-Thomas transformations of double Bruhat cells of GL_n"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& command) {
    auto* sub = parent->add_subcommand(name, help);
    add_input_options(sub, cfg);
    sub->callback([&cfg, command] { cfg.command = command; });
    return sub;
  };

  auto* word = app.add_subcommand("word", "Reduced words of (u, v)");
  word->require_subcommand(1);
  leaf(word, "greedy", "Greedy reduced word of (u, v)", "word greedy");
  leaf(word, "validate", "Check that a letter sequence is a reduced word", "word validate");
  auto* moves = leaf(word, "moves", "Applicable moves, or a move path to --to", "word moves");
  moves->add_option("--to", cfg.to, "Target word for a move path");

  leaf(&app, "graph", "Bipartite graph: faces, minor labels, strands", "graph");
  auto* quiver = leaf(&app, "quiver", "Quiver of the face minors", "quiver");
  quiver->add_flag("--boundary-removed", cfg.boundary_removed, "Drop the boundary faces");
  leaf(&app, "amalgamate", "Amalgamation matrix in symbolic face variables", "amalgamate");
  leaf(&app, "minors", "Face minors of the symbolic amalgamation", "minors");

  auto* dt = app.add_subcommand("dt", "Donaldson-Thomas transformation");
  dt->require_subcommand(1);
  add_check_options(leaf(dt, "check", "Run every verification and emit a report", "dt check"), cfg);
  add_check_options(leaf(dt, "sequence", "Mutation sequence realizing DT", "dt sequence"), cfg);
  add_check_options(leaf(dt, "closed-form", "Closed-form DT of the symbolic amalgamation", "dt closed-form"), cfg);

  for (auto* sub : dt->get_subcommands({}))
    sub->get_option("--letters")->excludes(sub->get_option("--all-pairs"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::NonReducedWord: return kExitNonReduced;
      case ErrorKind::InvalidArgument:
      case ErrorKind::IndexOutOfRange: return kExitParse;
      default: return 1;
    }
  }
}
