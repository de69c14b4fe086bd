// resist: command-line front end. Exit codes: 0 ok, 2 a theorem-backed case or lemma
// failed, 1 anything operational (bad input, guard, I/O).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "resist/canonical.hpp"
#include "resist/drs.hpp"
#include "resist/enumeration.hpp"
#include "resist/error.hpp"
#include "resist/graph.hpp"
#include "resist/lemmas.hpp"
#include "resist/network.hpp"
#include "resist/resistance.hpp"

namespace {

using namespace resist;
using Json = nlohmann::ordered_json;

enum class Output { kHuman, kTsv, kJson };

struct Config {
  std::string cache_dir;
  unsigned threads = 1;
  std::string output = "human";
  std::size_t max_n = kEnumerationGuard;
  bool decimal = false;
  bool allow_n10 = false;

  Output format() const {
    if (output == "json") return Output::kJson;
    if (output == "tsv") return Output::kTsv;
    return Output::kHuman;
  }

  std::optional<std::filesystem::path> cache() const {
    if (!cache_dir.empty()) return std::filesystem::path(cache_dir);
    return default_cache_dir();
  }

  DrsOptions drs() const {
    DrsOptions o;
    o.threads = threads;
    o.allow_order_ten = allow_n10;
    o.cache_dir = cache();
    o.max_order = max_n;
    return o;
  }
};

// Graph6 strings from the command line, or one per line from stdin when none are given
// (or the single argument is "-").
std::vector<std::string> graph6_inputs(const std::vector<std::string>& args) {
  if (!args.empty() && !(args.size() == 1 && args[0] == "-")) return args;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::string value_text(const Rational& r, const Config& cfg) {
  if (!cfg.decimal) return to_string(r);
  return to_string(r) + " (approx " + to_decimal(r) + ")";
}

void put_value(Json& obj, const char* key, const Rational& r, const Config& cfg) {
  obj[key] = to_string(r);
  if (cfg.decimal) obj[std::string(key) + "_approx"] = to_decimal(r);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string kmn_name(const DrsVerdict& v) {
  if (!v.parts) return to_graph6(v.target);
  return "K_{" + std::to_string(v.parts->first) + "," + std::to_string(v.parts->second) + "}";
}

// ---- subcommands ----------------------------------------------------------

int cmd_resistance(const Config& cfg, const std::vector<std::string>& graphs, VertexId u, VertexId v) {
  Json batch = Json::array();
  for (const auto& text : graph6_inputs(graphs)) {
    const Graph g = parse_graph6(text);
    const Rational r = resistance(g, u, v);
    switch (cfg.format()) {
      case Output::kHuman: std::cout << value_text(r, cfg) << "\n"; break;
      case Output::kTsv:
        std::cout << text << "\t" << u << "\t" << v << "\t" << to_string(r);
        if (cfg.decimal) std::cout << "\t" << to_decimal(r);
        std::cout << "\n";
        break;
      case Output::kJson: {
        Json row{{"graph6", text}, {"u", u}, {"v", v}};
        put_value(row, "resistance", r, cfg);
        batch.push_back(row);
        break;
      }
    }
  }
  if (cfg.format() == Output::kJson) print_json(batch.size() == 1 ? batch[0] : batch);
  return 0;
}

int cmd_spectrum(const Config& cfg, const std::vector<std::string>& graphs) {
  Json batch = Json::array();
  for (const auto& text : graph6_inputs(graphs)) {
    const ResistanceSpectrum s = resistance_spectrum(parse_graph6(text));
    switch (cfg.format()) {
      case Output::kHuman:
        std::cout << to_json(s) << "\n";
        if (cfg.decimal) {
          for (const auto& e : s.entries())
            std::cout << "  " << to_string(e.value) << " ~ " << to_decimal(e.value) << " (approximation) x"
                      << e.multiplicity << "\n";
        }
        break;
      case Output::kTsv:
        for (const auto& e : s.entries()) {
          std::cout << text << "\t" << to_string(e.value) << "\t" << e.multiplicity;
          if (cfg.decimal) std::cout << "\t" << to_decimal(e.value);
          std::cout << "\n";
        }
        break;
      case Output::kJson: {
        Json row{{"graph6", text}, {"spectrum", Json::parse(to_json(s))}};
        if (cfg.decimal) {
          auto approx = Json::array();
          for (const auto& e : s.entries()) approx.push_back({to_decimal(e.value), e.multiplicity});
          row["spectrum_approx"] = approx;
        }
        batch.push_back(row);
        break;
      }
    }
  }
  if (cfg.format() == Output::kJson) print_json(batch.size() == 1 ? batch[0] : batch);
  return 0;
}

void print_verdicts(const Config& cfg, const std::vector<DrsVerdict>& verdicts, bool single) {
  switch (cfg.format()) {
    case Output::kJson:
      std::cout << (single ? to_json(verdicts.front()) : to_json(verdicts)) << "\n";
      break;
    case Output::kTsv:
      for (const auto& v : verdicts) {
        std::cout << to_graph6(v.target) << "\t" << kmn_name(v) << "\t" << to_string(v.theorem_tag) << "\t"
                  << (v.determined() ? "determined" : "not-determined") << "\t" << v.classes_searched;
        for (const auto& c : v.impostors) std::cout << "\t" << to_graph6(to_graph(c));
        std::cout << "\n";
      }
      break;
    case Output::kHuman:
      for (const auto& v : verdicts) {
        std::cout << kmn_name(v) << " [" << to_string(v.theorem_tag) << "]: "
                  << (v.determined() ? "determined" : "NOT determined") << " among " << v.classes_searched
                  << " connected classes on " << v.target.order() << " vertices";
        if (!v.determined()) {
          std::cout << "; impostors:";
          for (const auto& c : v.impostors) std::cout << " " << to_graph6(to_graph(c));
        }
        std::cout << "\n";
      }
      if (!single)
        std::cout << (theorem_exit_code(verdicts) == 0 ? "all theorem cases determined\n"
                                                       : "THEOREM CASE VIOLATION\n");
      break;
  }
}

int cmd_verify_drs(const Config& cfg, const std::vector<std::size_t>& kmn, const std::string& graph) {
  if (!kmn.empty() && !graph.empty()) throw InvalidArgument("give either --kmn or --graph, not both");
  DrsVerifier verifier(cfg.drs());
  std::vector<DrsVerdict> verdicts;
  bool single = true;
  if (!kmn.empty()) {
    if (kmn[0] == 0 || kmn[1] == 0) throw InvalidArgument("--kmn parts must be at least 1");
    if (kmn[0] + kmn[1] > cfg.max_n)
      throw GuardError("K_{" + std::to_string(kmn[0]) + "," + std::to_string(kmn[1]) + "} has more than --max-n " +
                       std::to_string(cfg.max_n) + " vertices");
    verdicts.push_back(verifier.verify(complete_bipartite(kmn[0], kmn[1])));
  } else if (!graph.empty()) {
    const Graph g = parse_graph6(graph);
    if (g.order() > cfg.max_n)
      throw GuardError("graph has " + std::to_string(g.order()) + " vertices, above --max-n " +
                       std::to_string(cfg.max_n));
    verdicts.push_back(verifier.verify(g));
  } else {
    verdicts = verifier.check_theorems(cfg.max_n);
    single = false;
  }
  print_verdicts(cfg, verdicts, single);
  return theorem_exit_code(verdicts);
}

int cmd_enumerate(const Config& cfg, std::size_t n, bool use_cache) {
  EnumerationOptions opts;
  opts.threads = cfg.threads;
  opts.allow_order_ten = cfg.allow_n10;
  if (use_cache) {
    opts.cache_dir = cfg.cache();
    if (!opts.cache_dir) throw InvalidArgument("--cache needs --cache-dir or RESIST_CACHE_DIR");
  }
  check_enumeration_guard(n, cfg.allow_n10);
  const auto graphs = enumerate_connected(n, opts);
  if (cfg.format() == Output::kJson) {
    auto list = Json::array();
    for (const auto& g : graphs) list.push_back(to_graph6(g));
    print_json(Json{{"order", n}, {"count", graphs.size()}, {"graphs", list}});
  } else {
    for (const auto& g : graphs) std::cout << to_graph6(g) << "\n";
  }
  return 0;
}

int cmd_collisions(const Config& cfg, std::size_t n) {
  check_enumeration_guard(n, cfg.allow_n10);
  const CollisionReport report = DrsVerifier(cfg.drs()).find_collisions(n);
  switch (cfg.format()) {
    case Output::kJson: std::cout << to_json(report) << "\n"; break;
    case Output::kTsv:
      for (const auto& p : report.pairs)
        std::cout << to_graph6(to_graph(p.first)) << "\t" << to_graph6(to_graph(p.second)) << "\t"
                  << to_json(p.spectrum) << "\n";
      break;
    case Output::kHuman:
      std::cout << "order " << n << ": " << report.classes << " connected classes, " << report.distinct_spectra
                << " distinct spectra, " << report.pairs.size() << " cospectral pairs\n";
      for (const auto& p : report.pairs)
        std::cout << "  " << to_graph6(to_graph(p.first)) << " ~ " << to_graph6(to_graph(p.second)) << "  "
                  << to_json(p.spectrum) << "\n";
      break;
  }
  return 0;
}

int cmd_check_lemmas(const Config& cfg) {
  EnumerationOptions opts;
  opts.threads = cfg.threads;
  opts.allow_order_ten = cfg.allow_n10;
  opts.cache_dir = cfg.cache();
  check_enumeration_guard(cfg.max_n, cfg.allow_n10);
  const CheckSummary summary = run_all_checks(cfg.max_n, opts);
  switch (cfg.format()) {
    case Output::kJson: std::cout << summary.to_json() << "\n"; break;
    case Output::kTsv:
      for (LemmaId id : kAllLemmas) {
        const auto& t = summary.tally(id);
        std::cout << lemma_name(id) << "\t" << t.passed << "\t" << t.vacuous << "\t" << t.failed << "\n";
      }
      break;
    case Output::kHuman:
      std::cout << summary.graphs() << " connected graphs on at most " << cfg.max_n << " vertices\n";
      for (LemmaId id : kAllLemmas) {
        const auto& t = summary.tally(id);
        std::cout << "  " << lemma_name(id) << ": " << t.passed << " passed, " << t.vacuous << " vacuous, "
                  << t.failed << " failed\n";
      }
      for (const auto& f : summary.failures) {
        std::cout << "  counterexample to " << lemma_name(f.lemma);
        if (f.witness) std::cout << " on " << to_graph6(f.witness->graph) << ": " << f.witness->detail;
        std::cout << "\n";
      }
      std::cout << summary.failure_count() << " failures\n";
      break;
  }
  return summary.failure_count() == 0 ? 0 : 2;
}

std::vector<VertexId> parse_ids(const std::string& text, const std::string& step) {
  std::vector<VertexId> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      ids.push_back(static_cast<VertexId>(value));
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad vertex list in step '" + step + "'");
    }
  }
  return ids;
}

struct Step {
  std::string kind;
  std::vector<VertexId> ids;
};

// "series:v", "parallel:u,v", "keep:a,b,c" (induced sub-network)
Step parse_step(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("step '" + text + "' needs kind:vertices");
  Step step{text.substr(0, colon), parse_ids(text.substr(colon + 1), text)};
  const std::size_t want = step.kind == "series" ? 1 : step.kind == "parallel" ? 2 : 0;
  if (step.kind != "series" && step.kind != "parallel" && step.kind != "keep")
    throw InvalidArgument("unknown step kind '" + step.kind + "' (series, parallel, keep)");
  if (want != 0 && step.ids.size() != want) throw InvalidArgument("step '" + text + "' has the wrong arity");
  if (step.ids.empty()) throw InvalidArgument("step '" + text + "' names no vertices");
  return step;
}

int cmd_reduce(const Config& cfg, const std::string& file, const std::vector<std::string>& step_texts,
               const std::vector<std::string>& queries) {
  std::vector<Step> steps;
  for (const auto& s : step_texts) steps.push_back(parse_step(s));
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& q : queries) {
    const auto ids = parse_ids(q, q);
    if (ids.size() != 2) throw InvalidArgument("--query wants u,v");
    pairs.emplace_back(ids[0], ids[1]);
  }

  std::string text;
  if (file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  WeightedNetwork net = parse_network(text);
  for (const auto& s : steps) {
    if (s.kind == "series") net = series_reduce(net, s.ids[0]);
    else if (s.kind == "parallel") net = parallel_reduce(net, s.ids[0], s.ids[1]);
    else net = induced_subnetwork(net, s.ids);
  }

  if (cfg.format() == Output::kJson) {
    Json out{{"order", net.order()}};
    auto edges = Json::array();
    for (const auto& e : net.edges()) edges.push_back({e.u, e.v, to_string(e.resistance)});
    out["edges"] = edges;
    auto results = Json::array();
    for (auto [u, v] : pairs) {
      Json row{{"u", u}, {"v", v}};
      put_value(row, "resistance", weighted_resistance(net, u, v), cfg);
      results.push_back(row);
    }
    out["queries"] = results;
    print_json(out);
  } else {
    std::cout << format_network(net);
    for (auto [u, v] : pairs) {
      const Rational r = weighted_resistance(net, u, v);
      if (cfg.format() == Output::kTsv)
        std::cout << "R\t" << u << "\t" << v << "\t" << to_string(r) << "\n";
      else
        std::cout << "R(" << u << "," << v << ") = " << value_text(r, cfg) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact resistance distances, resistance spectra and spectrum-determinability checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  cfg.threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--cache-dir", cfg.cache_dir, "Cache directory (default: $RESIST_CACHE_DIR)");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "tsv", "human"}));
  app.add_option("--max-n", cfg.max_n, "Largest vertex count to sweep or accept")
      ->check(CLI::Range(std::size_t{1}, kEnumerationHardLimit));
  app.add_flag("--decimal", cfg.decimal, "Also print 12-digit decimal approximations");
  app.add_flag("--allow-n10", cfg.allow_n10, "Permit enumeration at 10 vertices (slow, memory hungry)");

  std::vector<std::string> graphs;
  VertexId u = 0, v = 0;
  auto* resistance_cmd = app.add_subcommand("resistance", "Effective resistance between two vertices");
  std::string resistance_graph;
  resistance_cmd->add_option("graph6", resistance_graph, "Graph ('-' reads one per line from stdin)")->required();
  resistance_cmd->add_option("u", u)->required();
  resistance_cmd->add_option("v", v)->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Resistance spectrum");
  spectrum_cmd->add_option("graph6", graphs, "Graphs (default: stdin, one per line)");

  std::vector<std::size_t> kmn;
  std::string target;
  auto* verify_cmd = app.add_subcommand("verify-drs", "Is the graph determined by its resistance spectrum?");
  verify_cmd->add_option("--kmn", kmn, "Complete bipartite K_{m,n}")->expected(2);
  verify_cmd->add_option("--graph", target, "Target graph in graph6");

  std::size_t order = 0;
  bool use_cache = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Connected graphs up to isomorphism, as graph6");
  enumerate_cmd->add_option("n", order)->required()->check(CLI::Range(std::size_t{1}, kEnumerationHardLimit));
  enumerate_cmd->add_flag("--cache", use_cache, "Read and write connected-<n>.g6 in the cache directory");

  auto* collisions_cmd = app.add_subcommand("collisions", "Non-isomorphic graphs sharing a resistance spectrum");
  collisions_cmd->add_option("n", order)->required()->check(CLI::Range(std::size_t{1}, kEnumerationHardLimit));

  auto* lemmas_cmd = app.add_subcommand("check-lemmas", "Check the resistance lemmas on every small graph");

  std::string network_file;
  std::vector<std::string> steps, queries;
  auto* reduce_cmd = app.add_subcommand("reduce", "Apply series/parallel reductions to a resistor network");
  reduce_cmd->add_option("network", network_file, "Network file ('-' for stdin)")->required();
  reduce_cmd->add_option("steps", steps, "series:v | parallel:u,v | keep:a,b,...");
  reduce_cmd->add_option("--query", queries, "Print R(u,v) after reducing; repeatable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (cfg.max_n == kEnumerationHardLimit && !cfg.allow_n10) {
    std::cerr << "error: --max-n 10 needs --allow-n10\n";
    return 1;
  }

  try {
    if (*resistance_cmd) return cmd_resistance(cfg, {resistance_graph}, u, v);
    if (*spectrum_cmd) return cmd_spectrum(cfg, graphs);
    if (*verify_cmd) return cmd_verify_drs(cfg, kmn, target);
    if (*enumerate_cmd) return cmd_enumerate(cfg, order, use_cache);
    if (*collisions_cmd) return cmd_collisions(cfg, order);
    if (*lemmas_cmd) return cmd_check_lemmas(cfg);
    if (*reduce_cmd) return cmd_reduce(cfg, network_file, steps, queries);
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
