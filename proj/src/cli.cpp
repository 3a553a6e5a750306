#include "preclusion/cli.hpp"

#include <chrono>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "preclusion/error.hpp"
#include "preclusion/graph.hpp"
#include "preclusion/graph_io.hpp"
#include "preclusion/hypercube.hpp"
#include "preclusion/reduction.hpp"
#include "preclusion/report.hpp"
#include "preclusion/solver.hpp"
#include "preclusion/suites.hpp"

namespace preclusion::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Bad command-line values that CLI11 cannot catch on its own.
class UsageError : public Error {
 public:
  using Error::Error;
};

template <class T>
T parse_number(const std::string& text, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
  return value;
}

double parse_probability(const std::string& text) {
  try {
    std::size_t used = 0;
    const double p = std::stod(text, &used);
    if (used == text.size()) return p;
  } catch (const std::exception&) {
  }
  throw UsageError("invalid probability: '" + text + "'");
}

json value_json(const suites::Value& v) { return v ? json(*v) : json("INFINITY"); }

json values_json(const std::vector<suites::Value>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(value_json(v));
  return out;
}

Graph generate_family(const std::vector<std::string>& spec, std::uint64_t seed) {
  if (spec.empty()) throw UsageError("missing graph family");
  const std::string& family = spec[0];
  auto arity = [&](std::size_t count) {
    if (spec.size() != count + 1) {
      throw UsageError("family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (family == "hypercube") {
    arity(1);
    return generate::hypercube(parse_number<unsigned>(spec[1], "dimension"));
  }
  if (family == "complete") {
    arity(1);
    return generate::complete(parse_number<std::size_t>(spec[1], "order"));
  }
  if (family == "complete_bipartite") {
    arity(2);
    return generate::complete_bipartite(parse_number<std::size_t>(spec[1], "side"),
                                        parse_number<std::size_t>(spec[2], "side"));
  }
  if (family == "petersen") {
    arity(0);
    return generate::petersen();
  }
  if (family == "cycle") {
    arity(1);
    return generate::cycle(parse_number<std::size_t>(spec[1], "order"));
  }
  if (family == "path") {
    arity(1);
    return generate::path(parse_number<std::size_t>(spec[1], "order"));
  }
  if (family == "random_bipartite") {
    arity(2);
    return generate::random_bipartite_with_pm(parse_number<std::size_t>(spec[1], "side"),
                                              parse_probability(spec[2]), seed);
  }
  if (family == "gnp") {
    arity(2);
    return generate::random_gnp(parse_number<std::size_t>(spec[1], "order"),
                                parse_probability(spec[2]), seed);
  }
  throw UsageError("unknown graph family '" + family + "'");
}

Graph read_graph(const std::string& path, std::istream& in) {
  std::string bytes;
  if (path.empty() || path == "-") {
    bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + path + "'");
    bytes.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return io::parse_auto(bytes);
}

void emit_report(std::ostream& out, RunReport& report, Clock::time_point start) {
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out << to_json(report).dump(2) << '\n';
}

// --- subcommands ---------------------------------------------------------------

struct GenArgs {
  std::vector<std::string> family;
  std::string format = "edges";
  std::uint64_t seed = 1;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  const auto format = io::format_from_name(args.format);
  if (!format) throw UsageError("unknown format '" + args.format + "'");
  out << io::emit(generate_family(args.family, args.seed), *format);
  if (*format == io::Format::Json) out << '\n';
  return kExitOk;
}

struct SolveArgs {
  std::string input;
  std::string mode;
  std::optional<unsigned> s;
  std::optional<std::size_t> budget;
  bool deterministic = false;
  unsigned jobs = 1;
  std::string method = "bnb";
};

ProblemKind kind_from(const std::string& mode, const std::optional<unsigned>& s) {
  if (mode == "mp") {
    if (s) throw UsageError("--s only applies to --mode mps");
    return ProblemKind::mp();
  }
  if (mode == "ak") {
    if (s) throw UsageError("--s only applies to --mode mps");
    return ProblemKind::ak();
  }
  if (mode == "mps") {
    if (!s) throw UsageError("--mode mps requires --s");
    return ProblemKind::mps(*s);
  }
  throw UsageError("unknown mode '" + mode + "'");
}

int cmd_solve(const SolveArgs& args, std::istream& in, std::ostream& out) {
  const auto start = Clock::now();
  const ProblemKind kind = kind_from(args.mode, args.s);
  if (args.method != "bnb" && args.method != "brute") {
    throw UsageError("unknown method '" + args.method + "'");
  }
  const Graph g = read_graph(args.input, in);

  PreclusionCertificate cert;
  if (args.method == "brute") {
    BruteForceOptions options;
    options.budget = args.budget;
    cert = brute_force_solve(g, kind, options);
  } else {
    SolveOptions options;
    options.budget = args.budget;
    options.deterministic = args.deterministic;
    options.jobs = args.jobs;
    cert = solve(g, kind, options);
  }

  RunReport report;
  report.command = "solve";
  report.arguments = {"--mode", args.mode, "--method", args.method};
  if (args.s) report.arguments.insert(report.arguments.end(), {"--s", std::to_string(*args.s)});
  if (args.budget) {
    report.arguments.insert(report.arguments.end(), {"--budget", std::to_string(*args.budget)});
  }
  report.input = InputSummary{g.order(), g.size(), "input"};
  report.result = {{"method", args.method == "brute" ? "brute_force" : "branch_and_bound"},
                   {"certificate", certificate_json(g, cert)}};
  const bool feasible = cert.status == CertificateStatus::Optimal;
  report.outcome = feasible ? "feasible" : "infeasible";
  report.exit_code = feasible ? kExitOk : kExitNegative;
  report.deterministic = args.deterministic;
  report.stats = {cert.stats.nodes, cert.stats.prunes};
  emit_report(out, report, start);
  return report.exit_code;
}

struct ReduceArgs {
  std::string input;
  std::string format = "g6";
  std::optional<std::size_t> check;
  unsigned s = 1;
  bool deterministic = false;
};

json edge_label(const Graph& g, EdgeId e) {
  return {{"id", e}, {"edge", {g.edge(e).u, g.edge(e).v}}};
}

int cmd_reduce(const ReduceArgs& args, std::istream& in, std::ostream& out) {
  const auto start = Clock::now();
  const auto format = io::format_from_name(args.format);
  if (!format) throw UsageError("unknown format '" + args.format + "'");
  const Graph g = read_graph(args.input, in);
  const ReductionInstance r = build_reduction(g);

  RunReport report;
  report.command = "reduce";
  report.arguments = {"--format", std::string(io::format_name(*format))};
  report.input = InputSummary{g.order(), g.size(), "input"};
  std::string encoded = io::emit(r.gadget, *format);
  if (!encoded.empty() && encoded.back() == '\n') encoded.pop_back();
  report.result = {
      {"t", r.t},
      {"gadget",
       {{"n", r.gadget.order()},
        {"m", r.gadget.size()},
        {"format", io::format_name(*format)},
        {"encoded", encoded}}},
      {"labels",
       {{"u_prime", r.u_prime},
        {"u_dprime", r.u_dprime},
        {"v_prime", r.v_prime},
        {"v_dprime", r.v_dprime},
        {"e", edge_label(r.gadget, r.e)},
        {"e_prime", edge_label(r.gadget, r.e_prime)}}},
      {"source_edges_keep_indices", true},
      {"k_map", "k -> k+1"}};
  report.outcome = "pass";
  report.exit_code = kExitOk;
  if (args.check) {
    report.arguments.insert(report.arguments.end(),
                            {"--check", std::to_string(*args.check), "--s", std::to_string(args.s)});
    const EquivalenceCheck check = verify_equivalence(g, *args.check, args.s);
    report.result["check"] = {{"k", *args.check},          {"s", args.s},
                              {"left", check.left},         {"right_ak", check.right_ak},
                              {"right_mps", check.right_mps}, {"agree", check.agree}};
    if (!check.agree) {
      report.outcome = "fail";
      report.exit_code = kExitNegative;
    }
  }
  report.deterministic = args.deterministic;
  emit_report(out, report, start);
  return report.exit_code;
}

struct VerifyArgs {
  std::vector<std::string> suite;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
  std::optional<std::uint64_t> samples;
  bool allow_long = false;
  bool deterministic = false;
  unsigned jobs = 1;
};

// One verification suite run: its JSON result, pass flag and solver stats.
struct SuiteOutcome {
  std::string name;
  std::vector<std::string> parameters;
  json result;
  bool pass = false;
  ReportStats stats;
};

json chain_instance_json(const suites::ChainInstance& inst) {
  return {{"index", inst.index},         {"n", inst.n},
          {"m", inst.m},                 {"brute_force", values_json(inst.brute)},
          {"solve", values_json(inst.solved)}, {"monotone", inst.monotone},
          {"agree", inst.agree}};
}

json lemma3_instance_json(const suites::Lemma3Instance& inst) {
  return {{"index", inst.index}, {"n", inst.n},   {"m", inst.m},
          {"v_e", inst.v_e},     {"mp1", value_json(inst.mp1)}, {"holds", inst.holds}};
}

json fuzz_instance_json(const suites::ReductionFuzzInstance& inst) {
  json mps = json::object();
  for (const auto& [s, v] : inst.profile.mps_gadget) mps[std::to_string(s)] = value_json(v);
  json doc = {{"index", inst.index},
              {"t", inst.t},
              {"source_edges", inst.source_edges},
              {"mp_source", value_json(inst.profile.mp_source)},
              {"ak_gadget", value_json(inst.profile.ak_gadget)},
              {"mps_gadget", mps},
              {"agree", inst.agree},
              {"forward_ok", inst.forward_ok},
              {"backward_ok", inst.backward_ok}};
  if (auto k = inst.profile.first_disagreement()) doc["first_disagreement_k"] = *k;
  return doc;
}

template <class T, class F>
json list_json(const std::vector<T>& items, F&& fn) {
  json out = json::array();
  for (const auto& item : items) out.push_back(fn(item));
  return out;
}

std::uint64_t positional_or(const std::vector<std::string>& suite, std::size_t index,
                            const std::optional<std::uint64_t>& flag, std::uint64_t fallback,
                            const char* what) {
  if (suite.size() > index) return parse_number<std::uint64_t>(suite[index], what);
  return flag.value_or(fallback);
}

SuiteOutcome run_suite(const std::vector<std::string>& suite, const VerifyArgs& args) {
  const std::string& name = suite[0];
  SuiteOutcome outcome;
  outcome.name = name;
  auto max_positionals = [&](std::size_t count) {
    if (suite.size() > count + 1) {
      throw UsageError("suite '" + name + "' takes at most " + std::to_string(count) +
                       " parameter(s)");
    }
  };
  auto required = [&](std::size_t index, const char* what) -> unsigned {
    if (suite.size() <= index) throw UsageError(std::string("suite '") + name + "' needs " + what);
    return parse_number<unsigned>(suite[index], what);
  };

  if (name == "hypercube") {
    max_positionals(2);
    const unsigned n = required(1, "n");
    const unsigned s = required(2, "s");
    MpsHypercubeOptions options;
    options.jobs = args.jobs;
    const MpsHypercubeReport r = verify_mps_hypercube(n, s, options);
    outcome.parameters = {std::to_string(n), std::to_string(s)};
    outcome.result = mps_hypercube_json(generate::hypercube(n), r);
    outcome.pass = r.pass();
    outcome.stats = {r.lower_bound_stats.nodes, r.lower_bound_stats.prunes};
  } else if (name == "lemma4") {
    max_positionals(1);
    const unsigned n = required(1, "n");
    Lemma4Options options;
    options.allow_long = args.allow_long;
    options.jobs = args.jobs;
    const Lemma4Report r = verify_optimal_conditional_sets_trivial(n, options);
    outcome.parameters = {std::to_string(n)};
    outcome.result = lemma4_json(generate::hypercube(n), r);
    outcome.pass = r.pass;
  } else if (name == "lemma5") {
    max_positionals(1);
    const unsigned n = required(1, "n");
    Lemma5Options options;
    options.jobs = args.jobs;
    if (args.samples) options.samples = *args.samples;
    if (args.seed) options.seed = *args.seed;
    const Lemma5Report r = verify_super_connectivity(n, options);
    outcome.parameters = {std::to_string(n), "samples=" + std::to_string(options.samples),
                          "seed=" + std::to_string(options.seed)};
    outcome.result = lemma5_json(generate::hypercube(n), r);
    outcome.pass = r.pass();
  } else if (name == "chain") {
    max_positionals(2);
    suites::ChainOptions options;
    options.seed = positional_or(suite, 1, args.seed, 1, "seed");
    options.count = positional_or(suite, 2, args.count, 100, "count");
    options.jobs = args.jobs;
    const auto r = suites::run_chain(options);
    outcome.parameters = {std::to_string(options.seed), std::to_string(options.count)};
    outcome.result = {{"instances", r.instances},
                      {"max_s", options.max_s},
                      {"monotone_failures", r.monotone_failures},
                      {"solver_oracle_disagreements", r.disagreements},
                      {"failures", list_json(r.failures, chain_instance_json)},
                      {"samples", list_json(r.samples, chain_instance_json)},
                      {"pass", r.pass()}};
    outcome.pass = r.pass();
    outcome.stats = {r.stats.nodes, r.stats.prunes};
  } else if (name == "lemma3") {
    max_positionals(2);
    suites::Lemma3Options options;
    options.seed = positional_or(suite, 1, args.seed, 1, "seed");
    options.count = positional_or(suite, 2, args.count, 100, "count");
    options.jobs = args.jobs;
    const auto r = suites::run_lemma3(options);
    outcome.parameters = {std::to_string(options.seed), std::to_string(options.count)};
    outcome.result = {{"instances", r.instances},
                      {"violations", r.violations},
                      {"tight", r.tight},
                      {"failures", list_json(r.failures, lemma3_instance_json)},
                      {"samples", list_json(r.samples, lemma3_instance_json)},
                      {"pass", r.pass()}};
    outcome.pass = r.pass();
    outcome.stats = {r.stats.nodes, r.stats.prunes};
  } else if (name == "reduction-fuzz") {
    max_positionals(2);
    suites::ReductionFuzzOptions options;
    options.seed = positional_or(suite, 1, args.seed, 42, "seed");
    options.count = positional_or(suite, 2, args.count, 200, "count");
    options.jobs = args.jobs;
    const auto r = suites::run_reduction_fuzz(options);
    outcome.parameters = {std::to_string(options.seed), std::to_string(options.count)};
    outcome.result = {{"instances", r.instances},
                      {"agreements", r.agreements},
                      {"k_checks", r.k_checks},
                      {"s_values", options.s_values},
                      {"forward_failures", r.forward_failures},
                      {"backward_failures", r.backward_failures},
                      {"extraction_cases",
                       {{"contains_e", r.extraction_cases[0]},
                        {"intersection_precludes", r.extraction_cases[1]},
                        {"intersection_shrunk", r.extraction_cases[2]},
                        {"trivial_set", r.extraction_cases[3]}}},
                      {"failures", list_json(r.failures, fuzz_instance_json)},
                      {"samples", list_json(r.samples, fuzz_instance_json)},
                      {"summary", std::to_string(r.agreements) + "/" +
                                      std::to_string(r.instances) + " agree"},
                      {"pass", r.pass()}};
    outcome.pass = r.pass();
  } else {
    throw UsageError("unknown verify suite '" + name + "'");
  }
  return outcome;
}

// The default parameters behind `verify all`.
const std::vector<std::vector<std::string>>& all_suites() {
  static const std::vector<std::vector<std::string>> suites = {
      {"hypercube", "3", "2"}, {"hypercube", "3", "3"}, {"hypercube", "4", "2"},
      {"lemma4", "3"},         {"lemma5", "3"},         {"lemma5", "4"},
      {"chain"},               {"lemma3"},              {"reduction-fuzz"},
  };
  return suites;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const auto start = Clock::now();
  if (args.suite.empty()) throw UsageError("missing verify suite");
  RunReport report;
  report.command = "verify";
  report.arguments = args.suite;
  if (args.seed) report.arguments.insert(report.arguments.end(), {"--seed", std::to_string(*args.seed)});
  if (args.count) report.arguments.insert(report.arguments.end(), {"--count", std::to_string(*args.count)});
  if (args.samples) {
    report.arguments.insert(report.arguments.end(), {"--samples", std::to_string(*args.samples)});
  }
  if (args.allow_long) report.arguments.push_back("--long");
  report.deterministic = args.deterministic;

  std::vector<SuiteOutcome> outcomes;
  if (args.suite[0] == "all") {
    if (args.suite.size() != 1) throw UsageError("suite 'all' takes no parameters");
    for (const auto& suite : all_suites()) outcomes.push_back(run_suite(suite, args));
  } else {
    outcomes.push_back(run_suite(args.suite, args));
  }

  bool pass = true;
  json suites_json = json::array();
  for (const auto& o : outcomes) {
    pass = pass && o.pass;
    report.stats.nodes += o.stats.nodes;
    report.stats.prunes += o.stats.prunes;
    suites_json.push_back({{"suite", o.name},
                           {"parameters", o.parameters},
                           {"pass", o.pass},
                           {"result", o.result}});
  }
  report.result = {{"suites", suites_json}, {"pass", pass}};
  report.outcome = pass ? "pass" : "fail";
  report.exit_code = pass ? kExitOk : kExitNegative;
  emit_report(out, report, start);
  return report.exit_code;
}

struct BenchArgs {
  unsigned max_n = 4;
  std::string format = "csv";
  bool deterministic = false;
  unsigned jobs = 1;
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  const auto start = Clock::now();
  if (args.format != "csv" && args.format != "json") {
    throw UsageError("bench format must be csv or json");
  }
  if (args.max_n < 3 || args.max_n > 5) throw UsageError("--max-n must lie in 3..5");
  struct Case {
    std::string name;
    Graph graph;
    ProblemKind kind;
  };
  std::vector<Case> cases = {
      {"petersen", generate::petersen(), ProblemKind::mp()},
      {"petersen", generate::petersen(), ProblemKind::mps(1)},
      {"complete_bipartite(3,3)", generate::complete_bipartite(3, 3), ProblemKind::mp()},
      {"complete_bipartite(3,3)", generate::complete_bipartite(3, 3), ProblemKind::mps(1)},
      {"complete(6)", generate::complete(6), ProblemKind::mp()},
      {"cycle(6)", generate::cycle(6), ProblemKind::ak()},
  };
  for (unsigned n = 3; n <= args.max_n; ++n) {
    const std::string name = "hypercube(" + std::to_string(n) + ")";
    cases.push_back({name, generate::hypercube(n), ProblemKind::mp()});
    if (n <= 4) {
      cases.push_back({name, generate::hypercube(n), ProblemKind::mps(1)});
      cases.push_back({name, generate::hypercube(n), ProblemKind::mps(2)});
    }
  }

  RunReport report;
  report.command = "bench";
  report.arguments = {"--max-n", std::to_string(args.max_n), "--format", args.format};
  report.deterministic = args.deterministic;
  json rows = json::array();
  std::ostringstream csv;
  csv << "graph,n,m,kind,value,nodes,prunes,seconds\n";
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    SolveOptions options;
    options.deterministic = args.deterministic;
    options.jobs = args.jobs;
    const auto cert = solve(c.graph, c.kind, options);
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    const std::string value = cert.value ? std::to_string(*cert.value) : "INFINITY";
    csv << '"' << c.name << "\"," << c.graph.order() << ',' << c.graph.size() << ','
        << c.kind.to_string() << ',' << value << ',' << cert.stats.nodes << ','
        << cert.stats.prunes << ',' << seconds << '\n';
    rows.push_back({{"graph", c.name},
                    {"n", c.graph.order()},
                    {"m", c.graph.size()},
                    {"kind", c.kind.to_string()},
                    {"value", value},
                    {"nodes", cert.stats.nodes},
                    {"prunes", cert.stats.prunes}});
    report.stats.nodes += cert.stats.nodes;
    report.stats.prunes += cert.stats.prunes;
  }
  if (args.format == "csv") {
    out << csv.str();
    return kExitOk;
  }
  report.result = {{"rows", rows}};
  report.outcome = "pass";
  report.exit_code = kExitOk;
  emit_report(out, report, start);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact matching preclusion, s-restricted matching preclusion and anti-Kekule solver",
               "preclusion"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph and print it");
  gen_cmd->add_option("family", gen.family,
                      "hypercube N | complete N | complete_bipartite A B | petersen | cycle N | "
                      "path N | random_bipartite T P | gnp N P")
      ->required();
  gen_cmd->add_option("--format", gen.format, "g6 | edges | json");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random families");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Compute mp, mp_s or ak with a certificate");
  solve_cmd->add_option("input", solve_args.input, "Graph file (edge list, graph6 or JSON); stdin if absent");
  solve_cmd->add_option("--mode", solve_args.mode, "mp | mps | ak")->required();
  solve_cmd->add_option("--s", solve_args.s, "Component-size parameter for --mode mps");
  solve_cmd->add_option("--budget", solve_args.budget, "Decision mode: is there a set of size <= budget");
  solve_cmd->add_flag("--deterministic", solve_args.deterministic,
                      "Return the lexicographically smallest optimal witness");
  solve_cmd->add_option("--jobs", solve_args.jobs, "Solver threads")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--method", solve_args.method, "bnb (default) | brute");

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the anti-Kekule reduction gadget");
  reduce_cmd->add_option("input", reduce_args.input, "Balanced bipartite graph with a perfect matching");
  reduce_cmd->add_option("--format", reduce_args.format, "Gadget encoding: g6 | edges | json");
  reduce_cmd->add_option("--check", reduce_args.check, "Verify the equivalence at this k");
  reduce_cmd->add_option("--s", reduce_args.s, "s for the s-restricted side of --check");
  reduce_cmd->add_flag("--deterministic", reduce_args.deterministic, "Accepted for uniformity");
  unsigned reduce_jobs = 1;
  reduce_cmd->add_option("--jobs", reduce_jobs, "Accepted for uniformity")->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", verify_args.suite,
                         "hypercube N S | lemma4 N | lemma5 N | chain [SEED COUNT] | "
                         "lemma3 [SEED COUNT] | reduction-fuzz [SEED COUNT] | all")
      ->required();
  verify_cmd->add_option("--seed", verify_args.seed, "Seed for randomized suites");
  verify_cmd->add_option("--count", verify_args.count, "Instance count for randomized suites");
  verify_cmd->add_option("--samples", verify_args.samples, "Sample count for lemma5 when not exhaustive");
  verify_cmd->add_flag("--long", verify_args.allow_long, "Allow long exhaustive runs (lemma4 4)");
  verify_cmd->add_flag("--deterministic", verify_args.deterministic, "Deterministic solver mode");
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time the exact solver on standard graphs");
  bench_cmd->add_option("--max-n", bench_args.max_n, "Largest hypercube dimension (3..5)");
  bench_cmd->add_option("--format", bench_args.format, "csv | json");
  bench_cmd->add_flag("--deterministic", bench_args.deterministic, "Deterministic solver mode");
  bench_cmd->add_option("--jobs", bench_args.jobs, "Solver threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*solve_cmd) return cmd_solve(solve_args, in, out);
    if (*reduce_cmd) return cmd_reduce(reduce_args, in, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*bench_cmd) return cmd_bench(bench_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace preclusion::cli
