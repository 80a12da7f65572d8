#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bsol/dynamics.hpp"
#include "bsol/error.hpp"
#include "bsol/format.hpp"
#include "bsol/necklace.hpp"
#include "bsol/stochastic.hpp"
#include "bsol/variant.hpp"

using namespace bsol;

namespace {

enum Exit { kOk = 0, kUsage = 2, kBound = 3, kInternal = 4 };

struct Options {
  std::string variant = "bulgarian";
  std::string state;
  std::string format = "text";
  std::string style = "rows";
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  Part life = 0;
  std::uint64_t bank = 0;
  std::size_t pointer = 1;
  std::size_t seats = 0;
  std::size_t players = 0;
  unsigned workers = 1;
  std::optional<std::uint64_t> limit;
  std::optional<std::size_t> step_bound;
  bool list_cycles = false;
  // simulate
  double p = 1.0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> burn_in;
  std::size_t top = 20;
};

std::uint64_t state_budget(const Options& o) {
  if (o.limit) return *o.limit;
  if (const char* env = std::getenv("BSOL_MAX_STATES")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("BSOL_MAX_STATES is not a number: ") + env);
  }
  return kDefaultAnalysisStates;
}

EnumerationLimits enumeration_limits(const Options& o) {
  EnumerationLimits limits;
  limits.max_states = state_budget(o);
  return limits;
}

VariantSpec variant_spec(const Options& o) {
  return VariantSpec{parse_variant(o.variant), o.life, o.seats, o.players};
}

// Plain parts are completed from --L/--bank or --pointer.
AnyState read_state(const Options& o, const VariantSpec& spec) {
  const auto kind = state_kind_for(spec.kind);
  const bool compound = o.state.find('|') != std::string::npos;
  if (kind == StateKind::austrian && !compound) {
    if (o.life == 0) throw ParseError("austrian needs --L or a state like '2,1|bank=0|L=3'");
    return parse_state(o.state + "|bank=" + std::to_string(o.bank) + "|L=" + std::to_string(o.life), kind);
  }
  if (kind == StateKind::pointer && !compound) {
    return parse_state(o.state + "|pointer=" + std::to_string(o.pointer), kind);
  }
  return parse_state(o.state, kind);
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw ParseError("unsupported --format " + format);
}

int cmd_orbit(const Options& o) {
  require_format(o.format, {"text", "json"});
  const auto spec = variant_spec(o);
  const auto start = read_state(o, spec);
  const auto result = orbit(spec, start, o.step_bound);
  std::cout << (o.format == "json" ? orbit_to_json_lines(result) : orbit_to_text(result));
  return kOk;
}

int cmd_graph(const Options& o) {
  require_format(o.format, {"text", "json", "dot"});
  AnalysisOptions options{o.workers, state_budget(o)};
  const auto g = analyze_state_space(o.n, variant_spec(o), options);
  if (o.format == "json") {
    std::cout << summary_to_json(g).dump(2) << '\n';
  } else if (o.format == "dot") {
    std::cout << summary_to_dot(g);
  } else {
    std::cout << summary_to_text(g);
  }
  return kOk;
}

int cmd_ge(const Options& o) {
  require_format(o.format, {"text", "json"});
  const auto limits = enumeration_limits(o);
  const auto g = analyze_bulgarian(o.n, o.workers, limits);
  const auto reach = ge_reachability_check(o.n, limits);
  if (o.format == "json") {
    json j = report_to_json(reach);
    j["ge_states"] = json::array();
    for (const auto& s : g.ge_states) j["ge_states"].push_back(s.parts());
    j["state_count"] = g.states.size();
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "n = " << o.n << ": " << g.ge_states.size() << " garden of eden states out of " << g.states.size()
            << '\n';
  for (const auto& s : g.ge_states) std::cout << "  " << format_state(s) << '\n';
  for (const auto& e : reach.entries) {
    std::cout << "cycle (" << format_state(e.cycle.front()) << ") length " << e.cycle.size() << ": ";
    if (e.ge_witness) {
      std::cout << "entered from " << format_state(*e.ge_witness) << " after " << e.witness_path.size() - 1
                << " steps\n";
    } else {
      std::cout << "no garden of eden state reaches it\n";
    }
  }
  std::cout << "every cycle reached: " << (reach.holds() ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_necklaces(const Options& o) {
  require_format(o.format, {"text", "json"});
  const auto [k, r] = triangular_decompose(o.n);
  const auto count = necklace_count(o.n);
  json cycles = json::array();
  if (o.list_cycles) {
    const auto g = analyze_bulgarian(o.n, o.workers, enumeration_limits(o));
    for (const auto& cycle : g.cycles) {
      const auto necklace = necklace_of_state(cycle.front());
      cycles.push_back(json{{"representative", cycle.front().parts()},
                            {"cycle_length", cycle.size()},
                            {"necklace", necklace.canonical().to_string()},
                            {"period", necklace.period()}});
    }
  }
  if (o.format == "json") {
    json j{{"n", o.n}, {"k", k}, {"r", r}, {"components", count}};
    if (o.list_cycles) j["cycles"] = std::move(cycles);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "n = " << o.n << " (k = " << k << ", r = " << r << "): " << count << " components\n";
  for (const auto& c : cycles) {
    std::cout << "  " << c["necklace"].get<std::string>() << "  period " << c["period"] << "  cycle length "
              << c["cycle_length"] << "  (" << format_parts(c["representative"].get<std::vector<Part>>()) << ")\n";
  }
  return kOk;
}

int cmd_knuth(const Options& o) {
  require_format(o.format, {"text", "json"});
  const auto report = knuth_exponent_check(o.k, enumeration_limits(o));
  if (o.format == "json") {
    std::cout << report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << "k = " << o.k << ": B^" << report.exponent << " reaches the staircase from " << report.states_checked
              << " states, " << report.exceptions.size() << " exceptions\n";
    for (const auto& s : report.exceptions) std::cout << "  " << format_state(s) << '\n';
  }
  return report.holds() ? kOk : kInternal;
}

int cmd_toom(const Options& o) {
  require_format(o.format, {"text", "json"});
  const auto report = toom_path(o.k);
  if (o.format == "json") {
    std::cout << report_to_json(report).dump(2) << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < report.path.size(); ++i) {
    std::cout << i << ": " << format_state(report.path[i]) << '\n';
  }
  std::cout << "minimal s = " << report.minimal_s << " (k(k-1) = " << o.k * (o.k - 1) << ")\n";
  std::cout << "conjugate symmetry: " << (report.conjugacy_holds ? "holds" : "fails") << '\n';
  return kOk;
}

int cmd_simulate(const Options& o) {
  require_format(o.format, {"text", "json", "csv"});
  ChainConfig config;
  config.n = o.n;
  config.variant = parse_chain_variant(o.variant);
  config.p = o.p;
  config.seed = o.seed;
  config.samples = o.samples;
  config.burn_in = o.burn_in;
  if (!o.state.empty()) config.initial = std::get<Partition>(parse_state(o.state, StateKind::partition));
  const auto stats = run_chain(config);
  if (o.format == "csv") {
    std::cout << mean_shape_csv(stats);
    return kOk;
  }
  const auto profile = shape_profile(stats);
  if (o.format == "json") {
    json j = chain_stats_to_json(stats, o.top);
    j["profile"] = shape_profile_to_json(profile);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << chain_variant_name(stats.variant) << " n = " << stats.n << " p = " << stats.p << " seed = " << stats.seed
            << " (" << stats.generator << ")\n";
  std::cout << "burn-in " << stats.burn_in << ", samples " << stats.samples << ", distinct states "
            << stats.visit_counts.size() << '\n';
  std::cout << "mean staircase distance " << stats.mean_staircase_distance << ", mean energy " << stats.mean_energy
            << '\n';
  std::cout << "profile support " << profile.support << ": linear rms " << profile.linear.rms_residual
            << ", exponential rms " << profile.exponential.rms_residual << '\n';
  std::cout << "final state " << format_state(stats.final_state) << '\n';
  return kOk;
}

int cmd_render(const Options& o) {
  YoungStyle style;
  if (o.style == "rows") {
    style = YoungStyle::rows;
  } else if (o.style == "cradle") {
    style = YoungStyle::cradle;
  } else {
    throw ParseError("unknown --style " + o.style);
  }
  const auto lambda = std::get<Partition>(parse_state(o.state, StateKind::partition));
  std::cout << render_young(lambda, style) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bulgarian solitaire and its variants"};
  app.require_subcommand(1);
  Options o;

  auto add_limit = [&](CLI::App* c) {
    c->add_option("--limit", o.limit, "Maximum number of states to enumerate (overrides BSOL_MAX_STATES)");
  };
  auto add_workers = [&](CLI::App* c) { c->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 1024u)); };
  auto add_variant_params = [&](CLI::App* c) {
    c->add_option("--L", o.life, "Machine life (austrian)");
    c->add_option("--seats", o.seats, "Number of seats (servedio-yeh, janetzko)");
    c->add_option("--players", o.players, "Number of players (multiplayer)");
  };

  auto* orbit_cmd = app.add_subcommand("orbit", "Play a deterministic variant until its orbit repeats");
  orbit_cmd->add_option("--variant", o.variant, "Operator")->capture_default_str();
  orbit_cmd->add_option("--state", o.state, "Initial state, e.g. 4,3,3")->required();
  add_variant_params(orbit_cmd);
  orbit_cmd->add_option("--bank", o.bank, "Initial bank (austrian)");
  orbit_cmd->add_option("--pointer", o.pointer, "Initial 1-based pointer (janetzko)");
  orbit_cmd->add_option("--step-bound", o.step_bound, "Give up after this many steps");
  orbit_cmd->add_option("--format", o.format, "text or json")->capture_default_str();

  auto* graph_cmd = app.add_subcommand("graph", "Analyze the functional graph on all states of n cards");
  graph_cmd->add_option("--n", o.n, "Number of cards")->required();
  graph_cmd->add_option("--variant", o.variant, "Operator")->capture_default_str();
  add_variant_params(graph_cmd);
  graph_cmd->add_option("--format", o.format, "text, json or dot")->capture_default_str();
  add_workers(graph_cmd);
  add_limit(graph_cmd);

  auto* ge_cmd = app.add_subcommand("ge", "Garden of Eden states and the cycles they reach");
  ge_cmd->add_option("--n", o.n, "Number of cards")->required();
  ge_cmd->add_option("--format", o.format, "text or json")->capture_default_str();
  add_workers(ge_cmd);
  add_limit(ge_cmd);

  auto* necklace_cmd = app.add_subcommand("necklaces", "Number of components of the Bulgarian graph");
  necklace_cmd->add_option("--n", o.n, "Number of cards")->required()->check(CLI::PositiveNumber);
  necklace_cmd->add_flag("--cycles", o.list_cycles, "List every cycle with its necklace (enumerates P(n))");
  necklace_cmd->add_option("--format", o.format, "text or json")->capture_default_str();
  add_workers(necklace_cmd);
  add_limit(necklace_cmd);

  auto* knuth_cmd = app.add_subcommand("knuth", "Check B^{k(k-1)} on every partition of k(k+1)/2");
  knuth_cmd->add_option("--k", o.k, "Staircase size")->required();
  knuth_cmd->add_option("--format", o.format, "text or json")->capture_default_str();
  add_limit(knuth_cmd);

  auto* toom_cmd = app.add_subcommand("toom", "Path from the slowest start to the staircase");
  toom_cmd->add_option("--k", o.k, "Staircase size")->required()->check(CLI::Range(2, 10000));
  toom_cmd->add_option("--format", o.format, "text or json")->capture_default_str();

  auto* sim_cmd = app.add_subcommand("simulate", "Run a seeded random solitaire");
  sim_cmd->add_option("--variant", o.variant, "popov or ejs")->required();
  sim_cmd->add_option("--n", o.n, "Number of cards")->required();
  sim_cmd->add_option("--p", o.p, "Selection probability in (0, 1]")->capture_default_str();
  sim_cmd->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  sim_cmd->add_option("--samples", o.samples, "Recorded steps (default 500 n)");
  sim_cmd->add_option("--burn-in", o.burn_in, "Discarded steps (default 50 n)");
  sim_cmd->add_option("--initial", o.state, "Initial partition (default the single pile)");
  sim_cmd->add_option("--top", o.top, "Most visited states kept in json output (0 keeps all)")->capture_default_str();
  sim_cmd->add_option("--format", o.format, "text, json or csv")->capture_default_str();

  auto* render_cmd = app.add_subcommand("render", "Draw a Young diagram");
  render_cmd->add_option("--state", o.state, "Partition, e.g. 4,3,3")->required();
  render_cmd->add_option("--style", o.style, "rows or cradle")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*orbit_cmd) return cmd_orbit(o);
    if (*graph_cmd) return cmd_graph(o);
    if (*ge_cmd) return cmd_ge(o);
    if (*necklace_cmd) return cmd_necklaces(o);
    if (*knuth_cmd) return cmd_knuth(o);
    if (*toom_cmd) return cmd_toom(o);
    if (*sim_cmd) return cmd_simulate(o);
    if (*render_cmd) return cmd_render(o);
  } catch (const BoundExceeded& e) {
    std::cerr << "bsol: " << e.what() << '\n';
    return kBound;
  } catch (const InvalidArgument& e) {
    std::cerr << "bsol: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "bsol: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
