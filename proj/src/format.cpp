#include "bsol/format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "bsol/error.hpp"

namespace bsol {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::uint64_t parse_number(std::string_view field, std::string_view what) {
  field = trim(field);
  std::uint64_t value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end) {
    if (!field.empty() && field.front() == '-') {
      throw ParseError("negative " + std::string(what) + ": '" + std::string(field) + "'");
    }
    throw ParseError("malformed " + std::string(what) + ": '" + std::string(field) + "'");
  }
  return value;
}

// "name=value" field of a compound state.
std::uint64_t parse_field(std::string_view field, std::string_view name) {
  field = trim(field);
  const auto eq = field.find('=');
  if (eq == std::string_view::npos || trim(field.substr(0, eq)) != name) {
    throw ParseError("expected '" + std::string(name) + "=<value>', got '" + std::string(field) + "'");
  }
  return parse_number(field.substr(eq + 1), name);
}

Composition parse_composition(std::string_view text, CompositionKind kind) {
  auto parts = parse_parts(text);
  try {
    return Composition(std::move(parts), kind);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string_view kind_name(CompositionKind k) {
  switch (k) {
    case CompositionKind::strict: return "strict";
    case CompositionKind::montreal: return "montreal";
    case CompositionKind::circular: return "circular";
  }
  return "strict";
}

CompositionKind parse_kind(std::string_view s) {
  if (s == "strict") return CompositionKind::strict;
  if (s == "montreal") return CompositionKind::montreal;
  if (s == "circular") return CompositionKind::circular;
  throw ParseError("unknown composition kind: " + std::string(s));
}

std::vector<Part> parts_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of parts");
  std::vector<Part> parts;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError("parts must be nonnegative integers");
    parts.push_back(v.get<Part>());
  }
  return parts;
}

json partitions_to_json(const std::vector<Partition>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

StateKind state_kind_for(Variant v) {
  switch (v) {
    case Variant::bulgarian:
    case Variant::dual: return StateKind::partition;
    case Variant::carolina: return StateKind::strict;
    case Variant::montreal: return StateKind::montreal;
    case Variant::servedio_yeh: return StateKind::circular;
    case Variant::janetzko: return StateKind::pointer;
    case Variant::austrian: return StateKind::austrian;
    case Variant::multiplayer: return StateKind::multiplayer;
  }
  return StateKind::partition;
}

std::string format_parts(std::span<const Part> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(parts[i]);
  }
  return out;
}

std::string format_state(const Partition& s) { return format_parts(s.parts()); }
std::string format_state(const Composition& s) { return format_parts(s.parts()); }

std::string format_state(const AustrianState& s) {
  return format_parts(s.piles.parts()) + "|bank=" + std::to_string(s.bank) + "|L=" + std::to_string(s.life);
}

std::string format_state(const PointerState& s) {
  return format_parts(s.piles.parts()) + "|pointer=" + std::to_string(s.pointer);
}

std::string format_state(const MultiplayerState& s) {
  std::string out;
  for (std::size_t i = 0; i < s.players.size(); ++i) {
    if (i > 0) out.push_back('/');
    out += format_parts(s.players[i].parts());
  }
  return out;
}

std::string format_state(const AnyState& s) {
  return std::visit([](const auto& x) { return format_state(x); }, s);
}

std::vector<Part> parse_parts(std::string_view text) {
  std::vector<Part> parts;
  if (trim(text).empty()) return parts;
  for (auto field : split(text, ',')) {
    const auto value = parse_number(field, "part");
    if (value > std::numeric_limits<Part>::max()) throw ParseError("part too large");
    parts.push_back(static_cast<Part>(value));
  }
  return parts;
}

AnyState parse_state(std::string_view text, StateKind kind) {
  switch (kind) {
    case StateKind::partition:
      return normalize(parse_parts(text));
    case StateKind::strict:
      return parse_composition(text, CompositionKind::strict);
    case StateKind::montreal:
      return parse_composition(text, CompositionKind::montreal);
    case StateKind::circular:
      return parse_composition(text, CompositionKind::circular);
    case StateKind::austrian: {
      const auto fields = split(text, '|');
      if (fields.size() != 3) throw ParseError("austrian state must look like '2,1|bank=2|L=3'");
      AustrianState s{normalize(parse_parts(fields[0])), parse_field(fields[1], "bank"),
                      static_cast<Part>(parse_field(fields[2], "L"))};
      if (s.life < 1) throw ParseError("L must be positive");
      if (s.piles.largest() > s.life) throw ParseError("a pile exceeds L");
      return s;
    }
    case StateKind::pointer: {
      const auto fields = split(text, '|');
      if (fields.size() != 2) throw ParseError("pointer state must look like '2,1,0|pointer=1'");
      PointerState s{parse_composition(fields[0], CompositionKind::circular),
                     static_cast<std::size_t>(parse_field(fields[1], "pointer"))};
      if (s.pointer < 1 || s.pointer > s.piles.size()) throw ParseError("pointer out of range");
      return s;
    }
    case StateKind::multiplayer: {
      MultiplayerState s;
      for (auto player : split(text, '/')) s.players.push_back(normalize(parse_parts(player)));
      return s;
    }
  }
  throw InternalError("unhandled state kind");
}

void to_json(json& j, const Partition& s) { j = json{{"parts", s.parts()}, {"n", s.total()}}; }

void from_json(const json& j, Partition& s) {
  s = normalize(parts_from_json(j.at("parts")));
  if (j.contains("n") && j.at("n").get<std::uint64_t>() != s.total()) throw ParseError("n does not match parts");
}

void to_json(json& j, const AustrianState& s) {
  j = json{{"piles", s.piles.parts()}, {"bank", s.bank}, {"L", s.life}};
}

void from_json(const json& j, AustrianState& s) {
  s.piles = normalize(parts_from_json(j.at("piles")));
  s.bank = j.at("bank").get<std::uint64_t>();
  s.life = j.at("L").get<Part>();
}

void to_json(json& j, const PointerState& s) {
  j = json{{"piles", s.piles.parts()}, {"pointer", s.pointer}};
}

void from_json(const json& j, PointerState& s) {
  s.piles = Composition(parts_from_json(j.at("piles")), CompositionKind::circular);
  s.pointer = j.at("pointer").get<std::size_t>();
}

void to_json(json& j, const MultiplayerState& s) {
  j = json{{"players", json::array()}};
  for (const auto& p : s.players) j["players"].push_back(p.parts());
}

void from_json(const json& j, MultiplayerState& s) {
  s.players.clear();
  for (const auto& p : j.at("players")) s.players.push_back(normalize(parts_from_json(p)));
}

json composition_to_json(const Composition& s) {
  return json{{"parts", s.parts()}, {"n", s.total()}, {"kind", kind_name(s.kind())}};
}

Composition composition_from_json(const json& j) {
  const auto kind = parse_kind(j.at("kind").get<std::string>());
  try {
    return Composition(parts_from_json(j.at("parts")), kind);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json state_to_json(const AnyState& s) {
  if (const auto* c = std::get_if<Composition>(&s)) return composition_to_json(*c);
  return std::visit(
      [](const auto& x) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Composition>) {
          return composition_to_json(x);
        } else {
          return json(x);
        }
      },
      s);
}

AnyState state_from_json(const json& j, StateKind kind) {
  switch (kind) {
    case StateKind::partition: return j.get<Partition>();
    case StateKind::strict:
    case StateKind::montreal:
    case StateKind::circular: return composition_from_json(j);
    case StateKind::austrian: return j.get<AustrianState>();
    case StateKind::pointer: return j.get<PointerState>();
    case StateKind::multiplayer: return j.get<MultiplayerState>();
  }
  throw InternalError("unhandled state kind");
}

std::string orbit_to_json_lines(const OrbitResult<AnyState>& orbit) {
  std::string out;
  for (std::size_t i = 0; i < orbit.path.size(); ++i) {
    json line = state_to_json(orbit.path[i]);
    line["step"] = i;
    out += line.dump();
    out.push_back('\n');
  }
  return out;
}

std::string orbit_to_text(const OrbitResult<AnyState>& orbit) {
  std::ostringstream os;
  for (std::size_t i = 0; i < orbit.path.size(); ++i) {
    os << i << ": " << format_state(orbit.path[i]);
    if (i == orbit.tail) os << "  <- cycle entry";
    if (i + 1 == orbit.path.size()) os << "  (repeat)";
    os << '\n';
  }
  os << "tail " << orbit.tail << ", cycle length " << orbit.cycle_length << '\n';
  return os.str();
}

json summary_to_json(const GraphSummary<AnyState>& g) {
  json j;
  j["n"] = g.n;
  j["variant"] = g.variant;
  j["state_count"] = g.states.size();
  j["component_count"] = g.component_count;
  j["max_tail"] = g.max_tail;
  j["cycles"] = json::array();
  j["cycle_lengths"] = json::array();
  for (const auto& cycle : g.cycles) {
    json c = json::array();
    for (const auto& s : cycle) c.push_back(state_to_json(s));
    j["cycles"].push_back(std::move(c));
    j["cycle_lengths"].push_back(cycle.size());
  }
  j["ge_states"] = json::array();
  for (const auto& s : g.ge_states) j["ge_states"].push_back(state_to_json(s));
  return j;
}

std::string summary_to_text(const GraphSummary<AnyState>& g) {
  std::ostringstream os;
  os << "variant " << g.variant << ", n = " << g.n << ", " << g.states.size() << " states\n";
  os << "components: " << g.component_count << "\n";
  os << "max tail: " << g.max_tail << "\n";
  for (std::size_t c = 0; c < g.cycles.size(); ++c) {
    os << "cycle " << c + 1 << " (length " << g.cycles[c].size() << "):";
    for (const auto& s : g.cycles[c]) os << " (" << format_state(s) << ")";
    os << '\n';
  }
  os << "garden of eden states: " << g.ge_states.size() << '\n';
  return os.str();
}

std::string summary_to_dot(const GraphSummary<AnyState>& g) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(g.variant) << "_" << g.n << "\" {\n";
  os << "  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    os << "  s" << i << " [label=\"" << dot_escape(format_state(g.states[i])) << "\"";
    if (g.in_degree[i] == 0) os << ", shape=box, style=filled, fillcolor=lightgrey";
    if (g.tail_length[i] == 0) os << ", peripheries=2";
    os << "];\n";
  }
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    os << "  s" << i << " -> s" << g.successor[i] << ";\n";
  }
  os << "}\n";
  return os.str();
}

json report_to_json(const ConvergenceReport& r) {
  return json{{"k", r.k},
              {"n", r.n},
              {"states_checked", r.states_checked},
              {"max_tail", r.max_tail},
              {"holds", r.holds()},
              {"exceptions", partitions_to_json(r.exceptions)}};
}

json report_to_json(const KnuthReport& r) {
  return json{{"k", r.k},
              {"exponent", r.exponent},
              {"states_checked", r.states_checked},
              {"holds", r.holds()},
              {"witnesses", partitions_to_json(r.exceptions)}};
}

json report_to_json(const ToomReport& r) {
  return json{{"k", r.k},
              {"tau", r.tau.parts()},
              {"minimal_s", r.minimal_s},
              {"expected_s", r.k * (r.k - 1)},
              {"minimal_s_matches", r.minimal_s_matches},
              {"conjugacy_holds", r.conjugacy_holds},
              {"conjugacy_failures", r.conjugacy_failures},
              {"path", partitions_to_json(r.path)}};
}

json report_to_json(const GeReachabilityReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json entry{{"cycle", partitions_to_json(e.cycle)}, {"witness_path", partitions_to_json(e.witness_path)}};
    entry["ge_witness"] = e.ge_witness ? json(e.ge_witness->parts()) : json(nullptr);
    entries.push_back(std::move(entry));
  }
  return json{{"n", r.n}, {"holds", r.holds()}, {"cycles", std::move(entries)}};
}

std::string_view chain_variant_name(ChainVariant v) { return v == ChainVariant::popov ? "popov" : "ejs"; }

ChainVariant parse_chain_variant(std::string_view name) {
  if (name == "popov") return ChainVariant::popov;
  if (name == "ejs") return ChainVariant::ejs;
  throw ParseError("unknown stochastic variant: " + std::string(name));
}

json chain_stats_to_json(const ChainStats& stats, std::size_t top) {
  std::vector<std::pair<const Partition*, std::uint64_t>> visits;
  visits.reserve(stats.visit_counts.size());
  for (const auto& [state, count] : stats.visit_counts) visits.emplace_back(&state, count);
  std::stable_sort(visits.begin(), visits.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (top > 0 && visits.size() > top) visits.resize(top);

  json counts = json::array();
  for (const auto& [state, count] : visits) counts.push_back(json{{"parts", state->parts()}, {"count", count}});
  return json{{"generator", stats.generator},
              {"n", stats.n},
              {"variant", chain_variant_name(stats.variant)},
              {"p", stats.p},
              {"seed", stats.seed},
              {"burn_in", stats.burn_in},
              {"samples", stats.samples},
              {"distinct_states", stats.visit_counts.size()},
              {"visit_counts", std::move(counts)},
              {"mean_shape", stats.mean_shape},
              {"mean_staircase_distance", stats.mean_staircase_distance},
              {"mean_energy", stats.mean_energy},
              {"final_state", stats.final_state.parts()}};
}

json shape_profile_to_json(const ShapeProfile& profile) {
  auto fit = [](const ProfileFit& f) {
    return json{{"intercept", f.intercept}, {"slope", f.slope}, {"rms_residual", f.rms_residual}};
  };
  return json{{"support", profile.support},
              {"linear", fit(profile.linear)},
              {"exponential", fit(profile.exponential)}};
}

std::string mean_shape_csv(const ChainStats& stats) {
  std::ostringstream os;
  os.precision(17);
  os << "index,mean_part\n";
  for (std::size_t i = 0; i < stats.mean_shape.size(); ++i) os << i + 1 << ',' << stats.mean_shape[i] << '\n';
  return os.str();
}

std::string render_young(const Partition& lambda, YoungStyle style) {
  std::string out;
  if (style == YoungStyle::rows) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (i > 0) out.push_back('\n');
      out.append(lambda[i], '#');
    }
    return out;
  }

  std::size_t levels = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) levels = std::max<std::size_t>(levels, i + lambda[i]);
  const std::size_t width = levels == 0 ? 0 : 2 * levels - 1;
  for (std::size_t t = levels; t >= 1; --t) {
    std::string line(width, ' ');
    // Level t holds the cells (i, t + 1 - i), i = 1..t, at offset j - i.
    for (std::size_t i = 1; i <= t; ++i) {
      const std::size_t j = t + 1 - i;
      const bool filled = i <= lambda.size() && lambda[i - 1] >= j;
      const std::size_t column = (j + levels - 1) - i;
      line[column] = filled ? '#' : '.';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    if (t > 1) out.push_back('\n');
  }
  return out;
}

}  // namespace bsol
