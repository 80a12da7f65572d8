#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsol/dynamics.hpp"
#include "bsol/error.hpp"
#include "bsol/format.hpp"
#include "bsol/necklace.hpp"
#include "bsol/operators.hpp"
#include "bsol/stochastic.hpp"
#include "bsol/variant.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace bsol;

namespace {

using Parts = std::vector<Part>;

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_python(const py::handle& obj) {
  return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

Parts parts_of(const Partition& p) { return p.parts(); }

EnumerationLimits limits_for(std::optional<std::uint64_t> max_states) {
  EnumerationLimits limits;
  limits.max_states = max_states.value_or(kDefaultAnalysisStates);
  return limits;
}

// States come in as text ("4,3,3", "2,1|bank=0|L=3") or, for the partition
// and composition variants, as a list of parts.
AnyState read_state(const py::object& state, const VariantSpec& spec) {
  const auto kind = state_kind_for(spec.kind);
  if (py::isinstance<py::str>(state)) return parse_state(state.cast<std::string>(), kind);
  if (py::isinstance<py::dict>(state)) return state_from_json(from_python(state), kind);
  auto parts = state.cast<Parts>();
  switch (kind) {
    case StateKind::partition: return normalize(std::move(parts));
    case StateKind::strict: return Composition(std::move(parts), CompositionKind::strict);
    case StateKind::montreal: return Composition(std::move(parts), CompositionKind::montreal);
    case StateKind::circular: return Composition(std::move(parts), CompositionKind::circular);
    default: throw InvalidArgument("this variant needs its state as text or a dict");
  }
}

VariantSpec spec_of(const std::string& variant, Part life, std::size_t seats, std::size_t players) {
  return VariantSpec{parse_variant(variant), life, seats, players};
}

py::dict orbit_dict(const OrbitResult<AnyState>& r) {
  py::list path;
  for (const auto& s : r.path) path.append(to_python(state_to_json(s)));
  py::list text;
  for (const auto& s : r.path) text.append(format_state(s));
  return py::dict("path"_a = path, "text"_a = text, "tail"_a = r.tail, "cycle_length"_a = r.cycle_length);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bulgarian solitaire and its variants";

  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);

  // partitions
  m.def("normalize", [](Parts raw) { return parts_of(normalize(std::move(raw))); }, "parts"_a);
  m.def("conjugate", [](Parts raw) { return parts_of(conjugate(normalize(std::move(raw)))); }, "parts"_a);
  m.def("staircase", [](std::uint64_t k) { return parts_of(staircase(k)); }, "k"_a);
  m.def("triangular_decompose", [](std::uint64_t n) {
    const auto d = triangular_decompose(n);
    return py::make_tuple(d.k, d.r);
  }, "n"_a);
  m.def("potential_energy", [](Parts raw) { return potential_energy(normalize(std::move(raw))); }, "parts"_a);
  m.def("partitions", [](std::uint64_t n, std::optional<std::uint64_t> max_states) {
    std::vector<Parts> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p.parts()); }, limits_for(max_states));
    return out;
  }, "n"_a, "max_states"_a = py::none());
  m.def("compositions", [](std::uint64_t n, std::optional<std::uint64_t> max_states) {
    std::vector<Parts> out;
    for_each_composition(n, [&](const Composition& c) { out.push_back(c.parts()); }, limits_for(max_states));
    return out;
  }, "n"_a, "max_states"_a = py::none());

  // operators
  m.def("bulgarian_step", [](Parts raw) { return parts_of(bulgarian_step(normalize(std::move(raw)))); }, "parts"_a);
  m.def("dual_step", [](Parts raw) { return parts_of(dual_step(normalize(std::move(raw)))); }, "parts"_a);
  m.def("carolina_step", [](Parts raw) {
    return carolina_step(Composition(std::move(raw), CompositionKind::strict)).parts();
  }, "parts"_a);
  m.def("montreal_step", [](Parts raw) {
    return montreal_step(Composition(std::move(raw), CompositionKind::montreal)).parts();
  }, "parts"_a);
  m.def("servedio_yeh_step", [](Parts raw) {
    return servedio_yeh_step(Composition(std::move(raw), CompositionKind::circular)).parts();
  }, "parts"_a);
  m.def("janetzko_step", [](Parts raw, std::size_t pointer) {
    const auto s = janetzko_step(PointerState{Composition(std::move(raw), CompositionKind::circular), pointer});
    return py::make_tuple(s.piles.parts(), s.pointer);
  }, "parts"_a, "pointer"_a);
  m.def("austrian_step", [](Parts raw, std::uint64_t bank, Part life) {
    const auto s = austrian_step(AustrianState{normalize(std::move(raw)), bank, life});
    return py::make_tuple(s.piles.parts(), s.bank, s.life);
  }, "parts"_a, "bank"_a, "L"_a);
  m.def("multiplayer_step", [](std::vector<Parts> players) {
    MultiplayerState s;
    for (auto& p : players) s.players.push_back(normalize(std::move(p)));
    std::vector<Parts> out;
    for (const auto& p : multiplayer_step(s).players) out.push_back(p.parts());
    return out;
  }, "players"_a);
  m.def("popov_masked_step", [](Parts raw, std::vector<std::size_t> selected) {
    return parts_of(popov_masked_step(normalize(std::move(raw)), selected));
  }, "parts"_a, "selected"_a);
  m.def("ejs_masked_step", [](Parts raw, Parts picks) {
    return parts_of(ejs_masked_step(normalize(std::move(raw)), picks));
  }, "parts"_a, "picks"_a);

  // dynamics
  m.def("orbit", [](const py::object& state, const std::string& variant, Part life, std::size_t seats,
                    std::size_t players, std::optional<std::size_t> step_bound) {
    const auto spec = spec_of(variant, life, seats, players);
    return orbit_dict(orbit(spec, read_state(state, spec), step_bound));
  }, "state"_a, "variant"_a = "bulgarian", "L"_a = 0, "seats"_a = 0, "players"_a = 0,
        "step_bound"_a = py::none());
  m.def("analyze", [](std::uint64_t n, const std::string& variant, Part life, std::size_t seats,
                      std::size_t players, unsigned workers, std::uint64_t max_states) {
    GraphSummary<AnyState> g;
    {
      py::gil_scoped_release release;
      g = analyze_state_space(n, spec_of(variant, life, seats, players), AnalysisOptions{workers, max_states});
    }
    return to_python(summary_to_json(g));
  }, "n"_a, "variant"_a = "bulgarian", "L"_a = 0, "seats"_a = 0, "players"_a = 0, "workers"_a = 1,
        "max_states"_a = kDefaultAnalysisStates);
  m.def("garden_of_eden_test", [](Parts raw) { return garden_of_eden_test(normalize(std::move(raw))); },
        "parts"_a);
  m.def("staircase_convergence_check", [](std::uint64_t k) {
    return to_python(report_to_json(staircase_convergence_check(k, limits_for(std::nullopt))));
  }, "k"_a);
  m.def("knuth_exponent_check", [](std::uint64_t k) {
    return to_python(report_to_json(knuth_exponent_check(k, limits_for(std::nullopt))));
  }, "k"_a);
  m.def("toom_path", [](std::uint64_t k) { return to_python(report_to_json(toom_path(k))); }, "k"_a);
  m.def("ge_reachability_check", [](std::uint64_t n) {
    return to_python(report_to_json(ge_reachability_check(n, limits_for(std::nullopt))));
  }, "n"_a);

  // enumeration
  m.def("euler_phi", &euler_phi, "d"_a);
  m.def("binomial", &binomial, "n"_a, "k"_a);
  m.def("partition_count", &partition_count, "n"_a);
  m.def("necklace_count", py::overload_cast<std::uint64_t>(&necklace_count), "n"_a);
  m.def("necklace_count_kr", py::overload_cast<std::uint64_t, std::uint64_t>(&necklace_count), "k"_a, "r"_a);
  m.def("is_minimal_energy_state", [](Parts raw) { return is_minimal_energy_state(normalize(std::move(raw))); },
        "parts"_a);
  m.def("necklace_of_state", [](Parts raw) { return necklace_of_state(normalize(std::move(raw))).to_string(); },
        "parts"_a);
  m.def("canonical_necklace", [](const std::string& beads) {
    std::vector<bool> b;
    for (char c : beads) {
      if (c != 'B' && c != 'W') throw InvalidArgument("beads must be 'B' or 'W'");
      b.push_back(c == 'B');
    }
    return Necklace(std::move(b)).canonical().to_string();
  }, "beads"_a);

  // stochastic
  m.def("simulate", [](const std::string& variant, std::uint64_t n, double p, std::uint64_t seed,
                       std::optional<std::uint64_t> samples, std::optional<std::uint64_t> burn_in,
                       std::optional<Parts> initial, std::size_t top) {
    ChainConfig config{n, parse_chain_variant(variant), p, seed, burn_in, samples, std::nullopt};
    if (initial) config.initial = normalize(std::move(*initial));
    ChainStats stats;
    {
      py::gil_scoped_release release;
      stats = run_chain(config);
    }
    json j = chain_stats_to_json(stats, top);
    if (stats.samples > 0) j["profile"] = shape_profile_to_json(shape_profile(stats));
    return to_python(j);
  }, "variant"_a, "n"_a, "p"_a, "seed"_a = 0, "samples"_a = py::none(), "burn_in"_a = py::none(),
        "initial"_a = py::none(), "top"_a = 0);
  m.def("staircase_distance", [](Parts raw) { return staircase_distance(normalize(std::move(raw))); }, "parts"_a);

  // formatting
  m.def("format_state", [](const py::object& state, const std::string& variant) {
    return format_state(read_state(state, spec_of(variant, 0, 0, 0)));
  }, "state"_a, "variant"_a = "bulgarian");
  m.def("render_young", [](Parts raw, const std::string& style) {
    if (style != "rows" && style != "cradle") throw InvalidArgument("style must be rows or cradle");
    return render_young(normalize(std::move(raw)), style == "rows" ? YoungStyle::rows : YoungStyle::cradle);
  }, "parts"_a, "style"_a = "rows");
}
