#include "bsol/variant.hpp"

#include <limits>
#include <string>
#include <unordered_set>

#include "bsol/error.hpp"

namespace bsol {

namespace {

struct NameEntry {
  Variant variant;
  std::string_view name;
};

constexpr NameEntry kNames[] = {
    {Variant::bulgarian, "bulgarian"},     {Variant::carolina, "carolina"},
    {Variant::montreal, "montreal"},       {Variant::dual, "dual"},
    {Variant::austrian, "austrian"},       {Variant::multiplayer, "multiplayer"},
    {Variant::servedio_yeh, "servedio-yeh"}, {Variant::janetzko, "janetzko"},
};

template <class T>
const T& expect(const AnyState& state, Variant v) {
  if (const T* s = std::get_if<T>(&state)) return *s;
  throw InvalidArgument("state type does not match variant " + std::string(variant_name(v)));
}

void expect_kind(const Composition& c, CompositionKind kind, Variant v) {
  if (c.kind() != kind) {
    throw InvalidArgument("composition kind does not match variant " + std::string(variant_name(v)));
  }
}

// Guards every enumerator below against unbounded memory use.
class Budget {
 public:
  explicit Budget(std::uint64_t max_states) : max_(max_states) {}
  void add(std::uint64_t k = 1) {
    used_ += k;
    if (used_ > max_) {
      throw BoundExceeded("state space exceeds the budget of " + std::to_string(max_) + " states");
    }
  }

 private:
  std::uint64_t max_;
  std::uint64_t used_ = 0;
};

template <class Visit>
void weak_compositions(std::uint64_t n, std::size_t parts, std::vector<Part>& prefix, Visit&& visit) {
  if (parts == 1) {
    prefix.push_back(static_cast<Part>(n));
    visit(prefix);
    prefix.pop_back();
    return;
  }
  for (std::uint64_t first = n + 1; first-- > 0;) {
    prefix.push_back(static_cast<Part>(first));
    weak_compositions(n - first, parts - 1, prefix, visit);
    prefix.pop_back();
  }
}

std::vector<AnyState> montreal_space(std::uint64_t n, Budget& budget) {
  std::vector<AnyState> out;
  std::unordered_set<Composition> seen;
  auto admit = [&](Composition c) {
    if (seen.insert(c).second) {
      budget.add();
      out.emplace_back(std::move(c));
    }
  };
  if (n == 0) {
    admit(Composition({}, CompositionKind::montreal));
    return out;
  }
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<Part> prefix;
    weak_compositions(n, len, prefix, [&](const std::vector<Part>& parts) {
      if (parts.front() > 0 && parts.back() > 0) admit(Composition(parts, CompositionKind::montreal));
    });
  }
  // Close under the step; `out` grows while it is scanned.
  for (std::size_t i = 0; i < out.size(); ++i) {
    admit(montreal_step(std::get<Composition>(out[i])));
  }
  return out;
}

std::vector<AnyState> partitions_space(std::uint64_t n, Budget& budget) {
  std::vector<AnyState> out;
  EnumerationLimits limits;
  limits.max_states = std::numeric_limits<std::uint64_t>::max();
  for_each_partition(n, [&](const Partition& p) {
    budget.add();
    out.emplace_back(p);
  }, limits);
  return out;
}

}  // namespace

std::string_view variant_name(Variant v) {
  for (const auto& e : kNames) {
    if (e.variant == v) return e.name;
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  std::string normalized(name);
  for (auto& ch : normalized) {
    if (ch == '_') ch = '-';
  }
  for (const auto& e : kNames) {
    if (e.name == normalized) return e.variant;
  }
  throw ParseError("unknown variant: " + std::string(name));
}

std::uint64_t total_cards(const AnyState& state) {
  return std::visit([](const auto& s) { return s.total(); }, state);
}

void check_state(const VariantSpec& spec, const AnyState& state) {
  switch (spec.kind) {
    case Variant::bulgarian:
      expect<Partition>(state, spec.kind);
      return;
    case Variant::dual:
      if (expect<Partition>(state, spec.kind).empty()) throw InvalidArgument("dual needs at least one pile");
      return;
    case Variant::carolina:
      expect_kind(expect<Composition>(state, spec.kind), CompositionKind::strict, spec.kind);
      return;
    case Variant::montreal:
      expect_kind(expect<Composition>(state, spec.kind), CompositionKind::montreal, spec.kind);
      return;
    case Variant::servedio_yeh: {
      const auto& c = expect<Composition>(state, spec.kind);
      expect_kind(c, CompositionKind::circular, spec.kind);
      if (spec.seats != 0 && c.size() != spec.seats) throw InvalidArgument("seat count mismatch");
      return;
    }
    case Variant::janetzko: {
      const auto& s = expect<PointerState>(state, spec.kind);
      expect_kind(s.piles, CompositionKind::circular, spec.kind);
      if (spec.seats != 0 && s.piles.size() != spec.seats) throw InvalidArgument("seat count mismatch");
      if (s.pointer < 1 || s.pointer > s.piles.size()) throw InvalidArgument("pointer out of range");
      return;
    }
    case Variant::austrian: {
      const auto& s = expect<AustrianState>(state, spec.kind);
      if (s.life < 1) throw InvalidArgument("austrian requires L >= 1");
      if (spec.life != 0 && s.life != spec.life) throw InvalidArgument("machine life mismatch");
      if (s.piles.largest() > s.life) throw InvalidArgument("a pile exceeds the machine life L");
      return;
    }
    case Variant::multiplayer: {
      const auto& s = expect<MultiplayerState>(state, spec.kind);
      if (s.players.empty()) throw InvalidArgument("multiplayer needs at least one player");
      if (spec.players != 0 && s.players.size() != spec.players) throw InvalidArgument("player count mismatch");
      return;
    }
  }
}

AnyState step(const VariantSpec& spec, const AnyState& state) {
  switch (spec.kind) {
    case Variant::bulgarian:
      return bulgarian_step(expect<Partition>(state, spec.kind));
    case Variant::dual:
      return dual_step(expect<Partition>(state, spec.kind));
    case Variant::carolina:
      return carolina_step(expect<Composition>(state, spec.kind));
    case Variant::montreal:
      return montreal_step(expect<Composition>(state, spec.kind));
    case Variant::servedio_yeh:
      return servedio_yeh_step(expect<Composition>(state, spec.kind));
    case Variant::janetzko:
      return janetzko_step(expect<PointerState>(state, spec.kind));
    case Variant::austrian:
      return austrian_step(expect<AustrianState>(state, spec.kind));
    case Variant::multiplayer:
      return multiplayer_step(expect<MultiplayerState>(state, spec.kind));
  }
  throw InternalError("unhandled variant");
}

std::size_t default_step_bound(const VariantSpec& spec, const AnyState& state) {
  std::uint64_t size = total_cards(state);
  if (const auto* p = std::get_if<PointerState>(&state)) size += p->piles.size();
  if (const auto* m = std::get_if<MultiplayerState>(&state)) size += m->players.size();
  if (spec.kind == Variant::servedio_yeh) size += std::get<Composition>(state).size();
  return std::max<std::size_t>(default_step_bound(size), 1024);
}

OrbitResult<AnyState> orbit(const VariantSpec& spec, const AnyState& start,
                            std::optional<std::size_t> step_bound) {
  check_state(spec, start);
  const std::size_t bound = step_bound.value_or(default_step_bound(spec, start));
  return orbit(start, [&](const AnyState& s) { return step(spec, s); }, bound);
}

std::vector<AnyState> enumerate_state_space(std::uint64_t n, const VariantSpec& spec,
                                            std::uint64_t max_states) {
  Budget budget(max_states);
  std::vector<AnyState> out;
  switch (spec.kind) {
    case Variant::bulgarian:
      return partitions_space(n, budget);
    case Variant::dual:
      if (n == 0) throw InvalidArgument("dual needs n >= 1");
      return partitions_space(n, budget);
    case Variant::carolina: {
      EnumerationLimits limits;
      limits.max_states = max_states;
      for_each_composition(n, [&](const Composition& c) { out.emplace_back(c); }, limits);
      return out;
    }
    case Variant::montreal:
      return montreal_space(n, budget);
    case Variant::servedio_yeh:
    case Variant::janetzko: {
      if (spec.seats == 0) throw InvalidArgument("variant needs a positive seat count");
      const bool pointer = spec.kind == Variant::janetzko;
      std::vector<Part> prefix;
      weak_compositions(n, spec.seats, prefix, [&](const std::vector<Part>& parts) {
        Composition piles(parts, CompositionKind::circular);
        if (!pointer) {
          budget.add();
          out.emplace_back(std::move(piles));
          return;
        }
        for (std::size_t p = 1; p <= spec.seats; ++p) {
          budget.add();
          out.emplace_back(PointerState{piles, p});
        }
      });
      return out;
    }
    case Variant::austrian: {
      if (spec.life < 1) throw InvalidArgument("austrian needs L >= 1");
      for (std::uint64_t bank = 0; bank < spec.life && bank <= n; ++bank) {
        for (auto& piles : partitions_space(n - bank, budget)) {
          auto& p = std::get<Partition>(piles);
          if (p.largest() <= spec.life) out.emplace_back(AustrianState{std::move(p), bank, spec.life});
        }
      }
      return out;
    }
    case Variant::multiplayer: {
      if (spec.players == 0) throw InvalidArgument("multiplayer needs at least one player");
      std::vector<Part> prefix;
      weak_compositions(n, spec.players, prefix, [&](const std::vector<Part>& shares) {
        std::vector<std::vector<Partition>> options;
        for (Part share : shares) options.push_back(enumerate_partitions(share));
        std::vector<std::size_t> pick(shares.size(), 0);
        while (true) {
          MultiplayerState s;
          for (std::size_t i = 0; i < shares.size(); ++i) s.players.push_back(options[i][pick[i]]);
          budget.add();
          out.emplace_back(std::move(s));
          std::size_t i = shares.size();
          while (i > 0 && ++pick[i - 1] == options[i - 1].size()) pick[--i] = 0;
          if (i == 0) break;
        }
      });
      return out;
    }
  }
  throw InternalError("unhandled variant");
}

GraphSummary<AnyState> analyze_state_space(std::uint64_t n, const VariantSpec& spec,
                                           const AnalysisOptions& options) {
  auto states = enumerate_state_space(n, spec, options.max_states);
  auto g = analyze_functional_graph(
      std::move(states), [&](const AnyState& s) { return step(spec, s); }, options.workers);
  g.n = n;
  g.variant = std::string(variant_name(spec.kind));
  return g;
}

}  // namespace bsol
