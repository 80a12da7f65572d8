#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "bsol/dynamics.hpp"
#include "bsol/operators.hpp"
#include "bsol/partition.hpp"

namespace bsol {

enum class Variant {
  bulgarian,
  carolina,
  montreal,
  dual,
  austrian,
  multiplayer,
  servedio_yeh,
  janetzko,
};

std::string_view variant_name(Variant v);
/// Accepts the names returned by variant_name, with '-' or '_' as separator.
Variant parse_variant(std::string_view name);

/// A deterministic operator together with the parameters that fix its state
/// space: machine life L (austrian), seats (servedio_yeh, janetzko) and
/// players (multiplayer).
struct VariantSpec {
  Variant kind = Variant::bulgarian;
  Part life = 0;
  std::size_t seats = 0;
  std::size_t players = 0;
};

using AnyState = std::variant<Partition, Composition, AustrianState, PointerState, MultiplayerState>;

std::uint64_t total_cards(const AnyState& state);

/// Throws InvalidArgument when `state` is not a valid state of the variant.
void check_state(const VariantSpec& spec, const AnyState& state);

AnyState step(const VariantSpec& spec, const AnyState& state);

/// Default orbit step bound for the runtime layer: 4 N^2 with N the card
/// count plus seats and players, and never below 1024.
std::size_t default_step_bound(const VariantSpec& spec, const AnyState& state);

OrbitResult<AnyState> orbit(const VariantSpec& spec, const AnyState& start,
                            std::optional<std::size_t> step_bound = std::nullopt);

/// Default cap on the number of states an analysis may hold in memory.
inline constexpr std::uint64_t kDefaultAnalysisStates = std::uint64_t{1} << 21;

struct AnalysisOptions {
  unsigned workers = 1;
  std::uint64_t max_states = kDefaultAnalysisStates;
};

/// All states of n cards for the variant. Montreal compositions with interior
/// zeros form an infinite set; the finite space used here is the union of the
/// orbits of every Montreal composition of n with at most n entries.
std::vector<AnyState> enumerate_state_space(std::uint64_t n, const VariantSpec& spec,
                                            std::uint64_t max_states = kDefaultAnalysisStates);

GraphSummary<AnyState> analyze_state_space(std::uint64_t n, const VariantSpec& spec,
                                           const AnalysisOptions& options = {});

}  // namespace bsol
