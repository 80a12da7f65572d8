#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bsol/dynamics.hpp"
#include "bsol/necklace.hpp"
#include "bsol/operators.hpp"
#include "bsol/partition.hpp"
#include "bsol/stochastic.hpp"
#include "bsol/variant.hpp"

namespace bsol {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Text forms. Parts are comma separated ("4,3,3"); the empty string is the
// empty state. Compound states append '|'-separated fields:
//   austrian     "2,1|bank=2|L=3"
//   janetzko     "2,1,0|pointer=1"
//   multiplayer  "2,1/2,1" (one partition per player)

enum class StateKind { partition, strict, montreal, circular, austrian, pointer, multiplayer };

StateKind state_kind_for(Variant v);

std::string format_parts(std::span<const Part> parts);
std::string format_state(const Partition& s);
std::string format_state(const Composition& s);
std::string format_state(const AustrianState& s);
std::string format_state(const PointerState& s);
std::string format_state(const MultiplayerState& s);
std::string format_state(const AnyState& s);

/// Nonnegative integers separated by commas; whitespace around entries is
/// ignored. Throws ParseError on anything else.
std::vector<Part> parse_parts(std::string_view text);

/// Parses and canonicalizes: partitions are normalized, compositions keep
/// their order. Throws ParseError (malformed text, negative entries, zeros
/// where the kind forbids them).
AnyState parse_state(std::string_view text, StateKind kind);

// ---------------------------------------------------------------------------
// JSON forms.

void to_json(json& j, const Partition& s);
void from_json(const json& j, Partition& s);
void to_json(json& j, const AustrianState& s);
void from_json(const json& j, AustrianState& s);
void to_json(json& j, const PointerState& s);
void from_json(const json& j, PointerState& s);
void to_json(json& j, const MultiplayerState& s);
void from_json(const json& j, MultiplayerState& s);

/// Compositions carry their kind: {"parts":[...],"n":N,"kind":"montreal"}.
json composition_to_json(const Composition& s);
Composition composition_from_json(const json& j);

json state_to_json(const AnyState& s);
AnyState state_from_json(const json& j, StateKind kind);

/// One JSON object per line, path order, each with a "step" field.
std::string orbit_to_json_lines(const OrbitResult<AnyState>& orbit);
std::string orbit_to_text(const OrbitResult<AnyState>& orbit);

json summary_to_json(const GraphSummary<AnyState>& g);
std::string summary_to_text(const GraphSummary<AnyState>& g);
/// One edge per state to its image; Garden of Eden states are filled boxes
/// and cycle states get a double border.
std::string summary_to_dot(const GraphSummary<AnyState>& g);

json report_to_json(const ConvergenceReport& r);
json report_to_json(const KnuthReport& r);
json report_to_json(const ToomReport& r);
json report_to_json(const GeReachabilityReport& r);

std::string_view chain_variant_name(ChainVariant v);
ChainVariant parse_chain_variant(std::string_view name);
/// `top` limits visit_counts to the most visited states (0 keeps all).
json chain_stats_to_json(const ChainStats& stats, std::size_t top = 0);
json shape_profile_to_json(const ShapeProfile& profile);
std::string mean_shape_csv(const ChainStats& stats);

// ---------------------------------------------------------------------------
// Young diagrams.

enum class YoungStyle { rows, cradle };

/// rows: one line of '#' per part, largest first. cradle: the diagram turned
/// by 45 degrees; cell (i, j) sits on level i + j - 1 (bottom line is level 1)
/// at horizontal offset j - i. Empty cells of partly filled levels print '.'.
std::string render_young(const Partition& lambda, YoungStyle style);

}  // namespace bsol
