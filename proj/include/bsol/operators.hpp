#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bsol/partition.hpp"

namespace bsol {

/// Austrian solitaire: ordinary piles (machines, each with at most `life`
/// cards) plus a bank that never holds `life` or more cards after a step.
struct AustrianState {
  Partition piles;
  std::uint64_t bank = 0;
  Part life = 1;

  std::uint64_t total() const noexcept { return piles.total() + bank; }

  friend bool operator==(const AustrianState&, const AustrianState&) = default;
  friend std::strong_ordering operator<=>(const AustrianState&, const AustrianState&) = default;
};

/// Pointer game (janetzko): circular piles and a 1-based pointer seat.
struct PointerState {
  Composition piles;
  std::size_t pointer = 1;

  std::uint64_t total() const noexcept { return piles.total(); }

  friend bool operator==(const PointerState&, const PointerState&) = default;
  friend std::strong_ordering operator<=>(const PointerState&, const PointerState&) = default;
};

/// Multiplayer solitaire: one partition per player around the table.
struct MultiplayerState {
  std::vector<Partition> players;

  std::uint64_t total() const noexcept;

  friend bool operator==(const MultiplayerState&, const MultiplayerState&) = default;
  friend std::strong_ordering operator<=>(const MultiplayerState& a, const MultiplayerState& b) {
    return a.players <=> b.players;
  }
};

/// One card from every pile forms a new pile of size c (the old pile count).
Partition bulgarian_step(const Partition& lambda);

/// Ordered version: the new pile goes in front, exhausted piles vanish in place.
Composition carolina_step(const Composition& alpha);

/// Montreal rule on a composition with positive endpoints; applied block by
/// block across zero runs, then stripped of leading and trailing zeros.
Composition montreal_step(const Composition& alpha);

/// Removes one largest pile and deals its cards to the others from largest to
/// smallest; cards left over become piles of size 1.
Partition dual_step(const Partition& lambda);

AustrianState austrian_step(const AustrianState& state);

/// Player i receives a pile of size c_{i-1}, the pile count of the player on
/// its left (cyclically, player 0 receives from the last player).
MultiplayerState multiplayer_step(const MultiplayerState& state);

/// Every seat i deals its cards one by one to seats i, i+1, ... (mod c).
Composition servedio_yeh_step(const Composition& alpha);

/// The pointed seat deals its cards to the following seats; the pointer moves
/// to the seat that received the last card. An empty pointed seat only
/// advances the pointer by one.
PointerState janetzko_step(const PointerState& state);

/// Deterministic half of the Popov random solitaire: decrements exactly the
/// selected piles (0-based indices into lambda) and adds a pile of their count.
Partition popov_masked_step(const Partition& lambda, std::span<const std::size_t> selected);

/// Deterministic half of the card-picking solitaire: picks[i] cards leave pile
/// i and together form one new pile.
Partition ejs_masked_step(const Partition& lambda, std::span<const Part> picks);

}  // namespace bsol

template <>
struct std::hash<bsol::AustrianState> {
  std::size_t operator()(const bsol::AustrianState& s) const noexcept {
    auto h = std::hash<bsol::Partition>{}(s.piles);
    h = bsol::detail::hash_mix(h, s.bank);
    return bsol::detail::hash_mix(h, s.life);
  }
};

template <>
struct std::hash<bsol::PointerState> {
  std::size_t operator()(const bsol::PointerState& s) const noexcept {
    return bsol::detail::hash_mix(std::hash<bsol::Composition>{}(s.piles), s.pointer);
  }
};

template <>
struct std::hash<bsol::MultiplayerState> {
  std::size_t operator()(const bsol::MultiplayerState& s) const noexcept {
    std::size_t h = s.players.size();
    for (const auto& p : s.players) h = bsol::detail::hash_mix(h, std::hash<bsol::Partition>{}(p));
    return h;
  }
};
