#include "bsol/operators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bsol/error.hpp"

namespace bsol {

namespace {

void require_kind(const Composition& alpha, CompositionKind kind, const char* op) {
  if (alpha.kind() != kind) throw InvalidArgument(std::string(op) + ": wrong composition kind");
}

}  // namespace

std::uint64_t MultiplayerState::total() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& p : players) sum += p.total();
  return sum;
}

Partition bulgarian_step(const Partition& lambda) {
  std::vector<Part> next;
  next.reserve(lambda.size() + 1);
  for (Part p : lambda) next.push_back(p - 1);
  next.push_back(static_cast<Part>(lambda.size()));
  return normalize(std::move(next));
}

Composition carolina_step(const Composition& alpha) {
  require_kind(alpha, CompositionKind::strict, "carolina_step");
  if (alpha.empty()) return alpha;
  std::vector<Part> next;
  next.reserve(alpha.size() + 1);
  next.push_back(static_cast<Part>(alpha.size()));
  for (Part p : alpha) {
    if (p > 1) next.push_back(p - 1);
  }
  return Composition(std::move(next), CompositionKind::strict);
}

Composition montreal_step(const Composition& alpha) {
  require_kind(alpha, CompositionKind::montreal, "montreal_step");
  const auto& a = alpha.parts();
  std::vector<Part> next;
  next.reserve(a.size() + 2);
  std::size_t i = 0;
  while (i < a.size()) {
    // Positive block [i, j) maps to (a_i - 1, ..., a_{j-1} - 1, j - i).
    std::size_t j = i;
    while (j < a.size() && a[j] > 0) next.push_back(a[j++] - 1);
    next.push_back(static_cast<Part>(j - i));
    if (j == a.size()) break;
    // A run of r zeros separating two blocks shrinks to r - 1.
    std::size_t z = j;
    while (a[z] == 0) ++z;
    next.insert(next.end(), z - j - 1, Part{0});
    i = z;
  }
  return canonical_montreal(std::move(next));
}

Partition dual_step(const Partition& lambda) {
  if (lambda.empty()) throw InvalidArgument("dual_step requires a nonempty partition");
  const auto& parts = lambda.parts();
  Part cards = parts.front();
  std::vector<Part> next(parts.begin() + 1, parts.end());
  for (auto& p : next) {
    if (cards == 0) break;
    ++p;
    --cards;
  }
  next.insert(next.end(), cards, Part{1});
  return normalize(std::move(next));
}

AustrianState austrian_step(const AustrianState& state) {
  if (state.life < 1) throw InvalidArgument("austrian_step requires L >= 1");
  if (state.piles.largest() > state.life) {
    throw InvalidArgument("austrian_step: a pile exceeds the machine life L");
  }
  std::vector<Part> next;
  next.reserve(state.piles.size() + state.bank / state.life + 2);
  std::uint64_t bank = state.bank + state.piles.size();
  for (Part p : state.piles) next.push_back(p - 1);
  next.insert(next.end(), bank / state.life, state.life);
  bank %= state.life;
  return {normalize(std::move(next)), bank, state.life};
}

MultiplayerState multiplayer_step(const MultiplayerState& state) {
  const std::size_t s = state.players.size();
  if (s == 0) throw InvalidArgument("multiplayer_step requires at least one player");
  MultiplayerState next;
  next.players.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    const auto& mine = state.players[i];
    const auto& left = state.players[(i + s - 1) % s];
    std::vector<Part> parts;
    parts.reserve(mine.size() + 1);
    for (Part p : mine) parts.push_back(p - 1);
    parts.push_back(static_cast<Part>(left.size()));
    next.players.push_back(normalize(std::move(parts)));
  }
  return next;
}

Composition servedio_yeh_step(const Composition& alpha) {
  require_kind(alpha, CompositionKind::circular, "servedio_yeh_step");
  const std::size_t c = alpha.size();
  std::vector<Part> next(c, 0);
  for (std::size_t i = 0; i < c; ++i) {
    const Part laps = static_cast<Part>(alpha[i] / c);
    const std::size_t rest = alpha[i] % c;
    if (laps > 0) {
      for (auto& seat : next) seat += laps;
    }
    for (std::size_t t = 0; t < rest; ++t) ++next[(i + t) % c];
  }
  return Composition(std::move(next), CompositionKind::circular);
}

PointerState janetzko_step(const PointerState& state) {
  require_kind(state.piles, CompositionKind::circular, "janetzko_step");
  const std::size_t c = state.piles.size();
  if (state.pointer < 1 || state.pointer > c) {
    throw InvalidArgument("janetzko_step: pointer out of range");
  }
  const std::size_t from = state.pointer - 1;
  const Part cards = state.piles[from];
  if (cards == 0) return {state.piles, from + 1 == c ? 1 : state.pointer + 1};

  std::vector<Part> next = state.piles.parts();
  next[from] = 0;
  const Part laps = static_cast<Part>(cards / c);
  const std::size_t rest = cards % c;
  if (laps > 0) {
    for (auto& seat : next) seat += laps;
  }
  for (std::size_t t = 1; t <= rest; ++t) ++next[(from + t) % c];
  const std::size_t last = (from + cards) % c;
  return {Composition(std::move(next), CompositionKind::circular), last + 1};
}

Partition popov_masked_step(const Partition& lambda, std::span<const std::size_t> selected) {
  std::vector<Part> next = lambda.parts();
  std::vector<bool> seen(next.size(), false);
  for (std::size_t idx : selected) {
    if (idx >= next.size()) throw InvalidArgument("popov_masked_step: pile index out of range");
    if (seen[idx]) throw InvalidArgument("popov_masked_step: pile selected twice");
    seen[idx] = true;
    --next[idx];
  }
  next.push_back(static_cast<Part>(selected.size()));
  return normalize(std::move(next));
}

Partition ejs_masked_step(const Partition& lambda, std::span<const Part> picks) {
  if (picks.size() != lambda.size()) {
    throw InvalidArgument("ejs_masked_step: one pick count per pile required");
  }
  std::vector<Part> next = lambda.parts();
  std::uint64_t picked = 0;
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (picks[i] > next[i]) throw InvalidArgument("ejs_masked_step: pick count exceeds pile size");
    next[i] -= picks[i];
    picked += picks[i];
  }
  next.push_back(static_cast<Part>(picked));
  return normalize(std::move(next));
}

}  // namespace bsol
