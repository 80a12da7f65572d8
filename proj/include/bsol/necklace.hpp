#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bsol/partition.hpp"

namespace bsol {

inline constexpr std::uint64_t kMaxPartitionCountN = 200;

std::uint64_t euler_phi(std::uint64_t d);

/// Exact binomial coefficient; throws BoundExceeded if it overflows 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of binary necklaces of length k with r black beads under rotation.
std::uint64_t necklace_count(std::uint64_t k, std::uint64_t r);

/// Number of components of the Bulgarian solitaire graph on the partitions of n.
std::uint64_t necklace_count(std::uint64_t n);

/// p(n) by the pentagonal-number recurrence, n <= 200.
std::uint64_t partition_count(std::uint64_t n);

/// A cyclic string of black/white beads. Bead order is significant for
/// rotated() and beads(); equality is up to rotation.
class Necklace {
 public:
  Necklace() = default;
  explicit Necklace(std::vector<bool> beads) : beads_(std::move(beads)) {}

  const std::vector<bool>& beads() const noexcept { return beads_; }
  std::size_t size() const noexcept { return beads_.size(); }
  std::size_t black_count() const noexcept;

  /// Bead i moves to position (i + shift) mod k.
  Necklace rotated(std::size_t shift = 1) const;
  /// The lexicographically smallest rotation, with black ordered before white.
  Necklace canonical() const;
  /// Smallest p > 0 with rotated(p) identical to *this.
  std::size_t period() const;
  /// Beads as 'B'/'W' in the stored order.
  std::string to_string() const;

  friend bool operator==(const Necklace& a, const Necklace& b) {
    return a.canonical().beads_ == b.canonical().beads_;
  }

 private:
  std::vector<bool> beads_;
};

/// Minimal-energy test: with (k, r) = triangular_decompose(n), cradle levels
/// 1..k-1 are full and level k+1 is empty.
bool is_minimal_energy_state(const Partition& lambda);

/// Reads level k of a minimal-energy state: bead i (1-based) is black iff the
/// cell (i, k+1-i) is in the diagram. Throws InvalidArgument otherwise.
Necklace necklace_of_state(const Partition& lambda);

}  // namespace bsol
