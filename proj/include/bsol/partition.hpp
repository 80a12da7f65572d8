#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace bsol {

using Part = std::uint32_t;

namespace detail {

inline std::size_t hash_mix(std::size_t seed, std::uint64_t value) noexcept {
  value += 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  value ^= value >> 31;
  value *= 0xbf58476d1ce4e5b9ULL;
  return seed ^ static_cast<std::size_t>(value ^ (value >> 29));
}

inline std::size_t hash_parts(std::span<const Part> parts) noexcept {
  std::size_t h = parts.size();
  for (Part p : parts) h = hash_mix(h, p);
  return h;
}

}  // namespace detail

/// A partition of n: positive parts (pile sizes) in nonincreasing order.
/// The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Wraps parts that are already canonical. Throws InvalidArgument on zeros
  /// or increasing neighbours; use normalize() for arbitrary input.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

  const std::vector<Part>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  std::uint64_t total() const noexcept { return total_; }
  Part largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  Part operator[](std::size_t i) const { return parts_[i]; }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  struct Trusted {};
  Partition(Trusted, std::vector<Part> parts, std::uint64_t total)
      : parts_(std::move(parts)), total_(total) {}

  friend Partition normalize(std::vector<Part> raw);

  std::vector<Part> parts_;
  std::uint64_t total_ = 0;
};

/// Drops zeros and sorts the remaining parts into nonincreasing order.
Partition normalize(std::vector<Part> raw);

Partition conjugate(const Partition& lambda);

/// The staircase (k, k-1, ..., 1) of the triangular number k(k+1)/2.
Partition staircase(std::uint64_t k);

enum class CompositionKind {
  strict,    // every part positive
  montreal,  // first and last parts positive, interior zeros allowed
  circular,  // fixed length, zeros anywhere
};

/// An ordered sequence of parts. Which zeros are admissible depends on kind.
class Composition {
 public:
  Composition() = default;
  Composition(std::vector<Part> parts, CompositionKind kind);

  const std::vector<Part>& parts() const noexcept { return parts_; }
  CompositionKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  std::uint64_t total() const noexcept { return total_; }
  Part operator[](std::size_t i) const { return parts_[i]; }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.kind_ == b.kind_ && a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Part> parts_;
  std::uint64_t total_ = 0;
  CompositionKind kind_ = CompositionKind::strict;
};

/// Strips leading and trailing zeros, keeping interior ones.
Composition canonical_montreal(std::vector<Part> raw);

/// n = (k-1)k/2 + r with 0 < r <= k.
struct TriangularDecomposition {
  std::uint64_t k = 0;
  std::uint64_t r = 0;

  friend bool operator==(const TriangularDecomposition&, const TriangularDecomposition&) = default;
};

TriangularDecomposition triangular_decompose(std::uint64_t n);

/// Sum of (i + j) over the boxes (i, j) of the Young diagram, 1-based.
std::uint64_t potential_energy(const Partition& lambda);

struct EnumerationLimits {
  std::uint64_t max_partition_n = 80;
  std::uint64_t max_composition_n = 20;
  // When set, replaces the n bounds above by a cap on the number of states.
  std::optional<std::uint64_t> max_states;
};

/// Streams every partition of n in reverse-lexicographic order.
void for_each_partition(std::uint64_t n, const std::function<void(const Partition&)>& visit,
                        const EnumerationLimits& limits = {});
std::vector<Partition> enumerate_partitions(std::uint64_t n, const EnumerationLimits& limits = {});

/// Streams every strict composition of n in reverse-lexicographic order.
void for_each_composition(std::uint64_t n, const std::function<void(const Composition&)>& visit,
                          const EnumerationLimits& limits = {});
std::vector<Composition> enumerate_compositions(std::uint64_t n, const EnumerationLimits& limits = {});

}  // namespace bsol

template <>
struct std::hash<bsol::Partition> {
  std::size_t operator()(const bsol::Partition& p) const noexcept {
    return bsol::detail::hash_parts(p.parts());
  }
};

template <>
struct std::hash<bsol::Composition> {
  std::size_t operator()(const bsol::Composition& c) const noexcept {
    return bsol::detail::hash_mix(bsol::detail::hash_parts(c.parts()),
                                  static_cast<std::uint64_t>(c.kind()));
  }
};
