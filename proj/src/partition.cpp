#include "bsol/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bsol/error.hpp"
#include "bsol/necklace.hpp"

namespace bsol {

namespace {

std::uint64_t sum_parts(const std::vector<Part>& parts) {
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

void check_partition_budget(std::uint64_t n, const EnumerationLimits& limits) {
  if (!limits.max_states) {
    if (n > limits.max_partition_n) {
      throw BoundExceeded("partition enumeration bound exceeded: n = " + std::to_string(n) +
                          " > " + std::to_string(limits.max_partition_n));
    }
    return;
  }
  if (n > kMaxPartitionCountN || partition_count(n) > *limits.max_states) {
    throw BoundExceeded("p(" + std::to_string(n) + ") exceeds the state budget of " +
                        std::to_string(*limits.max_states));
  }
}

void check_composition_budget(std::uint64_t n, const EnumerationLimits& limits) {
  if (!limits.max_states) {
    if (n > limits.max_composition_n) {
      throw BoundExceeded("composition enumeration bound exceeded: n = " + std::to_string(n) +
                          " > " + std::to_string(limits.max_composition_n));
    }
    return;
  }
  if (n > 64 || (n > 0 && (std::uint64_t{1} << (n - 1)) > *limits.max_states)) {
    throw BoundExceeded("2^(n-1) compositions of n = " + std::to_string(n) +
                        " exceed the state budget of " + std::to_string(*limits.max_states));
  }
}

void compositions_rec(std::uint64_t remaining, std::vector<Part>& prefix,
                      const std::function<void(const Composition&)>& visit) {
  if (remaining == 0) {
    visit(Composition(prefix, CompositionKind::strict));
    return;
  }
  for (std::uint64_t first = remaining; first >= 1; --first) {
    prefix.push_back(static_cast<Part>(first));
    compositions_rec(remaining - first, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be nonincreasing");
    }
  }
  total_ = sum_parts(parts_);
}

Partition normalize(std::vector<Part> raw) {
  std::erase(raw, Part{0});
  std::sort(raw.begin(), raw.end(), std::greater<>());
  const auto total = sum_parts(raw);
  return Partition(Partition::Trusted{}, std::move(raw), total);
}

Partition conjugate(const Partition& lambda) {
  std::vector<Part> out(lambda.largest(), 0);
  for (Part p : lambda) {
    for (Part i = 0; i < p; ++i) ++out[i];
  }
  return Partition(std::move(out));
}

Partition staircase(std::uint64_t k) {
  std::vector<Part> parts;
  parts.reserve(k);
  for (std::uint64_t i = k; i >= 1; --i) parts.push_back(static_cast<Part>(i));
  return Partition(std::move(parts));
}

Composition::Composition(std::vector<Part> parts, CompositionKind kind)
    : parts_(std::move(parts)), kind_(kind) {
  switch (kind_) {
    case CompositionKind::strict:
      if (std::find(parts_.begin(), parts_.end(), Part{0}) != parts_.end()) {
        throw InvalidArgument("strict composition parts must be positive");
      }
      break;
    case CompositionKind::montreal:
      if (!parts_.empty() && (parts_.front() == 0 || parts_.back() == 0)) {
        throw InvalidArgument("montreal composition must start and end with a positive part");
      }
      break;
    case CompositionKind::circular:
      if (parts_.empty()) throw InvalidArgument("circular composition needs at least one seat");
      break;
  }
  total_ = sum_parts(parts_);
}

Composition canonical_montreal(std::vector<Part> raw) {
  auto first = std::find_if(raw.begin(), raw.end(), [](Part p) { return p != 0; });
  auto last = std::find_if(raw.rbegin(), raw.rend(), [](Part p) { return p != 0; }).base();
  if (first >= last) return Composition({}, CompositionKind::montreal);
  return Composition(std::vector<Part>(first, last), CompositionKind::montreal);
}

TriangularDecomposition triangular_decompose(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("triangular_decompose requires n >= 1");
  // Smallest k with k(k+1)/2 >= n.
  std::uint64_t k = 1;
  while (k * (k + 1) / 2 < n) ++k;
  return {k, n - (k - 1) * k / 2};
}

std::uint64_t potential_energy(const Partition& lambda) {
  std::uint64_t energy = 0;
  std::uint64_t pile = 1;
  for (Part p : lambda) {
    for (std::uint64_t card = 1; card <= p; ++card) energy += pile + card;
    ++pile;
  }
  return energy;
}

void for_each_partition(std::uint64_t n, const std::function<void(const Partition&)>& visit,
                        const EnumerationLimits& limits) {
  check_partition_budget(n, limits);
  if (n == 0) {
    visit(Partition{});
    return;
  }
  // Reverse-lexicographic successor: lower the last part > 1 by one and
  // spread what it freed (plus the trailing ones) in pieces of that size.
  std::vector<Part> parts{static_cast<Part>(n)};
  while (true) {
    visit(Partition(parts));
    std::uint64_t freed = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++freed;
    }
    if (parts.empty()) return;
    const Part size = --parts.back();
    ++freed;
    while (freed >= size) {
      parts.push_back(size);
      freed -= size;
    }
    if (freed > 0) parts.push_back(static_cast<Part>(freed));
  }
}

std::vector<Partition> enumerate_partitions(std::uint64_t n, const EnumerationLimits& limits) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, limits);
  return out;
}

void for_each_composition(std::uint64_t n, const std::function<void(const Composition&)>& visit,
                          const EnumerationLimits& limits) {
  if (n == 0) throw InvalidArgument("enumerate_compositions requires n >= 1");
  check_composition_budget(n, limits);
  std::vector<Part> prefix;
  compositions_rec(n, prefix, visit);
}

std::vector<Composition> enumerate_compositions(std::uint64_t n, const EnumerationLimits& limits) {
  std::vector<Composition> out;
  for_each_composition(n, [&](const Composition& c) { out.push_back(c); }, limits);
  return out;
}

}  // namespace bsol
