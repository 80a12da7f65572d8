#pragma once

// Seeded generators and brute-force oracles shared by the test binaries.
// The oracles are written from the definitions and share no code with the
// library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "bsol/partition.hpp"

namespace testing_support {

using bsol::Part;
using Parts = std::vector<Part>;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_); }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

  // Parts drawn one at a time from what is left, then sorted.
  Parts partition(std::uint64_t n) {
    Parts parts;
    while (n > 0) {
      const auto part = between(1, n);
      parts.push_back(static_cast<Part>(part));
      n -= part;
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
  }

  // Each of the n - 1 gaps between cards is a cut with probability 1/2.
  Parts composition(std::uint64_t n) {
    Parts parts;
    if (n == 0) return parts;
    Part current = 1;
    for (std::uint64_t gap = 1; gap < n; ++gap) {
      if (coin()) {
        parts.push_back(current);
        current = 1;
      } else {
        ++current;
      }
    }
    parts.push_back(current);
    return parts;
  }

  // Positive endpoints, interior zeros sprinkled in.
  Parts montreal(std::uint64_t n) {
    const auto strict = composition(n);
    Parts parts;
    for (std::size_t i = 0; i < strict.size(); ++i) {
      if (i > 0) {
        const auto zeros = below(3);
        for (std::uint64_t z = 0; z < zeros; ++z) parts.push_back(0);
      }
      parts.push_back(strict[i]);
    }
    return parts;
  }

  Parts weak_composition(std::uint64_t n, std::size_t length) {
    Parts parts(length, 0);
    for (std::uint64_t card = 0; card < n; ++card) ++parts[below(length)];
    return parts;
  }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t sum(const Parts& parts) {
  std::uint64_t s = 0;
  for (auto p : parts) s += p;
  return s;
}

inline Parts sorted_desc(Parts parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), Part{0}), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

// p(n) by the coin-change recurrence over part sizes.
inline std::uint64_t oracle_partition_count(std::uint64_t n) {
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::uint64_t part = 1; part <= n; ++part) {
    for (std::uint64_t total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

// Every partition of n with parts at most `cap`, built recursively.
inline void oracle_partitions(std::uint64_t n, Part cap, Parts& prefix, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (Part part = static_cast<Part>(std::min<std::uint64_t>(cap, n)); part >= 1; --part) {
    prefix.push_back(part);
    oracle_partitions(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<Parts> oracle_partitions(std::uint64_t n) {
  std::vector<Parts> out;
  Parts prefix;
  oracle_partitions(n, static_cast<Part>(n), prefix, out);
  return out;
}

inline Parts oracle_bulgarian(const Parts& lambda) {
  Parts next;
  next.push_back(static_cast<Part>(lambda.size()));
  for (auto p : lambda) next.push_back(p - 1);
  return sorted_desc(next);
}

inline Parts oracle_conjugate(const Parts& lambda) {
  Parts out;
  for (Part i = 1; !lambda.empty() && i <= lambda.front(); ++i) {
    out.push_back(static_cast<Part>(std::count_if(lambda.begin(), lambda.end(), [&](Part p) { return p >= i; })));
  }
  return out;
}

// Sum over boxes of (i + j), done box by box.
inline std::uint64_t oracle_energy(const Parts& lambda) {
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (Part j = 1; j <= lambda[i]; ++j) e += (i + 1) + j;
  }
  return e;
}

// Binary strings of length k with r ones, counted up to rotation.
inline std::uint64_t oracle_necklaces(unsigned k, unsigned r) {
  std::set<std::uint64_t> classes;
  const std::uint64_t mask = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
  for (std::uint64_t x = 0; x <= mask; ++x) {
    if (static_cast<unsigned>(__builtin_popcountll(x)) != r) continue;
    std::uint64_t best = x;
    std::uint64_t y = x;
    for (unsigned s = 1; s < k; ++s) {
      y = ((y << 1) | (y >> (k - 1))) & mask;
      best = std::min(best, y);
    }
    classes.insert(best);
  }
  return classes.size();
}

inline std::pair<std::uint64_t, std::uint64_t> oracle_triangular(std::uint64_t n) {
  std::uint64_t k = 1;
  while (k * (k + 1) / 2 < n) ++k;
  return {k, n - (k - 1) * k / 2};
}

// (tail, cycle length) by storing every visited state.
template <class State, class Step>
std::pair<std::size_t, std::size_t> oracle_orbit_shape(State start, Step step) {
  std::map<State, std::size_t> seen;
  std::size_t t = 0;
  while (true) {
    auto [it, inserted] = seen.emplace(start, t);
    if (!inserted) return {it->second, t - it->second};
    start = step(start);
    ++t;
  }
}

}  // namespace testing_support
