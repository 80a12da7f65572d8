#include "bsol/necklace.hpp"

#include <algorithm>
#include <numeric>

#include "bsol/error.hpp"

namespace bsol {

std::uint64_t euler_phi(std::uint64_t d) {
  if (d == 0) throw InvalidArgument("euler_phi requires d >= 1");
  std::uint64_t result = d;
  std::uint64_t rest = d;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is C(n - k + i, i); cancel before multiplying.
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t factor = (n - k + i) / (i / g);
    if (__builtin_mul_overflow(result / g, factor, &result)) {
      throw BoundExceeded("binomial coefficient overflows 64 bits");
    }
  }
  return result;
}

std::uint64_t necklace_count(std::uint64_t k, std::uint64_t r) {
  if (k == 0) throw InvalidArgument("necklace length must be positive");
  if (r > k) return 0;
  const std::uint64_t g = std::gcd(r, k);
  std::uint64_t sum = 0;
  for (std::uint64_t d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    sum += euler_phi(d) * binomial(k / d, r / d);
  }
  if (sum % k != 0) throw InternalError("necklace sum is not divisible by k");
  return sum / k;
}

std::uint64_t necklace_count(std::uint64_t n) {
  const auto [k, r] = triangular_decompose(n);
  return necklace_count(k, r);
}

std::uint64_t partition_count(std::uint64_t n) {
  if (n > kMaxPartitionCountN) throw BoundExceeded("partition_count supports n <= 200");
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = 1;
  for (std::int64_t m = 1; m <= static_cast<std::int64_t>(n); ++m) {
    std::int64_t acc = 0;
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const std::int64_t sign = (j % 2 == 1) ? 1 : -1;
      acc += sign * p[m - g1];
      const std::int64_t g2 = j * (3 * j + 1) / 2;
      if (g2 <= m) acc += sign * p[m - g2];
    }
    p[m] = acc;
  }
  return static_cast<std::uint64_t>(p[n]);
}

std::size_t Necklace::black_count() const noexcept {
  return static_cast<std::size_t>(std::count(beads_.begin(), beads_.end(), true));
}

Necklace Necklace::rotated(std::size_t shift) const {
  const std::size_t k = beads_.size();
  if (k == 0) return *this;
  std::vector<bool> out(k);
  for (std::size_t i = 0; i < k; ++i) out[(i + shift) % k] = beads_[i];
  return Necklace(std::move(out));
}

Necklace Necklace::canonical() const {
  // 'B' < 'W', so black sorts first.
  auto key = [](const std::vector<bool>& b) {
    std::string s;
    for (bool bead : b) s.push_back(bead ? 'B' : 'W');
    return s;
  };
  Necklace best = *this;
  std::string best_key = key(beads_);
  for (std::size_t s = 1; s < beads_.size(); ++s) {
    Necklace candidate = rotated(s);
    std::string candidate_key = key(candidate.beads_);
    if (candidate_key < best_key) {
      best = std::move(candidate);
      best_key = std::move(candidate_key);
    }
  }
  return best;
}

std::size_t Necklace::period() const {
  const std::size_t k = beads_.size();
  for (std::size_t p = 1; p < k; ++p) {
    if (k % p == 0 && rotated(p).beads_ == beads_) return p;
  }
  return std::max<std::size_t>(k, 1);
}

std::string Necklace::to_string() const {
  std::string s;
  s.reserve(beads_.size());
  for (bool bead : beads_) s.push_back(bead ? 'B' : 'W');
  return s;
}

namespace {

// Height of pile i (1-based), zero past the last pile.
Part pile(const Partition& lambda, std::uint64_t i) {
  return i <= lambda.size() ? lambda[i - 1] : 0;
}

bool level_full(const Partition& lambda, std::uint64_t t) {
  for (std::uint64_t i = 1; i <= t; ++i) {
    if (pile(lambda, i) < t + 1 - i) return false;
  }
  return true;
}

bool level_empty(const Partition& lambda, std::uint64_t t) {
  for (std::uint64_t i = 1; i <= t; ++i) {
    if (pile(lambda, i) >= t + 1 - i) return false;
  }
  return true;
}

}  // namespace

bool is_minimal_energy_state(const Partition& lambda) {
  if (lambda.empty()) return false;
  const auto k = triangular_decompose(lambda.total()).k;
  for (std::uint64_t t = 1; t < k; ++t) {
    if (!level_full(lambda, t)) return false;
  }
  return level_empty(lambda, k + 1);
}

Necklace necklace_of_state(const Partition& lambda) {
  if (!is_minimal_energy_state(lambda)) {
    throw InvalidArgument("necklace_of_state requires a minimal-energy state");
  }
  const auto k = triangular_decompose(lambda.total()).k;
  std::vector<bool> beads(k);
  for (std::uint64_t i = 1; i <= k; ++i) beads[i - 1] = pile(lambda, i) >= k + 1 - i;
  return Necklace(std::move(beads));
}

}  // namespace bsol
