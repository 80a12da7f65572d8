#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "bsol/partition.hpp"

namespace bsol {

/// Seeded generator used by every chain. Bernoulli draws compare the top 53
/// bits of one engine output against p, so a run depends only on the engine
/// algorithm and not on the standard library's distribution code.
class Rng {
 public:
  static constexpr std::string_view algorithm = "mt19937_64/u53";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }

  /// An independent child stream seeded from this one.
  Rng split();

 private:
  std::mt19937_64 engine_;
};

enum class ChainVariant { popov, ejs };

struct ChainConfig {
  std::uint64_t n = 0;
  ChainVariant variant = ChainVariant::popov;
  double p = 1.0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> burn_in;  // default 50 n
  std::optional<std::uint64_t> samples;  // default 500 n
  std::optional<Partition> initial;      // default the single pile (n)
};

struct ChainStats {
  std::string_view generator = Rng::algorithm;
  std::uint64_t n = 0;
  ChainVariant variant = ChainVariant::popov;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t burn_in = 0;
  std::uint64_t samples = 0;
  // Recorded phase only.
  std::map<Partition, std::uint64_t> visit_counts;
  std::vector<double> mean_shape;  // sorted parts averaged, zero padded
  double mean_staircase_distance = 0.0;
  double mean_energy = 0.0;
  Partition final_state;

  friend bool operator==(const ChainStats&, const ChainStats&) = default;
};

/// Popov: every pile is selected independently with probability p.
/// Returns 0-based pile indices.
std::vector<std::size_t> sample_popov_mask(const Partition& lambda, double p, Rng& rng);

/// Every card is picked independently with probability p; returns the
/// per-pile pick counts.
std::vector<Part> sample_ejs_picks(const Partition& lambda, double p, Rng& rng);

/// Called with (step index, state) for the initial state and after every step.
using ChainObserver = std::function<void(std::uint64_t, const Partition&)>;

ChainStats run_chain(const ChainConfig& config, const ChainObserver& observer = {});

/// Runs independent chains on up to `workers` threads; results keep the
/// order of `configs`.
std::vector<ChainStats> run_chains(const std::vector<ChainConfig>& configs, unsigned workers = 1);

/// (1/n) * sum_i |lambda_i - max(k + 1 - i, 0)| against the full staircase of
/// k, where (k, r) = triangular_decompose(n). Zero for the empty partition.
double staircase_distance(const Partition& lambda);

struct ProfileFit {
  double intercept = 0.0;
  double slope = 0.0;
  double rms_residual = 0.0;
};

/// Least-squares fits of the mean shape over its support (the leading
/// entries >= 0.5, indexed from 1): a line y = a + b i and an exponential
/// y = exp(a + b i) fitted in log space. Residuals are measured on y.
struct ShapeProfile {
  std::vector<double> mean_shape;
  std::size_t support = 0;
  ProfileFit linear;
  ProfileFit exponential;
};

ShapeProfile shape_profile(const ChainStats& stats);

}  // namespace bsol
