#include "bsol/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>

#include "bsol/error.hpp"
#include "bsol/operators.hpp"

namespace bsol {

namespace {

void validate(const ChainConfig& config) {
  if (config.n == 0) throw InvalidArgument("run_chain requires n >= 1");
  if (!(config.p > 0.0 && config.p <= 1.0)) throw InvalidArgument("run_chain requires 0 < p <= 1");
  if (config.initial && config.initial->total() != config.n) {
    throw InvalidArgument("initial partition does not hold n cards");
  }
}

ProfileFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const auto m = static_cast<double>(x.size());
  ProfileFit fit;
  if (x.empty()) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = m * sxx - sx * sx;
  if (x.size() < 2 || denom == 0.0) {
    fit.intercept = sy / m;
    return fit;
  }
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  return fit;
}

double rms(const std::vector<double>& x, const std::vector<double>& y,
           const std::function<double(double)>& model) {
  if (x.empty()) return 0.0;
  double sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - model(x[i]);
    sum += e * e;
  }
  return std::sqrt(sum / static_cast<double>(x.size()));
}

}  // namespace

Rng Rng::split() {
  // One splitmix64 finalization decorrelates the child seed from the parent.
  std::uint64_t z = next() + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

std::vector<std::size_t> sample_popov_mask(const Partition& lambda, double p, Rng& rng) {
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (rng.bernoulli(p)) selected.push_back(i);
  }
  return selected;
}

std::vector<Part> sample_ejs_picks(const Partition& lambda, double p, Rng& rng) {
  std::vector<Part> picks(lambda.size(), 0);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (Part card = 0; card < lambda[i]; ++card) {
      if (rng.bernoulli(p)) ++picks[i];
    }
  }
  return picks;
}

ChainStats run_chain(const ChainConfig& config, const ChainObserver& observer) {
  validate(config);
  ChainStats stats;
  stats.n = config.n;
  stats.variant = config.variant;
  stats.p = config.p;
  stats.seed = config.seed;
  stats.burn_in = config.burn_in.value_or(50 * config.n);
  stats.samples = config.samples.value_or(500 * config.n);

  Rng rng(config.seed);
  Partition state = config.initial.value_or(Partition{static_cast<Part>(config.n)});
  if (observer) observer(0, state);

  std::vector<double> shape_sum;
  double distance_sum = 0.0;
  double energy_sum = 0.0;
  const std::uint64_t total_steps = stats.burn_in + stats.samples;
  for (std::uint64_t t = 1; t <= total_steps; ++t) {
    if (config.variant == ChainVariant::popov) {
      const auto mask = sample_popov_mask(state, config.p, rng);
      state = popov_masked_step(state, mask);
    } else {
      const auto picks = sample_ejs_picks(state, config.p, rng);
      state = ejs_masked_step(state, picks);
    }
    if (state.total() != config.n) throw InternalError("chain step did not conserve cards");
    if (observer) observer(t, state);
    if (t <= stats.burn_in) continue;

    ++stats.visit_counts[state];
    if (shape_sum.size() < state.size()) shape_sum.resize(state.size(), 0.0);
    for (std::size_t i = 0; i < state.size(); ++i) shape_sum[i] += state[i];
    distance_sum += staircase_distance(state);
    energy_sum += static_cast<double>(potential_energy(state));
  }

  if (stats.samples > 0) {
    const auto m = static_cast<double>(stats.samples);
    stats.mean_shape.reserve(shape_sum.size());
    for (double s : shape_sum) stats.mean_shape.push_back(s / m);
    stats.mean_staircase_distance = distance_sum / m;
    stats.mean_energy = energy_sum / m;
  }
  stats.final_state = std::move(state);
  return stats;
}

std::vector<ChainStats> run_chains(const std::vector<ChainConfig>& configs, unsigned workers) {
  std::vector<ChainStats> out(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  workers = std::max(1u, workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < configs.size(); i += workers) {
        try {
          out[i] = run_chain(configs[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

double staircase_distance(const Partition& lambda) {
  const std::uint64_t n = lambda.total();
  if (n == 0) return 0.0;
  const auto k = triangular_decompose(n).k;
  const std::uint64_t length = std::max<std::uint64_t>(k, lambda.size());
  std::uint64_t sum = 0;
  for (std::uint64_t i = 1; i <= length; ++i) {
    const std::int64_t have = i <= lambda.size() ? lambda[i - 1] : 0;
    const std::int64_t want = i <= k ? static_cast<std::int64_t>(k + 1 - i) : 0;
    sum += static_cast<std::uint64_t>(std::llabs(have - want));
  }
  return static_cast<double>(sum) / static_cast<double>(n);
}

ShapeProfile shape_profile(const ChainStats& stats) {
  if (stats.samples == 0) throw InvalidArgument("shape_profile requires recorded samples");
  ShapeProfile profile;
  profile.mean_shape = stats.mean_shape;
  while (profile.support < profile.mean_shape.size() && profile.mean_shape[profile.support] >= 0.5) {
    ++profile.support;
  }
  std::vector<double> x, y, log_y;
  for (std::size_t i = 0; i < profile.support; ++i) {
    x.push_back(static_cast<double>(i + 1));
    y.push_back(profile.mean_shape[i]);
    log_y.push_back(std::log(profile.mean_shape[i]));
  }

  profile.linear = fit_line(x, y);
  const auto lin = profile.linear;
  profile.linear.rms_residual = rms(x, y, [&](double t) { return lin.intercept + lin.slope * t; });

  profile.exponential = fit_line(x, log_y);
  const auto ex = profile.exponential;
  profile.exponential.rms_residual =
      rms(x, y, [&](double t) { return std::exp(ex.intercept + ex.slope * t); });
  return profile;
}

}  // namespace bsol
