#include "bsol/dynamics.hpp"

#include "bsol/operators.hpp"

namespace bsol {

GraphSummary<Partition> analyze_bulgarian(std::uint64_t n, unsigned workers,
                                          const EnumerationLimits& limits) {
  auto g = analyze_functional_graph(enumerate_partitions(n, limits), bulgarian_step, workers);
  g.n = n;
  g.variant = "bulgarian";
  return g;
}

bool garden_of_eden_test(const Partition& lambda) {
  if (lambda.empty()) throw InvalidArgument("garden_of_eden_test requires a nonempty partition");
  return lambda.largest() + 1 < lambda.size();
}

ConvergenceReport staircase_convergence_check(std::uint64_t k, const EnumerationLimits& limits) {
  if (k == 0) throw InvalidArgument("staircase_convergence_check requires k >= 1");
  ConvergenceReport report;
  report.k = k;
  report.n = k * (k + 1) / 2;
  const auto g = analyze_bulgarian(report.n, 1, limits);
  const std::vector<Partition> fixed{staircase(k)};
  report.states_checked = g.states.size();
  report.max_tail = g.max_tail;
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.cycles[g.component[i]] != fixed) report.exceptions.push_back(g.states[i]);
  }
  return report;
}

KnuthReport knuth_exponent_check(std::uint64_t k, const EnumerationLimits& limits) {
  if (k == 0) throw InvalidArgument("knuth_exponent_check requires k >= 1");
  KnuthReport report;
  report.k = k;
  report.exponent = k * (k - 1);
  const Partition sigma = staircase(k);
  for_each_partition(
      k * (k + 1) / 2,
      [&](const Partition& lambda) {
        Partition x = lambda;
        for (std::uint64_t i = 0; i < report.exponent; ++i) x = bulgarian_step(x);
        ++report.states_checked;
        if (x != sigma) report.exceptions.push_back(lambda);
      },
      limits);
  return report;
}

ToomReport toom_path(std::uint64_t k) {
  if (k < 2) throw InvalidArgument("toom_path requires k >= 2");
  ToomReport report;
  report.k = k;
  std::vector<Part> tau{static_cast<Part>(k - 1)};
  for (std::uint64_t p = k - 1; p >= 1; --p) tau.push_back(static_cast<Part>(p));
  tau.push_back(1);
  report.tau = Partition(std::move(tau));

  const Partition sigma = staircase(k);
  const std::size_t expected = k * (k - 1);
  const std::size_t bound = default_step_bound(report.tau.total());
  report.path.push_back(report.tau);
  while (report.path.back() != sigma) {
    if (report.path.size() > bound) throw InternalError("toom path did not reach the staircase");
    report.path.push_back(bulgarian_step(report.path.back()));
  }
  report.minimal_s = report.path.size() - 1;
  report.minimal_s_matches = report.minimal_s == expected;

  std::vector<Partition> walk = report.path;
  while (walk.size() < expected) walk.push_back(bulgarian_step(walk.back()));
  for (std::size_t i = 0; i < expected; ++i) {
    if (walk[i] != conjugate(walk[expected - i - 1])) report.conjugacy_failures.push_back(i);
  }
  report.conjugacy_holds = report.conjugacy_failures.empty();
  return report;
}

bool GeReachabilityReport::holds() const {
  if (entries.empty()) return false;
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.ge_witness.has_value(); });
}

GeReachabilityReport ge_reachability_check(std::uint64_t n, const EnumerationLimits& limits) {
  if (n == 0) throw InvalidArgument("ge_reachability_check requires n >= 1");
  GeReachabilityReport report;
  report.n = n;
  const auto g = analyze_bulgarian(n, 1, limits);
  report.entries.resize(g.cycles.size());
  for (std::size_t c = 0; c < g.cycles.size(); ++c) report.entries[c].cycle = g.cycles[c];

  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.in_degree[i] != 0) continue;
    auto& entry = report.entries[g.component[i]];
    if (entry.ge_witness) continue;
    entry.ge_witness = g.states[i];
    std::size_t x = i;
    for (std::uint32_t step = 0; step < g.tail_length[i]; ++step) {
      entry.witness_path.push_back(g.states[x]);
      x = g.successor[x];
    }
    entry.witness_path.push_back(g.states[x]);
  }
  return report;
}

}  // namespace bsol
