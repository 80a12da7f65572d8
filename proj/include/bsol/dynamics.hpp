#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "bsol/error.hpp"
#include "bsol/partition.hpp"

namespace bsol {

/// One trajectory up to its first repeated state.
///
/// `path` runs from the start through the first repeated state, so
/// path[tail + cycle_length] == path[tail] and path.size() == tail +
/// cycle_length + 1. `cycle` lists the periodic states in visit order.
template <class State>
struct OrbitResult {
  std::vector<State> path;
  std::size_t tail = 0;
  std::vector<State> cycle;
  std::size_t cycle_length = 0;
};

struct CycleShape {
  std::size_t tail = 0;
  std::size_t cycle_length = 0;

  friend bool operator==(const CycleShape&, const CycleShape&) = default;
};

/// 4 n^2, which sits well above the k(k-1) convergence bound of the
/// partition games.
inline std::size_t default_step_bound(std::uint64_t n) {
  return static_cast<std::size_t>(std::max<std::uint64_t>(4 * n * n, 1));
}

/// Brent's cycle finding: constant memory, returns (tail, cycle length).
template <class State, class Step>
CycleShape find_cycle_constant_memory(const State& start, Step&& step, std::size_t step_bound) {
  const std::size_t hare_budget = 3 * step_bound + 3;
  std::size_t power = 1;
  std::size_t lambda = 1;
  std::size_t hare_steps = 1;
  State tortoise = start;
  State hare = step(start);
  while (!(tortoise == hare)) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    hare = step(hare);
    ++lambda;
    if (++hare_steps > hare_budget) throw InternalError("orbit did not repeat within the step bound");
  }
  tortoise = start;
  hare = start;
  for (std::size_t i = 0; i < lambda; ++i) hare = step(hare);
  std::size_t mu = 0;
  while (!(tortoise == hare)) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  if (mu + lambda > step_bound) throw InternalError("orbit did not repeat within the step bound");
  return {mu, lambda};
}

/// Iterates `step` from `start` until a state repeats, using a visited map,
/// and cross-checks the result against constant-memory cycle finding.
/// Throws InternalError when no repetition occurs within `step_bound` steps.
template <class State, class Step>
OrbitResult<State> orbit(const State& start, Step&& step, std::size_t step_bound) {
  OrbitResult<State> result;
  std::unordered_map<State, std::size_t> seen;
  State current = start;
  while (true) {
    auto [it, inserted] = seen.emplace(current, result.path.size());
    result.path.push_back(current);
    if (!inserted) {
      result.tail = it->second;
      break;
    }
    if (result.path.size() > step_bound) throw InternalError("orbit did not repeat within the step bound");
    current = step(current);
  }
  result.cycle_length = result.path.size() - 1 - result.tail;
  result.cycle.assign(result.path.begin() + static_cast<std::ptrdiff_t>(result.tail),
                      result.path.end() - 1);

  const CycleShape brent = find_cycle_constant_memory(start, step, step_bound);
  if (brent != CycleShape{result.tail, result.cycle_length}) {
    throw InternalError("visited-set and constant-memory cycle detection disagree");
  }
  return result;
}

/// Same, with the bound default_step_bound(start.total()).
template <class State, class Step>
  requires std::is_invocable_v<Step&, const State&>
OrbitResult<State> orbit(const State& start, Step&& step) {
  return orbit(start, std::forward<Step>(step), default_step_bound(start.total()));
}

/// Rotates a cycle so that it starts at its smallest state.
template <class State>
std::vector<State> canonical_cycle(std::vector<State> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  return cycle;
}

/// The functional graph of one operator on a finite state space.
template <class State>
struct GraphSummary {
  std::uint64_t n = 0;
  std::string variant;
  std::size_t component_count = 0;
  // Each cycle starts at its smallest state; cycles are sorted by that state.
  std::vector<std::vector<State>> cycles;
  std::size_t max_tail = 0;
  // States with no predecessor, in enumeration order.
  std::vector<State> ge_states;

  // Per-state data, indexed like `states` (enumeration order).
  std::vector<State> states;
  std::vector<std::uint32_t> successor;
  std::vector<std::uint32_t> in_degree;
  std::vector<std::uint32_t> tail_length;
  std::vector<std::uint32_t> component;  // index into `cycles`

  std::size_t index_of(const State& s) const {
    auto it = std::find(states.begin(), states.end(), s);
    if (it == states.end()) throw InvalidArgument("state is not in the analyzed state space");
    return static_cast<std::size_t>(it - states.begin());
  }
};

/// Builds the functional graph of `step` on `states`, which must be closed
/// under `step`. Successors are computed on `workers` threads; everything
/// else is sequential, so the result does not depend on the worker count.
template <class State, class Step>
GraphSummary<State> analyze_functional_graph(std::vector<State> states, Step step, unsigned workers = 1) {
  GraphSummary<State> g;
  const std::size_t count = states.size();
  std::unordered_map<State, std::uint32_t> index;
  index.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!index.emplace(states[i], static_cast<std::uint32_t>(i)).second) {
      throw InternalError("state space enumeration produced a duplicate");
    }
  }

  g.successor.assign(count, 0);
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto it = index.find(step(states[i]));
      if (it == index.end()) throw InternalError("operator left the enumerated state space");
      g.successor[i] = it->second;
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    fill(0, count);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(count, w * chunk);
      const std::size_t end = std::min(count, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          fill(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  g.in_degree.assign(count, 0);
  for (auto s : g.successor) ++g.in_degree[s];

  // Walk each unvisited state forward; a walk either closes a new cycle or
  // runs into an already resolved state, then tails are filled backwards.
  constexpr std::uint8_t kUnseen = 0, kOnStack = 1, kDone = 2;
  std::vector<std::uint8_t> mark(count, kUnseen);
  g.tail_length.assign(count, 0);
  g.component.assign(count, 0);
  std::vector<std::vector<std::uint32_t>> raw_cycles;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < count; ++s) {
    if (mark[s] != kUnseen) continue;
    stack.clear();
    std::uint32_t x = s;
    while (mark[x] == kUnseen) {
      mark[x] = kOnStack;
      stack.push_back(x);
      x = g.successor[x];
    }
    if (mark[x] == kOnStack) {
      auto pos = std::find(stack.begin(), stack.end(), x);
      std::vector<std::uint32_t> cyc(pos, stack.end());
      const auto id = static_cast<std::uint32_t>(raw_cycles.size());
      for (auto c : cyc) {
        mark[c] = kDone;
        g.component[c] = id;
      }
      raw_cycles.push_back(std::move(cyc));
      stack.erase(pos, stack.end());
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      const auto next = g.successor[*it];
      g.tail_length[*it] = g.tail_length[next] + 1;
      g.component[*it] = g.component[next];
      mark[*it] = kDone;
    }
  }

  // Canonical order: rotate each cycle to its smallest state, sort cycles.
  std::vector<std::vector<State>> cycles;
  for (const auto& cyc : raw_cycles) {
    std::vector<State> as_states;
    as_states.reserve(cyc.size());
    for (auto c : cyc) as_states.push_back(states[c]);
    cycles.push_back(canonical_cycle(std::move(as_states)));
  }
  std::vector<std::uint32_t> order(cycles.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return cycles[a].front() < cycles[b].front(); });
  std::vector<std::uint32_t> rank(order.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = r;
    g.cycles.push_back(std::move(cycles[order[r]]));
  }
  for (auto& c : g.component) c = rank[c];

  g.component_count = g.cycles.size();
  for (std::size_t i = 0; i < count; ++i) {
    g.max_tail = std::max<std::size_t>(g.max_tail, g.tail_length[i]);
    if (g.in_degree[i] == 0) g.ge_states.push_back(states[i]);
  }
  g.states = std::move(states);
  return g;
}

// ---------------------------------------------------------------------------
// Checks specific to the Bulgarian operator.

GraphSummary<Partition> analyze_bulgarian(std::uint64_t n, unsigned workers = 1,
                                          const EnumerationLimits& limits = {});

/// Garden of Eden characterization: lambda_1 < s - 1 with s parts.
bool garden_of_eden_test(const Partition& lambda);

struct ConvergenceReport {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  std::size_t states_checked = 0;
  std::size_t max_tail = 0;
  std::vector<Partition> exceptions;  // states whose cycle is not the staircase

  bool holds() const { return exceptions.empty() && states_checked > 0; }
};

/// Every partition of k(k+1)/2 must end in the fixed point (k, ..., 1).
ConvergenceReport staircase_convergence_check(std::uint64_t k, const EnumerationLimits& limits = {});

struct KnuthReport {
  std::uint64_t k = 0;
  std::uint64_t exponent = 0;  // k(k-1)
  std::size_t states_checked = 0;
  std::vector<Partition> exceptions;

  bool holds() const { return exceptions.empty() && states_checked > 0; }
};

/// Checks B^{k(k-1)}(lambda) = (k, ..., 1) on every partition of k(k+1)/2.
KnuthReport knuth_exponent_check(std::uint64_t k, const EnumerationLimits& limits = {});

struct ToomReport {
  std::uint64_t k = 0;
  Partition tau;
  std::size_t minimal_s = 0;
  std::vector<Partition> path;  // tau, B(tau), ..., B^{minimal_s}(tau)
  bool minimal_s_matches = false;  // minimal_s == k(k-1)
  bool conjugacy_holds = false;
  std::vector<std::size_t> conjugacy_failures;  // offending i
};

/// The slowest start (k-1, k-1, k-2, ..., 2, 1, 1), its distance to the
/// staircase and the conjugate symmetry of its path. Requires k >= 2.
ToomReport toom_path(std::uint64_t k);

struct GeReachabilityReport {
  struct Entry {
    std::vector<Partition> cycle;
    std::optional<Partition> ge_witness;
    std::vector<Partition> witness_path;  // witness through its first cycle state
  };
  std::uint64_t n = 0;
  std::vector<Entry> entries;

  bool holds() const;
};

/// For every cycle of the Bulgarian graph on P(n), finds a Garden of Eden
/// state whose orbit enters it. For n = 1 and n = 2 there are no Garden of
/// Eden states at all, so the report cannot hold there.
GeReachabilityReport ge_reachability_check(std::uint64_t n, const EnumerationLimits& limits = {});

}  // namespace bsol
