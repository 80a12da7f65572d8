#include "doctest.h"

#include "bsol/error.hpp"
#include "bsol/operators.hpp"
#include "bsol/variant.hpp"
#include "support.hpp"

using namespace bsol;
using namespace testing_support;

namespace {

Composition strict(Parts p) { return Composition(std::move(p), CompositionKind::strict); }
Composition montreal(Parts p) { return Composition(std::move(p), CompositionKind::montreal); }
Composition circular(Parts p) { return Composition(std::move(p), CompositionKind::circular); }

Parts positive_rule(const Parts& a) {
  Parts out;
  for (auto x : a) out.push_back(x - 1);
  out.push_back(static_cast<Part>(a.size()));
  return out;
}

// Recursion on the last run of zeros: M(b, 0^r, g) = (M(b), 0^(r-1), M(g)).
Parts oracle_montreal_raw(const Parts& a) {
  std::size_t last_zero = a.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) {
      last_zero = i;
      break;
    }
  }
  if (last_zero == a.size()) return positive_rule(a);
  std::size_t run_start = last_zero;
  while (run_start > 0 && a[run_start - 1] == 0) --run_start;
  const Parts beta(a.begin(), a.begin() + run_start);
  const Parts gamma(a.begin() + last_zero + 1, a.end());
  Parts out = oracle_montreal_raw(beta);
  out.insert(out.end(), last_zero - run_start, 0);
  const auto tail = positive_rule(gamma);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Parts oracle_montreal(const Parts& a) {
  if (a.empty()) return a;
  auto out = oracle_montreal_raw(a);
  while (!out.empty() && out.front() == 0) out.erase(out.begin());
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Parts oracle_servedio_yeh(const Parts& a) {
  Parts out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (Part card = 0; card < a[i]; ++card) ++out[(i + card) % a.size()];
  }
  return out;
}

std::pair<Parts, std::size_t> oracle_janetzko(Parts piles, std::size_t pointer) {
  const std::size_t c = piles.size();
  std::size_t seat = pointer - 1;
  const Part m = piles[seat];
  if (m == 0) return {piles, pointer % c + 1};
  piles[seat] = 0;
  for (Part card = 0; card < m; ++card) {
    seat = (seat + 1) % c;
    ++piles[seat];
  }
  return {piles, seat + 1};
}

// Removes the last pile of maximal size in the given order.
Parts oracle_dual(Parts lambda) {
  const auto m = *std::max_element(lambda.begin(), lambda.end());
  const auto it = std::find(lambda.rbegin(), lambda.rend(), m);
  lambda.erase(std::next(it).base());
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  Part left = m;
  for (auto& p : lambda) {
    if (left == 0) break;
    ++p;
    --left;
  }
  for (; left > 0; --left) lambda.push_back(1);
  return sorted_desc(lambda);
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("bulgarian step examples") {
  CHECK(bulgarian_step({4, 3, 3}) == Partition{3, 3, 2, 2});
  CHECK(bulgarian_step({6, 3, 1}) == Partition{5, 3, 2});
  CHECK(bulgarian_step({4, 3, 2, 1}) == Partition{4, 3, 2, 1});
  CHECK(bulgarian_step(Partition{}).empty());
}

TEST_CASE("bulgarian step agrees with the oracle and conserves cards") {
  for (std::uint64_t n = 0; n <= 20; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      const auto next = bulgarian_step(p);
      REQUIRE(next.parts() == oracle_bulgarian(p.parts()));
      REQUIRE(next.total() == n);
    });
  }
}

TEST_CASE("carolina step examples") {
  CHECK(carolina_step(strict({4, 3, 3})).parts() == Parts{3, 3, 2, 2});
  CHECK(carolina_step(strict({1, 2})).parts() == Parts{2, 1});
  CHECK(carolina_step(strict({4, 3, 2, 1})).parts() == Parts{4, 3, 2, 1});
  CHECK(carolina_step(strict({1, 3, 1, 2})).parts() == Parts{4, 2, 1});
}

TEST_CASE("carolina projects onto bulgarian") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for_each_composition(n, [&](const Composition& a) {
      const auto next = carolina_step(a);
      REQUIRE(next.total() == n);
      REQUIRE(next.kind() == CompositionKind::strict);
      REQUIRE(normalize(next.parts()) == bulgarian_step(normalize(a.parts())));
    });
  }
}

TEST_CASE("montreal step examples") {
  CHECK(montreal_step(montreal({1, 0, 2})).parts() == Parts{1, 1, 1});
  CHECK(montreal_step(montreal({1, 2, 0, 1, 0, 2})).parts() == Parts{1, 2, 0, 1, 1, 1});
  CHECK(montreal_step(montreal({3, 2, 2})).parts() == Parts{2, 1, 1, 3});
  CHECK(montreal_step(montreal({1})).parts() == Parts{1});
}

TEST_CASE("montreal step agrees with the recursive definition") {
  Gen gen(5);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto parts = gen.montreal(gen.between(1, 25));
    const auto next = montreal_step(montreal(parts));
    REQUIRE(next.parts() == oracle_montreal(parts));
    REQUIRE(next.total() == sum(parts));
  }
}

TEST_CASE("montreal step is a bijection on its finite state spaces") {
  for (std::uint64_t n = 1; n <= 10; ++n) {
    const auto space = enumerate_state_space(n, VariantSpec{Variant::montreal});
    std::set<Composition> domain;
    for (const auto& s : space) domain.insert(std::get<Composition>(s));
    std::set<Composition> images;
    for (const auto& c : domain) images.insert(montreal_step(c));
    REQUIRE(images.size() == domain.size());
    REQUIRE(images == domain);
  }
}

TEST_CASE("montreal step is injective on all short canonical compositions") {
  for (std::uint64_t n = 1; n <= 7; ++n) {
    std::map<Parts, Parts> preimage;
    std::function<void(Parts&, std::uint64_t)> grow = [&](Parts& prefix, std::uint64_t left) {
      if (left == 0) {
        if (prefix.back() == 0) return;
        const auto image = oracle_montreal(prefix);
        const auto next = montreal_step(montreal(prefix)).parts();
        REQUIRE(next == image);
        const auto [it, inserted] = preimage.emplace(next, prefix);
        REQUIRE(inserted);
        return;
      }
      if (prefix.size() >= n + 3) return;
      for (Part part = (prefix.empty() ? 1 : 0); part <= left; ++part) {
        prefix.push_back(part);
        grow(prefix, left - part);
        prefix.pop_back();
      }
    };
    Parts prefix;
    grow(prefix, n);
  }
}

TEST_CASE("dual step examples") {
  CHECK(dual_step({4, 4, 3, 2, 2, 1, 1}) == Partition{5, 4, 3, 3, 1, 1});
  CHECK(dual_step({6, 6, 3, 2, 1}) == Partition{7, 4, 3, 2, 1, 1});
  CHECK(dual_step({1}) == Partition{1});
  CHECK_THROWS_AS(dual_step(Partition{}), InvalidArgument);
}

TEST_CASE("dual step is the conjugate of the bulgarian step") {
  for (std::uint64_t n = 1; n <= 15; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      const auto d = dual_step(p);
      REQUIRE(d == conjugate(bulgarian_step(conjugate(p))));
      REQUIRE(d.parts() == oracle_dual(p.parts()));
    });
  }
}

TEST_CASE("dual step does not depend on which maximal pile is removed") {
  Gen gen(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto parts = gen.partition(gen.between(1, 30));
    const auto expected = dual_step(normalize(parts));
    std::shuffle(parts.begin(), parts.end(), std::mt19937_64(trial));
    CHECK(oracle_dual(parts) == expected.parts());
  }
}

TEST_CASE("austrian step examples") {
  CHECK(austrian_step({Partition{3, 2}, 0, 3}) == AustrianState{Partition{2, 1}, 2, 3});
  CHECK(austrian_step({Partition{2, 1}, 2, 3}) == AustrianState{Partition{3, 1}, 1, 3});
  CHECK(austrian_step({Partition{3}, 0, 3}) == AustrianState{Partition{2}, 1, 3});
  CHECK_THROWS_AS(austrian_step({Partition{1}, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(austrian_step({Partition{4}, 0, 3}), InvalidArgument);
}

TEST_CASE("austrian step keeps the bank below L and conserves cards") {
  for (Part life = 1; life <= 6; ++life) {
    for (std::uint64_t n = 0; n <= 14; ++n) {
      for (const auto& s : enumerate_state_space(n, VariantSpec{Variant::austrian, life})) {
        const auto& a = std::get<AustrianState>(s);
        const auto next = austrian_step(a);
        REQUIRE(next.total() == n);
        REQUIRE(next.bank < life);
        REQUIRE(next.piles.largest() <= life);
        // bank + cards removed, then whole machines bought
        const std::uint64_t pool = a.bank + a.piles.size();
        REQUIRE(next.bank == pool % life);
      }
    }
  }
}

TEST_CASE("multiplayer step examples") {
  CHECK(multiplayer_step({{Partition{4, 3, 3}}}).players == std::vector<Partition>{{3, 3, 2, 2}});
  CHECK(multiplayer_step({{Partition{2, 1}, Partition{2, 1}}}).players ==
        std::vector<Partition>{{2, 1}, {2, 1}});
  CHECK(multiplayer_step({{Partition{3}, Partition{1, 1}}}).players == std::vector<Partition>{{2, 2}, {1}});
}

TEST_CASE("multiplayer with one player is the bulgarian step") {
  for (std::uint64_t n = 0; n <= 15; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      REQUIRE(multiplayer_step({{p}}).players.front() == bulgarian_step(p));
    });
  }
}

TEST_CASE("multiplayer passes the left neighbour's pile count") {
  Gen gen(8);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = gen.between(1, 5);
    MultiplayerState state;
    for (std::uint64_t i = 0; i < s; ++i) state.players.push_back(normalize(gen.partition(gen.between(0, 10))));
    const auto next = multiplayer_step(state);
    REQUIRE(next.total() == state.total());
    for (std::size_t i = 0; i < s; ++i) {
      Parts expected;
      const auto& left = state.players[(i + s - 1) % s];
      expected.push_back(static_cast<Part>(left.size()));
      for (auto p : state.players[i]) expected.push_back(p - 1);
      REQUIRE(next.players[i].parts() == sorted_desc(expected));
    }
  }
}

TEST_CASE("servedio-yeh step examples") {
  CHECK(servedio_yeh_step(circular({1, 1, 1})).parts() == Parts{1, 1, 1});
  CHECK(servedio_yeh_step(circular({2, 1})).parts() == Parts{1, 2});
  CHECK(servedio_yeh_step(circular({3, 0, 0})).parts() == Parts{1, 1, 1});
  CHECK(servedio_yeh_step(circular({5, 0})).parts() == Parts{3, 2});
}

TEST_CASE("servedio-yeh agrees with card-by-card dealing") {
  Gen gen(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto c = gen.between(1, 9);
    const auto parts = gen.weak_composition(gen.between(0, 25), c);
    const auto next = servedio_yeh_step(circular(parts));
    REQUIRE(next.parts() == oracle_servedio_yeh(parts));
    REQUIRE(next.size() == c);
  }
}

TEST_CASE("janetzko step examples") {
  CHECK(janetzko_step({circular({2, 1, 0}), 1}) == PointerState{circular({0, 2, 1}), 3});
  CHECK(janetzko_step({circular({1, 1}), 1}) == PointerState{circular({0, 2}), 2});
  CHECK(janetzko_step({circular({0, 3, 0}), 1}) == PointerState{circular({0, 3, 0}), 2});
  CHECK(janetzko_step({circular({4, 0}), 1}) == PointerState{circular({2, 2}), 1});
}

TEST_CASE("janetzko agrees with card-by-card dealing") {
  Gen gen(4);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto c = gen.between(1, 8);
    const auto parts = gen.weak_composition(gen.between(0, 25), c);
    const auto pointer = gen.between(1, c);
    const auto next = janetzko_step({circular(parts), pointer});
    const auto [piles, seat] = oracle_janetzko(parts, pointer);
    REQUIRE(next.piles.parts() == piles);
    REQUIRE(next.pointer == seat);
  }
}

TEST_CASE("popov masked step") {
  const Partition l{4, 3, 3};
  const std::vector<std::size_t> all{0, 1, 2}, some{0, 2}, none{};
  CHECK(popov_masked_step(l, all) == Partition{3, 3, 2, 2});
  CHECK(popov_masked_step(l, some) == Partition{3, 3, 2, 2});
  CHECK(popov_masked_step(l, none) == l);
  const std::vector<std::size_t> out_of_range{3}, twice{1, 1};
  CHECK_THROWS_AS(popov_masked_step(l, out_of_range), InvalidArgument);
  CHECK_THROWS_AS(popov_masked_step(l, twice), InvalidArgument);
  for (std::uint64_t n = 0; n <= 16; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      std::vector<std::size_t> full(p.size());
      for (std::size_t i = 0; i < full.size(); ++i) full[i] = i;
      REQUIRE(popov_masked_step(p, full) == bulgarian_step(p));
    });
  }
}

TEST_CASE("ejs masked step") {
  const Partition l{4, 3, 3};
  CHECK(ejs_masked_step(l, Parts{4, 3, 3}) == Partition{10});
  CHECK(ejs_masked_step(l, Parts{2, 0, 3}) == Partition{5, 3, 2});
  CHECK(ejs_masked_step(l, Parts{0, 0, 0}) == l);
  CHECK_THROWS_AS(ejs_masked_step(l, Parts{5, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(ejs_masked_step(l, Parts{1, 1}), InvalidArgument);
  for (std::uint64_t n = 1; n <= 16; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      REQUIRE(ejs_masked_step(p, p.parts()) == Partition{static_cast<Part>(n)});
    });
  }
}

TEST_CASE("energy never increases and stays level exactly when c >= lambda_1 - 1") {
  for (std::uint64_t n = 0; n <= 30; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      const auto before = potential_energy(p);
      const auto after = potential_energy(bulgarian_step(p));
      REQUIRE(after <= before);
      const bool level = p.size() + 1 >= p.largest();
      REQUIRE((after == before) == level);
    });
  }
}

}
