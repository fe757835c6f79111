#include <doctest.h>

#include <random>
#include <vector>

#include "liepath/errors.hpp"
#include "liepath/shapovalov.hpp"

using namespace liepath;

namespace {

// Test-only third route: evaluate <highest| ops |highest> by rewriting the
// generator string with the raw commutation relations, one swap at a time.
// Exponential and slow, but it assumes nothing beyond the relations
// themselves, so it independently validates the raising expansion.
struct Gen {
  enum Kind { kRaise, kLower, kCartan } kind;
  int index;  // 1-based
};

Int brute_eval(const AlgebraSpec& spec, const Weight& highest,
               std::vector<Gen> ops) {
  if (ops.empty()) return 1;
  const Gen last = ops.back();
  if (last.kind == Gen::kCartan) {
    ops.pop_back();
    return Int(highest.labels[last.index - 1]) *
           brute_eval(spec, highest, std::move(ops));
  }
  if (last.kind == Gen::kRaise) return 0;

  // Rightmost non-lowering generator; everything right of it is E^-.
  std::ptrdiff_t k = static_cast<std::ptrdiff_t>(ops.size()) - 1;
  while (k >= 0 && ops[k].kind == Gen::kLower) --k;
  if (k < 0) return 0;  // <highest| E^- ... = 0

  const Gen g = ops[k];
  const Gen lower = ops[k + 1];
  Int total = 0;
  if (g.kind == Gen::kCartan) {
    // H_i E_j^- = E_j^- H_i - A_ji E_j^-
    std::vector<Gen> swapped = ops;
    std::swap(swapped[k], swapped[k + 1]);
    total += brute_eval(spec, highest, std::move(swapped));
    std::vector<Gen> dropped = ops;
    dropped.erase(dropped.begin() + k);
    total -= Int(spec.cartan_entry(lower.index, g.index)) *
             brute_eval(spec, highest, std::move(dropped));
  } else {
    // E_a^+ E_j^- = E_j^- E_a^+ + delta_aj H_a
    std::vector<Gen> swapped = ops;
    std::swap(swapped[k], swapped[k + 1]);
    total += brute_eval(spec, highest, std::move(swapped));
    if (g.index == lower.index) {
      std::vector<Gen> merged = ops;
      merged.erase(merged.begin() + k + 1);
      merged[k] = Gen{Gen::kCartan, g.index};
      total += brute_eval(spec, highest, std::move(merged));
    }
  }
  return total;
}

Int brute_inner_product(const Word& bra, const Word& ket,
                        const AlgebraSpec& spec, const Weight& highest) {
  std::vector<Gen> ops;
  for (int letter : bra) ops.push_back(Gen{Gen::kRaise, letter});
  for (auto it = ket.rbegin(); it != ket.rend(); ++it) {
    ops.push_back(Gen{Gen::kLower, *it});
  }
  return brute_eval(spec, highest, std::move(ops));
}

struct Rep {
  AlgebraSpec spec;
  Weight highest;
};

std::vector<Rep> sweep_reps() {
  return {
      {AlgebraSpec(Family::A, 2), Weight{{1, 1}}},
      {AlgebraSpec(Family::A, 3), Weight{{0, 1, 0}}},
      {AlgebraSpec(Family::B, 2), Weight{{1, 0}}},
      {AlgebraSpec(Family::B, 2), Weight{{0, 1}}},
      {AlgebraSpec(Family::C, 3), Weight{{1, 0, 0}}},
      {AlgebraSpec(Family::G, 2), Weight{{0, 1}}},
      {AlgebraSpec(Family::G, 2), Weight{{1, 0}}},
      {AlgebraSpec(Family::D, 4), Weight{{1, 0, 0, 0}}},
  };
}

Word random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, rank);
  Word w(static_cast<std::size_t>(len(rng)));
  for (int& x : w) x = letter(rng);
  return w;
}

}  // namespace

TEST_CASE("apply_raising base cases") {
  const AlgebraSpec g2(Family::G, 2);
  const Weight top{{0, 1}};

  for (int a = 1; a <= 2; ++a) {
    CHECK(apply_raising(a, Word{}, g2, top).empty());
  }

  CHECK(apply_raising(2, Word{2}, g2, top) ==
        StateCombination::single(Word{}, 1));
  CHECK(apply_raising(1, Word{2, 1}, g2, top) ==
        StateCombination::single(Word{2}, 3));
  CHECK(apply_raising(1, Word{2, 1, 1}, g2, top) ==
        StateCombination::single(Word{2, 1}, 4));
  CHECK(apply_raising(1, Word{2}, g2, top).empty());
}

TEST_CASE("apply_raising merges positions that give the same word") {
  const AlgebraSpec g2(Family::G, 2);
  const Weight top{{0, 1}};
  // Three deletable positions, labels 3, 1, -1 along the prefix chain.
  CHECK(apply_raising(1, Word{2, 1, 1, 1}, g2, top) ==
        StateCombination::single(Word{2, 1, 1}, 3));
}

TEST_CASE("apply_raising is linear over combinations") {
  const AlgebraSpec g2(Family::G, 2);
  const Weight top{{0, 1}};
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int round = 0; round < 40; ++round) {
    const Word u = random_word(rng, 2, 5);
    const Word v = random_word(rng, 2, 5);
    const Int cu = coeff(rng);
    const Int cv = coeff(rng);
    StateCombination combo;
    combo.add(u, cu);
    combo.add(v, cv);
    for (int a = 1; a <= 2; ++a) {
      StateCombination expected;
      const StateCombination from_u = apply_raising(a, u, g2, top);
      for (const auto& [w, c] : from_u.terms()) expected.add(w, cu * c);
      const StateCombination from_v = apply_raising(a, v, g2, top);
      for (const auto& [w, c] : from_v.terms()) expected.add(w, cv * c);
      CHECK(apply_raising(a, combo, g2, top) == expected);
    }
  }
}

TEST_CASE("ladder norms of the G2 adjoint") {
  const AlgebraSpec g2(Family::G, 2);
  const Weight top{{0, 1}};
  auto norm = [&](const Word& w) { return inner_product(w, w, g2, top); };
  CHECK(norm({}) == 1);
  CHECK(norm({2}) == 1);
  CHECK(norm({2, 1}) == 3);
  CHECK(norm({2, 1, 1}) == 12);
  CHECK(norm({2, 1, 1, 1}) == 36);
  CHECK(norm({2, 1, 1, 2}) == 12);
  // Fixed independently by the oracle and by the rank-one structure of the
  // one-dimensional lowest weight space (see the Gram test below).
  CHECK(norm({2, 1, 1, 1, 2, 1, 2, 1, 1, 2}) == 1296);
}

TEST_CASE("lowest-weight Gram of the G2 adjoint has rank one") {
  // The lowest weight space is one-dimensional, so all path states are
  // proportional: G[s][t]^2 == G[s][s] * G[t][t] exactly.
  const WeightSystem ws =
      WeightSystem::build(AlgebraSpec(Family::G, 2), Weight{{0, 1}});
  const GramMatrix gram = gram_matrix(ws, Weight{{0, -1}});
  REQUIRE(gram.paths.size() == 4);
  CHECK(gram.entries[0][0] == 1296);
  CHECK(gram.entries[1][1] == 5184);
  CHECK(gram.entries[2][2] == 576);
  CHECK(gram.entries[3][3] == 1296);
  for (std::size_t s = 0; s < 4; ++s) {
    for (std::size_t t = 0; t < 4; ++t) {
      CHECK(gram.entries[s][t] * gram.entries[s][t] ==
            gram.entries[s][s] * gram.entries[t][t]);
      CHECK(gram.entries[s][t] > 0);
    }
  }
}

TEST_CASE("orthogonality shortcuts and oracle agree on zero") {
  const AlgebraSpec g2(Family::G, 2);
  const Weight top{{0, 1}};
  CHECK(inner_product({2}, {2, 1}, g2, top) == 0);
  CHECK(inner_product_oracle({2}, {2, 1}, g2, top) == 0);
  // Same length, different end weight.
  CHECK(inner_product({2, 1}, {2, 2}, g2, top) == 0);
  CHECK(inner_product_oracle({2, 1}, {2, 2}, g2, top) == 0);
}

TEST_CASE("zero-weight Gram matrix of the G2 adjoint") {
  const WeightSystem ws =
      WeightSystem::build(AlgebraSpec(Family::G, 2), Weight{{0, 1}});
  const GramMatrix gram = gram_matrix(ws, Weight{{0, 0}});
  REQUIRE(gram.paths == std::vector<Word>{{2, 1, 1, 1, 2}, {2, 1, 1, 2, 1}});
  CHECK(gram.entries[0][0] == 72);
  CHECK(gram.entries[0][1] == 36);
  CHECK(gram.entries[1][0] == 36);
  CHECK(gram.entries[1][1] == 24);
}

TEST_CASE("Gram matrices at simple weights") {
  const WeightSystem a3 =
      WeightSystem::build(AlgebraSpec(Family::A, 3), Weight{{0, 1, 0}});
  const GramMatrix g = gram_matrix(a3, Weight{{-1, 1, -1}});
  CHECK(g.entries == std::vector<std::vector<Int>>{{1, 1}, {1, 1}});

  const WeightSystem g2 =
      WeightSystem::build(AlgebraSpec(Family::G, 2), Weight{{0, 1}});
  CHECK(gram_matrix(g2, Weight{{3, -1}}).entries ==
        std::vector<std::vector<Int>>{{1}});
}

TEST_CASE("engine equals oracle on every path pair up to level 8") {
  for (const Rep& rep : sweep_reps()) {
    CAPTURE(rep.spec.name());
    const WeightSystem ws = WeightSystem::build(rep.spec, rep.highest);
    InnerProductEngine engine(rep.spec, rep.highest);
    const int cap = std::min(ws.max_level(), 8);
    for (int level = 0; level <= cap; ++level) {
      for (const Weight& w : ws.levels()[level]) {
        const auto paths = ws.enumerate_paths(w);
        for (const Word& bra : paths) {
          for (const Word& ket : paths) {
            const Int fast = engine.inner_product(bra, ket);
            CHECK(fast == inner_product_oracle(bra, ket, rep.spec, rep.highest));
            CHECK(fast == engine.inner_product(ket, bra));
          }
        }
      }
    }
  }
}

TEST_CASE("engine equals oracle on random words up to level 8") {
  std::mt19937 rng(987654);
  for (const Rep& rep : sweep_reps()) {
    CAPTURE(rep.spec.name());
    InnerProductEngine engine(rep.spec, rep.highest);
    for (int round = 0; round < 25; ++round) {
      const Word bra = random_word(rng, rep.spec.rank(), 8);
      const Word ket = random_word(rng, rep.spec.rank(), 8);
      const Int fast = engine.inner_product(bra, ket);
      const Int slow = inner_product_oracle(bra, ket, rep.spec, rep.highest);
      CAPTURE(format_word(bra));
      CAPTURE(format_word(ket));
      CHECK(fast == slow);
      if (bra.size() != ket.size()) CHECK(slow == 0);
    }
  }
}

TEST_CASE("oracle and engine agree with raw commutator rewriting") {
  // Small-scale third route straight from the commutation relations.
  {
    const AlgebraSpec a2(Family::A, 2);
    const Weight top{{1, 1}};
    const WeightSystem ws = WeightSystem::build(a2, top);
    for (const Weight& w : ws.weights()) {
      const auto paths = ws.enumerate_paths(w);
      for (const Word& bra : paths) {
        for (const Word& ket : paths) {
          const Int brute = brute_inner_product(bra, ket, a2, top);
          CHECK(brute == inner_product_oracle(bra, ket, a2, top));
          CHECK(brute == inner_product(bra, ket, a2, top));
        }
      }
    }
  }
  {
    const AlgebraSpec g2(Family::G, 2);
    const Weight top{{0, 1}};
    const WeightSystem ws = WeightSystem::build(g2, top);
    for (int level = 0; level <= 5; ++level) {
      for (const Weight& w : ws.levels()[level]) {
        for (const Word& path : ws.enumerate_paths(w)) {
          CHECK(brute_inner_product(path, path, g2, top) ==
                inner_product(path, path, g2, top));
        }
      }
    }
  }
}

TEST_CASE("memoization never changes results") {
  const AlgebraSpec g2(Family::G, 2);
  const Weight top{{0, 1}};
  const WeightSystem ws = WeightSystem::build(g2, top);

  InnerProductEngine memoized(g2, top);
  InnerProductEngine plain(g2, top, EngineOptions{.memoize = false});
  InnerProductEngine capped(g2, top, EngineOptions{.memoize = true, .memo_cap = 5});

  for (const Weight& w : ws.weights()) {
    const auto paths = ws.enumerate_paths(w);
    for (const Word& bra : paths) {
      for (const Word& ket : paths) {
        const Int reference = plain.inner_product(bra, ket);
        CHECK(memoized.inner_product(bra, ket) == reference);
        CHECK(capped.inner_product(bra, ket) == reference);
      }
    }
  }
  CHECK(memoized.memo_size() > 0);
  CHECK(plain.memo_size() == 0);
  CHECK(capped.memo_size() <= 5);
}

TEST_CASE("diagonal Gram entries are nonnegative on tested systems") {
  for (const Rep& rep : sweep_reps()) {
    CAPTURE(rep.spec.name());
    const WeightSystem ws = WeightSystem::build(rep.spec, rep.highest);
    InnerProductEngine engine(rep.spec, rep.highest);
    for (const Weight& w : ws.weights()) {
      if (ws.level_of(w) > 8) continue;
      for (const Word& path : ws.enumerate_paths(w)) {
        CHECK(engine.inner_product(path, path) >= 0);
      }
    }
  }
}

TEST_CASE("letters outside the rank are rejected") {
  const AlgebraSpec a2(Family::A, 2);
  const Weight top{{1, 0}};
  CHECK_THROWS_AS(inner_product({3}, {3}, a2, top), DomainError);
  CHECK_THROWS_AS(inner_product_oracle({0}, {1}, a2, top), DomainError);
  CHECK_THROWS_AS(apply_raising(3, Word{1}, a2, top), DomainError);
}
