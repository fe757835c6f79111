#include "liepath/shapovalov.hpp"

#include <cassert>

#include "liepath/errors.hpp"

namespace liepath {

StateCombination StateCombination::single(Word word, Int coefficient) {
  StateCombination c;
  c.add(word, coefficient);
  return c;
}

void StateCombination::add(const Word& word, const Int& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

const Int* StateCombination::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? nullptr : &it->second;
}

namespace {

// Raw expansion of E_a^+ over a word, grouped by resulting word but with
// zero groups kept, so observers see every merged scalar.
std::map<Word, Int> expand_terms(int a, const Word& word,
                                 const AlgebraSpec& spec,
                                 const Weight& highest) {
  if (a < 1 || a > spec.rank()) {
    throw DomainError("raising index " + std::to_string(a) +
                      " out of range 1.." + std::to_string(spec.rank()));
  }
  std::map<Word, Int> grouped;
  std::vector<int> labels = highest.labels;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const int letter = word[k];
    if (letter < 1 || letter > spec.rank()) {
      throw DomainError("word letter " + std::to_string(letter) +
                        " out of range 1.." + std::to_string(spec.rank()));
    }
    if (letter == a) {
      Word reduced;
      reduced.reserve(word.size() - 1);
      reduced.insert(reduced.end(), word.begin(),
                     word.begin() + static_cast<std::ptrdiff_t>(k));
      reduced.insert(reduced.end(),
                     word.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                     word.end());
      grouped[reduced] += labels[a - 1];
    }
    const auto& row = spec.cartan()[letter - 1];
    for (int i = 0; i < spec.rank(); ++i) labels[i] -= row[i];
  }
  return grouped;
}

}  // namespace

StateCombination apply_raising(int a, const Word& word, const AlgebraSpec& spec,
                               const Weight& highest) {
  StateCombination out;
  for (auto& [result, coeff] : expand_terms(a, word, spec, highest)) {
    out.add(result, coeff);
  }
  return out;
}

StateCombination apply_raising(int a, const StateCombination& combination,
                               const AlgebraSpec& spec, const Weight& highest) {
  StateCombination out;
  for (const auto& [word, coeff] : combination.terms()) {
    const StateCombination expanded = apply_raising(a, word, spec, highest);
    for (const auto& [result, c] : expanded.terms()) {
      out.add(result, coeff * c);
    }
  }
  return out;
}

InnerProductEngine::InnerProductEngine(AlgebraSpec spec, Weight highest,
                                       EngineOptions options)
    : spec_(std::move(spec)), highest_(std::move(highest)), options_(options) {
  if (highest_.labels.size() != static_cast<std::size_t>(spec_.rank())) {
    throw DomainError("highest weight " + format_weight(highest_) + " has " +
                      std::to_string(highest_.labels.size()) +
                      " labels, expected " + std::to_string(spec_.rank()));
  }
}

void InnerProductEngine::set_expansion_observer(ExpansionObserver observer) {
  observer_ = std::move(observer);
}

const StateCombination& InnerProductEngine::expand(int letter,
                                                   const Word& word) {
  if (options_.memoize) {
    auto it = memo_.find({letter, word});
    if (it != memo_.end()) return it->second;
  }
  StateCombination out;
  for (auto& [result, coeff] : expand_terms(letter, word, spec_, highest_)) {
    if (observer_) observer_(letter, word, result, coeff);
    out.add(result, coeff);
  }
  if (options_.memoize &&
      (options_.memo_cap == 0 || memo_.size() < options_.memo_cap)) {
    auto [it, inserted] =
        memo_.emplace(std::make_pair(letter, word), std::move(out));
    return it->second;
  }
  scratch_ = std::move(out);
  return scratch_;
}

Int InnerProductEngine::inner_product(const Word& bra, const Word& ket) {
  // Orthogonality shortcuts: states of different level or different weight
  // pair to zero.
  if (bra.size() != ket.size()) return 0;
  if (weight_of_word(spec_, highest_, bra) !=
      weight_of_word(spec_, highest_, ket)) {
    return 0;
  }
  StateCombination current = StateCombination::single(ket);
  for (auto it = bra.rbegin(); it != bra.rend(); ++it) {
    StateCombination next;
    for (const auto& [word, coeff] : current.terms()) {
      const StateCombination& expanded = expand(*it, word);
      for (const auto& [result, c] : expanded.terms()) {
        next.add(result, coeff * c);
      }
    }
    current = std::move(next);
    if (current.empty()) return 0;
  }
  const Int* value = current.coefficient(Word{});
  return value ? *value : Int(0);
}

Int inner_product(const Word& bra, const Word& ket, const AlgebraSpec& spec,
                  const Weight& highest) {
  InnerProductEngine engine(spec, highest);
  return engine.inner_product(bra, ket);
}

namespace {

// Plain recursion: peel the innermost raising letter, branch over every
// deletable position separately. No merging, no memo, no shortcuts.
Int oracle_recurse(const AlgebraSpec& spec, const Weight& highest,
                   const Word& bra, std::size_t bra_len, const Word& ket) {
  if (bra_len == 0) return ket.empty() ? Int(1) : Int(0);
  const int a = bra[bra_len - 1];
  Int total = 0;
  std::vector<int> labels = highest.labels;
  for (std::size_t k = 0; k < ket.size(); ++k) {
    if (ket[k] == a && labels[a - 1] != 0) {
      Word reduced;
      reduced.reserve(ket.size() - 1);
      reduced.insert(reduced.end(), ket.begin(),
                     ket.begin() + static_cast<std::ptrdiff_t>(k));
      reduced.insert(reduced.end(),
                     ket.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                     ket.end());
      total += Int(labels[a - 1]) *
               oracle_recurse(spec, highest, bra, bra_len - 1, reduced);
    }
    const auto& row = spec.cartan()[ket[k] - 1];
    for (int i = 0; i < spec.rank(); ++i) labels[i] -= row[i];
  }
  return total;
}

}  // namespace

Int inner_product_oracle(const Word& bra, const Word& ket,
                         const AlgebraSpec& spec, const Weight& highest) {
  for (const Word* w : {&bra, &ket}) {
    for (int letter : *w) {
      if (letter < 1 || letter > spec.rank()) {
        throw DomainError("word letter " + std::to_string(letter) +
                          " out of range 1.." + std::to_string(spec.rank()));
      }
    }
  }
  return oracle_recurse(spec, highest, bra, bra.size(), ket);
}

GramMatrix gram_matrix(const WeightSystem& ws, const Weight& weight,
                       InnerProductEngine& engine) {
  GramMatrix gram;
  gram.weight = weight;
  gram.paths = ws.enumerate_paths(weight);
  const std::size_t n = gram.paths.size();
  gram.entries.assign(n, std::vector<Int>(n, Int(0)));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s; t < n; ++t) {
      gram.entries[s][t] = engine.inner_product(gram.paths[s], gram.paths[t]);
#ifndef NDEBUG
      const Int mirrored = engine.inner_product(gram.paths[t], gram.paths[s]);
      assert(mirrored == gram.entries[s][t]);
#endif
      gram.entries[t][s] = gram.entries[s][t];
    }
  }
  return gram;
}

GramMatrix gram_matrix(const WeightSystem& ws, const Weight& weight) {
  InnerProductEngine engine(ws.spec(), ws.highest());
  return gram_matrix(ws, weight, engine);
}

}  // namespace liepath
