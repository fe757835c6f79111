#pragma once

#include <functional>
#include <map>
#include <unordered_map>
#include <utility>

#include "liepath/weightsys.hpp"

namespace liepath {

/// A finite integer linear combination of lowering words. Zero coefficients
/// are pruned eagerly so that equal combinations compare equal; iteration is
/// lexicographic in the words.
class StateCombination {
 public:
  using Terms = std::map<Word, Int>;

  StateCombination() = default;

  static StateCombination single(Word word, Int coefficient = 1);

  void add(const Word& word, const Int& coefficient);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a word, or nullptr when absent.
  const Int* coefficient(const Word& word) const;

  friend bool operator==(const StateCombination&,
                         const StateCombination&) = default;

 private:
  Terms terms_;
};

/// Expands E_a^+ applied to the word state: one term per deletable position
/// carrying the a-th Dynkin label of the preceding prefix weight, with terms
/// that produce the same word merged. Total on all words; the empty word
/// always yields the empty combination (raising kills the highest weight).
StateCombination apply_raising(int a, const Word& word, const AlgebraSpec& spec,
                               const Weight& highest);

/// Linear extension of apply_raising to combinations.
StateCombination apply_raising(int a, const StateCombination& combination,
                               const AlgebraSpec& spec, const Weight& highest);

struct EngineOptions {
  bool memoize = true;
  /// 0 = unbounded. When the cap is reached further expansions are computed
  /// on the fly without being stored; results are unaffected.
  std::size_t memo_cap = 0;
};

/// Inner products of lowering-word states in the contravariant (Shapovalov)
/// form with <highest|highest> = 1 and E_i^+ adjoint to E_i^-.
///
/// Words of different length or different end weight are orthogonal and are
/// short-circuited to zero; otherwise the bra's letters are peeled from the
/// last-applied side and expanded over the ket combination, with expansions
/// memoized per (letter, word). The cache is transparent: it never changes
/// results, only avoids recomputation.
class InnerProductEngine {
 public:
  /// Called once per freshly computed expansion term, including terms whose
  /// merged coefficient is zero (which are then pruned from the result).
  using ExpansionObserver = std::function<void(
      int letter, const Word& source, const Word& result, const Int& coefficient)>;

  InnerProductEngine(AlgebraSpec spec, Weight highest, EngineOptions options = {});

  Int inner_product(const Word& bra, const Word& ket);

  void set_expansion_observer(ExpansionObserver observer);

  std::size_t memo_size() const { return memo_.size(); }
  const AlgebraSpec& spec() const { return spec_; }
  const Weight& highest() const { return highest_; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<int, Word>& key) const {
      std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(key.first);
      for (int letter : key.second) {
        h ^= static_cast<std::size_t>(letter) + 0x9e3779b97f4a7c15ull +
             (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  // Returned reference points into the memo (stable) or into scratch_ and is
  // invalidated by the next expand() call.
  const StateCombination& expand(int letter, const Word& word);

  AlgebraSpec spec_;
  Weight highest_;
  EngineOptions options_;
  std::unordered_map<std::pair<int, Word>, StateCombination, KeyHash> memo_;
  StateCombination scratch_;
  ExpansionObserver observer_;
};

/// One-shot convenience wrapper around InnerProductEngine.
Int inner_product(const Word& bra, const Word& ket, const AlgebraSpec& spec,
                  const Weight& highest);

/// Independent correctness oracle: the same inner product computed by plain
/// repeated raising expansion with no level/weight shortcuts, no memoization
/// and no term merging. Deliberately shares no code with the engine path.
Int inner_product_oracle(const Word& bra, const Word& ket,
                         const AlgebraSpec& spec, const Weight& highest);

/// Pairwise inner products of the path states ending at one weight, in
/// enumerate_paths order.
struct GramMatrix {
  Weight weight;
  std::vector<Word> paths;
  std::vector<std::vector<Int>> entries;
};

GramMatrix gram_matrix(const WeightSystem& ws, const Weight& weight);
GramMatrix gram_matrix(const WeightSystem& ws, const Weight& weight,
                       InnerProductEngine& engine);

}  // namespace liepath
