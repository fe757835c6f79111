#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "liepath/algebra.hpp"

namespace liepath {

/// A weight stored as its vector of Dynkin labels.
struct Weight {
  std::vector<int> labels;

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// "(0,1,-1)"
std::string format_weight(const Weight& w);

/// A sequence of simple-root letters (1-based) in application order: the
/// first letter names the lowering operator applied first to the highest
/// weight state.
using Word = std::vector<int>;

/// "[2,1,1]"
std::string format_word(const Word& w);

/// Maximal extents of the alpha_i string through a weight: the weights
/// lambda + p*alpha_i, ..., lambda - q*alpha_i all lie in the system and
/// q - p equals the i-th Dynkin label.
struct WeightString {
  int p = 0;
  int q = 0;
};

/// Formal weight of a word: highest minus one Cartan-matrix row per letter.
/// Defined for every word, including ones whose intermediate weights leave
/// the weight system.
Weight weight_of_word(const AlgebraSpec& spec, const Weight& highest,
                      const Word& word);

/// The level-graded set of distinct weights of the irreducible representation
/// with the given dominant highest weight, together with the (p, q) string
/// data and the lowering edges lambda -> lambda - alpha_i (present exactly
/// when q_i > 0).
///
/// Immutable after build(); all queries are pure.
class WeightSystem {
 public:
  static constexpr int kDefaultLevelCap = 64;

  static WeightSystem build(const AlgebraSpec& spec, const Weight& highest,
                            int level_cap = kDefaultLevelCap);

  const AlgebraSpec& spec() const { return spec_; }
  const Weight& highest() const { return highest_; }

  int max_level() const { return static_cast<int>(levels_.size()) - 1; }
  std::size_t weight_count() const;

  /// Weights grouped by level, lexicographically sorted inside each level.
  const std::vector<std::vector<Weight>>& levels() const { return levels_; }

  bool contains(const Weight& w) const;
  int level_of(const Weight& w) const;

  /// Multiplicities n with w = highest - sum n_i * alpha_i.
  const std::vector<int>& depth(const Weight& w) const;

  /// (p_i, q_i) for a weight in the system; 1-based i.
  WeightString weight_string(const Weight& w, int i) const;

  /// True when the lowering edge w -> w - alpha_i exists (q_i > 0).
  bool has_edge(const Weight& w, int i) const;

  /// All lowering words from the highest weight to `target` whose every
  /// prefix stays inside the system. Deterministic order: depth-first with
  /// the smaller root index explored first. The highest weight itself yields
  /// exactly the empty word.
  std::vector<Word> enumerate_paths(const Weight& target) const;

  /// True when every prefix of the word maps to a weight of the system.
  bool is_path(const Word& word) const;

  /// All weights in (level, lexicographic) order.
  std::vector<Weight> weights() const;

 private:
  struct Node {
    int level = 0;
    std::vector<int> depth;
    std::vector<WeightString> strings;
  };

  WeightSystem(AlgebraSpec spec, Weight highest);
  const Node& node(const Weight& w) const;

  AlgebraSpec spec_;
  Weight highest_;
  std::vector<std::vector<Weight>> levels_;
  std::map<Weight, Node> nodes_;
};

/// GraphViz rendering of the weight DAG: node label = Dynkin labels plus
/// level, edge label = root index.
std::string to_dot(const WeightSystem& ws);

}  // namespace liepath
