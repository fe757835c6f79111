#pragma once

#include <vector>

#include "liepath/shapovalov.hpp"

namespace liepath {

/// One block of a staircase word: separator letters applied first, then the
/// burst (E_i^-)^n. Burst conditions are validated by staircase_norm, not by
/// the struct itself.
struct StaircaseSegment {
  Word separators;
  int burst_index = 0;
  int burst_length = 0;
};

/// A staircase word in application order: the segments in sequence, then
/// trailing separators applied after the last burst.
struct StaircaseSpec {
  std::vector<StaircaseSegment> segments;
  Word trailing;

  Word flatten() const;
};

/// Closed-form norm of a staircase path state: the product over bursts of
/// (label at burst start)! squared. Each burst must start where the string
/// extends no further up (p = 0) and must exhaust the string (length equal
/// to the label); separator letters must differ from the indices of the
/// bursts flanking their block. Violations raise DomainError naming the
/// condition. The result is additionally audited against inner_product and
/// a mismatch raises InternalError.
Int staircase_norm(const WeightSystem& ws, const StaircaseSpec& spec);

/// Norm of a staircase extended by a possibly partial burst (E_{i0}^-)^{n0}
/// applied after everything else: the closed form gains one factor
/// (L - k + 1) * k per prefix step, L being the label at the attachment
/// weight. Requires 0 <= n0 <= L and p_{i0} = 0 there.
Int prefixed_staircase_norm(const WeightSystem& ws, int n0, int i0,
                            const StaircaseSpec& inner);

/// Result of decomposing a path word into staircase blocks. prefix_n0 == 0
/// means the word is a pure staircase.
struct StaircaseParse {
  StaircaseSpec stairs;
  int prefix_n0 = 0;
  int prefix_i0 = 0;
};

/// Greedy run decomposition of a path word: every maximal run that starts
/// at p = 0 and exhausts its string becomes a burst; other runs become
/// separators, except that the final run may become a partial prefix burst.
/// Throws DomainError when the word does not fit the staircase shape.
StaircaseParse parse_staircase(const WeightSystem& ws, const Word& word);

/// parse_staircase followed by the matching closed form.
Int closed_form_norm(const WeightSystem& ws, const Word& word);

struct MinusculeGramReport {
  struct Entry {
    Weight weight;
    std::size_t path_count = 0;
    bool all_ones = false;
  };
  std::vector<Entry> entries;
  /// p + q <= 1 at every weight and index (all strings at most two terms).
  bool strings_two_term = false;
  bool pass = false;
};

/// Checks that every Gram entry of every weight equals one. The system must
/// be built from a minuscule fundamental weight; anything else raises
/// DomainError listing the family's minuscule nodes.
MinusculeGramReport verify_minuscule_gram(const WeightSystem& ws);

struct PositivityReport {
  struct Context {
    int letter = 0;
    Word source;
    Word result;
    Int coefficient;
  };

  bool has_observations = false;
  Int min_coefficient = 0;
  Int max_coefficient = 0;
  std::size_t expansion_count = 0;
  std::size_t coefficient_count = 0;
  std::size_t negative_count = 0;
  /// Results of path-word expansions that are themselves not path words
  /// (diagnostic only; the engine never relies on results staying inside
  /// the weight system).
  std::size_t nonpath_result_count = 0;
  std::vector<Context> negatives;  // capped at kMaxRecordedNegatives
  static constexpr std::size_t kMaxRecordedNegatives = 16;
};

/// Records every merged scalar coefficient emitted by raising expansions of
/// path words while computing the norm of every path word up to level_cap
/// (negative cap means the full system). Expansions of the formal non-path
/// words the engine also traverses are excluded; their scalars do not
/// correspond to steps of the run-by-run reduction. Evidence, not proof:
/// the report states what was observed.
PositivityReport scan_coefficient_positivity(const WeightSystem& ws,
                                             int level_cap = -1);

}  // namespace liepath
