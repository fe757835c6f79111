#include "liepath/special_norms.hpp"

#include <algorithm>

#include "liepath/errors.hpp"

namespace liepath {

Word StaircaseSpec::flatten() const {
  Word word;
  for (const auto& segment : segments) {
    word.insert(word.end(), segment.separators.begin(),
                segment.separators.end());
    word.insert(word.end(), static_cast<std::size_t>(segment.burst_length),
                segment.burst_index);
  }
  word.insert(word.end(), trailing.begin(), trailing.end());
  return word;
}

namespace {

// A separator letter contributes no factor to the closed form, which is
// only sound where its raising partner peels off with coefficient one:
// label 1 and p = 0 at the application weight. Returns the weight after
// the block.
Weight check_separator_block(const WeightSystem& ws, Weight at,
                             const Word& block, int previous_burst,
                             int next_burst) {
  for (int letter : block) {
    if (letter == previous_burst || letter == next_burst) {
      throw DomainError("separator letter " + std::to_string(letter) +
                        " equals an adjacent burst index");
    }
    const WeightString st = ws.weight_string(at, letter);
    if (st.p != 0 || at.labels[letter - 1] != 1) {
      throw DomainError("separator letter " + std::to_string(letter) + " at " +
                        format_weight(at) +
                        " must sit where its label is 1 and p = 0");
    }
    const auto& row = ws.spec().cartan()[letter - 1];
    for (int a = 0; a < ws.spec().rank(); ++a) at.labels[a] -= row[a];
  }
  return at;
}

// Validates the burst conditions and returns the closed-form factor
// (label!)^2 for one burst starting at weight `at`.
Int burst_factor(const WeightSystem& ws, const Weight& at, int index,
                 int length) {
  if (length <= 0) throw DomainError("burst length must be positive");
  const WeightString st = ws.weight_string(at, index);
  if (st.p != 0) {
    throw DomainError("burst on root " + std::to_string(index) + " at " +
                      format_weight(at) +
                      " does not start at the top of its string (p = " +
                      std::to_string(st.p) + ", need 0)");
  }
  const int label = at.labels[index - 1];
  if (length != label) {
    throw DomainError("burst on root " + std::to_string(index) + " at " +
                      format_weight(at) + " has length " +
                      std::to_string(length) + " but the label there is " +
                      std::to_string(label) + " (saturation required)");
  }
  const Int f = factorial(label);
  return f * f;
}

Weight advance(const WeightSystem& ws, Weight w, const Word& letters) {
  for (int letter : letters) {
    const auto& row = ws.spec().cartan()[letter - 1];
    for (int a = 0; a < ws.spec().rank(); ++a) w.labels[a] -= row[a];
  }
  return w;
}

Int audited(const WeightSystem& ws, const Word& word, const Int& closed_form,
            const char* what) {
  const Int direct = inner_product(word, word, ws.spec(), ws.highest());
  if (direct != closed_form) {
    throw InternalError(std::string(what) + " closed form " +
                        to_decimal(closed_form) + " disagrees with the inner "
                        "product " + to_decimal(direct) + " for word " +
                        format_word(word));
  }
  return closed_form;
}

}  // namespace

Int staircase_norm(const WeightSystem& ws, const StaircaseSpec& spec) {
  const Word word = spec.flatten();
  if (!ws.is_path(word)) {
    throw DomainError("staircase word " + format_word(word) +
                      " leaves the weight system");
  }

  Int norm(1);
  Weight current = ws.highest();
  int previous_burst = 0;
  for (std::size_t k = 0; k < spec.segments.size(); ++k) {
    const auto& segment = spec.segments[k];
    current = check_separator_block(ws, current, segment.separators,
                                    previous_burst, segment.burst_index);
    norm *= burst_factor(ws, current, segment.burst_index, segment.burst_length);
    current = advance(
        ws, current,
        Word(static_cast<std::size_t>(segment.burst_length), segment.burst_index));
    previous_burst = segment.burst_index;
  }
  check_separator_block(ws, current, spec.trailing, previous_burst, 0);

  return audited(ws, word, norm, "staircase");
}

Int prefixed_staircase_norm(const WeightSystem& ws, int n0, int i0,
                            const StaircaseSpec& inner) {
  const Int base = staircase_norm(ws, inner);
  if (n0 == 0) return base;
  if (n0 < 0) throw DomainError("prefix burst length must be >= 0");
  if (i0 < 1 || i0 > ws.spec().rank()) {
    throw DomainError("prefix burst index " + std::to_string(i0) +
                      " out of range 1.." + std::to_string(ws.spec().rank()));
  }

  Word word = inner.flatten();
  if (!word.empty() && word.back() == i0) {
    throw DomainError("prefix burst letter " + std::to_string(i0) +
                      " equals the preceding letter; extend that burst instead");
  }
  const Weight at = weight_of_word(ws.spec(), ws.highest(), word);
  const WeightString st = ws.weight_string(at, i0);
  if (st.p != 0) {
    throw DomainError("prefix burst on root " + std::to_string(i0) + " at " +
                      format_weight(at) +
                      " does not start at the top of its string");
  }
  const int label = at.labels[i0 - 1];
  if (n0 > label) {
    throw DomainError("prefix burst length " + std::to_string(n0) +
                      " exceeds the label " + std::to_string(label) + " at " +
                      format_weight(at) + "; the state vanishes");
  }

  Int norm = base;
  for (int k = 1; k <= n0; ++k) norm *= Int(label - k + 1) * Int(k);

  word.insert(word.end(), static_cast<std::size_t>(n0), i0);
  return audited(ws, word, norm, "prefixed staircase");
}

StaircaseParse parse_staircase(const WeightSystem& ws, const Word& word) {
  if (!ws.is_path(word)) {
    throw DomainError("word " + format_word(word) +
                      " leaves the weight system; no closed form applies");
  }

  struct Run {
    int letter;
    int length;
    Weight start;
  };
  std::vector<Run> runs;
  Weight current = ws.highest();
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (!runs.empty() && runs.back().letter == word[k]) {
      ++runs.back().length;
    } else {
      runs.push_back(Run{word[k], 1, current});
    }
    current = advance(ws, current, Word{word[k]});
  }

  auto is_saturated_burst = [&](const Run& run) {
    return ws.weight_string(run.start, run.letter).p == 0 &&
           run.length == run.start.labels[run.letter - 1];
  };

  StaircaseParse parse;
  std::size_t end = runs.size();
  if (!runs.empty() && !is_saturated_burst(runs.back())) {
    // The final run may be a partial burst handled by the prefixed form.
    const Run& last = runs.back();
    const WeightString st = ws.weight_string(last.start, last.letter);
    const int label = last.start.labels[last.letter - 1];
    if (st.p != 0 || last.length > label) {
      throw DomainError("run of root " + std::to_string(last.letter) + " at " +
                        format_weight(last.start) +
                        " fits neither a saturated nor a partial burst");
    }
    parse.prefix_n0 = last.length;
    parse.prefix_i0 = last.letter;
    --end;
  }

  // Each remaining run must be a saturated burst on its own. A separator
  // only qualifies where label = 1 and p = 0, and such a run already is a
  // saturated length-one burst, so the parse never emits separators.
  for (std::size_t k = 0; k < end; ++k) {
    const Run& run = runs[k];
    if (!is_saturated_burst(run)) {
      throw DomainError("run of root " + std::to_string(run.letter) + " at " +
                        format_weight(run.start) +
                        " is not a saturated burst; no closed form applies");
    }
    parse.stairs.segments.push_back(
        StaircaseSegment{{}, run.letter, run.length});
  }
  return parse;
}

Int closed_form_norm(const WeightSystem& ws, const Word& word) {
  const StaircaseParse parse = parse_staircase(ws, word);
  if (parse.prefix_n0 == 0) return staircase_norm(ws, parse.stairs);
  return prefixed_staircase_norm(ws, parse.prefix_n0, parse.prefix_i0,
                                 parse.stairs);
}

MinusculeGramReport verify_minuscule_gram(const WeightSystem& ws) {
  const AlgebraSpec& spec = ws.spec();
  int s = 0;
  for (int i = 0; i < spec.rank(); ++i) {
    const int label = ws.highest().labels[i];
    if (label == 0) continue;
    if (label != 1 || s != 0) {
      s = -1;
      break;
    }
    s = i + 1;
  }
  if (s <= 0) {
    throw DomainError("highest weight " + format_weight(ws.highest()) +
                      " is not a fundamental weight");
  }
  const auto& minuscule = spec.minuscule_indices();
  if (std::find(minuscule.begin(), minuscule.end(), s) == minuscule.end()) {
    std::string nodes;
    for (int idx : minuscule) {
      if (!nodes.empty()) nodes += ",";
      nodes += std::to_string(idx);
    }
    if (nodes.empty()) nodes = "none";
    throw DomainError("fundamental weight " + std::to_string(s) + " of " +
                      spec.name() +
                      " is not minuscule (minuscule nodes: " + nodes + ")");
  }

  MinusculeGramReport report;
  report.strings_two_term = true;
  report.pass = true;
  InnerProductEngine engine(spec, ws.highest());
  for (const Weight& w : ws.weights()) {
    for (int i = 1; i <= spec.rank(); ++i) {
      const WeightString st = ws.weight_string(w, i);
      if (st.p + st.q > 1) report.strings_two_term = false;
    }
    const GramMatrix gram = gram_matrix(ws, w, engine);
    bool all_ones = true;
    for (const auto& row : gram.entries) {
      for (const Int& entry : row) {
        if (entry != 1) all_ones = false;
      }
    }
    report.entries.push_back(
        MinusculeGramReport::Entry{w, gram.paths.size(), all_ones});
    if (!all_ones) report.pass = false;
  }
  if (!report.strings_two_term) report.pass = false;
  return report;
}

PositivityReport scan_coefficient_positivity(const WeightSystem& ws,
                                             int level_cap) {
  const int cap = level_cap < 0
                      ? ws.max_level()
                      : std::min(level_cap, ws.max_level());

  PositivityReport report;
  InnerProductEngine engine(ws.spec(), ws.highest());
  engine.set_expansion_observer([&](int letter, const Word& source,
                                    const Word& result, const Int& coeff) {
    // The conjectured-positive coefficients are the per-run scalars from
    // raising a path state. The engine also walks formal non-path words
    // (deleting a letter rarely preserves pathness); their expansion
    // scalars are artifacts of that route and are not recorded.
    if (!ws.is_path(source)) return;
    if (!report.has_observations || coeff < report.min_coefficient) {
      report.min_coefficient = coeff;
    }
    if (!report.has_observations || coeff > report.max_coefficient) {
      report.max_coefficient = coeff;
    }
    report.has_observations = true;
    ++report.coefficient_count;
    if (coeff < 0) {
      ++report.negative_count;
      if (report.negatives.size() < PositivityReport::kMaxRecordedNegatives) {
        report.negatives.push_back(
            PositivityReport::Context{letter, source, result, coeff});
      }
    }
    if (!ws.is_path(result)) ++report.nonpath_result_count;
  });

  for (int level = 0; level <= cap; ++level) {
    for (const Weight& w : ws.levels()[level]) {
      for (const Word& path : ws.enumerate_paths(w)) {
        engine.inner_product(path, path);
      }
    }
  }
  report.expansion_count = engine.memo_size();
  return report;
}

}  // namespace liepath
