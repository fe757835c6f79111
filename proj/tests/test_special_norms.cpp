#include <doctest.h>

#include "liepath/errors.hpp"
#include "liepath/special_norms.hpp"

using namespace liepath;

namespace {

WeightSystem g2_adjoint() {
  return WeightSystem::build(AlgebraSpec(Family::G, 2), Weight{{0, 1}});
}

}  // namespace

TEST_CASE("empty staircase has norm one") {
  const WeightSystem ws = g2_adjoint();
  CHECK(staircase_norm(ws, StaircaseSpec{}) == 1);
  CHECK(closed_form_norm(ws, {}) == 1);
}

TEST_CASE("saturated staircase norms in the G2 adjoint") {
  const WeightSystem ws = g2_adjoint();

  // [2,1,1,1]: either read the leading letter as a separator or as a
  // saturated length-one burst; both segmentations are valid and agree.
  const StaircaseSpec with_separator{
      {StaircaseSegment{{2}, 1, 3}}, {}};
  const StaircaseSpec all_bursts{
      {StaircaseSegment{{}, 2, 1}, StaircaseSegment{{}, 1, 3}}, {}};
  CHECK(staircase_norm(ws, with_separator) == 36);
  CHECK(staircase_norm(ws, all_bursts) == 36);
  CHECK(closed_form_norm(ws, {2, 1, 1, 1}) == 36);
}

TEST_CASE("prefixed staircase norms") {
  const WeightSystem ws = g2_adjoint();
  const StaircaseSpec inner{{StaircaseSegment{{}, 2, 1}}, {}};

  SUBCASE("zero prefix reduces to the plain staircase") {
    CHECK(prefixed_staircase_norm(ws, 0, 1, inner) ==
          staircase_norm(ws, inner));
  }
  SUBCASE("partial prefix on the alpha_1 string at (3,-1)") {
    CHECK(prefixed_staircase_norm(ws, 2, 1, inner) == 12);
    CHECK(closed_form_norm(ws, {2, 1, 1}) == 12);
  }
  SUBCASE("full prefix equals the saturated staircase") {
    const StaircaseSpec saturated{
        {StaircaseSegment{{}, 2, 1}, StaircaseSegment{{}, 1, 3}}, {}};
    CHECK(prefixed_staircase_norm(ws, 3, 1, inner) ==
          staircase_norm(ws, saturated));
  }
  SUBCASE("prefix longer than the label vanishes") {
    CHECK_THROWS_AS(prefixed_staircase_norm(ws, 4, 1, inner), DomainError);
  }
  SUBCASE("automatic parse routes the partial final run to the prefix form") {
    CHECK(closed_form_norm(ws, {2, 1, 1, 1, 2}) == 72);
    const StaircaseParse parse = parse_staircase(ws, {2, 1, 1, 1, 2});
    CHECK(parse.prefix_n0 == 1);
    CHECK(parse.prefix_i0 == 2);
    CHECK(parse.stairs.segments.size() == 2);
  }
}

TEST_CASE("staircase violations are named") {
  const WeightSystem ws = g2_adjoint();

  SUBCASE("word leaving the system") {
    CHECK_THROWS_AS(staircase_norm(ws, StaircaseSpec{{StaircaseSegment{{}, 1, 1}}, {}}),
                    DomainError);
  }
  SUBCASE("separator where the label is not 1") {
    // Letter 2 applied at (-3,2) carries label 2; declaring it a separator
    // would silently drop a factor of 2 from the norm.
    const StaircaseSpec bad{
        {StaircaseSegment{{}, 2, 1}, StaircaseSegment{{}, 1, 3}}, {2}};
    CHECK_THROWS_WITH_AS(
        staircase_norm(ws, bad),
        "separator letter 2 at (-3,2) must sit where its label is 1 and p = 0",
        DomainError);
  }
  SUBCASE("separator equal to an adjacent burst index") {
    const StaircaseSpec bad{{StaircaseSegment{{2, 1}, 1, 2}}, {}};
    CHECK_THROWS_WITH_AS(staircase_norm(ws, bad),
                         "separator letter 1 equals an adjacent burst index",
                         DomainError);
  }
  SUBCASE("unsaturated burst") {
    const StaircaseSpec bad{
        {StaircaseSegment{{}, 2, 1}, StaircaseSegment{{}, 1, 2}}, {}};
    CHECK_THROWS_WITH_AS(
        staircase_norm(ws, bad),
        "burst on root 1 at (3,-1) has length 2 but the label there is 3 "
        "(saturation required)",
        DomainError);
  }
  SUBCASE("trailing block violating the separator conditions") {
    // [2,1,1,1,2,1] is a path, but letter 2 applied at (-3,2) has label 2
    // and letter 1 equals the adjacent burst index.
    const StaircaseSpec bad{
        {StaircaseSegment{{}, 2, 1}, StaircaseSegment{{}, 1, 3}}, {2, 1}};
    CHECK_THROWS_AS(staircase_norm(ws, bad), DomainError);
  }
  SUBCASE("prefix burst merging into the preceding run") {
    const StaircaseSpec inner{
        {StaircaseSegment{{}, 2, 1}, StaircaseSegment{{}, 1, 3}}, {}};
    CHECK_THROWS_WITH_AS(
        prefixed_staircase_norm(ws, 1, 1, inner),
        "prefix burst letter 1 equals the preceding letter; extend that "
        "burst instead",
        DomainError);
  }
  SUBCASE("non-staircase word fails to parse") {
    CHECK_THROWS_AS(parse_staircase(ws, {2, 1, 1, 2}), DomainError);
  }
}

TEST_CASE("explicit separators with unit labels are accepted") {
  const WeightSystem ws =
      WeightSystem::build(AlgebraSpec(Family::A, 3), Weight{{0, 1, 0}});
  // [2,1,3] with the middle letter declared as a separator between bursts.
  const StaircaseSpec spec{
      {StaircaseSegment{{}, 2, 1}, StaircaseSegment{{1}, 3, 1}}, {}};
  CHECK(staircase_norm(ws, spec) == 1);
}

TEST_CASE("every path of a minuscule system is a staircase of norm one") {
  const WeightSystem ws =
      WeightSystem::build(AlgebraSpec(Family::A, 3), Weight{{0, 1, 0}});
  for (const Weight& w : ws.weights()) {
    for (const Word& path : ws.enumerate_paths(w)) {
      CHECK(closed_form_norm(ws, path) == 1);
    }
  }
}

TEST_CASE("norms outgrow 64-bit integers on deep strings") {
  // A1 with a large label: the full string is one saturated burst, so the
  // closed form, the recursion and the oracle must all give (30!)^2, a
  // 65-digit number.
  const AlgebraSpec a1(Family::A, 1);
  const Weight top{{30}};
  const WeightSystem ws = WeightSystem::build(a1, top);
  const Word word(30, 1);
  const Int expected = factorial(30) * factorial(30);
  CHECK(to_decimal(expected).size() == 65);
  CHECK(closed_form_norm(ws, word) == expected);
  CHECK(inner_product(word, word, a1, top) == expected);
  CHECK(inner_product_oracle(Word(8, 1), Word(8, 1), a1, top) ==
        factorial(8) * Int(factorial(30) / factorial(22)));
}

TEST_CASE("closed form agrees with the engine on qualifying sweep paths") {
  const std::vector<WeightSystem> systems = {
      g2_adjoint(),
      WeightSystem::build(AlgebraSpec(Family::B, 2), Weight{{1, 0}}),
      WeightSystem::build(AlgebraSpec(Family::A, 2), Weight{{1, 1}}),
      WeightSystem::build(AlgebraSpec(Family::C, 3), Weight{{1, 0, 0}}),
  };
  int qualifying = 0;
  for (const WeightSystem& ws : systems) {
    CAPTURE(ws.spec().name());
    for (const Weight& w : ws.weights()) {
      for (const Word& path : ws.enumerate_paths(w)) {
        try {
          // closed_form_norm self-audits against inner_product; an
          // InternalError here would mean the closed form is wrong.
          closed_form_norm(ws, path);
          ++qualifying;
        } catch (const DomainError&) {
          // Not a staircase; nothing to check.
        }
      }
    }
  }
  CHECK(qualifying > 10);
}

TEST_CASE("verify_minuscule_gram") {
  SUBCASE("A3 rho_2 passes with the expected 2-path weight") {
    const WeightSystem ws =
        WeightSystem::build(AlgebraSpec(Family::A, 3), Weight{{0, 1, 0}});
    const MinusculeGramReport report = verify_minuscule_gram(ws);
    CHECK(report.pass);
    CHECK(report.strings_two_term);
    bool found = false;
    for (const auto& entry : report.entries) {
      if (entry.weight == Weight{{-1, 1, -1}}) {
        found = true;
        CHECK(entry.path_count == 2);
        CHECK(entry.all_ones);
      }
    }
    CHECK(found);
  }
  SUBCASE("A4 rho_2 passes across all ten weights") {
    const WeightSystem ws = WeightSystem::build(AlgebraSpec(Family::A, 4),
                                                Weight{{0, 1, 0, 0}});
    const MinusculeGramReport report = verify_minuscule_gram(ws);
    CHECK(report.pass);
    CHECK(report.entries.size() == 10);
  }
  SUBCASE("A1 passes trivially") {
    const WeightSystem ws =
        WeightSystem::build(AlgebraSpec(Family::A, 1), Weight{{1}});
    const MinusculeGramReport report = verify_minuscule_gram(ws);
    CHECK(report.pass);
    for (const auto& entry : report.entries) CHECK(entry.path_count == 1);
  }
  SUBCASE("non-minuscule fundamental weights are rejected") {
    CHECK_THROWS_WITH_AS(
        verify_minuscule_gram(g2_adjoint()),
        "fundamental weight 2 of G2 is not minuscule (minuscule nodes: none)",
        DomainError);
    const WeightSystem b3 = WeightSystem::build(AlgebraSpec(Family::B, 3),
                                                Weight{{0, 1, 0}});
    CHECK_THROWS_WITH_AS(
        verify_minuscule_gram(b3),
        "fundamental weight 2 of B3 is not minuscule (minuscule nodes: 3)",
        DomainError);
  }
  SUBCASE("non-fundamental highest weights are rejected") {
    const WeightSystem ws =
        WeightSystem::build(AlgebraSpec(Family::A, 2), Weight{{1, 1}});
    CHECK_THROWS_AS(verify_minuscule_gram(ws), DomainError);
  }
}

TEST_CASE("coefficient positivity scans") {
  SUBCASE("G2 adjoint: no negative coefficients anywhere") {
    const PositivityReport report = scan_coefficient_positivity(g2_adjoint());
    CHECK(report.has_observations);
    CHECK(report.negative_count == 0);
    CHECK(report.negatives.empty());
    CHECK(report.min_coefficient >= 0);
  }
  SUBCASE("A2 adjoint: no negative coefficients") {
    const WeightSystem ws =
        WeightSystem::build(AlgebraSpec(Family::A, 2), Weight{{1, 1}});
    const PositivityReport report = scan_coefficient_positivity(ws);
    CHECK(report.negative_count == 0);
  }
  SUBCASE("minuscule systems only ever emit 0 or 1") {
    const WeightSystem ws = WeightSystem::build(AlgebraSpec(Family::A, 4),
                                                Weight{{0, 1, 0, 0}});
    const PositivityReport report = scan_coefficient_positivity(ws);
    CHECK(report.min_coefficient >= 0);
    CHECK(report.max_coefficient <= 1);
    CHECK(report.negative_count == 0);
  }
  SUBCASE("level cap restricts the scan") {
    const PositivityReport full = scan_coefficient_positivity(g2_adjoint());
    const PositivityReport shallow =
        scan_coefficient_positivity(g2_adjoint(), 2);
    CHECK(shallow.coefficient_count < full.coefficient_count);
  }
}
