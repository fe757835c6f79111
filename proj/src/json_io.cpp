#include "liepath/json_io.hpp"

#include <nlohmann/json.hpp>

namespace liepath {

namespace {

OrderedJson json_word(const Word& w) { return OrderedJson(w); }

OrderedJson json_labels(const Weight& w) { return OrderedJson(w.labels); }

}  // namespace

OrderedJson weight_system_json(const WeightSystem& ws) {
  OrderedJson j;
  j["algebra"] = {{"family", std::string(1, static_cast<char>(ws.spec().family()))},
                  {"rank", ws.spec().rank()},
                  {"cartan", ws.spec().cartan()}};
  j["highest"] = json_labels(ws.highest());
  j["weight_count"] = ws.weight_count();
  j["max_level"] = ws.max_level();
  OrderedJson levels = OrderedJson::array();
  for (int level = 0; level <= ws.max_level(); ++level) {
    OrderedJson entries = OrderedJson::array();
    for (const Weight& w : ws.levels()[level]) {
      OrderedJson entry;
      entry["labels"] = json_labels(w);
      OrderedJson p = OrderedJson::array();
      OrderedJson q = OrderedJson::array();
      OrderedJson edges = OrderedJson::array();
      for (int i = 1; i <= ws.spec().rank(); ++i) {
        const WeightString st = ws.weight_string(w, i);
        p.push_back(st.p);
        q.push_back(st.q);
        if (st.q > 0) edges.push_back(i);
      }
      entry["p"] = p;
      entry["q"] = q;
      entry["edges"] = edges;
      entries.push_back(entry);
    }
    levels.push_back({{"level", level}, {"weights", entries}});
  }
  j["levels"] = levels;
  return j;
}

OrderedJson paths_json(const WeightSystem& ws, const Weight& target) {
  OrderedJson j;
  j["algebra"] = ws.spec().name();
  j["highest"] = json_labels(ws.highest());
  j["weight"] = json_labels(target);
  OrderedJson paths = OrderedJson::array();
  for (const Word& path : ws.enumerate_paths(target)) {
    paths.push_back(json_word(path));
  }
  j["paths"] = paths;
  return j;
}

OrderedJson gram_json(const GramMatrix& gram) {
  OrderedJson j;
  j["weight"] = json_labels(gram.weight);
  OrderedJson paths = OrderedJson::array();
  for (const Word& path : gram.paths) paths.push_back(json_word(path));
  j["paths"] = paths;
  OrderedJson entries = OrderedJson::array();
  for (const auto& row : gram.entries) {
    OrderedJson jrow = OrderedJson::array();
    for (const Int& x : row) jrow.push_back(to_decimal(x));
    entries.push_back(jrow);
  }
  j["gram"] = entries;
  return j;
}

OrderedJson staircase_json(const WeightSystem& ws, const StaircaseParse& parse,
                           const Int& norm) {
  OrderedJson j;
  j["algebra"] = ws.spec().name();
  j["highest"] = json_labels(ws.highest());
  OrderedJson segments = OrderedJson::array();
  for (const auto& segment : parse.stairs.segments) {
    segments.push_back({{"separators", json_word(segment.separators)},
                        {"burst_index", segment.burst_index},
                        {"burst_length", segment.burst_length}});
  }
  j["segments"] = segments;
  j["trailing_separators"] = json_word(parse.stairs.trailing);
  if (parse.prefix_n0 > 0) {
    j["prefix"] = {{"index", parse.prefix_i0}, {"length", parse.prefix_n0}};
  }
  j["norm"] = to_decimal(norm);
  return j;
}

OrderedJson minuscule_report_json(const WeightSystem& ws,
                                  const MinusculeGramReport& report) {
  OrderedJson j;
  j["algebra"] = ws.spec().name();
  j["highest"] = json_labels(ws.highest());
  j["pass"] = report.pass;
  j["strings_two_term"] = report.strings_two_term;
  OrderedJson entries = OrderedJson::array();
  for (const auto& entry : report.entries) {
    entries.push_back({{"weight", json_labels(entry.weight)},
                       {"paths", entry.path_count},
                       {"all_ones", entry.all_ones}});
  }
  j["weights"] = entries;
  return j;
}

OrderedJson positivity_report_json(const WeightSystem& ws,
                                   const PositivityReport& report) {
  OrderedJson j;
  j["algebra"] = ws.spec().name();
  j["highest"] = json_labels(ws.highest());
  j["observed"] = report.has_observations;
  j["min_coefficient"] = to_decimal(report.min_coefficient);
  j["max_coefficient"] = to_decimal(report.max_coefficient);
  j["expansions"] = report.expansion_count;
  j["coefficients"] = report.coefficient_count;
  j["negatives"] = report.negative_count;
  j["nonpath_results"] = report.nonpath_result_count;
  OrderedJson offenders = OrderedJson::array();
  for (const auto& context : report.negatives) {
    offenders.push_back({{"letter", context.letter},
                         {"source", json_word(context.source)},
                         {"result", json_word(context.result)},
                         {"coefficient", to_decimal(context.coefficient)}});
  }
  j["offending_contexts"] = offenders;
  return j;
}

OrderedJson chi_expansion_json(const ChiExpansion& expansion) {
  OrderedJson j;
  j["algebra"] = expansion.algebra;
  j["s"] = expansion.s;
  j["prefactor_log2"] = to_fraction(expansion.prefactor_log2);
  OrderedJson terms = OrderedJson::array();
  for (const ChiTerm& term : expansion.terms) {
    terms.push_back({{"weight", json_labels(term.weight)},
                     {"level", term.level},
                     {"coefficient", to_fraction(term.coefficient)},
                     {"rate", to_fraction(term.rate)}});
  }
  j["terms"] = terms;
  return j;
}

}  // namespace liepath
