#include "liepath/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "liepath/errors.hpp"
#include "liepath/json_io.hpp"
#include "liepath/kw_boundary.hpp"
#include "liepath/shapovalov.hpp"
#include "liepath/special_norms.hpp"
#include "liepath/weightsys.hpp"

namespace liepath {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const std::string& part : split(text, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(value);
    } catch (const std::exception&) {
      throw DomainError(std::string("malformed ") + what + " '" + text +
                        "': expected comma-separated integers");
    }
  }
  return out;
}

Weight parse_weight(const std::string& text) {
  return Weight{parse_int_list(text, "weight")};
}

Word parse_word(const std::string& text) {
  if (text.empty()) return {};
  return parse_int_list(text, "word");
}

Cocharacter parse_cocharacter(const std::string& text) {
  std::vector<Rat> values;
  for (const std::string& part : split(text, ',')) {
    values.push_back(parse_rational(part));
  }
  return Cocharacter(std::move(values));
}

void emit_json(std::ostream& out, const OrderedJson& j) {
  out << j.dump(2) << "\n";
}

struct Request {
  std::string algebra;
  std::string highest;
  std::string weight;
  std::string word;
  std::string m;
  std::string format = "table";
  int s = 1;
  int level_cap = WeightSystem::kDefaultLevelCap;
  double sigma_min = 0.0;
  double sigma_max = 2.0;
  int sigma_steps = 50;
};

WeightSystem build_system(const Request& request) {
  const AlgebraSpec spec = AlgebraSpec::parse(request.algebra);
  return WeightSystem::build(spec, parse_weight(request.highest),
                             request.level_cap);
}

void require_format(const Request& request,
                    std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (request.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) {
    if (!list.empty()) list += "|";
    list += f;
  }
  throw DomainError("format '" + request.format +
                    "' not supported here (expected " + list + ")");
}

void cmd_weights(const Request& request, std::ostream& out) {
  require_format(request, {"table", "json", "dot"});
  const WeightSystem ws = build_system(request);
  if (request.format == "json") {
    emit_json(out, weight_system_json(ws));
  } else if (request.format == "dot") {
    out << to_dot(ws);
  } else {
    out << ws.spec().name() << " highest " << format_weight(ws.highest())
        << ": " << ws.weight_count() << " weights, max level "
        << ws.max_level() << "\n";
    for (int level = 0; level <= ws.max_level(); ++level) {
      out << "L" << level << ":";
      for (const Weight& w : ws.levels()[level]) {
        out << " " << format_weight(w);
      }
      out << "\n";
    }
  }
}

void cmd_paths(const Request& request, std::ostream& out) {
  require_format(request, {"table", "json"});
  const WeightSystem ws = build_system(request);
  const Weight target = parse_weight(request.weight);
  if (request.format == "json") {
    emit_json(out, paths_json(ws, target));
  } else {
    const auto paths = ws.enumerate_paths(target);
    out << paths.size() << " path(s) from " << format_weight(ws.highest())
        << " to " << format_weight(target) << "\n";
    for (const Word& path : paths) out << format_word(path) << "\n";
  }
}

void cmd_gram(const Request& request, std::ostream& out) {
  require_format(request, {"table", "json"});
  const WeightSystem ws = build_system(request);
  const GramMatrix gram = gram_matrix(ws, parse_weight(request.weight));
  if (request.format == "json") {
    emit_json(out, gram_json(gram));
  } else {
    out << "weight " << format_weight(gram.weight) << ", "
        << gram.paths.size() << " path(s)\n";
    for (const Word& path : gram.paths) out << format_word(path) << "\n";
    for (const auto& row : gram.entries) {
      for (std::size_t t = 0; t < row.size(); ++t) {
        out << (t ? " " : "") << to_decimal(row[t]);
      }
      out << "\n";
    }
  }
}

void cmd_norm(const Request& request, std::ostream& out) {
  require_format(request, {"table", "json"});
  const WeightSystem ws = build_system(request);
  const Word word = parse_word(request.word);
  // Norms are defined for every word; states whose intermediate weights
  // leave the system are still vectors (frequently zero ones).
  const bool path = ws.is_path(word);
  const Weight end = weight_of_word(ws.spec(), ws.highest(), word);
  const Int norm = inner_product(word, word, ws.spec(), ws.highest());
  if (request.format == "json") {
    OrderedJson j;
    j["algebra"] = ws.spec().name();
    j["highest"] = ws.highest().labels;
    j["word"] = word;
    j["weight"] = end.labels;
    j["path"] = path;
    j["norm"] = to_decimal(norm);
    emit_json(out, j);
  } else {
    out << "word " << format_word(word) << " ends at " << format_weight(end)
        << (path ? "" : " (leaves the weight system)") << ", norm "
        << to_decimal(norm) << "\n";
  }
}

void cmd_staircase(const Request& request, std::ostream& out) {
  require_format(request, {"table", "json"});
  const WeightSystem ws = build_system(request);
  const Word word = parse_word(request.word);
  const StaircaseParse parse = parse_staircase(ws, word);
  const Int norm = parse.prefix_n0 == 0
                       ? staircase_norm(ws, parse.stairs)
                       : prefixed_staircase_norm(ws, parse.prefix_n0,
                                                 parse.prefix_i0, parse.stairs);
  if (request.format == "json") {
    emit_json(out, staircase_json(ws, parse, norm));
  } else {
    out << "word " << format_word(word) << ": ";
    for (const auto& segment : parse.stairs.segments) {
      if (!segment.separators.empty()) {
        out << "sep" << format_word(segment.separators) << " ";
      }
      out << "burst(" << segment.burst_index << "^" << segment.burst_length
          << ") ";
    }
    if (!parse.stairs.trailing.empty()) {
      out << "sep" << format_word(parse.stairs.trailing) << " ";
    }
    if (parse.prefix_n0 > 0) {
      out << "prefix(" << parse.prefix_i0 << "^" << parse.prefix_n0 << ") ";
    }
    out << "-> norm " << to_decimal(norm) << "\n";
  }
}

void cmd_minuscule_verify(const Request& request, std::ostream& out) {
  require_format(request, {"table", "json"});
  const WeightSystem ws = build_system(request);
  const MinusculeGramReport report = verify_minuscule_gram(ws);
  if (request.format == "json") {
    emit_json(out, minuscule_report_json(ws, report));
  } else {
    out << ws.spec().name() << " highest " << format_weight(ws.highest())
        << ": " << (report.pass ? "PASS" : "FAIL")
        << (report.strings_two_term ? "" : " (string bound violated)") << "\n";
    for (const auto& entry : report.entries) {
      out << format_weight(entry.weight) << " paths=" << entry.path_count
          << " all_ones=" << (entry.all_ones ? "yes" : "no") << "\n";
    }
  }
}

void cmd_conjecture_scan(const Request& request, std::ostream& out) {
  require_format(request, {"table", "json"});
  const WeightSystem ws = build_system(request);
  const PositivityReport report =
      scan_coefficient_positivity(ws, request.level_cap);
  if (request.format == "json") {
    emit_json(out, positivity_report_json(ws, report));
  } else {
    out << ws.spec().name() << " highest " << format_weight(ws.highest())
        << ": " << report.coefficient_count << " coefficients from "
        << report.expansion_count << " expansions, min "
        << to_decimal(report.min_coefficient) << ", max "
        << to_decimal(report.max_coefficient) << ", negatives "
        << report.negative_count << ", non-path results "
        << report.nonpath_result_count << "\n";
    for (const auto& context : report.negatives) {
      out << "negative: E+_" << context.letter << " on "
          << format_word(context.source) << " -> "
          << format_word(context.result) << " coefficient "
          << to_decimal(context.coefficient) << "\n";
    }
  }
}

void cmd_kw_expand(const Request& request, std::ostream& out) {
  require_format(request, {"table", "json"});
  const AlgebraSpec spec = AlgebraSpec::parse(request.algebra);
  const ChiExpansion expansion =
      chi_expansion(spec, request.s, parse_cocharacter(request.m),
                    request.level_cap);
  if (request.format == "json") {
    emit_json(out, chi_expansion_json(expansion));
  } else {
    out << expansion.algebra << " s=" << expansion.s << " prefactor 2^("
        << to_fraction(expansion.prefactor_log2) << ")\n";
    for (const ChiTerm& term : expansion.terms) {
      out << format_weight(term.weight) << " level=" << term.level
          << " coefficient=" << to_fraction(term.coefficient)
          << " rate=" << to_fraction(term.rate) << "\n";
    }
  }
}

void cmd_kw_boundary(const Request& request, std::ostream& out) {
  require_format(request, {"table", "json"});
  const AlgebraSpec spec = AlgebraSpec::parse(request.algebra);
  const Cocharacter m = parse_cocharacter(request.m);
  const Rat residual = boundary_residual(spec, request.s, m);
  if (request.format == "json") {
    OrderedJson j;
    j["algebra"] = spec.name();
    j["s"] = request.s;
    OrderedJson values = OrderedJson::array();
    for (const Rat& x : m.values()) values.push_back(to_fraction(x));
    j["m"] = values;
    j["residual"] = to_fraction(residual);
    emit_json(out, j);
  } else {
    out << "residual " << to_fraction(residual) << "\n";
  }
}

void cmd_kw_plot(const Request& request, std::ostream& out) {
  require_format(request, {"csv"});
  if (request.sigma_steps < 1) {
    throw DomainError("sigma steps must be >= 1");
  }
  if (!(request.sigma_max >= request.sigma_min)) {
    throw DomainError("sigma range is empty");
  }
  const AlgebraSpec spec = AlgebraSpec::parse(request.algebra);
  const ChiExpansion expansion =
      chi_expansion(spec, request.s, parse_cocharacter(request.m),
                    request.level_cap);
  out << "sigma,value\n";
  std::ostringstream line;
  line << std::setprecision(17);
  for (int k = 0; k <= request.sigma_steps; ++k) {
    const double sigma =
        request.sigma_min + (request.sigma_max - request.sigma_min) *
                                static_cast<double>(k) /
                                static_cast<double>(request.sigma_steps);
    line.str("");
    line << sigma << "," << evaluate_chi(expansion, sigma);
    out << line.str() << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact weight systems, path-state inner products and "
               "boundary-profile expansions for simple Lie algebras"};
  app.require_subcommand(1);

  Request request;
  int selected = 0;
  enum Command {
    kWeights = 1,
    kPaths,
    kGram,
    kNorm,
    kStaircase,
    kMinusculeVerify,
    kConjectureScan,
    kKwExpand,
    kKwBoundary,
    kKwPlot,
  };

  auto add_algebra = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", request.algebra,
                    "algebra name such as A3, G2, D4")
        ->required();
  };
  auto add_highest = [&](CLI::App* cmd) {
    cmd->add_option("--highest", request.highest,
                    "highest weight labels, e.g. 0,1,0")
        ->required();
  };
  // One Request backs every subcommand, so per-command format defaults are
  // applied in the callback when the option was not given.
  auto add_format = [&](CLI::App* cmd, std::string def) {
    auto* option = cmd->add_option("--format", request.format, "output format");
    option->default_str(def);
    cmd->parse_complete_callback([&request, option, def] {
      if (option->count() == 0) request.format = def;
    });
  };
  auto add_level_cap = [&](CLI::App* cmd) {
    cmd->add_option("--level-cap", request.level_cap,
                    "maximum level while building the weight system")
        ->capture_default_str();
  };

  {
    auto* cmd = app.add_subcommand("weights",
                                   "build the weight system of a highest weight");
    add_algebra(cmd);
    add_highest(cmd);
    add_format(cmd, "table");
    add_level_cap(cmd);
    cmd->callback([&] { selected = kWeights; });
  }
  {
    auto* cmd = app.add_subcommand("paths",
                                   "list the lowering paths to a weight");
    add_algebra(cmd);
    add_highest(cmd);
    cmd->add_option("--weight", request.weight, "target weight labels")
        ->required();
    add_format(cmd, "table");
    add_level_cap(cmd);
    cmd->callback([&] { selected = kPaths; });
  }
  {
    auto* cmd = app.add_subcommand("gram",
                                   "Gram matrix of the path states at a weight");
    add_algebra(cmd);
    add_highest(cmd);
    cmd->add_option("--weight", request.weight, "target weight labels")
        ->required();
    add_format(cmd, "table");
    add_level_cap(cmd);
    cmd->callback([&] { selected = kGram; });
  }
  {
    auto* cmd = app.add_subcommand("norm", "norm of one path-word state");
    add_algebra(cmd);
    add_highest(cmd);
    cmd->add_option("--word", request.word,
                    "lowering word in application order, e.g. 2,1,1,1")
        ->required();
    add_format(cmd, "table");
    add_level_cap(cmd);
    cmd->callback([&] { selected = kNorm; });
  }
  {
    auto* cmd = app.add_subcommand(
        "staircase", "closed-form norm of a staircase path word");
    add_algebra(cmd);
    add_highest(cmd);
    cmd->add_option("--word", request.word, "lowering word in application order")
        ->required();
    add_format(cmd, "table");
    add_level_cap(cmd);
    cmd->callback([&] { selected = kStaircase; });
  }
  {
    auto* cmd = app.add_subcommand(
        "minuscule-verify",
        "check that every Gram entry of a minuscule system equals one");
    add_algebra(cmd);
    add_highest(cmd);
    add_format(cmd, "table");
    add_level_cap(cmd);
    cmd->callback([&] { selected = kMinusculeVerify; });
  }
  {
    auto* cmd = app.add_subcommand(
        "conjecture-scan",
        "record raising-expansion coefficients over all path norms");
    add_algebra(cmd);
    add_highest(cmd);
    add_format(cmd, "table");
    add_level_cap(cmd);
    cmd->callback([&] { selected = kConjectureScan; });
  }
  {
    auto* cmd = app.add_subcommand(
        "kw-expand", "exact expansion of the boundary profile exp(-chi_s)");
    add_algebra(cmd);
    cmd->add_option("--s", request.s, "fundamental weight index")->required();
    cmd->add_option("--m", request.m,
                    "cocharacter values, positive rationals such as 1,3/2")
        ->required();
    add_format(cmd, "table");
    add_level_cap(cmd);
    cmd->callback([&] { selected = kKwExpand; });
  }
  {
    auto* cmd = app.add_subcommand(
        "kw-boundary", "exact sigma->0 residual of the boundary profile");
    add_algebra(cmd);
    cmd->add_option("--s", request.s, "fundamental weight index")->required();
    cmd->add_option("--m", request.m, "cocharacter values")->required();
    add_format(cmd, "table");
    add_level_cap(cmd);
    cmd->callback([&] { selected = kKwBoundary; });
  }
  {
    auto* cmd = app.add_subcommand(
        "kw-plot", "CSV samples of the boundary profile over a sigma range");
    add_algebra(cmd);
    cmd->add_option("--s", request.s, "fundamental weight index")->required();
    cmd->add_option("--m", request.m, "cocharacter values")->required();
    cmd->add_option("--sigma-min", request.sigma_min, "range start")
        ->capture_default_str();
    cmd->add_option("--sigma-max", request.sigma_max, "range end")
        ->capture_default_str();
    cmd->add_option("--steps", request.sigma_steps, "number of intervals")
        ->capture_default_str();
    add_format(cmd, "csv");
    add_level_cap(cmd);
    cmd->callback([&] { selected = kKwPlot; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    switch (selected) {
      case kWeights: cmd_weights(request, out); break;
      case kPaths: cmd_paths(request, out); break;
      case kGram: cmd_gram(request, out); break;
      case kNorm: cmd_norm(request, out); break;
      case kStaircase: cmd_staircase(request, out); break;
      case kMinusculeVerify: cmd_minuscule_verify(request, out); break;
      case kConjectureScan: cmd_conjecture_scan(request, out); break;
      case kKwExpand: cmd_kw_expand(request, out); break;
      case kKwBoundary: cmd_kw_boundary(request, out); break;
      case kKwPlot: cmd_kw_plot(request, out); break;
      default: err << "no subcommand selected\n"; return 2;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace liepath
