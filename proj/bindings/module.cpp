#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liepath/errors.hpp"
#include "liepath/kw_boundary.hpp"
#include "liepath/shapovalov.hpp"
#include "liepath/special_norms.hpp"
#include "liepath/weightsys.hpp"

namespace py = pybind11;
using namespace liepath;

namespace {

py::int_ py_int(const Int& value) {
  const std::string digits = to_decimal(value);
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::object py_fraction(const Rat& value) {
  static py::object fraction =
      py::module_::import("fractions").attr("Fraction");
  return fraction(py_int(numerator(value)), py_int(denominator(value)));
}

Rat rat_from_py(py::handle obj) {
  // ints, Fractions and "p/q" strings all round-trip exactly through str().
  if (py::isinstance<py::float_>(obj)) {
    throw DomainError("floats are inexact; pass an int, Fraction or 'p/q'");
  }
  return parse_rational(py::str(obj).cast<std::string>());
}

Cocharacter cocharacter_from_py(const py::iterable& values) {
  std::vector<Rat> m;
  for (py::handle v : values) m.push_back(rat_from_py(v));
  return Cocharacter(std::move(m));
}

Weight weight_from(const std::vector<int>& labels) { return Weight{labels}; }

py::list gram_to_py(const GramMatrix& gram) {
  py::list rows;
  for (const auto& row : gram.entries) {
    py::list r;
    for (const Int& x : row) r.append(py_int(x));
    rows.append(r);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact weight systems, contravariant-form inner products and "
            "boundary-profile expansions for simple Lie algebras";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  py::register_exception<OverflowError>(m, "EvaluationOverflowError",
                                        PyExc_OverflowError);

  py::class_<AlgebraSpec>(m, "Algebra")
      .def(py::init(&AlgebraSpec::parse), py::arg("name"))
      .def_property_readonly("name", &AlgebraSpec::name)
      .def_property_readonly("rank", &AlgebraSpec::rank)
      .def("cartan", [](const AlgebraSpec& s) { return s.cartan(); })
      .def("symmetrizers",
           [](const AlgebraSpec& s) { return s.symmetrizers(); })
      .def("inverse_cartan",
           [](const AlgebraSpec& s) {
             py::list rows;
             for (const auto& row : s.inverse_cartan()) {
               py::list r;
               for (const auto& x : row) r.append(py_fraction(x));
               rows.append(r);
             }
             return rows;
           })
      .def("positive_roots",
           [](const AlgebraSpec& s) {
             py::list roots;
             for (const auto& root : s.positive_roots()) {
               roots.append(py::dict(py::arg("coords") = root.coords,
                                     py::arg("coroot_coords") = root.coroot_coords,
                                     py::arg("height") = root.height));
             }
             return roots;
           })
      .def("minuscule_indices",
           [](const AlgebraSpec& s) { return s.minuscule_indices(); })
      .def("fundamental_weight_in_roots",
           [](const AlgebraSpec& s, int idx) {
             py::list coords;
             for (const auto& x : s.fundamental_weight_in_roots(idx)) {
               coords.append(py_fraction(x));
             }
             return coords;
           },
           py::arg("s"))
      .def("b_constant",
           [](const AlgebraSpec& s, int idx) {
             return py_fraction(s.b_constant(idx));
           },
           py::arg("s"))
      .def("__repr__",
           [](const AlgebraSpec& s) { return "Algebra('" + s.name() + "')"; });

  py::class_<WeightSystem>(m, "WeightSystem")
      .def(py::init([](const AlgebraSpec& spec, const std::vector<int>& highest,
                       int level_cap) {
             return WeightSystem::build(spec, weight_from(highest), level_cap);
           }),
           py::arg("algebra"), py::arg("highest"),
           py::arg("level_cap") = WeightSystem::kDefaultLevelCap)
      .def_property_readonly("weight_count", &WeightSystem::weight_count)
      .def_property_readonly("max_level", &WeightSystem::max_level)
      .def_property_readonly(
          "highest", [](const WeightSystem& ws) { return ws.highest().labels; })
      .def("levels",
           [](const WeightSystem& ws) {
             py::list levels;
             for (const auto& level : ws.levels()) {
               py::list entry;
               for (const Weight& w : level) entry.append(w.labels);
               levels.append(entry);
             }
             return levels;
           })
      .def("contains",
           [](const WeightSystem& ws, const std::vector<int>& w) {
             return ws.contains(weight_from(w));
           },
           py::arg("weight"))
      .def("level_of",
           [](const WeightSystem& ws, const std::vector<int>& w) {
             return ws.level_of(weight_from(w));
           },
           py::arg("weight"))
      .def("depth",
           [](const WeightSystem& ws, const std::vector<int>& w) {
             return ws.depth(weight_from(w));
           },
           py::arg("weight"))
      .def("weight_string",
           [](const WeightSystem& ws, const std::vector<int>& w, int i) {
             const WeightString st = ws.weight_string(weight_from(w), i);
             return py::make_tuple(st.p, st.q);
           },
           py::arg("weight"), py::arg("i"))
      .def("paths",
           [](const WeightSystem& ws, const std::vector<int>& w) {
             return ws.enumerate_paths(weight_from(w));
           },
           py::arg("weight"))
      .def("is_path",
           [](const WeightSystem& ws, const Word& word) {
             return ws.is_path(word);
           },
           py::arg("word"))
      .def("to_dot", [](const WeightSystem& ws) { return to_dot(ws); });

  m.def("weight_of_word",
        [](const AlgebraSpec& spec, const std::vector<int>& highest,
           const Word& word) {
          return weight_of_word(spec, weight_from(highest), word).labels;
        },
        py::arg("algebra"), py::arg("highest"), py::arg("word"));

  m.def("apply_raising",
        [](int a, const Word& word, const AlgebraSpec& spec,
           const std::vector<int>& highest) {
          py::dict out;
          const auto combo = apply_raising(a, word, spec, weight_from(highest));
          for (const auto& [result, coeff] : combo.terms()) {
            out[py::tuple(py::cast(result))] = py_int(coeff);
          }
          return out;
        },
        py::arg("a"), py::arg("word"), py::arg("algebra"), py::arg("highest"));

  m.def("inner_product",
        [](const Word& bra, const Word& ket, const AlgebraSpec& spec,
           const std::vector<int>& highest) {
          return py_int(inner_product(bra, ket, spec, weight_from(highest)));
        },
        py::arg("bra"), py::arg("ket"), py::arg("algebra"), py::arg("highest"));

  m.def("inner_product_oracle",
        [](const Word& bra, const Word& ket, const AlgebraSpec& spec,
           const std::vector<int>& highest) {
          return py_int(
              inner_product_oracle(bra, ket, spec, weight_from(highest)));
        },
        py::arg("bra"), py::arg("ket"), py::arg("algebra"), py::arg("highest"));

  m.def("gram_matrix",
        [](const WeightSystem& ws, const std::vector<int>& w) {
          const GramMatrix gram = gram_matrix(ws, weight_from(w));
          return py::make_tuple(gram.paths, gram_to_py(gram));
        },
        py::arg("ws"), py::arg("weight"),
        "Returns (paths, entries) with paths in enumeration order.");

  m.def("staircase_norm",
        [](const WeightSystem& ws, const Word& word) {
          return py_int(closed_form_norm(ws, word));
        },
        py::arg("ws"), py::arg("word"),
        "Closed-form norm of a (possibly prefix-extended) staircase word.");

  m.def("parse_staircase",
        [](const WeightSystem& ws, const Word& word) {
          const StaircaseParse parse = parse_staircase(ws, word);
          py::list segments;
          for (const auto& segment : parse.stairs.segments) {
            segments.append(py::dict(
                py::arg("separators") = segment.separators,
                py::arg("burst_index") = segment.burst_index,
                py::arg("burst_length") = segment.burst_length));
          }
          return py::dict(py::arg("segments") = segments,
                          py::arg("trailing") = parse.stairs.trailing,
                          py::arg("prefix_n0") = parse.prefix_n0,
                          py::arg("prefix_i0") = parse.prefix_i0);
        },
        py::arg("ws"), py::arg("word"));

  m.def("verify_minuscule_gram",
        [](const WeightSystem& ws) {
          const MinusculeGramReport report = verify_minuscule_gram(ws);
          py::list entries;
          for (const auto& entry : report.entries) {
            entries.append(py::dict(py::arg("weight") = entry.weight.labels,
                                    py::arg("paths") = entry.path_count,
                                    py::arg("all_ones") = entry.all_ones));
          }
          return py::dict(py::arg("pass") = report.pass,
                          py::arg("strings_two_term") = report.strings_two_term,
                          py::arg("weights") = entries);
        },
        py::arg("ws"));

  m.def("scan_coefficient_positivity",
        [](const WeightSystem& ws, int level_cap) {
          const PositivityReport report =
              scan_coefficient_positivity(ws, level_cap);
          py::list negatives;
          for (const auto& context : report.negatives) {
            negatives.append(py::dict(
                py::arg("letter") = context.letter,
                py::arg("source") = context.source,
                py::arg("result") = context.result,
                py::arg("coefficient") = py_int(context.coefficient)));
          }
          return py::dict(
              py::arg("observed") = report.has_observations,
              py::arg("min_coefficient") = py_int(report.min_coefficient),
              py::arg("max_coefficient") = py_int(report.max_coefficient),
              py::arg("expansions") = report.expansion_count,
              py::arg("coefficients") = report.coefficient_count,
              py::arg("negatives") = report.negative_count,
              py::arg("nonpath_results") = report.nonpath_result_count,
              py::arg("offending_contexts") = negatives);
        },
        py::arg("ws"), py::arg("level_cap") = -1);

  py::class_<ChiExpansion>(m, "ChiExpansion")
      .def_readonly("algebra", &ChiExpansion::algebra)
      .def_readonly("s", &ChiExpansion::s)
      .def_property_readonly(
          "prefactor_log2",
          [](const ChiExpansion& e) { return py_fraction(e.prefactor_log2); })
      .def("terms",
           [](const ChiExpansion& e) {
             py::list terms;
             for (const ChiTerm& term : e.terms) {
               terms.append(py::dict(
                   py::arg("weight") = term.weight.labels,
                   py::arg("level") = term.level,
                   py::arg("coefficient") = py_fraction(term.coefficient),
                   py::arg("rate") = py_fraction(term.rate)));
             }
             return terms;
           })
      .def("__len__", [](const ChiExpansion& e) { return e.terms.size(); });

  m.def("state_coefficients",
        [](const WeightSystem& ws, const std::vector<int>& w,
           const py::iterable& m_values) {
          py::list out;
          for (const Rat& c : state_coefficients(
                   ws, weight_from(w), cocharacter_from_py(m_values))) {
            out.append(py_fraction(c));
          }
          return out;
        },
        py::arg("ws"), py::arg("weight"), py::arg("m"));

  m.def("weight_norm",
        [](const WeightSystem& ws, const std::vector<int>& w,
           const py::iterable& m_values) {
          return py_fraction(
              weight_norm(ws, weight_from(w), cocharacter_from_py(m_values)));
        },
        py::arg("ws"), py::arg("weight"), py::arg("m"));

  m.def("chi_expansion",
        [](const AlgebraSpec& spec, int s, const py::iterable& m_values,
           int level_cap) {
          return chi_expansion(spec, s, cocharacter_from_py(m_values),
                               level_cap);
        },
        py::arg("algebra"), py::arg("s"), py::arg("m"),
        py::arg("level_cap") = WeightSystem::kDefaultLevelCap);

  m.def("boundary_residual",
        [](const AlgebraSpec& spec, int s, const py::iterable& m_values) {
          return py_fraction(
              boundary_residual(spec, s, cocharacter_from_py(m_values)));
        },
        py::arg("algebra"), py::arg("s"), py::arg("m"));

  m.def("evaluate_chi", &evaluate_chi, py::arg("expansion"), py::arg("sigma"));
}
