#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "chordkit/bijection.hpp"
#include "chordkit/counting.hpp"
#include "chordkit/diagram.hpp"
#include "chordkit/enumeration.hpp"
#include "chordkit/recurrence.hpp"
#include "chordkit/render.hpp"

namespace py = pybind11;
using namespace chordkit;

namespace {

py::int_ big_to_py(const BigCount& z) {
  const std::string s = z.get_str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

BigCount big_from_py(const py::int_& v) {
  const std::string s = py::str(v);
  BigCount z;
  if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
    throw DomainError("expected an integer, got '" + s + "'");
  return z;
}

std::vector<BigCount> seq_from_py(const std::vector<py::int_>& seq) {
  std::vector<BigCount> out;
  out.reserve(seq.size());
  for (const auto& v : seq) out.push_back(big_from_py(v));
  return out;
}

std::string rational_str(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Chord chord_from_tuple(const std::pair<int, int>& t) {
  return Chord{t.first, t.second};
}

py::dict report_to_py(const TheoremReport& report) {
  py::dict out;
  out["n"] = report.n;
  out["k"] = report.k;
  out["mode"] = report.exhaustive ? "exhaustive" : "counts";
  out["passed"] = report.passed;
  py::list checks;
  for (const TheoremCheck& c : report.checks) {
    py::dict jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["detail"] = c.detail;
    checks.append(jc);
  }
  out["checks"] = checks;
  return out;
}

py::dict fit_to_py(const FitOutcome& outcome) {
  py::dict out;
  switch (outcome.verdict) {
    case FitVerdict::fitted: {
      out["verdict"] = "fitted";
      out["order"] = outcome.spec->order;
      out["degree"] = outcome.spec->degree;
      py::list rows;
      for (const auto& row : outcome.spec->coeffs) {
        py::list r;
        for (const Rational& q : row) r.append(rational_str(q));
        rows.append(r);
      }
      out["coeffs"] = rows;
      out["spec_json"] = spec_to_json(*outcome.spec);
      break;
    }
    case FitVerdict::underdetermined:
      out["verdict"] = "underdetermined";
      out["nullity"] = outcome.nullity;
      break;
    case FitVerdict::none:
      out["verdict"] = "none";
      break;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear chord diagrams with a minimum chord length";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<ChordDiagram>(m, "ChordDiagram")
      .def(py::init([](const std::vector<std::pair<int, int>>& chords) {
             std::vector<Chord> cs;
             cs.reserve(chords.size());
             for (const auto& t : chords) cs.push_back(chord_from_tuple(t));
             return ChordDiagram(std::move(cs));
           }),
           py::arg("chords"))
      .def_property_readonly("n", &ChordDiagram::size)
      .def_property_readonly("points", &ChordDiagram::points)
      .def("chords",
           [](const ChordDiagram& d) {
             std::vector<std::pair<int, int>> out;
             for (const Chord& c : d.chords()) out.emplace_back(c.start, c.end);
             return out;
           })
      .def("__str__", [](const ChordDiagram& d) { return to_text(d); })
      .def("__repr__",
           [](const ChordDiagram& d) { return "ChordDiagram('" + to_text(d) + "')"; })
      .def("__eq__",
           [](const ChordDiagram& a, const ChordDiagram& b) { return a == b; },
           py::is_operator())
      .def("__lt__",
           [](const ChordDiagram& a, const ChordDiagram& b) { return a < b; },
           py::is_operator())
      .def("__hash__",
           [](const ChordDiagram& d) { return py::hash(py::str(to_text(d))); });

  m.def("parse_diagram", &parse_diagram, py::arg("text"));
  m.def("to_text", [](const ChordDiagram& d) { return to_text(d); }, py::arg("diagram"));
  m.def("min_chord_length", &min_chord_length, py::arg("diagram"));
  m.def("is_in_min_class", &is_in_min_class, py::arg("diagram"), py::arg("k"));
  m.def("covers",
        [](const std::pair<int, int>& c, const std::pair<int, int>& d) {
          return covers(chord_from_tuple(c), chord_from_tuple(d));
        },
        py::arg("chord"), py::arg("other"));
  m.def("covers_index",
        [](const std::pair<int, int>& c, int i) {
          return covers(chord_from_tuple(c), i);
        },
        py::arg("chord"), py::arg("index"));

  m.def("region_split",
        [](int n, int k) {
          const RegionSplit rs = region_split(n, k);
          py::dict out;
          out["left"] = py::make_tuple(rs.left_first(), rs.left_last());
          out["middle"] = rs.middle_empty()
                              ? py::object(py::none())
                              : py::object(py::make_tuple(rs.middle_first(),
                                                          rs.middle_last()));
          out["right"] = py::make_tuple(rs.right_first(), rs.right_last());
          return out;
        },
        py::arg("n"), py::arg("k"));

  m.def("classify",
        [](const ChordDiagram& d, int k) {
          const ChordClassification cl = classify(d, k);
          auto pack = [](const std::vector<Chord>& cs) {
            std::vector<std::pair<int, int>> out;
            for (const Chord& c : cs) out.emplace_back(c.start, c.end);
            return out;
          };
          return py::make_tuple(pack(cl.mid), pack(cl.side));
        },
        py::arg("diagram"), py::arg("k"));

  m.def("check_structural_lemmas",
        [](const ChordDiagram& d, int k) {
          const LemmaReport r = check_structural_lemmas(d, k);
          py::dict out;
          out["no_mid_mid_chord"] = r.no_mid_mid_chord;
          out["mid_starts"] = r.mid_starts;
          out["mid_ends"] = r.mid_ends;
          return out;
        },
        py::arg("diagram"), py::arg("k"));

  m.def("enumerate_diagrams",
        [](int n, int k) { return enumerate_all(n, k); }, py::arg("n"),
        py::arg("k"));
  m.def("oracle_ceiling", &oracle_ceiling);
  m.def("count_brute",
        [](int n, int k, std::optional<int> ceiling) {
          return big_to_py(count_brute(n, k, ceiling.value_or(oracle_ceiling())));
        },
        py::arg("n"), py::arg("k"), py::arg("ceiling") = std::nullopt);
  m.def("count_dp",
        [](int n, int k) { return big_to_py(count_dp(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("count_dp_stats",
        [](int n, int k) {
          DpStats stats;
          const BigCount v = count_dp(n, k, &stats);
          py::dict st;
          st["transitions"] = stats.transitions;
          st["peak_states"] = stats.peak_states;
          return py::make_tuple(big_to_py(v), st);
        },
        py::arg("n"), py::arg("k"));
  m.def("table",
        [](int max_n, const std::string& format) {
          const CountTable t = build_table(max_n);
          if (format == "json") return t.to_json();
          if (format == "csv") return t.to_csv();
          throw DomainError("format must be csv or json");
        },
        py::arg("max_n"), py::arg("format") = "csv");
  m.def("row_sequence",
        [](int k, int max_n) {
          py::list out;
          for (const BigCount& v : row_sequence(k, max_n)) out.append(big_to_py(v));
          return out;
        },
        py::arg("k"), py::arg("max_n"));

  m.def("insert_middle_chord", &insert_middle_chord, py::arg("diagram"), py::arg("k"));
  m.def("alpha",
        [](const ChordDiagram& d, int k, int i) { return alpha(d, k, i); },
        py::arg("diagram"), py::arg("k"), py::arg("i"));
  m.def("beta", &beta, py::arg("diagram"), py::arg("k"));
  m.def("class_index", &class_index, py::arg("diagram"), py::arg("k"));
  m.def("verify_theorem",
        [](int n, int k, const std::string& mode, std::optional<int> ceiling) {
          if (mode == "counts") return report_to_py(verify_theorem_counts(n, k));
          if (mode == "exhaustive")
            return report_to_py(verify_theorem_exhaustive(
                n, k, ceiling.value_or(oracle_ceiling())));
          throw DomainError("mode must be counts or exhaustive");
        },
        py::arg("n"), py::arg("k"), py::arg("mode") = "counts",
        py::arg("ceiling") = std::nullopt);

  m.def("check_recurrence",
        [](const std::string& spec_json, const std::vector<py::int_>& seq,
           long offset) {
          const RecurrenceSpec spec = spec_from_json(spec_json);
          const ResidualReport report =
              check_recurrence(spec, seq_from_py(seq), offset);
          py::dict out;
          out["passed"] = report.passed;
          py::list rs;
          for (const auto& [n, r] : report.residuals)
            rs.append(py::make_tuple(n, rational_str(r)));
          out["residuals"] = rs;
          return out;
        },
        py::arg("spec_json"), py::arg("seq"), py::arg("offset"));
  m.def("fit_recurrence",
        [](const std::vector<py::int_>& seq, long offset, int order, int degree,
           int validation, std::optional<long> first_term) {
          return fit_to_py(fit_recurrence(seq_from_py(seq), offset, order, degree,
                                          validation, first_term));
        },
        py::arg("seq"), py::arg("offset"), py::arg("order"), py::arg("degree"),
        py::arg("validation") = 3, py::arg("first_term") = std::nullopt);
  m.def("search_recurrence",
        [](const std::vector<py::int_>& seq, long offset, int max_order,
           int max_degree, int validation, std::optional<long> first_term) {
          return fit_to_py(search_recurrence(seq_from_py(seq), offset, max_order,
                                             max_degree, validation, first_term));
        },
        py::arg("seq"), py::arg("offset"), py::arg("max_order"),
        py::arg("max_degree"), py::arg("validation") = 3,
        py::arg("first_term") = std::nullopt);

  m.def("render_figure",
        [](const ChordDiagram& d, const std::string& format,
           std::optional<int> highlight_k, bool mark) {
          RenderOptions opt;
          if (format == "svg")
            opt.format = RenderFormat::svg;
          else if (format == "tikz")
            opt.format = RenderFormat::tikz;
          else
            throw DomainError("format must be svg or tikz");
          opt.highlight_k = highlight_k;
          opt.mark_chord = mark;
          return render_figure(d, opt);
        },
        py::arg("diagram"), py::arg("format") = "svg",
        py::arg("highlight_k") = std::nullopt, py::arg("mark") = false);
}
