#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "vinpos/errors.hpp"
#include "vinpos/json.hpp"
#include "vinpos/mobius.hpp"
#include "vinpos/permutation.hpp"
#include "vinpos/poset.hpp"
#include "vinpos/vincular.hpp"

namespace py = pybind11;
using namespace vinpos;

namespace {

py::dict evaluation_dict(const Permutation& sigma, const Permutation& tau,
                         const VincularScheme& scheme, const MobiusEvaluation& eval) {
  py::dict d;
  d["sigma"] = sigma.str();
  d["tau"] = tau.str();
  d["scheme"] = scheme.fingerprint();
  d["mu"] = eval.value;
  d["method"] = std::string(to_string(eval.method));
  if (eval.case_label) {
    d["case"] = std::string(to_string(*eval.case_label));
  } else {
    d["case"] = py::none();
  }
  d["occurrences"] = eval.occurrence_count;
  d["rank"] = eval.rank;
  return d;
}

std::vector<std::vector<std::string>> levels_of(const Interval& iv) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t r = 0; r <= iv.rank(); ++r) {
    auto& level = out.emplace_back();
    for (const auto& p : iv.level(r)) level.push_back(p.str());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vincular pattern posets: containment, intervals and Moebius values";

  py::register_exception<NotComparableError>(m, "NotComparableError", PyExc_ValueError);
  py::register_exception<NotApplicableError>(m, "NotApplicableError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& s) { return Permutation::parse(s); }))
      .def(py::init<std::vector<int>>())
      .def_static("standardize", [](const std::vector<int>& seq) {
        return Permutation::standardize(seq);
      })
      .def_property_readonly("values", [](const Permutation& p) {
        return std::vector<int>(p.values().begin(), p.values().end());
      })
      .def("__len__", &Permutation::size)
      .def("__str__", &Permutation::str)
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.str() + "')"; })
      .def("__hash__", [](const Permutation& p) { return std::hash<Permutation>{}(p); })
      .def(py::self == py::self)
      .def(py::self < py::self);
  py::implicitly_convertible<std::string, Permutation>();

  py::class_<VincularScheme>(m, "VincularScheme")
      .def(py::init([](const std::string& s) { return VincularScheme::parse(s); }))
      .def_property_readonly("fingerprint", &VincularScheme::fingerprint)
      .def("type_vector", [](const VincularScheme& s, std::size_t k) {
        const auto bits = s.type_vector(k).bits();
        return std::vector<int>(bits.begin(), bits.end());
      })
      .def("__str__", &VincularScheme::fingerprint)
      .def("__repr__", [](const VincularScheme& s) {
        return "VincularScheme('" + s.fingerprint() + "')";
      })
      .def(py::self == py::self);
  py::implicitly_convertible<std::string, VincularScheme>();

  m.def("remove_entry", &remove_entry, py::arg("p"), py::arg("pos"));
  m.def("is_monotone", &is_monotone);
  m.def("direct_sum", &direct_sum);
  m.def("order_isomorphic", [](const std::vector<int>& a, const std::vector<int>& b) {
    return order_isomorphic(a, b);
  });

  m.def(
      "occurrences",
      [](const Permutation& pattern, const Permutation& text, const VincularScheme& scheme) {
        std::vector<std::vector<std::size_t>> out;
        for (auto& occ : occurrences(pattern, text, scheme)) out.push_back(occ.positions);
        return out;
      },
      py::arg("pattern"), py::arg("text"), py::arg("scheme") = std::string("quasi"));
  m.def(
      "contains",
      [](const Permutation& pattern, const Permutation& text, const VincularScheme& scheme) {
        return contains(pattern, text, scheme);
      },
      py::arg("pattern"), py::arg("text"), py::arg("scheme") = std::string("quasi"));
  m.def("count_occurrences", &count_occurrences, py::arg("pattern"), py::arg("text"),
        py::arg("scheme") = std::string("quasi"));
  m.def("covered_by", &covered_by, py::arg("text"), py::arg("scheme") = std::string("quasi"));
  m.def(
      "leq",
      [](const Permutation& lower, const Permutation& upper, const VincularScheme& scheme) {
        return leq(lower, upper, scheme);
      },
      py::arg("lower"), py::arg("upper"), py::arg("scheme") = std::string("quasi"));

  py::class_<Interval>(m, "Interval")
      .def_property_readonly("bottom", &Interval::bottom)
      .def_property_readonly("top", &Interval::top)
      .def_property_readonly("scheme", &Interval::scheme)
      .def_property_readonly("rank", &Interval::rank)
      .def_property_readonly("levels", &levels_of)
      .def_property_readonly("edges",
                             [](const Interval& iv) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& e : iv.edges()) {
                                 out.emplace_back(iv.elements()[e.lower].str(),
                                                  iv.elements()[e.upper].str());
                               }
                               return out;
                             })
      .def("__len__", &Interval::size)
      .def("__contains__", &Interval::contains)
      .def("is_chain", &is_chain)
      .def("atoms", &atoms)
      .def("coatoms", &coatoms)
      .def("to_dot", &export_dot)
      .def("to_json", [](const Interval& iv) { return interval_json(iv).dump(); });

  m.def(
      "interval",
      [](const Permutation& bottom, const Permutation& top, const VincularScheme& scheme) {
        return interval(bottom, top, scheme);
      },
      py::arg("bottom"), py::arg("top"), py::arg("scheme") = std::string("quasi"));

  m.def(
      "mobius_bruteforce",
      [](const Interval& iv, const std::string& direction) {
        if (direction != "bottom_up" && direction != "top_down") {
          throw std::invalid_argument("direction must be bottom_up or top_down");
        }
        return mobius_bruteforce(iv, direction == "bottom_up" ? Direction::BottomUp
                                                              : Direction::TopDown);
      },
      py::arg("interval"), py::arg("direction") = std::string("bottom_up"));
  m.def("classify_single_occurrence", [](const Permutation& sigma, const Permutation& tau) {
    return std::string(to_string(classify_single_occurrence(sigma, tau)));
  });
  m.def("mobius_closed_form", &mobius_closed_form);
  m.def("two_cover_grid_mobius", &two_cover_grid_mobius);
  m.def(
      "mobius",
      [](const Permutation& sigma, const Permutation& tau, const VincularScheme& scheme,
         const std::string& method) {
        return evaluation_dict(sigma, tau, scheme,
                               mobius(sigma, tau, scheme, parse_strategy(method)));
      },
      py::arg("sigma"), py::arg("tau"), py::arg("scheme") = std::string("quasi"),
      py::arg("method") = std::string("auto"));

#ifdef VINPOS_VERSION
  m.attr("__version__") = VINPOS_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
