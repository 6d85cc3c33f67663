#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dtcell/cluster.hpp"
#include "dtcell/dtengine.hpp"
#include "dtcell/error.hpp"
#include "dtcell/plabic.hpp"
#include "dtcell/weyl.hpp"
#include "report.hpp"

namespace py = pybind11;
using namespace dtcell;

namespace {

weyl::SignedWord make_word(int n, const std::vector<int>& letters) { return weyl::SignedWord(n, letters); }

weyl::SignedWord pair_word(const std::string& u, const std::string& v) {
  return weyl::greedy_pair_word(weyl::Permutation::from_one_line(u), weyl::Permutation::from_one_line(v));
}

std::vector<std::vector<std::string>> matrix_strings(const exact::RFMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_dtcell, m) {
  m.doc() = "Donaldson-Thomas transformations of double Bruhat cells of GL_n";

  auto error = py::register_exception<Error>(m, "DTCellError", PyExc_ValueError);
  (void)error;

  m.def("greedy_pair_word", [](const std::string& u, const std::string& v) { return pair_word(u, v).letters(); },
        py::arg("u"), py::arg("v"), "Greedy reduced word of (u, v); permutations in one-line notation.");
  m.def(
      "is_reduced",
      [](int n, const std::vector<int>& letters) {
        try {
          make_word(n, letters);
          return true;
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::NonReducedWord) return false;
          throw;
        }
      },
      py::arg("n"), py::arg("letters"));
  m.def(
      "reduced_words",
      [](const std::string& u, const std::string& v) {
        std::vector<std::vector<int>> out;
        for (const auto& w : weyl::reduced_words(weyl::Permutation::from_one_line(u), weyl::Permutation::from_one_line(v)))
          out.push_back(w.letters());
        return out;
      },
      py::arg("u"), py::arg("v"));

  m.def(
      "face_labels",
      [](int n, const std::vector<int>& letters) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        const auto g = plabic::build_graph(make_word(n, letters));
        for (const auto& f : g.faces()) out.emplace_back(f.rows, f.cols);
        return out;
      },
      py::arg("n"), py::arg("letters"), "Minor labels (rows, cols) by face id.");
  m.def(
      "quiver_arrows",
      [](int n, const std::vector<int>& letters, bool boundary_removed) {
        auto q = plabic::build_quivers(plabic::build_graph(make_word(n, letters)));
        return (boundary_removed ? q.reduced : q.full).arrows();
      },
      py::arg("n"), py::arg("letters"), py::arg("boundary_removed") = false);
  m.def(
      "amalgamate",
      [](int n, const std::vector<int>& letters) {
        auto g = plabic::build_graph(make_word(n, letters));
        return matrix_strings(dt::amalgamate(g, dt::symbolic_faces(g)));
      },
      py::arg("n"), py::arg("letters"), "Amalgamation in symbolic face variables, entries as strings.");
  m.def(
      "tropical_dt_matrix",
      [](int n, const std::vector<int>& letters) {
        auto d = dt::tropical_dt_check(make_word(n, letters));
        return std::make_pair(d.faces, d.entries);
      },
      py::arg("n"), py::arg("letters"));
  m.def(
      "dt_pullback",
      [](int n, const std::vector<int>& letters) {
        std::map<int, std::string> out;
        for (const auto& [f, value] : dt::dt_pullback(make_word(n, letters)).values) out.emplace(f, value.to_string());
        return out;
      },
      py::arg("n"), py::arg("letters"), "DT^*(X_f) for every unfrozen face f.");

  m.def(
      "graph_json",
      [](int n, const std::vector<int>& letters) { return report::graph_json(plabic::build_graph(make_word(n, letters))).dump(); },
      py::arg("n"), py::arg("letters"));
  m.def(
      "dt_report_json",
      [](int n, const std::vector<int>& letters, std::uint64_t seed, int specializations) {
        py::gil_scoped_release release;
        return report::dt_report(make_word(n, letters), {seed, specializations}).dump();
      },
      py::arg("n"), py::arg("letters"), py::arg("seed") = 2024, py::arg("specializations") = 3);
  m.def(
      "dt_sequence_json", [](int n, const std::vector<int>& letters) { return report::sequence_json(make_word(n, letters)).dump(); },
      py::arg("n"), py::arg("letters"));
  m.def(
      "closed_form_json",
      [](int n, const std::vector<int>& letters) { return report::closed_form_json(make_word(n, letters)).dump(); },
      py::arg("n"), py::arg("letters"));

  py::class_<Seed>(m, "Seed")
      .def(py::init<std::set<int>, std::set<int>>(), py::arg("vertices"), py::arg("frozen") = std::set<int>{})
      .def("add_arrow", &Seed::add_arrow, py::arg("source"), py::arg("target"), py::arg("count") = 1)
      .def("eps", &Seed::eps)
      .def("arrows", &Seed::arrows)
      .def_property_readonly("vertices", &Seed::vertices)
      .def_property_readonly("frozen", &Seed::frozen)
      .def("mutate", [](const Seed& s, int k) { return cluster::mutate_seed(s, k); })
      .def("__eq__", [](const Seed& a, const Seed& b) { return a == b; })
      .def("__repr__", &Seed::to_string);
}
