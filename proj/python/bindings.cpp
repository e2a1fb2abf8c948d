#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tensorbraid/cli.hpp"
#include "tensorbraid/combinators.hpp"
#include "tensorbraid/identities.hpp"
#include "tensorbraid/tensor_braiding.hpp"

namespace py = pybind11;
using namespace tensorbraid;

namespace {

using Rows = std::vector<std::vector<double>>;

PositiveWord to_word(const std::vector<int>& letters) {
  std::vector<Generator> out;
  for (int l : letters) {
    if (l < 1 || l > 255) throw py::value_error("generator index out of range: " + std::to_string(l));
    out.push_back(static_cast<Generator>(l));
  }
  return PositiveWord(std::move(out));
}

std::vector<int> from_word(const PositiveWord& w) {
  std::vector<int> out;
  for (auto g : w.letters()) out.push_back(g);
  return out;
}

DenseMatrix<double> to_matrix(const Rows& rows) {
  const std::size_t n = rows.size();
  DenseMatrix<double> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw py::value_error("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Rows from_matrix(const DenseMatrix<double>& m) {
  Rows out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

RMatrix<double> to_rmatrix(std::size_t dim, const Rows& rows) {
  if (rows.size() != dim * dim) throw py::value_error("R-matrix must be dim^2 x dim^2");
  return RMatrix<double>{dim, to_matrix(rows)};
}

py::list element_terms(const RingElement& e) {
  py::list out;
  for (const auto& [w, c] : e.sorted_terms()) out.append(py::make_tuple(from_word(w), c.to_string()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_tensorbraid, m) {
  py::class_<RingElement>(m, "RingElement")
      .def("is_zero", &RingElement::is_zero)
      .def("terms", &element_terms)
      .def("shifted", &RingElement::shifted)
      .def("flipped", &RingElement::flipped)
      .def("__len__", &RingElement::size)
      .def("__str__", &RingElement::to_string)
      .def("__repr__", [](const RingElement& e) { return "<RingElement " + e.to_string() + ">"; })
      .def("__eq__", [](const RingElement& a, const RingElement& b) { return a == b; })
      .def("__add__", [](const RingElement& a, const RingElement& b) { return a + b; })
      .def("__sub__", [](const RingElement& a, const RingElement& b) { return a - b; })
      .def("__mul__", [](const RingElement& a, const RingElement& b) { return a * b; });

  m.def("word_element", [](const std::vector<int>& w) { return RingElement::word(to_word(w)); });
  m.def("normal_form", [](const std::vector<int>& w) { return from_word(normal_form(to_word(w)).word()); });
  m.def("braid_equal", [](const std::vector<int>& a, const std::vector<int>& b) {
    return braid_equal(to_word(a), to_word(b));
  });

  m.def("beta", &beta);
  m.def("omega", &omega);
  m.def("shuffle", &shuffle);
  m.def("unit_pochhammer", &unit_pochhammer);
  m.def("tensor_block", [](int a, int b, int c) { return tensor_block(a, b, c); });

  m.def("identity_names", [] { return identity_names(); });
  m.def("verify_record", [](const std::string& name, const std::vector<int>& params) {
    return report_record(run_identity(name, params));
  });
  m.def(
      "sweep_records",
      [](const std::string& name, unsigned bound, unsigned jobs, std::uint64_t seed) {
        std::vector<std::string> out;
        py::gil_scoped_release release;
        for (const auto& r : sweep(name, bound, jobs, seed)) out.push_back(report_record(r));
        return out;
      },
      py::arg("name"), py::arg("bound"), py::arg("jobs") = 1, py::arg("seed") = 0);

  m.def(
      "check_rmatrix",
      [](std::size_t dim, const Rows& rows, double tol) {
        const auto c = check_rmatrix(to_rmatrix(dim, rows), tol);
        py::dict out;
        out["ybe_residual"] = c.ybe_residual;
        out["invertible"] = c.invertible;
        out["ok"] = c.ok;
        return out;
      },
      py::arg("dim"), py::arg("entries"), py::arg("tol") = 1e-9);

  m.def(
      "assemble",
      [](std::size_t dim, const Rows& rows, double q, unsigned max_grade) {
        const auto op = assemble(to_rmatrix(dim, rows), q, max_grade);
        py::dict out;
        for (const auto& [label, block] : op.blocks()) out[py::make_tuple(label.a, label.b, label.c)] = from_matrix(block);
        return out;
      },
      py::arg("dim"), py::arg("entries"), py::arg("q"), py::arg("max_grade"));

  m.def(
      "check_ybe",
      [](std::size_t dim, const Rows& rows, double q, unsigned max_grade, double tol) {
        const auto op = assemble(to_rmatrix(dim, rows), q, max_grade);
        py::list out;
        for (unsigned g = 0; g <= max_grade; ++g) {
          const auto r = check_ybe_graded(op, g, tol);
          py::dict d;
          d["grade"] = g;
          d["holds"] = r.holds;
          d["max_residual"] = r.max_residual;
          d["relative_residual"] = r.relative_residual;
          out.append(d);
        }
        return out;
      },
      py::arg("dim"), py::arg("entries"), py::arg("q"), py::arg("max_grade"), py::arg("tol") = 1e-9);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
