#include "fsdlab/fsdet.hpp"
#include "fsdlab/levi.hpp"
#include "fsdlab/orders.hpp"
#include "fsdlab/report.hpp"
#include "fsdlab/spectra.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fsdlab;

namespace {

HermitianMatrix as_hermitian(const Matrix& entries) { return HermitianMatrix(entries); }

UnitVector as_state(const Vector& components) { return UnitVector(components); }

levi::TestFunction catalog(const std::string& kind, int dim,
                           std::optional<RealVector> weights,
                           std::optional<Matrix> matrix, double radius) {
  levi::CatalogParams params;
  params.dim = dim;
  params.working_radius = radius;
  if (weights) params.weights = *weights;
  if (matrix) params.matrix = HermitianMatrix(*matrix);
  return levi::make_catalog(kind, params);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "normalized determinants, chaotic order tests, and Levi-form "
            "maximality criteria on dense Hermitian truncations";

  py::register_exception<NotInvertibleError>(m, "NotInvertibleError");
  py::register_exception<HypothesisViolated>(m, "HypothesisViolated");

  // spectral calculus
  m.def("matrix_log", [](const Matrix& a) { return matrix_log(as_hermitian(a)).entries(); },
        py::arg("a"));
  m.def("matrix_exp", [](const Matrix& a) { return matrix_exp(as_hermitian(a)).entries(); },
        py::arg("a"));
  m.def("matrix_power",
        [](const Matrix& a, double p) { return matrix_power(as_hermitian(a), p).entries(); },
        py::arg("a"), py::arg("p"));
  m.def("geometric_mean",
        [](const Matrix& a, const Matrix& b, double alpha) {
          return geometric_mean(as_hermitian(a), as_hermitian(b), alpha).entries();
        },
        py::arg("a"), py::arg("b"), py::arg("alpha"));
  m.def("hadamard",
        [](const Matrix& a, const Matrix& b) {
          return hadamard(as_hermitian(a), as_hermitian(b)).entries();
        },
        py::arg("a"), py::arg("b"));
  m.def("eigenvalues", [](const Matrix& a) { return eigh(as_hermitian(a)).eigenvalues; },
        py::arg("a"));

  // normalized determinant
  m.def("delta",
        [](const Matrix& a, const Vector& x) { return fsdet::delta(as_hermitian(a), as_state(x)); },
        py::arg("a"), py::arg("x"), "normalized determinant exp(<log(A) x, x>)");
  m.def("log_mean",
        [](const Matrix& a, const Vector& x) {
          return fsdet::log_mean(as_hermitian(a), as_state(x)).value;
        },
        py::arg("a"), py::arg("x"), "<log(A) x, x> as an extended real (-inf on the kernel)");
  m.def("p_mean",
        [](const Matrix& a, const Vector& x, double p) {
          return fsdet::p_mean(as_hermitian(a), as_state(x), p);
        },
        py::arg("a"), py::arg("x"), py::arg("p"));
  m.def("delta_extrema",
        [](const Matrix& a, int samples, std::uint64_t seed) {
          const auto lo = fsdet::delta_inf(as_hermitian(a), samples, seed);
          const auto hi = fsdet::delta_sup(as_hermitian(a), samples, seed + 1);
          return py::make_tuple(lo.value, hi.value);
        },
        py::arg("a"), py::arg("samples") = 64, py::arg("seed") = 1);

  // scalar constants
  m.def("specht", &orders::specht, py::arg("h"));
  m.def("specht_p", &orders::specht_p, py::arg("h"), py::arg("p"));
  m.def("kantorovich", &orders::kantorovich, py::arg("h"));
  m.def("gen_kantorovich", &orders::gen_kantorovich, py::arg("h"), py::arg("alpha"));
  m.def("additive_constant", &orders::additive_constant, py::arg("m"), py::arg("M"),
        py::arg("p") = 1.0);

  // order tests: (holds, margin)
  m.def("loewner_leq",
        [](const Matrix& a, const Matrix& b) {
          const auto v = orders::loewner_leq(as_hermitian(a), as_hermitian(b));
          return py::make_tuple(v.holds, v.margin);
        },
        py::arg("a"), py::arg("b"), "verdict on B - A >= 0");
  m.def("chaotic_leq",
        [](const Matrix& a, const Matrix& b) {
          const auto v = orders::chaotic_leq(as_hermitian(a), as_hermitian(b));
          return py::make_tuple(v.holds, v.margin);
        },
        py::arg("a"), py::arg("b"), "verdict on log B - log A >= 0");
  m.def("counterexample_pair", [] {
    const auto pair = orders::counterexample_pair();
    return py::make_tuple(pair.a.entries(), pair.b.entries());
  });

  // catalog evaluation
  m.def("catalog_kinds", &levi::catalog_kinds);
  m.def("fsd",
        [](const std::string& kind, const Vector& z, int dim,
           std::optional<RealVector> weights, std::optional<Matrix> matrix, double radius) {
          const auto f = catalog(kind, dim, std::move(weights), std::move(matrix), radius);
          const auto r = levi::fsd(f, z);
          return py::make_tuple(r.value, r.truncation_caveat);
        },
        py::arg("kind"), py::arg("z"), py::arg("dim") = 4,
        py::arg("weights") = std::nullopt, py::arg("matrix") = std::nullopt,
        py::arg("radius") = 2.0,
        "determinant density of a catalog entry at z; returns (value, truncation_caveat)");
  m.def("levi_form",
        [](const std::string& kind, const Vector& z, int dim,
           std::optional<RealVector> weights, std::optional<Matrix> matrix, double radius) {
          return catalog(kind, dim, std::move(weights), std::move(matrix), radius)
              .levi(z)
              .entries();
        },
        py::arg("kind"), py::arg("z"), py::arg("dim") = 4,
        py::arg("weights") = std::nullopt, py::arg("matrix") = std::nullopt,
        py::arg("radius") = 2.0);
  m.def("levi_form_fd",
        [](const std::string& kind, const Vector& z, double step, int dim,
           std::optional<RealVector> weights, std::optional<Matrix> matrix, double radius) {
          return levi::levi_fd(catalog(kind, dim, std::move(weights), std::move(matrix), radius),
                               z, step)
              .entries();
        },
        py::arg("kind"), py::arg("z"), py::arg("step") = 1e-4, py::arg("dim") = 4,
        py::arg("weights") = std::nullopt, py::arg("matrix") = std::nullopt,
        py::arg("radius") = 2.0);

  m.attr("__version__") = kVersion;
}
