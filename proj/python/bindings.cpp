#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jdiv/bounds.hpp"
#include "jdiv/error.hpp"
#include "jdiv/geometry.hpp"
#include "jdiv/jensen.hpp"
#include "jdiv/random.hpp"
#include "jdiv/tolerance.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using jdiv::Alpha;
using jdiv::DensityMatrix;
using jdiv::Distribution;

py::dict report_dict(const jdiv::DefinitenessReport& r) {
  py::dict d("certified"_a = r.certified, "min_eigenvalue"_a = r.min_eigenvalue,
             "tolerance"_a = r.tolerance);
  d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
  return d;
}

py::object witness_tuple(const std::optional<std::pair<Distribution, Distribution>>& w) {
  if (!w) return py::none();
  return py::make_tuple(w->first, w->second);
}

py::dict bound_dict(const jdiv::BoundReport& r) {
  return py::dict("lower"_a = r.lower, "value"_a = r.value, "upper"_a = r.upper, "v"_a = r.v,
                  "alpha"_a = r.alpha, "upper_kind"_a = std::string(jdiv::to_string(r.upper_kind)),
                  "holds"_a = r.holds(), "tight_lower_witness"_a = witness_tuple(r.tight_lower_witness),
                  "tight_upper_witness"_a = witness_tuple(r.tight_upper_witness));
}

py::dict divergence_dict(const jdiv::DivergenceResult& r) {
  return py::dict("value"_a = r.value, "alpha"_a = r.alpha, "via"_a = std::string(jdiv::to_string(r.via)));
}

jdiv::DistanceMatrix to_distance(const Eigen::MatrixXd& d) { return jdiv::DistanceMatrix(d); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Classical and quantum Jensen divergences of order alpha";

  auto error = py::register_exception<jdiv::Error>(m, "Error", PyExc_RuntimeError);
  auto validation = py::register_exception<jdiv::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<jdiv::DimensionError>(m, "DimensionError", validation.ptr());
  py::register_exception<jdiv::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<jdiv::InfiniteTermError>(m, "InfiniteTermError", error.ptr());
  py::register_exception<jdiv::ConsistencyError>(m, "ConsistencyError", error.ptr());
  py::register_exception<jdiv::SizeError>(m, "SizeError", error.ptr());
  py::register_exception<jdiv::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<jdiv::NotNegativeTypeError>(m, "NotNegativeTypeError", error.ptr());

  m.def("tolerance_scale", &jdiv::tolerance_scale);
  m.def("set_tolerance_scale", &jdiv::set_tolerance_scale, "scale"_a);

  py::class_<Distribution>(m, "Distribution")
      .def(py::init([](const py::sequence& probs, std::vector<std::string> labels) {
             return Distribution(probs.cast<std::vector<double>>(), std::move(labels));
           }),
           "probs"_a, "labels"_a = std::vector<std::string>{})
      .def_static("uniform", &Distribution::uniform, "n"_a)
      .def_static("point_mass", &Distribution::point_mass, "n"_a, "index"_a)
      .def_property_readonly("probs", [](const Distribution& p) {
        return std::vector<double>(p.probs().begin(), p.probs().end());
      })
      .def_property_readonly("labels", &Distribution::labels)
      .def("__len__", &Distribution::size)
      .def("__getitem__", [](const Distribution& p, std::size_t i) {
        if (i >= p.size()) throw py::index_error();
        return p[i];
      })
      .def(py::self == py::self)
      .def("__repr__", [](const Distribution& p) {
        return "Distribution(" + py::repr(py::cast(std::vector<double>(p.probs().begin(), p.probs().end())))
                                     .cast<std::string>() + ")";
      });
  py::implicitly_convertible<py::sequence, Distribution>();

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init(&jdiv::validate_density), "matrix"_a)
      .def_static("pure", &DensityMatrix::pure, "psi"_a)
      .def_static("diagonal", &DensityMatrix::diagonal, "p"_a)
      .def_static("maximally_mixed", &DensityMatrix::maximally_mixed, "dim"_a)
      .def("conjugated", &DensityMatrix::conjugated, "unitary"_a)
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def("eigenvalues", [](const DensityMatrix& rho) { return jdiv::spectrum(rho).eigenvalues; });
  py::implicitly_convertible<py::array, DensityMatrix>();

  m.def("shannon_entropy", &jdiv::shannon_entropy, "p"_a);
  m.def("von_neumann_entropy", &jdiv::von_neumann_entropy, "rho"_a);
  m.def("alpha_entropy", [](const Distribution& p, double a) { return jdiv::alpha_entropy(p, Alpha(a)); },
        "p"_a, "alpha"_a);
  m.def("alpha_entropy", [](const DensityMatrix& rho, double a) { return jdiv::alpha_entropy(rho, Alpha(a)); },
        "rho"_a, "alpha"_a);
  m.def("binary_alpha_entropy", [](double x, double a) { return jdiv::binary_alpha_entropy(x, Alpha(a)); },
        "x"_a, "alpha"_a);
  m.def("kl_divergence", &jdiv::kl_divergence, "p"_a, "q"_a);
  m.def("relative_entropy", &jdiv::relative_entropy, "rho"_a, "sigma"_a);
  m.def("total_variation", &jdiv::total_variation, "p"_a, "q"_a);
  m.def("trace_distance", &jdiv::trace_distance, "rho"_a, "sigma"_a);

  m.def("jd_alpha", [](const Distribution& p, const Distribution& q, double a) {
          return jdiv::jd_alpha(p, q, Alpha(a)).value;
        }, "p"_a, "q"_a, "alpha"_a = 1.0);
  m.def("qjd_alpha", [](const DensityMatrix& r, const DensityMatrix& s, double a) {
          return jdiv::qjd_alpha(r, s, Alpha(a)).value;
        }, "rho"_a, "sigma"_a, "alpha"_a = 1.0);
  m.def("jd_general", [](std::vector<Distribution> members, const Distribution& weights,
                         std::optional<double> a) {
          const jdiv::ClassicalFamily fam(std::move(members), weights);
          return divergence_dict(a ? jdiv::jd_alpha_general(fam, Alpha(*a)) : jdiv::jd_general(fam));
        }, "members"_a, "weights"_a, "alpha"_a = py::none());
  m.def("qjd_general", [](std::vector<DensityMatrix> members, const Distribution& weights,
                          std::optional<double> a) {
          const jdiv::QuantumFamily fam(std::move(members), weights);
          return divergence_dict(a ? jdiv::qjd_alpha_general(fam, Alpha(*a)) : jdiv::qjd_general(fam));
        }, "members"_a, "weights"_a, "alpha"_a = py::none());
  m.def("redundancy", [](std::vector<Distribution> members, const Distribution& weights, const Distribution& q) {
          return jdiv::redundancy(jdiv::ClassicalFamily(std::move(members), weights), q);
        }, "members"_a, "weights"_a, "q"_a);
  m.def("compensation_residual", [](std::vector<Distribution> members, const Distribution& weights,
                                    const Distribution& q) {
          return jdiv::compensation_residual(jdiv::ClassicalFamily(std::move(members), weights), q);
        }, "members"_a, "weights"_a, "q"_a);
  m.def("donald_residual", [](std::vector<DensityMatrix> members, const Distribution& weights,
                              const DensityMatrix& sigma) {
          return jdiv::donald_residual(jdiv::QuantumFamily(std::move(members), weights), sigma);
        }, "members"_a, "weights"_a, "sigma"_a);
  m.def("holevo_bound", [](std::vector<DensityMatrix> members, const Distribution& weights) {
          return jdiv::holevo_bound(jdiv::QuantumFamily(std::move(members), weights));
        }, "members"_a, "weights"_a);

  m.def("divergence_matrix", [](const std::vector<Distribution>& pts, double a) {
          return jdiv::divergence_matrix(std::span(pts), Alpha(a)).matrix();
        }, "points"_a, "alpha"_a = 1.0);
  m.def("divergence_matrix", [](const std::vector<DensityMatrix>& pts, double a) {
          return jdiv::divergence_matrix(std::span(pts), Alpha(a)).matrix();
        }, "points"_a, "alpha"_a = 1.0);
  m.def("negative_type_check", [](const Eigen::MatrixXd& d, std::optional<double> tol) {
          return report_dict(jdiv::negative_type_check(to_distance(d), tol));
        }, "d"_a, "tol"_a = py::none());
  m.def("embed", [](const Eigen::MatrixXd& d) {
          const auto e = jdiv::embed(to_distance(d));
          return py::make_tuple(e.coords, e.reconstruction_error);
        }, "d"_a);
  m.def("cayley_menger_det", [](const Eigen::MatrixXd& d) { return jdiv::cayley_menger_det(to_distance(d)); },
        "d"_a);
  m.def("menger_embeddability", [](const Eigen::MatrixXd& d) {
          return jdiv::menger_embeddability(to_distance(d));
        }, "d"_a);
  m.def("counterexample_energy", [](double a) { return jdiv::counterexample_energy(Alpha(a)); }, "alpha"_a);
  m.def("quadruple_cm_determinant", [](double a, double eps) {
          return jdiv::quadruple_cm_determinant(Alpha(a), eps);
        }, "alpha"_a, "eps"_a = 1e-2);
  m.def("cm_leading_sign", [](double a) { return jdiv::cm_leading_sign(Alpha(a)); }, "alpha"_a);
  m.def("cm_leading_coefficient", [](double a) { return jdiv::cm_leading_coefficient(Alpha(a)); }, "alpha"_a);
  m.def("exp_convexity_check", [](const std::function<double(double)>& phi, std::vector<double> samples,
                                  bool sum_zero) {
          return report_dict(jdiv::exp_convexity_check(
              phi, samples, sum_zero ? jdiv::Restriction::sum_zero : jdiv::Restriction::full));
        }, "phi"_a, "samples"_a, "sum_zero"_a = false);
  m.def("power_integral", [](double x, double a) { return jdiv::power_integral(x, Alpha(a)); }, "x"_a, "alpha"_a);

  m.def("lower_L", [](double v, double a) { return jdiv::lower_L(v, Alpha(a)); }, "v"_a, "alpha"_a);
  m.def("upper_U2", [](double v, double a) { return jdiv::upper_U2(v, Alpha(a)); }, "v"_a, "alpha"_a);
  m.def("upper_Un", [](const Distribution& p, const Distribution& q, double a) {
          return jdiv::upper_Un(p, q, Alpha(a));
        }, "p"_a, "q"_a, "alpha"_a);
  m.def("bound_report", [](const Distribution& p, const Distribution& q, double a) {
          return bound_dict(jdiv::bound_report(p, q, Alpha(a)));
        }, "p"_a, "q"_a, "alpha"_a);
  m.def("q_bound_report", [](const DensityMatrix& r, const DensityMatrix& s, double a) {
          return bound_dict(jdiv::q_bound_report(r, s, Alpha(a)));
        }, "rho"_a, "sigma"_a, "alpha"_a);
  m.def("chain_check", [](const Distribution& p, const Distribution& q, double a) {
          const auto c = jdiv::chain_check(p, q, Alpha(a));
          return py::dict("values"_a = c.as_vector(), "monotone"_a = c.monotone());
        }, "p"_a, "q"_a, "alpha"_a);
  m.def("diagram", [](double a, int n, int grid) {
          const auto d = jdiv::diagram(Alpha(a), n, grid);
          std::vector<std::pair<double, double>> lower, upper;
          std::vector<std::tuple<double, double, double>> homotopy;
          for (const auto& p : d.curve_lower) lower.emplace_back(p.v, p.jd);
          for (const auto& p : d.curve_upper) upper.emplace_back(p.v, p.jd);
          for (const auto& s : d.homotopy_samples) homotopy.emplace_back(s.t, s.v, s.jd);
          return py::dict("lower"_a = lower, "upper"_a = upper, "homotopy"_a = homotopy);
        }, "alpha"_a, "n"_a = 3, "grid"_a = 50);

  py::class_<jdiv::Sampler>(m, "Sampler")
      .def(py::init<std::uint64_t>(), "seed"_a)
      .def("distribution", &jdiv::Sampler::distribution, "n"_a)
      .def("mixed_state", &jdiv::Sampler::mixed_state, "dim"_a)
      .def("pure_state", &jdiv::Sampler::pure_state, "dim"_a)
      .def("unitary", &jdiv::Sampler::unitary, "dim"_a);
}
