#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hive/cli.hpp"
#include "hive/gradcheck.hpp"
#include "hive/lrc_lattice.hpp"
#include "hive/lrc_oracle.hpp"
#include "hive/lrc_rounded.hpp"
#include "hive/optimize.hpp"
#include "hive/surface.hpp"

namespace py = pybind11;
using namespace hive;

namespace {

WeightTriple make_triple(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu,
                         const Eigen::VectorXd& lambda) {
  return WeightTriple(mu, nu, lambda);
}

EnsembleSpec make_spec(const std::string& kind, int n, std::uint64_t seed,
                       long long int_low, long long int_high) {
  EnsembleSpec spec;
  spec.kind = parse_ensemble(kind);
  spec.n = n;
  spec.seed = seed;
  spec.int_low = int_low;
  spec.int_high = int_high;
  return spec;
}

Pairing parse_pairing(const std::string& p) {
  if (p == "identical") return Pairing::Identical;
  if (p == "independent") return Pairing::Independent;
  throw InvalidSpec("pairing must be identical or independent");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "combinatorial hives, hive geometry, and Littlewood-Richardson estimation";

  py::register_exception<HiveError>(m, "HiveError");

  py::class_<WeightTriple>(m, "WeightTriple")
      .def(py::init(&make_triple), py::arg("mu"), py::arg("nu"), py::arg("lambda"))
      .def_property_readonly("n", &WeightTriple::n)
      .def_property_readonly("mu", &WeightTriple::mu)
      .def_property_readonly("nu", &WeightTriple::nu)
      .def_property_readonly("lambda_", &WeightTriple::lambda)
      .def_property_readonly("integral", &WeightTriple::integral)
      .def("scaled", &WeightTriple::scaled);

  py::class_<Hive>(m, "Hive")
      .def_property_readonly("n", &Hive::n)
      .def_property_readonly("values", &Hive::values)
      .def("interior", &Hive::interior)
      .def("value", [](const Hive& h, int j, int k) { return h(j, k); })
      .def("to_json", &Hive::to_json);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("is_hive", &ValidationReport::is_hive)
      .def_property_readonly("deficiencies", [](const ValidationReport& r) {
        py::list out;
        for (const auto& d : r.deficiencies) {
          out.append(py::make_tuple(to_string(d.rhombus.orientation), d.magnitude));
        }
        return out;
      });

  m.def("check_saturation", &check_saturation, py::arg("mu"), py::arg("nu"),
        py::arg("lambda"), py::arg("tol") = kSaturationTol);
  m.def("build_boundary", &build_boundary);
  m.def("embed", &embed, py::arg("triple"), py::arg("interior"));
  m.def("validate_hive", &validate_hive, py::arg("hive"), py::arg("tolerance") = 1e-9);

  m.def(
      "polytope",
      [](const WeightTriple& t) {
        const HivePolytope poly(t);
        return py::make_tuple(poly.dense_A(), poly.b());
      },
      "hive polytope as (A, b) with A x <= b over the interior coordinates");

  m.def(
      "exact_lrc",
      [](const WeightTriple& t, long long cap) { return exact_lrc(t, cap).count; },
      py::arg("triple"), py::arg("cap") = 1000000LL);
  m.def(
      "rounded_lrc",
      [](const WeightTriple& t, double rel_error, std::uint64_t seed) {
        const RoundedLrcResult r = rounded_lrc(t, rel_error, seed);
        return py::make_tuple(r.estimate, r.f, r.vol_q);
      },
      py::arg("triple"), py::arg("rel_error") = 0.05, py::arg("seed") = 0);
  m.def(
      "lattice_lrc",
      [](const WeightTriple& t, double rel_error, std::uint64_t seed) {
        const LatticeLrcResult r = lattice_lrc(t, rel_error, seed);
        return py::make_tuple(r.estimate, r.inner_count, r.stalled_flag);
      },
      py::arg("triple"), py::arg("rel_error") = 0.05, py::arg("seed") = 0);
  m.def("max_lp_hive", &max_lp_hive);

  m.def(
      "sample_pair",
      [](const std::string& kind, int n, std::uint64_t seed, const std::string& pairing,
         long long int_low, long long int_high) {
        const MatrixPair pair =
            sample(make_spec(kind, n, seed, int_low, int_high), parse_pairing(pairing));
        return py::make_tuple(pair.M, pair.N);
      },
      py::arg("kind"), py::arg("n"), py::arg("seed") = 0,
      py::arg("pairing") = "independent", py::arg("int_low") = 1,
      py::arg("int_high") = 50);
  m.def("spectrum", [](const Eigen::MatrixXd& M) { return spectrum(M).values; });

  m.def(
      "generate_hive",
      [](const Eigen::MatrixXd& M, const Eigen::MatrixXd& N, std::uint64_t seed,
         double tol, int max_iters) {
        MatrixPair pair{M, N, M + N, Pairing::Independent};
        OptimizerSettings settings;
        settings.grad_norm_tol = tol;
        settings.max_iters = max_iters;
        const GenerateResult gen = generate_hive(pair, settings, seed);
        return py::make_tuple(gen.hive, gen.report, gen.triple);
      },
      py::arg("M"), py::arg("N"), py::arg("seed") = 0, py::arg("tol") = 1e-7,
      py::arg("max_iters") = 500);
  m.def(
      "optimize_coefficient",
      [](const Eigen::MatrixXd& M, const Eigen::MatrixXd& N, int j, int k,
         std::uint64_t seed) {
        OptimizerSettings settings;
        const CoefficientResult r = optimize_coefficient(M, N, j, k, settings, seed);
        return py::make_tuple(r.value, r.converged, r.grad_norm);
      },
      py::arg("M"), py::arg("N"), py::arg("j"), py::arg("k"), py::arg("seed") = 0);

  m.def("placement", &placement);
  m.def(
      "curvature",
      [](const Hive& h) {
        const CurvatureField f = curvature(surface_from_hive(h));
        return py::make_tuple(f.gaussian, f.mean);
      },
      "per-vertex (gaussian, mean) curvature of one hive surface");

  m.def(
      "gradient_check",
      [](int max_dim, int trials, std::uint64_t seed) {
        const GradCheckReport r = gradient_check(max_dim, trials, seed);
        py::dict out;
        out["grad_slope_min"] = r.grad_slope_min;
        out["grad_slope_max"] = r.grad_slope_max;
        out["hess_slope_min"] = r.hess_slope_min;
        out["hess_slope_max"] = r.hess_slope_max;
        out["tangent_residual_max"] = r.tangent_residual_max;
        out["hess_symmetry_max"] = r.hess_symmetry_max;
        return out;
      },
      py::arg("max_dim") = 6, py::arg("trials") = 10, py::arg("seed") = 0);

  m.def(
      "cli",
      [](const std::vector<std::string>& args) { return dispatch(args); },
      "run a CLI invocation in-process; returns the exit code");
}
