#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcorr/dynamics.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/verify.hpp"

namespace py = pybind11;
using namespace qcorr;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

py::array matrix_to_numpy(const Matrix& m) {
    const int n = m.dim();
    py::array_t<std::complex<double>> out({n, n});
    auto view = out.mutable_unchecked<2>();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) view(r, c) = m(r, c);
    return out;
}

Matrix numpy_to_matrix(const ComplexArray& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1) ||
        (arr.shape(0) != 2 && arr.shape(0) != 4)) {
        throw std::invalid_argument("expected a 2x2 or 4x4 complex array");
    }
    const int n = static_cast<int>(arr.shape(0));
    Matrix m(n);
    auto view = arr.unchecked<2>();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = view(r, c);
    return m;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Classical and quantum correlations of two-qubit Bell-diagonal states"
              " under local flip channels";

    py::register_exception<NotAStateError>(m, "NotAStateError", PyExc_ValueError);
    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<UnsupportedStateError>(m, "UnsupportedStateError", PyExc_ValueError);

    py::enum_<ChannelKind>(m, "ChannelKind")
        .value("PHASE_FLIP", ChannelKind::PhaseFlip)
        .value("BIT_FLIP", ChannelKind::BitFlip)
        .value("BIT_PHASE_FLIP", ChannelKind::BitPhaseFlip);

    py::class_<BellVector>(m, "BellVector")
        .def(py::init<double, double, double>(), py::arg("c1"), py::arg("c2"), py::arg("c3"))
        .def_readwrite("c1", &BellVector::c1)
        .def_readwrite("c2", &BellVector::c2)
        .def_readwrite("c3", &BellVector::c3)
        .def("__repr__", [](const BellVector& c) {
            return "BellVector(" + format_bell_vector(c) + ")";
        });

    py::class_<EvolvedCoefficients>(m, "EvolvedCoefficients")
        .def(py::init<double, double, double>(), py::arg("alpha"), py::arg("beta"),
             py::arg("gamma"))
        .def_readwrite("alpha", &EvolvedCoefficients::alpha)
        .def_readwrite("beta", &EvolvedCoefficients::beta)
        .def_readwrite("gamma", &EvolvedCoefficients::gamma);

    py::class_<MeasurementBasis>(m, "MeasurementBasis")
        .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
        .def_readwrite("theta", &MeasurementBasis::theta)
        .def_readwrite("phi", &MeasurementBasis::phi);

    py::class_<CorrelationRecord>(m, "CorrelationRecord")
        .def_readonly("p", &CorrelationRecord::p)
        .def_readonly("C", &CorrelationRecord::C)
        .def_readonly("Q", &CorrelationRecord::Q)
        .def_readonly("I", &CorrelationRecord::I)
        .def_readonly("chi", &CorrelationRecord::chi)
        .def_readonly("theta_opt", &CorrelationRecord::theta_opt)
        .def_readonly("phi_opt", &CorrelationRecord::phi_opt)
        .def_readonly("branch", &CorrelationRecord::branch);

    py::class_<RegimeReport>(m, "RegimeReport")
        .def_property_readonly("regime",
                               [](const RegimeReport& r) { return std::string(to_string(r.regime)); })
        .def_readonly("p_sc", &RegimeReport::p_sc)
        .def_readonly("constant_axis", &RegimeReport::constant_axis)
        .def_readonly("description", &RegimeReport::description);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("samples", &SweepResult::samples)
        .def_readonly("crossings", &SweepResult::crossings)
        .def_readonly("p_sc_detected", &SweepResult::p_sc_detected);

    py::class_<OperationalMeasure>(m, "OperationalMeasure")
        .def_readonly("Q", &OperationalMeasure::Q)
        .def_readonly("C", &OperationalMeasure::C)
        .def_readonly("channel_used", &OperationalMeasure::channel_used)
        .def_readonly("verification_delta", &OperationalMeasure::verification_delta);

    // states
    m.def("is_physical", [](const BellVector& c) { return is_physical(c); }, py::arg("state"));
    m.def("bell_state_matrix",
          [](const BellVector& c) { return matrix_to_numpy(bell_state_matrix(c)); },
          py::arg("state"));
    m.def("spectrum_from_coefficients", &spectrum_from_coefficients, py::arg("coefficients"));
    m.def("coefficients_from_matrix",
          [](const ComplexArray& rho) { return coefficients_from_matrix(numpy_to_matrix(rho)); },
          py::arg("rho"));

    // linalg
    m.def("hermitian_eigenvalues",
          [](const ComplexArray& arr) { return hermitian_eigenvalues(numpy_to_matrix(arr)); },
          py::arg("matrix"));
    m.def("von_neumann_entropy",
          [](const ComplexArray& arr) { return von_neumann_entropy(numpy_to_matrix(arr)); },
          py::arg("rho"));
    m.def("partial_trace",
          [](const ComplexArray& arr, const std::string& keep) {
              if (keep != "A" && keep != "B") throw std::invalid_argument("keep must be A or B");
              return matrix_to_numpy(partial_trace(
                  numpy_to_matrix(arr), keep == "A" ? Subsystem::A : Subsystem::B));
          },
          py::arg("rho"), py::arg("keep"));

    // channels
    m.def("kraus_set",
          [](ChannelKind kind, const std::string& side, double p) {
              if (side != "A" && side != "B") throw std::invalid_argument("side must be A or B");
              const KrausSet set = kraus_set(kind, side == "A" ? Side::A : Side::B, p);
              std::vector<py::array> ops;
              ops.reserve(set.operators.size());
              for (const auto& op : set.operators) ops.push_back(matrix_to_numpy(op));
              return ops;
          },
          py::arg("kind"), py::arg("side"), py::arg("p"));
    m.def("apply_channel",
          [](const ComplexArray& rho, ChannelKind kind, double p) {
              return matrix_to_numpy(apply_channel(numpy_to_matrix(rho), kind, p));
          },
          py::arg("rho"), py::arg("kind"), py::arg("p"));
    m.def("evolve_coefficients", &evolve_coefficients, py::arg("state"), py::arg("kind"),
          py::arg("p"));
    m.def("p_from_time", &p_from_time, py::arg("t"), py::arg("rate"));

    // correlations
    m.def("mutual_information",
          [](const ComplexArray& rho) { return mutual_information(numpy_to_matrix(rho)); },
          py::arg("rho"));
    m.def("conditional_entropy",
          [](const ComplexArray& rho, double theta, double phi) {
              return conditional_entropy(numpy_to_matrix(rho), {theta, phi});
          },
          py::arg("rho"), py::arg("theta"), py::arg("phi"));
    m.def("classical_correlation_numeric",
          [](const ComplexArray& rho, int grid_n, double refine_tol) {
              const NumericExtremum ext =
                  classical_correlation_numeric(numpy_to_matrix(rho), grid_n, refine_tol);
              return py::make_tuple(ext.value, ext.basis.theta, ext.basis.phi);
          },
          py::arg("rho"), py::arg("grid_n") = 256, py::arg("refine_tol") = 1e-12);
    m.def("classical_correlation_analytic",
          [](const EvolvedCoefficients& e) {
              const AnalyticCorrelation c = classical_correlation_analytic(e);
              return py::make_tuple(c.value, c.chi, c.branch);
          },
          py::arg("coefficients"));
    m.def("quantum_discord_analytic", &quantum_discord_analytic, py::arg("coefficients"));
    m.def("evaluate_analytic", &evaluate_analytic, py::arg("state"), py::arg("kind"),
          py::arg("p"));

    // dynamics
    m.def("sudden_change_time", &sudden_change_time, py::arg("state"), py::arg("kind"));
    m.def("classify_regime", &classify_regime, py::arg("state"), py::arg("kind"));
    m.def("commutation_condition",
          [](double theta, double phi, ChannelKind kind) {
              return commutation_condition({theta, phi}, kind);
          },
          py::arg("theta"), py::arg("phi"), py::arg("kind"));
    m.def("operational_discord", &operational_discord, py::arg("state"),
          py::arg("verify") = false, py::arg("grid_n") = 256);
    m.def("sweep", &sweep, py::arg("state"), py::arg("kind"), py::arg("p_grid"));
}
