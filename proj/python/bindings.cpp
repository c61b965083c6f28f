#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "meo/entropies.hpp"

namespace py = pybind11;

namespace {

meo::SolverConfig make_config(double epsilon, std::optional<long> max_iterations) {
    meo::SolverConfig config;
    config.epsilon = epsilon;
    config.max_iterations = max_iterations;
    return config;
}

py::dict report_to_dict(const meo::EntropyReport& report) {
    py::dict d;
    d["value"] = report.value;
    if (report.alpha)
        d["alpha"] = *report.alpha;
    if (report.q_alpha)
        d["q_alpha"] = *report.q_alpha;
    d["iterations"] = report.solver.iterations;
    d["converged"] = report.solver.converged;
    d["kappa"] = report.profile.kappa;
    d["interval"] = py::make_tuple(report.profile.interval.lo, report.profile.interval.hi);
    d["beta"] = report.profile.beta;
    d["gamma"] = report.profile.gamma;
    d["omega"] = report.solver.omega;
    return d;
}

} // namespace

PYBIND11_MODULE(_meo, m) {
    m.doc() = "Measured relative entropy and measured Renyi relative entropy "
              "of positive definite matrix pairs";

    m.def(
        "measured_relative_entropy",
        [](const meo::Hermitian& rho, const meo::Hermitian& sigma, double epsilon,
           std::optional<long> max_iterations) {
            return report_to_dict(
                meo::measured_relative_entropy(rho, sigma, make_config(epsilon, max_iterations)));
        },
        py::arg("rho"), py::arg("sigma"), py::arg("epsilon") = 1e-6,
        py::arg("max_iterations") = py::none());

    m.def(
        "measured_renyi",
        [](const meo::Hermitian& rho, const meo::Hermitian& sigma, double alpha,
           double epsilon, std::optional<long> max_iterations) {
            return report_to_dict(
                meo::measured_renyi(rho, sigma, alpha, make_config(epsilon, max_iterations)));
        },
        py::arg("rho"), py::arg("sigma"), py::arg("alpha"), py::arg("epsilon") = 1e-6,
        py::arg("max_iterations") = py::none());

    m.def(
        "optimal_measurement_basis",
        [](const meo::Hermitian& rho, const meo::Hermitian& sigma, double epsilon) {
            meo::SolverConfig config;
            config.epsilon = epsilon;
            return Eigen::MatrixXcd(meo::optimal_measurement_basis(
                                        meo::measured_relative_entropy(rho, sigma, config))
                                        .eigenvectors);
        },
        py::arg("rho"), py::arg("sigma"), py::arg("epsilon") = 1e-6);
}
