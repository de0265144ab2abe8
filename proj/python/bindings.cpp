#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgehom/admissibility.hpp"
#include "sgehom/cases.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw sgehom::ConfigError(std::string("invalid JSON: ") + e.what());
    }
}

sgehom::Regime regime(const std::string& name) { return sgehom::regime_from_string(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "JSON-in, JSON-out bindings of the sgehom library";

    auto config_error = py::register_exception<sgehom::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<sgehom::DomainError>(m, "DomainError", PyExc_ArithmeticError);
    (void)config_error;

    m.def(
        "run_case",
        [](const std::string& config, double symmetry_tol) {
            return sgehom::run_case(parse(config), {symmetry_tol}).dump();
        },
        py::arg("config"), py::arg("symmetry_tol") = 1e-10);
    m.def(
        "run_check",
        [](const std::string& config, double symmetry_tol) {
            return sgehom::run_check(parse(config), {symmetry_tol}).dump();
        },
        py::arg("config"), py::arg("symmetry_tol") = 1e-10);
    m.def(
        "run_sweep",
        [](const std::string& config) {
            const auto r = sgehom::run_sweep(sgehom::parse_sweep(parse(config)));
            return py::make_tuple(r.csv, r.error ? py::object(py::str(*r.error)) : py::object(py::none()));
        },
        py::arg("config"), "Returns (csv, error); error is None when every grid point succeeded.");
    m.def(
        "reproduce_tables", [](double tolerance) { return sgehom::reproduce_tables({tolerance}).dump(); },
        py::arg("tolerance") = 5e-3);
    m.def(
        "rve_query",
        [](const std::string& shape, const std::optional<std::string>& reference, std::size_t mc_samples,
           std::uint64_t seed) {
            sgehom::RveQuery q{sgehom::parse_shape(parse(shape)), std::nullopt, mc_samples, seed};
            if (reference) q.reference = sgehom::parse_shape(parse(*reference));
            return sgehom::rve_query(q).dump();
        },
        py::arg("shape"), py::arg("reference") = py::none(), py::arg("mc_samples") = 0, py::arg("seed") = 0);
    m.def(
        "pd_threshold",
        [](double nu1, double nu2, const std::string& r) { return sgehom::pd_threshold(nu1, nu2, regime(r)); },
        py::arg("nu1"), py::arg("nu2"), py::arg("regime") = "plane_strain");
}
