#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ptosc/cli.hpp"
#include "ptosc/errors.hpp"
#include "ptosc/oracle.hpp"
#include "ptosc/probabilities.hpp"
#include "ptosc/states.hpp"

namespace py = pybind11;
using namespace ptosc;

namespace {

using Rows = std::vector<std::vector<Complex>>;

Rows to_rows(const Mat2& m) { return {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}; }
std::vector<Complex> to_list(const Vec2& v) { return {v[0], v[1]}; }

Flavour flavour(int i) {
    if (i != 1 && i != 2) throw py::value_error("flavour index must be 1 or 2");
    return static_cast<Flavour>(i);
}

Method method(const std::string& name) {
    const auto parsed = cli::parse_methods(name);
    if (parsed.size() != 1) throw py::value_error("expected a single method name");
    return parsed.front();
}

py::dict record(const ProbabilityRecord& r) {
    py::dict d;
    d["from"] = static_cast<int>(r.from);
    d["to"] = static_cast<int>(r.to);
    d["t0"] = r.t0;
    d["t"] = r.t;
    d["value"] = r.value;
    d["method"] = std::string(to_string(r.method));
    return d;
}

py::dict probability(const ModelParams& p, int i, int j, double t0, double t, const std::string& how) {
    const Flavour a = flavour(i), b = flavour(j);
    switch (method(how)) {
        case Method::closed_form: return record(probability_closed_form(a, b, t - t0, mass_spectrum(p)));
        case Method::trace: return record(probability_trace(a, b, t0, t, eigensystem(p)));
        case Method::hermitian: return record(probability_hermitian(a, b, t - t0, p));
        case Method::naive_continuation: return record(probability_naive_continuation(a, b, t - t0, eigensystem(p)));
    }
    throw py::value_error("unknown method");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-state oscillations with a PT-symmetric non-Hermitian mass matrix";

    // DomainError(kind, message); the kind string names the ErrorKind.
    static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            py::tuple args = py::make_tuple(std::string(to_string(e.kind())), e.what());
            PyErr_SetObject(domain_error.ptr(), args.ptr());
        } catch (const cli::ConfigError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<ModelParams>(m, "ModelParams")
        .def_property_readonly("m1_sq", &ModelParams::m1_sq)
        .def_property_readonly("m2_sq", &ModelParams::m2_sq)
        .def_property_readonly("mu_sq", &ModelParams::mu_sq)
        .def_property_readonly("p", &ModelParams::p)
        .def_property_readonly("eta", &ModelParams::eta)
        .def_property_readonly("signed_eta", &ModelParams::signed_eta)
        .def("__repr__", [](const ModelParams& p) {
            std::ostringstream os;
            os.precision(17);
            os << "ModelParams(m1_sq=" << p.m1_sq() << ", m2_sq=" << p.m2_sq() << ", mu_sq=" << p.mu_sq()
               << ", p=" << p.p() << ")";
            return os.str();
        });

    m.def("make_params", &make_params, py::arg("m1_sq"), py::arg("m2_sq"), py::arg("mu_sq"), py::arg("p") = 0.0);
    m.def("params_from_eta", &params_from_eta, py::arg("eta"), py::arg("ratio") = 0.5, py::arg("mass_sum") = 1.0,
          py::arg("p") = 0.0);
    m.def("mass_matrix", [](const ModelParams& p) { return to_rows(mass_matrix(p)); });
    m.def("hermitian_mass_matrix", [](const ModelParams& p) { return to_rows(hermitian_mass_matrix(p)); });

    py::class_<MassSpectrum>(m, "MassSpectrum")
        .def_readonly("eta", &MassSpectrum::eta)
        .def_readonly("m_plus_sq", &MassSpectrum::m_plus_sq)
        .def_readonly("m_minus_sq", &MassSpectrum::m_minus_sq)
        .def_readonly("omega_plus", &MassSpectrum::omega_plus)
        .def_readonly("omega_minus", &MassSpectrum::omega_minus)
        .def_property_readonly("delta_omega", &MassSpectrum::delta_omega);
    m.def("mass_spectrum", &mass_spectrum);

    py::class_<EigenSystem>(m, "EigenSystem")
        .def_readonly("params", &EigenSystem::params)
        .def_readonly("spectrum", &EigenSystem::spectrum)
        .def_readonly("eta", &EigenSystem::eta)
        .def_readonly("signed_eta", &EigenSystem::signed_eta)
        .def_readonly("theta", &EigenSystem::theta)
        .def_readonly("cosh_theta", &EigenSystem::cosh_theta)
        .def_readonly("sinh_theta", &EigenSystem::sinh_theta)
        .def_readonly("n_factor", &EigenSystem::n_factor)
        .def_property_readonly("e_plus", [](const EigenSystem& es) { return to_list(es.e_plus); })
        .def_property_readonly("e_minus", [](const EigenSystem& es) { return to_list(es.e_minus); })
        .def_property_readonly("delta_omega", &EigenSystem::delta_omega);
    m.def("eigensystem", &eigensystem);

    m.def("hermitian_mass_eigenvalues", [](const ModelParams& p) {
        const auto e = hermitian_mass_eigenvalues(p);
        return std::pair{e.plus, e.minus};
    });
    m.def("cprime_matrix", [](double eta) { return to_rows(cprime_matrix(eta)); });
    m.def("parity_matrix", [] { return to_rows(parity_matrix()); });

    m.def("flavour_ket", [](int i, double t, const EigenSystem& es) { return to_list(flavour_ket(flavour(i), t, es).components); });
    m.def("density_operator", [](int i, double t0, const EigenSystem& es) {
        return to_rows(density_operator(flavour(i), t0, es).matrix);
    });

    m.def("probability", &probability, py::arg("params"), py::arg("i"), py::arg("j"), py::arg("t0"), py::arg("t"),
          py::arg("method") = "closed_form");
    m.def("transition_closed_form", &transition_closed_form, py::arg("eta"), py::arg("phase"));
    m.def("transition_hermitian", &transition_hermitian, py::arg("eta"), py::arg("phase"));
    m.def("transition_naive_continuation", &transition_naive_continuation, py::arg("eta"), py::arg("phase"));

    m.def("dirac_norm", [](int i, double t, const EigenSystem& es) { return dirac_norm(flavour(i), t, es); });
    m.def("dirac_norm_closed_form", &dirac_norm_closed_form);
    m.def("dirac_overlap", [](int a, int b, double t, const EigenSystem& es) {
        return dirac_overlap(flavour(a), flavour(b), t, es);
    });
    m.def("dirac_overlap_closed_form", &dirac_overlap_closed_form);
    m.def("cardioid_r", &cardioid_r, py::arg("phase"), py::arg("eta"));
    m.def("cardioid_ratio", &cardioid_ratio, py::arg("phase"), py::arg("eta"));
    m.def("hermitian_tachyon_eta", &hermitian_tachyon_eta, py::arg("ratio"));

    m.def("oracle_probability", [](const ModelParams& p, int i, int j, double t0, double t) {
        return oracle::probability(p, flavour(i), flavour(j), t0, t);
    });
    m.def("validate", [](const ModelParams& p, std::optional<double> tolerance) {
        oracle::OracleGrid grid = oracle::default_grid();
        grid.tolerance = tolerance;
        py::list out;
        for (const auto& r : oracle::check_all(p, grid)) {
            py::dict d;
            d["check"] = r.check_name;
            d["max_abs_error"] = r.max_abs_error;
            d["tolerance"] = r.tolerance;
            d["passed"] = r.passed;
            d["grid_size"] = r.grid_size;
            out.append(d);
        }
        return out;
    }, py::arg("params"), py::arg("tolerance") = py::none());

    // Runs the command-line front end in-process: (exit_code, stdout, stderr).
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"ptosc"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    });

    m.attr("__version__") = PTOSC_VERSION;
}
