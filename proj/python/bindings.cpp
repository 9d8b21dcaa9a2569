#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "radvar/numerov.hpp"
#include "radvar/solvers.hpp"
#include "radvar/specfun.hpp"
#include "radvar/tables.hpp"
#include "radvar/variational.hpp"

namespace py = pybind11;
using namespace radvar;

namespace {

DSelection selection_from(const std::string& mode, std::optional<double> fixed_d) {
    if (mode == "fitted") {
        return DSelection::fitted();
    }
    if (mode == "minimized") {
        return DSelection::minimized();
    }
    if (mode == "fixed") {
        if (!fixed_d) {
            throw py::value_error("d mode 'fixed' needs a d value");
        }
        return DSelection::fixed(*fixed_d);
    }
    throw py::value_error("d mode must be 'fitted', 'minimized' or 'fixed'");
}

}  // namespace

PYBIND11_MODULE(_radvar, m) {
    m.doc() = "Variational and shooting solvers for power-law radial potentials";

    py::class_<QuantumState>(m, "QuantumState")
        .def(py::init<int, int>(), py::arg("n"), py::arg("l"))
        .def_readwrite("n", &QuantumState::n)
        .def_readwrite("l", &QuantumState::l)
        .def("__repr__", [](const QuantumState& s) {
            return "QuantumState(n=" + std::to_string(s.n) + ", l=" + std::to_string(s.l) + ")";
        });

    py::class_<PotentialSpec>(m, "PotentialSpec")
        .def_static("power_law", &PotentialSpec::power_law, py::arg("A"), py::arg("nu"),
                    py::arg("sign"))
        .def_static("logarithmic", &PotentialSpec::logarithmic)
        .def_readonly("A", &PotentialSpec::A)
        .def_readonly("nu", &PotentialSpec::nu)
        .def_readonly("sign", &PotentialSpec::sign);

    py::class_<ReducedEigenvalue>(m, "ReducedEigenvalue")
        .def_readonly("epsilon", &ReducedEigenvalue::epsilon)
        .def_property_readonly("x", [](const ReducedEigenvalue& r) { return r.params.x; })
        .def_property_readonly("d", [](const ReducedEigenvalue& r) { return r.params.d; });

    py::class_<PhysicalEigenvalue>(m, "PhysicalEigenvalue")
        .def_readonly("E", &PhysicalEigenvalue::E)
        .def_readonly("reduced", &PhysicalEigenvalue::reduced);

    m.def("gamma", &radvar::gamma, py::arg("x"));
    m.def("airy_ai", &radvar::airy_ai, py::arg("x"));
    m.def("airy_zero", &radvar::airy_zero, py::arg("k"));
    m.def(
        "laguerre",
        [](int n, double alpha, double y) {
            return laguerre_eval(laguerre_coefficients(n, alpha), y);
        },
        py::arg("n"), py::arg("alpha"), py::arg("y"));

    m.def(
        "epsilon_of",
        [](double x, double d, int n, int l, double nu, int sign) {
            return epsilon_of(x, d, QuantumState{n, l}, nu, sign);
        },
        py::arg("x"), py::arg("d"), py::arg("n"), py::arg("l"), py::arg("nu"), py::arg("sign"));
    m.def(
        "epsilon_nl",
        [](double d, int n, int l, double nu, int sign) {
            return epsilon_nl(d, QuantumState{n, l}, nu, sign);
        },
        py::arg("d"), py::arg("n"), py::arg("l"), py::arg("nu"), py::arg("sign"));
    m.def("d_fitted", [](double nu) { return d_fitted(nu); }, py::arg("nu"));
    m.def(
        "d_minimized",
        [](int n, int l, double nu, int sign) {
            return d_minimized(QuantumState{n, l}, nu, sign);
        },
        py::arg("n"), py::arg("l"), py::arg("nu"), py::arg("sign"));
    m.def(
        "solve_reduced",
        [](int n, int l, double nu, int sign, const std::string& d_mode,
           std::optional<double> fixed_d) {
            return solve_reduced(QuantumState{n, l}, nu, sign,
                                 selection_from(d_mode, fixed_d));
        },
        py::arg("n"), py::arg("l"), py::arg("nu"), py::arg("sign"),
        py::arg("d_mode") = "fitted", py::arg("fixed_d") = std::nullopt);

    m.def(
        "power_law_eigenvalue",
        [](const PotentialSpec& pot, int n, int l, const std::string& d_mode,
           std::optional<double> fixed_d, const std::string& convention) {
            Convention conv = Convention::Plain;
            if (convention == "ref11") {
                conv = Convention::Ref11;
            } else if (convention != "plain") {
                throw py::value_error("convention must be 'plain' or 'ref11'");
            }
            return power_law_eigenvalue(pot, QuantumState{n, l},
                                        selection_from(d_mode, fixed_d), conv);
        },
        py::arg("potential"), py::arg("n"), py::arg("l"), py::arg("d_mode") = "fitted",
        py::arg("fixed_d") = std::nullopt, py::arg("convention") = "plain");
    m.def(
        "log_eigenvalue",
        [](int n, int l) { return log_eigenvalue(QuantumState{n, l}); }, py::arg("n"),
        py::arg("l"));

    m.def(
        "numerov_eigenvalue",
        [](const PotentialSpec& pot, int n, int l) {
            return numerov_eigenvalue_auto(pot, QuantumState{n, l});
        },
        py::arg("potential"), py::arg("n"), py::arg("l"));

    m.def(
        "trial_wavefunction",
        [](double x, double d, int n, int l, double nu, int sign,
           const std::vector<double>& rho) {
            AnsatzParams params;
            params.x = x;
            params.d = d;
            params.state = QuantumState{n, l};
            params.nu = nu;
            params.sign = sign;
            const RadialSamples samples = trial_wavefunction(params, rho);
            return py::make_tuple(samples.values, samples.node_count);
        },
        py::arg("x"), py::arg("d"), py::arg("n"), py::arg("l"), py::arg("nu"), py::arg("sign"),
        py::arg("rho"));

    m.def(
        "table_check",
        [](const std::string& name) {
            const auto id = parse_table_id(name);
            if (!id) {
                throw py::value_error("unknown table preset: " + name);
            }
            const TableResult result = compute_table(*id);
            py::list rows;
            for (const TableRowResult& row : result.rows) {
                py::dict r;
                r["label"] = row.cell.label;
                r["n"] = row.cell.n;
                r["l"] = row.cell.l;
                r["value_this_work"] = row.value_this_work;
                r["value_oracle"] = row.value_oracle;
                r["value_paper"] = row.cell.value_paper;
                rows.append(r);
            }
            py::dict out;
            out["table"] = table_name(*id);
            out["primary_ok"] = result.primary_ok;
            out["reference_ok"] = result.reference_ok;
            out["first_failure"] = result.first_failure;
            out["rows"] = rows;
            return out;
        },
        py::arg("name"));
}
