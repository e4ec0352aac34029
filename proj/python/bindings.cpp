// Python bindings for the main operations: spec parsing, psi_k, spectra,
// theorem suites and the family scans. Exact values cross the boundary as
// Python ints (arbitrary precision on both sides).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psik/parse.hpp"
#include "psik/report.hpp"
#include "psik/search.hpp"
#include "psik/verify.hpp"

namespace py = pybind11;
using namespace psik;

namespace {

py::object to_pyint(const Natural& n) {
    PyObject* obj = PyLong_FromString(n.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

Natural from_pyint(const py::object& obj) {
    return Natural::from_decimal(py::cast<std::string>(py::str(obj)));
}

py::dict report_to_dict(const BoundReport& r) {
    py::dict d;
    d["theorem"] = theorem_name(r.theorem);
    d["verdict"] = verdict_name(r.verdict);
    d["lhs"] = to_pyint(r.lhs_scaled);
    d["rhs"] = to_pyint(r.rhs_scaled);
    d["margin"] = to_pyint(r.margin);
    py::dict inst;
    for (const auto& [k, v] : r.instance) inst[py::str(k)] = v;
    d["instance"] = inst;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact psi_k computations for finite groups";

    py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_ValueError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    m.def("psi", [](const std::string& spec, unsigned k) {
        return to_pyint(psi(parse_spec(spec), k).value);
    }, py::arg("spec"), py::arg("k") = 1,
       "psi_k of a group given in spec syntax (e.g. 'D18', 'C4*C3*C3').");

    m.def("compute", [](const std::string& spec_text, unsigned k) {
        GroupSpec spec = parse_spec(spec_text);
        PsiValue v = psi(spec, k);
        py::dict d;
        d["group"] = spec.canonical();
        d["order"] = to_pyint(v.group_order);
        d["k"] = v.k;
        d["psi_k"] = to_pyint(v.value);
        d["route"] = v.route;
        return d;
    }, py::arg("spec"), py::arg("k") = 1, "psi_k with order and route provenance.");

    m.def("spectrum", [](const std::string& spec_text) {
        py::dict d;
        for (const auto& [o, c] : spectrum(parse_spec(spec_text)).counts)
            d[to_pyint(o)] = to_pyint(c);
        return d;
    }, py::arg("spec"), "Order spectrum as {element order: count}.");

    m.def("order", [](const std::string& spec) { return to_pyint(parse_spec(spec).order()); });
    m.def("is_cyclic", [](const std::string& spec) { return parse_spec(spec).cyclic(); });
    m.def("canonical", [](const std::string& spec) { return parse_spec(spec).canonical(); });

    m.def("euler_phi", [](const py::object& n) { return to_pyint(euler_phi(from_pyint(n))); });
    m.def("factorize", [](const py::object& n) {
        py::list out;
        Factorization fac = factorize(from_pyint(n));
        for (const auto& pp : fac.factors())
            out.append(py::make_tuple(to_pyint(pp.prime), pp.exponent));
        return out;
    });

    m.def("verify", [](const std::string& theorem, std::uint64_t n_max, unsigned k_max,
                       std::uint64_t t_max, bool brute_force) {
        SuiteConfig c;
        if (theorem != "all") c.theorems.push_back(theorem_from_name(theorem));
        if (n_max) {
            c.n_max = n_max;
            c.n_max_set = true;
        }
        c.k_max = k_max;
        c.t_max = t_max;
        c.sd_brute_force = brute_force;
        py::list out;
        for (const auto& r : run_suite(c)) out.append(report_to_dict(r));
        return out;
    }, py::arg("theorem") = "all", py::arg("n_max") = 0, py::arg("k_max") = 8,
       py::arg("t_max") = 99, py::arg("brute_force") = false,
       "Run a theorem checker suite, returning one report dict per instance.");

    m.def("theorems", [] { return all_theorem_names(); });

    m.def("find_reversals", [](std::uint64_t n, unsigned k_max) {
        py::list out;
        for (const auto& w : find_reversals(n, k_max)) {
            py::dict d;
            d["g1"] = w.g1.canonical();
            d["g2"] = w.g2.canonical();
            d["k_low"] = w.k_low;
            d["k_high"] = w.k_high;
            d["psi_low_g1"] = to_pyint(w.psi_low_g1);
            d["psi_low_g2"] = to_pyint(w.psi_low_g2);
            d["psi_high_g1"] = to_pyint(w.psi_high_g1);
            d["psi_high_g2"] = to_pyint(w.psi_high_g2);
            out.append(d);
        }
        return out;
    }, py::arg("n"), py::arg("k_max") = 8);

    m.def("extremal", [](std::uint64_t n, unsigned k) {
        ExtremalResult r = extremal_over_order(n, k);
        py::dict d;
        d["argmax"] = r.argmax().spec.canonical();
        d["argmin"] = r.argmin().spec.canonical();
        d["max_strict"] = r.max_strict();
        d["min_strict"] = r.min_strict();
        py::list vals;
        for (const auto& e : r.ranked)
            vals.append(py::make_tuple(e.spec.canonical(), to_pyint(e.value)));
        d["values"] = vals;
        return d;
    }, py::arg("n"), py::arg("k") = 1);

    m.def("worst_ratio", [](std::uint64_t n_max, unsigned k, std::size_t top) {
        RatioScanResult res = worst_ratio_scan(n_max, k, top);
        py::list out;
        for (const auto& r : res.top) {
            py::dict d;
            d["group"] = r.spec.canonical();
            d["n"] = to_pyint(r.spec.order());
            d["k"] = r.k;
            d["psi_g"] = to_pyint(r.psi_g);
            d["psi_zn"] = to_pyint(r.psi_zn);
            d["at_bound"] = r.at_bound;
            out.append(d);
        }
        return out;
    }, py::arg("n_max"), py::arg("k") = 1, py::arg("top") = 10);

    m.def("max_k", &max_k);
    m.def("set_max_k", &set_max_k, py::arg("k"));
}
