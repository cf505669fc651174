#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tanrep/asymptotics.hpp"
#include "tanrep/circle.hpp"
#include "tanrep/errors.hpp"
#include "tanrep/exponents.hpp"
#include "tanrep/io.hpp"
#include "tanrep/primesieve.hpp"
#include "tanrep/repcount.hpp"
#include "tanrep/seqeval.hpp"
#include "tanrep/window.hpp"

namespace py = pybind11;
using namespace tanrep;

namespace {

py::tuple rational_tuple(const Rational& r) {
    return py::make_tuple(py::int_(py::str(r.numerator().str())), py::int_(py::str(r.denominator().str())));
}

py::dict report_dict(const RepReport& r) {
    py::dict d;
    d["N"] = r.target;
    d["count"] = r.count;
    d["weighted"] = r.weighted;
    d["method"] = std::string(to_string(r.method));
    return d;
}

}  // namespace

PYBIND11_MODULE(tanrep, m) {
    m.doc() = "Ternary representation counts for [p^c tan^theta(log p)] over prime windows";

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = error;
            PyErr_SetObject(err.ptr(), py::make_tuple(std::string(to_string(e.kind())), e.what()).ptr());
        }
    });

    py::class_<WindowParams>(m, "WindowParams")
        .def_readonly("c", &WindowParams::c)
        .def_readonly("theta", &WindowParams::theta)
        .def_readonly("k", &WindowParams::k)
        .def_readonly("delta1", &WindowParams::delta1)
        .def_readonly("delta2", &WindowParams::delta2)
        .def_readonly("x", &WindowParams::x)
        .def_readonly("n_star", &WindowParams::n_star)
        .def_readonly("n1", &WindowParams::n1)
        .def_readonly("epsilon", &WindowParams::epsilon)
        .def_readonly("tau", &WindowParams::tau)
        .def_readonly("residual", &WindowParams::residual)
        .def_readonly("warnings", &WindowParams::warnings)
        .def("to_json", [](const WindowParams& w) { return window_to_json(w).dump(); })
        .def("__repr__", [](const WindowParams& w) {
            return "WindowParams(k=" + std::to_string(w.k) + ", n_star=" + std::to_string(w.n_star) + ")";
        });

    m.def("window_from_index", &window_from_index, py::arg("k"), py::arg("c"), py::arg("theta"),
          py::arg("epsilon") = kDefaultEpsilon);
    m.def("solve_for_target", &solve_for_target, py::arg("n"), py::arg("c"), py::arg("theta"),
          py::arg("epsilon") = kDefaultEpsilon, py::arg("tol_k") = kDefaultTolK);
    m.def("forward_t", &forward_t, py::arg("y"), py::arg("window"));
    m.def("invert_y", &invert_y, py::arg("t"), py::arg("window"));
    m.def("weight_w", &weight_w, py::arg("m"), py::arg("window"));

    m.def(
        "floor_value",
        [](std::int64_t n, double c, double theta) {
            const ValueEntry v = floor_value(n, c, theta);
            return py::make_tuple(v.f, v.frac, v.certified);
        },
        py::arg("n"), py::arg("c"), py::arg("theta"), "(f, frac, certified) for [n^c tan^theta(log n)]");

    m.def(
        "sieve_segment",
        [](double a, double b) { return sieve_segment(a, b).primes; }, py::arg("a"), py::arg("b"),
        "primes in (a, b]");

    m.def(
        "window_values",
        [](const WindowParams& w) {
            const WindowTable t = build_window_table(w);
            std::vector<py::tuple> rows;
            rows.reserve(t.values.size());
            for (const auto& v : t.values) rows.push_back(py::make_tuple(v.n, v.f, v.frac, v.certified));
            return rows;
        },
        py::arg("window"), "(p, f(p), frac, certified) for every window prime");

    m.def(
        "count",
        [](const WindowParams& w, std::optional<std::int64_t> n, const std::string& method, std::size_t threads) {
            const WindowTable t = build_window_table(w, threads);
            const std::int64_t target = n.value_or(w.n_star);
            if (method == "naive") return report_dict(count_ternary_naive(t.values, t.logs, target));
            if (method != "mitm") throw Error(ErrorKind::InvalidParameter, "method must be mitm or naive");
            return report_dict(count_ternary_mitm(t.values, t.logs, target, threads));
        },
        py::arg("window"), py::arg("n") = py::none(), py::arg("method") = "mitm", py::arg("threads") = 0);

    m.def(
        "compare",
        [](const WindowParams& w, std::int64_t lo, std::int64_t hi, std::size_t threads) {
            const WindowTable t = build_window_table(w, threads);
            const auto scan = scan_band(t.values, t.logs, w.n_star + lo, w.n_star + hi, threads);
            const CompareReport rep = compare_report(scan, w);
            std::ostringstream csv;
            write_compare_csv(csv, rep);
            py::dict d;
            d["mean_ratio"] = rep.mean_ratio;
            d["median_ratio"] = rep.median_ratio;
            d["csv"] = csv.str();
            return d;
        },
        py::arg("window"), py::arg("lo") = -100, py::arg("hi") = 100, py::arg("threads") = 0,
        "counts over N* + [lo, hi] against the main term");

    m.def(
        "find_binary",
        [](const WindowParams& w, std::optional<std::int64_t> n) {
            const WindowTable t = build_window_table(w);
            return find_binary(t.values, t.logs, n.value_or(w.n_star));
        },
        py::arg("window"), py::arg("n") = py::none());

    m.def(
        "count_classical",
        [](double c, std::int64_t n) { return report_dict(count_classical(c, n)); }, py::arg("c"),
        py::arg("n"));
    m.def("classical_main_term", &classical_main_term, py::arg("c"), py::arg("n"));
    m.def("main_term", &main_term, py::arg("window"));
    m.def(
        "psi_k", [](const WindowParams& w, std::int64_t n, int k) { return psi_k_exact(w, n, k); },
        py::arg("window"), py::arg("n"), py::arg("k"));

    m.def(
        "circle_integral",
        [](const WindowParams& w, std::int64_t n, double a, double b, std::optional<std::int64_t> grid) {
            const WindowTable t = build_window_table(w);
            std::int64_t fmax = 0;
            for (const auto& v : t.values) fmax = std::max(fmax, v.f);
            const CircleResult r = circle_integral(t.values, t.logs, n, a, b, grid.value_or(3 * fmax + 1));
            return py::make_tuple(r.value, r.warnings);
        },
        py::arg("window"), py::arg("n"), py::arg("a") = 0.0, py::arg("b") = 1.0, py::arg("grid") = py::none(),
        "(integral of S^3(alpha) e(-N alpha) over [a, b], warnings)");
    m.def("fourier_coeff", &fourier_coeff_ch, py::arg("x"), py::arg("h"));

    m.def("admissible_c", [] { return rational_tuple(admissible_c()); }, "(23, 21) as numerator, denominator");
    m.def("minor_arc_exponent", [](std::int64_t p, std::int64_t q) {
        return rational_tuple(minor_arc_exponent(Rational(p, q)));
    });
    m.def("exponent_chain", [] {
        std::vector<py::tuple> rows;
        for (const auto& s : exponent_chain()) rows.push_back(py::make_tuple(s.step, s.expression, s.value.str()));
        return rows;
    });
}
