#include "lis/depoisson.hpp"
#include "lis/errors.hpp"
#include "lis/exact_lis.hpp"
#include "lis/expansions.hpp"
#include "lis/fform.hpp"
#include "lis/moments.hpp"
#include "lis/specfun.hpp"
#include "lis/stirling.hpp"
#include "lis/tracy_widom.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace lis;

namespace {

// Rationals cross the boundary as (numerator, denominator) decimal strings;
// the Python wrapper turns them into fractions.Fraction.
using RatStr = std::pair<std::string, std::string>;

RatStr rat_str(const Rat& r) { return {r.get_num().get_str(), r.get_den().get_str()}; }

std::vector<RatStr> poly_str(const QPoly& p) {
    std::vector<RatStr> out;
    for (const auto& c : p.coeffs()) out.push_back(rat_str(c));
    return out;
}

std::vector<std::vector<RatStr>> form_str(const FForm& f) {
    std::vector<std::vector<RatStr>> out;
    for (const auto& p : f.p) out.push_back(poly_str(p));
    return out;
}

}  // namespace

PYBIND11_MODULE(_lis, m) {
    m.doc() = "Fredholm-determinant and exact-enumeration core for the LIS length distribution";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<SingularSystem>(m, "SingularSystem", base.ptr());
    py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
    py::register_exception<TruncationWarning>(m, "TruncationWarning", base.ptr());

    m.def("airy", &airy, py::arg("x"), py::arg("k") = 0);
    m.def("bessel_j", &bessel_j, py::arg("nu"), py::arg("x"));
    m.def("olver_tables", [](int kmax) {
        const auto T = olver_tables(kmax);
        std::vector<std::vector<RatStr>> A, B;
        for (const auto& p : T.A) A.push_back(poly_str(p));
        for (const auto& p : T.B) B.push_back(poly_str(p));
        return std::make_pair(A, B);
    });

    m.def("tw_cdf", [](double t, int k) { return F(t, k); }, py::arg("t"), py::arg("k") = 0,
          "F^{(k)}(t) of the GUE Tracy-Widom distribution");
    m.def("u", [](double t, int j, int k) { return u(t, j, k); }, py::arg("t"), py::arg("j"), py::arg("k"));
    m.def("e2_hard", &e2_hard, py::arg("s"), py::arg("nu"), py::arg("m") = 80);
    m.def("coeff", [](const std::string& family, int j, double t) { return coeff(parse_family(family), j, t); },
          py::arg("family"), py::arg("j"), py::arg("t"));
    m.def("t_nu", &t_nu);
    m.def("cdf_expansion", &cdf_expansion, py::arg("n"), py::arg("l"), py::arg("m"));
    m.def("pdf_expansion", &pdf_expansion, py::arg("n"), py::arg("l"), py::arg("m"));

    m.def("exact_counts", [](int n) {
        const auto d = exact_dist(n);
        std::vector<std::string> counts;
        for (const auto& c : d.count) counts.push_back(c.get_str());
        return std::make_pair(counts, d.denominator.get_str());
    }, py::arg("n"), "#{sigma : L_n(sigma) <= l} for l = 0..n, and n!");
    m.def("lis_length", &lis_length, py::arg("perm"));
    m.def("poisson_gf", [](int l, std::complex<double> z, int K) { return poisson_gf(l, z, K); }, py::arg("l"),
          py::arg("z"), py::arg("K") = 80);
    m.def("monte_carlo", [](int n, long samples, std::uint64_t seed, int threads) {
        const auto s = monte_carlo(n, samples, seed, threads);
        py::dict d;
        d["n"] = s.n;
        d["samples"] = s.samples;
        d["seed"] = s.seed;
        d["algorithm"] = s.algorithm;
        d["mean"] = s.mean;
        d["variance"] = s.variance;
        d["histogram"] = s.histogram;
        return d;
    }, py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1);

    m.def("moment_table", [] {
        const auto& T = moment_table();
        py::dict d;
        d["M"] = std::vector<double>(T.M.begin(), T.M.end());
        d["mu"] = std::vector<double>(T.mu.begin(), T.mu.end());
        d["nu"] = std::vector<double>(T.nu.begin(), T.nu.end());
        return d;
    });
    m.def("expected_value", &expected_value, py::arg("n"), py::arg("m"));
    m.def("variance", &variance, py::arg("n"), py::arg("m"));

    m.def("stirling_S", [](int n, int l, bool simplified) {
        const auto r = simplified ? stirling_S_tilde(n, l) : stirling_S(n, l);
        return py::dict(py::arg("S") = r.S, py::arg("r_n") = r.r_n, py::arg("a") = r.a, py::arg("b") = r.b);
    }, py::arg("n"), py::arg("l"), py::arg("simplified") = false);
    m.def("jasz_p4", [](int n, int l) { return jasz_p4(poisson_model(n, l), n); }, py::arg("n"), py::arg("l"));
    m.def("johansson_sandwich", [](int n, double s, int l) {
        const auto r = johansson_sandwich(n, s, l);
        return py::dict(py::arg("lower") = r.lower, py::arg("exact") = r.exact, py::arg("upper") = r.upper,
                        py::arg("holds") = r.holds);
    }, py::arg("n"), py::arg("s"), py::arg("l"));

    m.def("st_u", [](int j, int k) { return form_str(st_u(j, k)); }, py::arg("j"), py::arg("k"),
          "coefficients p_1..p_n of the linear F-form of u_jk");
    m.def("minor_fform", [](const std::vector<int>& rows, const std::vector<int>& cols) {
        const auto r = minor_fform(rows, cols);
        return std::make_pair(verdict_name(r.verdict), form_str(r.form));
    }, py::arg("rows"), py::arg("cols"));
}
