#include "zetanet/epidemics.hpp"
#include "zetanet/errors.hpp"
#include "zetanet/lseries.hpp"
#include "zetanet/phasescan.hpp"
#include "zetanet/sampler.hpp"
#include "zetanet/thresholds.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zetanet;

namespace {

py::dict threshold_dict(const threshold_result& r)
{
    py::dict d;
    d["margin"] = r.margin;
    d["error_bound"] = r.error_bound;
    d["formula"] = to_string(r.formula);
    d["alpha"] = r.alpha;
    d["beta"] = r.beta;
    return d;
}

scan_window window_from(const std::optional<std::array<double, 4>>& w, const margin_formula& f)
{
    if (!w)
        return f.default_window;
    return {(*w)[0], (*w)[1], (*w)[2], (*w)[3]};
}

} // namespace

PYBIND11_MODULE(_zetanet, m)
{
    m.doc() = "Random graphs whose degree laws come from Dirichlet series";

    py::register_exception<convergence_error>(m, "ConvergenceError", PyExc_ValueError);
    py::register_exception<signed_distribution_error>(m, "SignedDistributionError", PyExc_ValueError);
    py::register_exception<balance_error>(m, "BalanceError", PyExc_RuntimeError);
    py::register_exception<no_sign_change_error>(m, "NoSignChangeError", PyExc_RuntimeError);

    py::class_<lseries>(m, "LSeries")
        .def_static("zeta", &lseries::zeta)
        .def_static("mobius", &lseries::mobius)
        .def_static("liouville", &lseries::liouville)
        .def_static("hurwitz", &lseries::hurwitz, py::arg("k0"))
        .def_static("by_name", &lseries::by_name, py::arg("family"), py::arg("k0") = 0.0)
        .def_property_readonly("name", &lseries::name)
        .def_property_readonly("sigma_a", &lseries::sigma_a)
        .def_property_readonly("is_signed", &lseries::is_signed)
        .def("coefficient", &lseries::coefficient, py::arg("m"))
        .def(
            "eval",
            [](const lseries& l, double s, double tol) {
                const auto r = l.eval(s, tol);
                return py::make_tuple(r.value, r.tail_bound);
            },
            py::arg("s"), py::arg("tol") = default_tolerance,
            "Returns (value, tail_bound).")
        .def("__repr__", [](const lseries& l) { return "<LSeries " + l.name() + ">"; });

    py::class_<degree_distribution>(m, "DegreeDistribution")
        .def_static("from_lseries", &degree_distribution::from_lseries, py::arg("family"), py::arg("alpha"),
                    py::arg("k_max"))
        .def_static("point_mass", &degree_distribution::point_mass, py::arg("degree"))
        .def_property_readonly("k_max", &degree_distribution::k_max)
        .def_property_readonly("is_signed", &degree_distribution::is_signed)
        .def_property_readonly("tail_mass", &degree_distribution::tail_mass)
        .def("weight", &degree_distribution::weight, py::arg("k"))
        .def("weights", [](const degree_distribution& d) {
            const auto w = d.weights();
            return std::vector<double>(w.begin(), w.end());
        });

    m.def("psi_bipartite", [](const lseries& l1, double a, const lseries& l2, double b) {
        return threshold_dict(psi_bipartite(l1, a, l2, b));
    }, py::arg("l1"), py::arg("alpha"), py::arg("l2"), py::arg("beta"));
    m.def("unipartite_margin", [](const lseries& l, double a) { return threshold_dict(unipartite_margin(l, a)); },
          py::arg("family"), py::arg("alpha"));
    m.def("directed_margin", [](const lseries& l1, double a, const lseries& l2, double b) {
        return threshold_dict(directed_separated_margin(l1, a, l2, b));
    }, py::arg("l1"), py::arg("alpha"), py::arg("l2"), py::arg("beta"));
    m.def("clustering", [](const lseries& l1, double a, const lseries& l2, double b) {
        const auto c = clustering_formula(l1, a, l2, b);
        py::dict d;
        d["value"] = c.value;
        d["f_beta"] = c.f_beta;
        d["in_unit_interval"] = c.in_unit_interval;
        return d;
    }, py::arg("l1"), py::arg("alpha"), py::arg("l2"), py::arg("beta"));
    m.def("critical_exponent", &find_critical_exponent, py::arg("margin"), py::arg("lo"), py::arg("hi"),
          py::arg("tol") = 1e-12);

    m.def("epidemic_threshold_product", &epidemic_threshold_product, py::arg("l1"), py::arg("alpha"),
          py::arg("l2"), py::arg("beta"));
    m.def("critical_transmissibility", &critical_transmissibility, py::arg("family"), py::arg("alpha"));
    m.def("tc_curve", [](const lseries& l1, const lseries& l2, double target, std::array<double, 4> w,
                         std::size_t lines) {
        return tc_curve(l1, l2, target, {w[0], w[1], w[2], w[3]}, lines);
    }, py::arg("l1"), py::arg("l2"), py::arg("target"), py::arg("window"), py::arg("lines") = 200);

    py::class_<graph_sample>(m, "GraphSample")
        .def_property_readonly("mode", [](const graph_sample& g) { return std::string(to_string(g.mode)); })
        .def_readonly("n_a", &graph_sample::n_a)
        .def_readonly("n_b", &graph_sample::n_b)
        .def_readonly("edges", &graph_sample::edges)
        .def_readonly("seed", &graph_sample::seed)
        .def_readonly("redraws", &graph_sample::redraws)
        .def("manifest", [](const graph_sample& g) { return manifest(g).dump(); });

    m.def("sample_bipartite", &sample_bipartite, py::arg("p"), py::arg("q"), py::arg("n_a"), py::arg("n_b"),
          py::arg("seed"));
    m.def("giant_component_fraction", &giant_component_fraction, py::arg("graph"));
    m.def("sir_percolation", [](const graph_sample& g, double t_mf, double t_fm, std::size_t trials,
                                std::uint64_t seed, unsigned threads) {
        const auto s = sir_percolation(g, {t_mf, t_fm}, trials, seed, 0.01, threads);
        py::dict d;
        d["mean_outbreak_a"] = s.mean_outbreak_a;
        d["mean_outbreak_total"] = s.mean_outbreak_total;
        d["giant_fraction"] = s.giant_fraction;
        d["trials"] = s.trials;
        return d;
    }, py::arg("graph"), py::arg("t_mf"), py::arg("t_fm"), py::arg("trials"), py::arg("seed"),
       py::arg("threads") = 0);

    py::class_<phase_scan_result>(m, "ScanResult")
        .def_readonly("formula", &phase_scan_result::formula)
        .def_readonly("alpha_grid", &phase_scan_result::alpha_grid)
        .def_readonly("beta_grid", &phase_scan_result::beta_grid)
        .def_readonly("margin", &phase_scan_result::margin)
        .def_readonly("zero_curve", &phase_scan_result::zero_curve)
        .def_readonly("clipped", &phase_scan_result::clipped)
        .def("label", [](const phase_scan_result& r, std::size_t i, std::size_t j) {
            return std::string(to_string(r.label(i, j)));
        })
        .def("export_csv", &export_csv, py::arg("path"))
        .def("export_json", &export_json, py::arg("path"));

    m.def("known_formula_tags", &known_formula_tags);
    m.def("scan", [](const std::string& tag, std::size_t resolution, std::optional<std::array<double, 4>> window,
                     double tol, unsigned threads) {
        const auto f = formula_by_tag(tag);
        return scan(f, window_from(window, f), {resolution, resolution, tol, threads});
    }, py::arg("tag"), py::arg("resolution") = 200, py::arg("window") = py::none(),
       py::arg("tol") = scan_tolerance, py::arg("threads") = 0);
    m.def("import_csv", &import_csv, py::arg("path"));
}
