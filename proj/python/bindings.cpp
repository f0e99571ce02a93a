#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tightsfs/classifier.hpp"
#include "tightsfs/continued_fraction.hpp"
#include "tightsfs/convex.hpp"
#include "tightsfs/report_json.hpp"
#include "tightsfs/surgery.hpp"

namespace py = pybind11;
using namespace tightsfs;

namespace {

SeifertInvariants invariants_from(const std::vector<std::pair<i64, i64>>& fibers)
{
    if (fibers.size() != 4)
        throw error(errc::parse_error, "expected four (p, q) pairs");
    SeifertInvariants inv;
    for (std::size_t i = 0; i < 4; ++i)
        inv.fibers[i] = {fibers[i].first, fibers[i].second};
    inv.validate();
    return inv;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact core of the tightsfs classifier";

    static py::exception<error> base_exc(m, "TightsfsError", PyExc_ValueError);
    static py::exception<error> unsupported_exc(m, "UnsupportedRegime", base_exc.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const error& e) {
            std::string msg = std::string(errc_name(e.code())) + ": " + e.what();
            if (e.code() == errc::unsupported_regime)
                py::set_error(unsupported_exc, msg.c_str());
            else
                py::set_error(base_exc, msg.c_str());
        }
    });

    m.def("neg_cf", [](const std::string& r, bool strict) {
        return neg_cf(Rational::parse(r), strict ? cf_mode::strict : cf_mode::relaxed).coeffs;
    }, py::arg("r"), py::arg("strict") = false, "Negative continued fraction of a rational given as 'n/d'.");

    m.def("eval_cf", [](const std::vector<i64>& coeffs) {
        Rational r = eval_cf(NegContinuedFraction{coeffs});
        return std::make_pair(r.num(), r.den());
    }, py::arg("coeffs"), "Evaluate [a0, ..., am]; returns (num, den).");

    m.def("convergents", [](const std::vector<i64>& coeffs) {
        Convergents c = convergents(NegContinuedFraction{coeffs});
        py::dict d;
        d["p"] = c.p;
        d["q"] = c.q;
        d["u"] = c.u;
        d["v"] = c.v;
        return d;
    }, py::arg("coeffs"));

    m.def("act", [](std::array<i64, 4> mat, const std::string& slope) {
        return act(UnimodularMap(mat[0], mat[1], mat[2], mat[3]), Slope::parse(slope)).str();
    }, py::arg("matrix"), py::arg("slope"), "Image of a slope under (a b; c d) given as [a, b, c, d].");

    m.def("euler_number", [](const std::vector<std::pair<i64, i64>>& fibers) {
        return euler_number(invariants_from(fibers));
    }, py::arg("fibers"), "e0 for four (p, q) pairs with coefficients -q/p.");

    m.def("fiber_data", [](i64 p, i64 q) {
        FiberData f = fiber_data(p, q);
        py::dict d;
        d["p"] = f.p;
        d["q"] = f.q;
        d["cf"] = f.cf.coeffs;
        d["u"] = f.u;
        d["v"] = f.v;
        d["attaching"] = std::array<i64, 4>{f.attaching.a, f.attaching.b, f.attaching.c, f.attaching.d};
        d["boundary_slope"] = normalized_boundary_slope(f).str();
        return d;
    }, py::arg("p"), py::arg("q"));

    m.def("solid_torus_count", [](const std::string& slope) {
        return solid_torus_count(Slope::parse(slope));
    }, py::arg("slope"));

    m.def("toric_annulus_count", [](const std::string& s0, const std::string& s1) -> py::object {
        AnnulusCount c = toric_annulus_count(Slope::parse(s0), Slope::parse(s1));
        if (c.holonomy_family)
            return py::str("HOLONOMY_FAMILY");
        return py::int_(c.count);
    }, py::arg("s0"), py::arg("s1"));

    m.def("shirt_count", &shirt_count, py::arg("s"));

    m.def("_shirt_count_audit_json", [](i64 s) { return audit_to_json(shirt_count_audit(s)).dump(); });

    m.def("gluing_counts", []() {
        GluingSummary g = gluing_sweep();
        py::dict d;
        d["pants_states"] = enumerate_pants_states().size();
        d["pairs"] = g.pairs;
        d["overtwisted_pairs"] = g.overtwisted_pairs;
        d["torsion_pairs"] = g.torsion_pairs;
        d["torsion_classes"] = g.torsion_classes.size();
        d["configurations"] = g.configurations.size();
        d["survivors"] = g.survivors.size();
        d["classes"] = g.classes.size();
        std::vector<i64> euler;
        for (const auto& c : g.classes)
            euler.push_back(relative_euler_class(c.front()));
        d["class_euler"] = euler;
        return d;
    });

    m.def("h1_order", [](const std::string& fibers) {
        return h1_order_snf(normalize_diagram(parse_and_normalize(fibers)));
    }, py::arg("fibers"), "Order of H1 (0 if infinite) from the Smith normal form.");

    m.def("_diagram_json", [](const std::string& fibers) {
        return diagram_to_json(normalize_diagram(parse_and_normalize(fibers))).dump();
    });

    m.def("_classify_json", [](const std::string& fibers, bool enumerate) {
        return report_to_json(classify(fibers), enumerate).dump();
    }, py::arg("fibers"), py::arg("enumerate") = true);

    m.def("_verify_json", [](int max_p, int q_factor) {
        py::gil_scoped_release release;
        return sweep_to_json(verify_sweep(max_p, q_factor)).dump();
    }, py::arg("max_p"), py::arg("q_factor") = 2);
}
