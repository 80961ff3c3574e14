// Python module: exact classes and the verification suites.  All scalars
// cross the boundary as fractions.Fraction (or exact strings); floats are
// rejected so no precision is ever lost.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "fanolines/checks.hpp"
#include "fanolines/chow.hpp"
#include "fanolines/hurwitz.hpp"
#include "fanolines/local_geometry.hpp"
#include "fanolines/schubert.hpp"

namespace py = pybind11;
using namespace fanolines;

namespace {

py::object fraction(const Rat& r) {
    return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

// ints, Fractions and strings round-trip exactly through their str() form
Rat to_rat(py::handle h) {
    if (py::isinstance<py::float_>(h))
        throw py::type_error("floats are not exact; pass an int, Fraction, or string");
    return rat_from_string(py::cast<std::string>(py::str(h)));
}

py::dict check_dict(const CheckResult& r) {
    py::dict d;
    d["id"] = r.id;
    d["description"] = r.description;
    d["expected"] = r.expected;
    d["computed"] = r.computed;
    d["status"] = r.status;
    d["runtime_ms"] = r.runtime_ms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact intersection calculus for the family of lines on a cubic fourfold";

    // --- Chow ring of the Grassmannian G(2,6) in the Schubert basis ---------
    py::class_<SchubertClass>(m, "SchubertClass")
        .def_static(
            "sigma", [](const std::vector<int>& parts) { return SchubertClass::sigma(Partition(parts)); },
            py::arg("parts"), "special Schubert class for a partition, e.g. sigma([3, 1])")
        .def_static("constant", [](py::handle c) { return SchubertClass::constant(to_rat(c)); })
        .def("coeff",
             [](const SchubertClass& s, const std::vector<int>& p) { return fraction(s.coeff(Partition(p))); })
        .def("codimension", &SchubertClass::codimension)
        .def("is_zero", &SchubertClass::is_zero)
        .def(
            "integrate", [](const SchubertClass& s) { return fraction(integrate_G(s)); },
            "pairing with the fundamental class; requires codimension 8 or zero")
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__mul__", [](const SchubertClass& s, py::handle c) { return s * to_rat(c); })
        .def("__rmul__", [](const SchubertClass& s, py::handle c) { return s * to_rat(c); })
        .def("__pow__", [](const SchubertClass& s, unsigned e) { return s.pow(e); })
        .def("__str__", &SchubertClass::to_string)
        .def("__repr__", &SchubertClass::to_string);

    m.def(
        "lr_coefficients",
        [](const std::vector<int>& lam, const std::vector<int>& mu) {
            py::dict out;
            for (const auto& [nu, c] : lr_expand(Partition(lam), Partition(mu), Box{}))
                out[py::tuple(py::cast(nu.parts))] = c;
            return out;
        },
        py::arg("lam"), py::arg("mu"),
        "Littlewood-Richardson expansion of sigma_lam * sigma_mu inside G(2,6)");

    // --- Chow ring of the variety of lines F, generated by H_F and c2 -------
    py::class_<FClass>(m, "FClass")
        .def_static("parse", [](const std::string& text) { return FClass::parse(text); }, py::arg("text"))
        .def_static("H_F", &FClass::H_F)
        .def_static("c2", &FClass::c2)
        .def_static("constant", [](py::handle c) { return FClass::constant(to_rat(c)); })
        .def("coeff", [](const FClass& a, int i, int j) { return fraction(a.coeff(i, j)); }, py::arg("H_power"),
             py::arg("c2_power"))
        .def("is_zero", &FClass::is_zero)
        .def(
            "integrate", [](const FClass& a) { return fraction(integrate_F(a)); },
            "degree of a codimension-4 class (zero allowed)")
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__mul__", [](const FClass& a, py::handle c) { return a * to_rat(c); })
        .def("__rmul__", [](const FClass& a, py::handle c) { return a * to_rat(c); })
        .def("__pow__", [](const FClass& a, unsigned e) { return a.pow(e); })
        .def("__str__", &FClass::to_string)
        .def("__repr__", &FClass::to_string);

    // --- multiples of powers of the hyperplane class on the cubic X ---------
    py::class_<XClass>(m, "XClass")
        .def(py::init([](py::handle r, int d) { return XClass(to_rat(r), d); }), py::arg("scalar"),
             py::arg("power"))
        .def_static("H_X", &XClass::H_X, py::arg("power") = 1)
        .def("scalar", [](const XClass& x) { return fraction(x.scalar()); })
        .def("power", &XClass::power)
        .def("is_zero", &XClass::is_zero)
        .def(
            "integrate", [](const XClass& x) { return fraction(integrate_X(x)); },
            "degree of a 0-cycle on X; requires power 4")
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__mul__", [](const XClass& x, py::handle c) { return x * to_rat(c); })
        .def("__rmul__", [](const XClass& x, py::handle c) { return x * to_rat(c); })
        .def("__str__", &XClass::to_string)
        .def("__repr__", &XClass::to_string);

    // --- classes on the universal line I = P(U_F) ----------------------------
    py::class_<IClass>(m, "IClass")
        .def(py::init<FClass, FClass>(), py::arg("alpha"), py::arg("beta"),
             "alpha + l*beta with alpha, beta pulled back from F")
        .def_static("l", &IClass::l)
        .def_static("l_power", &IClass::l_power, py::arg("k"))
        .def("alpha", &IClass::alpha)
        .def("beta", &IClass::beta)
        .def("is_zero", &IClass::is_zero)
        .def("is_homogeneous", &IClass::is_homogeneous, py::arg("degree"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__mul__", [](const IClass& a, py::handle c) { return a * to_rat(c); })
        .def("__rmul__", [](const IClass& a, py::handle c) { return a * to_rat(c); })
        .def("__pow__", [](const IClass& a, unsigned e) { return a.pow(e); })
        .def("__str__", &IClass::to_string)
        .def("__repr__", &IClass::to_string);

    m.def("q_pull", &q_pull, py::arg("a"), "pull a class on F back to the universal line");
    m.def("q_push", &q_push, py::arg("a"), "fibre integration along q: alpha + l*beta -> beta");
    m.def("p_push", &p_push, py::arg("a"), "pushforward to the cubic along the conic fibration p");
    m.def("p_pull", &p_pull, py::arg("x"));
    m.def("transfer_HX", &transfer_HX, py::arg("power"), "q_* p^* H_X^d as a class on F");
    m.def("grothendieck_reduce", &grothendieck_reduce, py::arg("l_coefficients"),
          "normal form of sum_k l^k * coeff[k] under l^2 = l*q*H_F - q*c2");

    // --- the named classes of the geometry -----------------------------------
    m.def("class_of_F", &class_of_F, "class of F inside G(2,6): 27*s[2]^2 - 9*s[1]*s[3] - 18*s[4]");
    m.def("class_S", &class_S, "surface of second-type lines: 5*(H_F^2 - c2)");
    m.def("class_W", &class_W, "discriminant surface of p on X: 75*H_X");
    m.def("lambda_class", &lambda_class, "Hodge class of the conic fibration: 9*H_X");
    m.def("omega_p", &omega_p, "relative dualizing class: q*H_F + l");
    m.def("beta_class", &beta_class);
    m.def("class_Cx", &class_Cx, "curve of lines through a general point of X");
    m.def("class_V", [] { return class_V_pipeline().V; }, "locus of triple lines: 21*c2");
    m.def(
        "strict_transform_V", [] { return class_V_pipeline().tildeV.to_string(); },
        "class of the strict transform of V on the blow-up of F along S");
    m.def("d3_pullback", &d3_pullback);
    m.def("degree_psi", &degree_psi);
    m.def("degree_phi", &degree_phi);

    m.def(
        "curve_genera",
        [] {
            const CurveGeneraResult g = class_C_and_genera();
            py::dict d;
            d["pushdown"] = g.C_pushdown.to_string();
            d["multiplicity_in_S"] = fraction(g.C_in_S_coeff);
            d["degree"] = fraction(g.C_beta_pairing);
            d["g_strict_transform"] = fraction(g.g_tildeC);
            d["g_image"] = fraction(g.g_C);
            d["nodes"] = fraction(g.nodes);
            return d;
        },
        "the curve C = V cap S: degree, genera of the image and its strict transform, node count");

    m.def(
        "residuation_classes",
        [] {
            const RRNResult r = classes_R_Rprime_N();
            py::dict d;
            d["R"] = r.R;
            d["Rprime"] = r.Rprime;
            d["N"] = r.N;
            d["note"] = r.N_alt_form;
            d["V_image"] = r.V_image;
            return d;
        },
        "the residuation correspondence R, its transpose, and N = q^{-1}(V)");

    m.def("identity_suite", [] {
        py::list out;
        for (const IdentityItem& it : identity_suite()) {
            py::dict d;
            d["id"] = it.id;
            d["description"] = it.description;
            d["expected"] = it.expected;
            d["computed"] = it.computed;
            d["pass"] = it.pass;
            out.append(d);
        }
        return out;
    });

    // --- divisor classes on the admissible-covers compactification ----------
    m.def(
        "pairing_R", [] { const M4Class p = pairing_R(); return py::make_tuple(fraction(p.lam), fraction(p.del0)); },
        "pairing of the residuation divisor with (lambda, delta_0)");
    m.def("pairing_Rprime", [] {
        const M4Class p = pairing_Rprime();
        return py::make_tuple(fraction(p.lam), fraction(p.del0));
    });
    m.def(
        "solve_ansatz",
        [](py::handle lam, py::handle del0, int fiber_points) {
            const DivisorAnsatz a = solve_ansatz(M4Class{to_rat(lam), to_rat(del0)}, fiber_points);
            return py::make_tuple(fraction(a.a), fraction(a.b), fraction(a.c));
        },
        py::arg("lam"), py::arg("del0"), py::arg("fiber_points") = 24,
        "coefficients (a, b, c) of a*omega_p + b*p*lambda + c*p*[W] with the given pairing");
    m.def(
        "ansatz_to_I",
        [](py::handle a, py::handle b, py::handle c) {
            return to_I_class(DivisorAnsatz{to_rat(a), to_rat(b), to_rat(c)});
        },
        py::arg("a"), py::arg("b"), py::arg("c"));

    // --- local certificates ---------------------------------------------------
    m.def(
        "minors_certificate",
        [](int power_bound) {
            const MinorsCertificate mc = minors_certificate(power_bound);
            py::dict d;
            d["minor_count"] = mc.minor_count;
            d["nonzero_minors"] = mc.nonzero_minors;
            d["certified"] = mc.origin.verdict == Verdict::True;
            d["powers"] = mc.origin.powers;
            d["note"] = mc.origin.note;
            return d;
        },
        py::arg("power_bound") = 20,
        "maximal-minor certificate that the tangency matrix drops rank only at the origin");
    m.def(
        "normalisation_suite",
        [](int samples, std::uint64_t seed) {
            const NormalisationReport nr = resultant_suite(samples, seed);
            py::dict d;
            d["elimination_ok"] = nr.elimination_ok;
            d["singular_locus_ok"] = nr.singular_locus_ok;
            d["minor_powers"] = nr.minor_powers;
            d["partial_powers"] = nr.partial_powers;
            d["branch_ok"] = nr.branch_ok;
            d["branch_skipped"] = nr.branch_skipped;
            d["samples_checked"] = nr.samples_checked;
            d["note"] = nr.note;
            return d;
        },
        py::arg("samples") = 25, py::arg("seed") = 0,
        "elimination, singular-locus, and branch checks for the discriminant quartic");
    m.def("resultant_quartic", [] { return format_poly(resultant_quartic()); });
    m.def("w_degree", [] {
        const WDegreeReport w = w_degree_report();
        return py::make_tuple(fraction(w.surface_degree), fraction(w.class_coefficient));
    });

    // --- the verification suites ----------------------------------------------
    m.def(
        "run_checks",
        [](std::optional<std::vector<std::string>> suites, std::optional<std::vector<std::string>> only,
           std::uint64_t seed, int samples, int power_bound, long long step_budget) {
            SuiteConfig cfg;
            if (suites) cfg.suites = *suites;
            if (only) cfg.only = *only;
            cfg.seed = seed;
            cfg.samples = samples;
            cfg.power_bound = power_bound;
            cfg.step_budget = step_budget;
            py::list out;
            for (const CheckResult& r : run_checks(cfg).results) out.append(check_dict(r));
            return out;
        },
        py::arg("suites") = py::none(), py::arg("only") = py::none(), py::arg("seed") = 0,
        py::arg("samples") = 25, py::arg("power_bound") = 20, py::arg("step_budget") = 10'000'000,
        "run the named verification suites (or single checks via `only`); returns one dict per check");
    m.def("check_catalog", [] {
        py::list out;
        for (const CheckInfo& c : check_catalog()) {
            py::dict d;
            d["id"] = c.id;
            d["suite"] = c.suite;
            d["description"] = c.description;
            out.append(d);
        }
        return out;
    });
}
