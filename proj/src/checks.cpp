#include "fanolines/checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstring>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fanolines/binary_quadric.hpp"
#include "fanolines/chow.hpp"
#include "fanolines/groebner.hpp"
#include "fanolines/hurwitz.hpp"
#include "fanolines/local_geometry.hpp"
#include "fanolines/sampler.hpp"
#include "fanolines/schubert.hpp"

namespace fanolines {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    std::string expected;
    std::string computed;
    std::string status;  // empty: decided by string comparison
};

std::string rs(const Rat& r) { return to_string(r); }

// decorrelates the streams of the individual randomized checks
std::uint64_t salted(std::uint64_t seed, std::uint64_t salt) {
    return seed ^ (salt * 0x9E3779B97F4A7C15ull);
}

std::string pad(std::string s, size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

template <size_t N>
std::string tuple_str(const std::array<Poly, N>& v) {
    std::string out = "(";
    for (size_t i = 0; i < N; ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

// expensive or shared artifacts, built at most once per run
struct Ctx {
    explicit Ctx(const SuiteConfig& c) : cfg(c) {}

    const SuiteConfig& cfg;

    const std::vector<IdentityItem>& identities() {
        if (!identities_) identities_ = identity_suite();
        return *identities_;
    }
    const ClassVResult& pipeline() {
        if (!pipeline_) pipeline_ = class_V_pipeline();
        return *pipeline_;
    }
    const CurveGeneraResult& genera() {
        if (!genera_) genera_ = class_C_and_genera();
        return *genera_;
    }
    const RRNResult& rrn() {
        if (!rrn_) rrn_ = classes_R_Rprime_N();
        return *rrn_;
    }
    const MinorsCertificate& cert() {
        if (!cert_) {
            Budget budget{cfg.step_budget, 0};
            cert_ = minors_certificate(cfg.power_bound, &budget);
        }
        return *cert_;
    }
    const NormalisationReport& norm() {
        if (!norm_) {
            Budget budget{cfg.step_budget, 0};
            norm_ = resultant_suite(cfg.samples, cfg.seed, &budget);
        }
        return *norm_;
    }
    // every reduced Groebner basis the suite rests on, kept for re-checking
    const std::vector<std::pair<std::string, IdealBasis>>& bases() {
        if (!bases_) {
            Budget budget{cfg.step_budget, 0};
            std::vector<std::pair<std::string, IdealBasis>> out;

            std::vector<Poly> nz;
            for (Poly& m : certificate_minors())
                if (!m.is_zero()) nz.push_back(std::move(m));
            out.emplace_back("tangency-minor", groebner(nz, &budget));

            const Poly R = resultant_quartic();
            std::vector<Poly> partials;
            for (int i = 0; i < 6; ++i) partials.push_back(R.derivative(i));
            out.emplace_back("discriminant-jacobian", groebner(partials, &budget));

            const RingPtr& ring = resultant_ring();
            std::vector<Poly> dets = {Poly::parse(ring, "x1*y2 - x2*y1"),
                                      Poly::parse(ring, "x1*y3 - x3*y1"),
                                      Poly::parse(ring, "x2*y3 - x3*y2")};
            out.emplace_back("rank-one-minor", groebner(dets, &budget));

            out.emplace_back("residual-elimination",
                             eliminate(normalisation_generators(), {"w", "w'"}, &budget));
            bases_ = std::move(out);
        }
        return *bases_;
    }

  private:
    std::optional<std::vector<IdentityItem>> identities_;
    std::optional<ClassVResult> pipeline_;
    std::optional<CurveGeneraResult> genera_;
    std::optional<RRNResult> rrn_;
    std::optional<MinorsCertificate> cert_;
    std::optional<NormalisationReport> norm_;
    std::optional<std::vector<std::pair<std::string, IdealBasis>>> bases_;
};

Outcome identity_outcome(Ctx& c, const char* id) {
    for (const IdentityItem& it : c.identities())
        if (it.id == id) return {it.expected, it.computed, ""};
    throw std::logic_error("identity item missing: " + std::string(id));
}

// ------------------------------------------------------------ random input

FClass random_fclass(Sampler& rng) {
    Poly p = Poly::zero(FClass::ring());
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + 2 * b <= 4; ++b) p.add_term({a, b}, rng.rational(12, 5));
    return FClass(std::move(p));
}

FClass random_fclass_hom(Sampler& rng, int k) {
    Poly p = Poly::zero(FClass::ring());
    for (int b = 0; 2 * b <= k; ++b) p.add_term({k - 2 * b, b}, rng.rational(12, 5));
    return FClass(std::move(p));
}

// a tail that exercises all coefficient slots of the normal forms
NormalFormData generic_tail() {
    NormalFormData d;
    const RingPtr& R = cubic_ring();
    d.Q0 = Poly::parse(R, "x2^2 - x4*x5");
    d.Q1 = Poly::parse(R, "x3^2 + x2*x4");
    d.P = Poly::parse(R, "x2^3 - x5^3");
    return d;
}

// --------------------------------------------- binary-quadric root oracle

struct QRoot {
    bool infinite = false;
    Rat p, q;    // the value p + q*sqrt(d)
    long d = 0;  // squarefree, sign kept; nonzero only when q != 0
    bool operator==(const QRoot&) const = default;
};

long squarefree_part(Int n, Int* square_root_out) {
    Int s(1), sign(1);
    if (n < 0) {
        sign = -1;
        n = -n;
    }
    for (Int f(2); f * f <= n; ++f) {
        while (n % (f * f) == 0) {
            n /= f * f;
            s *= f;
        }
    }
    *square_root_out = s;
    Int d = sign * n;
    return d.get_si();
}

std::array<QRoot, 2> quadric_roots(const BinaryQuadric& q) {
    std::array<QRoot, 2> out;
    if (q.a == 0) {
        out[0].infinite = true;
        if (q.b == 0)
            out[1].infinite = true;
        else
            out[1].p = -q.c / q.b;
        return out;
    }
    Rat disc = discriminant(q);
    if (disc == 0) {
        out[0].p = out[1].p = -q.b / (2 * q.a);
        return out;
    }
    Int sq;
    long d = squarefree_part(disc.get_num() * disc.get_den(), &sq);
    Rat scale(sq, disc.get_den());
    scale.canonicalize();
    if (d == 1) {
        out[0].p = (-q.b + scale) / (2 * q.a);
        out[1].p = (-q.b - scale) / (2 * q.a);
    } else {
        out[0].p = out[1].p = -q.b / (2 * q.a);
        out[0].q = scale / (2 * q.a);
        out[1].q = -out[0].q;
        out[0].d = out[1].d = d;
    }
    return out;
}

int oracle_common_roots(const BinaryQuadric& q0, const BinaryQuadric& q1) {
    auto r0 = quadric_roots(q0), r1 = quadric_roots(q1);
    std::array<bool, 2> used = {false, false};
    int count = 0;
    for (const QRoot& r : r0)
        for (size_t j = 0; j < 2; ++j)
            if (!used[j] && r1[j] == r) {
                used[j] = true;
                ++count;
                break;
            }
    return count;
}

// ------------------------------------------------------- groebner helpers

Poly spoly(const Poly& f, const Poly& g) {
    const Exponents& ef = f.leading_monomial();
    const Exponents& eg = g.leading_monomial();
    Exponents mf(ef.size(), 0), mg(ef.size(), 0);
    for (size_t i = 0; i < ef.size(); ++i) {
        int l = std::max(ef[i], eg[i]);
        mf[i] = l - ef[i];
        mg[i] = l - eg[i];
    }
    return Poly::monomial(f.ring(), mf, 1 / f.leading_coeff()) * f -
           Poly::monomial(g.ring(), mg, 1 / g.leading_coeff()) * g;
}

// ---------------------------------------------------------- the checks

// schubert ------------------------------------------------------------

Outcome chk_sch_class_F(Ctx&) {
    const SchubertClass s1 = SchubertClass::sigma({1});
    const SchubertClass s2 = SchubertClass::sigma({2});
    const SchubertClass s3 = SchubertClass::sigma({3});
    const SchubertClass s4 = SchubertClass::sigma({4});
    const SchubertClass quoted = s2 * s2 * 27 - s1 * s3 * 9 - s4 * 18;
    return {quoted.to_string(), class_of_F().to_string(), ""};
}

Outcome chk_sch_duality(Ctx&) {
    const Box box;
    std::vector<Partition> parts;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= a; ++b) parts.push_back(Partition{a, b});
    for (const Partition& lam : parts)
        for (const Partition& mu : parts) {
            if (lam.weight() + mu.weight() != 8) continue;
            const Rat got =
                integrate_G(SchubertClass::sigma(lam, box) * SchubertClass::sigma(mu, box));
            const Rat want = (mu == box.complement(lam)) ? 1 : 0;
            if (got != want)
                return {"ok",
                        "pairing of " + SchubertClass::sigma(lam, box).to_string() + " with " +
                            SchubertClass::sigma(mu, box).to_string() + " is " + rs(got) +
                            ", not " + rs(want),
                        ""};
        }
    return {"ok", "ok", ""};
}

Outcome chk_sch_lr(Ctx&) {
    const Box box;
    std::vector<Partition> parts;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= a; ++b) parts.push_back(Partition{a, b});
    const SchubertClass one = SchubertClass::sigma(Partition{}, box);
    for (const Partition& lam : parts) {
        const SchubertClass sl = SchubertClass::sigma(lam, box);
        if (sl * one != sl) return {"ok", "unit law fails at " + sl.to_string(), ""};
        for (const Partition& mu : parts) {
            const SchubertClass sm = SchubertClass::sigma(mu, box);
            const SchubertClass prod = sl * sm;
            if (prod != sm * sl)
                return {"ok", "commutativity fails at " + sl.to_string() + ", " + sm.to_string(),
                        ""};
            if (!prod.is_zero() && prod.codimension() != lam.weight() + mu.weight())
                return {"ok", "grading fails at " + sl.to_string() + ", " + sm.to_string(), ""};
            for (const auto& [p, c] : lr_expand(lam, mu, box))
                if (c < 0)
                    return {"ok",
                            "negative multiplicity in " + sl.to_string() + " * " + sm.to_string(),
                            ""};
            for (const Partition& nu : parts) {
                if (lam.weight() + mu.weight() + nu.weight() > 8) continue;
                const SchubertClass sn = SchubertClass::sigma(nu, box);
                if ((sl * sm) * sn != sl * (sm * sn))
                    return {"ok",
                            "associativity fails at " + sl.to_string() + ", " + sm.to_string() +
                                ", " + sn.to_string(),
                            ""};
            }
        }
    }
    return {"ok", "ok", ""};
}

Outcome chk_sch_sigma1_pow8(Ctx&) {
    return {"14", rs(integrate_G(SchubertClass::sigma({1}).pow(8))), ""};
}

Outcome chk_sch_sym3_c4(Ctx&) {
    const TautExpr quoted =
        TautExpr::e1().pow(2) * TautExpr::e2() * 18 + TautExpr::e2().pow(2) * 9;
    return {quoted.to_string(), sym_power_chern(3).graded_piece(4).to_string(), ""};
}

Outcome chk_sch_whitney(Ctx&) {
    const TautExpr cU = TautExpr::constant(1) - TautExpr::e1() + TautExpr::e2();
    TautExpr cQ = TautExpr::constant(1);
    for (int i = 1; i <= 4; ++i) cQ = cQ + sigma_taut(i);
    const SchubertClass diff = taut_to_schubert(cU * cQ - TautExpr::constant(1));
    return {"0", diff.is_zero() ? "0" : diff.to_string(), ""};
}

// chow ----------------------------------------------------------------

Outcome chk_d3_pullback(Ctx&) { return {XClass(126, 1).to_string(), d3_pullback().to_string(), ""}; }

Outcome chk_V_image(Ctx& c) { return {XClass(126, 1).to_string(), c.rrn().V_image.to_string(), ""}; }

Outcome chk_V_pluecker(Ctx& c) {
    return {"945", rs(integrate_F(c.pipeline().V * FClass::H_F().pow(2))), ""};
}

Outcome chk_blowup_table(Ctx&) {
    const BlClass H = BlClass::H(), E = BlClass::E();
    const std::array<BlClass, 5> mono = {H.pow(4), H.pow(3) * E, H.pow(2) * E.pow(2),
                                         H * E.pow(3), E.pow(4)};
    std::string got;
    for (const BlClass& m : mono) {
        if (!got.empty()) got += ", ";
        got += rs(blowup_eval(m));
    }
    return {"108, 0, -315, -945, -1710", got, ""};
}

Outcome chk_blowdown_id(Ctx& c) {
    Sampler rng(salted(c.cfg.seed, 1));
    for (int trial = 0; trial < 100; ++trial) {
        const FClass a = random_fclass(rng);
        if (blowdown_push(BlClass::pull_from_F(a)) != a)
            return {"ok", "pushdown of the pullback differs at " + a.to_string(), ""};
    }
    return {"ok", "ok", ""};
}

Outcome chk_projection_formula(Ctx& c) {
    Sampler rng(salted(c.cfg.seed, 2));
    auto same = [](const XClass& u, const XClass& v) {
        return (u.is_zero() && v.is_zero()) || u == v;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const int d = static_cast<int>(rng.int_in(1, 4));
        const int e = static_cast<int>(rng.int_in(0, 5 - d));
        const IClass a(random_fclass_hom(rng, d), random_fclass_hom(rng, d - 1));
        const XClass x(rng.nonzero_rational(9, 4), e);
        if (!same(p_push(a * p_pull(x)), p_push(a) * x))
            return {"ok",
                    "projection formula fails for " + a.to_string() + " against " + x.to_string(),
                    ""};
    }
    return {"ok", "ok", ""};
}

Outcome chk_classN(Ctx& c) {
    const IClass& N = c.rrn().N;
    const IClass via_lg =
        grothendieck_reduce({FClass::zero(), FClass::H_F() * 21, FClass::constant(-21)});
    const IClass via_quadratic =
        grothendieck_reduce({FClass::c2() * 25, FClass::H_F() * (-4), FClass::constant(4)});
    const std::string expected = q_pull(FClass::c2() * 21).to_string();
    if (via_lg != N) return {expected, "21*(l*q*H_F - l^2) reduces to " + via_lg.to_string(), ""};
    if (via_quadratic != N)
        return {expected, "4l^2 - 4l*q*H_F + 25*q*c2 reduces to " + via_quadratic.to_string(), ""};
    return {expected, N.to_string(), ""};
}

Outcome chk_classR(Ctx& c) {
    return {IClass(FClass::H_F() * 4, FClass::constant(1)).to_string(), c.rrn().R.to_string(), ""};
}

Outcome chk_classRprime(Ctx& c) {
    return {IClass(FClass::H_F() * 4, FClass::constant(16)).to_string(),
            c.rrn().Rprime.to_string(), ""};
}

Outcome chk_classtV(Ctx& c) {
    const BlClass quoted = BlClass::pull_from_F(FClass::c2()) + BlClass::H().pow(2) * 20 -
                           BlClass::H() * BlClass::E() * 18 + BlClass::E().pow(2) * 4;
    return {quoted.to_string(), c.pipeline().tildeV.to_string(), ""};
}

Outcome chk_SV_1890(Ctx& c) {
    return {"1890", rs(integrate_F(class_S() * c.pipeline().V)), ""};
}

Outcome chk_genus_C(Ctx& c) { return {"8506", rs(c.genera().g_C), ""}; }
Outcome chk_genus_tC(Ctx& c) { return {"4726", rs(c.genera().g_tildeC), ""}; }
Outcome chk_nodes(Ctx& c) { return {"3780", rs(c.genera().nodes), ""}; }
Outcome chk_phi(Ctx&) { return {"16", std::to_string(degree_phi()), ""}; }
Outcome chk_psi(Ctx&) { return {"24", std::to_string(degree_psi()), ""}; }

Outcome chk_S_class(Ctx&) {
    const FClass s = class_S();
    const FClass quoted = (FClass::H_F().pow(2) - FClass::c2()) * 5;
    return {quoted.to_string() + "; deg = 315; self-pairing = 1125",
            s.to_string() + "; deg = " + rs(integrate_F(s * FClass::H_F().pow(2))) +
                "; self-pairing = " + rs(integrate_F(s * s)),
            ""};
}

Outcome chk_class_V(Ctx& c) {
    return {(FClass::c2() * 21).to_string(), c.pipeline().V.to_string(), ""};
}

// hurwitz -------------------------------------------------------------

Outcome chk_app_R(Ctx&) { return {M4Class{96, -10}.to_string(), pairing_R().to_string(), ""}; }

Outcome chk_app_Rprime(Ctx&) {
    return {M4Class{456, -52}.to_string(), pairing_Rprime().to_string(), ""};
}

Outcome chk_app_ansatz_R(Ctx&) {
    return {DivisorAnsatz{4, 8, -1}.to_string(), solve_ansatz(pairing_R(), 24).to_string(), ""};
}

Outcome chk_app_ansatz_Rprime(Ctx&) {
    return {DivisorAnsatz{4, 68, -8}.to_string(), solve_ansatz(pairing_Rprime(), 24).to_string(),
            ""};
}

Outcome chk_app_consistency(Ctx&) {
    const M4Class pr = pairing_R(), pp = pairing_Rprime();
    const std::string got = mumford_pair(solve_ansatz(pr, 24)).to_string() + "; " +
                            mumford_pair(solve_ansatz(pp, 24)).to_string();
    return {pr.to_string() + "; " + pp.to_string(), got, ""};
}

Outcome chk_app_roundtrip(Ctx& c) {
    const std::string got = to_I_class(solve_ansatz(pairing_R(), 24)).to_string() + "; " +
                            to_I_class(solve_ansatz(pairing_Rprime(), 24)).to_string();
    return {c.rrn().R.to_string() + "; " + c.rrn().Rprime.to_string(), got, ""};
}

// local ---------------------------------------------------------------

Outcome chk_deg_W(Ctx&) {
    const WDegreeReport w = w_degree_report();
    return {"225 = 3 * 75", rs(w.surface_degree) + " = 3 * " + rs(w.class_coefficient), ""};
}

Outcome chk_dual_map(Ctx&) {
    const DualLineImage im = dual_map_image(build_cubic(CubicKind::Type2, generic_tail()));
    return {"(0, 0, 0, 0, s^2, t^2), rank 2",
            tuple_str(im.gradient) + ", rank " + std::to_string(im.span_rank), ""};
}

Outcome chk_type1(Ctx&) {
    const TransversalityReport r =
        transversality_at_line(build_cubic(CubicKind::Type1, generic_tail()), CubicKind::Type1);
    return {"(0, 0, 2*a, 1) and (0, 0, 1, 0); rank 2; smooth",
            tuple_str(r.grad_T2) + " and " + tuple_str(r.grad_T3) + "; rank " +
                std::to_string(r.rank) + "; " + (r.smooth ? "smooth" : "singular"),
            ""};
}

Outcome chk_type2(Ctx&) {
    const TransversalityReport r =
        transversality_at_line(build_cubic(CubicKind::Type2, generic_tail()), CubicKind::Type2);
    return {"(0, 0, 0, 2*a) and (0, 0, 0, 1); rank 1; singular",
            tuple_str(r.grad_T2) + " and " + tuple_str(r.grad_T3) + "; rank " +
                std::to_string(r.rank) + "; " + (r.smooth ? "smooth" : "singular"),
            ""};
}

Outcome chk_pencil_oracle(Ctx& c) {
    Sampler rng(salted(c.cfg.seed, 4));
    auto random_quadric = [&] {
        for (;;) {
            BinaryQuadric q{Rat(static_cast<long>(rng.int_in(-4, 4))),
                            Rat(static_cast<long>(rng.int_in(-4, 4))),
                            Rat(static_cast<long>(rng.int_in(-4, 4)))};
            if (!q.is_zero()) return q;
        }
    };
    for (int trial = 0; trial < 500; ++trial) {
        const PencilPair p{random_quadric(), random_quadric()};
        const PencilClass got = classify_pencil(p);
        const int want = oracle_common_roots(p.q0, p.q1);
        if (got.common_roots != want)
            return {"ok",
                    "pencil " + std::to_string(trial) + ": classified " +
                        std::to_string(got.common_roots) + " common roots, oracle found " +
                        std::to_string(want),
                    ""};
        if (got.common_roots == 2) {
            const auto roots = quadric_roots(p.q0.is_zero() ? p.q1 : p.q0);
            if (got.double_root != (roots[0] == roots[1]))
                return {"ok", "pencil " + std::to_string(trial) + ": double-root flag disagrees",
                        ""};
        }
    }
    return {"ok", "ok", ""};
}

Outcome chk_fiber_degree(Ctx& c) {
    Sampler rng(salted(c.cfg.seed, 3));
    int checked = 0;
    while (checked < 100) {
        const BinaryQuadric q0{rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3)};
        const BinaryQuadric q1{rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3)};
        if (q0.is_zero() && q1.is_zero()) continue;
        const PencilPair p{q0, q1};
        if (classify_pencil(p).common_roots != 0) continue;
        const Rat x0 = rng.rational(7, 3), x1 = rng.rational(7, 3);
        if (x0 == 0 && x1 == 0) continue;
        if (fiber_degree_check(p, x0, x1).degree != 2)
            return {"ok", "fibre of sample " + std::to_string(checked) + " is not a double point",
                    ""};
        ++checked;
    }
    return {"ok", "ok", ""};
}

Outcome chk_minors(Ctx& c) {
    const MinorsCertificate& cert = c.cert();
    const std::string expected =
        "66 minors (51 nonzero); origin-only vanishing certified (powers 9, 9)";
    std::ostringstream out;
    out << cert.minor_count << " minors (" << cert.nonzero_minors << " nonzero); ";
    if (cert.origin.verdict == Verdict::True) {
        out << "origin-only vanishing certified (powers " << cert.origin.powers[0] << ", "
            << cert.origin.powers[1] << ")";
        return {expected, out.str(), ""};
    }
    if (cert.origin.verdict == Verdict::Inconclusive) {
        out << "inconclusive: " << cert.origin.note;
        return {expected, out.str(), "inconclusive"};
    }
    out << "zeros away from the origin: " << cert.origin.note;
    return {expected, out.str(), ""};
}

Outcome chk_rnc_elimination(Ctx& c) {
    const IdealBasis* elim = nullptr;
    for (const auto& [name, basis] : c.bases())
        if (name == "residual-elimination") elim = &basis;
    if (!elim || elim->gens.size() != 1)
        return {resultant_quartic().to_string(),
                std::to_string(elim ? elim->gens.size() : 0) + " generators", ""};
    return {resultant_quartic().to_string(), elim->gens[0].to_string(), ""};
}

Outcome chk_rnc_singular(Ctx& c) {
    const NormalisationReport& n = c.norm();
    auto fmt = [](const std::vector<int>& v) {
        std::string out = "(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(v[i]);
        }
        return out + ")";
    };
    return {"minor powers (2, 2, 2); partial powers (1, 1, 1, 1, 1, 1)",
            "minor powers " + fmt(n.minor_powers) + "; partial powers " + fmt(n.partial_powers),
            ""};
}

Outcome chk_rnc_branches(Ctx& c) {
    const NormalisationReport& n = c.norm();
    if (n.branch_skipped)
        return {"ok", n.note.empty() ? "branch samples disabled" : n.note, "skipped"};
    if (!n.branch_ok) return {"ok", "failed after " + std::to_string(n.samples_checked) +
                                        " samples: " + n.note, ""};
    return {"ok", "ok", ""};
}

Outcome chk_gb_spolys(Ctx& c) {
    Budget budget{c.cfg.step_budget, 0};
    for (const auto& [name, basis] : c.bases())
        for (size_t i = 0; i < basis.gens.size(); ++i)
            for (size_t j = i + 1; j < basis.gens.size(); ++j) {
                const Poly r = normal_form(spoly(basis.gens[i], basis.gens[j]), basis, &budget);
                if (!r.is_zero())
                    return {"0", "nonzero remainder in the " + name + " basis: " + r.to_string(),
                            ""};
            }
    return {"0", "0", ""};
}

// --------------------------------------------------------------- catalog

struct CheckDef {
    const char* id;
    const char* suite;
    const char* description;
    Outcome (*run)(Ctx&);
};

Outcome fwd_L21_HF2c2(Ctx& c) { return identity_outcome(c, "L2.1-HF2c2"); }
Outcome fwd_L21_HF4(Ctx& c) { return identity_outcome(c, "L2.1-HF4"); }
Outcome fwd_L21_c2sq(Ctx& c) { return identity_outcome(c, "L2.1-c2sq"); }
Outcome fwd_L210(Ctx& c) { return identity_outcome(c, "L2.10-lambda9"); }
Outcome fwd_L211(Ctx& c) { return identity_outcome(c, "L2.11-NSF"); }
Outcome fwd_L22_HF2s2(Ctx& c) { return identity_outcome(c, "L2.2-HF2s2"); }
Outcome fwd_L22_s2sq(Ctx& c) { return identity_outcome(c, "L2.2-s2sq"); }
Outcome fwd_L23(Ctx& c) { return identity_outcome(c, "L2.3-betaHF"); }
Outcome fwd_L24(Ctx& c) { return identity_outcome(c, "L2.4-transfer"); }
Outcome fwd_L25(Ctx& c) { return identity_outcome(c, "L2.5-omegap"); }
Outcome fwd_L26(Ctx& c) { return identity_outcome(c, "L2.6-grothendieck"); }
Outcome fwd_L27_HF2(Ctx& c) { return identity_outcome(c, "L2.7-pushHF2"); }
Outcome fwd_L27_l2(Ctx& c) { return identity_outcome(c, "L2.7-pushl2"); }
Outcome fwd_L27_lqHF(Ctx& c) { return identity_outcome(c, "L2.7-pushlqHF"); }
Outcome fwd_L28(Ctx& c) { return identity_outcome(c, "L2.8-W75"); }
Outcome fwd_L29(Ctx& c) { return identity_outcome(c, "L2.9-omegaS180"); }

const std::vector<CheckDef>& definitions() {
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> d = {
            {"D3-pullback", "chow",
             "pullback of the degree-3 discriminant divisor class along the family of "
             "hyperplane curves",
             chk_d3_pullback},
            {"L2.1-HF2c2", "chow", "H_F^2.c2 on the variety of lines", fwd_L21_HF2c2},
            {"L2.1-HF4", "chow", "H_F^4 on the variety of lines", fwd_L21_HF4},
            {"L2.1-c2sq", "chow", "c2^2 on the variety of lines", fwd_L21_c2sq},
            {"L2.10-lambda9", "chow", "Hodge class of the conic fibration p", fwd_L210},
            {"L2.11-NSF", "chow", "H_S^2 recomputed as H_F^2.[S] in the ambient calculus",
             fwd_L211},
            {"L2.2-HF2s2", "chow", "H_F^2.(H_F^2 - c2)", fwd_L22_HF2s2},
            {"L2.2-s2sq", "chow", "(H_F^2 - c2)^2", fwd_L22_s2sq},
            {"L2.3-betaHF", "chow", "beta.H_F with beta = (1/36)H_F^3", fwd_L23},
            {"L2.4-transfer", "chow",
             "point transfer: q_push of l^4 pairs with H_F like (1/6)H_F^3", fwd_L24},
            {"L2.5-omegap", "chow", "relative dualizing class of p", fwd_L25},
            {"L2.6-grothendieck", "chow",
             "normal form of l^2, the sign forced by the q-pushforward values", fwd_L26},
            {"L2.7-pushHF2", "chow", "p_push(q_pull(H_F^2))", fwd_L27_HF2},
            {"L2.7-pushl2", "chow", "p_push(l^2)", fwd_L27_l2},
            {"L2.7-pushlqHF", "chow", "p_push(l.q_pull(H_F))", fwd_L27_lqHF},
            {"L2.8-W75", "chow", "discriminant class of the conic fibration p", fwd_L28},
            {"L2.9-omegaS180", "chow", "p_push(omega_p.q_pull([S]))", fwd_L29},
            {"V-image-126", "chow",
             "image of the second-type surface in the cubic fourfold: p_push(q_pull([V]))",
             chk_V_image},
            {"V-pluecker-945", "chow", "degree of V against H_F^2", chk_V_pluecker},
            {"app-R", "hurwitz",
             "admissible-covers pushforward pairing of the residuation divisor", chk_app_R},
            {"app-Rprime", "hurwitz",
             "admissible-covers pushforward pairing of the transposed residuation divisor",
             chk_app_Rprime},
            {"app-ansatz-R", "hurwitz",
             "divisor ansatz a*omega + b*lambda + c*[W] solved for the residuation divisor",
             chk_app_ansatz_R},
            {"app-ansatz-Rprime", "hurwitz",
             "divisor ansatz solved for the transposed residuation divisor",
             chk_app_ansatz_Rprime},
            {"app-consistency", "hurwitz",
             "genus-4 Mumford pairing of each solved ansatz returns its input pairing",
             chk_app_consistency},
            {"app-roundtrip", "hurwitz",
             "solved ansatz classes transported to the line family match the intersection-"
             "theoretic classes",
             chk_app_roundtrip},
            {"blowup-table", "chow",
             "monomial degrees H^4, H^3E, H^2E^2, HE^3, E^4 on the blowup of F along S",
             chk_blowup_table},
            {"chow-blowdown-id", "chow",
             "pushforward after pullback is the identity on 100 seeded classes",
             chk_blowdown_id},
            {"chow-projection-formula", "chow",
             "p_push(a.p_pull(x)) = p_push(a).x on 100 seeded pairs", chk_projection_formula},
            {"classN", "chow",
             "preimage of V in the universal line family; equals 21*(l*q*H_F - l^2) under the "
             "adopted relation l^2 = l*q*H_F - q*c2, and the reduction of 4l^2 - 4l*q*H_F + "
             "25*q*c2; the opposite sign convention writes the same class as 21*(l^2 - l*q*H_F)",
             chk_classN},
            {"classR", "chow", "residuation correspondence class on the universal line family",
             chk_classR},
            {"classRprime", "chow", "transposed residuation correspondence class", chk_classRprime},
            {"classtV-symbolic", "chow",
             "class of the strict transform of V on the blowup, from the bundle pipeline",
             chk_classtV},
            {"cor-SV-1890", "chow", "intersection number [S].[V]", chk_SV_1890},
            {"deg-W-225", "local",
             "degree of the second-type surface W in the cubic fourfold and its class "
             "coefficient",
             chk_deg_W},
            {"dual-map-image", "local",
             "gradient image of a second-type line under the dual map of the cubic",
             chk_dual_map},
            {"fiber-degree", "local",
             "the residual double cover has fibre degree 2 at 100 seeded points",
             chk_fiber_degree},
            {"gb-spolys", "local",
             "every S-polynomial of every Groebner basis built by the suite reduces to zero",
             chk_gb_spolys},
            {"genus-C", "chow", "arithmetic genus of the curve V.S", chk_genus_C},
            {"genus-tC", "chow", "genus of the normalized curve on the blowup", chk_genus_tC},
            {"nodes-3780", "chow", "node count of the curve V.S", chk_nodes},
            {"pencil-oracle", "local",
             "pencil classification agrees with the quadratic-extension root oracle on 500 "
             "seeded pencils",
             chk_pencil_oracle},
            {"phi-degree", "chow", "degree of the residuation self-map factor phi", chk_phi},
            {"psi-degree", "chow", "degree of the trigonal correspondence psi", chk_psi},
            {"rnc-branches", "local",
             "two analytic branches with independent normals at seeded points of the "
             "discriminant quartic",
             chk_rnc_branches},
            {"rnc-elimination", "local",
             "eliminating the two normalization variables recovers exactly the discriminant "
             "quartic",
             chk_rnc_elimination},
            {"rnc-singular-locus", "local",
             "two-sided radical membership between the Jacobian ideal and the rank-one locus",
             chk_rnc_singular},
            {"sch-class-F", "schubert",
             "class of the variety of lines as the quoted quartic Schubert combination",
             chk_sch_class_F},
            {"sch-duality", "schubert",
             "complementary Schubert classes pair to 1, all other degree-8 pairs to 0",
             chk_sch_duality},
            {"sch-lr-properties", "schubert",
             "Littlewood-Richardson products: unit, commutativity, associativity, grading, "
             "nonnegative multiplicities",
             chk_sch_lr},
            {"sch-sigma1-pow8", "schubert", "degree of the Grassmannian: sigma_1^8",
             chk_sch_sigma1_pow8},
            {"sch-sym3-c4", "schubert",
             "degree-4 Chern piece of the third symmetric power of the dual tautological bundle",
             chk_sch_sym3_c4},
            {"sch-whitney", "schubert",
             "Whitney product of the tautological and quotient Chern classes is 1 in the "
             "Schubert basis",
             chk_sch_whitney},
            {"thm-S-class", "chow",
             "class of the surface of second-type lines, its degree and self-pairing",
             chk_S_class},
            {"thm-class-V", "chow",
             "class of the surface swept by second-type lines, from the blowup pipeline",
             chk_class_V},
            {"tvconn-minors", "local",
             "maximal minors of the tangency matrix vanish simultaneously only at the origin",
             chk_minors},
            {"type1-transversality", "local",
             "slope-equation gradients along a first-type line: rank 2, smooth curve point",
             chk_type1},
            {"type2-transversality", "local",
             "slope-equation gradients along a second-type line: rank 1, singular curve point",
             chk_type2},
        };
        for (size_t i = 1; i < d.size(); ++i)
            if (std::strcmp(d[i - 1].id, d[i].id) >= 0)
                throw std::logic_error(std::string("check catalog out of order at ") + d[i].id);
        return d;
    }();
    return defs;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> out;
        for (const CheckDef& d : definitions()) out.push_back({d.id, d.suite, d.description});
        return out;
    }();
    return infos;
}

SuiteReport run_checks(const SuiteConfig& config) {
    static const std::set<std::string> known_suites = {"schubert", "chow", "hurwitz", "local",
                                                       "all"};
    for (const std::string& s : config.suites)
        if (!known_suites.count(s)) throw std::invalid_argument("unknown suite: " + s);
    std::set<std::string> only_ids;
    for (const std::string& id : config.only) {
        bool found = false;
        for (const CheckDef& d : definitions()) found = found || id == d.id;
        if (!found) throw std::invalid_argument("unknown check id: " + id);
        only_ids.insert(id);
    }

    const bool all = config.suites.empty() ||
                     std::find(config.suites.begin(), config.suites.end(), "all") !=
                         config.suites.end();
    const std::set<std::string> wanted(config.suites.begin(), config.suites.end());

    Ctx ctx{config};
    SuiteReport report;
    for (const CheckDef& d : definitions()) {
        const bool selected =
            !only_ids.empty() ? only_ids.count(d.id) > 0 : (all || wanted.count(d.suite) > 0);
        if (!selected) continue;

        CheckResult r;
        r.id = d.id;
        r.description = d.description;
        const auto t0 = Clock::now();
        try {
            Outcome o = d.run(ctx);
            r.expected = std::move(o.expected);
            r.computed = std::move(o.computed);
            r.status = !o.status.empty() ? o.status
                                         : (r.expected == r.computed ? "pass" : "fail");
        } catch (const BudgetExceeded&) {
            r.status = "inconclusive";
            r.computed = "reduction step budget exhausted";
        } catch (const std::exception& e) {
            r.status = "fail";
            r.computed = std::string("error: ") + e.what();
        }
        r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                           .count();
        report.results.push_back(std::move(r));
    }
    return report;
}

int exit_code(const SuiteReport& report) {
    bool inconclusive = false;
    for (const CheckResult& r : report.results) {
        if (r.status == "fail") return 1;
        if (r.status == "inconclusive") inconclusive = true;
    }
    return inconclusive ? 2 : 0;
}

std::string report_text(const SuiteReport& report) {
    std::ostringstream out;
    int pass = 0, fail = 0, inconclusive = 0, skipped = 0;
    for (const CheckResult& r : report.results) {
        if (r.status == "pass") ++pass;
        else if (r.status == "fail") ++fail;
        else if (r.status == "inconclusive") ++inconclusive;
        else ++skipped;
        out << pad(r.status, 13) << pad(r.id, 26);
        if (r.status == "fail" && !r.expected.empty())
            out << "expected " << r.expected << " | computed " << r.computed;
        else
            out << r.computed;
        out << "\n";
    }
    out << report.results.size() << " checks: " << pass << " pass, " << fail << " fail, "
        << inconclusive << " inconclusive, " << skipped << " skipped\n";
    return out.str();
}

std::string report_json(const SuiteReport& report, const SuiteConfig& config) {
    nlohmann::ordered_json j;
    j["version"] = "0.1.0";
    nlohmann::ordered_json jc;
    jc["suites"] = config.suites;
    jc["only"] = config.only;
    jc["seed"] = config.seed;
    jc["samples"] = config.samples;
    jc["power_bound"] = config.power_bound;
    jc["step_budget"] = config.step_budget;
    j["config"] = std::move(jc);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckResult& r : report.results) {
        nlohmann::ordered_json o;
        o["id"] = r.id;
        o["description"] = r.description;
        o["expected"] = r.expected;
        o["computed"] = r.computed;
        o["status"] = r.status;
        o["runtime_ms"] = r.runtime_ms;
        arr.push_back(std::move(o));
    }
    j["results"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string catalog_text() {
    std::ostringstream out;
    for (const CheckInfo& c : check_catalog())
        out << pad(c.id, 26) << pad(c.suite, 10) << c.description << "\n";
    return out.str();
}

}  // namespace fanolines
