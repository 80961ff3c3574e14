#include "fanolines/local_geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "fanolines/chow.hpp"
#include "fanolines/sampler.hpp"

namespace fanolines {

namespace {

constexpr int kRadicalBound = 10;

Poly on_ring(const Poly& p, const RingPtr& ring, const char* slot) {
    if (!p.ring()) return Poly::zero(ring);
    try {
        return p.embedded(ring);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(slot) + ": variables outside the model ring");
    }
}

// homogeneous of the given degree, supported in variables [lo, hi]
void require_form(const Poly& p, int deg, int lo, int hi, const char* slot) {
    if (p.is_zero()) return;
    for (const auto& [e, c] : p.terms()) {
        int total = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            total += e[i];
            if (static_cast<int>(i) < lo || static_cast<int>(i) > hi)
                throw std::invalid_argument(std::string(slot) + ": variable x" + std::to_string(i) +
                                            " not allowed here");
        }
        if (total != deg)
            throw std::invalid_argument(std::string(slot) + ": expected a homogeneous form of degree " +
                                        std::to_string(deg));
    }
}

Poly xvar(int i) { return Poly::variable(cubic_ring(), i); }

}  // namespace

RingPtr cubic_ring() {
    static const RingPtr r = make_ring({"x0", "x1", "x2", "x3", "x4", "x5"});
    return r;
}

RingPtr slope_ring() {
    static const RingPtr r = make_ring({"a", "x1'", "x2", "x3", "x5"});
    return r;
}

RingPtr st_ring() {
    static const RingPtr r = make_ring({"s", "t"});
    return r;
}

CubicForm build_cubic(CubicKind kind, const NormalFormData& data) {
    const RingPtr& R = cubic_ring();
    Poly q0 = on_ring(data.Q0, R, "Q0");
    Poly q1 = on_ring(data.Q1, R, "Q1");
    Poly p = on_ring(data.P, R, "P");
    Poly x0 = xvar(0), x1 = xvar(1), x2 = xvar(2), x3 = xvar(3), x4 = xvar(4), x5 = xvar(5);

    switch (kind) {
        case CubicKind::Type1:
        case CubicKind::Type2:
        case CubicKind::Type2Full: {
            require_form(q0, 2, 2, 5, "Q0");
            require_form(q1, 2, 2, 5, "Q1");
            require_form(p, 3, 2, 5, "P");
            Poly tail = x0 * q0 + x1 * q1 + p;
            if (kind == CubicKind::Type1) return x4 * x0 * x0 + x5 * x0 * x1 + x3 * x1 * x1 + tail;
            if (kind == CubicKind::Type2) return x4 * x0 * x0 + x5 * x1 * x1 + tail;
            Poly h0 = x4 * data.c0 + x5 * data.d0;
            Poly h01 = x4 * data.c01 + x5 * data.d01;
            Poly h1 = x4 * data.c1 + x5 * data.d1;
            return h0 * x0 * x0 + h01 * x0 * x1 + h1 * x1 * x1 + tail;
        }
        case CubicKind::Triple: {
            // slots hold the quadric multipliers of x3, x4, x5
            require_form(q0, 2, 0, 3, "Q0");
            require_form(q1, 2, 0, 4, "Q1");
            require_form(p, 2, 0, 5, "P");
            Poly l = x0 * data.y1 + x1 * data.y2 - x2;
            Poly lp = x0 * data.yp1 + x1 * data.yp2 - x2;
            return x3 * q0 + x4 * q1 + x5 * p + l * l * lp * data.c;
        }
    }
    throw std::invalid_argument("build_cubic: unknown kind");
}

SlopeCurve curve_through_point(const CubicForm& F, CubicKind kind) {
    if (kind != CubicKind::Type1 && kind != CubicKind::Type2)
        throw std::invalid_argument("curve_through_point: needs a first- or second-type normal form");
    Poly f = on_ring(F, cubic_ring(), "F");
    require_form(f, 3, 0, 5, "F");

    const RingPtr& S = slope_ring();
    Poly a = Poly::variable(S, 0), x1p = Poly::variable(S, 1);
    Poly x2 = Poly::variable(S, 2), x3 = Poly::variable(S, 3), x5 = Poly::variable(S, 4);
    Poly x4 = kind == CubicKind::Type1 ? -(a * a * x3 + a * x5) : -(a * a * x5);
    Poly g = f.substitute(S, {Poly::constant(S, Rat(1)), a + x1p, x2, x3, x4, x5});

    // split by degree in the slope directions x1', x2, x3, x5
    std::array<Poly, 4> part = {Poly::zero(S), Poly::zero(S), Poly::zero(S), Poly::zero(S)};
    for (const auto& [e, c] : g.terms())
        part[static_cast<size_t>(e[1] + e[2] + e[3] + e[4])].add_term(e, c);
    if (!part[0].is_zero() || !part[1].is_zero())
        throw std::invalid_argument("curve_through_point: cubic is not in the stated normal form");
    return {part[2], part[3]};
}

SlopeCurve curve_through_point(const CubicForm& F, CubicKind kind, const Rat& a) {
    SlopeCurve sc = curve_through_point(F, kind);
    const RingPtr& S = slope_ring();
    std::vector<Poly> at_a = {Poly::constant(S, a), Poly::variable(S, 1), Poly::variable(S, 2),
                              Poly::variable(S, 3), Poly::variable(S, 4)};
    return {sc.T2.substitute(S, at_a), sc.T3.substitute(S, at_a)};
}

TransversalityReport transversality_at_line(const CubicForm& F, CubicKind kind) {
    SlopeCurve sc = curve_through_point(F, kind);
    const RingPtr& S = slope_ring();
    // the point of l0 sits at (x1', x2, x3, x5) = (1, 0, 0, 0)
    std::vector<Poly> at_point = {Poly::variable(S, 0), Poly::constant(S, Rat(1)), Poly::zero(S),
                                  Poly::zero(S), Poly::zero(S)};
    TransversalityReport rep;
    PolyMatrix jac(S, 2, 4);
    for (int i = 0; i < 4; ++i) {
        rep.grad_T2[static_cast<size_t>(i)] = sc.T2.derivative(i + 1).substitute(S, at_point);
        rep.grad_T3[static_cast<size_t>(i)] = sc.T3.derivative(i + 1).substitute(S, at_point);
        jac.at(0, i) = rep.grad_T2[static_cast<size_t>(i)];
        jac.at(1, i) = rep.grad_T3[static_cast<size_t>(i)];
    }
    rep.rank = rank(jac);
    rep.smooth = rep.rank == 2;
    return rep;
}

DualLineImage dual_map_image(const CubicForm& F) {
    Poly f = on_ring(F, cubic_ring(), "F");
    require_form(f, 3, 0, 5, "F");
    const RingPtr& ST = st_ring();
    std::vector<Poly> on_line = {Poly::variable(ST, 0), Poly::variable(ST, 1), Poly::zero(ST),
                                 Poly::zero(ST),        Poly::zero(ST),        Poly::zero(ST)};
    DualLineImage out;
    RatMatrix coeffs(6, 3);  // columns s^2, s t, t^2
    for (int i = 0; i < 6; ++i) {
        out.gradient[static_cast<size_t>(i)] = f.derivative(i).substitute(ST, on_line);
        for (const auto& [e, c] : out.gradient[static_cast<size_t>(i)].terms())
            coeffs.at(i, 2 - e[0]) = c;
    }
    out.span_rank = rank(coeffs);
    return out;
}

PencilPair residual_pencil(const NormalFormData& data) {
    const RingPtr& R = cubic_ring();
    Poly q0 = on_ring(data.Q0, R, "Q0");
    Poly q1 = on_ring(data.Q1, R, "Q1");
    require_form(q0, 2, 2, 5, "Q0");
    require_form(q1, 2, 2, 5, "Q1");
    auto restrict_quadric = [&](const Poly& q) {
        Exponents e(6, 0);
        e[2] = 2;
        Rat a = q.coeff(e);
        e[2] = 1, e[3] = 1;
        Rat b = q.coeff(e);
        e[2] = 0, e[3] = 2;
        Rat c = q.coeff(e);
        return BinaryQuadric{a, b, c};
    };
    PencilPair p{restrict_quadric(q0), restrict_quadric(q1)};
    if (p.q0.is_zero() && p.q1.is_zero())
        throw std::domain_error("residual_pencil: both quadrics vanish on the plane line");
    return p;
}

PencilClass classify_pencil(const PencilPair& p) {
    BinaryFormReport rep = binary_form_tools(p.q0, p.q1);
    PencilClass out;
    out.common_roots = rep.common_root_count;
    if (rep.common_root_count == 2) {
        const BinaryQuadric& q = p.q0.is_zero() ? p.q1 : p.q0;
        out.double_root = discriminant(q) == 0;
    }
    return out;
}

FiberDegree fiber_degree_check(const PencilPair& p, const Rat& x0, const Rat& x1) {
    BinaryQuadric comb{x0 * p.q0.a + x1 * p.q1.a, x0 * p.q0.b + x1 * p.q1.b,
                       x0 * p.q0.c + x1 * p.q1.c};
    if (comb.is_zero())
        throw std::domain_error("fiber_degree_check: the combination vanishes identically");
    return {2, discriminant(comb) == 0};
}

PolyMatrix tangent_matrix(const std::array<std::array<Poly, 3>, 6>& A, const Poly& c) {
    RingPtr ring = c.ring();
    for (const auto& row : A)
        for (const auto& p : row)
            if (!ring && p.ring()) ring = p.ring();
    if (!ring) throw std::invalid_argument("tangent_matrix: no entry carries a ring");
    auto lift = [&](const Poly& p) { return p.ring() ? p.embedded(ring) : Poly::zero(ring); };

    static constexpr int kRowMono[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                            {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
    auto a_index = [](int i, int j) {
        if (i == 2) return 0;
        if (i == 1) return j == 1 ? 1 : 2;
        return j == 2 ? 3 : (j == 1 ? 4 : 5);
    };

    PolyMatrix m(ring, 10, 12);
    for (int r = 0; r < 10; ++r) {
        for (int u = 0; u < 3; ++u) {
            if (kRowMono[r][u] == 0) continue;
            int e[3] = {kRowMono[r][0], kRowMono[r][1], kRowMono[r][2]};
            --e[u];
            const auto& vec = A[static_cast<size_t>(a_index(e[0], e[1]))];
            for (int j = 0; j < 3; ++j) m.at(r, 3 * u + j) = lift(vec[static_cast<size_t>(j)]);
        }
    }
    m.at(5, 9) = lift(c);
    m.at(8, 10) = lift(c);
    m.at(9, 11) = Poly::constant(ring, Rat(1));
    return m;
}

PolyMatrix certificate_matrix() {
    static const RingPtr R = make_ring({"kappa", "lambda"});
    Poly k = Poly::variable(R, 0), l = Poly::variable(R, 1), z = Poly::zero(R);
    std::array<std::array<Poly, 3>, 6> A = {{
        {k, z, l},  // (2,0,0)
        {z, z, k},  // (1,1,0)
        {l, l, k},  // (1,0,1)
        {z, l, k},  // (0,2,0)
        {l, k, z},  // (0,1,1)
        {z, z, z},  // (0,0,2)
    }};
    return tangent_matrix(A, k);
}

std::vector<Poly> certificate_minors() { return minors(certificate_matrix(), 10); }

MinorsCertificate minors_certificate(int power_bound, Budget* budget) {
    MinorsCertificate out;
    std::vector<Poly> nonzero;
    for (Poly& m : certificate_minors()) {
        ++out.minor_count;
        if (!m.is_zero()) {
            ++out.nonzero_minors;
            nonzero.push_back(std::move(m));
        }
    }
    out.origin = only_origin_vanishing(nonzero, power_bound, budget);
    return out;
}

RingPtr normalisation_ring() {
    static const RingPtr r = make_ring({"w", "w'", "x1", "x2", "x3", "y1", "y2", "y3"});
    return r;
}

RingPtr resultant_ring() {
    static const RingPtr r = make_ring({"x1", "x2", "x3", "y1", "y2", "y3"});
    return r;
}

std::vector<Poly> normalisation_generators() {
    const RingPtr& N = normalisation_ring();
    auto P = [&](const char* s) { return Poly::parse(N, s); };
    return {P("w*x3 - w'*y3"),
            P("w*x2 - w'*y2 + x3*y1 - x1*y3"),
            P("w*x1 - w'*y1 + x2*y1 - x1*y2"),
            P("w'^2 - w'*x2 + x1*x3"),
            P("w*w' - w'*y2 + x3*y1"),
            P("w^2 - w*y2 + y1*y3")};
}

Poly resultant_quartic() {
    return Poly::parse(resultant_ring(), "(x1*y3 - x3*y1)^2 - (x1*y2 - x2*y1)*(x2*y3 - x3*y2)");
}

namespace {

// normal direction of the sheet through [t w' : w' : x : t x]; the generic
// formula degenerates exactly on the w' = x3 = 0 chart
std::vector<Rat> branch_normal(const Rat& wp, const Rat& x3, const Rat& x1, const Rat& x2,
                               const Rat& t) {
    if (wp == 0 && x3 == 0) return {-t * x2 * x2, t * x1 * x2, -t * x1 * x1, x2 * x2, -x1 * x2, x1 * x1};
    return {t * x3 * x3, -t * x3 * wp, t * wp * wp, -x3 * x3, x3 * wp, -wp * wp};
}

}  // namespace

NormalisationReport resultant_suite(int samples, std::uint64_t seed, Budget* budget) {
    NormalisationReport rep;
    std::vector<Poly> gens = normalisation_generators();
    Poly R = resultant_quartic();

    // (i) projecting the graph away from (w, w') lands exactly on (R)
    IdealBasis elim = eliminate(gens, {"w", "w'"}, budget);
    rep.elimination_ok = elim.gens.size() == 1 && elim.gens[0] == R.embedded(elim.ring);

    // (ii) Sing R is the rank <= 1 locus of the coefficient matrix: radical
    // membership of the 2x2 minors in the Jacobian ideal and conversely
    const RingPtr& X = resultant_ring();
    std::vector<Poly> partials;
    for (int v = 0; v < 6; ++v) partials.push_back(R.derivative(v));
    std::vector<Poly> dets = {Poly::parse(X, "x1*y2 - x2*y1"), Poly::parse(X, "x1*y3 - x3*y1"),
                              Poly::parse(X, "x2*y3 - x3*y2")};
    IdealBasis gb_jac = groebner(partials, budget);
    IdealBasis gb_det = groebner(dets, budget);
    auto member_power = [&](const Poly& p, const IdealBasis& basis) {
        Poly pw = Poly::constant(X, Rat(1));
        for (int k = 1; k <= kRadicalBound; ++k) {
            pw = pw * p;
            if (normal_form(pw, basis, budget).is_zero()) return k;
        }
        return 0;
    };
    rep.singular_locus_ok = true;
    for (const Poly& d : dets) {
        rep.minor_powers.push_back(member_power(d, gb_jac));
        if (rep.minor_powers.back() == 0) rep.singular_locus_ok = false;
    }
    for (const Poly& d : partials) {
        rep.partial_powers.push_back(member_power(d, gb_det));
        if (rep.partial_powers.back() == 0) rep.singular_locus_ok = false;
    }

    // (iii) branch geometry over sample points of Sing R: the two preimages
    // [t w'_i : w'_i : x : t x] with w'_i the roots of w'^2 - w' x2 + x1 x3
    PolyMatrix jac = jacobian(gens);
    auto check_pair = [&](const Rat& w1, const Rat& w2, const Rat& x1v, const Rat& tv) {
        Rat x2v = w1 + w2, x3v = w1 * w2 / x1v;
        std::array<Rat, 2> roots = {w1, w2};
        std::array<std::vector<Rat>, 2> normals;
        for (size_t i = 0; i < 2; ++i) {
            const Rat& wp = roots[i];
            std::vector<Rat> pt = {tv * wp,  wp,       x1v,      x2v,
                                   x3v,      tv * x1v, tv * x2v, tv * x3v};
            for (const Poly& g : gens)
                if (g.evaluate(pt) != 0) return false;
            std::vector<Rat> image(pt.begin() + 2, pt.end());
            if (R.evaluate(image) != 0) return false;

            RatMatrix jr = eval_at(jac, pt);
            if (rank(jr) != 3) return false;
            auto kernel = kernel_basis(jr);
            if (kernel.size() != 5) return false;
            // the projection to the image coordinates keeps the sheet smooth
            RatMatrix proj(5, 6);
            for (int r = 0; r < 5; ++r)
                for (int c = 0; c < 6; ++c) proj.at(r, c) = kernel[static_cast<size_t>(r)][static_cast<size_t>(c) + 2];
            if (rank(proj) != 5) return false;

            std::vector<Rat> n = branch_normal(wp, x3v, x1v, x2v, tv);
            if (std::all_of(n.begin(), n.end(), [](const Rat& v) { return v == 0; })) return false;
            for (const auto& v : kernel) {
                Rat dot(0);
                for (size_t j = 0; j < 6; ++j) dot += n[j] * v[j + 2];
                if (dot != 0) return false;
            }
            normals[i] = std::move(n);
        }
        RatMatrix pairm(2, 6);
        for (int c = 0; c < 6; ++c) {
            pairm.at(0, c) = normals[0][static_cast<size_t>(c)];
            pairm.at(1, c) = normals[1][static_cast<size_t>(c)];
        }
        return rank(pairm) == 2;  // normal crossing: the sheets are transverse
    };

    if (samples <= 0) {
        rep.branch_skipped = true;
        rep.note = "branch samples disabled";
    } else {
        bool ok = true;
        Sampler rng(seed);
        for (int s = 0; s < samples && ok; ++s) {
            Rat w1, w2, x1v, tv;
            int guard = 0;
            do {
                w1 = rng.rational(6, 4);
                w2 = rng.rational(6, 4);
                x1v = rng.rational(6, 4);
                tv = rng.rational(6, 4);
            } while ((w1 == w2 || x1v == 0 || tv == 0) && ++guard < 1000);
            if (guard >= 1000) {
                ok = false;
                rep.note = "sample generation starved";
                break;
            }
            ok = check_pair(w1, w2, x1v, tv);
            ++rep.samples_checked;
        }
        // deterministic corners exercising the w' = x3 = 0 Jacobian chart
        static const struct {
            const char *x1, *x2, *t;
        } kCorners[] = {{"1", "1", "1"}, {"2", "-3", "5"}, {"1/2", "7/3", "-1"}};
        for (const auto& corner : kCorners) {
            if (!ok) break;
            ok = check_pair(Rat(0), rat_from_string(corner.x2), rat_from_string(corner.x1),
                            rat_from_string(corner.t));
            ++rep.samples_checked;
        }
        rep.branch_ok = ok;
    }
    return rep;
}

WDegreeReport w_degree_report() {
    FClass sigma2 = FClass::H_F().pow(2) - FClass::c2();
    WDegreeReport rep;
    rep.surface_degree = integrate_F(class_S() * sigma2);
    rep.class_coefficient = class_W().scalar();
    return rep;
}

NormalFormData parse_scenario(std::string_view text) {
    NormalFormData data;
    data.Q0 = data.Q1 = data.P = Poly::zero(cubic_ring());
    std::map<std::string, Rat*> scalars = {
        {"c0", &data.c0}, {"d0", &data.d0},   {"c01", &data.c01}, {"d01", &data.d01},
        {"c1", &data.c1}, {"d1", &data.d1},   {"c", &data.c},     {"y1", &data.y1},
        {"y2", &data.y2}, {"yp1", &data.yp1}, {"yp2", &data.yp2}};
    std::set<std::string> seen;

    auto trim = [](std::string_view s) {
        size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) return std::string_view{};
        size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };

    size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        auto complain = [&](const std::string& what) {
            throw std::invalid_argument("scenario line " + std::to_string(line_no) + ": " + what);
        };
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) complain("expected key = value");
        std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) complain("expected key = value");
        if (!seen.insert(key).second) complain("duplicate key " + key);

        if (key == "Q0")
            data.Q0 = Poly::parse(cubic_ring(), value);
        else if (key == "Q1")
            data.Q1 = Poly::parse(cubic_ring(), value);
        else if (key == "P")
            data.P = Poly::parse(cubic_ring(), value);
        else if (auto it = scalars.find(key); it != scalars.end())
            *it->second = rat_from_string(value);
        else
            complain("unknown key " + key);
    }
    return data;
}

}  // namespace fanolines
