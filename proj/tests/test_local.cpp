#include "fanolines/local_geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "fanolines/sampler.hpp"

using namespace fanolines;

namespace {

Poly X(const char* text) { return Poly::parse(cubic_ring(), text); }
Poly SL(const char* text) { return Poly::parse(slope_ring(), text); }
Poly ST(const char* text) { return Poly::parse(st_ring(), text); }

NormalFormData data_with(const char* q0, const char* q1, const char* p) {
    NormalFormData d;
    d.Q0 = X(q0);
    d.Q1 = X(q1);
    d.P = X(p);
    return d;
}

// plain Laplace expansion along the first column: an independent check on the
// fraction-free elimination behind determinant()
Poly laplace_det(const PolyMatrix& m) {
    int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Poly acc = Poly::zero(m.ring());
    for (int r = 0; r < n; ++r) {
        if (m.at(r, 0).is_zero()) continue;
        std::vector<int> rows;
        for (int i = 0; i < n; ++i)
            if (i != r) rows.push_back(i);
        std::vector<int> cols;
        for (int j = 1; j < n; ++j) cols.push_back(j);
        Poly cofactor = laplace_det(m.submatrix(rows, cols));
        if (r % 2 == 1) cofactor = -cofactor;
        acc += m.at(r, 0) * cofactor;
    }
    return acc;
}

// ---- root bookkeeping over Q(sqrt(d)) for the pencil oracle ----------------

struct QRoot {
    bool infinite = false;
    Rat p, q;    // the value p + q*sqrt(d)
    long d = 0;  // squarefree (sign kept), nonzero only when q != 0
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

// the two projective roots of a*L^2 + b*L*M + c*M^2, with multiplicity;
// finite roots are the ratio L/M
std::array<QRoot, 2> quadric_roots(const BinaryQuadric& q) {
    REQUIRE(!q.is_zero());
    std::array<QRoot, 2> out;
    if (q.a == 0) {
        out[0].infinite = true;  // the factor M
        if (q.b == 0)
            out[1].infinite = true;  // c*M^2
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
    if (d == 1) {  // rational square root
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

}  // namespace

TEST_CASE("normal forms of the cubic along l0") {
    NormalFormData zero;
    CHECK(format_poly(build_cubic(CubicKind::Type1, zero)) == "x1^2*x3 + x0^2*x4 + x0*x1*x5");
    CHECK(format_poly(build_cubic(CubicKind::Type2, zero)) == "x0^2*x4 + x1^2*x5");

    NormalFormData d = data_with("x2^2 - x3*x5", "x4^2", "x2^3 + x5^3");
    CHECK(build_cubic(CubicKind::Type1, d) ==
          X("x4*x0^2 + x5*x0*x1 + x3*x1^2 + x0*(x2^2 - x3*x5) + x1*x4^2 + x2^3 + x5^3"));
    CHECK(build_cubic(CubicKind::Type2, d) ==
          X("x4*x0^2 + x5*x1^2 + x0*(x2^2 - x3*x5) + x1*x4^2 + x2^3 + x5^3"));

    SUBCASE("the hyperplane family specialises to the second-type form") {
        NormalFormData full = d;
        full.c0 = 1;
        full.d1 = 1;
        CHECK(build_cubic(CubicKind::Type2Full, full) == build_cubic(CubicKind::Type2, d));

        full.d0 = rat(3, 2);
        full.c01 = -2;
        CHECK(build_cubic(CubicKind::Type2Full, full) ==
              X("(x4 + 3/2*x5)*x0^2 - 2*x4*x0*x1 + x5*x1^2 + x0*(x2^2 - x3*x5) + x1*x4^2"
                " + x2^3 + x5^3"));
    }

    SUBCASE("support validation") {
        NormalFormData bad;
        bad.Q0 = X("x1*x2");  // x1 may not appear in Q0
        CHECK_THROWS_AS(build_cubic(CubicKind::Type1, bad), std::invalid_argument);
        bad = NormalFormData{};
        bad.Q0 = X("x2^3");  // wrong degree
        CHECK_THROWS_AS(build_cubic(CubicKind::Type2, bad), std::invalid_argument);
        bad = NormalFormData{};
        bad.P = X("x2^2");
        CHECK_THROWS_AS(build_cubic(CubicKind::Type1, bad), std::invalid_argument);
        bad = NormalFormData{};
        bad.Q0 = X("x0*x4");  // triple: the x3 multiplier lives in x0..x3
        CHECK_THROWS_AS(build_cubic(CubicKind::Triple, bad), std::invalid_argument);
        bad = NormalFormData{};
        bad.P = X("x2^3");  // triple: the x5 multiplier is a quadric
        CHECK_THROWS_AS(build_cubic(CubicKind::Triple, bad), std::invalid_argument);
    }
}

TEST_CASE("triple form restricts to the prescribed product of lines") {
    NormalFormData d;
    d.c = 1;
    // degenerate residual lines: the whole form is (-x2)^2 * (-x2)
    CHECK(build_cubic(CubicKind::Triple, d) == X("-x2^3"));

    Sampler rng(314);
    const RingPtr& R = cubic_ring();
    auto random_quadric = [&](int max_var) {
        Poly q = Poly::zero(R);
        for (int t = 0; t < 4; ++t) {
            Exponents e(6, 0);
            ++e[static_cast<size_t>(rng.int_in(0, max_var))];
            ++e[static_cast<size_t>(rng.int_in(0, max_var))];
            q.add_term(e, Rat(static_cast<long>(rng.int_in(-5, 5))));
        }
        return q;
    };
    for (int trial = 0; trial < 20; ++trial) {
        NormalFormData t;
        t.Q0 = random_quadric(3);
        t.Q1 = random_quadric(4);
        t.P = random_quadric(5);
        t.c = rng.rational(8, 3);
        t.y1 = rng.rational(8, 3);
        t.y2 = rng.rational(8, 3);
        t.yp1 = rng.rational(8, 3);
        t.yp2 = rng.rational(8, 3);
        Poly G = build_cubic(CubicKind::Triple, t);
        Poly x0 = Poly::variable(R, 0), x1 = Poly::variable(R, 1), x2 = Poly::variable(R, 2);
        Poly restricted = G.substitute(R, {x0, x1, x2, Poly::zero(R), Poly::zero(R), Poly::zero(R)});
        Poly l = x0 * t.y1 + x1 * t.y2 - x2;
        Poly lp = x0 * t.yp1 + x1 * t.yp2 - x2;
        CHECK(restricted == l * l * lp * t.c);
    }
}

TEST_CASE("slope equations of the curve of lines through a point") {
    SUBCASE("first type, tail visible in T2 and T3") {
        NormalFormData d = data_with("x2^2", "x3*x5", "x2^3");
        SlopeCurve sc = curve_through_point(build_cubic(CubicKind::Type1, d), CubicKind::Type1);
        CHECK(sc.T2 == SL("x5*x1' + 2*a*x3*x1' + x2^2 + a*x3*x5"));
        CHECK(sc.T3 == SL("x3*x1'^2 + x1'*x3*x5 + x2^3"));
    }
    SUBCASE("the x4 elimination feeds back into the tail") {
        NormalFormData d = data_with("x2*x4", "0", "0");
        SlopeCurve sc = curve_through_point(build_cubic(CubicKind::Type1, d), CubicKind::Type1);
        // Q0 = x2*x4 turns into -x2*(a^2*x3 + a*x5)
        CHECK(sc.T2 == SL("x5*x1' + 2*a*x3*x1' - a^2*x2*x3 - a*x2*x5"));
        CHECK(sc.T3 == SL("x3*x1'^2"));
    }
    SUBCASE("second type") {
        NormalFormData d = data_with("x2^2", "x3*x5", "x5^3");
        SlopeCurve sc = curve_through_point(build_cubic(CubicKind::Type2, d), CubicKind::Type2);
        CHECK(sc.T2 == SL("2*a*x5*x1' + x2^2 + a*x3*x5"));
        CHECK(sc.T3 == SL("x5*x1'^2 + x1'*x3*x5 + x5^3"));
    }
    SUBCASE("numeric point a = 1 on the bare normal form") {
        SlopeCurve sc = curve_through_point(build_cubic(CubicKind::Type1, NormalFormData{}),
                                            CubicKind::Type1, Rat(1));
        CHECK(sc.T2 == SL("x5*x1' + 2*x3*x1'"));
        CHECK(sc.T3 == SL("x3*x1'^2"));
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(curve_through_point(X("x0^3"), CubicKind::Type1), std::invalid_argument);
        // a first-type cubic pushed through the second-type elimination keeps
        // linear slope terms around
        Poly f = build_cubic(CubicKind::Type1, NormalFormData{});
        CHECK_THROWS_AS(curve_through_point(f, CubicKind::Type2), std::invalid_argument);
        CHECK_THROWS_AS(curve_through_point(f, CubicKind::Triple), std::invalid_argument);
        CHECK_THROWS_AS(curve_through_point(X("x0^2*x1 + x0*x1^2"), CubicKind::Type1),
                        std::invalid_argument);
    }
}

TEST_CASE("transversality of the slope equations along the line") {
    NormalFormData d = data_with("x2^2 - x4*x5", "x3^2 + x2*x4", "x2^3 - x5^3");
    Poly zero = Poly::zero(slope_ring());

    SUBCASE("first type: rank two, smooth") {
        TransversalityReport rep =
            transversality_at_line(build_cubic(CubicKind::Type1, d), CubicKind::Type1);
        CHECK(rep.grad_T2 == std::array<Poly, 4>{zero, zero, SL("2*a"), SL("1")});
        CHECK(rep.grad_T3 == std::array<Poly, 4>{zero, zero, SL("1"), zero});
        CHECK(rep.rank == 2);
        CHECK(rep.smooth);

        // the tail quadrics and cubic do not move the gradients at all
        TransversalityReport bare =
            transversality_at_line(build_cubic(CubicKind::Type1, NormalFormData{}), CubicKind::Type1);
        CHECK(bare.grad_T2 == rep.grad_T2);
        CHECK(bare.grad_T3 == rep.grad_T3);
    }

    SUBCASE("second type: rank one, singular") {
        TransversalityReport rep =
            transversality_at_line(build_cubic(CubicKind::Type2, d), CubicKind::Type2);
        CHECK(rep.grad_T2 == std::array<Poly, 4>{zero, zero, zero, SL("2*a")});
        CHECK(rep.grad_T3 == std::array<Poly, 4>{zero, zero, zero, SL("1")});
        CHECK(rep.rank == 1);
        CHECK_FALSE(rep.smooth);
    }

    SUBCASE("specialising a = 0 keeps the verdicts") {
        TransversalityReport t1 =
            transversality_at_line(build_cubic(CubicKind::Type1, d), CubicKind::Type1);
        RatMatrix m1(2, 4);
        for (int j = 0; j < 4; ++j) {
            m1.at(0, j) = t1.grad_T2[static_cast<size_t>(j)].evaluate({0, 0, 0, 0, 0});
            m1.at(1, j) = t1.grad_T3[static_cast<size_t>(j)].evaluate({0, 0, 0, 0, 0});
        }
        CHECK(rank(m1) == 2);

        TransversalityReport t2 =
            transversality_at_line(build_cubic(CubicKind::Type2, d), CubicKind::Type2);
        RatMatrix m2(2, 4);
        for (int j = 0; j < 4; ++j) {
            m2.at(0, j) = t2.grad_T2[static_cast<size_t>(j)].evaluate({0, 0, 0, 0, 0});
            m2.at(1, j) = t2.grad_T3[static_cast<size_t>(j)].evaluate({0, 0, 0, 0, 0});
        }
        CHECK(rank(m2) == 1);
    }

    SUBCASE("rescaling a does not change the rank") {
        const RingPtr& S = slope_ring();
        Sampler rng(99);
        for (CubicKind kind : {CubicKind::Type1, CubicKind::Type2}) {
            TransversalityReport rep = transversality_at_line(build_cubic(kind, d), kind);
            for (int trial = 0; trial < 10; ++trial) {
                Rat t = rng.nonzero_rational(9, 4);
                std::vector<Poly> rescale = {Poly::variable(S, 0) * t, Poly::variable(S, 1),
                                             Poly::variable(S, 2), Poly::variable(S, 3),
                                             Poly::variable(S, 4)};
                PolyMatrix m(S, 2, 4);
                for (int j = 0; j < 4; ++j) {
                    m.at(0, j) = rep.grad_T2[static_cast<size_t>(j)].substitute(S, rescale);
                    m.at(1, j) = rep.grad_T3[static_cast<size_t>(j)].substitute(S, rescale);
                }
                CHECK(rank(m) == (kind == CubicKind::Type1 ? 2 : 1));
            }
        }
    }
}

TEST_CASE("image of the line under the dual map") {
    Poly z = Poly::zero(st_ring());

    SUBCASE("second type: a fixed pencil of tangent hyperplanes") {
        DualLineImage bare = dual_map_image(build_cubic(CubicKind::Type2, NormalFormData{}));
        CHECK(bare.gradient == std::array<Poly, 6>{z, z, z, z, ST("s^2"), ST("t^2")});
        CHECK(bare.span_rank == 2);

        // independent of the tail: Q0, Q1, P never reach the gradient on l0
        NormalFormData d = data_with("x2*x4 - x5^2", "x3^2 + x4*x5", "x2*x3*x4 - x5^3");
        DualLineImage full = dual_map_image(build_cubic(CubicKind::Type2, d));
        CHECK(full.gradient == bare.gradient);
        CHECK(full.span_rank == 2);
    }

    SUBCASE("first type spans a net instead") {
        DualLineImage im = dual_map_image(build_cubic(CubicKind::Type1, NormalFormData{}));
        CHECK(im.gradient == std::array<Poly, 6>{z, z, z, ST("t^2"), ST("s^2"), ST("s*t")});
        CHECK(im.span_rank == 3);
    }
}

TEST_CASE("residual pencil of a second-type line") {
    SUBCASE("classification examples") {
        PencilPair disjoint = residual_pencil(data_with("x2^2", "x3^2", "0"));
        CHECK(disjoint.q0 == BinaryQuadric{1, 0, 0});
        CHECK(disjoint.q1 == BinaryQuadric{0, 0, 1});
        CHECK(classify_pencil(disjoint).common_roots == 0);

        PencilPair tangent = residual_pencil(data_with("x2*x3", "x3^2", "0"));
        CHECK(classify_pencil(tangent).common_roots == 1);
        CHECK_FALSE(classify_pencil(tangent).double_root);

        PencilPair prop = residual_pencil(data_with("x2*x3", "2*x2*x3", "0"));
        CHECK(classify_pencil(prop).common_roots == 2);
        CHECK_FALSE(classify_pencil(prop).double_root);

        PencilPair doubled = residual_pencil(data_with("x2^2", "2*x2^2", "0"));
        CHECK(classify_pencil(doubled).common_roots == 2);
        CHECK(classify_pencil(doubled).double_root);

        // one member restricting to zero still leaves a double cover
        PencilPair half = residual_pencil(data_with("x4^2", "x2*x3", "0"));
        CHECK(half.q0.is_zero());
        CHECK(classify_pencil(half).common_roots == 2);
        CHECK_FALSE(classify_pencil(half).double_root);

        CHECK_THROWS_AS(residual_pencil(data_with("x4^2", "x4*x5", "0")), std::domain_error);
    }

    SUBCASE("agreement with the factorisation oracle on 500 pencils") {
        Sampler rng(2718);
        auto random_quadric = [&] {
            for (;;) {
                BinaryQuadric q{Rat(static_cast<long>(rng.int_in(-4, 4))),
                                Rat(static_cast<long>(rng.int_in(-4, 4))),
                                Rat(static_cast<long>(rng.int_in(-4, 4)))};
                if (!q.is_zero()) return q;
            }
        };
        int seen[3] = {0, 0, 0};
        for (int trial = 0; trial < 500; ++trial) {
            PencilPair p{random_quadric(), random_quadric()};
            PencilClass got = classify_pencil(p);
            int expected = oracle_common_roots(p.q0, p.q1);
            CHECK(got.common_roots == expected);
            if (got.common_roots == 2) {
                auto roots = quadric_roots(p.q0);
                CHECK(got.double_root == (roots[0] == roots[1]));
            }
            ++seen[got.common_roots];
        }
        CHECK(seen[0] > 300);  // generic pencils have disjoint roots
        CHECK(seen[1] > 0);

        // crafted pairs so every class meets the oracle as well
        const BinaryQuadric a{1, -3, 2}, b{1, -4, 3},  // share the root 1
            c{2, -6, 4},                               // = 2*a
            e{1, 0, 1}, f{1, 0, -1};                   // disjoint
        CHECK(oracle_common_roots(a, b) == 1);
        CHECK(classify_pencil({a, b}).common_roots == 1);
        CHECK(oracle_common_roots(a, c) == 2);
        CHECK(classify_pencil({a, c}).common_roots == 2);
        CHECK(oracle_common_roots(e, f) == 0);
        CHECK(classify_pencil({e, f}).common_roots == 0);
    }
}

TEST_CASE("fibre degree of the double cover is two") {
    PencilPair p = residual_pencil(data_with("x2^2", "x3^2", "0"));
    FiberDegree at_generic = fiber_degree_check(p, Rat(1), Rat(1));
    CHECK(at_generic.degree == 2);
    CHECK_FALSE(at_generic.double_root);  // s^2 + t^2 has two simple roots

    FiberDegree at_edge = fiber_degree_check(p, Rat(1), Rat(0));
    CHECK(at_edge.degree == 2);
    CHECK(at_edge.double_root);  // a perfect square

    PencilPair cancel{BinaryQuadric{1, 0, 0}, BinaryQuadric{-1, 0, 0}};
    CHECK_THROWS_AS(fiber_degree_check(cancel, Rat(1), Rat(1)), std::domain_error);

    Sampler rng(5);
    int checked = 0;
    while (checked < 100) {
        BinaryQuadric q0{rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3)};
        BinaryQuadric q1{rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3)};
        if (q0.is_zero() && q1.is_zero()) continue;
        PencilPair pp{q0, q1};
        if (classify_pencil(pp).common_roots != 0) continue;  // stay in the covering regime
        Rat x0 = rng.rational(7, 3), x1 = rng.rational(7, 3);
        if (x0 == 0 && x1 == 0) continue;
        CHECK(fiber_degree_check(pp, x0, x1).degree == 2);
        ++checked;
    }
}

TEST_CASE("tangency matrix layout") {
    SUBCASE("block lookup against a hand-written index table") {
        std::vector<std::string> names = {"v0", "v1", "v2", "v3", "v4", "v5", "cc"};
        RingPtr R = make_ring(names);
        std::array<std::array<Poly, 3>, 6> A;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 3; ++j)
                A[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    Poly::variable(R, i) * Rat(j + 1);
        PolyMatrix m = tangent_matrix(A, Poly::variable(R, 6));
        REQUIRE(m.rows() == 10);
        REQUIRE(m.cols() == 12);

        // expected A-index for (row, block), -1 when the monomial misses s_u
        constexpr int kIdx[10][3] = {{0, -1, -1}, {1, 0, -1}, {2, -1, 0}, {3, 1, -1}, {4, 2, 1},
                                     {5, -1, 2},  {-1, 3, -1}, {-1, 4, 3}, {-1, 5, 4}, {-1, -1, 5}};
        for (int r = 0; r < 10; ++r)
            for (int u = 0; u < 3; ++u)
                for (int j = 0; j < 3; ++j) {
                    const Poly& got = m.at(r, 3 * u + j);
                    if (kIdx[r][u] < 0)
                        CHECK(got.is_zero());
                    else
                        CHECK(got == Poly::variable(R, kIdx[r][u]) * Rat(j + 1));
                }
        CHECK(m.at(5, 9) == Poly::variable(R, 6));
        CHECK(m.at(8, 10) == Poly::variable(R, 6));
        CHECK(m.at(9, 11) == Poly::constant(R, Rat(1)));
        CHECK(m.at(5, 10).is_zero());
        CHECK(m.at(8, 9).is_zero());
        CHECK(m.at(9, 9).is_zero());
    }

    SUBCASE("the two-parameter instance, entry by entry") {
        PolyMatrix m = certificate_matrix();
        REQUIRE(m.rows() == 10);
        REQUIRE(m.cols() == 12);
        const char* expected[10][12] = {
            {"k", "0", "l", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
            {"0", "0", "k", "k", "0", "l", "0", "0", "0", "0", "0", "0"},
            {"l", "l", "k", "0", "0", "0", "k", "0", "l", "0", "0", "0"},
            {"0", "l", "k", "0", "0", "k", "0", "0", "0", "0", "0", "0"},
            {"l", "k", "0", "l", "l", "k", "0", "0", "k", "0", "0", "0"},
            {"0", "0", "0", "0", "0", "0", "l", "l", "k", "k", "0", "0"},
            {"0", "0", "0", "0", "l", "k", "0", "0", "0", "0", "0", "0"},
            {"0", "0", "0", "l", "k", "0", "0", "l", "k", "0", "0", "0"},
            {"0", "0", "0", "0", "0", "0", "l", "k", "0", "0", "k", "0"},
            {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1"},
        };
        const RingPtr& R = m.ring();
        Poly k = Poly::variable(R, 0), l = Poly::variable(R, 1);
        for (int r = 0; r < 10; ++r)
            for (int c = 0; c < 12; ++c) {
                const char* e = expected[r][c];
                Poly want = e[0] == 'k'   ? k
                            : e[0] == 'l' ? l
                            : e[0] == '1' ? Poly::constant(R, Rat(1))
                                          : Poly::zero(R);
                CHECK(m.at(r, c) == want);
            }
    }
}

TEST_CASE("minor certificate for the triple-line tangency matrix") {
    std::vector<Poly> mins = certificate_minors();
    REQUIRE(mins.size() == 66);

    int nonzero = 0;
    for (const Poly& m : mins) {
        if (m.is_zero()) continue;
        ++nonzero;
        for (const auto& [e, c] : m.terms()) CHECK(e[0] + e[1] == 9);
    }
    CHECK(nonzero == 51);

    // column sets in lexicographic order: {0..9}, {0..8,10}, {0..8,11}, ...
    CHECK(mins[0].is_zero());  // both drop the constant column, so the last
    CHECK(mins[1].is_zero());  // row is identically zero
    PolyMatrix m = certificate_matrix();
    Poly third = laplace_det(m.submatrix({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 11}));
    CHECK(mins[2] == third);
    CHECK(format_poly(mins[2]) ==
          "-kappa^9 - 3*kappa^6*lambda^3 + kappa^4*lambda^5 - 3*kappa^3*lambda^6 + 2*kappa*lambda^8"
          " - lambda^9");

    SUBCASE("common zero locus is the origin only") {
        MinorsCertificate cert = minors_certificate();
        CHECK(cert.minor_count == 66);
        CHECK(cert.nonzero_minors == 51);
        CHECK(cert.origin.verdict == Verdict::True);
        CHECK(cert.origin.powers == std::vector<int>{9, 9});
    }

    SUBCASE("a starved power bound is inconclusive, not false") {
        MinorsCertificate cert = minors_certificate(1);
        CHECK(cert.origin.verdict == Verdict::Inconclusive);
    }

    SUBCASE("row permutations do not move the vanishing locus") {
        std::vector<int> rows = {9, 4, 7, 0, 2, 8, 6, 1, 5, 3};
        std::vector<int> cols(12);
        for (int c = 0; c < 12; ++c) cols[static_cast<size_t>(c)] = c;
        std::vector<Poly> permuted;
        for (Poly& p : minors(m.submatrix(rows, cols), 10))
            if (!p.is_zero()) permuted.push_back(std::move(p));
        CHECK(permuted.size() == 51);
        OriginCheck check = only_origin_vanishing(permuted);
        CHECK(check.verdict == Verdict::True);
        CHECK(check.powers == std::vector<int>{9, 9});
    }
}

TEST_CASE("normalisation of the discriminant quartic") {
    std::vector<Poly> gens = normalisation_generators();
    REQUIRE(gens.size() == 6);
    for (const Poly& g : gens) CHECK(g.total_degree() == 2);

    Poly R = resultant_quartic();
    CHECK(R.total_degree() == 4);

    SUBCASE("R vanishes along the whole rank-one locus, symbolically") {
        RingPtr T = make_ring({"x1", "x2", "x3", "t"});
        Poly x1 = Poly::variable(T, 0), x2 = Poly::variable(T, 1), x3 = Poly::variable(T, 2),
             t = Poly::variable(T, 3);
        CHECK(R.substitute(T, {x1, x2, x3, t * x1, t * x2, t * x3}).is_zero());
        CHECK(R.substitute(T, {t * x1, t * x2, t * x3, x1, x2, x3}).is_zero());
    }

    SUBCASE("full suite") {
        NormalisationReport rep = resultant_suite(25, 0);
        CHECK(rep.elimination_ok);
        CHECK(rep.singular_locus_ok);
        CHECK(rep.minor_powers == std::vector<int>{2, 2, 2});
        CHECK(rep.partial_powers == std::vector<int>{1, 1, 1, 1, 1, 1});
        CHECK(rep.branch_ok);
        CHECK_FALSE(rep.branch_skipped);
        CHECK(rep.samples_checked == 28);  // 25 random pairs + 3 corner pairs
    }

    SUBCASE("another seed") {
        NormalisationReport rep = resultant_suite(10, 987654321);
        CHECK(rep.branch_ok);
        CHECK(rep.samples_checked == 13);
    }

    SUBCASE("samples = 0 skips the branch checks only") {
        NormalisationReport rep = resultant_suite(0, 0);
        CHECK(rep.elimination_ok);
        CHECK(rep.singular_locus_ok);
        CHECK(rep.branch_skipped);
        CHECK_FALSE(rep.branch_ok);
        CHECK(rep.samples_checked == 0);
        CHECK_FALSE(rep.note.empty());
    }
}

TEST_CASE("degree of the second-type surface") {
    WDegreeReport rep = w_degree_report();
    CHECK(rep.surface_degree == 225);
    CHECK(rep.class_coefficient == 75);
    CHECK(rep.surface_degree == Rat(3) * rep.class_coefficient);
}

TEST_CASE("scenario files") {
    SUBCASE("round trip into a hyperplane-family cubic") {
        NormalFormData d = parse_scenario(
            "# second-type model with a tilted hyperplane family\n"
            "Q0 = x2^2 - x3*x5\n"
            "Q1 = x4^2\n"
            "P = x2^3 + x5^3   # tail cubic\n"
            "c0 = 1\n"
            "d1 = 3/2\n");
        CHECK(d.Q0 == X("x2^2 - x3*x5"));
        CHECK(d.Q1 == X("x4^2"));
        CHECK(d.P == X("x2^3 + x5^3"));
        CHECK(d.c0 == 1);
        CHECK(d.d1 == rat(3, 2));
        CHECK(d.c01 == 0);

        NormalFormData manual = data_with("x2^2 - x3*x5", "x4^2", "x2^3 + x5^3");
        manual.c0 = 1;
        manual.d1 = rat(3, 2);
        CHECK(build_cubic(CubicKind::Type2Full, d) == build_cubic(CubicKind::Type2Full, manual));
    }

    SUBCASE("triple data") {
        NormalFormData d = parse_scenario("Q0 = x0*x3\nc = -2\ny1 = 1/3\nyp2 = 4\n");
        CHECK(d.Q0 == X("x0*x3"));
        CHECK(d.c == -2);
        CHECK(d.y1 == rat(1, 3));
        CHECK(d.yp2 == 4);
        Poly G = build_cubic(CubicKind::Triple, d);
        CHECK(G == X("x3*x0*x3 - 2*(1/3*x0 - x2)^2*(4*x1 - x2)"));
    }

    SUBCASE("rejections") {
        CHECK_THROWS_AS(parse_scenario("Q0 = x2^2\nQ0 = x3^2\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_scenario("whatever = 3\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_scenario("Q0\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_scenario("c = \n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_scenario("c = seven\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_scenario("Q0 = x2^^2\n"), ParseError);
    }
}
