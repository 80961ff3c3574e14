#include <doctest.h>

#include "fanolines/groebner.hpp"
#include "fanolines/sampler.hpp"

using namespace fanolines;

namespace {

Poly spoly(const Poly& f, const Poly& g) {
    const RingPtr& R = f.ring();
    size_t n = static_cast<size_t>(R->nvars());
    Exponents l(n), qf(n), qg(n);
    for (size_t i = 0; i < n; ++i) {
        l[i] = std::max(f.leading_monomial()[i], g.leading_monomial()[i]);
        qf[i] = l[i] - f.leading_monomial()[i];
        qg[i] = l[i] - g.leading_monomial()[i];
    }
    return Poly::monomial(R, qf, Rat(1) / f.leading_coeff()) * f -
           Poly::monomial(R, qg, Rat(1) / g.leading_coeff()) * g;
}

}  // namespace

TEST_CASE("groebner: coordinate ideal is already reduced") {
    auto R = make_ring({"x", "y"});
    IdealBasis gb = groebner({Poly::parse(R, "x"), Poly::parse(R, "y")});
    REQUIRE(gb.gens.size() == 2);
    CHECK(gb.gens[0] == Poly::parse(R, "x"));
    CHECK(gb.gens[1] == Poly::parse(R, "y"));
    CHECK(gb.reduced);
}

TEST_CASE("normal form: single reduction and ideal membership") {
    auto R = make_ring({"x", "y"});
    CHECK(normal_form(Poly::parse(R, "x^2 + y"), {Poly::parse(R, "x")}) == Poly::parse(R, "y"));

    IdealBasis gb = groebner({Poly::parse(R, "x^2 - y"), Poly::parse(R, "y^2 - x")});
    CHECK(in_ideal(Poly::parse(R, "x^4 - x"), gb));
    CHECK(!in_ideal(Poly::parse(R, "x + y"), gb));
}

TEST_CASE("groebner: twisted cubic relations") {
    auto R = make_ring({"x", "y", "z"});
    IdealBasis gb = groebner({Poly::parse(R, "y - x^2"), Poly::parse(R, "z - x^3")});
    for (const Poly& g : gb.gens) CHECK(g.leading_coeff() == 1);
    CHECK(in_ideal(Poly::parse(R, "y^3 - z^2"), gb));
    CHECK(in_ideal(Poly::parse(R, "x*z - y^2"), gb));
    CHECK(!in_ideal(Poly::parse(R, "x*z - y^2 + 1"), gb));
}

TEST_CASE("every S-polynomial of a reduced basis reduces to zero") {
    auto R = make_ring({"x", "y", "z"});
    Sampler s(123);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Poly> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(s.nonzero_poly(R, 3, 3, 5));
        IdealBasis gb = groebner(gens);
        for (size_t i = 0; i < gb.gens.size(); ++i)
            for (size_t j = i + 1; j < gb.gens.size(); ++j)
                CHECK(normal_form(spoly(gb.gens[i], gb.gens[j]), gb).is_zero());
    }
}

TEST_CASE("normal form is idempotent") {
    auto R = make_ring({"x", "y", "z"});
    Sampler s(321);
    for (int rep = 0; rep < 20; ++rep) {
        IdealBasis gb = groebner({s.nonzero_poly(R, 3, 2, 5), s.nonzero_poly(R, 3, 2, 5)});
        Poly p = s.poly(R, 5, 4);
        Poly r = normal_form(p, gb);
        CHECK(normal_form(r, gb) == r);
        CHECK(in_ideal(p - r, gb));
    }
}

TEST_CASE("groebner basis is independent of generator order and scaling") {
    auto R = make_ring({"x", "y"});
    std::vector<Poly> a = {Poly::parse(R, "x^2 + y"), Poly::parse(R, "x*y - 1")};
    std::vector<Poly> b = {Poly::parse(R, "3*x*y - 3"), Poly::parse(R, "-x^2 - y")};
    IdealBasis ga = groebner(a), gb = groebner(b);
    REQUIRE(ga.gens.size() == gb.gens.size());
    for (size_t i = 0; i < ga.gens.size(); ++i) CHECK(ga.gens[i] == gb.gens[i]);
}

TEST_CASE("eliminate: graph ideals") {
    auto R = make_ring({"w", "x", "y"});
    IdealBasis e1 = eliminate({Poly::parse(R, "w - x")}, {"w"});
    CHECK(e1.gens.empty());
    CHECK(e1.ring->vars() == std::vector<std::string>{"x", "y"});

    IdealBasis e2 = eliminate({Poly::parse(R, "w - x"), Poly::parse(R, "w^2 - y")}, {"w"});
    REQUIRE(e2.gens.size() == 1);
    CHECK(e2.gens[0] == Poly::parse(e2.ring, "x^2 - y"));
}

TEST_CASE("eliminate: two generic binary quadrics give their Sylvester resultant") {
    // dehomogenized: a0*t^2 + a1*t + a2 and b0*t^2 + b1*t + b2 with symbolic coefficients
    auto R = make_ring({"t", "a0", "a1", "a2", "b0", "b1", "b2"});
    Poly f = Poly::parse(R, "a0*t^2 + a1*t + a2");
    Poly g = Poly::parse(R, "b0*t^2 + b1*t + b2");
    IdealBasis e = eliminate({f, g}, {"t"});
    REQUIRE(e.gens.size() == 1);

    Poly res = Poly::parse(e.ring,
                           "(a0*b2 - b0*a2)^2 - (a0*b1 - b0*a1)*(a1*b2 - b1*a2)");
    // the reduced basis of a principal ideal is its monic generator
    CHECK(e.gens[0] == res.monic());
}

TEST_CASE("budget: tight limits raise, generous limits succeed") {
    auto R = make_ring({"x", "y"});
    // reducing x^20 by x^2 - x costs one step per degree
    Budget tiny{3, 0};
    CHECK_THROWS_AS(normal_form(Poly::parse(R, "x^20"), {Poly::parse(R, "x^2 - x")}, &tiny),
                    BudgetExceeded);

    std::vector<Poly> gens = {Poly::parse(R, "x^3 - 2*x*y"), Poly::parse(R, "x^2*y - 2*y^2 + x")};
    Budget fine{100000, 0};
    IdealBasis gb = groebner(gens, &fine);
    CHECK(fine.used > 0);
    CHECK(fine.used <= fine.limit);
    CHECK(!gb.gens.empty());
}

TEST_CASE("only_origin_vanishing: coordinate ideal, a line, a fat point") {
    auto R = make_ring({"k", "l"});
    OriginCheck yes = only_origin_vanishing({Poly::parse(R, "k"), Poly::parse(R, "l")});
    CHECK(yes.verdict == Verdict::True);
    CHECK(yes.powers == std::vector<int>{1, 1});

    OriginCheck no = only_origin_vanishing({Poly::parse(R, "k - l")});
    CHECK(no.verdict == Verdict::False);

    OriginCheck fat = only_origin_vanishing({Poly::parse(R, "k^2"), Poly::parse(R, "l^3"),
                                             Poly::parse(R, "k*l")});
    CHECK(fat.verdict == Verdict::True);
    CHECK(fat.powers == std::vector<int>{2, 3});
}

TEST_CASE("only_origin_vanishing: points off the origin and bound exhaustion") {
    auto R = make_ring({"k", "l"});
    // two points (±i, 0) over the closure: zero-dimensional but not the origin
    OriginCheck off = only_origin_vanishing({Poly::parse(R, "k^2 + 1"), Poly::parse(R, "l")});
    CHECK(off.verdict == Verdict::False);

    OriginCheck inc = only_origin_vanishing({Poly::parse(R, "k^25"), Poly::parse(R, "l")}, 10);
    CHECK(inc.verdict == Verdict::Inconclusive);

    OriginCheck deep = only_origin_vanishing({Poly::parse(R, "k^25"), Poly::parse(R, "l")}, 30);
    CHECK(deep.verdict == Verdict::True);
    CHECK(deep.powers == std::vector<int>{25, 1});
}

TEST_CASE("groebner rejects mixed rings and empty input") {
    auto R = make_ring({"x", "y"});
    auto S = make_ring({"u"});
    CHECK_THROWS_AS(groebner({}), std::invalid_argument);
    CHECK_THROWS_AS(groebner({Poly::parse(R, "x"), Poly::parse(S, "u")}), std::invalid_argument);
}
