#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanolines/poly.hpp"

namespace fanolines {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("reduction step budget exceeded") {}
};

// shared counter of elementary reduction steps; throws when the limit is hit
struct Budget {
    long long limit = 10'000'000;
    long long used = 0;

    void charge(long long n = 1) {
        used += n;
        if (used > limit) throw BudgetExceeded();
    }
};

struct IdealBasis {
    RingPtr ring;
    std::vector<Poly> gens;
    bool reduced = false;
};

// full multivariate division remainder; unique when G is a Groebner basis
Poly normal_form(const Poly& p, const std::vector<Poly>& gens, Budget* budget = nullptr);
Poly normal_form(const Poly& p, const IdealBasis& basis, Budget* budget = nullptr);

// Buchberger with the product and chain pair-pruning criteria; returns the
// reduced (monic, auto-reduced) basis, unique for the ring's monomial order
IdealBasis groebner(const std::vector<Poly>& gens, Budget* budget = nullptr);

bool in_ideal(const Poly& p, const IdealBasis& basis, Budget* budget = nullptr);

// Groebner basis of the elimination ideal: generators not involving `drop`,
// over the ring of the remaining variables (grevlex)
IdealBasis eliminate(const std::vector<Poly>& gens, const std::vector<std::string>& drop,
                     Budget* budget = nullptr);

enum class Verdict { False, True, Inconclusive };

struct OriginCheck {
    Verdict verdict = Verdict::Inconclusive;
    // smallest found a with var^a in the ideal, per ring variable (0 = none found)
    std::vector<int> powers;
    std::string note;
};

// decides whether the vanishing set of a bivariate ideal is contained in the
// origin, via membership of pure variable powers up to power_bound
OriginCheck only_origin_vanishing(const std::vector<Poly>& gens, int power_bound = 20,
                                  Budget* budget = nullptr);

}  // namespace fanolines
