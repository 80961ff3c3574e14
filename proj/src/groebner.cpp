#include "fanolines/groebner.hpp"

#include <algorithm>
#include <set>

namespace fanolines {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
    Exponents e(a.size());
    for (size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
    return e;
}

bool coprime(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

Poly mono_times(const RingPtr& ring, const Exponents& e, const Rat& c, const Poly& p) {
    return Poly::monomial(ring, e, c) * p;
}

}  // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& gens, Budget* budget) {
    const RingPtr& ring = p.ring();
    size_t n = static_cast<size_t>(ring->nvars());
    Poly rem(ring);
    Poly work = p;
    while (!work.is_zero()) {
        const Exponents& lm = work.leading_monomial();
        const Poly* reducer = nullptr;
        for (const Poly& g : gens) {
            if (!g.is_zero() && divides(g.leading_monomial(), lm)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            rem.add_term(lm, work.leading_coeff());
            Poly head = Poly::monomial(ring, lm, work.leading_coeff());
            work -= head;
            continue;
        }
        if (budget) budget->charge();
        Exponents q(n);
        const Exponents& glm = reducer->leading_monomial();
        for (size_t i = 0; i < n; ++i) q[i] = lm[i] - glm[i];
        work -= mono_times(ring, q, work.leading_coeff() / reducer->leading_coeff(), *reducer);
    }
    return rem;
}

Poly normal_form(const Poly& p, const IdealBasis& basis, Budget* budget) {
    return normal_form(p, basis.gens, budget);
}

namespace {

struct Pair {
    int i, j;
    Exponents lcm;
    int deg;
};

struct PairOrder {
    MonomialOrder ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return ord.less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

int deg_of(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

}  // namespace

IdealBasis groebner(const std::vector<Poly>& gens, Budget* budget) {
    if (gens.empty()) throw std::invalid_argument("groebner: empty generator list");
    RingPtr ring = gens.front().ring();

    std::vector<Poly> basis;
    for (const Poly& g : gens) {
        if (g.ring() != ring && !g.ring()->same(*ring))
            throw std::invalid_argument("groebner: generators from different rings");
        if (!g.is_zero()) basis.push_back(g.primitive_part());
    }
    if (basis.empty()) return {ring, {}, true};

    PairOrder cmp{ring->order()};
    std::set<Pair, PairOrder> queue(cmp);
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Exponents l = lcm_exp(basis[static_cast<size_t>(i)].leading_monomial(),
                                  basis[static_cast<size_t>(j)].leading_monomial());
            queue.insert(Pair{i, j, l, deg_of(l)});
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    std::set<std::pair<int, int>> done;
    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        done.insert({pr.i, pr.j});

        const Poly& f = basis[static_cast<size_t>(pr.i)];
        const Poly& g = basis[static_cast<size_t>(pr.j)];
        if (coprime(f.leading_monomial(), g.leading_monomial())) continue;  // product criterion

        // chain criterion: some basis element k divides the lcm and both
        // side pairs were already treated
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(basis[static_cast<size_t>(k)].leading_monomial(), pr.lcm)) continue;
            auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        size_t n = static_cast<size_t>(ring->nvars());
        Exponents qf(n), qg(n);
        for (size_t t = 0; t < n; ++t) {
            qf[t] = pr.lcm[t] - f.leading_monomial()[t];
            qg[t] = pr.lcm[t] - g.leading_monomial()[t];
        }
        Poly s = mono_times(ring, qf, Rat(1) / f.leading_coeff(), f) -
                 mono_times(ring, qg, Rat(1) / g.leading_coeff(), g);
        Poly r = normal_form(s, basis, budget);
        if (r.is_zero()) continue;
        basis.push_back(r.primitive_part());
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // minimalize: drop generators whose leading monomial is divisible by another's
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Exponents &a = basis[j].leading_monomial(), &b = basis[i].leading_monomial();
            if (divides(a, b) && (a != b || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // inter-reduce tails and make monic -> the reduced Groebner basis
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly r = normal_form(minimal[i], others, budget);
            if (r != minimal[i]) {
                changed = true;
                if (r.is_zero()) {
                    minimal.erase(minimal.begin() + static_cast<long>(i));
                    --i;
                } else {
                    minimal[static_cast<size_t>(i)] = r;
                }
            }
        }
    }
    for (Poly& g : minimal) g = g.monic();
    std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
        return ring->order().less(b.leading_monomial(), a.leading_monomial());
    });
    return {ring, std::move(minimal), true};
}

bool in_ideal(const Poly& p, const IdealBasis& basis, Budget* budget) {
    return normal_form(p, basis.gens, budget).is_zero();
}

IdealBasis eliminate(const std::vector<Poly>& gens, const std::vector<std::string>& drop,
                     Budget* budget) {
    if (gens.empty()) throw std::invalid_argument("eliminate: empty generator list");
    RingPtr ring = gens.front().ring();
    std::vector<std::string> front, back;
    for (const std::string& d : drop) {
        if (ring->var_index(d) < 0) throw std::invalid_argument("eliminate: unknown variable " + d);
        front.push_back(d);
    }
    for (const std::string& v : ring->vars())
        if (std::find(drop.begin(), drop.end(), v) == drop.end()) back.push_back(v);

    std::vector<std::string> ordered = front;
    ordered.insert(ordered.end(), back.begin(), back.end());
    RingPtr elim_ring = make_ring(ordered, block_order(static_cast<int>(front.size())));

    std::vector<Poly> moved;
    for (const Poly& g : gens) moved.push_back(g.embedded(elim_ring));
    IdealBasis gb = groebner(moved, budget);

    RingPtr out_ring = make_ring(back);
    std::vector<Poly> kept;
    for (const Poly& g : gb.gens) {
        bool uses_dropped = false;
        for (size_t v = 0; v < front.size() && !uses_dropped; ++v)
            if (g.degree_in(static_cast<int>(v)) > 0) uses_dropped = true;
        if (!uses_dropped) kept.push_back(g.embedded(out_ring));
    }
    // the block order restricts to grevlex on the kept variables, so the
    // filtered generators are already the reduced basis of the elimination ideal
    std::sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) {
        return out_ring->order().less(b.leading_monomial(), a.leading_monomial());
    });
    return {out_ring, std::move(kept), true};
}

OriginCheck only_origin_vanishing(const std::vector<Poly>& gens, int power_bound, Budget* budget) {
    if (gens.empty()) throw std::invalid_argument("only_origin_vanishing: empty generator list");
    RingPtr ring = gens.front().ring();
    int n = ring->nvars();
    if (n != 2) throw std::invalid_argument("only_origin_vanishing expects a bivariate ideal");

    OriginCheck out;
    out.powers.assign(static_cast<size_t>(n), 0);

    IdealBasis gb = groebner(gens, budget);
    if (gb.gens.empty()) {  // zero ideal: vanishing set is the whole plane
        out.verdict = Verdict::False;
        out.note = "zero ideal";
        return out;
    }
    if (gb.gens.size() == 1 && gb.gens.front().is_constant()) {
        out.verdict = Verdict::True;  // empty vanishing set
        out.note = "unit ideal";
        return out;
    }

    // finiteness: the leading-term ideal must contain a pure power of each variable
    std::vector<int> pure(static_cast<size_t>(n), 0);
    for (const Poly& g : gb.gens) {
        const Exponents& lm = g.leading_monomial();
        int support = -1;
        bool pure_power = true;
        for (int v = 0; v < n; ++v) {
            if (lm[static_cast<size_t>(v)] == 0) continue;
            if (support >= 0) pure_power = false;
            support = v;
        }
        if (pure_power && support >= 0) {
            int& best = pure[static_cast<size_t>(support)];
            int d = lm[static_cast<size_t>(support)];
            if (best == 0 || d < best) best = d;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (pure[static_cast<size_t>(v)] == 0) {
            out.verdict = Verdict::False;  // positive-dimensional vanishing set
            out.note = "vanishing set is positive-dimensional";
            return out;
        }
    }

    // vector-space dimension of the quotient: number of standard monomials
    long long quotient_dim = 0;
    Exponents e(static_cast<size_t>(n), 0);
    for (e[0] = 0; e[0] < pure[0]; ++e[0]) {
        for (e[1] = 0; e[1] < pure[1]; ++e[1]) {
            bool standard = true;
            for (const Poly& g : gb.gens)
                if (divides(g.leading_monomial(), e)) {
                    standard = false;
                    break;
                }
            if (standard) ++quotient_dim;
        }
    }

    bool all_found = true, definite = true;
    for (int v = 0; v < n; ++v) {
        Poly x = Poly::variable(ring, v);
        Poly xp = x;
        int found = 0;
        for (int a = 1; a <= power_bound; ++a) {
            if (normal_form(xp, gb.gens, budget).is_zero()) {
                found = a;
                break;
            }
            xp *= x;
        }
        out.powers[static_cast<size_t>(v)] = found;
        if (found == 0) {
            all_found = false;
            // a nilpotent coordinate function must vanish by the quotient dimension
            if (quotient_dim > power_bound) definite = false;
        }
    }
    if (all_found) {
        out.verdict = Verdict::True;
    } else if (definite) {
        out.verdict = Verdict::False;
        out.note = "a coordinate is not nilpotent on the quotient";
    } else {
        out.verdict = Verdict::Inconclusive;
        out.note = "power bound " + std::to_string(power_bound) + " reached (quotient dimension " +
                   std::to_string(quotient_dim) + ")";
    }
    return out;
}

}  // namespace fanolines
