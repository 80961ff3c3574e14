#pragma once

// Divisor bookkeeping on the moduli side of the degree-3-pencil covers
// attached to the genus-4 hyperplane curves of the line family: formal
// lambda/delta_0 classes, the admissible-cover pushforward table, Mumford's
// relation in genus 4, and the linear solve identifying the residuation
// divisors in the universal line family.

#include <string>

#include "fanolines/chow.hpp"
#include "fanolines/poly.hpp"
#include "fanolines/rational.hpp"

namespace fanolines {

// lam * lambda + del0 * delta_0; the other boundary divisors never survive
// the pullback to X (the generic discriminant fibre is irreducible 1-nodal),
// so they are dropped at the type level.
struct M4Class {
    Rat lam{};
    Rat del0{};

    bool operator==(const M4Class&) const = default;
    M4Class operator+(const M4Class& o) const { return {lam + o.lam, del0 + o.del0}; }
    M4Class operator-(const M4Class& o) const { return {lam - o.lam, del0 - o.del0}; }
    M4Class operator*(const Rat& s) const { return {lam * s, del0 * s}; }

    std::string to_string() const;  // "96*lam - 10*del0"
};

// a*omega + b*pi^*lambda + c*pi^*delta_0
struct DivisorAnsatz {
    Rat a{};
    Rat b{};
    Rat c{};

    bool operator==(const DivisorAnsatz&) const = default;
    std::string to_string() const;  // "(4, 8, -1)"
};

// Pushforward identities along the admissible-covers correspondence, kept as
// polynomials in the formal fibre count N0 so that cancellation is literal.
struct HurwitzTable {
    RingPtr ring;   // {"N0", "lam", "del0"}
    Poly push_psi;  // h_* j^* psi   = 40 N0 (9 lam - del0)
    Poly push_2E3;  // 2 h_* E_3     = N0 (132 lam - 15 del0)
    Poly push_E0;   // h_* E_0       = (N0/2) del0
};
const HurwitzTable& hurwitz_table();

// (2/N0)((1/2) h_* j^* psi - 2 h_* E_3) and (2/N0)(h_* j^* psi - 2 h_* E_0
// - 2 h_* E_3); N0 divides out exactly or these throw.
M4Class pairing_R();
M4Class pairing_Rprime();

// a (12 lambda - delta_0) + 6 b lambda + 6 c delta_0, genus 4 (2g - 2 = 6)
M4Class mumford_pair(const DivisorAnsatz& A);

// invert mumford_pair given the fibre count 6a; throws when the count is not
// a multiple of 2g - 2 = 6
DivisorAnsatz solve_ansatz(const M4Class& target, long fiber_points);

// a*omega_p + b*p^*lambda + c*p^*[W], with lambda and [W] taken from the
// intersection calculus (not re-entered by hand) and p^*H_X = l
IClass to_I_class(const DivisorAnsatz& A);

}  // namespace fanolines
