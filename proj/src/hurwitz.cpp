#include "fanolines/hurwitz.hpp"

#include <stdexcept>

namespace fanolines {

namespace {

void append_term(std::string& out, const Rat& coeff, const char* mono) {
    if (coeff == 0) return;
    Rat a = coeff;
    if (out.empty()) {
        if (a < 0) {
            out += "-";
            a = -a;
        }
    } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
    }
    if (a == 1)
        out += mono;
    else
        out += to_string(a) + "*" + mono;
}

}  // namespace

std::string M4Class::to_string() const {
    if (lam == 0 && del0 == 0) return "0";
    std::string out;
    append_term(out, lam, "lam");
    append_term(out, del0, "del0");
    return out;
}

std::string DivisorAnsatz::to_string() const {
    return "(" + fanolines::to_string(a) + ", " + fanolines::to_string(b) + ", " +
           fanolines::to_string(c) + ")";
}

const HurwitzTable& hurwitz_table() {
    static const HurwitzTable table = [] {
        HurwitzTable t;
        t.ring = make_ring({"N0", "lam", "del0"});
        t.push_psi = Poly::parse(t.ring, "360*N0*lam - 40*N0*del0");
        t.push_2E3 = Poly::parse(t.ring, "132*N0*lam - 15*N0*del0");
        t.push_E0 = Poly::parse(t.ring, "1/2*N0*del0");
        return t;
    }();
    return table;
}

namespace {

// divide out the formal fibre count and read off the two coefficients
M4Class strip_N0(const Poly& combo) {
    const HurwitzTable& t = hurwitz_table();
    if (combo.is_zero()) return {};
    const Poly reduced = divexact(combo, Poly::variable(t.ring, "N0"));
    if (reduced.degree_in(0) > 0)
        throw std::domain_error("pushforward combination is not linear in N0");
    M4Class out{reduced.coeff({0, 1, 0}), reduced.coeff({0, 0, 1})};
    const Poly check = Poly::variable(t.ring, "lam") * out.lam +
                       Poly::variable(t.ring, "del0") * out.del0;
    if (check != reduced)
        throw std::domain_error("pushforward combination is not a lambda/delta_0 class");
    return out;
}

}  // namespace

M4Class pairing_R() {
    const HurwitzTable& t = hurwitz_table();
    return strip_N0((t.push_psi * rat(1, 2) - t.push_2E3) * Rat(2));
}

M4Class pairing_Rprime() {
    const HurwitzTable& t = hurwitz_table();
    return strip_N0((t.push_psi - t.push_E0 * Rat(2) - t.push_2E3) * Rat(2));
}

M4Class mumford_pair(const DivisorAnsatz& A) {
    // 12 lambda = kappa + delta and kappa = omega^2 pairs as (2g-2) omega on
    // each fibre; in genus 4 the fibre degree of omega is 6
    return M4Class{12, -1} * A.a + M4Class{6, 0} * A.b + M4Class{0, 6} * A.c;
}

DivisorAnsatz solve_ansatz(const M4Class& target, long fiber_points) {
    if (fiber_points % 6 != 0)
        throw std::invalid_argument("fibre point count must be a multiple of 2g - 2 = 6");
    DivisorAnsatz A;
    A.a = Rat(fiber_points) / 6;
    A.b = (target.lam - A.a * 12) / 6;
    A.c = (target.del0 + A.a) / 6;
    return A;
}

IClass to_I_class(const DivisorAnsatz& A) {
    return omega_p() * A.a + p_pull(lambda_class()) * A.b + p_pull(class_W()) * A.c;
}

}  // namespace fanolines
