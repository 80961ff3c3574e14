#include "fanolines/chow.hpp"

#include <algorithm>
#include <stdexcept>

#include "fanolines/schubert.hpp"

namespace fanolines {

namespace {

int wdeg(const Exponents& e) { return e[0] + 2 * e[1]; }

}  // namespace

// ---------------------------------------------------------------- FClass

RingPtr FClass::ring() {
    static RingPtr r = make_ring({"H_F", "c2"});
    return r;
}

FClass::FClass() : p_(ring()) {}

FClass::FClass(Poly p) : p_(std::move(p)) {
    if (!p_.ring()->same(*ring())) throw std::invalid_argument("FClass: wrong ring");
    truncate();
}

void FClass::truncate() {
    Poly t(ring());
    for (const auto& [e, c] : p_.terms())
        if (wdeg(e) <= 4) t.add_term(e, c);
    p_ = std::move(t);
}

FClass FClass::zero() { return FClass(); }
FClass FClass::constant(const Rat& r) { return FClass(Poly::constant(ring(), r)); }
FClass FClass::H_F() { return FClass(Poly::variable(ring(), "H_F")); }
FClass FClass::c2() { return FClass(Poly::variable(ring(), "c2")); }
FClass FClass::parse(std::string_view text) { return FClass(Poly::parse(ring(), text)); }

Rat FClass::coeff(int a, int b) const { return p_.coeff({a, b}); }

int FClass::top_degree() const {
    int d = -1;
    for (const auto& [e, c] : p_.terms()) d = std::max(d, wdeg(e));
    return d;
}

bool FClass::is_homogeneous(int d) const {
    for (const auto& [e, c] : p_.terms())
        if (wdeg(e) != d) return false;
    return true;
}

FClass FClass::graded_piece(int d) const {
    Poly t(ring());
    for (const auto& [e, c] : p_.terms())
        if (wdeg(e) == d) t.add_term(e, c);
    return FClass(std::move(t));
}

FClass FClass::operator-() const { return FClass(-p_); }
FClass FClass::operator+(const FClass& o) const { return FClass(p_ + o.p_); }
FClass FClass::operator-(const FClass& o) const { return FClass(p_ - o.p_); }
FClass FClass::operator*(const FClass& o) const { return FClass(p_ * o.p_); }
FClass FClass::operator*(const Rat& s) const { return FClass(p_ * s); }

FClass FClass::pow(unsigned e) const {
    FClass acc = constant(1), b = *this;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rat integrate_F(const FClass& a) {
    if (a.is_zero()) return 0;
    if (!a.is_homogeneous(4)) throw std::domain_error("integrate_F: class is not of degree 4");
    // transfer to G(2,6): H_F and c2 are the restrictions of the Chern roots'
    // elementary symmetric classes, i.e. of sigma_1 and sigma_{1,1}
    Poly t(TautExpr::ring());
    for (const auto& [e, c] : a.poly().terms()) t.add_term(e, c);
    SchubertClass s = taut_to_schubert(TautExpr(std::move(t)));
    return integrate_G(s * class_of_F());
}

// ---------------------------------------------------------------- XClass

XClass::XClass(Rat r, int d) : r_(std::move(r)), d_(d) {
    if (d_ < 0) throw std::invalid_argument("XClass: negative power");
    if (d_ > 4) r_ = 0;  // H_X^5 = 0 on a fourfold
    if (r_ == 0) d_ = 0;
}

XClass XClass::operator+(const XClass& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (d_ != o.d_) throw std::domain_error("XClass: sum of different powers of H_X");
    return XClass(r_ + o.r_, d_);
}

std::string XClass::to_string() const {
    if (is_zero()) return "0";
    if (d_ == 0) return fanolines::to_string(r_);
    std::string base = "H_X";
    if (d_ > 1) base += "^" + std::to_string(d_);
    if (r_ == 1) return base;
    if (r_ == -1) return "-" + base;
    return fanolines::to_string(r_) + "*" + base;
}

Rat integrate_X(const XClass& a) {
    if (a.is_zero()) return 0;
    if (a.power() != 4) throw std::domain_error("integrate_X: class is not of degree 4");
    return a.scalar() * 3;  // deg X = 3
}

// ---------------------------------------------------------------- IClass

IClass::IClass(FClass alpha, FClass beta) : a_(std::move(alpha)), b_(std::move(beta)) {}

IClass IClass::l_power(unsigned k) { return l().pow(k); }

bool IClass::is_homogeneous(int d) const {
    return (a_.is_zero() || a_.is_homogeneous(d)) &&
           (b_.is_zero() || b_.is_homogeneous(d - 1));
}

IClass IClass::operator*(const IClass& o) const {
    // (a0 + l a1)(b0 + l b1) with l^2 = l g - c
    const FClass cross = a_ * o.b_ + b_ * o.a_;
    const FClass sq = b_ * o.b_;
    return IClass(a_ * o.a_ - FClass::c2() * sq, cross + FClass::H_F() * sq);
}

IClass IClass::pow(unsigned e) const {
    IClass acc(FClass::constant(1), FClass::zero()), b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

namespace {

// "q*H_F^2", "q*c2", "q*(H_F*c2)"; "" for the constant monomial
std::string q_mono(const Exponents& e) {
    const int a = e[0], b = e[1];
    if (a == 0 && b == 0) return "";
    std::string inner;
    if (a > 0) {
        inner = "H_F";
        if (a > 1) inner += "^" + std::to_string(a);
    }
    if (b > 0) {
        if (!inner.empty()) inner += "*";
        inner += "c2";
        if (b > 1) inner += "^" + std::to_string(b);
    }
    if (a > 0 && b > 0) return "q*(" + inner + ")";
    return "q*" + inner;
}

void append_term(std::string& out, const Rat& coeff, const std::string& mono) {
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
    if (mono.empty()) {
        out += to_string(a);
        return;
    }
    if (a == 1) {
        out += mono;
        return;
    }
    out += to_string(a) + "*" + mono;
}

}  // namespace

std::string IClass::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : a_.poly().terms()) append_term(out, c, q_mono(e));
    for (const auto& [e, c] : b_.poly().terms()) {
        std::string m = q_mono(e);
        append_term(out, c, m.empty() ? "l" : "l*" + m);
    }
    return out;
}

IClass grothendieck_reduce(std::vector<FClass> lpowers) {
    while (lpowers.size() < 2) lpowers.push_back(FClass::zero());
    for (size_t k = lpowers.size() - 1; k >= 2; --k) {
        lpowers[k - 1] += FClass::H_F() * lpowers[k];
        lpowers[k - 2] -= FClass::c2() * lpowers[k];
        lpowers.pop_back();
    }
    return IClass(lpowers[0], lpowers[1]);
}

IClass q_pull(const FClass& a) { return IClass(a, FClass::zero()); }
FClass q_push(const IClass& a) { return a.beta(); }

FClass transfer_HX(int d) {
    switch (d) {
        case 0:
        case 5:
            return FClass::zero();
        case 1:
            return FClass::constant(1);
        case 2:
            return FClass::H_F();
        case 3:
            return FClass::H_F().pow(2) - FClass::c2();
        case 4:
            // 3 [x] pulls back to three copies of the curve of lines through
            // a point, and q embeds that curve; hence 3 * (1/18) H_F^3
            return FClass::H_F().pow(3) * rat(1, 6);
        default:
            throw std::domain_error("transfer_HX: power out of range");
    }
}

namespace {

// p_*(q^* a) = m * H_X^(deg a - 1), the coefficient determined by pairing
// with the complementary power of H_X and dividing by deg X = 3
XClass p_push_pulled(const FClass& a) {
    if (a.is_zero()) return {};
    const int d = a.top_degree();
    if (!a.is_homogeneous(d)) throw std::domain_error("p_push: inhomogeneous class");
    if (d == 0) return {};  // fundamental class pushes to zero
    const Rat pairing = integrate_F(a * transfer_HX(5 - d));
    return XClass(pairing / 3, d - 1);
}

}  // namespace

XClass p_push(const IClass& a) {
    const XClass xa = p_push_pulled(a.alpha());
    const XClass xb = p_push_pulled(a.beta()) * XClass::H_X();  // l = p^*H_X
    return xa + xb;  // throws when the input was not homogeneous
}

IClass p_pull(const XClass& x) {
    if (x.is_zero()) return {};
    return IClass::l_power(static_cast<unsigned>(x.power())) * x.scalar();
}

// ------------------------------------------------- distinguished classes

FClass class_S() { return (FClass::H_F().pow(2) - FClass::c2()) * 5; }

XClass class_W() { return p_push(q_pull(class_S())); }

IClass omega_p() { return IClass(FClass::H_F(), FClass::constant(1)); }

XClass lambda_class() {
    // Mumford's relation 12 lambda = kappa + delta for the conic fibration p
    const XClass kappa = p_push(omega_p() * omega_p());
    return (kappa + class_W()) * rat(1, 12);
}

FClass beta_class() { return FClass::H_F().pow(3) * rat(1, 36); }
FClass class_Cx() { return FClass::H_F().pow(3) * rat(1, 18); }

NormalBundleData normal_bundle_data() { return {}; }

// ---------------------------------------------------------------- BlClass

BlClass::BlClass() { c_.fill(FClass::zero()); }

BlClass BlClass::E() {
    BlClass b;
    b.c_[1] = FClass::constant(1);
    return b;
}

BlClass BlClass::pull_from_F(const FClass& a) {
    BlClass b;
    b.c_[0] = a;
    return b;
}

const FClass& BlClass::coeff(int b) const {
    if (b < 0 || b > 4) throw std::out_of_range("BlClass: E-power out of range");
    return c_[static_cast<size_t>(b)];
}

bool BlClass::is_zero() const {
    for (const auto& f : c_)
        if (!f.is_zero()) return false;
    return true;
}

void BlClass::truncate() {
    for (int b = 0; b <= 4; ++b) {
        FClass kept;
        for (int d = 0; d + b <= 4; ++d) kept += c_[static_cast<size_t>(b)].graded_piece(d);
        c_[static_cast<size_t>(b)] = kept;
    }
}

int BlClass::top_degree() const {
    int d = -1;
    for (int b = 0; b <= 4; ++b) {
        const FClass& f = c_[static_cast<size_t>(b)];
        if (!f.is_zero()) d = std::max(d, f.top_degree() + b);
    }
    return d;
}

bool BlClass::is_homogeneous(int d) const {
    for (int b = 0; b <= 4; ++b)
        if (!c_[static_cast<size_t>(b)].is_zero() &&
            !c_[static_cast<size_t>(b)].is_homogeneous(d - b))
            return false;
    return true;
}

BlClass BlClass::operator-() const {
    BlClass r;
    for (int b = 0; b <= 4; ++b) r.c_[static_cast<size_t>(b)] = -c_[static_cast<size_t>(b)];
    return r;
}

BlClass BlClass::operator+(const BlClass& o) const {
    BlClass r;
    for (int b = 0; b <= 4; ++b)
        r.c_[static_cast<size_t>(b)] = c_[static_cast<size_t>(b)] + o.c_[static_cast<size_t>(b)];
    return r;
}

BlClass BlClass::operator-(const BlClass& o) const { return *this + (-o); }

BlClass BlClass::operator*(const BlClass& o) const {
    BlClass r;
    for (int i = 0; i <= 4; ++i) {
        if (c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= 4; ++j)
            r.c_[static_cast<size_t>(i + j)] +=
                c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    }
    r.truncate();
    return r;
}

BlClass BlClass::operator*(const Rat& s) const {
    BlClass r;
    for (int b = 0; b <= 4; ++b) r.c_[static_cast<size_t>(b)] = c_[static_cast<size_t>(b)] * s;
    return r;
}

BlClass BlClass::pow(unsigned e) const {
    BlClass acc = constant(1), b = *this;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

bool BlClass::operator==(const BlClass& o) const {
    for (int b = 0; b <= 4; ++b)
        if (c_[static_cast<size_t>(b)] != o.c_[static_cast<size_t>(b)]) return false;
    return true;
}

std::string BlClass::to_string() const {
    static RingPtr disp = make_ring({"H", "E", "c2"});
    Poly p(disp);
    for (int b = 0; b <= 4; ++b)
        for (const auto& [e, c] : c_[static_cast<size_t>(b)].poly().terms())
            p.add_term({e[0], b, e[1]}, c);
    return p.to_string();
}

namespace {

// pi_* E^2 = -[S] and pi_* E^3 = -c1N * i_*(H_S), with i_*(H_S) = H_F.[S]
FClass push_E2() { return -class_S(); }
FClass push_E3() { return (FClass::H_F() * class_S()) * -normal_bundle_data().c1N_HS; }

// deg pi_*(E^4) = -(c1N^2 * H_S^2 - c2N), a number only: the pushforward is
// a 0-cycle supported on S
Rat push_E4_degree() {
    const NormalBundleData nb = normal_bundle_data();
    return -(nb.c1N_HS * nb.c1N_HS * nb.HS2 - nb.c2N);
}

}  // namespace

Rat blowup_eval(const BlClass& m) {
    if (m.is_zero()) return 0;
    if (!m.is_homogeneous(4)) throw std::domain_error("blowup_eval: class is not of degree 4");
    Rat out = integrate_F(m.coeff(0));
    // E^1: pi_* E = 0
    if (!m.coeff(2).is_zero()) out += integrate_F(m.coeff(2) * push_E2());
    if (!m.coeff(3).is_zero()) out += integrate_F(m.coeff(3) * push_E3());
    const FClass& top = m.coeff(4);
    if (!top.is_zero()) out += top.coeff(0, 0) * push_E4_degree();
    return out;
}

FClass blowdown_push(const BlClass& m) {
    if (!m.coeff(4).is_zero())
        throw std::domain_error(
            "blowdown_push: E^4 term pushes to a 0-cycle on S, outside this model");
    return m.coeff(0) + m.coeff(2) * push_E2() + m.coeff(3) * push_E3();
}

Rat in_S_coefficient(const FClass& f) {
    if (f.is_zero()) return 0;
    const FClass base = FClass::H_F() * class_S();  // i_*(H_S)
    const Rat r = f.coeff(3, 0) / base.coeff(3, 0);
    if (f != base * r) throw std::domain_error("in_S_coefficient: not a multiple of i_*(H_S)");
    return r;
}

// ----------------------------------------------------------- V pipeline

ClassVResult class_V_pipeline() {
    ClassVResult r;
    const BlClass H = BlClass::H(), E = BlClass::E();

    // pullback under the blowdown of the tautological subbundle on F
    r.c1_U2_pi = -H;
    r.c2_U2_pi = BlClass::pull_from_F(FClass::c2());

    // divisor identities for the plane bundle and for the Voisin pullback
    r.c1_U3 = H * rat(-3) + E;
    r.c1_U2_phi = H * rat(-7) + E * 3;

    // residual quotient line: 0 -> U2_pi -> U3 -> resid -> 0
    r.c1_resid = r.c1_U3 - r.c1_U2_pi;
    r.c2_U3 = r.c2_U2_pi + r.c1_U2_pi * r.c1_resid;

    // 0 -> U2_phi -> U3 -> Q -> 0 determines c2 of the Voisin pullback
    const BlClass c1_QG = r.c1_U3 - r.c1_U2_phi;
    r.c2_U2_phi = r.c2_U3 - r.c1_U2_phi * c1_QG;

    // V is the vanishing of a section of U2_phi twisted down by the residual
    // line: c2(U tensor L) = c2(U) + c1(U) c1(L) + c1(L)^2 with c1(L) = -c1_resid
    r.tildeV = r.c2_U2_phi - r.c1_U2_phi * r.c1_resid + r.c1_resid * r.c1_resid;
    r.V = blowdown_push(r.tildeV);
    return r;
}

CurveGeneraResult class_C_and_genera() {
    const ClassVResult v = class_V_pipeline();
    const NormalBundleData nb = normal_bundle_data();
    CurveGeneraResult r;

    const BlClass Ctilde = v.tildeV * BlClass::E();
    r.C_pushdown = blowdown_push(Ctilde);
    r.C_in_S_coeff = in_S_coefficient(r.C_pushdown);
    r.C_beta_pairing = integrate_F(FClass::H_F() * r.C_pushdown);
    r.C_curve_class =
        FClass::H_F().pow(3) * (r.C_beta_pairing / integrate_F(FClass::H_F().pow(4)));

    // adjunction on tilde V: K = 3H there and E restricts to 2H, so
    // 2g - 2 = (K + E)|_V . E|_V = (3 + 2) * 2 * H^2 . [tilde V]
    const Rat K_mult = 3, E_mult = 2;
    const Rat tg2_tC = blowup_eval(v.tildeV * BlClass::H().pow(2) * ((K_mult + E_mult) * E_mult));
    r.g_tildeC = tg2_tC / 2 + 1;

    // adjunction on S: K_S = c1(N) since K_F = 0, and C = (in-S coeff) * H_S
    const Rat tg2_C = (nb.c1N_HS + r.C_in_S_coeff) * r.C_in_S_coeff * nb.HS2;
    r.g_C = tg2_C / 2 + 1;

    r.nodes = r.g_C - r.g_tildeC;
    return r;
}

// ------------------------------------------------------- degree formulas

XClass d3_pullback() {
    // boundary pullbacks: lambda -> 9 H_X, delta_0 -> [W]
    return (lambda_class() * 132 - class_W() * 15) * 2;
}

long degree_psi() {
    // double cover of pencils of trigonal series on the genus-4 curves
    const long g = 4, d = 3;
    return 2 * (2 * g - 2 + 2 * d);
}

long degree_phi() {
    const FClass beta = classes_R_Rprime_N().Rprime.beta();
    return beta.coeff(0, 0).get_num().get_si();
}

RRNResult classes_R_Rprime_N() {
    RRNResult r;
    const IClass l = IClass::l();
    const IClass qg = q_pull(FClass::H_F());

    // R comes from c1(O(1)) + u1^*(4H - 2E_S) on the pullback family over the
    // blowup; pushing to I kills the E_S part and is the identity on the rest
    r.R = l + qg * 4;

    // R' from c1(O(1)) + u2^*(-2H + E_S) pushed along the degree-16 cover:
    // O(1) pushes to 16 l, u2^*H to 28 q^*H_F, u2^*E_S to 60 q^*H_F
    r.Rprime = l * 16 + qg * (-2 * 28 + 60);

    // N = q^{-1}(V)
    r.N = q_pull(class_V_pipeline().V);
    r.N_alt_form =
        "21*(l*q*H_F - l^2) under the adopted relation l^2 = l*q*H_F - q*c2 "
        "(forced by q_push(l^2) = H_F and q_push(l^3) = H_F^2 - c2); the "
        "opposite sign convention writes the same class as 21*(l^2 - l*q*H_F)";
    r.V_image = p_push(r.N);
    return r;
}

// --------------------------------------------------------- identity suite

namespace {

IdentityItem item(std::string id, std::string desc, std::string expected, std::string computed) {
    bool ok = expected == computed;
    return {std::move(id), std::move(desc), std::move(expected), std::move(computed), ok};
}

std::string rs(const Rat& r) { return to_string(r); }

}  // namespace

std::vector<IdentityItem> identity_suite() {
    std::vector<IdentityItem> out;
    const FClass g = FClass::H_F(), c = FClass::c2();
    const FClass s2 = g * g - c;

    out.push_back(item("L2.1-HF4", "H_F^4", "108", rs(integrate_F(g.pow(4)))));
    out.push_back(item("L2.1-HF2c2", "H_F^2.c2", "45", rs(integrate_F(g * g * c))));
    out.push_back(item("L2.1-c2sq", "c2^2", "27", rs(integrate_F(c * c))));
    out.push_back(item("L2.2-HF2s2", "H_F^2.(H_F^2 - c2)", "63", rs(integrate_F(g * g * s2))));
    out.push_back(item("L2.2-s2sq", "(H_F^2 - c2)^2", "45", rs(integrate_F(s2 * s2))));
    out.push_back(item("L2.3-betaHF", "beta.H_F with beta = (1/36)H_F^3", "3",
                       rs(integrate_F(beta_class() * g))));
    out.push_back(item("L2.4-transfer",
                       "point transfer: q_push(l^4) pairs with H_F like (1/6)H_F^3", "18",
                       rs(integrate_F(g * q_push(IClass::l_power(4))))));
    out.push_back(
        item("L2.5-omegap", "relative dualizing class", "q*H_F + l", omega_p().to_string()));
    out.push_back(item("L2.6-grothendieck",
                       "normal form of l^2 (sign forced by the q_push values)",
                       "-q*c2 + l*q*H_F",
                       grothendieck_reduce({FClass::zero(), FClass::zero(),
                                            FClass::constant(1)})
                           .to_string()));
    out.push_back(item("L2.7-pushHF2", "p_push(q_pull(H_F^2))", "21*H_X",
                       p_push(q_pull(g * g)).to_string()));
    out.push_back(item("L2.7-pushl2", "p_push(l^2)", "0", p_push(IClass::l_power(2)).to_string()));
    out.push_back(item("L2.7-pushlqHF", "p_push(l.q_pull(H_F))", "6*H_X",
                       p_push(IClass::l() * q_pull(g)).to_string()));
    out.push_back(item("L2.8-W75", "discriminant class of p", "75*H_X", class_W().to_string()));
    out.push_back(item("L2.9-omegaS180", "p_push(omega_p.q_pull([S]))", "180*H_X^2",
                       p_push(omega_p() * q_pull(class_S())).to_string()));
    out.push_back(item("L2.10-lambda9", "Hodge class of p", "9*H_X", lambda_class().to_string()));
    out.push_back(item("L2.11-NSF",
                       "H_S^2 recomputed as H_F^2.[S] (c1 N = 3H_S, c2 N = 1125)",
                       rs(normal_bundle_data().HS2), rs(integrate_F(g * g * class_S()))));
    return out;
}

}  // namespace fanolines
