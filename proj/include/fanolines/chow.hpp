#pragma once

// Intersection calculus around the variety of lines F of a smooth cubic
// fourfold X: the invariant subring of CH(F) generated by the polarization
// H_F and c2(U_F), the universal line I = P(U_F) with its two projections
// q : I -> F and p : I -> X, powers of H_X on X, and classes on the blowup
// of F along the surface S of lines of second type.

#include <array>
#include <string>
#include <vector>

#include "fanolines/poly.hpp"
#include "fanolines/rational.hpp"

namespace fanolines {

// Polynomial in H_F (degree 1) and c2 = c2(U_F) (degree 2) with rational
// coefficients, truncated above total degree 4 = dim F.  Everything the
// calculus needs lives in this subring; integration is defined in degree 4.
class FClass {
  public:
    FClass();
    explicit FClass(Poly p);  // must live in FClass::ring(); truncates

    static RingPtr ring();  // {"H_F", "c2"}
    static FClass zero();
    static FClass constant(const Rat& r);
    static FClass H_F();
    static FClass c2();
    static FClass parse(std::string_view text);

    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    Rat coeff(int a, int b) const;  // of H_F^a * c2^b

    int top_degree() const;  // weighted; -1 for zero
    bool is_homogeneous(int d) const;
    FClass graded_piece(int d) const;

    FClass operator-() const;
    FClass operator+(const FClass& o) const;
    FClass operator-(const FClass& o) const;
    FClass operator*(const FClass& o) const;
    FClass operator*(const Rat& s) const;
    FClass& operator+=(const FClass& o) { return *this = *this + o; }
    FClass& operator-=(const FClass& o) { return *this = *this - o; }
    FClass& operator*=(const FClass& o) { return *this = *this * o; }
    FClass pow(unsigned e) const;
    bool operator==(const FClass& o) const { return p_ == o.p_; }
    bool operator!=(const FClass& o) const { return !(*this == o); }

    std::string to_string() const { return p_.to_string(); }

  private:
    Poly p_;
    void truncate();
};

// Integration against the fundamental class: transfer H_F -> sigma_1,
// c2 -> sigma_{1,1}, multiply by the class of F in G(2,6), integrate there.
// Requires a homogeneous class of degree 4 (zero is allowed).
Rat integrate_F(const FClass& a);

// r * H_X^d on the cubic fourfold itself, 0 <= d <= 4; H_X^4 integrates to 3.
class XClass {
  public:
    XClass() = default;  // zero
    XClass(Rat r, int d);

    static XClass H_X(int d = 1) { return XClass(1, d); }

    const Rat& scalar() const { return r_; }
    int power() const { return d_; }
    bool is_zero() const { return r_ == 0; }

    XClass operator-() const { return XClass(-r_, d_); }
    XClass operator+(const XClass& o) const;
    XClass operator-(const XClass& o) const { return *this + (-o); }
    XClass operator*(const XClass& o) const { return XClass(r_ * o.r_, d_ + o.d_); }
    XClass operator*(const Rat& s) const { return XClass(r_ * s, d_); }
    bool operator==(const XClass& o) const { return r_ == o.r_ && d_ == o.d_; }
    bool operator!=(const XClass& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    Rat r_{};
    int d_ = 0;
};

Rat integrate_X(const XClass& a);  // degree of a 0-cycle; requires d = 4

// Class on I = P(U_F) in the normal form alpha + l*beta with alpha, beta
// pulled back from F and l = c1(O_I(1)) = p^*H_X.  Products are reduced by
// the tautological relation l^2 = l*q^*H_F - q^*c2: the sign is the one
// forced by q_push(l^2) = H_F together with q_push(l^3) = H_F^2 - c2.
class IClass {
  public:
    IClass() = default;
    IClass(FClass alpha, FClass beta);

    static IClass l() { return IClass(FClass::zero(), FClass::constant(1)); }
    static IClass l_power(unsigned k);

    const FClass& alpha() const { return a_; }
    const FClass& beta() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    // codimension d means alpha homogeneous of degree d, beta of degree d-1
    bool is_homogeneous(int d) const;

    IClass operator-() const { return IClass(-a_, -b_); }
    IClass operator+(const IClass& o) const { return IClass(a_ + o.a_, b_ + o.b_); }
    IClass operator-(const IClass& o) const { return IClass(a_ - o.a_, b_ - o.b_); }
    IClass operator*(const IClass& o) const;
    IClass operator*(const Rat& s) const { return IClass(a_ * s, b_ * s); }
    IClass pow(unsigned e) const;
    bool operator==(const IClass& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const IClass& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    FClass a_, b_;
};

// normal form of sum_k l^k * lpowers[k]
IClass grothendieck_reduce(std::vector<FClass> lpowers);

IClass q_pull(const FClass& a);
FClass q_push(const IClass& a);  // fiber integration: alpha + l*beta -> beta

// q_* p^* H_X^d as a class on F, d = 0..5.  The d = 4 entry is the transfer
// of the point cycle 3[x] (the curve of lines through a point), not the
// reduction of l^4; the two differ but have the same pairing against H_F.
FClass transfer_HX(int d);

// p_* via the projection formula and the adjoint pairing against powers of
// H_X; input must be homogeneous.  p_pull sends r*H_X^d to r*l^d reduced.
XClass p_push(const IClass& a);
IClass p_pull(const XClass& x);

FClass class_S();        // surface of lines of second type: 5*(H_F^2 - c2)
XClass class_W();        // discriminant of p: p_push(q_pull([S])) = 75*H_X
XClass lambda_class();   // Hodge class of p: (1/12)(p_push(omega_p^2) + [W]) = 9*H_X
IClass omega_p();        // relative dualizing sheaf: q^*H_F + l
FClass beta_class();     // (1/36)*H_F^3
FClass class_Cx();       // curve of lines through a general point: (1/18)*H_F^3

// intersection data of S inside F: c1(N_{S/F}) = c1N_HS * H_S, c2(N_{S/F}),
// and the number H_S^2 = H_F^2.[S]
struct NormalBundleData {
    Rat c1N_HS = 3;
    Rat c2N = 1125;
    Rat HS2 = 315;
};
NormalBundleData normal_bundle_data();

// Class on Bl_S F: sum_b pi^*(coeff b) * E^b with E the exceptional divisor.
// H denotes pi^*H_F; the FClass coefficients may also involve pi^*c2.
class BlClass {
  public:
    BlClass();

    static BlClass zero() { return BlClass(); }
    static BlClass constant(const Rat& r) { return pull_from_F(FClass::constant(r)); }
    static BlClass H() { return pull_from_F(FClass::H_F()); }
    static BlClass E();
    static BlClass pull_from_F(const FClass& a);

    const FClass& coeff(int b) const;  // of E^b, 0 <= b <= 4
    bool is_zero() const;

    int top_degree() const;  // -1 for zero
    bool is_homogeneous(int d) const;

    BlClass operator-() const;
    BlClass operator+(const BlClass& o) const;
    BlClass operator-(const BlClass& o) const;
    BlClass operator*(const BlClass& o) const;
    BlClass operator*(const Rat& s) const;
    BlClass& operator+=(const BlClass& o) { return *this = *this + o; }
    BlClass& operator-=(const BlClass& o) { return *this = *this - o; }
    BlClass& operator*=(const BlClass& o) { return *this = *this * o; }
    BlClass pow(unsigned e) const;
    bool operator==(const BlClass& o) const;
    bool operator!=(const BlClass& o) const { return !(*this == o); }

    std::string to_string() const;  // polynomial in H, E, c2

  private:
    std::array<FClass, 5> c_;
    void truncate();
};

// Degree of a 0-cycle on the blowup.  The monomial table is derived from
// pi_*(E^k) = (-1)^(k-1) i_*(s_(k-2) N_{S/F}):
//   H^4 = 108, H^3 E = 0, H^2 E^2 = -315, H E^3 = -945, E^4 = -1710.
Rat blowup_eval(const BlClass& m);

// pi_* at class level; the E^4 coefficient must vanish (its pushforward is a
// 0-cycle on S, which this model only handles numerically in blowup_eval).
FClass blowdown_push(const BlClass& m);

// write f = r * i_*(H_S) = r * H_F * [S]; throws when f is not a multiple
Rat in_S_coefficient(const FClass& f);

// The class of the surface V swept by the lines of second type, computed on
// the blowup: twist the bundle defining V, run the two tautological exact
// sequences, apply the divisor identities of the induced maps, push down.
struct ClassVResult {
    BlClass c1_U2_pi;   // -H
    BlClass c2_U2_pi;   // pi^* c2
    BlClass c1_U3;      // -3H + E
    BlClass c2_U3;      // pi^* c2 + 2H^2 - HE
    BlClass c1_U2_phi;  // -7H + 3E
    BlClass c2_U2_phi;  // pi^* c2 + 30H^2 - 27HE + 6E^2
    BlClass c1_resid;   // quotient line bundle: -2H + E
    BlClass tildeV;     // pi^* c2 + 20H^2 - 18HE + 4E^2
    FClass V;           // 21*c2
};
ClassVResult class_V_pipeline();

// The curve C = V cap S, its strict transform, genera, and the node count.
struct CurveGeneraResult {
    FClass C_pushdown;     // pi_*[tilde C] = 30*(H_F^3 - H_F*c2) = i_*(6 H_S)
    Rat C_in_S_coeff;      // 6
    Rat C_beta_pairing;    // deg_{H_F} C = 1890
    FClass C_curve_class;  // (35/2)*H_F^3 (representative with that degree)
    Rat g_tildeC;          // 4726
    Rat g_C;               // 8506
    Rat nodes;             // 3780
};
CurveGeneraResult class_C_and_genera();

XClass d3_pullback();  // 2*(132*lambda - 15*delta_0) with delta_0 -> [W]: 126*H_X
long degree_psi();     // Riemann-Hurwitz for the two trigonal pencils: 24
long degree_phi();     // l-coefficient of [R']: 16

// The residuation correspondence R, its transpose R', and N = q^{-1}(V).
struct RRNResult {
    IClass R;       // 4*q^*H_F + l
    IClass Rprime;  // 4*q^*H_F + 16*l
    IClass N;       // 21*q^*c2
    std::string N_alt_form;  // the same class written in l, plus the sign note
    XClass V_image;          // p_push(q_pull([V])) = 126*H_X
};
RRNResult classes_R_Rprime_N();

struct IdentityItem {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    bool pass;
};
// the standard catalogue of intersection-theoretic identities on F, I, X
std::vector<IdentityItem> identity_suite();

}  // namespace fanolines
