#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fanolines/binary_quadric.hpp"
#include "fanolines/groebner.hpp"
#include "fanolines/matrix.hpp"
#include "fanolines/poly.hpp"

namespace fanolines {

// Local-coordinate models for lines on a cubic fourfold X in P^5.  The line
// under study is l0 = {x2 = x3 = x4 = x5 = 0}; a projective change of
// coordinates puts the cubic equation into one normal form per line type.
// From those forms we extract exact certificates: smoothness of the curve
// C_x of lines through a point of l0, the image of l0 under the dual map,
// the residual pencil of a second-type line with its two-to-one fibre
// count, the minor-matrix certificate for the triple-line locus, and the
// normalisation of the discriminant quartic R.

using CubicForm = Poly;

enum class CubicKind { Type1, Type2, Type2Full, Triple };

// Coefficient data for the normal forms.  Type1/Type2/Type2Full read Q0, Q1
// (quadrics in x2..x5), P (a cubic in x2..x5) and, for Type2Full, the
// hyperplane-family scalars c0..d1.  Triple reads the polynomial slots as
// the quadric multipliers of x3, x4, x5 -- supported in x0..x3, x0..x4,
// x0..x5 respectively -- plus the scaling c and the residual-line data
// y1, y2, y1', y2' (spelled yp1, yp2).
struct NormalFormData {
    Poly Q0, Q1, P;                // treated as zero when default-constructed
    Rat c0, d0, c01, d01, c1, d1;  // Type2Full only
    Rat c, y1, y2, yp1, yp2;       // Triple only
};

RingPtr cubic_ring();  // Q[x0..x5]

// the normal-form cubic itself; throws std::invalid_argument when the data
// violates the variable-support or homogeneity constraints of the kind
CubicForm build_cubic(CubicKind kind, const NormalFormData& data);

// scenario text: one "key = value" per line, '#' starts a comment.  Keys are
// Q0, Q1, P in the usual polynomial grammar and the scalar coefficients of
// NormalFormData by field name.
NormalFormData parse_scenario(std::string_view text);

// --- the curve C_x of lines through x = [1:a:0:0:0:0] ----------------------

RingPtr slope_ring();  // Q[a, x1', x2, x3, x5]

struct SlopeCurve {
    Poly T2, T3;  // the quadric and cubic cutting C_x in the P^3 of slopes
};

// Substitutes x0 = 1, x1 = a + x1' and eliminates x4 against the linear
// term of the normal form (x4 = -(a^2 x3 + a x5) for the first type,
// x4 = -a^2 x5 for the second); `a` stays symbolic.  Only Type1/Type2 are
// meaningful here; anything else, or a cubic that fails to reduce, throws.
SlopeCurve curve_through_point(const CubicForm& F, CubicKind kind);
SlopeCurve curve_through_point(const CubicForm& F, CubicKind kind, const Rat& a);

struct TransversalityReport {
    std::array<Poly, 4> grad_T2;  // d/d(x1',x2,x3,x5) at (1,0,0,0)
    std::array<Poly, 4> grad_T3;  // entries are polynomials in a
    int rank = 0;                 // generic rank of the 2x4 Jacobian
    bool smooth = false;          // rank 2 <=> C_x smooth at the point of l0
};

TransversalityReport transversality_at_line(const CubicForm& F, CubicKind kind);

// --- tangent hyperplanes along the line ------------------------------------

RingPtr st_ring();  // Q[s,t]

struct DualLineImage {
    std::array<Poly, 6> gradient;  // grad F at [s:t:0:0:0:0]
    int span_rank = 0;             // dimension of the span over all [s:t]
};

// for a second-type line the gradient is (0,0,0,0,s^2,t^2) and the span is a
// pencil of hyperplanes; a first-type line gives a three-dimensional span
DualLineImage dual_map_image(const CubicForm& F);

// --- residual pencil of a second-type line ---------------------------------

struct PencilPair {
    BinaryQuadric q0, q1;  // Q0, Q1 restricted to the plane line x4 = x5 = 0
};

// restriction (x2,x3) = (lam,mu); throws std::domain_error when both
// quadrics restrict to zero (the plane would lie inside the cubic)
PencilPair residual_pencil(const NormalFormData& data);

struct PencilClass {
    int common_roots = 0;      // with multiplicity; 2 iff proportional
    bool double_root = false;  // proportional with coincident roots
};

PencilClass classify_pencil(const PencilPair& p);

struct FiberDegree {
    int degree = 2;
    bool double_root = false;
};

// root count of x0*Q0 + x1*Q1 over the point [x0:x1] of the line; throws
// std::domain_error when the combination vanishes identically
FiberDegree fiber_degree_check(const PencilPair& p, const Rat& x0, const Rat& x1);

// --- tangency matrix of the triple-line family ------------------------------

// The conditions for a cubic through a triple conic direction assemble into
// a 10x12 matrix.  Rows are the degree-3 monomials in s0, s1, s2 ordered
// s0^3, s0^2 s1, s0^2 s2, s0 s1^2, s0 s1 s2, s0 s2^2, s1^3, s1^2 s2,
// s1 s2^2, s2^3.  For u = 0,1,2 the column block 3u..3u+2 holds the
// coefficient vector A_{m - e_u} of the three quadric multipliers (zero
// when the row monomial m has no s_u); columns 9 and 10 carry c against
// s0 s2^2 and s1 s2^2, and column 11 the constant against s2^3.  A is
// indexed by the degree-2 exponents in the order
// (2,0,0), (1,1,0), (1,0,1), (0,2,0), (0,1,1), (0,0,2).
PolyMatrix tangent_matrix(const std::array<std::array<Poly, 3>, 6>& A, const Poly& c);

// the two-parameter instance whose maximal minors certify that the tangency
// conditions have no common zero away from the origin
PolyMatrix certificate_matrix();         // 10x12 over Q[kappa, lambda]
std::vector<Poly> certificate_minors();  // all 66 maximal minors of it

struct MinorsCertificate {
    int minor_count = 0;
    int nonzero_minors = 0;
    OriginCheck origin;  // True = the minors vanish only at kappa = lambda = 0
};

MinorsCertificate minors_certificate(int power_bound = 20, Budget* budget = nullptr);

// --- normalisation of the discriminant quartic R ----------------------------

RingPtr normalisation_ring();  // Q[w, w', x1, x2, x3, y1, y2, y3]
RingPtr resultant_ring();      // Q[x1, x2, x3, y1, y2, y3]

// six generators cutting the graph of the double cover that normalises R
std::vector<Poly> normalisation_generators();
// (x1 y3 - x3 y1)^2 - (x1 y2 - x2 y1)(x2 y3 - x3 y2)
Poly resultant_quartic();

struct NormalisationReport {
    bool elimination_ok = false;      // eliminating w, w' recovers exactly (R)
    bool singular_locus_ok = false;   // Sing R = rank<=1 locus, both inclusions
    std::vector<int> minor_powers;    // least k with minor^k in the Jacobian ideal
    std::vector<int> partial_powers;  // least k with (dR/dv)^k in the minor ideal
    bool branch_ok = false;       // two sheets with non-parallel normals
    bool branch_skipped = false;  // samples == 0
    int samples_checked = 0;      // random pairs plus the w' = x3 = 0 corners
    std::string note;
};

// `samples` random points of Sing R (plus fixed corner points exercising the
// w' = x3 = 0 chart); radical membership is tested up to power 10
NormalisationReport resultant_suite(int samples = 25, std::uint64_t seed = 0,
                                    Budget* budget = nullptr);

// --- degree of the second-type surface in P^5 -------------------------------

struct WDegreeReport {
    Rat surface_degree;     // [S] . sigma2|_F, the degree of the image surface
    Rat class_coefficient;  // coefficient of the image class on the cubic
};

WDegreeReport w_degree_report();

}  // namespace fanolines
