#pragma once

#include <utility>

#include "fanolines/rational.hpp"

namespace fanolines {

// a*L^2 + b*L*M + c*M^2
struct BinaryQuadric {
    Rat a, b, c;

    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    Rat eval(const Rat& lam, const Rat& mu) const { return a * lam * lam + b * lam * mu + c * mu * mu; }
    bool operator==(const BinaryQuadric&) const = default;
};

Rat discriminant(const BinaryQuadric& q);

// determinant of the 4x4 Sylvester matrix
Rat sylvester_resultant(const BinaryQuadric& q0, const BinaryQuadric& q1);

// one may be zero; vanishing of all 2x2 minors of the coefficient rows
bool proportional(const BinaryQuadric& q0, const BinaryQuadric& q1);

struct BinaryFormReport {
    Rat resultant;
    std::pair<Rat, Rat> discriminants;
    int common_root_count = 0;  // 2 = proportional, 1 = resultant vanishes, 0 = disjoint
};

// throws std::invalid_argument when both quadrics vanish identically
BinaryFormReport binary_form_tools(const BinaryQuadric& q0, const BinaryQuadric& q1);

}  // namespace fanolines
