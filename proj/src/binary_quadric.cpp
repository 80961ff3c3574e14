#include "fanolines/binary_quadric.hpp"

#include <stdexcept>

#include "fanolines/matrix.hpp"

namespace fanolines {

Rat discriminant(const BinaryQuadric& q) { return q.b * q.b - 4 * q.a * q.c; }

Rat sylvester_resultant(const BinaryQuadric& q0, const BinaryQuadric& q1) {
    RatMatrix s(4, 4);
    const Rat row0[4] = {q0.a, q0.b, q0.c, Rat(0)};
    const Rat row1[4] = {q1.a, q1.b, q1.c, Rat(0)};
    for (int j = 0; j < 4; ++j) {
        s.at(0, j) = row0[j];
        s.at(2, j) = row1[j];
        if (j > 0) {
            s.at(1, j) = row0[j - 1];
            s.at(3, j) = row1[j - 1];
        }
    }
    return determinant(s);
}

bool proportional(const BinaryQuadric& q0, const BinaryQuadric& q1) {
    return q0.a * q1.b == q0.b * q1.a && q0.a * q1.c == q0.c * q1.a && q0.b * q1.c == q0.c * q1.b;
}

BinaryFormReport binary_form_tools(const BinaryQuadric& q0, const BinaryQuadric& q1) {
    if (q0.is_zero() && q1.is_zero())
        throw std::invalid_argument("binary_form_tools: both quadrics are zero");
    BinaryFormReport r;
    r.resultant = sylvester_resultant(q0, q1);
    r.discriminants = {discriminant(q0), discriminant(q1)};
    if (proportional(q0, q1))
        r.common_root_count = 2;
    else if (r.resultant == 0)
        r.common_root_count = 1;
    else
        r.common_root_count = 0;
    return r;
}

}  // namespace fanolines
