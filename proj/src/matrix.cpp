#include "fanolines/matrix.hpp"

#include <algorithm>

namespace fanolines {

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows * cols), Poly::zero(ring_)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    PolyMatrix s(ring_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return s;
}

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return Poly::constant(m.ring(), Rat(1));

    PolyMatrix a = m;
    // strip rational row contents up front; Bareiss then works on integer-content rows
    Rat scale(1);
    int sign = 1;
    for (int i = 0; i < n; ++i) {
        Rat c(0);
        for (int j = 0; j < n; ++j) c = rat_gcd(c, a.at(i, j).content());
        if (c == 0) return Poly::zero(m.ring());  // zero row
        if (c != 1) {
            scale *= c;
            Rat inv = 1 / c;
            for (int j = 0; j < n; ++j) a.at(i, j) *= inv;
        }
    }

    Poly prev = Poly::constant(m.ring(), Rat(1));
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return Poly::zero(m.ring());
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = divexact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
            a.at(i, k) = Poly::zero(m.ring());
        }
        prev = a.at(k, k);
    }
    Poly det = a.at(n - 1, n - 1) * scale;
    return sign < 0 ? -det : det;
}

namespace {

// next k-subset of {0..n-1} in lexicographic order; false when exhausted
bool next_subset(std::vector<int>& s, int n) {
    int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[static_cast<size_t>(i)] < n - k + i) {
            ++s[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_subset(int k) {
    std::vector<int> s(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<size_t>(i)] = i;
    return s;
}

}  // namespace

std::vector<Poly> minors(const PolyMatrix& m, int k) {
    if (k < 0 || k > m.rows() || k > m.cols()) throw std::invalid_argument("minor size out of range");
    std::vector<Poly> out;
    std::vector<int> rs = first_subset(k);
    do {
        std::vector<int> cs = first_subset(k);
        do {
            out.push_back(determinant(m.submatrix(rs, cs)));
        } while (next_subset(cs, m.cols()));
    } while (next_subset(rs, m.rows()));
    return out;
}

int rank(const PolyMatrix& m) {
    PolyMatrix a = m;
    int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
        for (int i = r + 1; i < rows; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Poly pivot = a.at(r, col), entry = a.at(i, col);
            for (int j = col; j < cols; ++j)
                a.at(i, j) = (a.at(i, j) * pivot - a.at(r, j) * entry).primitive_part();
        }
        ++r;
    }
    return r;
}

PolyMatrix jacobian(const std::vector<Poly>& polys) {
    if (polys.empty()) throw std::invalid_argument("jacobian of empty system");
    RingPtr ring = polys.front().ring();
    int n = ring->nvars();
    PolyMatrix j(ring, static_cast<int>(polys.size()), n);
    for (size_t i = 0; i < polys.size(); ++i)
        for (int v = 0; v < n; ++v) j.at(static_cast<int>(i), v) = polys[i].derivative(v);
    return j;
}

RatMatrix eval_at(const PolyMatrix& m, const std::vector<Rat>& point) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).evaluate(point);
    return r;
}

namespace {

// Gauss-Jordan to reduced row echelon form; returns pivot columns
std::vector<int> rref(RatMatrix& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(p, j));
        Rat inv = 1 / a.at(r, col);
        for (int j = col; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const RatMatrix& m) {
    RatMatrix a = m;
    return static_cast<int>(rref(a).size());
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    RatMatrix a = m;
    int n = a.rows();
    Rat det(1);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n && pivot < 0; ++i)
            if (a.at(i, k) != 0) pivot = i;
        if (pivot < 0) return Rat(0);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
            det = -det;
        }
        det *= a.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            Rat f = a.at(i, k) / a.at(k, k);
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return det;
}

int rank_at(const PolyMatrix& m, const std::vector<Rat>& point) { return rank(eval_at(m, point)); }

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<size_t>(m.cols()), Rat(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -a.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace fanolines
