#pragma once

#include <vector>

#include "fanolines/poly.hpp"

namespace fanolines {

class PolyMatrix {
  public:
    PolyMatrix(RingPtr ring, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }

    Poly& at(int i, int j) { return e_[static_cast<size_t>(i * cols_ + j)]; }
    const Poly& at(int i, int j) const { return e_[static_cast<size_t>(i * cols_ + j)]; }

    PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  private:
    RingPtr ring_;
    int rows_, cols_;
    std::vector<Poly> e_;
};

// fraction-free (Bareiss) determinant with row-content stripping
Poly determinant(const PolyMatrix& m);

// all k x k minors, in lexicographic order of (row index set, column index set)
std::vector<Poly> minors(const PolyMatrix& m, int k);

// rank over the fraction field (generic rank), via fraction-free elimination
int rank(const PolyMatrix& m);

PolyMatrix jacobian(const std::vector<Poly>& polys);

// exact rational matrices
class RatMatrix {
  public:
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols), Rat(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return e_[static_cast<size_t>(i * cols_ + j)]; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i * cols_ + j)]; }

  private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

RatMatrix eval_at(const PolyMatrix& m, const std::vector<Rat>& point);
Rat determinant(const RatMatrix& m);
int rank(const RatMatrix& m);
int rank_at(const PolyMatrix& m, const std::vector<Rat>& point);
// basis of the right kernel {v : Mv = 0}
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

}  // namespace fanolines
