#pragma once

#include <iosfwd>
#include <vector>

#include "steiner/rational.hpp"

namespace steiner {

// Dense exact rational matrix, row-major, 0-based indexing.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

    static RatMat identity(int n);
    static RatMat all_ones(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const RatMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& a, const RatVec& x);
RatMat mat_add(const RatMat& a, const RatMat& b);
RatMat mat_scale(const Rat& c, const RatMat& a);
RatMat transpose(const RatMat& a);

// Determinant of an integer matrix by fraction-free Bareiss elimination
// with row pivoting. Destroys its argument.
Int bareiss_det(std::vector<Int>& m, int n);

// Exact determinant: clears denominators row by row, then integer Bareiss.
Rat det(const RatMat& a);

// Exact inverse. Fraction-free Bareiss forward elimination on the
// denominator-cleared augmented system, rational back-substitution.
// Throws std::domain_error if singular.
RatMat inverse(const RatMat& a);

int rank(const RatMat& a);

// Leading principal minors det(A[0..i][0..i]) for i = 0..n-1.
std::vector<Rat> leading_principal_minors(const RatMat& a);

// Shared text format with hypermatrices: header "2 n" for square (or
// "2 rows cols"), then entries in row-major order as exact rationals.
void write_matrix(std::ostream& os, const RatMat& a);
RatMat read_matrix(std::istream& is);

}  // namespace steiner
