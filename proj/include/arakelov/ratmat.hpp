#pragma once

#include <initializer_list>
#include <vector>

#include "arakelov/numeric.hpp"

namespace arakelov {

using RatVec = std::vector<Rat>;

// Dense rational matrix, row-major. Small dimensions only (rank <= 16 or so).
class RatMat {
  public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    RatMat(std::initializer_list<std::initializer_list<Rat>> init);

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatMat transpose() const;
    RatMat operator*(const RatMat& rhs) const;
    RatVec operator*(const RatVec& v) const;
    RatMat operator+(const RatMat& rhs) const;
    RatMat operator-(const RatMat& rhs) const;
    RatMat scaled(const Rat& c) const;
    bool operator==(const RatMat& rhs) const = default;

    bool is_symmetric() const;
    // Symmetric positive definite, decided exactly (Cholesky-style elimination pivots > 0).
    bool is_positive_definite() const;

    Rat det() const;
    int rank() const;
    RatMat inverse() const;           // throws DomainError if singular
    RatVec solve(const RatVec& b) const;  // square solve, throws if singular

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// W^T G W for an injection W (cols(W) = dim of the subspace).
RatMat congruence(const RatMat& gram, const RatMat& w);

Rat dot(const RatVec& a, const RatVec& b);

// Exact determinant of an integer matrix via Bareiss elimination.
Int int_det(std::vector<std::vector<Int>> m);

// Smith normal form diagonal (invariant factors, non-negative, divisibility chain).
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m);

}  // namespace arakelov
