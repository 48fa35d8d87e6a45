#pragma once

#include "beq/exact_scalar.hpp"

#include <cstddef>
#include <vector>

namespace beq {

/// Dense matrix over ExactScalar. All entries must share a radicand
/// (pure rationals mix with anything).
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    ExactScalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const ExactScalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    ExactMatrix transpose() const;
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);

    std::vector<ExactScalar> apply(const std::vector<ExactScalar>& v) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<ExactScalar> entries_;
};

/// Exact inverse via fraction-free (Bareiss) elimination followed by exact
/// back substitution. Throws SingularError when the matrix has no inverse.
ExactMatrix invert_matrix(const ExactMatrix& m);

/// Exact basis of the right nullspace; empty iff m is injective.
std::vector<std::vector<ExactScalar>> nullspace_basis(const ExactMatrix& m);

/// Solves m x = rhs exactly. Throws SingularError (no pivot for a needed
/// column with free remainder) or InconsistentError (no solution).
std::vector<ExactScalar> solve_linear(const ExactMatrix& m, const std::vector<ExactScalar>& rhs);

} // namespace beq
