#include "beq/exact_matrix.hpp"

#include "beq/errors.hpp"

#include <utility>

namespace beq {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw SizeMismatchError("matrix product shape mismatch");
    ExactMatrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const ExactScalar& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) p.at(r, c) += ark * b.at(k, c);
        }
    return p;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw SizeMismatchError("matrix sum shape mismatch");
    ExactMatrix s = a;
    for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] += b.entries_[i];
    return s;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw SizeMismatchError("matrix difference shape mismatch");
    ExactMatrix s = a;
    for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] -= b.entries_[i];
    return s;
}

std::vector<ExactScalar> ExactMatrix::apply(const std::vector<ExactScalar>& v) const {
    if (v.size() != cols_) throw SizeMismatchError("matrix-vector shape mismatch");
    std::vector<ExactScalar> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

ExactMatrix invert_matrix(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatchError("invert_matrix requires a square matrix");
    const std::size_t n = m.rows();
    // Augmented [A | I], fraction-free forward elimination. The Bareiss
    // update keeps intermediate entries as (scaled) minors, bounding growth
    // on the integer Gram matrices this is used for.
    ExactMatrix a(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a.at(r, c) = m.at(r, c);
        a.at(r, n + r) = 1;
    }
    ExactScalar prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a.at(piv, k).is_zero()) ++piv;
        if (piv == n) throw SingularError("matrix is singular");
        if (piv != k)
            for (std::size_t c = 0; c < 2 * n; ++c) std::swap(a.at(piv, c), a.at(k, c));
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < 2 * n; ++c)
                a.at(r, c) = (a.at(k, k) * a.at(r, c) - a.at(r, k) * a.at(k, c)) / prev;
            a.at(r, k) = 0;
        }
        prev = a.at(k, k);
    }
    // Exact back substitution, one identity column at a time.
    ExactMatrix inv(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<ExactScalar> x(n);
        for (std::size_t ri = n; ri-- > 0;) {
            ExactScalar acc = a.at(ri, n + col);
            for (std::size_t c = ri + 1; c < n; ++c) acc -= a.at(ri, c) * x[c];
            x[ri] = acc / a.at(ri, ri);
        }
        for (std::size_t r = 0; r < n; ++r) inv.at(r, col) = x[r];
    }
    return inv;
}

namespace {

struct Rref {
    ExactMatrix mat;                 // reduced row echelon form
    std::vector<std::size_t> pivot;  // pivot column per pivot row
};

Rref rref(ExactMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        ExactScalar p = a.at(r, c);
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            ExactScalar f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

} // namespace

std::vector<std::vector<ExactScalar>> nullspace_basis(const ExactMatrix& m) {
    Rref rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivot) is_pivot[c] = true;
    std::vector<std::vector<ExactScalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<ExactScalar> v(cols);
        v[free] = 1;
        for (std::size_t pr = 0; pr < rr.pivot.size(); ++pr)
            v[rr.pivot[pr]] = -rr.mat.at(pr, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<ExactScalar> solve_linear(const ExactMatrix& m, const std::vector<ExactScalar>& rhs) {
    if (rhs.size() != m.rows()) throw SizeMismatchError("solve_linear shape mismatch");
    const std::size_t cols = m.cols();
    ExactMatrix aug(m.rows(), cols + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, cols) = rhs[r];
    }
    Rref rr = rref(aug);
    for (std::size_t pr = 0; pr < rr.pivot.size(); ++pr)
        if (rr.pivot[pr] == cols) throw InconsistentError("linear system has no solution");
    // Particular solution with free variables set to zero.
    std::vector<ExactScalar> x(cols);
    for (std::size_t pr = 0; pr < rr.pivot.size(); ++pr) x[rr.pivot[pr]] = rr.mat.at(pr, cols);
    return x;
}

} // namespace beq
