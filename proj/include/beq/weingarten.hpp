#pragma once

#include "beq/exact_matrix.hpp"
#include "beq/partition.hpp"
#include "beq/poset.hpp"
#include "beq/rational.hpp"

#include <cstdint>
#include <vector>

namespace beq {

/// Iterates over [n]^k in row-major order (first position most significant).
class MultiIndexRange {
public:
    MultiIndexRange(int k, int n) : k_(k), n_(n) {}

    template <class F>
    void for_each(F&& f) const {
        std::vector<int> idx(k_, 1);
        while (true) {
            f(const_cast<const std::vector<int>&>(idx));
            int pos = k_ - 1;
            while (pos >= 0 && idx[pos] == n_) idx[pos--] = 1;
            if (pos < 0) return;
            ++idx[pos];
        }
    }

    std::size_t size() const {
        std::size_t s = 1;
        for (int i = 0; i < k_; ++i) s *= static_cast<std::size_t>(n_);
        return s;
    }

    std::size_t rank(const std::vector<int>& idx) const {
        std::size_t r = 0;
        for (int v : idx) r = r * n_ + static_cast<std::size_t>(v - 1);
        return r;
    }

private:
    int k_, n_;
};

/// Whether entries of idx are constant on every block of pi (pi <= ker idx).
bool refines_kernel(const SetPartition& pi, const std::vector<int>& idx);

/// Gram and Weingarten data for one (category, k, n) cell:
/// G(pi, sigma) = n^{|pi v sigma|} over D(k), W = G^{-1}.
struct WeingartenTable {
    CategoryId x;
    int k = 0;
    int n = 0;
    std::vector<SetPartition> elements;  // D(k), canonical order
    ExactMatrix gram;
    ExactMatrix wein;

    Rat gram_at(std::size_t r, std::size_t c) const { return gram.at(r, c).as_rational(); }
    Rat wein_at(std::size_t r, std::size_t c) const { return wein.at(r, c).as_rational(); }

    /// Indices of D(k) members below the given kernel partition.
    std::vector<int> down_set(const SetPartition& ker) const;
    std::vector<int> down_set(const std::vector<int>& idx) const;
};

/// Gram matrix alone (exists whenever D(k) is nonempty).
ExactMatrix gram_matrix(CategoryId x, int k, int n);

/// Builds the full table; throws EmptyCategoryError or SingularError
/// (n below the invertibility threshold for this (x, k)).
WeingartenTable make_weingarten(CategoryId x, int k, int n);

/// Shared, cached table (read-only after construction).
const WeingartenTable& weingarten_table(CategoryId x, int k, int n);

/// Smallest n in [1, max_n] with invertible Gram matrix; -1 when none.
int invertibility_threshold(CategoryId x, int k, int max_n = 64);

/// H^{D(k)}_{ij} as the Weingarten double sum over pi <= ker i, sigma <= ker j.
Rat projection_entry(const WeingartenTable& t, const MultiIndex& i, const MultiIndex& j);
Rat projection_entry_kernel(const WeingartenTable& t, const SetPartition& ker_i, const SetPartition& ker_j);

/// Independent route: <e_i, H e_j> by solving the Gram system for the
/// projection of e_j onto Span{T_pi}. Never touches the inverse.
Rat projection_oracle(const WeingartenTable& t, const MultiIndex& i, const MultiIndex& j);
Rat projection_oracle_kernel(const WeingartenTable& t, const SetPartition& ker_i, const SetPartition& ker_j);

/// The column H e_j as a vector of length n^k (depends on j only through
/// its kernel).
std::vector<Rat> projection_column(const WeingartenTable& t, const SetPartition& ker_j);

/// Full n^k x n^k projection matrix, rational entries. Guarded by a cap on
/// n^k (default 4096).
std::vector<std::vector<Rat>> projection_matrix(const WeingartenTable& t, std::size_t cap = 4096);

/// Basis of the eigenspace of H^{D(k)} at eigenvalue 1, as exact vectors of
/// length n^k. Dense nullspace of (H - I) when n^k <= dense_cap; column-space
/// reduction of the (idempotent, symmetric) H above it.
std::vector<std::vector<Rat>> fixed_space(const WeingartenTable& t, std::size_t dense_cap = 300);

/// |n^{|p1|} W(p1,p2) - mu_{I(k)}(p1,p2)| as an exact rational.
Rat weingarten_estimate_residual(const WeingartenTable& t, const SetPartition& p1, const SetPartition& p2);

/// Checks H^{D(k+l)} (T_{1_k} (x) e_j) == T_{1_k} (x) H^{D(l)} e_j with
/// explicit vectors in dimension n^{k+l}.
bool haar_lemma_check(CategoryId x, int k, int l, int n, const MultiIndex& j);

/// The coefficient vector of T_pi in dimension n^k (0/1 entries).
std::vector<Rat> t_vector(const SetPartition& pi, int n);

} // namespace beq
