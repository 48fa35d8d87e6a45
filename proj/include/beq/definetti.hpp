#pragma once

#include "beq/cumulants.hpp"
#include "beq/partition.hpp"
#include "beq/rational.hpp"
#include "beq/weingarten.hpp"

#include <map>
#include <vector>

namespace beq {

/// Noncommutative polynomial without constant term: variable-word -> coefficient.
class NCPoly {
public:
    using Word = std::vector<int>;

    NCPoly() = default;

    const std::map<Word, Rat>& terms() const { return terms_; }
    Rat coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(const Word& w, const Rat& c) {
        if (w.empty()) throw std::invalid_argument("no constant terms");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    NCPoly& scale(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    /// Sum of absolute coefficients (the norm surrogate, variables of norm <= 1).
    Rat norm1() const {
        Rat s = 0;
        for (const auto& [w, c] : terms_) s += rat_abs(c);
        return s;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

private:
    std::map<Word, Rat> terms_;
};

/// E_n[X_{j1}...X_{jk}] = sum over i in [n]^k of X_{i1}...X_{ik} H^{D(k)}_{ij}.
NCPoly conditional_expectation_En(CategoryId x, int n, const std::vector<int>& word);

/// (1 / n^{|pi|}) sum over {i : pi <= ker i} of X_{i1}...X_{ik}.
NCPoly partitioned_En(CategoryId x, int n, const SetPartition& pi, int k);

/// K^{E_n}_sigma[X_1,...,X_1] = sum over pi in D(k) of
/// partitioned_En(pi) mu_{I(k)}(pi, sigma).
NCPoly cumulant_En(CategoryId x, int n, const SetPartition& sigma);

/// f^{n0,n}_sigma: the partitioned sums restricted to indices in [n0, n].
NCPoly truncated_cumulant_En(CategoryId x, int n0, int n, const SetPartition& sigma);

/// Coefficient-1 norm of E_n[X_j] - sum_{sigma in D(k), sigma <= ker j} K^{E_n}_sigma.
Rat id_cumulant_residual(CategoryId x, int n, const MultiIndex& j);

/// Same with the [n0, n]-truncated sums in place of the cumulants.
Rat id_cumulant_residual_truncated(CategoryId x, int n0, int n, const MultiIndex& j);

/// The Boolean i.i.d. moment vector phi(j) = sum_{pi in I_x(k), pi <= ker j}
/// prod kappa, grouped by kernel class.
std::map<SetPartition, Rat> iid_moment_vector(const CumulantSpec& spec, int k, int n);

/// Coefficient-1 norm of H^{D(k)} phi - phi over [n]^k; 0 certifies invariance.
Rat forward_invariance_check(const CumulantSpec& spec, int k, int n);

/// phi on degree-k monomials of n variables, constant on kernel classes.
struct InvariantMomentVector {
    CategoryId x = CategoryId::s;
    int k = 0;
    int n = 0;
    std::map<SetPartition, Rat> by_kernel;  // one value per realizable kernel
};

struct RecoveredCumulants {
    CumulantSpec spec;
    std::vector<int> violations;  // orders outside L with nonzero kappa
};

/// Recovers kappa_1..kappa_K from moment vectors of degrees 1..K.
/// Throws InconsistentMomentsError when the vectors are not of the invariant
/// form (value must depend on ker j only through the reconstruction).
RecoveredCumulants recover_cumulants(const std::vector<InvariantMomentVector>& moments,
                                     CategoryId x);

} // namespace beq
