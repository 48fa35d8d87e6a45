#pragma once

#include "beq/exact_matrix.hpp"
#include "beq/partition.hpp"
#include "beq/poset.hpp"
#include "beq/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace beq {

inline Rat scaled(const Rat& v, const Rat& c) { return v * c; }
ExactMatrix scaled(const ExactMatrix& m, const Rat& c);

/// E^pi[y_1..y_k]: ordered product over the blocks V of pi (left to right)
/// of E applied to the subword indexed by V. E is any callable taking a
/// std::vector<Arg> and returning a value with + and *.
template <class F, class Arg>
auto partitioned_expectation(const F& E, const SetPartition& pi, const std::vector<Arg>& ys)
    -> decltype(E(ys)) {
    if (static_cast<int>(ys.size()) != pi.ground_size())
        throw SizeMismatchError("argument count differs from ground size");
    if (!pi.is_interval()) throw std::invalid_argument("partition must be interval");
    using Value = decltype(E(ys));
    Value acc{};
    bool first = true;
    for (const auto& block : pi.blocks()) {
        std::vector<Arg> sub;
        for (int e : block) sub.push_back(ys[e - 1]);
        Value v = E(sub);
        if (first) {
            acc = std::move(v);
            first = false;
        } else {
            acc = acc * v;
        }
    }
    return acc;
}

/// Boolean cumulant K_pi = sum_{sigma <= pi, sigma interval} E^sigma mu_I(sigma, pi).
template <class F, class Arg>
auto cumulant(const F& E, const SetPartition& pi, const std::vector<Arg>& ys) -> decltype(E(ys)) {
    if (static_cast<int>(ys.size()) != pi.ground_size())
        throw SizeMismatchError("argument count differs from ground size");
    using Value = decltype(E(ys));
    Value acc{};
    bool first = true;
    for (const auto& sigma : enumerate_interval(pi.ground_size())) {
        if (!leq(sigma, pi)) continue;
        Rat mu = mobius_interval(sigma, pi);
        if (mu == 0) continue;
        Value term = scaled(partitioned_expectation(E, sigma, ys), mu);
        if (first) {
            acc = std::move(term);
            first = false;
        } else {
            acc = acc + term;
        }
    }
    return acc;
}

/// Single-variable cumulant data: kappa_m per block size m, with support
/// required inside L of the category.
struct CumulantSpec {
    CategoryId x = CategoryId::s;
    std::map<int, Rat> kappa;

    Rat kappa_at(int m) const {
        auto it = kappa.find(m);
        return it == kappa.end() ? Rat(0) : it->second;
    }
    bool support_valid() const {
        for (const auto& [m, v] : kappa)
            if (v != 0 && !block_size_allowed(x, m)) return false;
        return true;
    }
};

/// Product of kappa_{|V|} over the blocks of pi.
Rat cumulant_product(const CumulantSpec& spec, const SetPartition& pi);

/// m_k = sum over pi in I_x(k) of prod kappa_{|V|}.
Rat moments_from_cumulants(const CumulantSpec& spec, int k);

struct CumulantRecovery {
    std::map<int, Rat> kappa;
    std::vector<int> violations;  // orders outside L with nonzero kappa
};

/// Triangular inversion over the full interval lattice; moments[0] is m_1.
CumulantRecovery cumulants_from_moments(const std::vector<Rat>& moments, CategoryId x);

/// Shifted Bernoulli law: atoms at the roots alpha, -beta of Z^2 - mu Z - var.
struct BernoulliParams {
    Rat mu;
    Rat var;

    BernoulliParams(Rat mean, Rat variance) : mu(std::move(mean)), var(std::move(variance)) {
        if (var <= 0) throw std::invalid_argument("variance must be positive");
    }
};

/// m-th moment via the recurrence m_l = mu m_{l-1} + var m_{l-2} (m_0 = 1).
Rat bernoulli_moment(const BernoulliParams& params, int m);

/// Rational roots alpha > 0, beta > 0 with alpha - beta = mu, alpha beta = var;
/// false when mu^2 + 4 var is not a perfect rational square.
bool bernoulli_roots(const BernoulliParams& params, Rat& alpha, Rat& beta);

/// (alpha^{m+1} - (-beta)^{m+1}) / (alpha + beta); requires rational roots.
Rat bernoulli_moment_closed(const BernoulliParams& params, int m);

/// Checks E[x_{j1}...x_{jk}] = sum_{pi in I(k), pi <= ker j} prod kappa for a
/// Boolean i.i.d. family built from the given single-variable cumulants;
/// samples index tuples. Returns the number of failures (0 = pass).
int mixed_cumulant_check(const std::map<int, Rat>& kappa, int k, int n_samples, std::uint64_t seed);

/// K_pi with a corner element b = ebe inserted after a within-block position
/// vanishes for E(y) = eye; one seeded random instance.
bool corner_insertion_vanishing(std::size_t dim, std::uint64_t seed);

} // namespace beq
