#include "beq/cumulants.hpp"

#include <random>

namespace beq {

ExactMatrix scaled(const ExactMatrix& m, const Rat& c) {
    ExactMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t col = 0; col < m.cols(); ++col) out.at(r, col) = m.at(r, col) * ExactScalar(c);
    return out;
}

Rat cumulant_product(const CumulantSpec& spec, const SetPartition& pi) {
    Rat v = 1;
    for (const auto& block : pi.blocks()) {
        v *= spec.kappa_at(static_cast<int>(block.size()));
        if (v == 0) return 0;
    }
    return v;
}

Rat moments_from_cumulants(const CumulantSpec& spec, int k) {
    Rat m = 0;
    for (const auto& pi : enumerate_category(spec.x, k)) m += cumulant_product(spec, pi);
    return m;
}

CumulantRecovery cumulants_from_moments(const std::vector<Rat>& moments, CategoryId x) {
    CumulantRecovery rec;
    CumulantSpec partial{CategoryId::s, {}};
    for (std::size_t k = 1; k <= moments.size(); ++k) {
        // m_k = kappa_k + sum over non-full interval partitions of lower kappas
        Rat rest = 0;
        for (const auto& pi : enumerate_interval(static_cast<int>(k)))
            if (pi.num_blocks() > 1) rest += cumulant_product(partial, pi);
        Rat kap = moments[k - 1] - rest;
        partial.kappa[static_cast<int>(k)] = kap;
        rec.kappa[static_cast<int>(k)] = kap;
        if (kap != 0 && !block_size_allowed(x, static_cast<int>(k)))
            rec.violations.push_back(static_cast<int>(k));
    }
    return rec;
}

Rat bernoulli_moment(const BernoulliParams& params, int m) {
    if (m < 0) throw std::invalid_argument("moment order must be nonnegative");
    Rat prev = 1, cur = params.mu;  // m_0, m_1
    if (m == 0) return prev;
    for (int l = 2; l <= m; ++l) {
        Rat next = params.mu * cur + params.var * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

bool bernoulli_roots(const BernoulliParams& params, Rat& alpha, Rat& beta) {
    Rat disc = params.mu * params.mu + 4 * params.var, root;
    if (!rat_sqrt_exact(disc, root)) return false;
    alpha = (params.mu + root) / 2;
    beta = (root - params.mu) / 2;
    return true;
}

Rat bernoulli_moment_closed(const BernoulliParams& params, int m) {
    Rat alpha, beta;
    if (!bernoulli_roots(params, alpha, beta))
        throw std::invalid_argument("closed form needs rational roots");
    return (rat_pow(alpha, m + 1) - rat_pow(-beta, m + 1)) / (alpha + beta);
}

int mixed_cumulant_check(const std::map<int, Rat>& kappa, int k, int n_samples,
                         std::uint64_t seed) {
    CumulantSpec spec{CategoryId::s, kappa};
    std::vector<Rat> single(k + 1);  // single[l] = l-th moment of one variable
    single[0] = 1;
    for (int l = 1; l <= k; ++l) single[l] = moments_from_cumulants(spec, l);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> label(1, k);
    int failures = 0;
    for (int s = 0; s < n_samples; ++s) {
        std::vector<int> j(k);
        for (int& v : j) v = label(rng);
        SetPartition ker_j = kernel(MultiIndex(j, k));
        // Boolean independence splits the word at the runs of ker j.
        Rat lhs = 1;
        SetPartition runs = inf_category(CategoryId::s, ker_j);
        for (const auto& block : runs.blocks()) lhs *= single[block.size()];
        Rat rhs = 0;
        for (const auto& pi : enumerate_interval(k))
            if (leq(pi, ker_j)) rhs += cumulant_product(spec, pi);
        if (lhs != rhs) ++failures;
    }
    return failures;
}

namespace {

ExactMatrix random_matrix(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    ExactMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = Rat(num(rng), den(rng));
    return m;
}

bool is_zero_matrix(const ExactMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) return false;
    return true;
}

} // namespace

bool corner_insertion_vanishing(std::size_t dim, std::uint64_t seed) {
    if (dim < 2) throw std::invalid_argument("dimension must be at least 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kdist(2, 4);
    const int k = kdist(rng);

    // Pick an interval partition with a within-block link l ~ l+1.
    std::vector<std::pair<SetPartition, int>> candidates;
    for (const auto& pi : enumerate_interval(k))
        for (const auto& block : pi.blocks())
            for (std::size_t m = 0; m + 1 < block.size(); ++m)
                candidates.emplace_back(pi, block[m]);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    auto [pi, l] = candidates[pick(rng)];

    ExactMatrix e(dim, dim);
    e.at(0, 0) = 1;
    auto corner = [&e](const std::vector<ExactMatrix>& ys) {
        ExactMatrix prod = ys.front();
        for (std::size_t m = 1; m < ys.size(); ++m) prod = prod * ys[m];
        return e * prod * e;
    };

    std::vector<ExactMatrix> ys;
    for (int m = 0; m < k; ++m) ys.push_back(random_matrix(dim, rng));
    ExactMatrix b = e * random_matrix(dim, rng) * e;
    ys[l - 1] = ys[l - 1] * b;

    return is_zero_matrix(cumulant(corner, pi, ys));
}

} // namespace beq
