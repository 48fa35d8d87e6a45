#include "beq/definetti.hpp"

#include "beq/poset.hpp"

#include <algorithm>

namespace beq {

namespace {

Rat kernel_class_size(const SetPartition& kappa, int n) {
    Rat mult = 1;
    for (int m = 0; m < kappa.num_blocks(); ++m) mult *= n - m;
    return mult;
}

} // namespace

NCPoly conditional_expectation_En(CategoryId x, int n, const std::vector<int>& word) {
    const int k = static_cast<int>(word.size());
    const auto& table = weingarten_table(x, k, n);
    auto col = projection_column(table, kernel(MultiIndex(word, n)));
    MultiIndexRange range(k, n);
    NCPoly out;
    range.for_each([&](const std::vector<int>& idx) { out.add(idx, col[range.rank(idx)]); });
    return out;
}

NCPoly partitioned_En(CategoryId x, int n, const SetPartition& pi, int k) {
    if (pi.ground_size() != k) throw SizeMismatchError("partition ground size differs from k");
    if (!category_member(x, pi)) throw NotAnElementError("partition not in the category");
    Rat coeff = Rat(1) / rat_pow(Rat(n), pi.num_blocks());
    NCPoly out;
    MultiIndexRange(k, n).for_each([&](const std::vector<int>& idx) {
        if (refines_kernel(pi, idx)) out.add(idx, coeff);
    });
    return out;
}

namespace {

NCPoly partitioned_sum(CategoryId x, int n0, int n, const SetPartition& sigma) {
    const int k = sigma.ground_size();
    NCPoly out;
    for (const auto& pi : enumerate_category(x, k)) {
        Rat mu = mobius_interval(pi, sigma);
        if (mu == 0) continue;
        Rat coeff = mu / rat_pow(Rat(n), pi.num_blocks());
        MultiIndexRange(k, n).for_each([&](const std::vector<int>& idx) {
            if (!refines_kernel(pi, idx)) return;
            for (int v : idx)
                if (v < n0) return;
            out.add(idx, coeff);
        });
    }
    return out;
}

} // namespace

NCPoly cumulant_En(CategoryId x, int n, const SetPartition& sigma) {
    return partitioned_sum(x, 1, n, sigma);
}

NCPoly truncated_cumulant_En(CategoryId x, int n0, int n, const SetPartition& sigma) {
    return partitioned_sum(x, n0, n, sigma);
}

namespace {

Rat residual_against(CategoryId x, int n0, int n, const MultiIndex& j) {
    NCPoly diff = conditional_expectation_En(x, n, j.entries);
    SetPartition ker_j = kernel(j);
    for (const auto& sigma : enumerate_category(x, j.length()))
        if (leq(sigma, ker_j)) diff -= partitioned_sum(x, n0, n, sigma);
    return diff.norm1();
}

} // namespace

Rat id_cumulant_residual(CategoryId x, int n, const MultiIndex& j) {
    return residual_against(x, 1, n, j);
}

Rat id_cumulant_residual_truncated(CategoryId x, int n0, int n, const MultiIndex& j) {
    return residual_against(x, n0, n, j);
}

std::map<SetPartition, Rat> iid_moment_vector(const CumulantSpec& spec, int k, int n) {
    auto members = enumerate_category(spec.x, k);
    std::map<SetPartition, Rat> phi;
    for (const auto& kappa : enumerate_set_partitions(k)) {
        if (kappa.num_blocks() > n) continue;
        Rat v = 0;
        for (const auto& pi : members)
            if (leq(pi, kappa)) v += cumulant_product(spec, pi);
        phi.emplace(kappa, std::move(v));
    }
    return phi;
}

Rat forward_invariance_check(const CumulantSpec& spec, int k, int n) {
    auto phi = iid_moment_vector(spec, k, n);
    auto members = enumerate_category(spec.x, k);
    if (members.empty()) {
        // H is the zero projection here, so the residual is just |phi|.
        Rat res = 0;
        for (const auto& [kappa, v] : phi) res += kernel_class_size(kappa, n) * rat_abs(v);
        return res;
    }
    const auto& table = weingarten_table(spec.x, k, n);
    const std::size_t d = members.size();
    // <T_sigma, phi> per sigma, summed over kernel classes.
    std::vector<Rat> t(d, 0);
    for (const auto& [kappa, v] : phi) {
        if (v == 0) continue;
        Rat mult = kernel_class_size(kappa, n);
        for (std::size_t s = 0; s < d; ++s)
            if (leq(table.elements[s], kappa)) t[s] += mult * v;
    }
    std::vector<Rat> c(d, 0);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t s = 0; s < d; ++s) c[p] += table.wein_at(p, s) * t[s];
    Rat res = 0;
    for (const auto& [kappa, v] : phi) {
        Rat hphi = 0;
        for (std::size_t p = 0; p < d; ++p)
            if (leq(table.elements[p], kappa)) hphi += c[p];
        res += kernel_class_size(kappa, n) * rat_abs(hphi - v);
    }
    return res;
}

RecoveredCumulants recover_cumulants(const std::vector<InvariantMomentVector>& moments,
                                     CategoryId x) {
    std::vector<InvariantMomentVector> sorted = moments;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.k < b.k; });
    std::vector<Rat> m;
    for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
        if (sorted[idx].k != static_cast<int>(idx) + 1)
            throw std::invalid_argument("need one moment vector per degree 1..K");
        auto it = sorted[idx].by_kernel.find(SetPartition::full(sorted[idx].k));
        if (it == sorted[idx].by_kernel.end())
            throw std::invalid_argument("missing constant-index kernel class");
        m.push_back(it->second);
    }
    auto rec = cumulants_from_moments(m, x);
    CumulantSpec spec{x, rec.kappa};
    // Every class value must reproduce the Boolean i.i.d. form.
    for (const auto& vec : sorted) {
        for (const auto& [kappa, v] : vec.by_kernel) {
            Rat expect = 0;
            for (const auto& pi : enumerate_interval(vec.k))
                if (leq(pi, kappa)) expect += cumulant_product(spec, pi);
            if (expect != v)
                throw InconsistentMomentsError("moment vector is not Boolean i.i.d. invariant at k=" +
                                               std::to_string(vec.k) + ", class " + kappa.str());
        }
    }
    return {spec, rec.violations};
}

} // namespace beq
