#include "beq/weingarten.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace beq {

bool refines_kernel(const SetPartition& pi, const std::vector<int>& idx) {
    for (const auto& b : pi.blocks()) {
        int v = idx[b.front() - 1];
        for (int e : b)
            if (idx[e - 1] != v) return false;
    }
    return true;
}

std::vector<int> WeingartenTable::down_set(const SetPartition& ker) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (leq(elements[i], ker)) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> WeingartenTable::down_set(const std::vector<int>& idx) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (refines_kernel(elements[i], idx)) out.push_back(static_cast<int>(i));
    return out;
}

ExactMatrix gram_matrix(CategoryId x, int k, int n) {
    auto elements = enumerate_category(x, k);
    if (elements.empty())
        throw EmptyCategoryError("I_" + std::string(category_name(x)) + "(" + std::to_string(k) +
                                 ") is empty");
    const std::size_t d = elements.size();
    ExactMatrix g(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = r; c < d; ++c) {
            Rat v = rat_pow(Rat(n), join(elements[r], elements[c]).num_blocks());
            g.at(r, c) = v;
            g.at(c, r) = v;
        }
    return g;
}

WeingartenTable make_weingarten(CategoryId x, int k, int n) {
    WeingartenTable t;
    t.x = x;
    t.k = k;
    t.n = n;
    t.elements = enumerate_category(x, k);
    t.gram = gram_matrix(x, k, n);
    t.wein = invert_matrix(t.gram);
    return t;
}

const WeingartenTable& weingarten_table(CategoryId x, int k, int n) {
    static std::map<std::tuple<int, int, int>, std::unique_ptr<WeingartenTable>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(static_cast<int>(x), k, n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<WeingartenTable>(make_weingarten(x, k, n))).first;
    return *it->second;
}

int invertibility_threshold(CategoryId x, int k, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        try {
            (void)invert_matrix(gram_matrix(x, k, n));
            return n;
        } catch (const SingularError&) {
        }
    }
    return -1;
}

Rat projection_entry_kernel(const WeingartenTable& t, const SetPartition& ker_i,
                            const SetPartition& ker_j) {
    Rat acc = 0;
    for (int p : t.down_set(ker_i))
        for (int s : t.down_set(ker_j)) acc += t.wein_at(p, s);
    return acc;
}

Rat projection_entry(const WeingartenTable& t, const MultiIndex& i, const MultiIndex& j) {
    if (i.length() != t.k || j.length() != t.k)
        throw LengthMismatchError("multi-index length differs from k");
    return projection_entry_kernel(t, kernel(i), kernel(j));
}

namespace {

// Coefficients c with G c = t(ker j), so that H e_j = sum_pi c_pi T_pi.
std::vector<Rat> column_coefficients(const WeingartenTable& t, const SetPartition& ker_j) {
    const std::size_t d = t.elements.size();
    std::vector<ExactScalar> rhs(d);
    for (std::size_t s = 0; s < d; ++s) rhs[s] = leq(t.elements[s], ker_j) ? 1 : 0;
    auto sol = solve_linear(t.gram, rhs);
    std::vector<Rat> c(d);
    for (std::size_t s = 0; s < d; ++s) c[s] = sol[s].as_rational();
    return c;
}

std::vector<Rat> expand_coefficients(const WeingartenTable& t, const std::vector<Rat>& c) {
    MultiIndexRange range(t.k, t.n);
    std::vector<Rat> v(range.size(), 0);
    range.for_each([&](const std::vector<int>& idx) {
        Rat acc = 0;
        for (std::size_t p = 0; p < t.elements.size(); ++p)
            if (c[p] != 0 && refines_kernel(t.elements[p], idx)) acc += c[p];
        v[range.rank(idx)] = acc;
    });
    return v;
}

} // namespace

Rat projection_oracle_kernel(const WeingartenTable& t, const SetPartition& ker_i,
                             const SetPartition& ker_j) {
    auto c = column_coefficients(t, ker_j);
    Rat acc = 0;
    for (int p : t.down_set(ker_i)) acc += c[p];
    return acc;
}

Rat projection_oracle(const WeingartenTable& t, const MultiIndex& i, const MultiIndex& j) {
    if (i.length() != t.k || j.length() != t.k)
        throw LengthMismatchError("multi-index length differs from k");
    return projection_oracle_kernel(t, kernel(i), kernel(j));
}

std::vector<Rat> projection_column(const WeingartenTable& t, const SetPartition& ker_j) {
    return expand_coefficients(t, column_coefficients(t, ker_j));
}

std::vector<std::vector<Rat>> projection_matrix(const WeingartenTable& t, std::size_t cap) {
    MultiIndexRange range(t.k, t.n);
    const std::size_t dim = range.size();
    if (dim > cap) throw SizeMismatchError("projection matrix dimension exceeds cap");
    // Entries depend on indices only through their down-sets in D(k);
    // cache the double sums per pair of distinct down-sets.
    std::vector<std::vector<int>> ds(dim);
    range.for_each([&](const std::vector<int>& idx) { ds[range.rank(idx)] = t.down_set(idx); });
    std::map<std::pair<const std::vector<int>*, const std::vector<int>*>, Rat> pairs;
    std::map<std::vector<int>, const std::vector<int>*> uniq;
    std::vector<const std::vector<int>*> key(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        auto it = uniq.find(ds[i]);
        if (it == uniq.end()) it = uniq.emplace(ds[i], &ds[i]).first;
        key[i] = it->second;
    }
    std::vector<std::vector<Rat>> h(dim, std::vector<Rat>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            auto pk = std::make_pair(key[i], key[j]);
            auto it = pairs.find(pk);
            if (it == pairs.end()) {
                Rat acc = 0;
                for (int p : *key[i])
                    for (int s : *key[j]) acc += t.wein_at(p, s);
                it = pairs.emplace(pk, std::move(acc)).first;
            }
            h[i][j] = it->second;
        }
    return h;
}

std::vector<std::vector<Rat>> fixed_space(const WeingartenTable& t, std::size_t dense_cap) {
    MultiIndexRange range(t.k, t.n);
    const std::size_t dim = range.size();
    const std::size_t d = t.elements.size();
    if (dim <= dense_cap) {
        auto h = projection_matrix(t, dense_cap);
        ExactMatrix m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                m.at(r, c) = (r == c) ? h[r][c] - 1 : h[r][c];
        auto ker = nullspace_basis(m);
        std::vector<std::vector<Rat>> out;
        for (auto& v : ker) {
            std::vector<Rat> w(dim);
            for (std::size_t i = 0; i < dim; ++i) w[i] = v[i].as_rational();
            out.push_back(std::move(w));
        }
        return out;
    }
    // Large route: H is an orthogonal idempotent, so its eigenspace at 1 is
    // its column space; every column lies in Span{T_pi}, so reduce the
    // coefficient vectors of one column per kernel class and expand.
    std::vector<std::vector<Rat>> coeff_basis;  // row echelon, in Q^d
    std::vector<int> pivot_col;
    auto reduce_insert = [&](std::vector<Rat> v) {
        for (std::size_t b = 0; b < coeff_basis.size(); ++b) {
            int pc = pivot_col[b];
            if (v[pc] == 0) continue;
            Rat f = v[pc] / coeff_basis[b][pc];
            for (std::size_t c = 0; c < d; ++c) v[c] -= f * coeff_basis[b][c];
        }
        for (std::size_t c = 0; c < d; ++c)
            if (v[c] != 0) {
                coeff_basis.push_back(std::move(v));
                pivot_col.push_back(static_cast<int>(c));
                return;
            }
    };
    for (const auto& ker_j : enumerate_set_partitions(t.k)) {
        if (ker_j.num_blocks() > t.n) continue;  // unrealizable kernel
        reduce_insert(column_coefficients(t, ker_j));
        if (coeff_basis.size() == d) break;
    }
    std::vector<std::vector<Rat>> out;
    for (const auto& c : coeff_basis) out.push_back(expand_coefficients(t, c));
    return out;
}

Rat weingarten_estimate_residual(const WeingartenTable& t, const SetPartition& p1,
                                 const SetPartition& p2) {
    std::size_t r = 0, c = 0;
    bool found_r = false, found_c = false;
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
        if (t.elements[i] == p1) { r = i; found_r = true; }
        if (t.elements[i] == p2) { c = i; found_c = true; }
    }
    if (!found_r || !found_c) throw NotAnElementError("partition not in the category");
    Rat est = rat_pow(Rat(t.n), p1.num_blocks()) * t.wein_at(r, c);
    return rat_abs(est - mobius_interval(p1, p2));
}

std::vector<Rat> t_vector(const SetPartition& pi, int n) {
    MultiIndexRange range(pi.ground_size(), n);
    std::vector<Rat> v(range.size(), 0);
    range.for_each([&](const std::vector<int>& idx) {
        if (refines_kernel(pi, idx)) v[range.rank(idx)] = 1;
    });
    return v;
}

bool haar_lemma_check(CategoryId x, int k, int l, int n, const MultiIndex& j) {
    if (j.length() != l) throw LengthMismatchError("multi-index length differs from l");
    const auto& big = weingarten_table(x, k + l, n);
    const auto& small = weingarten_table(x, l, n);
    // lhs = H^{D(k+l)} (T_{1_k} (x) e_j), summed column by column.
    std::vector<Rat> lhs_coeff(big.elements.size(), 0);
    for (int s = 1; s <= n; ++s) {
        std::vector<int> idx(static_cast<std::size_t>(k), s);
        idx.insert(idx.end(), j.entries.begin(), j.entries.end());
        auto c = column_coefficients(big, kernel(MultiIndex(idx, n)));
        for (std::size_t p = 0; p < c.size(); ++p) lhs_coeff[p] += c[p];
    }
    auto lhs = expand_coefficients(big, lhs_coeff);
    // rhs = T_{1_k} (x) (H^{D(l)} e_j).
    auto w = expand_coefficients(small, column_coefficients(small, kernel(j)));
    MultiIndexRange range(k + l, n);
    MultiIndexRange tail(l, n);
    bool ok = true;
    range.for_each([&](const std::vector<int>& idx) {
        bool head_const = true;
        for (int p = 1; p < k; ++p)
            if (idx[p] != idx[0]) { head_const = false; break; }
        std::vector<int> tail_idx(idx.begin() + k, idx.end());
        Rat rhs = head_const ? w[tail.rank(tail_idx)] : Rat(0);
        if (lhs[range.rank(idx)] != rhs) ok = false;
    });
    return ok;
}

} // namespace beq
