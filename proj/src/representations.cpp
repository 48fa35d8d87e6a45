#include "beq/representations.hpp"

#include <algorithm>
#include <numeric>

namespace beq {

Rat perm_inner(const PermLabel& a, const PermLabel& b, int n) {
    if (a.is_one && b.is_one) return 1;
    if (a.is_one || b.is_one) return Rat(1, n);
    if (a.i == b.i && a.j == b.j) return Rat(1, n);
    if (a.i == b.i || a.j == b.j) return 0;  // one index shared: no admissible permutation
    return Rat(1, Rat(n) * (n - 1));
}

namespace {

// Q(P_{i1 j1}) ... Q(P_{ik jk}) 1-hat = c * P_{i1 j1} (c * 1-hat when k = 0).
Rat chain_to_one(const std::vector<int>& iv, const std::vector<int>& jv, int n) {
    PermLabel cur = PermLabel::one();
    Rat c = 1;
    for (int m = static_cast<int>(iv.size()) - 1; m >= 0; --m) {
        PermLabel v = PermLabel::p(iv[m], jv[m]);
        c *= perm_inner(v, cur, n) / perm_inner(v, v, n);
        if (c == 0) return 0;
        cur = v;
    }
    return c;
}

// F_{v_k} ... F_{v_1} e_{n+1} chased through the sparse action
// (e_{n+1} <-> e_i); the factors are applied right to left, so pass the
// index sequence of the product and it is consumed from the back.
// Returns the final basis index, or 0 for the zero vector.
int chase(const std::vector<int>& product_indices, int n) {
    int pos = n + 1;
    for (auto it = product_indices.rbegin(); it != product_indices.rend(); ++it) {
        if (pos == n + 1)
            pos = *it;
        else if (pos == *it)
            pos = n + 1;
        else
            return 0;
    }
    return pos;
}

} // namespace

Rat chain_state_value(const GeneratorWord& w) {
    std::vector<PermLabel> ops{PermLabel::one()};
    for (const auto& seg : w.segments) {
        for (auto [r, c] : seg) ops.push_back(PermLabel::p(r, c));
        ops.push_back(PermLabel::one());
    }
    PermLabel cur = PermLabel::one();
    Rat coeff = 1;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        coeff *= perm_inner(*it, cur, w.n) / perm_inner(*it, *it, w.n);
        if (coeff == 0) return 0;
        cur = *it;
    }
    return coeff;
}

std::vector<std::vector<int>> enumerate_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Rat> perm_vector(const PermLabel& label, int n) {
    auto perms = enumerate_permutations(n);
    std::vector<Rat> v(perms.size());
    for (std::size_t t = 0; t < perms.size(); ++t)
        v[t] = label.is_one ? Rat(1) : Rat(perms[t][label.j - 1] == label.i ? 1 : 0);
    return v;
}

Rat perm_vector_inner(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw SizeMismatchError("vector sizes differ");
    Rat s = 0;
    for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    return s / Rat(a.size());
}

namespace {

std::vector<Rat> q_apply(const std::vector<Rat>& v, const std::vector<Rat>& w) {
    Rat c = perm_vector_inner(v, w) / perm_vector_inner(v, v);
    std::vector<Rat> out(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) out[t] = c * v[t];
    return out;
}

std::vector<Rat> scale_vec(const std::vector<Rat>& v, const Rat& c) {
    std::vector<Rat> out(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) out[t] = c * v[t];
    return out;
}

} // namespace

bool verify_liu_relations(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    auto one = perm_vector(PermLabel::one(), n);
    std::vector<std::vector<Rat>> p(n * n);
    auto pv = [&](int i, int j) -> const std::vector<Rat>& { return p[(i - 1) * n + (j - 1)]; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) p[(i - 1) * n + (j - 1)] = perm_vector(PermLabel::p(i, j), n);

    std::vector<const std::vector<Rat>*> tests{&one};
    for (const auto& vec : p) tests.push_back(&vec);

    for (const auto* w : tests) {
        for (int i = 1; i <= n; ++i)
            for (int j1 = 1; j1 <= n; ++j1)
                for (int j2 = 1; j2 <= n; ++j2) {
                    auto lhs = q_apply(pv(i, j1), q_apply(pv(i, j2), *w));
                    auto rhs = j1 == j2 ? q_apply(pv(i, j1), *w) : std::vector<Rat>(lhs.size(), 0);
                    if (lhs != rhs) return false;
                }
        for (int j = 1; j <= n; ++j)
            for (int i1 = 1; i1 <= n; ++i1)
                for (int i2 = 1; i2 <= n; ++i2) {
                    auto lhs = q_apply(pv(i1, j), q_apply(pv(i2, j), *w));
                    auto rhs = i1 == i2 ? q_apply(pv(i1, j), *w) : std::vector<Rat>(lhs.size(), 0);
                    if (lhs != rhs) return false;
                }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                auto lhs = q_apply(pv(i, j), q_apply(one, *w));
                auto rhs = scale_vec(pv(i, j), perm_vector_inner(one, *w));
                if (lhs != rhs) return false;
            }
    }
    return true;
}

namespace {

std::vector<std::vector<int>> all_indices(int k, int n) {
    std::vector<std::vector<int>> out;
    MultiIndexRange(k, n).for_each([&](const std::vector<int>& idx) { out.push_back(idx); });
    return out;
}

} // namespace

bool verify_semigroup_relations(CategoryId x, int n, int k) {
    if (x == CategoryId::b) throw std::invalid_argument("no representation for category b");
    auto members = enumerate_category(x, k);
    if (members.empty()) return true;
    auto indices = all_indices(k, n);

    // p-side target vectors per representation.
    const int d = n + 1;
    std::size_t nfact = (x == CategoryId::o) ? 0 : perm_vector(PermLabel::one(), n).size();

    auto check = [&](const SetPartition& pi, bool transpose) {
        for (const auto& opp : indices) {
            std::vector<std::vector<int>> cls;
            for (const auto& idx : indices)
                if (refines_kernel(pi, idx)) cls.push_back(idx);
            bool expect = refines_kernel(pi, opp);
            if (x == CategoryId::s) {
                std::vector<Rat> acc(nfact, 0);
                for (const auto& summed : cls) {
                    const auto& iv = transpose ? opp : summed;
                    const auto& jv = transpose ? summed : opp;
                    Rat c = chain_to_one(iv, jv, n);
                    if (c == 0) continue;
                    auto vec = perm_vector(PermLabel::p(iv[0], jv[0]), n);
                    for (std::size_t t = 0; t < nfact; ++t) acc[t] += c * vec[t];
                }
                for (std::size_t t = 0; t < nfact; ++t)
                    if (acc[t] != Rat(expect ? 1 : 0)) return false;
            } else if (x == CategoryId::o) {
                std::vector<ExactScalar> acc(static_cast<std::size_t>(d) * d);
                ExactScalar inv_sqrt(0, Rat(1, n), static_cast<unsigned>(n));
                ExactScalar factor = 1;
                for (int m = 0; m < k; ++m) factor *= inv_sqrt;
                for (const auto& summed : cls) {
                    const auto& iv = transpose ? opp : summed;
                    const auto& jv = transpose ? summed : opp;
                    int a = chase(iv, n), b = chase(jv, n);
                    if (a == 0 || b == 0) continue;
                    acc[static_cast<std::size_t>(a - 1) * d + (b - 1)] += factor;
                }
                for (std::size_t t = 0; t < acc.size(); ++t) {
                    ExactScalar want = (expect && t + 1 == acc.size()) ? ExactScalar(1) : ExactScalar(0);
                    if (acc[t] != want) return false;
                }
            } else {  // h
                std::vector<Rat> acc(nfact * d * d, 0);
                for (const auto& summed : cls) {
                    const auto& iv = transpose ? opp : summed;
                    const auto& jv = transpose ? summed : opp;
                    int a = chase(iv, n), b = chase(jv, n);
                    if (a == 0 || b == 0) continue;
                    Rat c = chain_to_one(iv, jv, n);
                    if (c == 0) continue;
                    auto vec = perm_vector(PermLabel::p(iv[0], jv[0]), n);
                    std::size_t pos = static_cast<std::size_t>(a - 1) * d + (b - 1);
                    for (std::size_t t = 0; t < nfact; ++t) acc[t * d * d + pos] += c * vec[t];
                }
                std::size_t corner = static_cast<std::size_t>(d) * d - 1;
                for (std::size_t t = 0; t < nfact; ++t)
                    for (std::size_t m = 0; m < static_cast<std::size_t>(d) * d; ++m) {
                        Rat want = (expect && m == corner) ? Rat(1) : Rat(0);
                        if (acc[t * d * d + m] != want) return false;
                    }
            }
        }
        return true;
    };

    for (const auto& pi : members)
        if (!check(pi, false) || !check(pi, true)) return false;
    return true;
}

bool verify_kernel_class_relations(CategoryId x, int n, int k) {
    if (x == CategoryId::b) throw std::invalid_argument("no representation for category b");
    auto members = enumerate_category(x, k);
    if (members.empty()) return true;
    auto indices = all_indices(k, n);

    SetPartition hypothesis =
        (x == CategoryId::s) ? SetPartition::singletons(k) : tensor_power(SetPartition::pair(), k / 2);
    auto inf_of = [&](const std::vector<int>& idx, SetPartition& out) {
        SetPartition ker = kernel(MultiIndex(idx, n));
        if (x != CategoryId::s && !leq(hypothesis, ker)) return false;
        out = inf_category(x, ker);
        return true;
    };

    const int d = n + 1;
    std::size_t nfact = (x == CategoryId::o) ? 0 : perm_vector(PermLabel::one(), n).size();

    for (const auto& pi : members) {
        std::vector<std::vector<int>> cls;
        for (const auto& idx : indices) {
            SetPartition inf;
            if (inf_of(idx, inf) && inf == pi) cls.push_back(idx);
        }
        for (const auto& opp : indices) {
            SetPartition inf_opp;
            if (!inf_of(opp, inf_opp)) continue;  // outside the lemma's hypothesis
            bool expect = inf_opp == pi;
            for (bool transpose : {false, true}) {
                auto row_of = [&](const std::vector<int>& summed) {
                    return transpose ? opp : summed;
                };
                auto col_of = [&](const std::vector<int>& summed) {
                    return transpose ? summed : opp;
                };
                if (x == CategoryId::s) {
                    std::vector<Rat> acc(nfact, 0);
                    for (const auto& summed : cls) {
                        Rat c = chain_to_one(row_of(summed), col_of(summed), n);
                        if (c == 0) continue;
                        auto vec = perm_vector(PermLabel::p(row_of(summed)[0], col_of(summed)[0]), n);
                        for (std::size_t t = 0; t < nfact; ++t) acc[t] += c * vec[t];
                    }
                    for (std::size_t t = 0; t < nfact; ++t)
                        if (acc[t] != Rat(expect ? 1 : 0)) return false;
                } else if (x == CategoryId::o) {
                    std::vector<ExactScalar> acc(static_cast<std::size_t>(d) * d);
                    ExactScalar inv_sqrt(0, Rat(1, n), static_cast<unsigned>(n));
                    ExactScalar factor = 1;
                    for (int m = 0; m < k; ++m) factor *= inv_sqrt;
                    for (const auto& summed : cls) {
                        int a = chase(row_of(summed), n), b = chase(col_of(summed), n);
                        if (a == 0 || b == 0) continue;
                        acc[static_cast<std::size_t>(a - 1) * d + (b - 1)] += factor;
                    }
                    for (std::size_t t = 0; t < acc.size(); ++t) {
                        ExactScalar want =
                            (expect && t + 1 == acc.size()) ? ExactScalar(1) : ExactScalar(0);
                        if (acc[t] != want) return false;
                    }
                } else {  // h
                    std::vector<Rat> acc(nfact * d * d, 0);
                    for (const auto& summed : cls) {
                        const auto iv = row_of(summed);
                        const auto jv = col_of(summed);
                        int a = chase(iv, n), b = chase(jv, n);
                        if (a == 0 || b == 0) continue;
                        Rat c = chain_to_one(iv, jv, n);
                        if (c == 0) continue;
                        auto vec = perm_vector(PermLabel::p(iv[0], jv[0]), n);
                        std::size_t pos = static_cast<std::size_t>(a - 1) * d + (b - 1);
                        for (std::size_t t = 0; t < nfact; ++t) acc[t * d * d + pos] += c * vec[t];
                    }
                    std::size_t corner = static_cast<std::size_t>(d) * d - 1;
                    for (std::size_t t = 0; t < nfact; ++t)
                        for (std::size_t m = 0; m < static_cast<std::size_t>(d) * d; ++m) {
                            Rat want = (expect && m == corner) ? Rat(1) : Rat(0);
                            if (acc[t * d * d + m] != want) return false;
                        }
                }
            }
        }
    }
    return true;
}

Rat omega_value(CategoryId x, const MultiIndex& i, const MultiIndex& j, int n) {
    if (i.length() != j.length()) throw LengthMismatchError("index lengths differ");
    const int l = i.length();
    int a = chase(i.entries, n), b = chase(j.entries, n);
    bool closes = (a == n + 1 && b == n + 1) || l == 0;
    if (x == CategoryId::o) {
        ExactScalar inv_sqrt(0, Rat(1, n), static_cast<unsigned>(n));
        ExactScalar v = closes ? ExactScalar(1) : ExactScalar(0);
        for (int m = 0; m < l && !v.is_zero(); ++m) v *= inv_sqrt;
        return v.as_rational();  // radical survival would be a hard error
    }
    if (x == CategoryId::h) {
        if (!closes) return 0;
        std::vector<std::pair<int, int>> seg;
        for (int m = 0; m < l; ++m) seg.emplace_back(i.entries[m], j.entries[m]);
        return chain_state_value(GeneratorWord(n, {seg}));
    }
    throw std::invalid_argument("omega is defined for categories o and h");
}

} // namespace beq
