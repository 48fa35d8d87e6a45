#include "beq/verify.hpp"

#include "beq/cumulants.hpp"
#include "beq/definetti.hpp"
#include "beq/haar.hpp"
#include "beq/partition.hpp"
#include "beq/poset.hpp"
#include "beq/representations.hpp"
#include "beq/weingarten.hpp"

#include <random>
#include <sstream>

namespace beq {

namespace {

constexpr CategoryId kAllCats[] = {CategoryId::s, CategoryId::o, CategoryId::h, CategoryId::b};

int clamp_grid(int def, int cap) { return cap > 0 && cap < def ? cap : def; }

/// k-grid per category: 1..4 in general, even values up to 6 for o and h.
std::vector<int> grid_ks(CategoryId x, int max_k) {
    std::vector<int> ks;
    if (x == CategoryId::o || x == CategoryId::h) {
        for (int k = 2; k <= clamp_grid(6, max_k); k += 2) ks.push_back(k);
    } else {
        for (int k = 1; k <= clamp_grid(4, max_k); ++k) ks.push_back(k);
    }
    return ks;
}

MultiIndex class_rep(const SetPartition& kappa, int n) {
    std::vector<int> e(kappa.ground_size());
    for (int pos = 1; pos <= kappa.ground_size(); ++pos)
        e[pos - 1] = kappa.block_index_of(pos) + 1;
    return MultiIndex(std::move(e), n);
}

Rat falling_factorial(int n, int blocks) {
    Rat mult = 1;
    for (int m = 0; m < blocks; ++m) mult *= n - m;
    return mult;
}

struct Check {
    bool ok = true;
    long cases = 0;
    std::string detail;

    void count() { ++cases; }
    void fail(const std::string& d) {
        if (ok) {
            ok = false;
            detail = d;
        }
    }
    CriterionResult done(int id, const std::string& name) {
        if (ok) detail = std::to_string(cases) + " cases";
        return {id, name, ok, detail};
    }
};

std::string cell(CategoryId x, int k, int n) {
    std::ostringstream os;
    os << "x=" << category_name(x) << " k=" << k << " n=" << n;
    return os.str();
}

/// Exact row echelon over Q used for span comparisons.
struct Echelon {
    std::vector<std::vector<Rat>> rows;
    std::vector<std::size_t> pivots;

    // Reduces v against the rows; returns true (and stores v) when v adds a
    // new direction, false when v was already in the span.
    bool insert(std::vector<Rat> v) { return reduce(v) ? (store(std::move(v)), true) : false; }
    bool in_span(std::vector<Rat> v) { return !reduce(v); }

private:
    bool reduce(std::vector<Rat>& v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Rat& c = v[pivots[r]];
            if (c == 0) continue;
            Rat f = c / rows[r][pivots[r]];
            for (std::size_t m = 0; m < v.size(); ++m) v[m] -= f * rows[r][m];
        }
        for (const Rat& c : v)
            if (c != 0) return true;
        return false;
    }
    void store(std::vector<Rat> v) {
        std::size_t p = 0;
        while (v[p] == 0) ++p;
        pivots.push_back(p);
        rows.push_back(std::move(v));
    }
};

// 1. projection entries from the Weingarten double sum vs the Gram-system
// oracle, over all kernel classes (entries depend on indices only through
// their kernels).
CriterionResult criterion_projection(int max_k, int max_n) {
    Check c;
    const int N = clamp_grid(6, max_n);
    for (CategoryId x : kAllCats) {
        for (int k : grid_ks(x, max_k)) {
            if (enumerate_category(x, k).empty()) continue;
            int thr = invertibility_threshold(x, k, N);
            if (thr < 0) continue;
            for (int n = thr; n <= N; ++n) {
                const auto& t = weingarten_table(x, k, n);
                auto kernels = enumerate_set_partitions(k, n);
                for (const auto& ki : kernels)
                    for (const auto& kj : kernels) {
                        c.count();
                        if (projection_entry_kernel(t, ki, kj) !=
                            projection_oracle_kernel(t, ki, kj))
                            c.fail(cell(x, k, n) + " ker i=" + ki.str() + " ker j=" + kj.str());
                    }
            }
        }
    }
    return c.done(1, "projection entries match the Gram-system oracle");
}

// 2. closed-form Haar segment values vs the Weingarten projection entries.
CriterionResult criterion_closed_forms(int max_k, int max_n) {
    Check c;
    const int N = clamp_grid(6, max_n);
    for (CategoryId x : {CategoryId::s, CategoryId::o, CategoryId::h}) {
        for (int k : grid_ks(x, max_k)) {
            if (enumerate_category(x, k).empty()) continue;
            int thr = invertibility_threshold(x, k, N);
            if (thr < 0) continue;
            for (int n = thr; n <= N; ++n) {
                const auto& t = weingarten_table(x, k, n);
                auto kernels = enumerate_set_partitions(k, n);
                for (const auto& ki : kernels)
                    for (const auto& kj : kernels) {
                        c.count();
                        Rat closed = haar_segment_value(x, class_rep(ki, n), class_rep(kj, n), n);
                        if (closed != projection_entry_kernel(t, ki, kj))
                            c.fail(cell(x, k, n) + " ker i=" + ki.str() + " ker j=" + kj.str());
                    }
            }
        }
    }
    return c.done(2, "closed-form Haar values match the Weingarten path");
}

// 3. representations: chain values, matrix-model states, generator relations.
CriterionResult criterion_representations(int max_k, int max_n) {
    Check c;
    for (int k = 1; k <= clamp_grid(4, max_k); ++k) {
        for (int n = 2; n <= clamp_grid(5, max_n); ++n) {
            MultiIndexRange range(k, n);
            range.for_each([&](const std::vector<int>& iv) {
                range.for_each([&](const std::vector<int>& jv) {
                    c.count();
                    std::vector<std::pair<int, int>> seg;
                    for (int m = 0; m < k; ++m) seg.emplace_back(iv[m], jv[m]);
                    GeneratorWord w(n, {seg});
                    MultiIndex i(iv, n), j(jv, n);
                    if (chain_state_value(w) != haar_s_closed(i, j, n))
                        c.fail(cell(CategoryId::s, k, n) + " chain value mismatch");
                });
            });
        }
    }
    for (CategoryId x : {CategoryId::o, CategoryId::h}) {
        for (int k = 1; k <= clamp_grid(4, max_k); ++k) {
            for (int n = 2; n <= clamp_grid(3, max_n); ++n) {
                MultiIndexRange range(k, n);
                range.for_each([&](const std::vector<int>& iv) {
                    range.for_each([&](const std::vector<int>& jv) {
                        c.count();
                        MultiIndex i(iv, n), j(jv, n);
                        Rat closed = x == CategoryId::o ? haar_o_closed(i, j, n)
                                                        : haar_h_closed(i, j, n);
                        if (omega_value(x, i, j, n) != closed)
                            c.fail(cell(x, k, n) + " omega mismatch");
                    });
                });
            }
        }
    }
    for (CategoryId x : {CategoryId::s, CategoryId::o, CategoryId::h}) {
        for (int k = 1; k <= clamp_grid(4, max_k); ++k) {
            if (!block_size_allowed(x, k)) continue;
            for (int n = 2; n <= clamp_grid(4, max_n); ++n) {
                c.count();
                if (!verify_semigroup_relations(x, n, k))
                    c.fail(cell(x, k, n) + " generator relations");
            }
        }
    }
    for (int n = 2; n <= clamp_grid(5, max_n); ++n) {
        c.count();
        if (!verify_liu_relations(n)) c.fail("rank-1 projection relations at n=" + std::to_string(n));
    }
    return c.done(3, "representations: chains, matrix states, generator relations");
}

// 4. Haar invariance (the convolution identity) plus multiplicativity
// across p's on seeded random words.
CriterionResult criterion_invariance(int max_k, int max_n, std::uint64_t seed) {
    Check c;
    const int N = clamp_grid(6, max_n);
    std::mt19937_64 rng(seed);
    for (CategoryId x : {CategoryId::s, CategoryId::o, CategoryId::h}) {
        for (int k : grid_ks(x, max_k)) {
            if (enumerate_category(x, k).empty()) continue;
            int thr = invertibility_threshold(x, k, N);
            if (thr < 0) continue;
            for (int n = thr; n <= N; ++n) {
                auto classes = enumerate_set_partitions(k, n);
                const std::size_t m = classes.size();
                std::vector<MultiIndex> reps;
                std::vector<Rat> mult;
                for (const auto& kappa : classes) {
                    reps.push_back(class_rep(kappa, n));
                    mult.push_back(falling_factorial(n, kappa.num_blocks()));
                }
                // Segment values are constant on kernel classes; tabulate once.
                std::vector<std::vector<Rat>> A(m, std::vector<Rat>(m));
                std::vector<std::vector<std::size_t>> nz(m);
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t b = 0; b < m; ++b) {
                        A[a][b] = haar_segment_value(x, reps[a], reps[b], n);
                        if (A[a][b] != 0) nz[a].push_back(b);
                    }
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t b = 0; b < m; ++b) {
                        c.count();
                        Rat sum = 0;
                        for (std::size_t s : nz[a]) sum += mult[s] * A[a][s] * A[s][b];
                        if (sum != A[a][b])
                            c.fail(cell(x, k, n) + " convolution identity at " +
                                   classes[a].str() + "," + classes[b].str());
                    }
                // Cross-check the public residual on all pairs when small,
                // otherwise on every nonzero pair plus a random sample.
                auto check_pair = [&](std::size_t a, std::size_t b) {
                    c.count();
                    if (invariance_residual(x, reps[a], reps[b], n) != 0)
                        c.fail(cell(x, k, n) + " residual nonzero at " + classes[a].str() + "," +
                               classes[b].str());
                };
                if (m <= 16) {
                    for (std::size_t a = 0; a < m; ++a)
                        for (std::size_t b = 0; b < m; ++b) check_pair(a, b);
                } else {
                    for (std::size_t a = 0; a < m; ++a)
                        for (std::size_t b : nz[a]) check_pair(a, b);
                    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
                    for (int t = 0; t < 60; ++t) check_pair(pick(rng), pick(rng));
                }
            }
        }
    }
    // Multiplicativity h(w1 p w2) = h(w1) h(w2), 200 seeded random words.
    int thr_b[4] = {0, invertibility_threshold(CategoryId::b, 1, 8),
                    invertibility_threshold(CategoryId::b, 2, 8),
                    invertibility_threshold(CategoryId::b, 3, 8)};
    for (int t = 0; t < 200; ++t) {
        CategoryId x = kAllCats[t % 4];
        HaarRoute route = x == CategoryId::b ? HaarRoute::weingarten : HaarRoute::closed;
        int n = 2 + static_cast<int>(rng() % 4);
        auto random_segments = [&](int count) {
            std::vector<std::vector<std::pair<int, int>>> segs;
            for (int s = 0; s < count; ++s) {
                int len = 1 + static_cast<int>(rng() % 3);
                if (x == CategoryId::b) n = std::max(n, thr_b[len]);
                std::vector<std::pair<int, int>> seg;
                for (int l = 0; l < len; ++l)
                    seg.emplace_back(1 + static_cast<int>(rng() % n), 1 + static_cast<int>(rng() % n));
                segs.push_back(std::move(seg));
            }
            return segs;
        };
        auto s1 = random_segments(1 + static_cast<int>(rng() % 2));
        auto s2 = random_segments(1 + static_cast<int>(rng() % 2));
        auto joined = s1;
        joined.insert(joined.end(), s2.begin(), s2.end());
        GeneratorWord w1(n, s1), w2(n, s2), w12(n, joined);
        c.count();
        if (haar_value(x, w12, route) != haar_value(x, w1, route) * haar_value(x, w2, route))
            c.fail("multiplicativity at sample " + std::to_string(t));
    }
    return c.done(4, "Haar invariance and multiplicativity");
}

// 5. Weingarten estimate: residual halving and the exact k=2 closed form.
CriterionResult criterion_estimate(int max_k, int) {
    Check c;
    for (int k = 1; k <= clamp_grid(4, max_k); ++k) {
        const auto& t8 = weingarten_table(CategoryId::s, k, 8);
        const auto& t16 = weingarten_table(CategoryId::s, k, 16);
        const auto& t32 = weingarten_table(CategoryId::s, k, 32);
        for (const auto& p1 : t8.elements)
            for (const auto& p2 : t8.elements) {
                Rat r8 = weingarten_estimate_residual(t8, p1, p2);
                Rat r16 = weingarten_estimate_residual(t16, p1, p2);
                Rat r32 = weingarten_estimate_residual(t32, p1, p2);
                c.count();
                if (r16 > Rat(3, 5) * r8 || r32 > Rat(3, 5) * r16)
                    c.fail("k=" + std::to_string(k) + " " + p1.str() + "," + p2.str());
            }
    }
    for (int n = 2; n <= 16; ++n) {
        c.count();
        Rat r = weingarten_estimate_residual(weingarten_table(CategoryId::s, 2, n),
                                             SetPartition::singletons(2), SetPartition::full(2));
        if (r != Rat(1, n - 1)) c.fail("k=2 closed-form residual at n=" + std::to_string(n));
    }
    return c.done(5, "Weingarten estimate decay and k=2 closed form");
}

// 6. Moebius: defining sums, subposet equality, sign closed form.
CriterionResult criterion_mobius(int max_k, int) {
    Check c;
    for (int k = 1; k <= clamp_grid(7, max_k); ++k) {
        PartitionPoset poset = PartitionPoset::interval(k);
        const auto& elems = poset.elements();
        for (const auto& p1 : elems)
            for (const auto& p2 : elems) {
                if (!leq(p1, p2)) {
                    c.count();
                    if (poset.mobius(p1, p2) != 0) c.fail("nonzero off order at k=" + std::to_string(k));
                    continue;
                }
                Rat lower = 0, upper = 0;
                for (const auto& r : elems) {
                    if (leq(p1, r) && leq(r, p2)) {
                        lower += poset.mobius(p1, r);
                        upper += poset.mobius(r, p2);
                    }
                }
                Rat delta = p1 == p2 ? 1 : 0;
                c.count();
                if (lower != delta || upper != delta)
                    c.fail("defining sums at k=" + std::to_string(k) + " " + p1.str() + "<=" + p2.str());
                int diff = p1.num_blocks() - p2.num_blocks();
                c.count();
                if (poset.mobius(p1, p2) != (diff % 2 == 0 ? Rat(1) : Rat(-1)))
                    c.fail("sign closed form at k=" + std::to_string(k));
            }
        for (CategoryId x : {CategoryId::o, CategoryId::h, CategoryId::b}) {
            auto members = enumerate_category(x, k);
            if (members.empty()) continue;
            PartitionPoset sub(members);
            for (const auto& p1 : members)
                for (const auto& p2 : members) {
                    if (!leq(p1, p2)) continue;
                    c.count();
                    if (sub.mobius(p1, p2) != poset.mobius(p1, p2))
                        c.fail("subposet mismatch x=" + std::string(category_name(x)) +
                               " k=" + std::to_string(k));
                }
        }
    }
    return c.done(6, "Moebius recursion, subposet equality, sign formula");
}

// 7. cumulant algebra: round trip, Bernoulli law, corner insertion.
CriterionResult criterion_cumulants(int, int, std::uint64_t seed) {
    Check c;
    std::mt19937_64 rng(seed);
    auto random_rat = [&rng]() {
        return Rat(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
    };
    for (CategoryId x : kAllCats) {
        for (int trial = 0; trial < 5; ++trial) {
            CumulantSpec spec{x, {}};
            for (int m = 1; m <= 8; ++m)
                if (block_size_allowed(x, m)) spec.kappa[m] = random_rat();
            std::vector<Rat> moments;
            for (int k = 1; k <= 8; ++k) moments.push_back(moments_from_cumulants(spec, k));
            auto rec = cumulants_from_moments(moments, x);
            c.count();
            if (!rec.violations.empty()) c.fail("spurious support violation");
            for (int m = 1; m <= 8; ++m) {
                c.count();
                auto it = rec.kappa.find(m);
                if ((it == rec.kappa.end() ? Rat(0) : it->second) != spec.kappa_at(m))
                    c.fail("round trip x=" + std::string(category_name(x)));
            }
        }
    }
    for (int trial = 0; trial < 5; ++trial) {
        Rat alpha(1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3));
        Rat beta(1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3));
        BernoulliParams params(alpha - beta, alpha * beta);
        CumulantSpec spec{CategoryId::b, {{1, params.mu}, {2, params.var}}};
        for (int m = 1; m <= 10; ++m) {
            c.count();
            Rat rec_m = bernoulli_moment(params, m);
            if (rec_m != moments_from_cumulants(spec, m) ||
                rec_m != bernoulli_moment_closed(params, m))
                c.fail("Bernoulli moment m=" + std::to_string(m));
        }
    }
    BernoulliParams ber12(1, 2);
    for (int m = 1; m <= 10; ++m) {
        c.count();
        Rat expect = (rat_pow(Rat(2), m + 1) - rat_pow(Rat(-1), m + 1)) / 3;
        if (bernoulli_moment(ber12, m) != expect) c.fail("Ber(1,2) moment m=" + std::to_string(m));
    }
    for (int t = 0; t < 100; ++t) {
        c.count();
        if (!corner_insertion_vanishing(2 + t % 3, seed + t))
            c.fail("corner insertion seed offset " + std::to_string(t));
    }
    return c.done(7, "cumulant round trip, Bernoulli law, corner vanishing");
}

// 8. eigenspace of the projection at 1 equals the span of the T vectors.
CriterionResult criterion_fixed_space(int max_k, int max_n) {
    Check c;
    const int N = clamp_grid(5, max_n);
    for (CategoryId x : kAllCats) {
        for (int k = 1; k <= clamp_grid(4, max_k); ++k) {
            auto members = enumerate_category(x, k);
            if (members.empty()) continue;
            int thr = invertibility_threshold(x, k, N);
            if (thr < 0) continue;
            for (int n = std::max(thr, 2); n <= N; ++n) {
                const auto& t = weingarten_table(x, k, n);
                auto basis = fixed_space(t);
                c.count();
                if (basis.size() != members.size()) {
                    c.fail(cell(x, k, n) + " dimension " + std::to_string(basis.size()));
                    continue;
                }
                Echelon span;
                for (const auto& v : basis) span.insert(v);
                for (const auto& pi : members) {
                    c.count();
                    if (!span.in_span(t_vector(pi, n)))
                        c.fail(cell(x, k, n) + " T vector outside eigenspace: " + pi.str());
                }
                Echelon t_span;
                for (const auto& pi : members) t_span.insert(t_vector(pi, n));
                for (const auto& v : basis) {
                    c.count();
                    if (!t_span.in_span(v)) c.fail(cell(x, k, n) + " eigenvector outside T span");
                }
            }
        }
    }
    return c.done(8, "fixed space equals the span of the T vectors");
}

CumulantSpec random_spec(CategoryId x, int k, std::mt19937_64& rng) {
    CumulantSpec spec{x, {}};
    for (int m = 1; m <= k; ++m)
        if (block_size_allowed(x, m))
            spec.kappa[m] = Rat(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3));
    return spec;
}

// Shared sampling for criteria 9 and 10 so the recovery round trip runs on
// the same specs that passed the forward check.
std::vector<std::pair<CumulantSpec, int>> sampled_specs(CategoryId x, int max_k,
                                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(x) * 7919);
    std::vector<std::pair<CumulantSpec, int>> out;
    for (int t = 0; t < 20; ++t) {
        int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(clamp_grid(5, max_k)));
        while (k > 1 && !enumerate_category(x, k).empty() &&
               invertibility_threshold(x, k, 6) < 0)
            --k;
        out.emplace_back(random_spec(x, k, rng), k);
    }
    return out;
}

// 9. forward direction: Boolean i.i.d. moment vectors are fixed by the
// projection.
CriterionResult criterion_forward(int max_k, int max_n, std::uint64_t seed) {
    Check c;
    const int n = clamp_grid(6, max_n);
    for (CategoryId x : kAllCats) {
        for (const auto& [spec, k] : sampled_specs(x, max_k, seed)) {
            c.count();
            if (forward_invariance_check(spec, k, n) != 0)
                c.fail(cell(x, k, n) + " forward residual nonzero");
        }
    }
    return c.done(9, "i.i.d. moment vectors are invariant");
}

// 10. converse ingredients: the exact 2/n residual, recovery round trip,
// rejection of perturbed vectors.
CriterionResult criterion_converse(int max_k, int max_n, std::uint64_t seed) {
    Check c;
    for (int n = 2; n <= 8; ++n) {
        c.count();
        if (id_cumulant_residual(CategoryId::s, n, MultiIndex({1, 2}, n)) != Rat(2, n))
            c.fail("2/n residual at n=" + std::to_string(n));
    }
    const int n = clamp_grid(6, max_n);
    for (CategoryId x : kAllCats) {
        for (const auto& [spec, k] : sampled_specs(x, max_k, seed)) {
            std::vector<InvariantMomentVector> vecs;
            for (int deg = 1; deg <= k; ++deg)
                vecs.push_back({x, deg, n, iid_moment_vector(spec, deg, n)});
            RecoveredCumulants rec = recover_cumulants(vecs, x);
            c.count();
            if (!rec.violations.empty()) c.fail(cell(x, k, n) + " spurious violations");
            for (int m = 1; m <= k; ++m) {
                c.count();
                if (rec.spec.kappa_at(m) != spec.kappa_at(m))
                    c.fail(cell(x, k, n) + " recovery mismatch at order " + std::to_string(m));
            }
        }
        // One perturbed non-invariant vector must be rejected.
        CumulantSpec spec{x, {}};
        if (block_size_allowed(x, 1)) spec.kappa[1] = 1;
        if (block_size_allowed(x, 2)) spec.kappa[2] = 2;
        std::vector<InvariantMomentVector> vecs;
        for (int deg = 1; deg <= 2; ++deg)
            vecs.push_back({x, deg, n, iid_moment_vector(spec, deg, n)});
        vecs[1].by_kernel[SetPartition::singletons(2)] += 1;
        c.count();
        try {
            recover_cumulants(vecs, x);
            c.fail(std::string("perturbed vector accepted, x=") + category_name(x));
        } catch (const InconsistentMomentsError&) {
        }
    }
    return c.done(10, "exact 2/n residual, recovery round trip, rejection");
}

// 11. counting, the three blockwise conditions, the join counterexample.
CriterionResult criterion_combinatorics(int max_k, int) {
    Check c;
    for (int k = 1; k <= clamp_grid(12, max_k); ++k) {
        c.count();
        if (enumerate_interval(k).size() != (1u << (k - 1)))
            c.fail("interval count at k=" + std::to_string(k));
    }
    const int K = clamp_grid(8, max_k);
    for (CategoryId x : kAllCats) {
        for (int k = 1; k <= K; ++k) {
            auto members = enumerate_category(x, k);
            for (const auto& pi : enumerate_interval(k)) {
                bool blocks_ok = true;
                for (const auto& block : pi.blocks())
                    if (!block_size_allowed(x, static_cast<int>(block.size()))) blocks_ok = false;
                c.count();
                if (category_member(x, pi) != blocks_ok)
                    c.fail("block stability x=" + std::string(category_name(x)) +
                           " k=" + std::to_string(k));
                if (category_member(x, pi)) continue;
                // interval closure: no member below and member above at once
                bool below = false, above = false;
                for (const auto& q : members) {
                    if (leq(q, pi)) below = true;
                    if (leq(pi, q)) above = true;
                }
                c.count();
                if (below && above)
                    c.fail("interval closure x=" + std::string(category_name(x)) +
                           " k=" + std::to_string(k) + " at " + pi.str());
            }
        }
        for (int l = 1; l <= K - 1; ++l) {
            for (int k = 1; k + l <= K; ++k) {
                if (!block_size_allowed(x, k)) continue;
                c.count();
                if (!enumerate_category(x, k + l).empty() && enumerate_category(x, l).empty())
                    c.fail("enough partitions x=" + std::string(category_name(x)) +
                           " l=" + std::to_string(l));
            }
        }
    }
    SetPartition left(3, {{1, 2}, {3}}), right(3, {{1}, {2, 3}});
    c.count();
    if (join(left, right) != SetPartition::full(3)) c.fail("join counterexample value");
    c.count();
    if (category_member(CategoryId::b, SetPartition::full(3)))
        c.fail("join counterexample should leave the category");
    return c.done(11, "counting, blockwise conditions, join counterexample");
}

} // namespace

CriterionResult run_criterion(int id, int max_k, int max_n, std::uint64_t seed) {
    switch (id) {
        case 1: return criterion_projection(max_k, max_n);
        case 2: return criterion_closed_forms(max_k, max_n);
        case 3: return criterion_representations(max_k, max_n);
        case 4: return criterion_invariance(max_k, max_n, seed);
        case 5: return criterion_estimate(max_k, max_n);
        case 6: return criterion_mobius(max_k, max_n);
        case 7: return criterion_cumulants(max_k, max_n, seed);
        case 8: return criterion_fixed_space(max_k, max_n);
        case 9: return criterion_forward(max_k, max_n, seed);
        case 10: return criterion_converse(max_k, max_n, seed);
        case 11: return criterion_combinatorics(max_k, max_n);
        default: throw std::invalid_argument("criterion id must be 1..11");
    }
}

std::vector<CriterionResult> run_all_criteria(int max_k, int max_n, std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 11; ++id) out.push_back(run_criterion(id, max_k, max_n, seed));
    return out;
}

} // namespace beq
