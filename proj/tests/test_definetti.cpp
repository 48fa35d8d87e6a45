#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "beq/definetti.hpp"

using namespace beq;

namespace {

SetPartition P(int k, std::vector<std::vector<int>> blocks) { return {k, std::move(blocks)}; }

} // namespace

TEST_CASE("NCPoly basics") {
    NCPoly p;
    CHECK_THROWS(p.add({}, 1));
    p.add({1, 2}, Rat(1, 2));
    p.add({1, 2}, Rat(-1, 2));
    CHECK(p.terms().empty());
    p.add({1}, Rat(2, 3));
    p.add({2}, Rat(-1, 3));
    CHECK(p.norm1() == 1);
    CHECK(p.coefficient({1}) == Rat(2, 3));
    CHECK(p.coefficient({3}) == 0);
    NCPoly q = p;
    q -= p;
    CHECK(q.terms().empty());
}

TEST_CASE("conditional expectation of a single variable") {
    for (int n = 2; n <= 5; ++n) {
        auto e = conditional_expectation_En(CategoryId::s, n, {1});
        REQUIRE(e.terms().size() == static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) CHECK(e.coefficient({i}) == Rat(1, n));
    }
}

TEST_CASE("conditional expectation coefficients at k=2") {
    auto e = conditional_expectation_En(CategoryId::s, 3, {1, 2});
    CHECK(e.coefficient({1, 2}) == Rat(1, 6));
    CHECK(e.coefficient({1, 1}) == 0);

    auto eo = conditional_expectation_En(CategoryId::o, 3, {1, 1});
    for (int i = 1; i <= 3; ++i) CHECK(eo.coefficient({i, i}) == Rat(1, 3));
    CHECK(eo.coefficient({1, 2}) == 0);
}

TEST_CASE("partitioned sums") {
    auto e = partitioned_En(CategoryId::s, 3, SetPartition::full(1), 1);
    for (int i = 1; i <= 3; ++i) CHECK(e.coefficient({i}) == Rat(1, 3));

    auto all = partitioned_En(CategoryId::s, 2, SetPartition::singletons(2), 2);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) CHECK(all.coefficient({a, b}) == Rat(1, 4));

    auto diag = partitioned_En(CategoryId::o, 2, SetPartition::pair(), 2);
    CHECK(diag.coefficient({1, 1}) == Rat(1, 2));
    CHECK(diag.coefficient({2, 2}) == Rat(1, 2));
    CHECK(diag.coefficient({1, 2}) == 0);

    CHECK_THROWS_AS(partitioned_En(CategoryId::o, 2, SetPartition::singletons(2), 2),
                    NotAnElementError);
}

TEST_CASE("partitioned cumulants") {
    // only pi <= sigma contribute: K_{{1}{2}} is the partitioned sum itself
    auto k12 = cumulant_En(CategoryId::s, 2, SetPartition::singletons(2));
    CHECK(k12 == partitioned_En(CategoryId::s, 2, SetPartition::singletons(2), 2));
    // K_{1_2} = f_{1_2} - f_{{1}{2}}
    auto k2 = cumulant_En(CategoryId::s, 2, SetPartition::full(2));
    NCPoly expect = partitioned_En(CategoryId::s, 2, SetPartition::full(2), 2);
    expect -= partitioned_En(CategoryId::s, 2, SetPartition::singletons(2), 2);
    CHECK(k2 == expect);
    // untruncated and n0=1 truncation agree
    CHECK(truncated_cumulant_En(CategoryId::s, 1, 2, SetPartition::singletons(2)) == k12);
}

TEST_CASE("identical-distribution residual") {
    for (int n = 2; n <= 6; ++n)
        CHECK(id_cumulant_residual(CategoryId::s, n, MultiIndex({1, 2}, n)) == Rat(2, n));
    for (int n = 2; n <= 6; ++n)
        CHECK(id_cumulant_residual_truncated(CategoryId::s, 1, n, MultiIndex({1, 2}, n)) ==
              Rat(2, n));
    // decay by at least the 0.6 factor when n doubles
    Rat r8 = id_cumulant_residual(CategoryId::o, 8, MultiIndex({1, 1}, 8));
    Rat r16 = id_cumulant_residual(CategoryId::o, 16, MultiIndex({1, 1}, 16));
    CHECK(r16 <= Rat(3, 5) * r8);
}

TEST_CASE("forward invariance") {
    CumulantSpec o_spec{CategoryId::o, {{2, Rat(7, 2)}}};
    CHECK(forward_invariance_check(o_spec, 2, 3) == 0);
    CumulantSpec s_spec{CategoryId::s, {{1, 1}, {2, 1}}};
    CHECK(forward_invariance_check(s_spec, 3, 3) == 0);
    CumulantSpec h_spec{CategoryId::h, {{2, 1}, {4, 1}}};
    CHECK(forward_invariance_check(h_spec, 4, 3) == 0);
}

TEST_CASE("projection fixes invariant columns") {
    // summing E_n over a kernel class above pi reproduces the partitioned sum
    const int n = 3;
    SetPartition pi = SetPartition::pair();
    NCPoly lhs;
    MultiIndexRange range(2, n);
    range.for_each([&](const std::vector<int>& jv) {
        if (refines_kernel(pi, jv)) lhs += conditional_expectation_En(CategoryId::s, n, jv);
    });
    NCPoly rhs;
    range.for_each([&](const std::vector<int>& iv) {
        if (refines_kernel(pi, iv)) rhs.add(iv, 1);
    });
    CHECK(lhs == rhs);
}

TEST_CASE("recover cumulants round trip") {
    CumulantSpec spec{CategoryId::s, {{1, 1}, {2, 2}}};
    std::vector<InvariantMomentVector> vecs;
    for (int deg = 1; deg <= 4; ++deg)
        vecs.push_back({CategoryId::s, deg, 5, iid_moment_vector(spec, deg, 5)});
    auto rec = recover_cumulants(vecs, CategoryId::s);
    CHECK(rec.spec.kappa_at(1) == 1);
    CHECK(rec.spec.kappa_at(2) == 2);
    CHECK(rec.spec.kappa_at(3) == 0);
    CHECK(rec.spec.kappa_at(4) == 0);
    CHECK(rec.violations.empty());

    // centered Bernoulli under the o tag
    CumulantSpec ospec{CategoryId::o, {{2, Rat(9, 4)}}};
    std::vector<InvariantMomentVector> ovecs;
    for (int deg = 1; deg <= 4; ++deg)
        ovecs.push_back({CategoryId::o, deg, 5, iid_moment_vector(ospec, deg, 5)});
    auto orec = recover_cumulants(ovecs, CategoryId::o);
    CHECK(orec.spec.kappa_at(2) == Rat(9, 4));
    CHECK(orec.violations.empty());

    // a broken entry must be rejected
    vecs[1].by_kernel[SetPartition::singletons(2)] += 1;
    CHECK_THROWS_AS(recover_cumulants(vecs, CategoryId::s), InconsistentMomentsError);
}

TEST_CASE("support violations are reported") {
    // kappa_1 != 0 is fine over the full lattice but outside the o support
    CumulantSpec spec{CategoryId::s, {{1, 1}}};
    std::vector<InvariantMomentVector> vecs;
    for (int deg = 1; deg <= 2; ++deg)
        vecs.push_back({CategoryId::s, deg, 4, iid_moment_vector(spec, deg, 4)});
    auto rec = recover_cumulants(vecs, CategoryId::o);
    CHECK(rec.violations == std::vector<int>{1});
    CHECK(rec.spec.kappa_at(1) == 1);
}
