#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "beq/cumulants.hpp"

#include <random>

using namespace beq;

namespace {

SetPartition P(int k, std::vector<std::vector<int>> blocks) { return {k, std::move(blocks)}; }

// scalar functional with moments of Ber(1,2): E[y^m] = m-th moment
struct BerMoments {
    Rat operator()(const std::vector<int>& ys) const {
        return bernoulli_moment(BernoulliParams(1, 2), static_cast<int>(ys.size()));
    }
};

// scalar functional from a fixed moment sequence (index = word length)
struct FromMoments {
    std::vector<Rat> m;  // m[len]
    Rat operator()(const std::vector<int>& ys) const { return m.at(ys.size()); }
};

} // namespace

TEST_CASE("partitioned_expectation") {
    BerMoments E;
    std::vector<int> ys = {0, 0, 0};
    CHECK(partitioned_expectation(E, SetPartition::full(3), ys) == 5);
    CHECK(partitioned_expectation(E, P(3, {{1, 2}, {3}}), ys) == 3);  // m2 * m1 = 3 * 1
    CHECK(partitioned_expectation(E, SetPartition::singletons(3), ys) == 1);
    CHECK_THROWS_AS(partitioned_expectation(E, SetPartition::full(2), ys), SizeMismatchError);
    CHECK_THROWS(partitioned_expectation(E, P(3, {{1, 3}, {2}}), ys));  // not interval
}

TEST_CASE("cumulant") {
    FromMoments E{{1, 1, 3, 5}};  // m0 unused, m1=1, m2=3, m3=5
    std::vector<int> two = {0, 0}, three = {0, 0, 0};
    CHECK(cumulant(E, SetPartition::full(2), two) == 3 - 1);  // K2 = m2 - m1^2
    CHECK(cumulant(E, SetPartition::full(3), three) == 0);    // K3 = 5 - 2*1*2 - 1 ... = 0
    CHECK(cumulant(E, SetPartition::singletons(2), two) == 1);
}

TEST_CASE("block multiplicativity") {
    FromMoments E{{1, Rat(1, 2), 2, Rat(7, 3), 4}};
    for (int k = 2; k <= 4; ++k) {
        std::vector<int> ys(k, 0);
        for (const auto& pi : enumerate_interval(k)) {
            Rat prod = 1;
            for (const auto& block : pi.blocks())
                prod *= cumulant(E, SetPartition::full(static_cast<int>(block.size())),
                                 std::vector<int>(block.size(), 0));
            CHECK(cumulant(E, pi, ys) == prod);
        }
    }
}

TEST_CASE("moments_from_cumulants") {
    CumulantSpec o_spec{CategoryId::o, {{2, Rat(9)}}};  // sigma^2 = 9
    CHECK(moments_from_cumulants(o_spec, 3) == 0);
    CHECK(moments_from_cumulants(o_spec, 4) == 81);
    CumulantSpec b_spec{CategoryId::b, {{1, 1}, {2, 2}}};
    CHECK(moments_from_cumulants(b_spec, 3) == 5);  // 1 + 2 + 2
    CumulantSpec zero{CategoryId::s, {}};
    CHECK(moments_from_cumulants(zero, 4) == 0);
}

TEST_CASE("cumulants_from_moments") {
    auto rec = cumulants_from_moments({1, 3, 5, 11, 21}, CategoryId::b);
    CHECK(rec.kappa[1] == 1);
    CHECK(rec.kappa[2] == 2);
    CHECK(rec.kappa[3] == 0);
    CHECK(rec.kappa[4] == 0);
    CHECK(rec.kappa[5] == 0);
    CHECK(rec.violations.empty());

    Rat s2 = Rat(5, 4);  // centered Bernoulli: even moments are powers of sigma^2
    auto centered = cumulants_from_moments({0, s2, 0, s2 * s2, 0, s2 * s2 * s2}, CategoryId::o);
    CHECK(centered.kappa[2] == s2);
    for (int m : {1, 3, 4, 5, 6}) CHECK(centered.kappa[m] == 0);
    CHECK(centered.violations.empty());

    auto ones = cumulants_from_moments({1, 1, 1}, CategoryId::o);
    CHECK(ones.kappa[1] == 1);
    CHECK(ones.kappa[2] == 0);
    CHECK(ones.kappa[3] == 0);
    CHECK(ones.violations == std::vector<int>{1});
}

TEST_CASE("bernoulli moments") {
    BernoulliParams sym(0, Rat(4));
    for (int m : {1, 3, 5, 7}) CHECK(bernoulli_moment(sym, m) == 0);
    CHECK(bernoulli_moment(sym, 2) == 4);
    CHECK(bernoulli_moment(sym, 4) == 16);

    BernoulliParams b12(1, 2);
    CHECK(bernoulli_moment(b12, 1) == 1);
    CHECK(bernoulli_moment(b12, 2) == 3);
    CHECK(bernoulli_moment(b12, 3) == 5);
    CHECK(bernoulli_moment(b12, 4) == 11);
    CHECK(bernoulli_moment(b12, 5) == 21);
    Rat alpha, beta;
    REQUIRE(bernoulli_roots(b12, alpha, beta));
    CHECK(alpha == 2);
    CHECK(beta == 1);
    for (int m = 1; m <= 10; ++m) CHECK(bernoulli_moment_closed(b12, m) == bernoulli_moment(b12, m));

    CHECK_THROWS(BernoulliParams(1, Rat(-1)));
    Rat a2, b2;
    CHECK(!bernoulli_roots(BernoulliParams(0, 2), a2, b2));  // sqrt(8) irrational
}

TEST_CASE("mixed cumulants vanish") {
    std::map<int, Rat> kappa = {{1, Rat(1, 2)}, {2, 3}, {3, Rat(-2, 5)}};
    for (int k = 2; k <= 4; ++k) CHECK(mixed_cumulant_check(kappa, k, 200, 99) == 0);
}

TEST_CASE("corner insertion vanishing") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        for (std::size_t dim = 2; dim <= 4; ++dim) CHECK(corner_insertion_vanishing(dim, seed));
    CHECK_THROWS(corner_insertion_vanishing(1, 0));
}
