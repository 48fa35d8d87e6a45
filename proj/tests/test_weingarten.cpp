#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "beq/weingarten.hpp"

#include <algorithm>

using namespace beq;

namespace {

std::size_t index_of(const WeingartenTable& t, const SetPartition& p) {
    auto it = std::find(t.elements.begin(), t.elements.end(), p);
    REQUIRE(it != t.elements.end());
    return static_cast<std::size_t>(it - t.elements.begin());
}

} // namespace

TEST_CASE("gram matrix closed forms") {
    for (int n = 2; n <= 5; ++n) {
        const auto& t = weingarten_table(CategoryId::s, 2, n);
        auto a = index_of(t, SetPartition::singletons(2)), b = index_of(t, SetPartition::full(2));
        CHECK(t.gram_at(a, a) == Rat(n) * n);
        CHECK(t.gram_at(a, b) == n);
        CHECK(t.gram_at(b, a) == n);
        CHECK(t.gram_at(b, b) == n);
        CHECK(t.wein_at(a, a) == Rat(1, n * (n - 1)));
        CHECK(t.wein_at(a, b) == Rat(-1, n * (n - 1)));
        CHECK(t.wein_at(b, b) == Rat(1, n - 1));

        const auto& to = weingarten_table(CategoryId::o, 2, n);
        REQUIRE(to.elements.size() == 1);
        CHECK(to.gram_at(0, 0) == n);
        CHECK(to.wein_at(0, 0) == Rat(1, n));
    }
    // diagonal entries are n^{|pi|}
    const auto& t = weingarten_table(CategoryId::s, 3, 4);
    for (std::size_t r = 0; r < t.elements.size(); ++r)
        CHECK(t.gram_at(r, r) == rat_pow(Rat(4), t.elements[r].num_blocks()));
    CHECK_THROWS_AS(make_weingarten(CategoryId::s, 2, 1), SingularError);
    CHECK_THROWS_AS(make_weingarten(CategoryId::o, 3, 4), EmptyCategoryError);
}

TEST_CASE("gram times weingarten is the identity") {
    for (CategoryId x : {CategoryId::s, CategoryId::o, CategoryId::h, CategoryId::b})
        for (int k = 1; k <= 5; ++k) {
            if (enumerate_category(x, k).empty()) continue;
            int thr = invertibility_threshold(x, k, 8);
            if (thr < 0) continue;
            for (int n = thr; n <= 8; ++n) {
                const auto& t = weingarten_table(x, k, n);
                CHECK(t.gram * t.wein == ExactMatrix::identity(t.elements.size()));
            }
        }
}

TEST_CASE("invertibility threshold") {
    CHECK(invertibility_threshold(CategoryId::s, 2) == 2);
    CHECK(invertibility_threshold(CategoryId::o, 2) == 1);
}

TEST_CASE("projection entries") {
    for (int n = 2; n <= 5; ++n) {
        const auto& t1 = weingarten_table(CategoryId::s, 1, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(projection_entry(t1, MultiIndex({i}, n), MultiIndex({j}, n)) == Rat(1, n));

        const auto& t2 = weingarten_table(CategoryId::s, 2, n);
        CHECK(projection_entry(t2, MultiIndex({1, 1}, n), MultiIndex({2, 2}, n)) == Rat(1, n));
        CHECK(projection_entry(t2, MultiIndex({1, 2}, n), MultiIndex({1, 2}, n)) ==
              Rat(1, n * (n - 1)));
        CHECK(projection_oracle(t2, MultiIndex({1, 1}, n), MultiIndex({2, 2}, n)) == Rat(1, n));

        // I_h(2) = I_o(2), so the projections coincide
        const auto& th = weingarten_table(CategoryId::h, 2, n);
        const auto& to = weingarten_table(CategoryId::o, 2, n);
        MultiIndexRange range(2, n);
        range.for_each([&](const std::vector<int>& iv) {
            range.for_each([&](const std::vector<int>& jv) {
                MultiIndex i(iv, n), j(jv, n);
                CHECK(projection_entry(th, i, j) == projection_entry(to, i, j));
            });
        });
    }
}

TEST_CASE("projection is symmetric and idempotent") {
    struct Cell { CategoryId x; int k, n; };
    for (auto [x, k, n] : {Cell{CategoryId::s, 2, 3}, Cell{CategoryId::b, 3, 3},
                           Cell{CategoryId::o, 2, 4}, Cell{CategoryId::h, 4, 2}}) {
        auto H = projection_matrix(weingarten_table(x, k, n));
        const std::size_t d = H.size();
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                CHECK(H[r][c] == H[c][r]);
                Rat sum = 0;
                for (std::size_t s = 0; s < d; ++s) sum += H[r][s] * H[s][c];
                CHECK(sum == H[r][c]);
            }
    }
}

TEST_CASE("row sums against T vectors") {
    // sum over {s : pi <= ker s} of H_{rs} = zeta(pi <= ker r)
    for (CategoryId x : {CategoryId::s, CategoryId::b}) {
        for (int n = 2; n <= 4; ++n) {
            const auto& t = weingarten_table(x, 2, n);
            MultiIndexRange range(2, n);
            for (const auto& pi : t.elements) {
                range.for_each([&](const std::vector<int>& rv) {
                    MultiIndex r(rv, n);
                    Rat sum = 0;
                    range.for_each([&](const std::vector<int>& sv) {
                        if (refines_kernel(pi, sv)) sum += projection_entry(t, r, MultiIndex(sv, n));
                    });
                    CHECK(sum == (refines_kernel(pi, rv) ? 1 : 0));
                });
            }
        }
    }
}

TEST_CASE("projection column matches entries") {
    const auto& t = weingarten_table(CategoryId::s, 2, 3);
    MultiIndexRange range(2, 3);
    range.for_each([&](const std::vector<int>& jv) {
        auto col = projection_column(t, kernel(MultiIndex(jv, 3)));
        range.for_each([&](const std::vector<int>& iv) {
            CHECK(col[range.rank(iv)] ==
                  projection_entry(t, MultiIndex(iv, 3), MultiIndex(jv, 3)));
        });
    });
}

TEST_CASE("fixed space small cases") {
    const auto& t1 = weingarten_table(CategoryId::s, 1, 4);
    auto basis = fixed_space(t1);
    REQUIRE(basis.size() == 1);
    for (const Rat& v : basis[0]) CHECK(v == basis[0][0]);
    CHECK(basis[0][0] != 0);

    const auto& to = weingarten_table(CategoryId::o, 2, 3);
    basis = fixed_space(to);
    REQUIRE(basis.size() == 1);
    auto tvec = t_vector(SetPartition::pair(), 3);
    // proportional to T of the pair partition
    Rat scale;
    bool have_scale = false;
    for (std::size_t m = 0; m < tvec.size(); ++m) {
        if (tvec[m] == 0) {
            CHECK(basis[0][m] == 0);
        } else if (!have_scale) {
            scale = basis[0][m];
            have_scale = true;
        } else {
            CHECK(basis[0][m] == scale);
        }
    }
    CHECK(scale != 0);
}

TEST_CASE("fixed space dense and reduced routes agree") {
    const auto& t = weingarten_table(CategoryId::b, 2, 3);  // dimension 9
    auto dense = fixed_space(t, 300);
    auto reduced = fixed_space(t, 1);  // force the column-space route
    CHECK(dense.size() == t.elements.size());
    CHECK(reduced.size() == dense.size());
}

TEST_CASE("weingarten estimate residual") {
    for (int n = 2; n <= 8; ++n) {
        const auto& t = weingarten_table(CategoryId::s, 2, n);
        CHECK(weingarten_estimate_residual(t, SetPartition::singletons(2), SetPartition::full(2)) ==
              Rat(1, n - 1));
        const auto& to = weingarten_table(CategoryId::o, 2, n);
        CHECK(weingarten_estimate_residual(to, SetPartition::pair(), SetPartition::pair()) == 0);
    }
}

TEST_CASE("projection commutes with tensoring a full block") {
    for (int n = 2; n <= 5; ++n)
        for (int j = 1; j <= n; ++j)
            CHECK(haar_lemma_check(CategoryId::s, 1, 1, n, MultiIndex({j}, n)));
    for (int n = 2; n <= 4; ++n) {
        CHECK(haar_lemma_check(CategoryId::h, 2, 2, n, MultiIndex({1, 1}, n)));
        CHECK(haar_lemma_check(CategoryId::o, 2, 2, n, MultiIndex({1, 2}, n)));
    }
}
