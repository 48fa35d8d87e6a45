#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "beq/haar.hpp"

#include <algorithm>
#include <random>

using namespace beq;

TEST_CASE("parse_word") {
    auto lone = parse_word("p", 3);
    REQUIRE(lone.segments.size() == 1);
    CHECK(lone.segments[0].empty());

    auto w = parse_word("p;11,22;p", 3);
    REQUIRE(w.segments.size() == 1);
    CHECK(w.segments[0] == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});
    CHECK(w.rows(0).entries == std::vector<int>{1, 2});
    CHECK(w.cols(0).entries == std::vector<int>{1, 2});

    auto two = parse_word("p;11;p;21;p", 3);
    REQUIRE(two.segments.size() == 2);

    auto wide = parse_word("p;10-2,3-11;p", 12);
    CHECK(wide.segments[0] == std::vector<std::pair<int, int>>{{10, 2}, {3, 11}});

    CHECK(parse_word("p;p", 2).segments.size() == 1);  // p^2 = p
    CHECK_THROWS(parse_word("11;p", 3));
    CHECK_THROWS(parse_word("p;11", 3));
    CHECK_THROWS(parse_word("p;41;p", 3));  // index out of range
}

TEST_CASE("haar_s_closed") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(haar_s_closed(MultiIndex({1}, n), MultiIndex({1}, n), n) == Rat(1, n));
        CHECK(haar_s_closed(MultiIndex({1, 1}, n), MultiIndex({1, 2}, n), n) == 0);
        if (n >= 4)
            CHECK(haar_s_closed(MultiIndex({1, 2}, n), MultiIndex({3, 4}, n), n) ==
                  Rat(1, n * (n - 1)));
    }
    CHECK_THROWS_AS(haar_s_closed(MultiIndex({1}, 3), MultiIndex({1, 1}, 3), 3),
                    LengthMismatchError);
}

TEST_CASE("haar_o_closed") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(haar_o_closed(MultiIndex({1, 1, 1}, n), MultiIndex({1, 1, 1}, n), n) == 0);
        CHECK(haar_o_closed(MultiIndex({1, 1}, n), MultiIndex({2, 2}, n), n) == Rat(1, n));
        CHECK(haar_o_closed(MultiIndex({1, 2}, n), MultiIndex({1, 1}, n), n) == 0);
    }
}

TEST_CASE("haar_h_closed") {
    for (int n = 2; n <= 6; ++n) {
        MultiIndex i({1, 1, 2, 2}, n);
        CHECK(haar_h_closed(i, i, n) == Rat(1, n * (n - 1)));
        CHECK(haar_h_closed(i, MultiIndex({1, 1, 1, 1}, n), n) == 0);
        CHECK(haar_h_closed(MultiIndex({1, 1, 1}, n), MultiIndex({1, 1, 1}, n), n) == 0);
    }
}

TEST_CASE("haar_value") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(haar_value(CategoryId::s, parse_word("p", n)) == 1);
        CHECK(haar_value(CategoryId::s, parse_word("p;11;p", n)) == Rat(1, n));
        CHECK(haar_value(CategoryId::s, parse_word("p;11;p;11;p", n)) == Rat(1, n * n));
    }
    CHECK(haar_value(CategoryId::s, parse_word("p;11,22;p", 3)) == Rat(1, 6));
    // the b tag always takes the Weingarten route
    CHECK(haar_value(CategoryId::b, parse_word("p;11;p", 3), HaarRoute::weingarten) == Rat(1, 3));
    // closed and Weingarten routes agree
    for (int n = 2; n <= 4; ++n)
        CHECK(haar_value(CategoryId::s, parse_word("p;11,22;p", n)) ==
              haar_value(CategoryId::s, parse_word("p;11,22;p", n), HaarRoute::weingarten));
}

TEST_CASE("invariance_residual") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(invariance_residual(CategoryId::s, MultiIndex({1}, n), MultiIndex({1}, n), n) == 0);
        CHECK(invariance_residual(CategoryId::o, MultiIndex({1, 1}, n), MultiIndex({1, 1}, n), n) ==
              0);
    }
    CHECK(invariance_residual(CategoryId::h, MultiIndex({1, 1, 2, 2}, 3),
                              MultiIndex({1, 1, 2, 2}, 3), 3) == 0);
}

TEST_CASE("kernel class sums collapse to a delta") {
    // sum over {r : inf ker r = pi} of h_s(p u_{rj} p) = delta(pi, inf ker j)
    for (int k = 1; k <= 3; ++k) {
        for (int n = 2; n <= 5; ++n) {
            MultiIndexRange range(k, n);
            for (const auto& pi : enumerate_interval(k)) {
                if (pi.num_blocks() > n) continue;
                range.for_each([&](const std::vector<int>& jv) {
                    MultiIndex j(jv, n);
                    SetPartition target = inf_category(CategoryId::s, kernel(j));
                    Rat sum = 0;
                    range.for_each([&](const std::vector<int>& rv) {
                        MultiIndex r(rv, n);
                        if (inf_category(CategoryId::s, kernel(r)) == pi)
                            sum += haar_s_closed(r, j, n);
                    });
                    CHECK(sum == (pi == target ? 1 : 0));
                });
            }
        }
    }
}

TEST_CASE("positivity of h(a* a) on random words") {
    std::mt19937_64 rng(11);
    const int n = 4;
    for (int trial = 0; trial < 50; ++trial) {
        // a = sum of random words with random rational coefficients
        std::vector<GeneratorWord> words;
        std::vector<Rat> coeffs;
        for (int w = 0; w < 3; ++w) {
            int len = 1 + static_cast<int>(rng() % 3);
            std::vector<std::pair<int, int>> seg;
            for (int l = 0; l < len; ++l)
                seg.emplace_back(1 + static_cast<int>(rng() % n), 1 + static_cast<int>(rng() % n));
            words.emplace_back(n, std::vector<std::vector<std::pair<int, int>>>{seg});
            coeffs.emplace_back(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3));
        }
        Rat total = 0;
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = 0; b < words.size(); ++b) {
                // (p u_I p)* (p u_J p): reverse the first segment, keep the second
                auto rev = words[a].segments[0];
                std::reverse(rev.begin(), rev.end());
                GeneratorWord prod(n, {rev, words[b].segments[0]});
                total += coeffs[a] * coeffs[b] * haar_value(CategoryId::s, prod);
            }
        CHECK(total >= 0);
    }
}
