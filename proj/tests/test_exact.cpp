#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "beq/exact_matrix.hpp"
#include "beq/rational.hpp"

#include <random>

using namespace beq;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
    ExactMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[0].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

} // namespace

TEST_CASE("rational serialization") {
    CHECK(rat_to_string(Rat(3, 6)) == "1/2");
    CHECK(rat_to_string(Rat(-4)) == "-4");
    CHECK(rat_from_string("7/3") == Rat(7, 3));
    CHECK(rat_from_string("-5") == Rat(-5));
    CHECK_THROWS(rat_from_string("1/0"));
}

TEST_CASE("exact scalar quadratic extension") {
    ExactScalar a(Rat(2), Rat(3), 5);  // 2 + 3*sqrt(5)
    CHECK((a * a.conjugate()).as_rational() == Rat(4 - 45));
    CHECK((a + a.conjugate()).as_rational() == Rat(4));
    CHECK_THROWS_AS(a.as_rational(), RadicandMismatchError);
    CHECK_THROWS_AS(a + ExactScalar(Rat(0), Rat(1), 7), RadicandMismatchError);
    // sqrt(1) folds into the rational part
    CHECK(ExactScalar(Rat(1), Rat(2), 1) == ExactScalar(3));
    CHECK((ExactScalar::sqrt_of(3) * ExactScalar::sqrt_of(3)).as_rational() == 3);
    CHECK((a / a) == ExactScalar(1));
}

TEST_CASE("invert_matrix") {
    CHECK(invert_matrix(ExactMatrix::identity(2)) == ExactMatrix::identity(2));
    auto m = from_rows({{4, 2}, {2, 2}});
    auto inv = invert_matrix(m);
    CHECK(inv == from_rows({{Rat(1, 2), Rat(-1, 2)}, {Rat(-1, 2), 1}}));
    CHECK(m * inv == ExactMatrix::identity(2));
    CHECK_THROWS_AS(invert_matrix(from_rows({{1, 1}, {1, 1}})), SingularError);
}

TEST_CASE("invert random matrices up to 12x12") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    for (std::size_t dim = 1; dim <= 12; ++dim) {
        ExactMatrix m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = Rat(num(rng), den(rng));
        try {
            CHECK(invert_matrix(m) * m == ExactMatrix::identity(dim));
        } catch (const SingularError&) {
            // a random matrix may be singular; nothing to check then
        }
    }
}

TEST_CASE("nullspace_basis") {
    CHECK(nullspace_basis(ExactMatrix::identity(3)).empty());

    auto basis = nullspace_basis(from_rows({{1, -1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == basis[0][1]);
    CHECK(!basis[0][0].is_zero());

    // H - Id for the rank-1 projection with all entries 1/3
    ExactMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m.at(r, c) = Rat(1, 3) - (r == c ? Rat(1) : Rat(0));
    basis = nullspace_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == basis[0][1]);
    CHECK(basis[0][1] == basis[0][2]);
    CHECK(!basis[0][0].is_zero());
}

TEST_CASE("solve_linear") {
    std::vector<ExactScalar> rhs = {2, 3};
    auto x = solve_linear(ExactMatrix::identity(2), rhs);
    CHECK(x == rhs);

    auto m = from_rows({{4, 2}, {2, 2}});
    x = solve_linear(m, {2, 2});
    CHECK(x == std::vector<ExactScalar>{0, 1});
    CHECK(m.apply(x) == std::vector<ExactScalar>{2, 2});

    CHECK_THROWS_AS(solve_linear(from_rows({{1, 1}, {1, 1}}), {1, 0}), InconsistentError);
}
