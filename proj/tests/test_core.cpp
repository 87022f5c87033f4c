#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polymut/intlinalg.hpp"
#include "polymut/rational.hpp"

using namespace polymut;

TEST_CASE("rational parse and print round trips") {
    CHECK(show_rat(parse_rat("7")) == "7");
    CHECK(show_rat(parse_rat("-3/4")) == "-3/4");
    CHECK(show_rat(parse_rat("22/6")) == "11/3");   // normalized
    CHECK(show_rat(parse_rat("-22/6")) == "-11/3");
    CHECK(show_rat(parse_rat("0/5")) == "0");
    CHECK(show_rat(Rat(-7)) == "-7");

    // consecutive integers are coprime, so this stays as written; the size
    // defeats any machine-word shortcut
    std::string big = "123456789012345678901234567890/123456789012345678901234567891";
    CHECK(show_rat(parse_rat(big)) == big);

    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("5/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("/5"), std::invalid_argument);
}

TEST_CASE("floor and ceil") {
    CHECK(rat_floor(Rat(7) / 2) == 3);
    CHECK(rat_ceil(Rat(7) / 2) == 4);
    CHECK(rat_floor(Rat(-7) / 2) == -4);
    CHECK(rat_ceil(Rat(-7) / 2) == -3);
    CHECK(rat_floor(Rat(5)) == 5);
    CHECK(rat_ceil(Rat(5)) == 5);
    CHECK(is_integer(Rat(4) / 2));
    CHECK(!is_integer(Rat(1) / 2));
}

TEST_CASE("dot products") {
    CHECK(dot(IntVec{1, 2, 3}, IntVec{4, 5, 6}) == 32);
    CHECK(dot(RatVec{Rat(1) / 2, Rat(1) / 3}, RatVec{2, 3}) == 2);
    CHECK(dot(IntVec{2, -1}, RatVec{Rat(1) / 2, Rat(1) / 2}) == Rat(1) / 2);
    CHECK_THROWS_AS(dot(IntVec{1}, IntVec{1, 2}), std::invalid_argument);
}

TEST_CASE("row-vector matrix action") {
    IntMat m = {{1, 2, 3}, {4, 5, 6}};
    CHECK(mul_vec_mat(IntVec{1, 2}, m) == IntVec{9, 12, 15});
    CHECK(mul_vec_mat(RatVec{Rat(1) / 2, 0}, m) == RatVec{Rat(1) / 2, 1, Rat(3) / 2});
    CHECK(transpose(m) == IntMat{{1, 4}, {2, 5}, {3, 6}});
    CHECK(mul_mat(IntMat{{1, 1}, {0, 1}}, IntMat{{1, 0}, {1, 1}}) == IntMat{{2, 1}, {1, 1}});
    CHECK(identity_mat(2) == IntMat{{1, 0}, {0, 1}});
}

TEST_CASE("content and primitive part") {
    CHECK(content(IntVec{4, -6, 8}) == 2);
    CHECK(content(IntVec{0, 0}) == 0);
    auto [p, g] = primitive_part(IntVec{4, -6, 8});
    CHECK(p == IntVec{2, -3, 4});
    CHECK(g == 2);
    CHECK_THROWS_AS(primitive_part(IntVec{0, 0}), std::invalid_argument);
}

TEST_CASE("hermite normal form") {
    IntMat m = {{2, 4}, {1, 1}};
    HnfResult r = hnf(m);
    CHECK(r.rank == 2);
    CHECK(r.H == IntMat{{1, 1}, {0, 2}});
    CHECK(is_unimodular(r.U));
    CHECK(mul_mat(r.U, m) == r.H);

    // rank-deficient input: zero row sinks to the bottom
    HnfResult s = hnf(IntMat{{1, 2}, {2, 4}});
    CHECK(s.rank == 1);
    CHECK(s.H == IntMat{{1, 2}, {0, 0}});
}

TEST_CASE("determinants and unimodularity") {
    CHECK(det(IntMat{{3}}) == 3);
    CHECK(det(IntMat{{1, 2}, {3, 4}}) == -2);
    CHECK(det(IntMat{{2, 0, 1}, {0, 3, 0}, {1, 0, 1}}) == 3);
    CHECK(is_unimodular(IntMat{{1, 5}, {0, -1}}));
    CHECK(!is_unimodular(IntMat{{1, 2}, {3, 4}}));
    CHECK_THROWS_AS(is_unimodular(IntMat{{1, 2, 3}}), std::invalid_argument);
    CHECK(rat_det(RatMat{{Rat(1) / 2, 0}, {0, Rat(2) / 3}}) == Rat(1) / 3);
}

TEST_CASE("kernels are saturated") {
    IntMat m = {{1, 2}, {2, 4}};
    IntMat k = left_kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(content(k[0]) == 1);
    CHECK(mul_vec_mat(k[0], m) == IntVec{0, 0});

    // full-rank square matrix has trivial kernel
    CHECK(left_kernel(IntMat{{1, 0}, {0, 1}}).empty());

    // right kernel of a 2x3 rank-2 map: one primitive direction
    IntMat n = {{1, 0, 1}, {0, 1, 1}};
    IntMat rk = right_kernel(n);
    REQUIRE(rk.size() == 1);
    CHECK(content(rk[0]) == 1);
}

TEST_CASE("rational solving") {
    RatMat m = {{1, 2}, {0, 1}};
    auto x = solve_left(m, RatVec{3, 7});
    REQUIRE(x.has_value());
    CHECK(*x == RatVec{3, 1});
    CHECK(!solve_left(RatMat{{1, 0}, {2, 0}}, RatVec{0, 1}).has_value());
    CHECK(rat_rank(RatMat{{1, 2}, {2, 4}, {0, 1}}) == 2);

    auto inv = rat_inverse(RatMat{{1, 2}, {3, 4}});
    REQUIRE(inv.has_value());
    CHECK((*inv)[0] == RatVec{-2, 1});
    CHECK((*inv)[1] == RatVec{Rat(3) / 2, Rat(-1) / 2});
    CHECK(!rat_inverse(RatMat{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("row scaling keeps directions") {
    RatMat m = {{Rat(1) / 2, Rat(1) / 3}, {2, 4}};
    IntMat s = scale_rows_to_int(m);
    REQUIRE(s.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        // integral multiple of the original row
        Rat ratio = 0;
        for (size_t j = 0; j < 2; ++j)
            if (m[i][j] != 0) ratio = Rat(s[i][j]) / m[i][j];
        REQUIRE(ratio > 0);
        for (size_t j = 0; j < 2; ++j) CHECK(Rat(s[i][j]) == ratio * m[i][j]);
    }
}

TEST_CASE("basis completion") {
    IntMat b = {{2, 3}};
    IntMat full = complete_basis(b);
    REQUIRE(full.size() == 2);
    CHECK(full[0] == IntVec{2, 3});
    CHECK(is_unimodular(full));

    IntMat b2 = {{1, 0, 1}, {0, 1, 1}};
    IntMat full2 = complete_basis(b2);
    REQUIRE(full2.size() == 3);
    CHECK(full2[0] == b2[0]);
    CHECK(full2[1] == b2[1]);
    CHECK(is_unimodular(full2));
}
