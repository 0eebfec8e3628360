#include <doctest.h>

#include "froblab/matrix.hpp"

using namespace froblab;

TEST_CASE("matrix arithmetic") {
    auto R = build_ring("zn:4");
    RingMatrix A(R, 2, 2, {1, 2, 0, 3});
    RingMatrix B(R, 2, 2, {2, 1, 1, 0});
    CHECK((A * B).entries() == std::vector<int>{0, 1, 3, 0});
    CHECK((A + B).entries() == std::vector<int>{3, 3, 1, 3});
    CHECK(A.transpose().entries() == std::vector<int>{1, 0, 2, 3});
    CHECK(mul_row_matrix(*R, Vec{1, 1}, A) == Vec{1, 1});
    CHECK(mul_matrix_col(*R, A, Vec{1, 1}) == Vec{3, 3});
    CHECK(dot(*R, Vec{1, 2}, Vec{2, 3}) == 0);  // 2 + 6 mod 4
}

TEST_CASE("rank and unrank agree with lexicographic order") {
    auto R = build_ring("zn:3");
    Vec prev;
    for (std::uint64_t r = 0; r < 27; ++r) {
        const Vec v = vec_unrank(*R, 3, r);
        CHECK(vec_rank(*R, v) == r);
        if (!prev.empty()) CHECK(std::lexicographical_compare(prev.begin(), prev.end(), v.begin(), v.end()));
        prev = v;
    }
}

TEST_CASE("right inverses are two-sided") {
    auto R = build_ring("zn:4");
    RingMatrix A(R, 2, 2, {1, 2, 0, 3});
    auto Ainv = right_inverse(A);
    REQUIRE(Ainv.has_value());
    CHECK(A * *Ainv == RingMatrix::identity(R, 2));
    CHECK(*Ainv * A == RingMatrix::identity(R, 2));
    CHECK(!right_inverse(RingMatrix(R, 2, 2, {2, 0, 0, 1})).has_value());
}

TEST_CASE("GL enumeration") {
    SUBCASE("|GL(2,F_2)| via an independent pair search") {
        auto F2 = build_ring("gf:2");
        const auto gl = enumerate_gl(F2, 2);
        // Oracle: scan all pairs (A,B) for AB = BA = I.
        int count = 0;
        for (int a = 0; a < 16; ++a) {
            RingMatrix A(F2, 2, 2,
                         {(a >> 3) & 1, (a >> 2) & 1, (a >> 1) & 1, a & 1});
            bool invertible = false;
            for (int b = 0; b < 16 && !invertible; ++b) {
                RingMatrix B(F2, 2, 2,
                             {(b >> 3) & 1, (b >> 2) & 1, (b >> 1) & 1, b & 1});
                invertible = A * B == RingMatrix::identity(F2, 2) &&
                             B * A == RingMatrix::identity(F2, 2);
            }
            if (invertible) ++count;
        }
        CHECK(count == 6);
        CHECK(gl.size() == 6);
    }
    SUBCASE("GL(1,R) matches the unit group") {
        for (const char* spec : {"zn:4", "f2xyq", "gf:4"}) {
            auto R = build_ring(spec);
            const auto gl1 = enumerate_gl(R, 1);
            const auto us = units(*R);
            REQUIRE(gl1.size() == us.size());
            for (std::size_t i = 0; i < us.size(); ++i) CHECK(gl1[i].at(0, 0) == us[i]);
        }
    }
    SUBCASE("budget guard") {
        auto R = build_ring("zn:4");
        CHECK_THROWS_AS(enumerate_gl(R, 4), BudgetError);  // 4^16 candidates
    }
}

TEST_CASE("field rank") {
    auto F2 = build_ring("gf:2");
    CHECK(field_rank(RingMatrix(F2, 2, 3)) == 0);
    CHECK(field_rank(RingMatrix(F2, 2, 3, {1, 0, 0, 0, 0, 0})) == 1);
    CHECK(field_rank(RingMatrix(F2, 2, 3, {1, 0, 1, 0, 1, 1})) == 2);
    CHECK_THROWS_AS(field_rank(RingMatrix(build_ring("zn:4"), 2, 2)), SpecError);
}
