#include <doctest.h>

#include <algorithm>
#include <set>

#include "froblab/characters.hpp"

using namespace froblab;

TEST_CASE("additive decompositions") {
    SUBCASE("Z_4 is cyclic") {
        auto dec = AbelianDecomposition::of_ring_power(build_ring("zn:4"), 1);
        CHECK(dec->orders() == std::vector<int>{4});
        CHECK(dec->group_size() == 4);
    }
    SUBCASE("the quotient preset is elementary abelian of order 8") {
        auto dec = AbelianDecomposition::of_ring_power(build_ring("f2xyq"), 1);
        CHECK(dec->orders() == std::vector<int>{2, 2, 2});
    }
    SUBCASE("(F_16)^2 has eight factors of order 2") {
        auto dec = AbelianDecomposition::of_ring_power(build_ring("gf:2^4:[1,1,0,0,1]"), 2);
        CHECK(dec->orders() == std::vector<int>(8, 2));
        CHECK(dec->group_size() == 256);
    }
    SUBCASE("Z_6 and Z_2 x Z_4 invariant factors") {
        CHECK(AbelianDecomposition::of_ring_power(build_ring("prod:(zn:2,zn:3)"), 1)->orders() ==
              std::vector<int>{6});
        CHECK(AbelianDecomposition::of_ring_power(build_ring("prod:(zn:2,zn:4)"), 1)->orders() ==
              std::vector<int>{2, 4});
    }
}

TEST_CASE("character enumeration") {
    auto dec = AbelianDecomposition::of_ring_power(build_ring("f2xyq"), 1);
    const auto chis = all_characters(dec);
    CHECK(chis.size() == 8);
    // Pairwise distinct as functions.
    for (std::size_t i = 0; i < chis.size(); ++i)
        for (std::size_t j = i + 1; j < chis.size(); ++j) {
            bool differ = false;
            for (int a = 0; a < 8 && !differ; ++a)
                differ = chis[i].exponent_at_element(a) != chis[j].exponent_at_element(a);
            CHECK(differ);
        }
}

TEST_CASE("character orthogonality") {
    for (const char* spec : {"zn:4", "f2xyq", "prod:(zn:2,zn:3)"}) {
        auto R = build_ring(spec);
        auto dec = AbelianDecomposition::of_ring_power(R, 1);
        const auto chis = all_characters(dec);
        for (int a = 0; a < R->size(); ++a) {
            std::vector<int> exps;
            for (const auto& chi : chis) exps.push_back(chi.exponent_at_element(a));
            const auto s = cyclo_sum(dec->exponent(), exps);
            if (a == R->zero())
                CHECK(s.integer_value() == R->size());
            else
                CHECK(s.is_zero());
        }
    }
}

TEST_CASE("module action on characters") {
    auto R = build_ring("zn:4");
    auto dec = AbelianDecomposition::of_ring_power(R, 1);
    const auto chis = all_characters(dec);
    const Character& chi = chis[1];  // a -> i^a
    SUBCASE("published small values") {
        CHECK(act(R->one(), chi, ActionSide::Left) == chi);
        CHECK(act(R->zero(), chi, ActionSide::Left).is_trivial());
        // 2*chi is a -> (-1)^a.
        const Character two_chi = act(2, chi, ActionSide::Left);
        CHECK(two_chi.exponent_at_element(1) == 2);  // zeta_4^2 = -1
    }
    SUBCASE("action laws, exhaustively") {
        for (const char* spec : {"zn:4", "f2xyq"}) {
            auto S = build_ring(spec);
            auto d = AbelianDecomposition::of_ring_power(S, 1);
            for (const auto& c : all_characters(d))
                for (int r = 0; r < S->size(); ++r)
                    for (int s = 0; s < S->size(); ++s) {
                        CHECK(act(S->mul(r, s), c, ActionSide::Left) ==
                              act(r, act(s, c, ActionSide::Left), ActionSide::Left));
                        CHECK(act(s, act(r, c, ActionSide::Left), ActionSide::Right) ==
                              act(r, act(s, c, ActionSide::Right), ActionSide::Left));
                    }
        }
    }
}

TEST_CASE("generating characters and the Frobenius property") {
    SUBCASE("Z_4 canonical witness") {
        auto chi = find_generating_character(build_ring("zn:4"));
        REQUIRE(chi.has_value());
        CHECK(chi->exponents() == std::vector<int>{1});
    }
    SUBCASE("the quotient preset has none") {
        CHECK(!find_generating_character(build_ring("f2xyq")).has_value());
        CHECK(!is_frobenius(build_ring("f2xyq")));
    }
    SUBCASE("stock Frobenius examples") {
        for (const char* spec :
             {"zn:2", "zn:3", "zn:4", "zn:6", "zn:8", "gf:4", "gf:16", "mat:2:(gf:2)",
              "prod:(zn:2,zn:3)"})
            CHECK(is_frobenius(build_ring(spec)));
    }
    SUBCASE("kernel of a generating character contains no one-sided ideal") {
        auto R = build_ring("mat:2:(gf:2)");
        auto chi = find_generating_character(R);
        REQUIRE(chi.has_value());
        for (int a = 0; a < R->size(); ++a) {
            if (a == R->zero() || chi->exponent_at_element(a) != 0) continue;
            bool left_in = true, right_in = true;
            for (int r = 0; r < R->size(); ++r) {
                if (chi->exponent_at_element(R->mul(r, a)) != 0) left_in = false;
                if (chi->exponent_at_element(R->mul(a, r)) != 0) right_in = false;
            }
            CHECK(!left_in);
            CHECK(!right_in);
        }
    }
}

TEST_CASE("alpha transports") {
    auto R = build_ring("zn:4");
    auto chi = *find_generating_character(R);
    SUBCASE("x = 0 gives the trivial character; x = 1 gives chi back") {
        auto dec1 = AbelianDecomposition::of_ring_power(R, 1);
        CHECK(alpha(chi, Vec{0}, ActionSide::Left, dec1).is_trivial());
        CHECK(alpha(chi, Vec{1}, ActionSide::Left, dec1) == chi);
    }
    SUBCASE("bijective on R^2 and left-linear") {
        auto dec2 = AbelianDecomposition::of_ring_power(R, 2);
        std::set<std::vector<int>> seen;
        for (std::uint64_t v = 0; v < 16; ++v) {
            const Vec x = vec_unrank(*R, 2, v);
            seen.insert(alpha(chi, x, ActionSide::Left, dec2).exponents());
        }
        CHECK(seen.size() == 16);
        for (std::uint64_t v = 0; v < 16; ++v) {
            const Vec x = vec_unrank(*R, 2, v);
            for (int r = 0; r < 4; ++r) {
                const Vec rx = scale_vec(*R, r, x);
                CHECK(alpha(chi, rx, ActionSide::Left, dec2) ==
                      act(r, alpha(chi, x, ActionSide::Left, dec2), ActionSide::Left));
            }
        }
    }
    SUBCASE("rejects non-generating characters") {
        auto dec1 = AbelianDecomposition::of_ring_power(R, 1);
        const Character trivial(dec1, {0});
        CHECK_THROWS_AS(alpha(trivial, Vec{1}, ActionSide::Left, dec1), SpecError);
    }
}

TEST_CASE("cyclotomic sums") {
    CHECK(cyclo_sum(3, std::vector<int>{0, 1, 2}).is_zero());
    CHECK(cyclo_sum(4, std::vector<int>{0}).integer_value() == 1);
    CHECK(cyclo_sum(4, std::vector<int>{1, 3}).is_zero());
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("equal pointwise character sums force equal multisets") {
    auto R = build_ring("zn:4");
    auto dec = AbelianDecomposition::of_ring_power(R, 1);
    const auto chis = all_characters(dec);
    auto pointwise = [&](const std::vector<int>& multiset) {
        std::vector<CyclotomicSum> sums;
        for (int a = 0; a < R->size(); ++a) {
            std::vector<int> exps;
            for (int c : multiset) exps.push_back(chis[c].exponent_at_element(a));
            sums.push_back(cyclo_sum(dec->exponent(), exps));
        }
        return sums;
    };
    std::uint64_t state = 12345;
    auto rnd = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> a, b;
        for (int i = 0; i < 3; ++i) {
            a.push_back(static_cast<int>(rnd() % chis.size()));
            b.push_back(static_cast<int>(rnd() % chis.size()));
        }
        std::vector<int> sa = a, sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        CHECK((pointwise(a) == pointwise(b)) == (sa == sb));
    }
}

TEST_CASE("the two characters of Z_2") {
    auto dec = AbelianDecomposition::of_ring_power(build_ring("zn:2"), 1);
    const auto chis = all_characters(dec);
    REQUIRE(chis.size() == 2);
    CHECK(chis[0].is_trivial());
    CHECK(chis[1].exponent_at_element(1) == 1);  // zeta_2^1 = -1
}
