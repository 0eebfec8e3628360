#include <doctest.h>

#include <set>

#include "froblab/codes.hpp"

using namespace froblab;

TEST_CASE("code closure") {
    SUBCASE("published four-word code over the quotient preset") {
        auto R = build_ring("f2xyq");
        auto C = Code::closure(R, 2, {{1, 2}, {2, 3}});
        REQUIRE(C->size() == 4);
        std::set<std::uint64_t> want;
        for (const Vec& v : {Vec{0, 0}, Vec{1, 2}, Vec{2, 3}, Vec{3, 1}})
            want.insert(vec_rank(*R, v));
        CHECK(std::vector<std::uint64_t>(want.begin(), want.end()) == C->ranks());
    }
    SUBCASE("zero generator and full space") {
        auto F3 = build_ring("gf:3");
        CHECK(Code::closure(F3, 2, {{0, 0}})->size() == 1);
        CHECK(Code::closure(F3, 2, {{1, 0}, {0, 1}})->size() == 9);
    }
    SUBCASE("budget cap") {
        auto F3 = build_ring("gf:3");
        CHECK_THROWS_AS(Code::closure(F3, 2, {{1, 0}, {0, 1}}, 4), BudgetError);
    }
}

TEST_CASE("linear map construction catches ill-defined assignments") {
    auto z4 = build_ring("zn:4");
    auto C = Code::closure(z4, 2, {{2, 0}});
    // 2*(2,0) = 0 but 2*(1,0) = (2,0) != 0, so (2,0) -> (1,0) is not linear.
    CHECK(!LinearMap::build(C, {{1, 0}}).has_value());
    auto ok = LinearMap::build(C, {{0, 2}});
    REQUIRE(ok.has_value());
    CHECK(ok->image_of({2, 0}) == Vec{0, 2});
    CHECK(ok->injective());
}

TEST_CASE("local and global checks") {
    auto z4 = build_ring("zn:4");
    const auto mon = mon_group_full(z4, 2);
    auto C = Code::closure(z4, 2, {{1, 0}, {0, 1}});
    SUBCASE("identity is local and global for any group containing I") {
        auto f = restrict_matrix(C, RingMatrix::identity(z4, 2));
        CHECK(is_local_u_map(f, mon).local);
        auto g = is_global_u_map(f, mon);
        REQUIRE(g.has_value());
        CHECK(*g == RingMatrix::identity(z4, 2));
    }
    SUBCASE("global implies local; restriction of a group element") {
        const RingMatrix M(z4, 2, 2, {0, 3, 1, 0});
        REQUIRE(mon.contains(M));
        auto f = restrict_matrix(C, M);
        CHECK(is_global_u_map(f, mon).has_value());
        CHECK(is_local_u_map(f, mon).local);
        // Inverse of a local map is local.
        CHECK(is_local_u_map(f.inverse(), mon).local);
    }
    SUBCASE("zero map on a nonzero code preserves nothing") {
        auto f = LinearMap::build(C, {{0, 0}, {0, 0}});
        REQUIRE(f.has_value());
        const auto w = parse_weight_spec("hamming", z4, 2);
        const auto chk = preserves_weight(*f, w);
        CHECK(!chk.preserved);
        CHECK(chk.violator.has_value());
    }
}

TEST_CASE("extension search self-consistency") {
    auto z4 = build_ring("zn:4");
    const auto mon = mon_group_full(z4, 2);
    const auto w = parse_weight_spec("hamming", z4, 2);
    auto C = Code::closure(z4, 2, {{1, 0}, {0, 1}});
    const RingMatrix M(z4, 2, 2, {0, 1, 3, 0});
    auto f = restrict_matrix(C, M);
    SUBCASE("the restricted matrix reappears among extensions") {
        const auto exts = extension_search(f, w);
        CHECK(std::find(exts.begin(), exts.end(), M) != exts.end());
        // Hamming isometries of the full space are exactly the monomial maps.
        CHECK(exts.size() == extension_search_group(f, mon).size());
    }
    SUBCASE("existence routes agree") {
        CHECK(extension_exists(f, w).has_value());
        CHECK(find_weight_extension(f, w).has_value());
    }
}

TEST_CASE("row-first and column-first searches agree on existence") {
    std::uint64_t state = 424242;
    auto rnd = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 30; ++trial) {
        const char* specs[] = {"zn:2", "zn:3", "zn:4", "gf:4"};
        auto R = build_ring(specs[rnd() % 4]);
        const int n = 2;
        const std::uint64_t universe = power_u64(static_cast<std::uint64_t>(R->size()), n);
        auto C = Code::closure(R, n, {vec_unrank(*R, n, rnd() % universe)});
        const auto w = parse_weight_spec(rnd() % 2 ? "hamming" : "rt", R, n);
        // Candidate image of matching weight keeps the instance nontrivial.
        const auto& g = C->generators()[0];
        Vec img = vec_unrank(*R, n, rnd() % universe);
        if (!(w.fn(g) == w.fn(img))) img = g;
        auto f = LinearMap::build(C, {img});
        if (!f) continue;
        CHECK(extension_exists(*f, w).has_value() == find_weight_extension(*f, w).has_value());
    }
}

TEST_CASE("code enumeration deduplicates") {
    auto z4 = build_ring("zn:4");
    const auto codes = enumerate_codes(z4, 2, ScanLimits{});
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& c : codes) distinct.insert(c->ranks());
    CHECK(distinct.size() == codes.size());
    CHECK(codes.size() == 15);  // submodules of (Z_4)^2
}

TEST_CASE("local-global scans") {
    SUBCASE("lower-triangular group over Z_4 passes") {
        auto z4 = build_ring("zn:4");
        const auto res = local_global_scan(z4, 2, lt_group(z4, 2), ScanLimits{});
        CHECK(res.holds);
        CHECK(res.complete);
        CHECK(res.local_maps > 0);
    }
    SUBCASE("the published triangular group over F_3 fails") {
        auto f3 = build_ring("gf:3");
        std::vector<RingMatrix> els;
        for (int a = 1; a < 3; ++a)
            for (int b = 0; b < 3; ++b) els.push_back(RingMatrix(f3, 2, 2, {a, b, 0, f3->inv(a)}));
        const auto res = local_global_scan(
            f3, 2, MatrixGroup::from_elements("tri", f3, 2, els), ScanLimits{});
        CHECK(!res.holds);
        REQUIRE(res.counterexample.has_value());
        CHECK(res.counterexample->code_size > 1);
    }
}

TEST_CASE("isometry enumeration between codes") {
    // Over a field all Hamming automorphisms of F_3^2 are monomial: 2! * 2^2.
    auto f3 = build_ring("gf:3");
    auto C = Code::closure(f3, 2, {{1, 0}, {0, 1}});
    const auto w = parse_weight_spec("hamming", f3, 2);
    const auto isos = enumerate_weight_isometries(C, C, w);
    CHECK(isos.size() == 8);
    for (const auto& f : isos) CHECK(is_global_u_map(f, mon_group_full(f3, 2)).has_value());
}

TEST_CASE("hierarchical dichotomy carries over to Z_4 on sampled maps") {
    auto z4 = build_ring("zn:4");
    SUBCASE("hierarchical poset: sampled isometries extend") {
        const Poset H = Poset::hierarchical({2, 2});
        const auto w = parse_weight_spec("poset:" + H.to_text(), z4, 4);
        std::uint64_t state = 777;
        auto rnd = [&state]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        int sampled = 0;
        for (int trial = 0; trial < 4; ++trial) {
            auto C = Code::closure(z4, 4, {vec_unrank(*z4, 4, 1 + rnd() % 255)});
            const auto isos = weight_preserving_maps_into(C, w);
            for (std::size_t i = 0; i < isos.size() && sampled < 12; i += 1 + isos.size() / 3) {
                ++sampled;
                CHECK(find_weight_extension(isos[i], w).has_value());
            }
        }
        CHECK(sampled > 0);
    }
    SUBCASE("non-hierarchical poset: the constructed isometry does not extend") {
        const Poset P = Poset::disjoint_chains(2, 2);
        const auto w = parse_weight_spec("poset:" + P.to_text(), z4, 4);
        const auto ce = nonhier_counterexample(P, z4);
        auto f = LinearMap::build(Code::closure(z4, 4, {ce.e_hat}), {ce.e_beta});
        REQUIRE(f.has_value());
        CHECK(preserves_weight(*f, w).preserved);
        CHECK(!find_weight_extension(*f, w).has_value());
    }
}

TEST_CASE("unit-restricted triangular and conjugate groups keep local-global") {
    auto z4 = build_ring("zn:4");
    SUBCASE("LT with trivial diagonal subgroup") {
        const auto res = local_global_scan(z4, 2, lt_group_u(z4, 2, {z4->one()}), ScanLimits{});
        CHECK(res.holds);
        CHECK(res.complete);
    }
    SUBCASE("conjugate of a passing group") {
        const auto U = conjugate_group(mon_group_full(z4, 2), RingMatrix(z4, 2, 2, {1, 1, 0, 1}));
        const auto res = local_global_scan(z4, 2, U, ScanLimits{});
        CHECK(res.holds);
        CHECK(res.complete);
    }
}

TEST_CASE("scan counterexamples carry their local evidence") {
    auto f3 = build_ring("gf:3");
    std::vector<RingMatrix> els;
    for (int a = 1; a < 3; ++a)
        for (int b = 0; b < 3; ++b) els.push_back(RingMatrix(f3, 2, 2, {a, b, 0, f3->inv(a)}));
    const auto U = MatrixGroup::from_elements("tri", f3, 2, els);
    const auto res = local_global_scan(f3, 2, U, ScanLimits{});
    REQUIRE(!res.holds);
    REQUIRE(res.counterexample.has_value());
    const auto& ce = *res.counterexample;
    CHECK(ce.searched_group_order == U.order());
    CHECK(ce.local_witnesses.size() == ce.code_size);
    // Re-validate the witnesses against the rebuilt map.
    auto C = Code::closure(f3, 2, ce.code_generators);
    auto f = LinearMap::build(C, ce.images);
    REQUIRE(f.has_value());
    for (std::size_t i = 0; i < C->size(); ++i) {
        CHECK(U.contains(ce.local_witnesses[i]));
        CHECK(mul_row_matrix(*f3, C->elements()[i], ce.local_witnesses[i]) == f->image_at(i));
    }
    CHECK(!is_global_u_map(*f, U).has_value());
}

TEST_CASE("the full linear group over the quotient preset fails local-global") {
    auto R = build_ring("f2xyq");
    const auto res = local_global_scan(R, 2, gl_group(R, 2), ScanLimits{2, 8});
    CHECK(!res.holds);
    REQUIRE(res.counterexample.has_value());
    CHECK(res.counterexample->code_size == 4);
}
