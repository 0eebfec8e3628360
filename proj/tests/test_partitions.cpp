#include <doctest.h>

#include <map>

#include "froblab/groups.hpp"
#include "froblab/partitions.hpp"
#include "froblab/weights.hpp"

using namespace froblab;

namespace {

Partition hamming_partition(const Ring& R, int n) {
    const std::uint64_t universe = power_u64(static_cast<std::uint64_t>(R->size()), n);
    std::vector<int> labels(universe);
    for (std::uint64_t v = 0; v < universe; ++v)
        labels[v] = wt_hamming(*R, vec_unrank(*R, n, v));
    return Partition(std::move(labels));
}

Partition seeded_partition(std::uint64_t universe, int blocks, std::uint64_t seed) {
    std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 1;
    std::vector<int> labels(universe);
    for (std::uint64_t i = 0; i < universe; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        labels[i] = static_cast<int>(state % blocks);
    }
    return Partition(std::move(labels));
}

}  // namespace

TEST_CASE("partition normalization and refinement") {
    Partition P({5, 5, 7, 5, 9});
    CHECK(P.block_count() == 3);
    CHECK(P.labels() == std::vector<int>{0, 0, 1, 0, 2});
    CHECK(is_finer(Partition::singletons(5), P));
    CHECK(!is_finer(Partition::one_block(5), Partition::singletons(5)));
    CHECK_THROWS_AS(is_finer(Partition::singletons(4), P), SpecError);
}

TEST_CASE("Hamming partition of (Z_2)^2 equals the monomial orbit partition") {
    auto R = build_ring("zn:2");
    const Partition ham = hamming_partition(R, 2);
    const Partition orb = orbit_partition(mon_group_full(R, 2), OrbitSide::Right);
    CHECK(ham == orb);
    CHECK(is_finer(ham, orb));
    CHECK(is_finer(orb, ham));
}

TEST_CASE("group-level duals") {
    auto R = build_ring("zn:4");
    auto dec = AbelianDecomposition::of_ring_power(R, 1);
    SUBCASE("one block dualizes to trivial-vs-rest") {
        const auto res = dual_partition_group(Partition::one_block(4), dec);
        CHECK(res.dual.block_count() == 2);
        // The trivial character (rank 0) sums to |A|; everything else to 0.
        CHECK(res.dual.block_of(0) == 0);
        for (int c = 1; c < 4; ++c) CHECK(res.dual.block_of(c) == 1);
    }
    SUBCASE("singletons dualize to singletons") {
        const auto res = dual_partition_group(Partition::singletons(4), dec);
        CHECK(res.dual.block_count() == 4);
    }
    SUBCASE("Krawtchouk row of the trivial character lists block sizes") {
        const Partition P({0, 1, 1, 2});  // blocks {0},{1,2},{3}
        const auto res = dual_partition_group(P, dec);
        const auto& row = res.table.rows[res.dual.block_of(0)];
        REQUIRE(row.size() == 3);
        CHECK(row[0].integer_value() == 1);
        CHECK(row[1].integer_value() == 2);
        CHECK(row[2].integer_value() == 1);
    }
}

TEST_CASE("Hamming partitions are chi-self-dual") {
    for (const char* spec : {"zn:4", "gf:4"}) {
        auto R = build_ring(spec);
        for (int n = 1; n <= 2; ++n) {
            const Partition ham = hamming_partition(R, n);
            for (const auto& chi : all_generating_characters(R)) {
                CHECK(chi_dual(ham, chi, n, ActionSide::Left) == ham);
                CHECK(chi_dual(ham, chi, n, ActionSide::Right) == ham);
                CHECK(is_reflexive(ham, chi, n));
            }
        }
    }
}

TEST_CASE("singleton partition of R^n dualizes to singletons") {
    auto R = build_ring("zn:4");
    auto chi = *find_generating_character(R);
    const Partition s = Partition::singletons(16);
    CHECK(chi_dual(s, chi, 2, ActionSide::Left) == s);
}

TEST_CASE("reflexivity criterion is consistent on arbitrary partitions") {
    auto R = build_ring("zn:4");
    auto chi = *find_generating_character(R);
    // {0,1},{2,3} inside Z_4: the criterion and the bidual must agree (the
    // call aborts internally otherwise).
    const Partition halves({0, 0, 1, 1});
    (void)is_reflexive(halves, chi, 1);
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        (void)is_reflexive(seeded_partition(16, 3 + seed % 4, seed), chi, 2);
}

TEST_CASE("bidual identities") {
    auto R = build_ring("zn:4");
    auto chi = *find_generating_character(R);
    SUBCASE("Hamming partition") {
        CHECK(verify_bidual_identities(hamming_partition(R, 2), chi, 2).pass);
    }
    SUBCASE("singletons") {
        CHECK(verify_bidual_identities(Partition::singletons(16), chi, 2).pass);
    }
    SUBCASE("seeded random partitions") {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            const auto rep = verify_bidual_identities(seeded_partition(16, 4, seed), chi, 2);
            CHECK(rep.pass);
            CHECK(rep.primal_blocks <= rep.dual_blocks);
        }
    }
}

TEST_CASE("dual block counts can drop but never rise past the dual") {
    auto R = build_ring("zn:4");
    auto chi = *find_generating_character(R);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const Partition P = seeded_partition(16, 5, seed);
        const Partition left = chi_dual(P, chi, 2, ActionSide::Left);
        CHECK(P.block_count() <= left.block_count());
        const Partition bidual = chi_dual(left, chi, 2, ActionSide::Right);
        CHECK(is_finer(bidual, P));
    }
}

TEST_CASE("left and right duals can differ over a noncommutative ring") {
    auto R = build_ring("mat:2:(gf:2)");
    auto chi = *find_generating_character(R);
    // Partition of M_2(F_2) by principal left ideal; the sided asymmetry
    // shows up in its duals. A seeded random search is kept as fallback.
    auto left_ideal_partition = [&] {
        std::vector<int> labels(R->size());
        std::map<std::vector<char>, int> ids;
        for (int x = 0; x < R->size(); ++x) {
            std::vector<char> in(R->size(), 0);
            for (int r = 0; r < R->size(); ++r) in[R->mul(r, x)] = 1;
            auto [it, fresh] = ids.emplace(in, static_cast<int>(ids.size()));
            (void)fresh;
            labels[x] = it->second;
        }
        return Partition(std::move(labels));
    };
    bool found = false;
    const Partition P0 = left_ideal_partition();
    if (!(chi_dual(P0, chi, 1, ActionSide::Left) == chi_dual(P0, chi, 1, ActionSide::Right)))
        found = true;
    for (std::uint64_t seed = 1; seed <= 50 && !found; ++seed) {
        const Partition P = seeded_partition(16, 3 + seed % 5, seed);
        found = !(chi_dual(P, chi, 1, ActionSide::Left) == chi_dual(P, chi, 1, ActionSide::Right));
    }
    CHECK(found);
}
