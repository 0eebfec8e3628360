#include "froblab/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "froblab/codes.hpp"
#include "froblab/groups.hpp"
#include "froblab/weights.hpp"

namespace froblab {

namespace {

using nlohmann::ordered_json;

ordered_json vec_json(const Vec& v) { return ordered_json(v); }

ordered_json mat_json(const RingMatrix& M) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < M.rows(); ++i) rows.push_back(M.row(i));
    return rows;
}

std::string vec_name(const FiniteRing& R, const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += R.element_name(v[i]) + (i + 1 < v.size() ? "," : "");
    return s + ")";
}

struct Ctx {
    ScenarioReport rep;
    std::vector<std::string> failures;
    void check(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

// ----------------------------------------------------------- scenarios ----

void scenario_e_f3(Ctx& c) {
    auto F3 = build_ring("gf:3");
    std::vector<RingMatrix> els;
    for (int a = 1; a < 3; ++a)
        for (int b = 0; b < 3; ++b) els.push_back(RingMatrix(F3, 2, 2, {a, b, 0, F3->inv(a)}));
    auto U = MatrixGroup::from_elements("triangular ac=1", F3, 2, els);
    c.check(U.order() == 6, "group order is not 6");

    auto C = Code::closure(F3, 2, {{1, 0}, {0, 1}});
    auto f = restrict_matrix(C, RingMatrix(F3, 2, 2, {2, 1, 0, 1}));
    const auto lc = is_local_u_map(f, U);
    c.check(lc.local, "map is not a local U-map");
    const auto global = is_global_u_map(f, U);
    c.check(!global.has_value(), "map is unexpectedly a global U-map");

    // The four published per-vector witnesses.
    const std::vector<std::pair<Vec, RingMatrix>> listed = {
        {{0, 1}, RingMatrix(F3, 2, 2, {1, 0, 0, 1})},
        {{1, 0}, RingMatrix(F3, 2, 2, {2, 1, 0, 2})},
        {{1, 1}, RingMatrix(F3, 2, 2, {2, 0, 0, 2})},
        {{1, 2}, RingMatrix(F3, 2, 2, {2, 2, 0, 2})},
    };
    for (const auto& [x, M] : listed) {
        c.check(U.contains(M), "listed witness matrix is not in U");
        c.check(mul_row_matrix(*F3, x, M) == f.image_of(x),
                "listed witness fails for " + vec_name(*F3, x));
    }
    c.rep.counts["group_order"] = U.order();
    c.rep.counts["code_size"] = C->size();
    if (lc.local) {
        ordered_json ws = ordered_json::array();
        for (std::size_t i = 0; i < C->size(); ++i)
            ws.push_back({{"x", vec_json(C->elements()[i])}, {"M", mat_json(lc.witnesses[i])}});
        c.rep.witnesses["local_witnesses"] = ws;
    }
    c.rep.witnesses["verdict"] = "local-not-global";
}

void scenario_e_gl_nonfrob(Ctx& c) {
    auto R = build_ring("f2xyq");
    c.check(!is_frobenius(R), "ring is unexpectedly Frobenius");
    // x=1, y=2, x+y=3 on the fixed element order.
    auto C = Code::closure(R, 2, {{1, 2}, {2, 3}});
    const std::vector<Vec> expected = {{0, 0}, {1, 2}, {2, 3}, {3, 1}};
    std::set<std::uint64_t> want;
    for (const auto& v : expected) want.insert(vec_rank(*R, v));
    c.check(std::vector<std::uint64_t>(want.begin(), want.end()) == C->ranks(),
            "code does not consist of the four published words");

    auto f = LinearMap::build(C, {{1, 3}, {3, 2}});
    c.check(f.has_value(), "published images do not define a linear map");
    if (!f) return;
    c.check(f->image_of({3, 1}) == Vec{2, 1}, "third codeword image mismatch");

    // Published per-word witnesses.
    const std::vector<std::pair<Vec, RingMatrix>> listed = {
        {{1, 2}, RingMatrix(R, 2, 2, {4, 4, 0, 4})},
        {{2, 3}, RingMatrix(R, 2, 2, {0, 4, 4, 0})},
        {{3, 1}, RingMatrix(R, 2, 2, {4, 0, 4, 4})},
    };
    auto GL = gl_group(R, 2);
    c.check(GL.order() == 1536, "|GL(2,R)| is not 1536");
    for (const auto& [x, M] : listed) {
        c.check(GL.contains(M), "listed witness is not invertible");
        c.check(mul_row_matrix(*R, x, M) == f->image_of(x),
                "listed witness fails for " + vec_name(*R, x));
    }
    const auto lc = is_local_u_map(*f, GL);
    c.check(lc.local, "map is not a local GL-map");
    c.check(extension_search_group(*f, GL).empty(), "map has a global GL witness");

    // Codewords annihilate every matrix with nilpotent entries.
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int d = 0; d < 4; ++d)
                for (int e = 0; e < 4; ++e) {
                    const RingMatrix A(R, 2, 2, {a, b, d, e});
                    for (const auto& v : C->elements())
                        c.check(mul_row_matrix(*R, v, A) == zero_vec(*R, 2),
                                "nilpotent-entry matrix does not annihilate the code");
                }

    // No matrix at all reproduces f on the code: some column system is
    // unsolvable.
    const auto sets = column_solution_sets(*f);
    bool some_empty = false;
    ordered_json sizes = ordered_json::array();
    for (const auto& s : sets) {
        sizes.push_back(s.size());
        if (s.empty()) some_empty = true;
    }
    c.check(some_empty, "a linear extension matrix exists");
    c.rep.counts["gl_order"] = GL.order();
    c.rep.counts["column_solution_counts"] = sizes;
    c.rep.witnesses["verdict"] = "local-not-global; no linear extension";
}

void scenario_e_nonfrob_hamming(Ctx& c) {
    auto R = build_ring("f2xyq");
    auto C = Code::closure(R, 1, {{1}});  // {0, x}
    c.check(C->size() == 2, "code <x> does not have two elements");
    auto f = LinearMap::build(C, {{2}});  // x -> y
    c.check(f.has_value(), "x -> y is not linear");
    if (!f) return;
    auto w = parse_weight_spec("hamming", R, 1);
    c.check(preserves_weight(*f, w).preserved, "map does not preserve Hamming weight");
    auto U = mon_group_full(R, 1);
    const auto lc = is_local_u_map(*f, U);
    c.check(!lc.local, "map is unexpectedly a local unit map");
    if (lc.failing) c.rep.witnesses["failing_word"] = vec_json(*lc.failing);
    c.rep.counts["units"] = U.order();
    c.rep.witnesses["verdict"] = "hamming-preserving but not even locally monomial";
}

void scenario_e_rank_matrix(Ctx& c) {
    auto F2 = build_ring("gf:2");
    // 2x3 matrices with zero last column, listed row-major in F_2^6.
    auto C = Code::closure(F2, 6, {{1, 0, 0, 0, 0, 0},
                                   {0, 1, 0, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 0},
                                   {0, 0, 0, 0, 1, 0}});
    c.check(C->size() == 16, "code size is not 16");
    auto f = LinearMap::build(C, {{1, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 1, 0, 0},
                                  {0, 1, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 1, 0}});
    c.check(f.has_value(), "transpose map is not linear");
    if (!f) return;
    auto w = parse_weight_spec("ranklist:[2,3]", F2, 6);
    c.check(preserves_weight(*f, w).preserved, "map does not preserve the rank weight");
    const auto exts = extension_search(*f, w);
    c.check(exts.empty(), "a rank-preserving extension exists");
    const auto sets = column_solution_sets(*f);
    std::uint64_t combos = 1;
    for (const auto& s : sets) combos *= s.size();
    c.rep.counts["column_combinations"] = combos;
    c.rep.counts["extensions"] = exts.size();
    c.rep.witnesses["verdict"] = "rank-preserving, no invertible rank-preserving extension";
}

void scenario_e_rank_field(Ctx& c) {
    auto F16 = build_ring("gf:2^4:[1,1,0,0,1]");
    const int w_ = 2;            // index of the primitive element
    const int w5 = F16->mul(w_, F16->mul(w_, F16->mul(w_, F16->mul(w_, w_))));
    c.check(w5 == 6, "w^5 index mismatch");
    auto C = Code::closure(F16, 2, {{1, w_}});
    c.check(C->size() == 16, "code size is not 16");
    auto f = LinearMap::build(C, {{1, w5}});
    c.check(f.has_value(), "a(1,w) -> a(1,w^5) is not linear");
    if (!f) return;
    auto w = rank_ext_weight_spec(2, 4, F16);
    c.check(preserves_weight(*f, w).preserved, "map does not preserve the q-rank weight");
    const auto exts = extension_search(*f, w);
    c.check(exts.empty(), "a q-rank-preserving extension exists");
    c.rep.counts["extensions"] = exts.size();
    c.rep.witnesses["verdict"] = "rank-preserving, no linear rank-preserving extension";
}

void scenario_e_nrt(Ctx& c) {
    auto F2 = build_ring("gf:2");
    auto C = Code::closure(F2, 4, {{1, 0, 1, 0}});
    auto f = LinearMap::build(C, {{0, 0, 0, 1}});
    c.check(f.has_value(), "map is not linear");
    if (!f) return;
    auto w = parse_weight_spec("nrt:[2,2]", F2, 4);
    const Vec a{1, 0, 1, 0}, b{0, 0, 0, 1};
    c.check(w.fn(a) == WeightValue::integer(2), "weight of (10,10) is not 2");
    c.check(w.fn(b) == WeightValue::integer(2), "weight of (00,01) is not 2");
    c.check(preserves_weight(*f, w).preserved, "map is not an isometry");
    const auto exts = extension_search(*f, w);
    c.check(exts.empty(), "an isometric extension exists");
    c.rep.counts["extensions"] = exts.size();
    c.rep.witnesses["verdict"] = "isometry with no isometric extension";
}

void scenario_e_rt_symm(Ctx& c) {
    auto F2 = build_ring("gf:2");
    auto C1 = Code::closure(F2, 8, {{1, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 1}});
    auto C2 = Code::closure(F2, 8, {{0, 1, 0, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 1}});
    auto f = LinearMap::build(C1, C2->generators());
    c.check(f.has_value(), "row correspondence is not linear");
    if (!f) return;
    auto w = parse_weight_spec("profile:(4,4;rt;symm)", F2, 8);
    c.check(preserves_weight(*f, w).preserved, "map does not preserve the symmetrized profile");

    // Block-monomial candidates with invertible lower-triangular blocks.
    const auto LT4 = lt_group(F2, 4).elements();
    std::vector<RingMatrix> blockmon;
    for (int swap = 0; swap < 2; ++swap)
        for (const auto& A : LT4)
            for (const auto& B : LT4) {
                RingMatrix M(F2, 8, 8);
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) {
                        if (!swap) {
                            M.set(i, j, A.at(i, j));
                            M.set(4 + i, 4 + j, B.at(i, j));
                        } else {
                            M.set(i, 4 + j, A.at(i, j));
                            M.set(4 + i, j, B.at(i, j));
                        }
                    }
                blockmon.push_back(std::move(M));
            }
    c.check(blockmon.size() == 8192, "block-monomial family size is not 8192");
    bool local = true;
    for (std::size_t i = 0; i < C1->size() && local; ++i) {
        bool found = false;
        for (const auto& M : blockmon)
            if (mul_row_matrix(*F2, C1->elements()[i], M) == f->image_at(i)) {
                found = true;
                break;
            }
        local = found;
    }
    c.check(local, "map is not locally block-monomial");
    bool group_ext = false;
    for (const auto& M : blockmon) {
        bool ok = true;
        for (std::size_t i = 0; i < C1->generators().size() && ok; ++i)
            ok = mul_row_matrix(*F2, C1->generators()[i], M) == f->generator_images()[i];
        if (ok) group_ext = true;
    }
    c.check(!group_ext, "a block-monomial extension exists");
    const auto dfs = find_weight_extension(*f, w);
    c.check(!dfs.has_value(), "a profile-preserving extension exists");
    c.rep.counts["block_monomial_candidates"] = blockmon.size();
    c.rep.witnesses["verdict"] = "local block-monomial map with no weight-preserving extension";
}

void scenario_e_poset_nonext(Ctx& c) {
    auto F2 = build_ring("gf:2");
    const Poset P = Poset::parse("n=4; 1<2; 3<4");
    const auto cls = classify_hierarchical(P);
    c.check(!cls.hierarchical(), "poset is unexpectedly hierarchical");
    if (cls.witness) {
        c.rep.witnesses["witness"] = {{"level", cls.witness->level},
                                      {"alpha", cls.witness->alpha + 1},
                                      {"beta", cls.witness->beta + 1}};
    }
    auto w = parse_weight_spec("poset:" + P.to_text(), F2, 4);
    auto C = Code::closure(F2, 4, {{1, 0, 1, 0}});
    auto f = LinearMap::build(C, {{0, 0, 0, 1}});
    c.check(f.has_value(), "map is not linear");
    if (!f) return;
    const Vec a{1, 0, 1, 0}, b{0, 0, 0, 1};
    c.check(w.fn(a) == WeightValue::integer(2), "wt(10,10) is not 2");
    c.check(w.fn(b) == WeightValue::integer(2), "wt(00,01) is not 2");
    c.check(preserves_weight(*f, w).preserved, "map is not an isometry");
    c.check(extension_search(*f, w).empty(), "an isometric extension exists");

    // The constructive counterexample reproduces the same pair.
    const auto ce = nonhier_counterexample(P, F2);
    c.check(ce.e_hat == Vec({1, 0, 1, 0}), "constructed generator differs");
    c.check(ce.e_beta == Vec({0, 0, 0, 1}), "constructed image differs");
    c.check(ce.weight == 2, "constructed weight differs");
    auto fc = LinearMap::build(Code::closure(F2, 4, {ce.e_hat}), {ce.e_beta});
    c.check(fc.has_value() && extension_search(*fc, w).empty(),
            "constructed counterexample admits an extension");
    c.rep.counts["extensions"] = 0;
    c.rep.witnesses["verdict"] = "non-hierarchical poset isometry with no extension";
}

void scenario_e_hier_two_ext(Ctx& c) {
    auto F2 = build_ring("gf:2");
    auto C = Code::closure(F2, 4, {{1, 0, 1, 0}, {0, 1, 1, 1}, {1, 1, 0, 1}});
    auto f = LinearMap::build(C, {{1, 1, 1, 0}, {1, 1, 1, 1}, {0, 0, 0, 1}});
    c.check(f.has_value(), "ordered correspondence is not linear");
    if (!f) return;
    auto w = parse_weight_spec("poset:n=4; 1<3; 1<4; 2<3; 2<4", F2, 4);
    c.check(preserves_weight(*f, w).preserved, "map is not an isometry");
    const auto exts = extension_search(*f, w);
    const RingMatrix M1(F2, 4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1});
    const RingMatrix M2(F2, 4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1});
    c.check(exts.size() == 2, "extension count is not 2");
    c.check(exts.size() == 2 && exts[0] == M1 && exts[1] == M2,
            "extensions differ from the published pair");
    c.rep.counts["extensions"] = exts.size();
    ordered_json ms = ordered_json::array();
    for (const auto& M : exts) ms.push_back(mat_json(M));
    c.rep.witnesses["extensions"] = ms;
}

void scenario_orbit_17_20(Ctx& c) {
    auto R = build_ring("f2xyq");
    std::vector<RingMatrix> els;
    for (int r = 0; r < R->size(); ++r)
        for (int u : units(*R)) els.push_back(RingMatrix(R, 2, 2, {R->one(), r, R->zero(), u}));
    auto U = MatrixGroup::from_elements("unitriangular-units", R, 2, els);
    c.check(U.order() == 32, "group order is not 32");
    const Partition right = orbit_partition(U, OrbitSide::Right);
    const Partition left = orbit_partition(U, OrbitSide::Left);
    // The zero vector is a fixed orbit under both actions; the published
    // counts are over the nonzero vectors.
    const int right_nonzero = right.block_count() - 1;
    const int left_nonzero = left.block_count() - 1;
    c.check(right_nonzero == 17, "right action does not yield 17 nonzero orbits");
    c.check(left_nonzero == 20, "left action does not yield 20 nonzero orbits");
    c.rep.counts["right"] = right_nonzero;
    c.rep.counts["left"] = left_nonzero;
    c.rep.counts["right_with_zero"] = right.block_count();
    c.rep.counts["left_with_zero"] = left.block_count();
    c.rep.witnesses["verdict"] = "orbit counts differ (ring is not Frobenius)";
}

void scenario_thm_rho_small(Ctx& c) {
    // Invertible RT-preserving matrices coincide with the lower-triangular
    // group at desk scale.
    const std::vector<std::pair<std::string, int>> instances = {
        {"zn:2", 2}, {"zn:2", 3}, {"zn:3", 2}, {"zn:4", 2}, {"gf:4", 2}, {"zn:4", 3}};
    for (const auto& [spec, n] : instances) {
        auto R = build_ring(spec);
        const std::uint64_t universe = power_u64(static_cast<std::uint64_t>(R->size()), n);
        std::vector<Vec> all;
        std::vector<int> wt(universe);
        for (std::uint64_t v = 0; v < universe; ++v) {
            all.push_back(vec_unrank(*R, n, v));
            wt[v] = wt_rt(*R, all.back());
        }
        const std::uint64_t total = power_u64(static_cast<std::uint64_t>(R->size()), n * n);
        std::vector<RingMatrix> preserving;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<int> entries(static_cast<std::size_t>(n) * n);
            std::uint64_t t = idx;
            for (int i = n * n - 1; i >= 0; --i) {
                entries[i] = static_cast<int>(t % R->size());
                t /= R->size();
            }
            RingMatrix M(R, n, n, std::move(entries));
            bool ok = true;
            for (std::uint64_t v = 1; v < universe && ok; ++v)
                ok = wt[vec_rank(*R, mul_row_matrix(*R, all[v], M))] == wt[v];
            if (ok && is_invertible(M)) preserving.push_back(std::move(M));
        }
        const auto lt = lt_group(R, n);
        c.check(preserving == lt.elements(),
                "RT isometry group differs from LT for " + spec + ", n=" + std::to_string(n));
    }

    // Every RT-preserving map on a code is globally lower-triangular.
    auto z4 = build_ring("zn:4");
    auto w2 = parse_weight_spec("rt", z4, 2);
    const auto lt2 = lt_group(z4, 2);
    std::uint64_t maps = 0;
    for (const auto& C : enumerate_codes(z4, 2, ScanLimits{})) {
        for (const auto& f : weight_preserving_maps_into(C, w2)) {
            ++maps;
            if (!is_global_u_map(f, lt2))
                c.check(false, "an RT isometry is not a global LT map (n=2)");
        }
    }
    // Seeded sample of two-generator codes at n=3.
    auto w3 = parse_weight_spec("rt", z4, 3);
    const auto lt3 = lt_group(z4, 3);
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto rnd = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int s = 0; s < 6; ++s) {
        std::vector<Vec> gens = {vec_unrank(*z4, 3, rnd() % 64), vec_unrank(*z4, 3, rnd() % 64)};
        auto C = Code::closure(z4, 3, gens);
        for (const auto& f : weight_preserving_maps_into(C, w3)) {
            ++maps;
            if (!is_global_u_map(f, lt3))
                c.check(false, "an RT isometry is not a global LT map (n=3)");
        }
    }
    c.rep.counts["isometries_checked"] = maps;
    c.rep.witnesses["verdict"] = "RT isometries are global lower-triangular maps";
}

void scenario_thm_supp(Ctx& c) {
    for (const std::string spec : {"zn:4", "gf:3"}) {
        auto R = build_ring(spec);
        const int n = 2;
        // Weight list over singleton blocks is exactly the support vector.
        auto w = parse_weight_spec("profile:(1,1;hamming)", R, n);
        const auto delta = diag_group(R, n);
        std::uint64_t maps = 0;
        for (const auto& C : enumerate_codes(R, n, ScanLimits{})) {
            for (const auto& f : weight_preserving_maps_into(C, w)) {
                ++maps;
                if (!is_global_u_map(f, delta))
                    c.check(false, "a support-preserving map is not a global diagonal map");
            }
        }
        c.rep.counts["maps_" + spec] = maps;
    }
    c.rep.witnesses["verdict"] = "support-preserving maps are global diagonal maps";
}

void scenario_thm_ideal(Ctx& c) {
    for (const std::string spec : {"zn:4", "gf:3"}) {
        auto R = build_ring(spec);
        const int n = 2;
        const auto GL = gl_group(R, n);
        auto right_ideal_of = [&](const Vec& x) {
            return ideal_generated_by(*R, std::vector<int>(x.begin(), x.end()), IdealSide::Right);
        };
        std::uint64_t maps = 0, globals = 0;
        const auto codes = enumerate_codes(R, n, ScanLimits{});
        const std::uint64_t total = power_u64(static_cast<std::uint64_t>(R->size()), n * n);
        for (const auto& C : codes) {
            std::set<std::vector<std::uint64_t>> seen_tables;
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                std::vector<int> entries(static_cast<std::size_t>(n) * n);
                std::uint64_t t = idx;
                for (int i = n * n - 1; i >= 0; --i) {
                    entries[i] = static_cast<int>(t % R->size());
                    t /= R->size();
                }
                const LinearMap f = restrict_matrix(C, RingMatrix(R, n, n, std::move(entries)));
                std::vector<std::uint64_t> key;
                for (const auto& y : f.images()) key.push_back(vec_rank(*R, y));
                if (!seen_tables.insert(key).second) continue;
                ++maps;
                bool ideal_preserving = true;
                for (std::size_t i = 0; i < C->size() && ideal_preserving; ++i)
                    ideal_preserving =
                        right_ideal_of(C->elements()[i]) == right_ideal_of(f.image_at(i));
                const bool global = is_global_u_map(f, GL).has_value();
                if (global) ++globals;
                if (global != ideal_preserving)
                    c.check(false, "global-GL and ideal-preservation disagree over " + spec);
            }
        }
        c.rep.counts["maps_" + spec] = maps;
        c.rep.counts["global_" + spec] = globals;
    }
    c.rep.witnesses["verdict"] = "extendable to GL exactly when entry right-ideals match";
}

void scenario_thm_hamming(Ctx& c) {
    for (const std::string spec : {"zn:4", "gf:3"}) {
        auto R = build_ring(spec);
        const int n = 2;
        auto w = parse_weight_spec("hamming", R, n);
        const auto mon = mon_group_full(R, n);
        std::uint64_t maps = 0;
        for (const auto& C : enumerate_codes(R, n, ScanLimits{})) {
            for (const auto& f : weight_preserving_maps_into(C, w)) {
                ++maps;
                if (!is_global_u_map(f, mon))
                    c.check(false, "a Hamming isometry is not a global monomial map");
            }
        }
        c.rep.counts["maps_" + spec] = maps;
    }
    c.rep.witnesses["verdict"] = "Hamming isometries are global monomial maps";
}

void scenario_thm_homog(Ctx& c) {
    auto R = build_ring("zn:4");
    const int n = 2;
    auto homog = parse_weight_spec("homog", R, n);
    auto hamm = parse_weight_spec("hamming", R, n);
    std::uint64_t maps = 0, preserving = 0;
    const std::uint64_t total = power_u64(static_cast<std::uint64_t>(R->size()), n * n);
    for (const auto& C : enumerate_codes(R, n, ScanLimits{})) {
        if (C->size() > 16) continue;
        std::set<std::vector<std::uint64_t>> seen_tables;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<int> entries(static_cast<std::size_t>(n) * n);
            std::uint64_t t = idx;
            for (int i = n * n - 1; i >= 0; --i) {
                entries[i] = static_cast<int>(t % R->size());
                t /= R->size();
            }
            const LinearMap f = restrict_matrix(C, RingMatrix(R, n, n, std::move(entries)));
            std::vector<std::uint64_t> key;
            for (const auto& y : f.images()) key.push_back(vec_rank(*R, y));
            if (!seen_tables.insert(key).second) continue;
            ++maps;
            const bool ph = preserves_weight(f, homog).preserved;
            const bool pH = preserves_weight(f, hamm).preserved;
            if (ph) ++preserving;
            if (ph != pH)
                c.check(false, "homogeneous and Hamming preservation disagree");
        }
    }
    c.rep.counts["maps"] = maps;
    c.rep.counts["preserving"] = preserving;
    c.rep.witnesses["verdict"] = "homogeneous-preserving iff Hamming-preserving";
}

void scenario_thm_monu(Ctx& c) {
    auto R = build_ring("zn:4");
    const int n = 2;
    for (const std::string uspec : {"1", "all"}) {
        const auto subgroup = parse_unit_subgroup(*R, uspec);
        const auto U = mon_group(R, n, subgroup);
        const auto scan = local_global_scan(R, n, U, ScanLimits{});
        c.check(scan.holds && scan.complete,
                "local-global fails for Mon_" + uspec + "(2,Z4)");
        c.rep.counts["local_maps_U_" + uspec] = scan.local_maps;

        // Local monomial maps are exactly the composition-preserving maps.
        std::uint64_t agree = 0;
        for (const auto& C : enumerate_codes(R, n, ScanLimits{})) {
            const std::uint64_t universe = power_u64(static_cast<std::uint64_t>(R->size()), n);
            const auto& gens = C->generators();
            std::vector<std::uint64_t> tup(gens.size(), 0);
            while (true) {
                std::vector<Vec> images;
                for (std::uint64_t tv : tup) images.push_back(vec_unrank(*R, n, tv));
                if (auto f = LinearMap::build(C, std::move(images))) {
                    bool comp_ok = true;
                    for (std::size_t i = 0; i < C->size() && comp_ok; ++i)
                        comp_ok = comp_vector(*R, subgroup, C->elements()[i]) ==
                                  comp_vector(*R, subgroup, f->image_at(i));
                    const bool local = is_local_u_map(*f, U).local;
                    if (local != comp_ok)
                        c.check(false, "local Mon_U differs from comp_U preservation");
                    ++agree;
                }
                int i = static_cast<int>(gens.size()) - 1;
                while (i >= 0 && tup[i] == universe - 1) tup[i--] = 0;
                if (i < 0) break;
                ++tup[i];
            }
        }
        c.rep.counts["maps_compared_U_" + uspec] = agree;
    }
    c.rep.witnesses["verdict"] = "monomial local-global holds; local = comp-preserving";
}

void scenario_remark_prodweight(Ctx& c) {
    auto F2 = build_ring("gf:2");
    const int n = 4;
    auto w = parse_weight_spec("profile:(2,2;rt)", F2, n);
    // Block-diagonal group with lower-triangular blocks.
    const auto LT2 = lt_group(F2, 2).elements();
    std::vector<RingMatrix> els;
    for (const auto& A : LT2)
        for (const auto& B : LT2) {
            RingMatrix M(F2, 4, 4);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    M.set(i, j, A.at(i, j));
                    M.set(2 + i, 2 + j, B.at(i, j));
                }
            els.push_back(std::move(M));
        }
    auto U = MatrixGroup::from_elements("blockdiag-LT", F2, 4, els);
    std::uint64_t maps = 0;
    for (const auto& C : enumerate_codes(F2, n, ScanLimits{})) {
        for (const auto& f : weight_preserving_maps_into(C, w)) {
            ++maps;
            if (!is_global_u_map(f, U))
                c.check(false, "a weight-list-preserving map is not a global block-diagonal map");
        }
    }
    c.rep.counts["maps"] = maps;
    c.rep.counts["group_order"] = U.order();
    c.rep.witnesses["verdict"] = "weight-list preservers are global block-diagonal maps";
}

using ScenarioFn = std::function<void(Ctx&)>;

const std::vector<std::pair<std::string, ScenarioFn>>& registry() {
    static const std::vector<std::pair<std::string, ScenarioFn>> reg = {
        {"e_f3", scenario_e_f3},
        {"e_gl_nonfrob", scenario_e_gl_nonfrob},
        {"e_nonfrob_hamming", scenario_e_nonfrob_hamming},
        {"e_rank_matrix", scenario_e_rank_matrix},
        {"e_rank_field", scenario_e_rank_field},
        {"e_nrt", scenario_e_nrt},
        {"e_rt_symm", scenario_e_rt_symm},
        {"e_poset_nonext", scenario_e_poset_nonext},
        {"e_hier_two_ext", scenario_e_hier_two_ext},
        {"orbit_17_20", scenario_orbit_17_20},
        {"thm_rho_small", scenario_thm_rho_small},
        {"thm_supp", scenario_thm_supp},
        {"thm_ideal", scenario_thm_ideal},
        {"thm_hamming", scenario_thm_hamming},
        {"thm_homog", scenario_thm_homog},
        {"thm_monu", scenario_thm_monu},
        {"remark_prodweight", scenario_remark_prodweight},
    };
    return reg;
}

}  // namespace

ordered_json ScenarioReport::to_json() const {
    return ordered_json{{"scenario", scenario},
                        {"verdict", verdict},
                        {"witnesses", witnesses},
                        {"counts", counts},
                        {"runtime_ms", runtime_ms}};
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

ScenarioReport run_named_scenario(const std::string& name) {
    for (const auto& [nm, fn] : registry()) {
        if (nm != name) continue;
        Ctx c;
        c.rep.scenario = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const auto stop = std::chrono::steady_clock::now();
        c.rep.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        c.rep.verdict = c.failures.empty() ? "pass" : "fail";
        if (!c.failures.empty()) c.rep.witnesses["failures"] = c.failures;
        return c.rep;
    }
    throw SpecError("unknown scenario '" + name + "'");
}

}  // namespace froblab
