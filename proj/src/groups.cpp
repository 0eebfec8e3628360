#include "froblab/groups.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "froblab/parse_util.hpp"

namespace froblab {

namespace {

std::vector<RingMatrix> sorted_unique(std::vector<RingMatrix> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool sorted_contains(const std::vector<RingMatrix>& v, const RingMatrix& M) {
    return std::binary_search(v.begin(), v.end(), M);
}

// Union-find with path halving.
struct UnionFind {
    std::vector<std::uint64_t> parent;
    explicit UnionFind(std::uint64_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::uint64_t{0});
    }
    std::uint64_t find(std::uint64_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint64_t a, std::uint64_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

RingMatrix matrix_from_json(const nlohmann::json& j, const Ring& R, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw SpecError("matrix literal must have " + std::to_string(n) + " rows");
    std::vector<int> entries;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw SpecError("matrix literal row length mismatch");
        for (const auto& v : row) entries.push_back(v.get<int>());
    }
    return RingMatrix(R, n, n, std::move(entries));
}

std::uint64_t xorshift(std::uint64_t& s) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
}

}  // namespace

MatrixGroup MatrixGroup::from_elements(std::string name, Ring R, int n,
                                       std::vector<RingMatrix> elements, std::uint64_t budget) {
    MatrixGroup g;
    g.name_ = std::move(name);
    g.ring_ = std::move(R);
    g.n_ = n;
    g.elements_ = sorted_unique(std::move(elements));
    const auto& els = g.elements_;
    auto fail = [&](const std::string& what) {
        throw SpecError("group '" + g.name_ + "': " + what);
    };
    if (els.empty()) fail("no elements");
    for (const auto& M : els)
        if (M.rows() != n || M.cols() != n || M.ring() != g.ring_) fail("element shape mismatch");
    if (!sorted_contains(els, RingMatrix::identity(g.ring_, n))) fail("identity missing");
    check_budget("group closure validation",
                 static_cast<std::uint64_t>(els.size()) * els.size(), budget);
    for (const auto& A : els)
        for (const auto& B : els)
            if (!sorted_contains(els, A * B)) fail("not closed under products");
    for (const auto& A : els) {
        const auto inv = right_inverse(A);
        if (!inv) fail("contains a non-invertible matrix");
        if (!sorted_contains(els, *inv)) fail("inverse missing for an element");
    }
    return g;
}

bool MatrixGroup::contains(const RingMatrix& M) const { return sorted_contains(elements_, M); }

MatrixGroup MatrixGroup::transposed() const {
    std::vector<RingMatrix> t;
    t.reserve(elements_.size());
    for (const auto& M : elements_) t.push_back(M.transpose());
    return from_elements(name_ + "^T", ring_, n_, std::move(t));
}

MatrixGroup group_from_generators(std::string name, Ring R, int n,
                                  const std::vector<RingMatrix>& gens, std::uint64_t budget) {
    for (const auto& g : gens)
        if (!is_invertible(g)) throw SpecError("group generator is not invertible: " + g.to_string());
    std::vector<RingMatrix> els{RingMatrix::identity(R, n)};
    std::vector<RingMatrix> frontier = els;
    const std::uint64_t allowed = budget == 0 ? default_budget() : budget;
    while (!frontier.empty()) {
        std::vector<RingMatrix> next;
        for (const auto& A : frontier)
            for (const auto& g : gens) {
                RingMatrix P = A * g;
                if (!sorted_contains(els, P)) {
                    els.push_back(P);
                    std::sort(els.begin(), els.end());
                    next.push_back(std::move(P));
                }
            }
        if (els.size() > allowed) throw BudgetError("group_from_generators", els.size(), allowed);
        frontier = std::move(next);
    }
    return MatrixGroup::from_elements(std::move(name), std::move(R), n, std::move(els), budget);
}

MatrixGroup gl_group(const Ring& R, int n) {
    return MatrixGroup::from_elements("GL(" + std::to_string(n) + "," + R->name() + ")", R, n,
                                      enumerate_gl(R, n));
}

std::vector<int> validate_unit_subgroup(const FiniteRing& R, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty()) throw SpecError("unit subgroup is empty");
    for (int u : elems)
        if (u < 0 || u >= R.size() || !R.is_unit(u))
            throw SpecError("unit subgroup contains a non-unit");
    if (!std::binary_search(elems.begin(), elems.end(), R.one()))
        throw SpecError("unit subgroup does not contain 1");
    for (int a : elems) {
        for (int b : elems)
            if (!std::binary_search(elems.begin(), elems.end(), R.mul(a, b)))
                throw SpecError("unit subgroup is not closed under multiplication");
        if (!std::binary_search(elems.begin(), elems.end(), R.inv(a)))
            throw SpecError("unit subgroup is not closed under inverses");
    }
    return elems;
}

std::vector<int> parse_unit_subgroup(const FiniteRing& R, const std::string& spec) {
    if (spec == "all") return units(R);
    if (spec == "1") return {R.one()};
    if (spec.size() >= 2 && spec.front() == '[' && spec.back() == ']') {
        std::vector<int> elems;
        for (const auto& tok : split_top_level(spec.substr(1, spec.size() - 2), ','))
            elems.push_back(parse_int_strict(tok, "unit subgroup"));
        return validate_unit_subgroup(R, std::move(elems));
    }
    throw SpecError("bad unit-subgroup spec '" + spec + "' (expected all | 1 | [i,...])");
}

MatrixGroup mon_group(const Ring& R, int n, const std::vector<int>& unit_subgroup) {
    const auto U = validate_unit_subgroup(*R, unit_subgroup);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<RingMatrix> els;
    do {
        std::vector<int> pick(n, 0);
        while (true) {
            RingMatrix M(R, n, n);
            for (int i = 0; i < n; ++i) M.set(i, perm[i], U[pick[i]]);
            els.push_back(std::move(M));
            int i = n - 1;
            while (i >= 0 && pick[i] == static_cast<int>(U.size()) - 1) pick[i--] = 0;
            if (i < 0) break;
            ++pick[i];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::string nm = U.size() == units(*R).size()
                         ? "Mon(" + std::to_string(n) + "," + R->name() + ")"
                         : "Mon_U(" + std::to_string(n) + "," + R->name() + ")";
    return MatrixGroup::from_elements(std::move(nm), R, n, std::move(els));
}

MatrixGroup mon_group_full(const Ring& R, int n) { return mon_group(R, n, units(*R)); }

MatrixGroup lt_group_u(const Ring& R, int n, const std::vector<int>& unit_subgroup) {
    const auto U = validate_unit_subgroup(*R, unit_subgroup);
    const int below = n * (n - 1) / 2;
    const std::uint64_t total =
        power_u64(U.size(), n) * power_u64(static_cast<std::uint64_t>(R->size()), below);
    check_budget("lt_group", total);
    std::vector<RingMatrix> els;
    els.reserve(total);
    std::vector<int> diag(n, 0), free_e(below, 0);
    while (true) {
        RingMatrix M(R, n, n);
        for (int i = 0; i < n; ++i) M.set(i, i, U[diag[i]]);
        int t = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) M.set(i, j, free_e[t++]);
        els.push_back(std::move(M));
        int i = below - 1;
        while (i >= 0 && free_e[i] == R->size() - 1) free_e[i--] = 0;
        if (i >= 0) {
            ++free_e[i];
            continue;
        }
        i = n - 1;
        while (i >= 0 && diag[i] == static_cast<int>(U.size()) - 1) diag[i--] = 0;
        if (i < 0) break;
        ++diag[i];
    }
    std::string nm = U.size() == units(*R).size()
                         ? "LT(" + std::to_string(n) + "," + R->name() + ")"
                         : "LT_U(" + std::to_string(n) + "," + R->name() + ")";
    return MatrixGroup::from_elements(std::move(nm), R, n, std::move(els));
}

MatrixGroup lt_group(const Ring& R, int n) { return lt_group_u(R, n, units(*R)); }

MatrixGroup diag_group(const Ring& R, int n) {
    const auto U = units(*R);
    std::vector<RingMatrix> els;
    std::vector<int> pick(n, 0);
    while (true) {
        RingMatrix M(R, n, n);
        for (int i = 0; i < n; ++i) M.set(i, i, U[pick[i]]);
        els.push_back(std::move(M));
        int i = n - 1;
        while (i >= 0 && pick[i] == static_cast<int>(U.size()) - 1) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return MatrixGroup::from_elements("Diag(" + std::to_string(n) + "," + R->name() + ")", R, n,
                                      std::move(els));
}

MatrixGroup block_lower_triangular_group(const Ring& R, const std::vector<int>& block_sizes,
                                         const std::vector<std::string>& diag_kinds) {
    if (block_sizes.empty() || block_sizes.size() != diag_kinds.size())
        throw SpecError("block sizes and diagonal kinds must align");
    const int t = static_cast<int>(block_sizes.size());
    const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
    std::vector<int> start(t, 0);
    for (int i = 1; i < t; ++i) start[i] = start[i - 1] + block_sizes[i - 1];

    std::vector<std::vector<RingMatrix>> diag_choices;
    for (int i = 0; i < t; ++i) {
        const std::string& kind = diag_kinds[i];
        if (kind == "mon") diag_choices.push_back(mon_group_full(R, block_sizes[i]).elements());
        else if (kind == "diag") diag_choices.push_back(diag_group(R, block_sizes[i]).elements());
        else if (kind == "gl") diag_choices.push_back(gl_group(R, block_sizes[i]).elements());
        else throw SpecError("unknown diagonal block kind '" + kind + "'");
    }
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int br = 0, bc = 0;
            for (int i = 0; i < t; ++i) {
                if (r >= start[i]) br = i;
                if (c >= start[i]) bc = i;
            }
            if (br > bc) free_pos.emplace_back(r, c);
        }
    std::uint64_t total = power_u64(static_cast<std::uint64_t>(R->size()), static_cast<int>(free_pos.size()));
    for (const auto& ch : diag_choices) total *= ch.size();
    check_budget("block_lower_triangular_group", total);

    std::vector<RingMatrix> els;
    els.reserve(total);
    std::vector<std::size_t> pick(t, 0);
    std::vector<int> free_e(free_pos.size(), 0);
    while (true) {
        RingMatrix M(R, n, n);
        for (int i = 0; i < t; ++i) {
            const RingMatrix& D = diag_choices[i][pick[i]];
            for (int r = 0; r < block_sizes[i]; ++r)
                for (int c = 0; c < block_sizes[i]; ++c)
                    M.set(start[i] + r, start[i] + c, D.at(r, c));
        }
        for (std::size_t f = 0; f < free_pos.size(); ++f)
            M.set(free_pos[f].first, free_pos[f].second, free_e[f]);
        els.push_back(std::move(M));
        int i = static_cast<int>(free_pos.size()) - 1;
        while (i >= 0 && free_e[i] == R->size() - 1) free_e[i--] = 0;
        if (i >= 0) {
            ++free_e[i];
            continue;
        }
        i = t - 1;
        while (i >= 0 && pick[i] == diag_choices[i].size() - 1) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return MatrixGroup::from_elements("BlockLT(" + R->name() + ")", R, n, std::move(els));
}

MatrixGroup conjugate_group(const MatrixGroup& U, const RingMatrix& P) {
    const auto Pinv = right_inverse(P);
    if (!Pinv) throw SpecError("conjugating matrix is not invertible");
    std::vector<RingMatrix> els;
    els.reserve(U.order());
    for (const auto& A : U.elements()) els.push_back(P * A * *Pinv);
    return MatrixGroup::from_elements(U.name() + "^P", U.ring(), U.n(), std::move(els));
}

Partition orbit_partition(const MatrixGroup& U, OrbitSide side) {
    const FiniteRing& R = *U.ring();
    const int n = U.n();
    const std::uint64_t universe = power_u64(static_cast<std::uint64_t>(R.size()), n);
    check_budget("orbit_partition", universe * U.order());
    UnionFind uf(universe);
    for (std::uint64_t r = 0; r < universe; ++r) {
        const Vec x = vec_unrank(R, n, r);
        for (const auto& M : U.elements()) {
            const Vec y = side == OrbitSide::Right ? mul_row_matrix(R, x, M)
                                                   : mul_matrix_col(R, M, x);
            uf.unite(r, vec_rank(R, y));
        }
    }
    std::vector<int> labels(universe);
    for (std::uint64_t r = 0; r < universe; ++r) labels[r] = static_cast<int>(uf.find(r));
    return Partition(std::move(labels));
}

OrbitDualityReport verify_orbit_duality(const MatrixGroup& U, const Character& chi) {
    OrbitDualityReport rep;
    rep.chi_exponents = chi.exponents();
    const int n = U.n();
    const Partition right_orbits = orbit_partition(U, OrbitSide::Right);
    const Partition left_orbits = orbit_partition(U, OrbitSide::Left);
    rep.right_orbits = right_orbits.block_count();
    rep.left_orbits = left_orbits.block_count();

    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            rep.pass = false;
            rep.failures.push_back(what);
        }
    };
    expect(chi_dual(right_orbits, chi, n, ActionSide::Left) == left_orbits,
           "left chi-dual of the right-orbit partition is not the left-orbit partition");
    expect(chi_dual(left_orbits, chi, n, ActionSide::Right) == right_orbits,
           "right chi-dual of the left-orbit partition is not the right-orbit partition");
    expect(is_reflexive(right_orbits, chi, n), "right-orbit partition is not reflexive");
    expect(is_reflexive(left_orbits, chi, n), "left-orbit partition is not reflexive");
    expect(rep.right_orbits == rep.left_orbits, "orbit counts differ");
    return rep;
}

MatrixSubring MatrixSubring::from_elements(std::string name, Ring R, int n,
                                           std::vector<RingMatrix> elements) {
    MatrixSubring s;
    s.name_ = std::move(name);
    s.ring_ = std::move(R);
    s.n_ = n;
    s.elements_ = sorted_unique(std::move(elements));
    auto fail = [&](const std::string& what) {
        throw SpecError("subring '" + s.name_ + "': " + what);
    };
    const auto& els = s.elements_;
    if (!sorted_contains(els, RingMatrix(s.ring_, n, n))) fail("zero missing");
    if (!sorted_contains(els, RingMatrix::identity(s.ring_, n))) fail("identity missing");
    check_budget("subring validation", static_cast<std::uint64_t>(els.size()) * els.size());
    for (const auto& A : els)
        for (const auto& B : els) {
            if (!sorted_contains(els, A + B)) fail("not closed under addition");
            if (!sorted_contains(els, A * B)) fail("not closed under products");
        }
    return s;
}

bool MatrixSubring::contains(const RingMatrix& M) const { return sorted_contains(elements_, M); }

MatrixSubring subring_closure(std::string name, Ring R, int n,
                              const std::vector<RingMatrix>& gens, std::uint64_t budget) {
    std::vector<RingMatrix> els{RingMatrix(R, n, n), RingMatrix::identity(R, n)};
    for (const auto& g : gens) els.push_back(g);
    els = sorted_unique(std::move(els));
    const std::uint64_t allowed = budget == 0 ? default_budget() : budget;
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<RingMatrix> snapshot = els;
        for (const auto& A : snapshot)
            for (const auto& B : snapshot)
                for (const RingMatrix& C : {A + B, A * B})
                    if (!sorted_contains(els, C)) {
                        els.push_back(C);
                        std::sort(els.begin(), els.end());
                        grew = true;
                    }
        if (els.size() > allowed) throw BudgetError("subring_closure", els.size(), allowed);
    }
    return MatrixSubring::from_elements(std::move(name), std::move(R), n, std::move(els));
}

MatrixSubring lower_triangular_subring(const Ring& R, int n) {
    std::vector<RingMatrix> els;
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) pos.emplace_back(i, j);
    std::vector<int> pick(pos.size(), 0);
    while (true) {
        RingMatrix M(R, n, n);
        for (std::size_t t = 0; t < pos.size(); ++t) M.set(pos[t].first, pos[t].second, pick[t]);
        els.push_back(std::move(M));
        int i = static_cast<int>(pos.size()) - 1;
        while (i >= 0 && pick[i] == R->size() - 1) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return MatrixSubring::from_elements("LowerTriangular", R, n, std::move(els));
}

MatrixSubring diagonal_subring(const Ring& R, int n) {
    std::vector<RingMatrix> els;
    std::vector<int> pick(n, 0);
    while (true) {
        RingMatrix M(R, n, n);
        for (int i = 0; i < n; ++i) M.set(i, i, pick[i]);
        els.push_back(std::move(M));
        int i = n - 1;
        while (i >= 0 && pick[i] == R->size() - 1) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return MatrixSubring::from_elements("Diagonal", R, n, std::move(els));
}

MatrixSubring full_matrix_subring(const Ring& R, int n) {
    const std::uint64_t total = power_u64(static_cast<std::uint64_t>(R->size()), n * n);
    check_budget("full_matrix_subring", total * total);
    std::vector<RingMatrix> els;
    els.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<int> entries(static_cast<std::size_t>(n) * n);
        std::uint64_t t = idx;
        for (int i = n * n - 1; i >= 0; --i) {
            entries[i] = static_cast<int>(t % R->size());
            t /= R->size();
        }
        els.emplace_back(R, n, n, std::move(entries));
    }
    return MatrixSubring::from_elements("Full", R, n, std::move(els));
}

MatrixSubring intersect_subrings(const MatrixSubring& A, const MatrixSubring& B) {
    std::vector<RingMatrix> els;
    for (const auto& M : A.elements())
        if (B.contains(M)) els.push_back(M);
    return MatrixSubring::from_elements(A.name() + "&" + B.name(), A.ring(), A.n(),
                                        std::move(els));
}

MatrixGroup units_of_subring(const MatrixSubring& S) {
    std::vector<RingMatrix> els;
    for (const auto& A : S.elements()) {
        const auto inv = right_inverse(A);
        if (!inv) continue;
        if (!S.contains(*inv)) throw InternalError("inverse escaped the subring " + S.name());
        els.push_back(A);
    }
    return MatrixGroup::from_elements("U(" + S.name() + ")", S.ring(), S.n(), std::move(els));
}

ConstructibleReport is_constructible(const MatrixSubring& S, std::optional<SampledMode> sampled,
                                     std::uint64_t budget) {
    ConstructibleReport rep;
    const MatrixGroup U = units_of_subring(S);
    const int n = S.n();
    const std::uint64_t total = power_u64(U.order(), n);
    const std::uint64_t allowed = budget == 0 ? default_budget() : budget;
    if (!sampled && total > allowed) sampled = SampledMode{};

    auto splice = [&](const std::vector<std::size_t>& pick) {
        RingMatrix B(S.ring(), n, n);
        for (int j = 0; j < n; ++j) {
            const RingMatrix& A = U.elements()[pick[j]];
            for (int i = 0; i < n; ++i) B.set(i, j, A.at(i, j));
        }
        return B;
    };

    if (!sampled) {
        std::vector<std::size_t> pick(n, 0);
        for (std::uint64_t it = 0; it < total; ++it) {
            ++rep.tuples_checked;
            if (!S.contains(splice(pick))) {
                rep.constructible = false;
                std::vector<RingMatrix> w;
                for (int j = 0; j < n; ++j) w.push_back(U.elements()[pick[j]]);
                rep.witness = std::move(w);
                return rep;
            }
            int i = n - 1;
            while (i >= 0 && pick[i] == U.order() - 1) pick[i--] = 0;
            if (i < 0) break;
            ++pick[i];
        }
        return rep;
    }

    rep.exhaustive = false;
    std::uint64_t state = sampled->seed * 6364136223846793005ULL + 1442695040888963407ULL;
    if (state == 0) state = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t it = 0; it < sampled->count; ++it) {
        std::vector<std::size_t> pick(n);
        for (int j = 0; j < n; ++j) pick[j] = xorshift(state) % U.order();
        ++rep.tuples_checked;
        if (!S.contains(splice(pick))) {
            rep.constructible = false;
            std::vector<RingMatrix> w;
            for (int j = 0; j < n; ++j) w.push_back(U.elements()[pick[j]]);
            rep.witness = std::move(w);
            return rep;
        }
    }
    return rep;
}

MatrixGroup parse_group_spec(const std::string& spec, const Ring& R, int n) {
    if (spec == "gl") return gl_group(R, n);
    if (spec == "lt") return lt_group(R, n);
    if (spec == "diag") return diag_group(R, n);
    if (spec == "mon") return mon_group_full(R, n);
    if (spec.rfind("mon:", 0) == 0) return mon_group(R, n, parse_unit_subgroup(*R, spec.substr(4)));
    if (spec.rfind("blocktri:", 0) == 0) {
        const auto parts = split_top_level(spec.substr(9), ':');
        if (parts.size() != 2) throw SpecError("expected blocktri:[n1,...]:<kinds>");
        const std::string& sizes_tok = parts[0];
        if (sizes_tok.size() < 2 || sizes_tok.front() != '[' || sizes_tok.back() != ']')
            throw SpecError("blocktri sizes must be bracketed");
        std::vector<int> sizes;
        for (const auto& t : split_top_level(sizes_tok.substr(1, sizes_tok.size() - 2), ','))
            sizes.push_back(parse_int_strict(t, "blocktri sizes"));
        std::vector<std::string> kinds = split_top_level(parts[1], ',');
        if (kinds.size() == 1 && sizes.size() > 1) kinds.assign(sizes.size(), kinds[0]);
        const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
        if (total != n) throw SpecError("blocktri sizes do not sum to n");
        return block_lower_triangular_group(R, sizes, kinds);
    }
    if (spec.rfind("gens:", 0) == 0) {
        const auto j = nlohmann::json::parse(spec.substr(5), nullptr, false);
        if (j.is_discarded() || !j.is_array()) throw SpecError("gens expects a JSON matrix list");
        std::vector<RingMatrix> gens;
        for (const auto& m : j) gens.push_back(matrix_from_json(m, R, n));
        return group_from_generators("gens", R, n, gens);
    }
    if (spec.rfind("conj:", 0) == 0) {
        std::string body = spec.substr(5);
        if (body.size() < 2 || body.front() != '(' || body.back() != ')')
            throw SpecError("expected conj:(<spec>,P)");
        const auto parts = split_top_level(body.substr(1, body.size() - 2), ',');
        if (parts.size() < 2) throw SpecError("expected conj:(<spec>,P)");
        // The matrix literal may contain commas; re-join everything after the
        // first top-level comma.
        std::string mat_tok = body.substr(1 + parts[0].size() + 1);
        mat_tok.pop_back();
        const auto j = nlohmann::json::parse(mat_tok, nullptr, false);
        if (j.is_discarded()) throw SpecError("conj expects a JSON matrix");
        return conjugate_group(parse_group_spec(parts[0], R, n), matrix_from_json(j, R, n));
    }
    throw SpecError("unknown group spec '" + spec + "'");
}

}  // namespace froblab
