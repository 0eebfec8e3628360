#include "froblab/codes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace froblab {

namespace {

bool sorted_rank_contains(const std::vector<std::uint64_t>& ranks, std::uint64_t r) {
    return std::binary_search(ranks.begin(), ranks.end(), r);
}

}  // namespace

CodePtr Code::closure(Ring R, int n, std::vector<Vec> generators, std::uint64_t budget) {
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != n) throw SpecError("generator length mismatch");
    const std::uint64_t allowed = budget == 0 ? default_budget() : budget;

    std::set<std::uint64_t> ranks;
    std::vector<Vec> work;
    auto push = [&](const Vec& v) {
        if (ranks.insert(vec_rank(*R, v)).second) {
            work.push_back(v);
            if (ranks.size() > allowed) throw BudgetError("code_closure", ranks.size(), allowed);
        }
    };
    push(zero_vec(*R, n));
    for (const auto& g : generators) push(g);
    // Everything in the closure is reachable from 0 by repeatedly adding
    // scalar multiples of generators.
    for (std::size_t at = 0; at < work.size(); ++at) {
        const Vec x = work[at];
        for (const auto& g : generators)
            for (int r = 0; r < R->size(); ++r) push(add_vec(*R, x, scale_vec(*R, r, g)));
    }

    auto code = std::shared_ptr<Code>(new Code());
    code->ring_ = std::move(R);
    code->n_ = n;
    code->gens_ = std::move(generators);
    code->ranks_.assign(ranks.begin(), ranks.end());
    code->elements_.reserve(code->ranks_.size());
    for (std::uint64_t r : code->ranks_) code->elements_.push_back(vec_unrank(*code->ring_, n, r));
    return code;
}

bool Code::contains(const Vec& v) const { return sorted_rank_contains(ranks_, vec_rank(*ring_, v)); }

std::size_t Code::index_of(const Vec& v) const {
    const std::uint64_t r = vec_rank(*ring_, v);
    const auto it = std::lower_bound(ranks_.begin(), ranks_.end(), r);
    if (it == ranks_.end() || *it != r) throw SpecError("vector is not in the code");
    return static_cast<std::size_t>(it - ranks_.begin());
}

std::optional<LinearMap> LinearMap::build(CodePtr domain, std::vector<Vec> generator_images) {
    const FiniteRing& R = *domain->ring();
    const int n = domain->n();
    const auto& gens = domain->generators();
    if (generator_images.size() != gens.size()) throw SpecError("image count mismatch");
    for (const auto& y : generator_images)
        if (static_cast<int>(y.size()) != n) throw SpecError("image length mismatch");

    const std::size_t sz = domain->size();
    std::vector<Vec> images(sz);
    std::vector<char> known(sz, 0);
    std::vector<std::size_t> work;
    const std::size_t zero_idx = domain->index_of(zero_vec(R, n));
    images[zero_idx] = zero_vec(R, n);
    known[zero_idx] = 1;
    work.push_back(zero_idx);

    // Walk every edge x -> x + r*g_i of the closure graph; each edge forces
    // f(x + r*g_i) = f(x) + r*img_i, and a clash on an already-known value
    // means the generator images do not define a map.
    for (std::size_t at = 0; at < work.size(); ++at) {
        const std::size_t xi = work[at];
        const Vec x = domain->elements()[xi];
        const Vec fx = images[xi];
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (int r = 0; r < R.size(); ++r) {
                const Vec y = add_vec(R, x, scale_vec(R, r, gens[i]));
                const Vec fy = add_vec(R, fx, scale_vec(R, r, generator_images[i]));
                const std::size_t yi = domain->index_of(y);
                if (known[yi]) {
                    if (images[yi] != fy) return std::nullopt;
                } else {
                    images[yi] = fy;
                    known[yi] = 1;
                    work.push_back(yi);
                }
            }
    }
    for (char k : known)
        if (!k) throw InternalError("closure walk missed a code element");

    // f(x+y) = f(x)+f(y) and f(rx) = r f(x) over the whole table.
    for (std::size_t a = 0; a < sz; ++a) {
        const Vec& xa = domain->elements()[a];
        for (std::size_t b = 0; b <= a; ++b) {
            const Vec s = add_vec(R, xa, domain->elements()[b]);
            if (images[domain->index_of(s)] != add_vec(R, images[a], images[b]))
                return std::nullopt;
        }
        for (int r = 0; r < R.size(); ++r) {
            const Vec rx = scale_vec(R, r, xa);
            if (images[domain->index_of(rx)] != scale_vec(R, r, images[a])) return std::nullopt;
        }
    }

    LinearMap f;
    f.domain_ = std::move(domain);
    f.gen_images_ = std::move(generator_images);
    f.images_ = std::move(images);
    return f;
}

bool LinearMap::injective() const {
    std::set<std::uint64_t> seen;
    for (const auto& y : images_)
        if (!seen.insert(vec_rank(*domain_->ring(), y)).second) return false;
    return true;
}

CodePtr LinearMap::image_code() const {
    return Code::closure(domain_->ring(), domain_->n(), gen_images_);
}

LinearMap LinearMap::inverse() const {
    if (!injective()) throw SpecError("inverse of a non-injective map");
    CodePtr img = image_code();
    if (img->size() != domain_->size()) throw InternalError("image closure size mismatch");
    auto inv = LinearMap::build(img, domain_->generators());
    if (!inv) throw InternalError("inverse assignment is ill-defined");
    return *inv;
}

LocalCheck is_local_u_map(const LinearMap& f, const MatrixGroup& U) {
    LocalCheck out;
    const FiniteRing& R = *f.domain()->ring();
    out.witnesses.reserve(f.domain()->size());
    for (std::size_t i = 0; i < f.domain()->size(); ++i) {
        const Vec& x = f.domain()->elements()[i];
        const Vec& fx = f.image_at(i);
        bool found = false;
        for (const auto& M : U.elements())
            if (mul_row_matrix(R, x, M) == fx) {
                out.witnesses.push_back(M);
                found = true;
                break;
            }
        if (!found) {
            out.local = false;
            out.failing = x;
            out.witnesses.clear();
            return out;
        }
    }
    out.local = true;
    return out;
}

std::optional<RingMatrix> is_global_u_map(const LinearMap& f, const MatrixGroup& U) {
    const FiniteRing& R = *f.domain()->ring();
    const auto& gens = f.domain()->generators();
    const auto& imgs = f.generator_images();
    for (const auto& M : U.elements()) {
        bool ok = true;
        for (std::size_t i = 0; i < gens.size() && ok; ++i)
            ok = mul_row_matrix(R, gens[i], M) == imgs[i];
        if (ok) return M;
    }
    return std::nullopt;
}

WeightCheck preserves_weight(const LinearMap& f, const WeightSpec& w) {
    WeightCheck out;
    for (std::size_t i = 0; i < f.domain()->size(); ++i) {
        const Vec& x = f.domain()->elements()[i];
        if (!(w.fn(x) == w.fn(f.image_at(i)))) {
            out.preserved = false;
            out.violator = x;
            return out;
        }
    }
    return out;
}

std::vector<std::vector<Vec>> column_solution_sets(const LinearMap& f, std::uint64_t budget) {
    const FiniteRing& R = *f.domain()->ring();
    const int n = f.domain()->n();
    const auto& gens = f.domain()->generators();
    const auto& imgs = f.generator_images();
    const std::uint64_t cands = power_u64(static_cast<std::uint64_t>(R.size()), n);
    check_budget("column_solution_sets", cands * static_cast<std::uint64_t>(n), budget);
    std::vector<std::vector<Vec>> out(n);
    for (int j = 0; j < n; ++j)
        for (std::uint64_t c = 0; c < cands; ++c) {
            const Vec m = vec_unrank(R, n, c);
            bool ok = true;
            for (std::size_t g = 0; g < gens.size() && ok; ++g)
                ok = dot(R, gens[g], m) == imgs[g][j];
            if (ok) out[j].push_back(m);
        }
    return out;
}

namespace {

// Shared filter pass for extension_search / extension_exists.
template <typename Sink>
void search_extensions(const LinearMap& f, const WeightSpec& w, std::uint64_t budget, Sink&& sink) {
    const Ring& ring = f.domain()->ring();
    const FiniteRing& R = *ring;
    const int n = f.domain()->n();
    const auto sets = column_solution_sets(f, budget);
    for (const auto& s : sets)
        if (s.empty()) return;
    std::uint64_t combos = 1;
    for (const auto& s : sets) {
        combos *= s.size();
        check_budget("extension_search", combos, budget);
    }
    const std::uint64_t universe = power_u64(static_cast<std::uint64_t>(R.size()), n);
    check_budget("extension_search", combos * universe, budget);

    std::vector<WeightValue> target;
    std::vector<Vec> all;
    target.reserve(universe);
    all.reserve(universe);
    for (std::uint64_t v = 0; v < universe; ++v) {
        all.push_back(vec_unrank(R, n, v));
        target.push_back(w.fn(all.back()));
    }

    std::vector<std::size_t> pick(n, 0);
    while (true) {
        RingMatrix M(ring, n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) M.set(i, j, sets[j][pick[j]][i]);
        bool ok = true;
        for (std::uint64_t v = 0; v < universe && ok; ++v)
            ok = target[v] == w.fn(mul_row_matrix(R, all[v], M));
        if (ok && is_invertible(M)) {
            if (!sink(M)) return;
        }
        int j = n - 1;
        while (j >= 0 && pick[j] == sets[j].size() - 1) pick[j--] = 0;
        if (j < 0) break;
        ++pick[j];
    }
}

}  // namespace

std::vector<RingMatrix> extension_search(const LinearMap& f, const WeightSpec& w,
                                         std::uint64_t budget) {
    std::vector<RingMatrix> out;
    search_extensions(f, w, budget, [&](const RingMatrix& M) {
        out.push_back(M);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<RingMatrix> extension_exists(const LinearMap& f, const WeightSpec& w,
                                           std::uint64_t budget) {
    std::optional<RingMatrix> out;
    search_extensions(f, w, budget, [&](const RingMatrix& M) {
        out = M;
        return false;
    });
    return out;
}

std::vector<RingMatrix> extension_search_group(const LinearMap& f, const MatrixGroup& U) {
    const FiniteRing& R = *f.domain()->ring();
    const auto& gens = f.domain()->generators();
    const auto& imgs = f.generator_images();
    std::vector<RingMatrix> out;
    for (const auto& M : U.elements()) {
        bool ok = true;
        for (std::size_t i = 0; i < gens.size() && ok; ++i)
            ok = mul_row_matrix(R, gens[i], M) == imgs[i];
        if (ok) out.push_back(M);
    }
    return out;
}

std::optional<RingMatrix> find_weight_extension(const LinearMap& f, const WeightSpec& w) {
    const Ring& ring = f.domain()->ring();
    const FiniteRing& R = *ring;
    const int n = f.domain()->n();
    const std::uint64_t universe = power_u64(static_cast<std::uint64_t>(R.size()), n);

    // Candidate images per basis vector: the weight class of e_i.
    std::vector<std::vector<Vec>> cand(n);
    {
        std::vector<Vec> all;
        all.reserve(universe);
        for (std::uint64_t v = 0; v < universe; ++v) all.push_back(vec_unrank(R, n, v));
        for (int i = 0; i < n; ++i) {
            const WeightValue wi = w.fn(unit_vec(R, n, i));
            for (const auto& v : all)
                if (w.fn(v) == wi) cand[i].push_back(v);
        }
    }

    // combos[d] after assigning rows 0..d-1: all pairs (u, uM) with
    // supp(u) inside the assigned prefix.
    std::vector<std::vector<std::pair<Vec, Vec>>> combos(n + 1);
    combos[0].emplace_back(zero_vec(R, n), zero_vec(R, n));
    std::vector<Vec> rows(n);

    std::function<std::optional<RingMatrix>(int)> descend = [&](int depth) -> std::optional<RingMatrix> {
        if (depth == n) {
            std::vector<int> entries;
            entries.reserve(static_cast<std::size_t>(n) * n);
            for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
            RingMatrix M(ring, n, n, std::move(entries));
            if (is_invertible(M)) return M;
            return std::nullopt;
        }
        for (const Vec& rho : cand[depth]) {
            rows[depth] = rho;
            auto& next = combos[depth + 1];
            next = combos[depth];
            bool ok = true;
            for (const auto& [u, uM] : combos[depth]) {
                for (int c = 0; c < R.size() && ok; ++c) {
                    if (c == R.zero()) continue;
                    Vec u2 = u;
                    u2[depth] = R.add(u2[depth], c);
                    const Vec uM2 = add_vec(R, uM, scale_vec(R, c, rho));
                    if (!(w.fn(u2) == w.fn(uM2))) {
                        ok = false;
                        break;
                    }
                    if (f.domain()->contains(u2) && f.image_of(u2) != uM2) {
                        ok = false;
                        break;
                    }
                    next.emplace_back(std::move(u2), uM2);
                }
                if (!ok) break;
            }
            if (!ok) continue;
            if (auto M = descend(depth + 1)) return M;
        }
        return std::nullopt;
    };
    return descend(0);
}

std::vector<CodePtr> enumerate_codes(const Ring& R, int n, const ScanLimits& limits,
                                     std::uint64_t budget) {
    const std::uint64_t universe = power_u64(static_cast<std::uint64_t>(R->size()), n);
    std::uint64_t tuples = 0, pw = 1;
    for (int k = 1; k <= limits.max_code_generators; ++k) {
        pw *= universe;
        tuples += pw;
    }
    check_budget("enumerate_codes", tuples, budget);

    std::vector<CodePtr> out;
    std::set<std::vector<std::uint64_t>> seen;
    for (int k = 1; k <= limits.max_code_generators; ++k) {
        std::vector<std::uint64_t> tup(k, 0);
        while (true) {
            // Unordered generating sets: only nondecreasing tuples.
            bool nondecreasing = true;
            for (int i = 0; i + 1 < k; ++i)
                if (tup[i] > tup[i + 1]) nondecreasing = false;
            if (nondecreasing) {
                std::vector<Vec> gens;
                gens.reserve(k);
                for (std::uint64_t t : tup) gens.push_back(vec_unrank(*R, n, t));
                try {
                    CodePtr c = Code::closure(R, n, std::move(gens), limits.max_code_size);
                    if (c->size() <= limits.max_code_size && seen.insert(c->ranks()).second)
                        out.push_back(std::move(c));
                } catch (const BudgetError&) {
                    // closure larger than max_code_size; skip
                }
            }
            int i = k - 1;
            while (i >= 0 && tup[i] == universe - 1) tup[i--] = 0;
            if (i < 0) break;
            ++tup[i];
        }
    }
    return out;
}

ScanResult local_global_scan(const Ring& R, int n, const MatrixGroup& U, const ScanLimits& limits,
                             std::uint64_t budget) {
    ScanResult res;
    const std::uint64_t allowed = budget == 0 ? default_budget() : budget;
    const FiniteRing& ring = *R;
    std::vector<CodePtr> codes;
    try {
        codes = enumerate_codes(R, n, limits, budget);
    } catch (const BudgetError&) {
        res.complete = false;
        return res;
    }
    res.codes = codes.size();

    for (const CodePtr& code : codes) {
        // Candidate images per generator: its right U-orbit.
        std::vector<std::vector<Vec>> orbits;
        for (const auto& g : code->generators()) {
            std::set<std::uint64_t> seen;
            std::vector<Vec> orb;
            for (const auto& M : U.elements()) {
                Vec y = mul_row_matrix(ring, g, M);
                if (seen.insert(vec_rank(ring, y)).second) orb.push_back(std::move(y));
            }
            std::sort(orb.begin(), orb.end());
            orbits.push_back(std::move(orb));
        }
        std::uint64_t total = 1;
        for (const auto& o : orbits) total *= o.size();
        if (res.assignments + total > allowed) {
            res.complete = false;
            return res;
        }

        std::vector<std::size_t> pick(orbits.size(), 0);
        while (true) {
            ++res.assignments;
            std::vector<Vec> images;
            images.reserve(orbits.size());
            for (std::size_t i = 0; i < orbits.size(); ++i) images.push_back(orbits[i][pick[i]]);
            if (auto f = LinearMap::build(code, std::move(images))) {
                ++res.linear_maps;
                const LocalCheck lc = is_local_u_map(*f, U);
                if (lc.local) {
                    ++res.local_maps;
                    if (!f->injective()) throw InternalError("local map is not injective");
                    if (!is_local_u_map(f->inverse(), U).local)
                        throw InternalError("inverse of a local map is not local");
                    if (!is_global_u_map(*f, U)) {
                        res.holds = false;
                        ScanCounterexample ce;
                        ce.code_generators = code->generators();
                        ce.images = f->generator_images();
                        ce.code_size = code->size();
                        ce.local_witnesses = lc.witnesses;
                        ce.searched_group_order = U.order();
                        res.counterexample = std::move(ce);
                        return res;
                    }
                }
            }
            int i = static_cast<int>(orbits.size()) - 1;
            while (i >= 0 && pick[i] == orbits[i].size() - 1) pick[i--] = 0;
            if (i < 0) break;
            ++pick[i];
        }
    }
    return res;
}

std::vector<LinearMap> enumerate_weight_isometries(const CodePtr& C, const CodePtr& Cp,
                                                   const WeightSpec& w) {
    std::vector<LinearMap> out;
    if (C->size() != Cp->size()) return out;
    const auto& gens = C->generators();
    std::vector<std::vector<Vec>> cand(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const WeightValue wi = w.fn(gens[i]);
        for (const auto& y : Cp->elements())
            if (w.fn(y) == wi) cand[i].push_back(y);
        if (cand[i].empty()) return out;
    }
    std::vector<std::size_t> pick(gens.size(), 0);
    while (true) {
        std::vector<Vec> images;
        images.reserve(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) images.push_back(cand[i][pick[i]]);
        if (auto f = LinearMap::build(C, std::move(images))) {
            if (f->injective() && preserves_weight(*f, w).preserved) {
                // Onto Cp: the image generators must regenerate Cp.
                bool onto = true;
                for (const auto& y : f->images())
                    if (!Cp->contains(y)) onto = false;
                if (onto && f->image_code()->size() == Cp->size()) out.push_back(std::move(*f));
            }
        }
        int i = static_cast<int>(gens.size()) - 1;
        while (i >= 0 && pick[i] == cand[i].size() - 1) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return out;
}

std::vector<LinearMap> weight_preserving_maps_into(const CodePtr& C, const WeightSpec& w) {
    const FiniteRing& R = *C->ring();
    const int n = C->n();
    const std::uint64_t universe = power_u64(static_cast<std::uint64_t>(R.size()), n);
    std::vector<Vec> all;
    all.reserve(universe);
    for (std::uint64_t v = 0; v < universe; ++v) all.push_back(vec_unrank(R, n, v));
    const auto& gens = C->generators();
    std::vector<std::vector<Vec>> cand(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const WeightValue wi = w.fn(gens[i]);
        for (const auto& y : all)
            if (w.fn(y) == wi) cand[i].push_back(y);
        if (cand[i].empty()) return {};
    }
    std::vector<LinearMap> out;
    std::vector<std::size_t> pick(gens.size(), 0);
    while (true) {
        std::vector<Vec> images;
        images.reserve(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) images.push_back(cand[i][pick[i]]);
        if (auto f = LinearMap::build(C, std::move(images)))
            if (f->injective() && preserves_weight(*f, w).preserved) out.push_back(std::move(*f));
        int i = static_cast<int>(gens.size()) - 1;
        while (i >= 0 && pick[i] == cand[i].size() - 1) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return out;
}

LinearMap restrict_matrix(const CodePtr& C, const RingMatrix& A) {
    const FiniteRing& R = *C->ring();
    std::vector<Vec> images;
    images.reserve(C->generators().size());
    for (const auto& g : C->generators()) images.push_back(mul_row_matrix(R, g, A));
    auto f = LinearMap::build(C, std::move(images));
    if (!f) throw InternalError("matrix restriction is ill-defined");
    return *f;
}

}  // namespace froblab
