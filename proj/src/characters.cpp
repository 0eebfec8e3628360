#include "froblab/characters.hpp"

#include <algorithm>
#include <map>

namespace froblab {

namespace {

// Generator search for (R, +): pick elements of maximal remaining order whose
// cyclic span meets the current span only in 0, with backtracking. The result
// is validated by the tuple-enumeration bijection below, which makes the
// search internals irrelevant for correctness.
struct PeelSearch {
    const FiniteRing& R;
    std::vector<int> order;                  // additive order per element
    std::vector<int> cands;                  // sorted by (order desc, index asc)
    std::vector<std::vector<int>> multiple;  // multiple[a][c] = c*a

    explicit PeelSearch(const FiniteRing& r) : R(r) {
        order.resize(R.size());
        multiple.resize(R.size());
        for (int a = 0; a < R.size(); ++a) {
            order[a] = R.additive_order(a);
            multiple[a].resize(order[a]);
            int acc = R.zero();
            for (int c = 0; c < order[a]; ++c) {
                multiple[a][c] = acc;
                acc = R.add(acc, a);
            }
        }
        for (int a = 0; a < R.size(); ++a)
            if (a != R.zero()) cands.push_back(a);
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            if (order[a] != order[b]) return order[a] > order[b];
            return a < b;
        });
    }

    // Enumerates all coordinate tuples for gens+orders; returns false on a
    // span collision, otherwise fills coords (element -> tuple).
    bool span_bijective(const std::vector<int>& gens, const std::vector<int>& ords,
                        std::vector<std::vector<int>>* coords_out) const {
        const int k = static_cast<int>(gens.size());
        std::uint64_t total = 1;
        for (int d : ords) total *= static_cast<std::uint64_t>(d);
        std::vector<std::vector<int>> coords(R.size());
        std::vector<int> tup(k, 0);
        for (std::uint64_t it = 0; it < total; ++it) {
            int elem = R.zero();
            for (int i = 0; i < k; ++i) elem = R.add(elem, multiple[gens[i]][tup[i]]);
            if (!coords[elem].empty() && !(elem == R.zero() && it == 0)) return false;
            coords[elem] = tup;
            int i = k - 1;
            while (i >= 0 && tup[i] == ords[i] - 1) tup[i--] = 0;
            if (i >= 0) ++tup[i];
        }
        if (coords_out) *coords_out = std::move(coords);
        return true;
    }

    bool extend(std::vector<int>& gens, std::vector<int>& ords) const {
        std::uint64_t prod = 1;
        for (int d : ords) prod *= static_cast<std::uint64_t>(d);
        if (prod == static_cast<std::uint64_t>(R.size())) return true;
        const int prev = ords.empty() ? 0 : ords.back();
        for (int g : cands) {
            const int og = order[g];
            if (prev != 0 && (og > prev || prev % og != 0)) continue;
            if (prod * static_cast<std::uint64_t>(og) > static_cast<std::uint64_t>(R.size()))
                continue;
            gens.push_back(g);
            ords.push_back(og);
            if (span_bijective(gens, ords, nullptr) && extend(gens, ords)) return true;
            gens.pop_back();
            ords.pop_back();
        }
        return false;
    }
};

}  // namespace

Decomposition AbelianDecomposition::of_ring_power(Ring R, int n) {
    if (n < 1) throw SpecError("decomposition requires n >= 1");
    PeelSearch search(*R);
    std::vector<int> gens, ords;
    if (!search.extend(gens, ords))
        throw InternalError("no cyclic decomposition found for (" + R->name() + ", +)");
    // Collected with descending orders; store ascending so the orders form a
    // divisibility chain d_1 | d_2 | ... | d_k. Coordinates are rebuilt for
    // the reversed generator list.
    std::reverse(gens.begin(), gens.end());
    std::reverse(ords.begin(), ords.end());
    std::vector<std::vector<int>> coords;
    if (!search.span_bijective(gens, ords, &coords))
        throw InternalError("coordinate map is not bijective");

    auto dec = std::shared_ptr<AbelianDecomposition>(new AbelianDecomposition());
    dec->ring_ = std::move(R);
    dec->n_ = n;
    dec->ring_orders_ = ords;
    dec->ring_gens_ = gens;
    dec->coords_ = std::move(coords);
    for (int d : ords)
        for (int i = 0; i < n; ++i) dec->orders_.push_back(d);
    return dec;
}

std::uint64_t AbelianDecomposition::group_size() const {
    std::uint64_t s = 1;
    for (int d : orders_) s *= static_cast<std::uint64_t>(d);
    return s;
}

Vec AbelianDecomposition::generator(int i) const {
    const int k = static_cast<int>(ring_orders_.size());
    const int factor = i / n_;
    const int slot = i % n_;
    if (factor < 0 || factor >= k) throw SpecError("generator index out of range");
    Vec out(n_, ring_->zero());
    out[slot] = ring_gens_[factor];
    return out;
}

std::vector<int> AbelianDecomposition::coordinates(std::span<const int> x) const {
    if (static_cast<int>(x.size()) != n_) throw SpecError("vector length mismatch");
    const int k = static_cast<int>(ring_orders_.size());
    std::vector<int> out(static_cast<std::size_t>(k) * n_);
    for (int i = 0; i < n_; ++i) {
        const auto& c = coords_[x[i]];
        for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(j) * n_ + i] = c[j];
    }
    return out;
}

Character::Character(Decomposition dec, std::vector<int> exponents)
    : dec_(std::move(dec)), exps_(std::move(exponents)) {
    if (static_cast<int>(exps_.size()) != dec_->factor_count())
        throw SpecError("character exponent count mismatch");
    for (int i = 0; i < dec_->factor_count(); ++i) {
        const int d = dec_->orders()[i];
        if (exps_[i] < 0 || exps_[i] >= d) throw SpecError("character exponent out of range");
    }
}

int Character::exponent_at(std::span<const int> x) const {
    const auto coords = dec_->coordinates(x);
    const int m = dec_->exponent();
    long long acc = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const long long w = m / dec_->orders()[i];
        acc += static_cast<long long>(exps_[i]) * coords[i] % m * w;
    }
    return static_cast<int>(((acc % m) + m) % m);
}

int Character::exponent_at_element(int ring_element) const {
    if (dec_->n() != 1) throw SpecError("element form requires a rank-1 decomposition");
    const int x[1] = {ring_element};
    return exponent_at(x);
}

CyclotomicSum Character::value(std::span<const int> x) const {
    return CyclotomicSum::root_power(dec_->exponent(), exponent_at(x));
}

bool Character::is_trivial() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Character::operator==(const Character& o) const {
    return dec_->ring() == o.dec_->ring() && dec_->n() == o.dec_->n() &&
           dec_->orders() == o.dec_->orders() && exps_ == o.exps_;
}

std::vector<Character> all_characters(const Decomposition& dec) {
    const std::uint64_t total = dec->group_size();
    check_budget("all_characters", total);
    std::vector<Character> out;
    out.reserve(total);
    std::vector<int> exps(dec->factor_count(), 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        out.emplace_back(dec, exps);
        int i = dec->factor_count() - 1;
        while (i >= 0 && exps[i] == dec->orders()[i] - 1) exps[i--] = 0;
        if (i >= 0) ++exps[i];
    }
    return out;
}

Character act(int r, const Character& chi, ActionSide side) {
    const auto& dec = chi.decomposition();
    const FiniteRing& R = *dec->ring();
    const int m = dec->exponent();
    std::vector<int> exps(dec->factor_count());
    Vec arg(dec->n(), R.zero());
    for (int i = 0; i < dec->factor_count(); ++i) {
        const Vec g = dec->generator(i);
        for (int s = 0; s < dec->n(); ++s)
            arg[s] = side == ActionSide::Left ? R.mul(g[s], r) : R.mul(r, g[s]);
        const int t = chi.exponent_at(arg);
        const int w = m / dec->orders()[i];
        if (t % w != 0) throw InternalError("character action produced a non-character");
        exps[i] = (t / w) % dec->orders()[i];
    }
    return Character(dec, std::move(exps));
}

bool is_generating(const Character& chi) {
    const auto& dec = chi.decomposition();
    if (dec->n() != 1) throw SpecError("generating characters live on (R, +)");
    const FiniteRing& R = *dec->ring();

    // Injectivity of r -> r*chi.
    std::vector<std::vector<int>> images;
    images.reserve(R.size());
    for (int r = 0; r < R.size(); ++r) images.push_back(act(r, chi, ActionSide::Left).exponents());
    std::vector<std::vector<int>> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    // Kernel criterion: ker chi contains no nonzero principal one-sided ideal.
    bool kernel_free = true;
    auto in_kernel = [&](int a) { return chi.exponent_at_element(a) == 0; };
    for (int a = 0; a < R.size() && kernel_free; ++a) {
        if (a == R.zero() || !in_kernel(a)) continue;
        bool left_inside = true, right_inside = true;
        for (int r = 0; r < R.size(); ++r) {
            if (!in_kernel(R.mul(r, a))) left_inside = false;
            if (!in_kernel(R.mul(a, r))) right_inside = false;
            if (!left_inside && !right_inside) break;
        }
        if (left_inside || right_inside) kernel_free = false;
    }

    if (injective != kernel_free)
        throw InternalError("generating-character criteria disagree for " + R.name());
    return injective;
}

std::vector<Character> all_generating_characters(const Ring& R) {
    const Decomposition dec = AbelianDecomposition::of_ring_power(R, 1);
    std::vector<Character> out;
    for (const Character& chi : all_characters(dec))
        if (is_generating(chi)) out.push_back(chi);
    return out;
}

std::optional<Character> find_generating_character(const Ring& R) {
    const Decomposition dec = AbelianDecomposition::of_ring_power(R, 1);
    for (const Character& chi : all_characters(dec))
        if (is_generating(chi)) return chi;
    return std::nullopt;
}

bool is_frobenius(const Ring& R) { return find_generating_character(R).has_value(); }

Character alpha(const Character& chi, std::span<const int> x, ActionSide side,
                const Decomposition& dec_n) {
    if (!is_generating(chi)) throw SpecError("alpha requires a generating character");
    if (dec_n->ring() != chi.decomposition()->ring()) throw SpecError("decomposition ring mismatch");
    const FiniteRing& R = *dec_n->ring();
    if (static_cast<int>(x.size()) != dec_n->n()) throw SpecError("vector length mismatch");
    const int m = dec_n->exponent();
    std::vector<int> exps(dec_n->factor_count());
    for (int i = 0; i < dec_n->factor_count(); ++i) {
        const Vec g = dec_n->generator(i);
        // Single-slot generator: <g, x> and <x, g> reduce to one product.
        int slot = 0;
        for (int s = 0; s < dec_n->n(); ++s)
            if (g[s] != R.zero()) slot = s;
        const int prod = side == ActionSide::Left ? R.mul(g[slot], x[slot]) : R.mul(x[slot], g[slot]);
        const int t = chi.exponent_at_element(prod);
        const int w = m / dec_n->orders()[i];
        if (t % w != 0) throw InternalError("alpha produced a non-character");
        exps[i] = (t / w) % dec_n->orders()[i];
    }
    return Character(dec_n, std::move(exps));
}

CyclotomicSum cyclo_sum(int m, std::span<const int> exponents) {
    return CyclotomicSum::from_exponents(m, exponents);
}

}  // namespace froblab
