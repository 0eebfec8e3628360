#include "froblab/weights.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "froblab/groups.hpp"
#include "froblab/parse_util.hpp"

namespace froblab {

// ---------------------------------------------------------------- posets ----

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& less_than) {
    if (n < 1) throw SpecError("poset needs at least one element");
    std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
    for (auto [i, j] : less_than) {
        if (i < 0 || j < 0 || i >= n || j >= n) throw SpecError("poset relation out of range");
        leq[static_cast<std::size_t>(i) * n + j] = 1;
    }
    // Transitive closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (leq[static_cast<std::size_t>(i) * n + k] &&
                    leq[static_cast<std::size_t>(k) * n + j])
                    leq[static_cast<std::size_t>(i) * n + j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (leq[static_cast<std::size_t>(i) * n + j] &&
                leq[static_cast<std::size_t>(j) * n + i])
                throw SpecError("relations contain a cycle (antisymmetry fails)");
    return Poset(n, std::move(leq));
}

Poset Poset::parse(const std::string& text) {
    int n = -1;
    std::vector<std::pair<int, int>> rels;
    for (std::string tok : split_top_level(text, ';')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                  tok.end());
        if (tok.empty()) continue;
        if (tok.rfind("n=", 0) == 0) {
            n = parse_int_strict(tok.substr(2), "poset size");
            continue;
        }
        const auto lt = tok.find('<');
        if (lt == std::string::npos) throw SpecError("bad poset clause '" + tok + "'");
        const int a = parse_int_strict(tok.substr(0, lt), "poset relation");
        const int b = parse_int_strict(tok.substr(lt + 1), "poset relation");
        rels.emplace_back(a - 1, b - 1);  // text is 1-based
    }
    if (n < 1) throw SpecError("poset text must declare n=<count>");
    return from_relations(n, rels);
}

Poset Poset::anti_chain(int n) { return from_relations(n, {}); }

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i + 1 < n; ++i) rels.emplace_back(i, i + 1);
    return from_relations(n, rels);
}

Poset Poset::disjoint_chains(int t, int len) {
    std::vector<std::pair<int, int>> rels;
    for (int c = 0; c < t; ++c)
        for (int i = 0; i + 1 < len; ++i) rels.emplace_back(c * len + i, c * len + i + 1);
    return from_relations(t * len, rels);
}

Poset Poset::hierarchical(const std::vector<int>& level_sizes) {
    const int n = std::accumulate(level_sizes.begin(), level_sizes.end(), 0);
    std::vector<std::pair<int, int>> rels;
    int lo = 0;
    for (std::size_t l = 0; l + 1 < level_sizes.size(); ++l) {
        const int mid = lo + level_sizes[l];
        const int hi = mid + level_sizes[l + 1];
        for (int i = lo; i < mid; ++i)
            for (int j = mid; j < hi; ++j) rels.emplace_back(i, j);
        lo = mid;
    }
    return from_relations(n, rels);
}

std::vector<int> Poset::ideal_of(std::span<const int> S) const {
    std::vector<char> in(n_, 0);
    for (int i : S) {
        if (i < 0 || i >= n_) throw SpecError("ideal seed out of range");
        for (int j = 0; j < n_; ++j)
            if (leq(j, i)) in[j] = 1;
    }
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (in[j]) out.push_back(j);
    return out;
}

std::string Poset::to_text() const {
    std::string s = "n=" + std::to_string(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (less(i, j)) s += "; " + std::to_string(i + 1) + "<" + std::to_string(j + 1);
    return s;
}

std::vector<char> Poset::canonical_key() const {
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> best;
    do {
        std::vector<char> key(static_cast<std::size_t>(n_) * n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (leq(i, j)) key[static_cast<std::size_t>(perm[i]) * n_ + perm[j]] = 1;
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Poset> enumerate_posets(int n, bool up_to_iso) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    check_budget("enumerate_posets", total);
    std::vector<Poset> out;
    std::set<std::vector<char>> seen;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask & (std::uint64_t{1} << b))
                leq[static_cast<std::size_t>(pairs[b].first) * n + pairs[b].second] = 1;
        // Must already be transitive and antisymmetric.
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (i != j && leq[static_cast<std::size_t>(i) * n + j] &&
                    leq[static_cast<std::size_t>(j) * n + i])
                    ok = false;
                if (!leq[static_cast<std::size_t>(i) * n + j]) continue;
                for (int k = 0; k < n; ++k)
                    if (leq[static_cast<std::size_t>(j) * n + k] &&
                        !leq[static_cast<std::size_t>(i) * n + k])
                        ok = false;
            }
        if (!ok) continue;
        std::vector<std::pair<int, int>> rels;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && leq[static_cast<std::size_t>(i) * n + j]) rels.emplace_back(i, j);
        Poset P = Poset::from_relations(n, rels);
        if (up_to_iso && !seen.insert(P.canonical_key()).second) continue;
        out.push_back(std::move(P));
    }
    return out;
}

// ------------------------------------------------------------- rationals ----

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw SpecError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

// ----------------------------------------------------------- weight value ----

WeightValue WeightValue::integer(long long v) {
    WeightValue w;
    w.v_ = v;
    return w;
}

WeightValue WeightValue::rational(Rational v) {
    WeightValue w;
    w.v_ = v;
    return w;
}

WeightValue WeightValue::vector(std::vector<long long> v) {
    WeightValue w;
    w.v_ = std::move(v);
    return w;
}

WeightValue WeightValue::multiset(std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    WeightValue w;
    w.v_ = std::make_pair(3, std::move(v));
    return w;
}

std::string WeightValue::to_string() const {
    struct Printer {
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(const Rational& v) const { return v.to_string(); }
        std::string operator()(const std::vector<long long>& v) const {
            std::string s = "(";
            for (std::size_t i = 0; i < v.size(); ++i)
                s += std::to_string(v[i]) + (i + 1 < v.size() ? "," : "");
            return s + ")";
        }
        std::string operator()(const std::pair<int, std::vector<long long>>& v) const {
            std::string s = "{";
            for (std::size_t i = 0; i < v.second.size(); ++i)
                s += std::to_string(v.second[i]) + (i + 1 < v.second.size() ? "," : "");
            return s + "}";
        }
    };
    return std::visit(Printer{}, v_);
}

// -------------------------------------------------------- weight functions ----

int wt_hamming(const FiniteRing& R, std::span<const int> x) {
    int w = 0;
    for (int v : x)
        if (v != R.zero()) ++w;
    return w;
}

int wt_rt(const FiniteRing& R, std::span<const int> x) {
    for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i)
        if (x[i] != R.zero()) return i + 1;
    return 0;
}

std::vector<int> support(const FiniteRing& R, std::span<const int> x) {
    std::vector<int> s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != R.zero()) s.push_back(static_cast<int>(i));
    return s;
}

int wt_poset(const Poset& P, const FiniteRing& R, std::span<const int> x) {
    if (static_cast<int>(x.size()) != P.n()) throw SpecError("vector length differs from poset size");
    return static_cast<int>(P.ideal_of(support(R, x)).size());
}

Rational homogeneous_value(const Character& chi, int r) {
    const FiniteRing& R = *chi.decomposition()->ring();
    std::vector<int> exps;
    for (int u = 0; u < R.size(); ++u)
        if (R.is_unit(u)) exps.push_back(chi.exponent_at_element(R.mul(r, u)));
    const CyclotomicSum s = cyclo_sum(chi.order(), exps);
    if (!s.is_integer())
        throw InternalError("unit character sum is not a rational integer");
    return Rational(static_cast<long long>(exps.size()) - s.integer_value(),
                    static_cast<long long>(exps.size()));
}

Rational wt_homogeneous(const Character& chi, std::span<const int> x) {
    if (!is_generating(chi)) throw SpecError("homogeneous weight requires a generating character");
    Rational acc(0);
    for (int v : x) acc = acc + homogeneous_value(chi, v);
    return acc;
}

HomogeneousAxiomsReport check_homogeneous_axioms(const Character& chi) {
    HomogeneousAxiomsReport rep;
    const FiniteRing& R = *chi.decomposition()->ring();
    if (!is_generating(chi)) throw SpecError("homogeneous weight requires a generating character");
    std::vector<Rational> w(R.size());
    for (int r = 0; r < R.size(); ++r) w[r] = homogeneous_value(chi, r);
    if (!(w[R.zero()] == Rational(0))) {
        rep.pass = false;
        rep.failures.push_back("weight of 0 is nonzero");
    }
    auto principal_left = [&](int x) {
        std::set<int> s;
        for (int r = 0; r < R.size(); ++r) s.insert(R.mul(r, x));
        return s;
    };
    for (int x = 0; x < R.size(); ++x) {
        const auto Rx = principal_left(x);
        for (int y = 0; y < R.size(); ++y)
            if (principal_left(y) == Rx && !(w[x] == w[y])) {
                rep.pass = false;
                rep.failures.push_back("not constant on generators of " + R.element_name(x) +
                                       "'s principal ideal");
            }
        if (x == R.zero()) continue;
        Rational sum(0);
        for (int y : Rx) sum = sum + w[y];
        if (!(sum == Rational(static_cast<long long>(Rx.size())))) {
            rep.pass = false;
            rep.failures.push_back("average over R*" + R.element_name(x) + " is not 1");
        }
    }
    return rep;
}

std::vector<std::vector<int>> unit_orbits(const FiniteRing& R, const std::vector<int>& U) {
    const auto subgroup = validate_unit_subgroup(R, U);
    std::vector<int> orbit_of(R.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (int r = 0; r < R.size(); ++r) {
        if (orbit_of[r] >= 0) continue;
        std::vector<int> orb;
        for (int u : subgroup) {
            const int y = R.mul(r, u);
            if (orbit_of[y] < 0) {
                orbit_of[y] = static_cast<int>(orbits.size());
                orb.push_back(y);
            }
        }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

std::vector<long long> comp_vector(const FiniteRing& R, const std::vector<int>& U,
                                   std::span<const int> x) {
    const auto orbits = unit_orbits(R, U);
    std::vector<int> orbit_of(R.size());
    for (std::size_t o = 0; o < orbits.size(); ++o)
        for (int r : orbits[o]) orbit_of[r] = static_cast<int>(o);
    std::vector<long long> counts(orbits.size(), 0);
    for (int v : x) ++counts[orbit_of[v]];
    return counts;
}

WeightProfiles weight_profiles(const std::vector<int>& block_sizes,
                               const std::function<long long(std::span<const int>)>& block_weight,
                               std::span<const int> x) {
    const int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
    if (static_cast<int>(x.size()) != total) throw SpecError("vector length differs from block sum");
    WeightProfiles out;
    int at = 0;
    for (int b : block_sizes) {
        out.list.push_back(block_weight(x.subspan(at, b)));
        at += b;
    }
    out.symmetrized = out.list;
    std::sort(out.symmetrized.begin(), out.symmetrized.end());
    return out;
}

int wt_rank(const RingMatrix& A) { return field_rank(A); }

namespace {

// Validated digit map for gf-constructed fields: index base-q digits must be
// additive coordinates over the prime field.
void validate_digit_map(int q, int m, const FiniteRing& Fqm) {
    bool prime = q >= 2;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) prime = false;
    if (!prime) throw SpecError("rank-ext base must be prime");
    if (power_u64(static_cast<std::uint64_t>(q), m) != static_cast<std::uint64_t>(Fqm.size()))
        throw SpecError("field size is not q^m");
    if (Fqm.characteristic() != q) throw SpecError("field characteristic differs from q");
    for (int a = 0; a < Fqm.size(); ++a)
        for (int b = 0; b < Fqm.size(); ++b) {
            int s = Fqm.add(a, b);
            int ta = a, tb = b, ts = s;
            for (int i = 0; i < m; ++i) {
                if ((ta % q + tb % q) % q != ts % q)
                    throw SpecError("element indexing of the field is not coordinate-additive");
                ta /= q;
                tb /= q;
                ts /= q;
            }
        }
}

int rank_ext_unchecked(int q, int m, const Ring& Fq, std::span<const int> x) {
    const int n = static_cast<int>(x.size());
    std::vector<int> entries(static_cast<std::size_t>(m) * n);
    for (int j = 0; j < n; ++j) {
        int t = x[j];
        for (int i = 0; i < m; ++i) {
            entries[static_cast<std::size_t>(i) * n + j] = t % q;
            t /= q;
        }
    }
    return field_rank(RingMatrix(Fq, m, n, std::move(entries)));
}

}  // namespace

int wt_rank_ext(int q, int m, const FiniteRing& Fqm, std::span<const int> x) {
    validate_digit_map(q, m, Fqm);
    return rank_ext_unchecked(q, m, build_ring("zn:" + std::to_string(q)), x);
}

// ------------------------------------------------------ hierarchy analysis ----

HierarchicalClassification classify_hierarchical(const Poset& P) {
    HierarchicalClassification out;
    const int n = P.n();
    std::vector<char> removed(n, 0);
    int left = n;
    while (left > 0) {
        std::vector<int> level;
        for (int i = 0; i < n; ++i) {
            if (removed[i]) continue;
            bool minimal = true;
            for (int j = 0; j < n; ++j)
                if (!removed[j] && P.less(j, i)) minimal = false;
            if (minimal) level.push_back(i);
        }
        for (int i : level) removed[i] = 1;
        left -= static_cast<int>(level.size());
        out.levels.push_back(std::move(level));
    }
    std::vector<int> level_of(n);
    for (std::size_t l = 0; l < out.levels.size(); ++l)
        for (int i : out.levels[l]) level_of[i] = static_cast<int>(l);

    bool hier = true;
    for (int i = 0; i < n && hier; ++i)
        for (int j = 0; j < n && hier; ++j)
            if (P.less(i, j) != (level_of[i] < level_of[j])) hier = false;
    if (hier) {
        HierarchicalShape shape;
        shape.level_of = level_of;
        for (const auto& l : out.levels) shape.level_sizes.push_back(static_cast<int>(l.size()));
        out.shape = std::move(shape);
        return out;
    }

    // Minimal l with alpha in level l, beta in level l+1, alpha not< beta;
    // (l, alpha, beta) lexicographically least. Elements already ascend
    // within each level.
    for (std::size_t l = 0; l + 1 < out.levels.size(); ++l)
        for (int alpha : out.levels[l])
            for (int beta : out.levels[l + 1]) {
                if (P.less(alpha, beta)) continue;
                NonHierarchicalWitness w;
                w.level = static_cast<int>(l) + 1;
                w.alpha = alpha;
                w.beta = beta;
                for (int i : out.levels[l])
                    if (P.less(i, beta)) w.b_set.push_back(i);
                w.b_prime = w.b_set;
                w.b_prime.push_back(alpha);
                std::sort(w.b_prime.begin(), w.b_prime.end());
                for (std::size_t r = 0; r < l; ++r)
                    for (int i : out.levels[r]) w.lower_union.push_back(i);
                std::sort(w.lower_union.begin(), w.lower_union.end());
                out.witness = std::move(w);
                return out;
            }
    throw InternalError("non-hierarchical poset without a witness pair");
}

PosetCounterexample nonhier_counterexample(const Poset& P, const Ring& R) {
    const auto cls = classify_hierarchical(P);
    if (cls.hierarchical()) throw SpecError("poset is hierarchical; no counterexample exists");
    if (!is_frobenius(R)) throw SpecError("counterexample construction requires a Frobenius ring");
    const auto& w = *cls.witness;
    const int n = P.n();

    PosetCounterexample out;
    out.e_hat = zero_vec(*R, n);
    for (int i : w.b_prime) out.e_hat[i] = R->one();
    out.e_beta = unit_vec(*R, n, w.beta);
    out.weight = static_cast<long long>(w.b_set.size()) + static_cast<long long>(w.lower_union.size()) + 1;
    if (wt_poset(P, *R, out.e_hat) != out.weight || wt_poset(P, *R, out.e_beta) != out.weight)
        throw InternalError("counterexample weights disagree with the witness formula");
    for (int r = 0; r < R->size(); ++r) {
        out.code_elements.push_back(scale_vec(*R, r, out.e_hat));
        out.image_elements.push_back(scale_vec(*R, r, out.e_beta));
        if (wt_poset(P, *R, out.code_elements.back()) != wt_poset(P, *R, out.image_elements.back()))
            throw InternalError("counterexample map is not an isometry");
    }
    return out;
}

// ------------------------------------------------------------ weight specs ----

WeightSpec parse_weight_spec(const std::string& spec, const Ring& R, int n) {
    auto expect_len = [R, n](std::span<const int> x) {
        if (static_cast<int>(x.size()) != n) throw SpecError("vector length mismatch in weight");
    };
    if (spec == "hamming") {
        return {"hamming", [R, expect_len](std::span<const int> x) {
                    expect_len(x);
                    return WeightValue::integer(wt_hamming(*R, x));
                }};
    }
    if (spec == "rt") {
        return {"rt", [R, expect_len](std::span<const int> x) {
                    expect_len(x);
                    return WeightValue::integer(wt_rt(*R, x));
                }};
    }
    if (spec.rfind("poset:", 0) == 0) {
        std::string body = spec.substr(6);
        std::string text;
        if (body.rfind("n=", 0) == 0) {
            text = body;
        } else {
            std::ifstream in(body);
            if (!in) throw SpecError("cannot open poset file '" + body + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        auto P = std::make_shared<Poset>(Poset::parse(text));
        if (P->n() != n) throw SpecError("poset size differs from n");
        return {"poset", [R, P, expect_len](std::span<const int> x) {
                    expect_len(x);
                    return WeightValue::integer(wt_poset(*P, *R, x));
                }};
    }
    if (spec.rfind("nrt:", 0) == 0) {
        std::string body = spec.substr(4);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw SpecError("expected nrt:[t,n]");
        const auto parts = split_top_level(body.substr(1, body.size() - 2), ',');
        if (parts.size() != 2) throw SpecError("expected nrt:[t,n]");
        const int t = parse_int_strict(parts[0], "nrt");
        const int len = parse_int_strict(parts[1], "nrt");
        if (t * len != n) throw SpecError("nrt shape does not match n");
        auto P = std::make_shared<Poset>(Poset::disjoint_chains(t, len));
        return {"nrt", [R, P, expect_len](std::span<const int> x) {
                    expect_len(x);
                    return WeightValue::integer(wt_poset(*P, *R, x));
                }};
    }
    if (spec == "homog") {
        auto chi = find_generating_character(R);
        if (!chi) throw SpecError("homog weight requires a Frobenius ring");
        auto c = std::make_shared<Character>(*chi);
        return {"homog", [c, expect_len](std::span<const int> x) {
                    expect_len(x);
                    Rational acc(0);
                    for (int v : x) acc = acc + homogeneous_value(*c, v);
                    return WeightValue::rational(acc);
                }};
    }
    if (spec.rfind("comp:", 0) == 0) {
        auto U = std::make_shared<std::vector<int>>(parse_unit_subgroup(*R, spec.substr(5)));
        return {"comp", [R, U, expect_len](std::span<const int> x) {
                    expect_len(x);
                    return WeightValue::vector(comp_vector(*R, *U, x));
                }};
    }
    if (spec.rfind("ranklist:", 0) == 0) {
        std::string body = spec.substr(9);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw SpecError("expected ranklist:[m,n]");
        const auto parts = split_top_level(body.substr(1, body.size() - 2), ',');
        if (parts.size() != 2) throw SpecError("expected ranklist:[m,n]");
        const int rows = parse_int_strict(parts[0], "ranklist");
        const int cols = parse_int_strict(parts[1], "ranklist");
        if (rows * cols != n) throw SpecError("ranklist shape does not match n");
        if (!R->is_field()) throw SpecError("ranklist requires a field");
        return {"ranklist", [R, rows, cols, expect_len](std::span<const int> x) {
                    expect_len(x);
                    RingMatrix M(R, rows, cols, std::vector<int>(x.begin(), x.end()));
                    return WeightValue::integer(field_rank(M));
                }};
    }
    if (spec.rfind("profile:", 0) == 0) {
        std::string body = spec.substr(8);
        if (body.size() < 2 || body.front() != '(' || body.back() != ')')
            throw SpecError("expected profile:(n1,...;base[;symm])");
        const auto fields = split_top_level(body.substr(1, body.size() - 2), ';');
        if (fields.size() != 2 && fields.size() != 3)
            throw SpecError("expected profile:(n1,...;base[;symm])");
        std::vector<int> sizes;
        for (const auto& t : split_top_level(fields[0], ','))
            sizes.push_back(parse_int_strict(t, "profile sizes"));
        if (std::accumulate(sizes.begin(), sizes.end(), 0) != n)
            throw SpecError("profile blocks do not sum to n");
        const std::string base = fields[1];
        std::function<long long(std::span<const int>)> block_weight;
        if (base == "hamming")
            block_weight = [R](std::span<const int> x) { return wt_hamming(*R, x); };
        else if (base == "rt")
            block_weight = [R](std::span<const int> x) { return wt_rt(*R, x); };
        else
            throw SpecError("profile base must be hamming or rt");
        const bool symm = fields.size() == 3 && fields[2] == "symm";
        if (fields.size() == 3 && fields[2] != "symm" && fields[2] != "list")
            throw SpecError("profile third field must be list or symm");
        return {symm ? "profile-symm" : "profile-list",
                [sizes, block_weight, symm, expect_len](std::span<const int> x) {
                    expect_len(x);
                    WeightProfiles p = weight_profiles(sizes, block_weight, x);
                    return symm ? WeightValue::multiset(std::move(p.symmetrized))
                                : WeightValue::vector(std::move(p.list));
                }};
    }
    throw SpecError("unknown weight spec '" + spec + "'");
}

WeightSpec rank_ext_weight_spec(int q, int m, const Ring& Fqm) {
    validate_digit_map(q, m, *Fqm);
    auto Fq = build_ring("zn:" + std::to_string(q));
    return {"rank_ext", [q, m, Fq](std::span<const int> x) {
                return WeightValue::integer(rank_ext_unchecked(q, m, Fq, x));
            }};
}

}  // namespace froblab
