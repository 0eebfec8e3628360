#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "froblab/characters.hpp"
#include "froblab/matrix.hpp"
#include "froblab/ring.hpp"

namespace froblab {

/// Partial order on {0..n-1}, stored as the full relation. Built from
/// covering/less-than pairs and transitively closed; reflexivity,
/// antisymmetry and transitivity are validated.
class Poset {
  public:
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& less_than);
    /// Text format: "n=4; 1<2; 3<4" (1-based labels).
    static Poset parse(const std::string& text);
    static Poset anti_chain(int n);
    static Poset chain(int n);
    /// t disjoint chains of length len (the matrix-shaped poset).
    static Poset disjoint_chains(int t, int len);
    static Poset hierarchical(const std::vector<int>& level_sizes);

    int n() const { return n_; }
    bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i) * n_ + j]; }
    bool less(int i, int j) const { return i != j && leq(i, j); }

    /// Downward closure of S, sorted.
    std::vector<int> ideal_of(std::span<const int> S) const;
    std::string to_text() const;
    bool operator==(const Poset& o) const { return n_ == o.n_ && leq_ == o.leq_; }

    /// Canonical relabeling key under S_n, for deduplication up to
    /// isomorphism.
    std::vector<char> canonical_key() const;

  private:
    Poset(int n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {}
    int n_;
    std::vector<char> leq_;
};

/// All posets on [n], optionally up to isomorphism, in a deterministic order.
std::vector<Poset> enumerate_posets(int n, bool up_to_iso);

/// Exact rational with small numerator/denominator, always normalized.
struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n, long long d = 1);
    Rational operator+(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    std::string to_string() const;
};

/// Weight value: integer, exact rational, vector, or multiset (kept sorted).
class WeightValue {
  public:
    static WeightValue integer(long long v);
    static WeightValue rational(Rational v);
    static WeightValue vector(std::vector<long long> v);
    static WeightValue multiset(std::vector<long long> v);  // sorts
    bool operator==(const WeightValue& o) const { return v_ == o.v_; }
    bool operator<(const WeightValue& o) const { return v_ < o.v_; }
    std::string to_string() const;

  private:
    // tag 0: integer, 1: rational, 2: vector, 3: multiset
    std::variant<long long, Rational, std::vector<long long>,
                 std::pair<int, std::vector<long long>>>
        v_;
};

int wt_hamming(const FiniteRing& R, std::span<const int> x);
int wt_rt(const FiniteRing& R, std::span<const int> x);
std::vector<int> support(const FiniteRing& R, std::span<const int> x);
int wt_poset(const Poset& P, const FiniteRing& R, std::span<const int> x);

/// Normalized homogeneous weight via the unit-sum character formula; the inner
/// character sum must reduce to a rational integer.
Rational homogeneous_value(const Character& chi, int r);
Rational wt_homogeneous(const Character& chi, std::span<const int> x);

struct HomogeneousAxiomsReport {
    bool pass = true;
    std::vector<std::string> failures;
};
/// Axioms: constant on {y : Ry = Rx}, and average 1 over every nonzero
/// principal left ideal.
HomogeneousAxiomsReport check_homogeneous_axioms(const Character& chi);

/// Orbits of the right U-action on R (canonical ids by smallest element), and
/// the per-orbit coordinate counts of x.
std::vector<std::vector<int>> unit_orbits(const FiniteRing& R, const std::vector<int>& U);
std::vector<long long> comp_vector(const FiniteRing& R, const std::vector<int>& U,
                                   std::span<const int> x);

struct WeightProfiles {
    std::vector<long long> list;
    std::vector<long long> symmetrized;  // sorted
};
/// Splits x into consecutive blocks and applies the per-block weight.
WeightProfiles weight_profiles(const std::vector<int>& block_sizes,
                               const std::function<long long(std::span<const int>)>& block_weight,
                               std::span<const int> x);

/// Rank of a matrix over a field.
int wt_rank(const RingMatrix& A);
/// Rank over F_q of the q-ary coordinate matrix of x in (F_{q^m})^n; q must be
/// prime and the base-q digit map of Fqm is validated to be additive.
int wt_rank_ext(int q, int m, const FiniteRing& Fqm, std::span<const int> x);

struct HierarchicalShape {
    std::vector<int> level_sizes;
    std::vector<int> level_of;  // 0-based element -> level index
};

struct NonHierarchicalWitness {
    int level = 0;                 // minimal l (1-based count of the lower level)
    int alpha = 0;                 // element of level l  (0-based)
    int beta = 0;                  // element of level l+1 with alpha not< beta
    std::vector<int> b_set;        // {i in level l : i < beta}
    std::vector<int> b_prime;      // b_set plus alpha
    std::vector<int> lower_union;  // union of levels below l
};

struct HierarchicalClassification {
    std::vector<std::vector<int>> levels;
    std::optional<HierarchicalShape> shape;
    std::optional<NonHierarchicalWitness> witness;
    bool hierarchical() const { return shape.has_value(); }
};

/// Peels minimal elements into level sets and decides whether comparability is
/// exactly "lower level before higher level". The witness triple (l, alpha,
/// beta) is lexicographically least.
HierarchicalClassification classify_hierarchical(const Poset& P);

struct PosetCounterexample {
    Vec e_hat;    // sum of unit vectors over b_prime
    Vec e_beta;   // unit vector at beta
    long long weight = 0;
    std::vector<Vec> code_elements;   // {r * e_hat}
    std::vector<Vec> image_elements;  // {r * e_beta}, aligned with code_elements
};

/// The one-generator isometric pair built from the non-hierarchical witness;
/// the map r*e_hat -> r*e_beta is validated to be a well-defined poset-weight
/// isometry. Throws SpecError when P is hierarchical.
PosetCounterexample nonhier_counterexample(const Poset& P, const Ring& R);

/// Named weight function on R^n, with an exact comparable value.
struct WeightSpec {
    std::string name;
    std::function<WeightValue(std::span<const int>)> fn;
};

/// Weight-spec grammar:
///   hamming | rt | poset:<file|inline> | nrt:[t,n] | homog
///   | comp:<all|1|[i,...]> | ranklist:[m,n]
///   | profile:(n1,n2,...;base)         base in {hamming, rt} (weight list)
///   | profile:(n1,n2,...;base;symm)    symmetrized multiset
WeightSpec parse_weight_spec(const std::string& spec, const Ring& R, int n);

/// Rank-over-F_q weight on vectors over F_{q^m}; the digit map is validated
/// once at construction.
WeightSpec rank_ext_weight_spec(int q, int m, const Ring& Fqm);

}  // namespace froblab
