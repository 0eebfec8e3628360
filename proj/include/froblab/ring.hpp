#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "froblab/budget.hpp"

namespace froblab {

class FiniteRing;
using Ring = std::shared_ptr<const FiniteRing>;

enum class IdealSide { Left, Right };

/// Finite unital ring on element indices 0..size-1, defined by full addition
/// and multiplication tables. Every ring axiom is checked exhaustively at
/// construction time; instances are immutable afterwards and safe to share
/// across threads.
class FiniteRing {
  public:
    /// Validates the tables and returns the ring. Throws SpecError naming the
    /// first failing triple when an axiom is violated.
    static Ring create(std::string spec, std::string name, int size, std::vector<int> add_table,
                       std::vector<int> mul_table, int zero, int one,
                       std::vector<std::string> element_names = {});

    int size() const { return size_; }
    int zero() const { return zero_; }
    int one() const { return one_; }
    int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * size_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * size_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    /// Two-sided multiplicative inverse, or -1.
    int inv(int a) const { return inv_[a]; }
    bool is_unit(int a) const { return inv_[a] >= 0; }

    /// n-fold additive multiple of a (n may be any integer).
    int scalar_multiple(long long n, int a) const;
    int additive_order(int a) const;
    /// Additive order of 1 (the characteristic).
    int characteristic() const { return additive_order(one_); }

    bool commutative() const { return commutative_; }
    bool is_field() const;

    const std::string& spec() const { return spec_; }
    const std::string& name() const { return name_; }
    const std::string& element_name(int a) const { return element_names_[a]; }

    const std::vector<int>& add_table() const { return add_; }
    const std::vector<int>& mul_table() const { return mul_; }

  private:
    FiniteRing() = default;

    std::string spec_;
    std::string name_;
    int size_ = 0;
    int zero_ = 0;
    int one_ = 0;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::vector<int> neg_;
    std::vector<int> inv_;
    std::vector<std::string> element_names_;
    bool commutative_ = false;
};

/// Builds a ring from a spec string. Grammar:
///   zn:<N> | gf:<q> | gf:<p>^<k>:[c0,c1,...,ck] | f2xyq
///   | mat:<k>:(<spec>) | prod:(<spec>,<spec>,...)
/// gf with an explicit modulus uses the given monic coefficient list
/// (ascending degree) and verifies irreducibility; gf:<q> for a prime power
/// q=p^k picks the irreducible monic modulus of degree k with the smallest
/// base-p coefficient rank.
Ring build_ring(const std::string& spec);

/// All elements with a two-sided inverse, ascending.
std::vector<int> units(const FiniteRing& R);

/// The one-sided ideal generated by `gens` (sorted element indices).
std::vector<int> ideal_generated_by(const FiniteRing& R, const std::vector<int>& gens,
                                    IdealSide side);

/// side == Left:  { r | r*a = 0 for all a in the right ideal generated by gens }
/// side == Right: { r | a*r = 0 for all a in the left  ideal generated by gens }
/// The result is verified to be an ideal of the opposite side.
std::vector<int> annihilator(const FiniteRing& R, const std::vector<int>& gens, IdealSide side);

struct DoubleAnnihilatorReport {
    bool holds = true;
    std::uint64_t ideals_checked = 0;
    // On failure: the offending ideal, its generators, and the double annihilator.
    IdealSide failing_side = IdealSide::Right;
    std::vector<int> witness_gens;
    std::vector<int> witness_ideal;
    std::vector<int> double_annihilator;
};

/// Checks ann_r(ann_l(I)) = I over all right ideals I generated by up to
/// max_ideal_generators elements, and the mirrored identity for left ideals.
DoubleAnnihilatorReport double_annihilator_holds(const FiniteRing& R, int max_ideal_generators,
                                                 std::uint64_t budget = 0);

/// If xS = yS as right ideals, returns the smallest unit index alpha with
/// x = y*alpha; otherwise std::nullopt.
std::optional<int> cyclic_unit_witness(const FiniteRing& S, int x, int y);

}  // namespace froblab
