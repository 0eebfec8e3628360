#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "froblab/cyclotomic.hpp"
#include "froblab/matrix.hpp"
#include "froblab/ring.hpp"

namespace froblab {

class AbelianDecomposition;
using Decomposition = std::shared_ptr<const AbelianDecomposition>;

/// Invariant-factor presentation of the additive group (R^n, +): cyclic orders
/// d_1 | d_2 | ... | d_k with generators in R^n and a coordinate bijection.
/// Built as the n-fold product of a validated presentation of (R, +).
class AbelianDecomposition {
  public:
    static Decomposition of_ring_power(Ring R, int n);

    const Ring& ring() const { return ring_; }
    int n() const { return n_; }
    int factor_count() const { return static_cast<int>(orders_.size()); }
    const std::vector<int>& orders() const { return orders_; }
    /// Exponent of the group (the largest invariant factor).
    int exponent() const { return orders_.back(); }
    std::uint64_t group_size() const;

    Vec generator(int i) const;
    /// Coordinates of x in prod Z_{d_i}; the map is a group isomorphism.
    std::vector<int> coordinates(std::span<const int> x) const;

  private:
    AbelianDecomposition() = default;

    Ring ring_;
    int n_ = 1;
    // Per-copy data for (R, +): orders (divisibility chain) and generator
    // element indices; coords_ has one row of length ring_orders_.size() per
    // ring element.
    std::vector<int> ring_orders_;
    std::vector<int> ring_gens_;
    std::vector<std::vector<int>> coords_;
    // Concatenated orders for R^n, factor-major: all copies of d_1 first.
    std::vector<int> orders_;
};

/// Character of (R^n, +) in exponent form over a decomposition: the value at
/// an element with coordinates (c_i) is zeta_m ^ (sum_i e_i c_i m/d_i).
class Character {
  public:
    Character(Decomposition dec, std::vector<int> exponents);

    const Decomposition& decomposition() const { return dec_; }
    const std::vector<int>& exponents() const { return exps_; }
    int order() const { return dec_->exponent(); }

    /// e with chi(x) = zeta_m^e.
    int exponent_at(std::span<const int> x) const;
    int exponent_at_element(int ring_element) const;  // n == 1 convenience
    CyclotomicSum value(std::span<const int> x) const;
    bool is_trivial() const;
    bool operator==(const Character& o) const;

  private:
    Decomposition dec_;
    std::vector<int> exps_;
};

/// All |R^n| characters, ordered by exponent tuple (lexicographic).
std::vector<Character> all_characters(const Decomposition& dec);

enum class ActionSide { Left, Right };

/// Module action on characters of (R^n, +):
///   Left:  (r chi)(x) = chi(x r)      Right: (chi r)(x) = chi(r x).
Character act(int r, const Character& chi, ActionSide side);

/// True when chi is a character of (R, +) for which r -> r*chi is injective.
/// Cross-checked against the kernel criterion (no nonzero one-sided ideal in
/// ker chi); disagreement raises InternalError.
bool is_generating(const Character& chi);

/// Canonical generating character (smallest exponent tuple), or nullopt.
std::optional<Character> find_generating_character(const Ring& R);
std::vector<Character> all_generating_characters(const Ring& R);
bool is_frobenius(const Ring& R);

/// Transport of x in R^n to a character of (R^n, +) along a generating
/// character chi of R:
///   Left:  alpha_l(x) = chi(<- , x>)   Right: alpha_r(x) = chi(<x , ->).
Character alpha(const Character& chi, std::span<const int> x, ActionSide side,
                const Decomposition& dec_n);

/// Exact sum of zeta_m^e over the exponent multiset.
CyclotomicSum cyclo_sum(int m, std::span<const int> exponents);

}  // namespace froblab
