#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "froblab/characters.hpp"
#include "froblab/matrix.hpp"
#include "froblab/partitions.hpp"

namespace froblab {

/// Finite subgroup of GL(n,R), fully enumerated and sorted by entry sequence.
/// Construction verifies the identity, closure under products, and that every
/// element's inverse is present.
class MatrixGroup {
  public:
    static MatrixGroup from_elements(std::string name, Ring R, int n,
                                     std::vector<RingMatrix> elements, std::uint64_t budget = 0);

    const std::string& name() const { return name_; }
    const Ring& ring() const { return ring_; }
    int n() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<RingMatrix>& elements() const { return elements_; }
    bool contains(const RingMatrix& M) const;
    MatrixGroup transposed() const;

  private:
    MatrixGroup() = default;
    std::string name_;
    Ring ring_;
    int n_ = 1;
    std::vector<RingMatrix> elements_;
};

/// Closure of invertible generators under multiplication (inverses appear
/// automatically in a finite group).
MatrixGroup group_from_generators(std::string name, Ring R, int n,
                                  const std::vector<RingMatrix>& gens, std::uint64_t budget = 0);

MatrixGroup gl_group(const Ring& R, int n);
/// Monomial matrices with nonzero entries in the unit subgroup U.
MatrixGroup mon_group(const Ring& R, int n, const std::vector<int>& unit_subgroup);
MatrixGroup mon_group_full(const Ring& R, int n);  // U = R^x
/// Invertible lower triangular matrices (diagonal entries restricted to U for
/// the _u variant).
MatrixGroup lt_group(const Ring& R, int n);
MatrixGroup lt_group_u(const Ring& R, int n, const std::vector<int>& unit_subgroup);
MatrixGroup diag_group(const Ring& R, int n);
/// Lower block triangular with the named group (mon | diag | gl) on each
/// diagonal block and free entries below.
MatrixGroup block_lower_triangular_group(const Ring& R, const std::vector<int>& block_sizes,
                                         const std::vector<std::string>& diag_kinds);
/// P U P^{-1}.
MatrixGroup conjugate_group(const MatrixGroup& U, const RingMatrix& P);

/// Validates that `elems` is a subgroup of R^x (contains 1, closed, inverses).
std::vector<int> validate_unit_subgroup(const FiniteRing& R, std::vector<int> elems);
/// U-spec: "all" | "1" | "[i,j,...]".
std::vector<int> parse_unit_subgroup(const FiniteRing& R, const std::string& spec);

enum class OrbitSide { Right, Left };

/// Orbits of the right action x -> xU, or of the left action x -> (U x^T)^T.
/// Block ids are assigned in element-rank order.
Partition orbit_partition(const MatrixGroup& U, OrbitSide side);

struct OrbitDualityReport {
    bool pass = true;
    std::vector<std::string> failures;
    int right_orbits = 0;
    int left_orbits = 0;
    std::vector<int> chi_exponents;
};

/// Checks chi_dual(P_U, left) == P_{U^T}, chi_dual(P_{U^T}, right) == P_U and
/// reflexivity of both orbit partitions.
OrbitDualityReport verify_orbit_duality(const MatrixGroup& U, const Character& chi);

/// Subring of R^{n x n}: contains 0 and I, closed under addition and product.
class MatrixSubring {
  public:
    static MatrixSubring from_elements(std::string name, Ring R, int n,
                                       std::vector<RingMatrix> elements);
    const std::string& name() const { return name_; }
    const Ring& ring() const { return ring_; }
    int n() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<RingMatrix>& elements() const { return elements_; }
    bool contains(const RingMatrix& M) const;

  private:
    MatrixSubring() = default;
    std::string name_;
    Ring ring_;
    int n_ = 1;
    std::vector<RingMatrix> elements_;
};

/// Additive/multiplicative closure of {0, I} and the generators.
MatrixSubring subring_closure(std::string name, Ring R, int n,
                              const std::vector<RingMatrix>& gens, std::uint64_t budget = 0);
MatrixSubring lower_triangular_subring(const Ring& R, int n);
MatrixSubring diagonal_subring(const Ring& R, int n);
MatrixSubring full_matrix_subring(const Ring& R, int n);
MatrixSubring intersect_subrings(const MatrixSubring& A, const MatrixSubring& B);

/// Invertible elements of S. Inverses land in S automatically (finite ring);
/// this is re-verified during construction.
MatrixGroup units_of_subring(const MatrixSubring& S);

struct ConstructibleReport {
    bool constructible = true;
    bool exhaustive = true;  // false when only a seeded sample of tuples ran
    std::uint64_t tuples_checked = 0;
    std::optional<std::vector<RingMatrix>> witness;  // failing tuple (A_1..A_n)
};

struct SampledMode {
    std::uint64_t count = 100000;
    std::uint64_t seed = 0;
};

/// Splices column j of A_j into one matrix B for tuples (A_1..A_n) of units of
/// S and tests membership of B in S. Exhaustive when |U(S)|^n fits the
/// budget, otherwise the seeded sample (sampling can only refute).
ConstructibleReport is_constructible(const MatrixSubring& S,
                                     std::optional<SampledMode> sampled = std::nullopt,
                                     std::uint64_t budget = 0);

/// Group-spec grammar:
///   gl | mon:<all|1|[i,...]> | lt | diag
///   | blocktri:[n1,...,nt]:<kind,kind,...>   (kind = mon | diag | gl)
///   | gens:[[[..],[..]],...]                 (row-major element indices)
///   | conj:(<spec>,[[..],[..]])
MatrixGroup parse_group_spec(const std::string& spec, const Ring& R, int n);

}  // namespace froblab
