#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "froblab/groups.hpp"
#include "froblab/matrix.hpp"
#include "froblab/weights.hpp"

namespace froblab {

class Code;
using CodePtr = std::shared_ptr<const Code>;

/// Left submodule of R^n, enumerated as the closure of its generators under
/// addition and left scalar multiplication. Elements are sorted by vector
/// rank.
class Code {
  public:
    static CodePtr closure(Ring R, int n, std::vector<Vec> generators, std::uint64_t budget = 0);

    const Ring& ring() const { return ring_; }
    int n() const { return n_; }
    const std::vector<Vec>& generators() const { return gens_; }
    const std::vector<Vec>& elements() const { return elements_; }
    const std::vector<std::uint64_t>& ranks() const { return ranks_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Vec& v) const;
    /// Index into elements() of v; throws when absent.
    std::size_t index_of(const Vec& v) const;

  private:
    Code() = default;
    Ring ring_;
    int n_ = 1;
    std::vector<Vec> gens_;
    std::vector<Vec> elements_;
    std::vector<std::uint64_t> ranks_;
};

/// Left-linear map from a code into R^n, stored as a full table. Built by
/// propagating generator images through the closure; any conflicting
/// derivation makes the assignment ill-defined (build returns nullopt).
/// Additivity and scalar compatibility are re-validated exhaustively.
class LinearMap {
  public:
    static std::optional<LinearMap> build(CodePtr domain, std::vector<Vec> generator_images);

    const CodePtr& domain() const { return domain_; }
    const std::vector<Vec>& generator_images() const { return gen_images_; }
    /// Image of the element with the given elements()-index.
    const Vec& image_at(std::size_t idx) const { return images_[idx]; }
    const Vec& image_of(const Vec& x) const { return images_[domain_->index_of(x)]; }
    const std::vector<Vec>& images() const { return images_; }
    bool injective() const;
    /// The image code f(C), with the generator images as generators.
    CodePtr image_code() const;
    /// Inverse map on the image code; requires injectivity.
    LinearMap inverse() const;

  private:
    LinearMap() = default;
    CodePtr domain_;
    std::vector<Vec> gen_images_;
    std::vector<Vec> images_;
};

struct LocalCheck {
    bool local = false;
    /// One witness per domain element (aligned with elements()) when local.
    std::vector<RingMatrix> witnesses;
    std::optional<Vec> failing;  // first element with no witness
};

/// Per-element witness search: for every x a matrix M_x in U with f(x)=xM_x.
LocalCheck is_local_u_map(const LinearMap& f, const MatrixGroup& U);

/// Smallest M in U with f(g)=gM on all generators, if any.
std::optional<RingMatrix> is_global_u_map(const LinearMap& f, const MatrixGroup& U);

struct WeightCheck {
    bool preserved = true;
    std::optional<Vec> violator;
};
WeightCheck preserves_weight(const LinearMap& f, const WeightSpec& w);

/// Per-column solution sets of G m_j = y_j where G stacks the generators and
/// y_j is the j-th coordinate of the generator images; each set is found by
/// scanning all |R|^n candidate columns.
std::vector<std::vector<Vec>> column_solution_sets(const LinearMap& f, std::uint64_t budget = 0);

/// All invertible, weight-preserving M in R^{n x n} with xM = f(x) on the
/// generators: the Cartesian product of the per-column solution sets filtered
/// by weight preservation on all of R^n and invertibility. Sorted by entries.
std::vector<RingMatrix> extension_search(const LinearMap& f, const WeightSpec& w,
                                         std::uint64_t budget = 0);
/// First extension in the same order, or nullopt after exhausting the search.
std::optional<RingMatrix> extension_exists(const LinearMap& f, const WeightSpec& w,
                                           std::uint64_t budget = 0);
/// All M in U agreeing with f on the generators.
std::vector<RingMatrix> extension_search_group(const LinearMap& f, const MatrixGroup& U);

/// Row-first existence search: assigns images of the standard basis vectors
/// depth-first, pruning any partial assignment whose span already violates
/// weight preservation or agreement with f. Returns the first invertible
/// completion (entry-lexicographically least) or nullopt once exhausted.
std::optional<RingMatrix> find_weight_extension(const LinearMap& f, const WeightSpec& w);

struct ScanLimits {
    int max_code_generators = 2;
    std::uint64_t max_code_size = 64;
};

/// All distinct codes generated by up to max_code_generators vectors, element
/// count capped by max_code_size, ordered by their first generating tuple.
std::vector<CodePtr> enumerate_codes(const Ring& R, int n, const ScanLimits& limits,
                                     std::uint64_t budget = 0);

struct ScanCounterexample {
    std::vector<Vec> code_generators;
    std::vector<Vec> images;
    std::size_t code_size = 0;
    /// Per-element local witnesses, aligned with the code's elements();
    /// together with searched_group_order these certify local-but-not-global.
    std::vector<RingMatrix> local_witnesses;
    std::size_t searched_group_order = 0;
};

struct ScanResult {
    bool holds = true;     // no local-but-not-global map found within limits
    bool complete = true;  // false when the budget truncated the scan
    std::uint64_t codes = 0;
    std::uint64_t assignments = 0;  // candidate generator-image tuples
    std::uint64_t linear_maps = 0;  // well-defined ones
    std::uint64_t local_maps = 0;
    std::optional<ScanCounterexample> counterexample;
};

/// Enumerates every local U-map on every code within the limits (generator
/// images range over the right U-orbits of the generators) and searches a
/// global witness for each. Every local map is asserted injective with a
/// local inverse.
ScanResult local_global_scan(const Ring& R, int n, const MatrixGroup& U, const ScanLimits& limits,
                             std::uint64_t budget = 0);

/// All weight-preserving linear isomorphisms from C onto Cp: generator images
/// range over matching-weight elements of Cp; each candidate is validated
/// linear, injective, onto Cp, and weight-preserving on all of C.
std::vector<LinearMap> enumerate_weight_isometries(const CodePtr& C, const CodePtr& Cp,
                                                   const WeightSpec& w);

/// All weight-preserving injective linear maps from C into R^n (image code
/// unconstrained), enumerated by assigning each generator an image of equal
/// weight.
std::vector<LinearMap> weight_preserving_maps_into(const CodePtr& C, const WeightSpec& w);

/// Restriction of x -> xA to the code.
LinearMap restrict_matrix(const CodePtr& C, const RingMatrix& A);

}  // namespace froblab
