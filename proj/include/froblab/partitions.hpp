#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "froblab/characters.hpp"
#include "froblab/cyclotomic.hpp"

namespace froblab {

/// Partition of {0, ..., universe_size-1}. Block ids are dense 0..blocks-1,
/// assigned in order of first occurrence, so equal partitions compare equal as
/// label vectors.
class Partition {
  public:
    explicit Partition(std::vector<int> labels);
    static Partition singletons(std::uint64_t universe);
    static Partition one_block(std::uint64_t universe);

    std::uint64_t universe_size() const { return labels_.size(); }
    int block_count() const { return block_count_; }
    int block_of(std::uint64_t i) const { return labels_[i]; }
    const std::vector<int>& labels() const { return labels_; }
    std::vector<std::vector<std::uint64_t>> blocks() const;

    bool operator==(const Partition& o) const { return labels_ == o.labels_; }

  private:
    std::vector<int> labels_;
    int block_count_ = 0;
};

/// True when every block of P is contained in a block of Q.
bool is_finer(const Partition& P, const Partition& Q);

/// Krawtchouk data of a dual pair: one row per block of the dual partition
/// (all characters in a dual block share the row by construction), one column
/// per block of the primal partition.
struct KrawtchoukTable {
    int m = 1;
    std::vector<std::vector<CyclotomicSum>> rows;
};

struct DualPartitionResult {
    Partition dual;
    KrawtchoukTable table;
};

/// Group-level dual: characters chi, chi' of (R^n,+) share a block iff their
/// sums over every block of P agree. P partitions element ranks of R^n; the
/// result partitions character ranks (exponent-tuple order).
DualPartitionResult dual_partition_group(const Partition& P, const Decomposition& dec);

/// Dual of a partition of characters, transported back to the group through
/// the canonical identification a(chi) = chi(a).
Partition dual_partition_characters_to_group(const Partition& Phat, const Decomposition& dec);

/// chi-dual partitions of R^n for a generating character chi of R:
///   Left : v ~ v' iff sums of chi(<w,v>) over each block match those of v'
///   Right: same with chi(<v,w>).
Partition chi_dual(const Partition& P, const Character& chi, int n, ActionSide side);
DualPartitionResult chi_dual_with_table(const Partition& P, const Character& chi, int n,
                                        ActionSide side);

/// Reflexivity via the block-count criterion, cross-validated against the
/// directly computed bidual; disagreement raises InternalError.
bool is_reflexive(const Partition& P, const Character& chi, int n);

struct BidualReport {
    bool pass = true;
    std::vector<std::string> failures;
    int primal_blocks = 0;
    int dual_blocks = 0;
    bool self_dual_left = false;
    bool self_dual_right = false;
};

/// Checks right-of-left dual == transported group bidual == left-of-right
/// dual, the self-duality equivalence, |P| <= |dual| and bidual <= P.
BidualReport verify_bidual_identities(const Partition& P, const Character& chi, int n);

}  // namespace froblab
