#include "froblab/partitions.hpp"

#include <algorithm>
#include <map>

#include "froblab/matrix.hpp"
#include "froblab/parallel.hpp"

namespace froblab {

namespace {

// Renumber arbitrary labels to dense ids in order of first occurrence.
std::vector<int> normalize_labels(std::vector<int> raw, int* count_out) {
    std::map<int, int> remap;
    for (int& v : raw) {
        auto [it, fresh] = remap.emplace(v, static_cast<int>(remap.size()));
        v = it->second;
        (void)fresh;
    }
    *count_out = static_cast<int>(remap.size());
    return raw;
}

// Groups universe indices by an exact signature, ids in first-occurrence order.
template <typename SigFn>
Partition partition_by_signature(std::uint64_t universe, SigFn&& sig) {
    std::map<std::vector<CyclotomicSum>, int> seen;
    std::vector<int> labels(universe);
    for (std::uint64_t i = 0; i < universe; ++i) {
        auto [it, fresh] = seen.emplace(sig(i), static_cast<int>(seen.size()));
        labels[i] = it->second;
        (void)fresh;
    }
    return Partition(std::move(labels));
}

std::vector<std::vector<std::uint64_t>> blocks_of(const Partition& P) { return P.blocks(); }

}  // namespace

Partition::Partition(std::vector<int> labels) {
    if (labels.empty()) throw SpecError("partition universe must be nonempty");
    labels_ = normalize_labels(std::move(labels), &block_count_);
}

Partition Partition::singletons(std::uint64_t universe) {
    std::vector<int> l(universe);
    for (std::uint64_t i = 0; i < universe; ++i) l[i] = static_cast<int>(i);
    return Partition(std::move(l));
}

Partition Partition::one_block(std::uint64_t universe) {
    return Partition(std::vector<int>(universe, 0));
}

std::vector<std::vector<std::uint64_t>> Partition::blocks() const {
    std::vector<std::vector<std::uint64_t>> out(block_count_);
    for (std::uint64_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i);
    return out;
}

bool is_finer(const Partition& P, const Partition& Q) {
    if (P.universe_size() != Q.universe_size())
        throw SpecError("is_finer requires partitions of the same universe");
    std::vector<int> image(P.block_count(), -1);
    for (std::uint64_t i = 0; i < P.universe_size(); ++i) {
        int& img = image[P.block_of(i)];
        if (img < 0) img = Q.block_of(i);
        else if (img != Q.block_of(i)) return false;
    }
    if (P.block_count() < Q.block_count())
        throw InternalError("finer partition with fewer blocks");
    return true;
}

DualPartitionResult dual_partition_group(const Partition& P, const Decomposition& dec) {
    if (P.universe_size() != dec.get()->group_size())
        throw SpecError("partition universe does not match the group");
    const FiniteRing& R = *dec->ring();
    const int n = dec->n();
    const int m = dec->exponent();
    const auto blocks = blocks_of(P);
    const std::uint64_t universe = P.universe_size();
    check_budget("dual_partition_group", universe * universe);

    // chi ranked by exponent tuple; signature row = block sums of chi.
    const auto chis = all_characters(dec);
    std::vector<Vec> elems(universe);
    for (std::uint64_t i = 0; i < universe; ++i) elems[i] = vec_unrank(R, n, i);

    std::vector<std::vector<CyclotomicSum>> sig(universe);
    parallel_for(universe, [&](std::size_t c) {
        sig[c].reserve(blocks.size());
        for (const auto& blk : blocks) {
            std::vector<int> exps;
            exps.reserve(blk.size());
            for (std::uint64_t a : blk) exps.push_back(chis[c].exponent_at(elems[a]));
            sig[c].push_back(cyclo_sum(m, exps));
        }
    });

    Partition dual = partition_by_signature(universe, [&](std::uint64_t i) { return sig[i]; });
    KrawtchoukTable table;
    table.m = m;
    table.rows.resize(dual.block_count());
    for (std::uint64_t c = 0; c < universe; ++c) {
        auto& row = table.rows[dual.block_of(c)];
        if (row.empty()) row = sig[c];
    }
    return DualPartitionResult{std::move(dual), std::move(table)};
}

Partition dual_partition_characters_to_group(const Partition& Phat, const Decomposition& dec) {
    if (Phat.universe_size() != dec.get()->group_size())
        throw SpecError("partition universe does not match the character group");
    const FiniteRing& R = *dec->ring();
    const int n = dec->n();
    const int m = dec->exponent();
    const auto chis = all_characters(dec);
    const auto blocks = blocks_of(Phat);
    const std::uint64_t universe = Phat.universe_size();
    check_budget("dual_partition_characters_to_group", universe * universe);

    std::vector<Vec> elems(universe);
    for (std::uint64_t i = 0; i < universe; ++i) elems[i] = vec_unrank(R, n, i);
    return partition_by_signature(universe, [&](std::uint64_t a) {
        std::vector<CyclotomicSum> sig;
        sig.reserve(blocks.size());
        for (const auto& blk : blocks) {
            std::vector<int> exps;
            exps.reserve(blk.size());
            for (std::uint64_t c : blk) exps.push_back(chis[c].exponent_at(elems[a]));
            sig.push_back(cyclo_sum(m, exps));
        }
        return sig;
    });
}

DualPartitionResult chi_dual_with_table(const Partition& P, const Character& chi, int n,
                                        ActionSide side) {
    if (!is_generating(chi)) throw SpecError("chi_dual requires a generating character");
    const FiniteRing& R = *chi.decomposition()->ring();
    const std::uint64_t universe = power_u64(static_cast<std::uint64_t>(R.size()), n);
    if (P.universe_size() != universe)
        throw SpecError("partition universe does not match R^n");
    check_budget("chi_dual", universe * universe);
    const int m = chi.order();
    const auto blocks = blocks_of(P);

    std::vector<Vec> elems(universe);
    for (std::uint64_t i = 0; i < universe; ++i) elems[i] = vec_unrank(R, n, i);

    std::vector<std::vector<CyclotomicSum>> sig(universe);
    parallel_for(universe, [&](std::size_t v) {
        sig[v].reserve(blocks.size());
        for (const auto& blk : blocks) {
            std::vector<int> exps;
            exps.reserve(blk.size());
            for (std::uint64_t w : blk) {
                const int ip = side == ActionSide::Left ? dot(R, elems[w], elems[v])
                                                        : dot(R, elems[v], elems[w]);
                exps.push_back(chi.exponent_at_element(ip));
            }
            sig[v].push_back(cyclo_sum(m, exps));
        }
    });
    Partition dual = partition_by_signature(universe, [&](std::uint64_t i) { return sig[i]; });
    KrawtchoukTable table;
    table.m = m;
    table.rows.resize(dual.block_count());
    for (std::uint64_t v = 0; v < universe; ++v) {
        auto& row = table.rows[dual.block_of(v)];
        if (row.empty()) row = sig[v];
    }
    return DualPartitionResult{std::move(dual), std::move(table)};
}

Partition chi_dual(const Partition& P, const Character& chi, int n, ActionSide side) {
    return chi_dual_with_table(P, chi, n, side).dual;
}

bool is_reflexive(const Partition& P, const Character& chi, int n) {
    const Partition left = chi_dual(P, chi, n, ActionSide::Left);
    const bool by_count = left.block_count() == P.block_count();
    const Partition bidual = chi_dual(left, chi, n, ActionSide::Right);
    const bool by_bidual = bidual == P;
    if (by_count != by_bidual)
        throw InternalError("reflexivity criterion disagrees with the computed bidual");
    return by_count;
}

BidualReport verify_bidual_identities(const Partition& P, const Character& chi, int n) {
    BidualReport rep;
    const Ring& R = chi.decomposition()->ring();
    const Decomposition dec_n = AbelianDecomposition::of_ring_power(R, n);

    const Partition left = chi_dual(P, chi, n, ActionSide::Left);
    const Partition right = chi_dual(P, chi, n, ActionSide::Right);
    const Partition right_of_left = chi_dual(left, chi, n, ActionSide::Right);
    const Partition left_of_right = chi_dual(right, chi, n, ActionSide::Left);
    const auto group_dual = dual_partition_group(P, dec_n);
    const Partition group_bidual = dual_partition_characters_to_group(group_dual.dual, dec_n);

    rep.primal_blocks = P.block_count();
    rep.dual_blocks = left.block_count();
    rep.self_dual_left = left == P;
    rep.self_dual_right = right == P;

    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            rep.pass = false;
            rep.failures.push_back(what);
        }
    };
    expect(right_of_left == group_bidual, "right-of-left dual differs from group bidual");
    expect(left_of_right == group_bidual, "left-of-right dual differs from group bidual");
    expect(rep.self_dual_left == rep.self_dual_right,
           "left self-duality disagrees with right self-duality");
    expect(P.block_count() <= left.block_count(), "|P| exceeds |dual|");
    expect(P.block_count() <= right.block_count(), "|P| exceeds |right dual|");
    expect(is_finer(group_bidual, P), "bidual is not finer than P");
    // Dual block counts agree between the group dual and both transports.
    expect(group_dual.dual.block_count() == left.block_count(),
           "group dual and left transport disagree on block count");
    expect(group_dual.dual.block_count() == right.block_count(),
           "group dual and right transport disagree on block count");
    return rep;
}

}  // namespace froblab
