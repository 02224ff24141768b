#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpsum/composition.hpp"
#include "qpsum/permutation.hpp"

namespace qpsum {

/// An ordered sequence of disjoint nonempty sets covering {1, ..., k}.
/// Blocks are kept sorted ascending internally.
struct OrderedSetPartition {
    std::vector<std::vector<int>> blocks;

    OrderedSetPartition() = default;
    explicit OrderedSetPartition(std::vector<std::vector<int>> blocks_);

    int ground_size() const;
    int block_count() const { return static_cast<int>(blocks.size()); }

    friend bool operator==(const OrderedSetPartition& a, const OrderedSetPartition& b) {
        return a.blocks == b.blocks;
    }
    friend bool operator<(const OrderedSetPartition& a, const OrderedSetPartition& b) {
        return a.blocks < b.blocks;
    }
};

/// Serializes as "({1,3},{2,4})".
std::string to_string(const OrderedSetPartition& osp);
OrderedSetPartition parse_ordered_set_partition(const std::string& text);

/// Shift amounts for the block-rotation bijection, one entry per part of the
/// refining composition, grouped by block: 0 <= s[i][j] < a_j^(i) where
/// a_j^(i) is the j-th partial sum inside block i.
struct ShiftVector {
    std::vector<std::vector<int>> entries;

    friend bool operator==(const ShiftVector& a, const ShiftVector& b) {
        return a.entries == b.entries;
    }
};

/// Validates shape and ranges of the entries against split_blocks(alpha, beta).
ShiftVector make_shift_vector(std::vector<std::vector<int>> entries, const Composition& alpha,
                              const Composition& beta);

/// Reshapes a flat list of shifts (one per part of alpha) by the blocks of
/// alpha refining beta, then validates.
ShiftVector make_shift_vector(const std::vector<int>& flat, const Composition& alpha,
                              const Composition& beta);

// -- Sh: rotation bijection  Cons x shifts -> S_n ---------------------------

/// Rotates each beta-block of sigma right by the prescribed amounts on the
/// nested prefixes given by alpha's partial sums, then concatenates.
/// Requires sigma consistent with alpha <= beta.
Permutation sh_forward(const Permutation& sigma, const ShiftVector& shifts,
                       const Composition& alpha, const Composition& beta);

/// The unique preimage (sigma, shifts) of tau under sh_forward.
std::pair<Permutation, ShiftVector> sh_inverse(const Permutation& tau, const Composition& alpha,
                                               const Composition& beta);

// -- Br: regrouping bijection  (alpha, sigma) -> (grouping, partition form) --

/// Parenthesizes sigma by alpha, sorts the cycles into partition form, and
/// records which sorted cycle landed in which beta-block.
std::pair<OrderedSetPartition, CycleForm> br_forward(const Composition& alpha,
                                                     const Permutation& sigma,
                                                     const Composition& beta);

/// Inverse of br_forward: regroups the partition-form cycles by the blocks,
/// restores standard order within each group, and reads off (alpha, sigma).
std::pair<Composition, Permutation> br_inverse(const OrderedSetPartition& grouping,
                                               const CycleForm& partition_form,
                                               const Composition& beta);

// -- groupings and prescribed-size ordered set partitions --------------------

/// O_{alpha,beta}: ordered set partitions (B_1, ..., B_{l(beta)}) of
/// [l(alpha)] whose j-th block's alpha-parts sum to beta_j.
std::vector<OrderedSetPartition> enumerate_groupings(const Composition& alpha,
                                                     const Composition& beta);

/// R_{alpha,beta} = |O_{alpha,beta}|; invariant under sorting both arguments.
long long count_groupings(const Composition& alpha, const Composition& beta);

/// OSP(alpha, beta): ordered set partitions of [l(alpha)] with block sizes
/// l(alpha^(i)).  Empty when alpha does not refine beta.
std::vector<OrderedSetPartition> enumerate_osp(const Composition& alpha,
                                               const Composition& beta);
BigInt osp_count(const Composition& alpha, const Composition& beta);

/// The ordered set partitions of [l(lambda)] grouping positions by part size:
/// one block per distinct part size of lambda, ascending, block t holding the
/// positions assigned that size.  These index the rearrangements of lambda.
std::vector<OrderedSetPartition> size_class_partitions(const Composition& lambda);

// -- g: relabeling bijection ---------------------------------------------

/// Builds the rearrangement alpha of lambda and the prescribed-size ordered
/// set partition C from a size-class partition A and a grouping B of lambda's
/// parts into beta.  All index relabelings use stable (relative-order
/// preserving) matching of equal part sizes.
std::pair<Composition, OrderedSetPartition> g_forward(const OrderedSetPartition& A,
                                                      const OrderedSetPartition& B,
                                                      const Composition& lambda,
                                                      const Composition& beta);

/// Inverse of g_forward; requires C in OSP(alpha, beta).
std::pair<OrderedSetPartition, OrderedSetPartition> g_inverse(const Composition& alpha,
                                                              const OrderedSetPartition& C,
                                                              const Composition& beta);

} // namespace qpsum
