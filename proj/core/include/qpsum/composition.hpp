#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "qpsum/rational.hpp"

namespace qpsum {

/// A composition: a finite ordered sequence of positive integers.  The empty
/// composition is the unique composition of 0 and indexes every degree-0 unit.
/// Compositions are immutable value objects with structural equality.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }     ///< n, the sum of the parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    int last() const { return parts_.back(); }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Canonical order used everywhere deterministic output is required:
/// by size ascending, then length descending, then parts lexicographically
/// descending.  Within one degree this lists each expansion's diagonal index
/// first, matching the usual written order of the worked expansions.
bool canonical_less(const Composition& a, const Composition& b);

struct CanonicalLess {
    bool operator()(const Composition& a, const Composition& b) const {
        return canonical_less(a, b);
    }
};

/// Text form "2,3,2"; the empty composition is the empty string.
std::string to_string(const Composition& alpha);
Composition parse_composition(const std::string& text, std::size_t position_offset = 0);

// -- subset bijection ---------------------------------------------------

/// set(alpha): the partial sums of alpha except the last, a subset of [n-1].
std::vector<int> subset_of(const Composition& alpha);

/// comp(A): inverse of subset_of for A a strictly increasing subset of [n-1].
Composition composition_from_subset(const std::vector<int>& elements, int n);

// -- refinement order ---------------------------------------------------

/// True iff beta refines alpha: consecutive parts of beta sum to the parts of
/// alpha in order.  Returns false when the sizes differ.
bool refines(const Composition& beta, const Composition& alpha);

/// The blocks beta^(1), ..., beta^(l(alpha)): the runs of parts of beta that
/// sum to each part of alpha.  Requires refines(beta, alpha).
std::vector<Composition> split_blocks(const Composition& beta, const Composition& alpha);

inline constexpr int kCompositionEnumerationCap = 12;

/// All coarsenings (resp. refinements) of alpha, in canonical order.
std::vector<Composition> coarsenings(const Composition& alpha);
std::vector<Composition> refinements(const Composition& alpha,
                                     int cap = kCompositionEnumerationCap);

/// All compositions of n, in canonical order.
std::vector<Composition> compositions_of(int n, int cap = kCompositionEnumerationCap);

/// All partitions of n as weakly decreasing compositions, canonical order.
std::vector<Composition> partitions_of(int n);

/// The distinct rearrangements of the parts of lambda, canonical order.
std::vector<Composition> rearrangements(const Composition& lambda);

/// alpha-tilde: parts sorted weakly decreasing.
Composition sorted_partition(const Composition& alpha);

bool is_partition(const Composition& lambda);

// -- transforms ----------------------------------------------------------

Composition complement(const Composition& alpha); ///< comp(set(alpha)^c)
Composition reversed(const Composition& alpha);
Composition transposed(const Composition& alpha); ///< reversed(complement(alpha))

/// meet: the finest common coarsening (set intersection);
/// join: the coarsest common refinement (set union).  Sizes must agree.
Composition meet(const Composition& a, const Composition& b);
Composition join(const Composition& a, const Composition& b);

Composition concat(const Composition& a, const Composition& b);

// -- scalar statistics ----------------------------------------------------

/// z: the conjugation-stabilizer order of the rearranged partition,
/// prod_i i^{m_i} m_i! over part multiplicities.
BigInt zee(const Composition& alpha);

/// Product of the partial sums of alpha.
BigInt pi_weight(const Composition& alpha);

/// Blockwise product of pi over the blocks of alpha refining beta.
BigInt pi_weight(const Composition& alpha, const Composition& beta);

/// l! * prod(parts), and its blockwise version for beta refining alpha.
BigInt sp_weight(const Composition& gamma);
BigInt sp_weight(const Composition& beta, const Composition& alpha);

/// Product of the last parts of the blocks of beta refining alpha.
BigInt lp_weight(const Composition& beta, const Composition& alpha);

/// Product of the block lengths of beta refining alpha.
BigInt ell_weight(const Composition& beta, const Composition& alpha);

/// prod_j binom(a_j + b_j, a_j) over part-size multiplicities; equals
/// zee(concat(a,b)) / (zee(a) * zee(b)).
BigInt c_binomial(const Composition& a, const Composition& b);

// -- shuffles --------------------------------------------------------------

using Multiplicity = long long;
using CompositionMultiset = std::map<Composition, Multiplicity, CanonicalLess>;

/// All interleavings of a and b preserving internal order, with multiplicity.
CompositionMultiset shuffles(const Composition& a, const Composition& b);

/// Quasi-shuffles: interleavings where an adjacent part of a and part of b
/// may merge by addition.  This is the monomial-basis product rule.
CompositionMultiset overlapping_shuffles(const Composition& a, const Composition& b);

/// Multiplicity of a single target word in overlapping_shuffles(a, b),
/// computed by dynamic programming without materializing the multiset.
Multiplicity overlapping_shuffle_multiplicity(const Composition& a, const Composition& b,
                                              const Composition& target);

// -- Lyndon words ------------------------------------------------------------

/// The word order: u < v if u is a proper prefix of v, or u is smaller at the
/// first differing letter.
bool lyndon_less(const Composition& u, const Composition& v);

/// True iff w is strictly smaller than each of its nonempty proper suffixes.
bool is_lyndon(const Composition& w);

/// The unique factorization of w into a nonincreasing product of Lyndon words.
std::vector<Composition> lyndon_factorization(const Composition& w);

} // namespace qpsum
