#pragma once

#include <string>
#include <vector>

#include "qpsum/composition.hpp"

namespace qpsum {

/// A permutation of [n] in one-line notation, 1-based values.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    int operator[](int i) const { return word_[static_cast<std::size_t>(i)]; }

    /// Image of v under the permutation (functional reading of the word).
    int image(int v) const { return word_[static_cast<std::size_t>(v - 1)]; }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.word_ == b.word_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.word_ < b.word_;
    }

private:
    std::vector<int> word_;
};

/// Digit string for n <= 9 ("267394518"), comma-separated otherwise.
std::string to_string(const Permutation& sigma);
Permutation parse_permutation(const std::string& text);

/// A permutation written in cycle notation: an ordered list of cycles, each a
/// nonempty list of distinct values; together the cycles partition [n].
struct CycleForm {
    std::vector<std::vector<int>> cycles;

    int size() const;
    friend bool operator==(const CycleForm& a, const CycleForm& b) {
        return a.cycles == b.cycles;
    }
};

enum class CycleOrder {
    standard,  ///< max last in each cycle; cycles by increasing maximum
    partition, ///< max last; cycles by decreasing length, ties by increasing maximum
};

/// Serializes as "(7 3 9)(4 5)(2 6)(1 8)".
std::string to_string(const CycleForm& cf);
CycleForm parse_cycle_form(const std::string& text);

/// Orbit decomposition of sigma (cycles of the function).
CycleForm cycles_of(const Permutation& sigma);

/// The permutation whose functional cycles are the given ones.
Permutation permutation_from_cycles(const CycleForm& cf);

/// Rewrites the cycles into the requested canonical order; content-preserving.
CycleForm canonical_cycle_form(const CycleForm& cf, CycleOrder order);
CycleForm canonical_cycle_form(const Permutation& sigma, CycleOrder order);

/// Ordered cycle lengths.
Composition cycle_type(const CycleForm& cf);

/// True iff the cycles are in partition form (max last; length descending,
/// ties by increasing maximum).
bool is_partition_form(const CycleForm& cf);

/// The contiguous factors of sigma's word with lengths beta_1, ..., beta_k.
std::vector<std::vector<int>> split_word(const Permutation& sigma, const Composition& beta);

/// True iff parenthesizing each beta-block of sigma by the corresponding
/// block of alpha yields cycles in standard form (each cycle's maximum last,
/// cycle maxima increasing within the block).  Requires refines(alpha, beta).
bool is_consistent(const Permutation& sigma, const Composition& alpha, const Composition& beta);

inline constexpr int kPermutationEnumerationCap = 9;

/// All of S_n in lexicographic word order.
std::vector<Permutation> all_permutations(int n, int cap = kPermutationEnumerationCap);

/// Cons_{alpha <= beta}: the consistent permutations, in word order.
std::vector<Permutation> consistent_permutations(const Composition& alpha,
                                                 const Composition& beta,
                                                 int cap = kPermutationEnumerationCap);

/// The coarsest beta >= alpha such that sigma is consistent with alpha <= beta.
/// Requires sigma consistent with alpha <= alpha.
Composition coarsest_consistent(const Composition& alpha, const Permutation& sigma);

} // namespace qpsum
