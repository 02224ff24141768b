#include "qpsum/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qpsum/errors.hpp"

namespace qpsum {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw DomainError("composition parts must be positive");
        size_ += p;
    }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

bool canonical_less(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.length() != b.length()) return a.length() > b.length();
    return a.parts() > b.parts();
}

std::string to_string(const Composition& alpha) {
    std::string out;
    for (int i = 0; i < alpha.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(alpha[i]);
    }
    return out;
}

Composition parse_composition(const std::string& text, std::size_t position_offset) {
    std::vector<int> parts;
    std::size_t i = 0;
    const std::size_t n = text.size();
    if (n == 0) return Composition{};
    while (true) {
        std::size_t start = i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected a positive integer part", position_offset + i + 1);
        long value = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000) throw ParseError("part too large", position_offset + start + 1);
            ++i;
        }
        if (value == 0)
            throw ParseError("composition parts must be positive", position_offset + start + 1);
        parts.push_back(static_cast<int>(value));
        if (i == n) break;
        if (text[i] != ',')
            throw ParseError("expected ',' between parts", position_offset + i + 1);
        ++i;
    }
    return Composition(std::move(parts));
}

std::vector<int> subset_of(const Composition& alpha) {
    std::vector<int> out;
    int acc = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        acc += alpha[i];
        out.push_back(acc);
    }
    return out;
}

Composition composition_from_subset(const std::vector<int>& elements, int n) {
    if (n < 0) throw SubsetError("ambient size must be nonnegative");
    std::vector<int> parts;
    int prev = 0;
    for (int a : elements) {
        if (a <= 0 || a >= n) throw SubsetError("subset element out of [n-1]");
        if (a <= prev) throw SubsetError("subset elements must be strictly increasing");
        parts.push_back(a - prev);
        prev = a;
    }
    if (n > prev) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

bool refines(const Composition& beta, const Composition& alpha) {
    if (beta.size() != alpha.size()) return false;
    int ai = 0, acc = 0;
    for (int i = 0; i < beta.length(); ++i) {
        if (ai >= alpha.length()) return false;
        acc += beta[i];
        if (acc > alpha[ai]) return false;
        if (acc == alpha[ai]) {
            acc = 0;
            ++ai;
        }
    }
    return ai == alpha.length() && acc == 0;
}

std::vector<Composition> split_blocks(const Composition& beta, const Composition& alpha) {
    if (!refines(beta, alpha))
        throw RefinementError("split requires the first composition to refine the second");
    std::vector<Composition> blocks;
    blocks.reserve(static_cast<std::size_t>(alpha.length()));
    int bi = 0;
    for (int i = 0; i < alpha.length(); ++i) {
        std::vector<int> parts;
        int acc = 0;
        while (acc < alpha[i]) {
            parts.push_back(beta[bi]);
            acc += beta[bi];
            ++bi;
        }
        blocks.emplace_back(std::move(parts));
    }
    return blocks;
}

std::vector<Composition> coarsenings(const Composition& alpha) {
    const std::vector<int> sep = subset_of(alpha);
    const int k = static_cast<int>(sep.size());
    std::vector<Composition> out;
    out.reserve(1u << k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) sub.push_back(sep[static_cast<std::size_t>(i)]);
        out.push_back(composition_from_subset(sub, alpha.size()));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Composition> refinements(const Composition& alpha, int cap) {
    if (alpha.size() > cap) throw ResourceError("refinement enumeration exceeds cap");
    const std::vector<int> sep = subset_of(alpha);
    std::vector<int> rest;
    for (int a = 1; a < alpha.size(); ++a)
        if (!std::binary_search(sep.begin(), sep.end(), a)) rest.push_back(a);
    const int k = static_cast<int>(rest.size());
    std::vector<Composition> out;
    out.reserve(1u << k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> sub = sep;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) sub.push_back(rest[static_cast<std::size_t>(i)]);
        std::sort(sub.begin(), sub.end());
        out.push_back(composition_from_subset(sub, alpha.size()));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Composition> compositions_of(int n, int cap) {
    if (n < 0) throw DomainError("negative size");
    if (n > cap) throw ResourceError("composition enumeration exceeds cap");
    if (n == 0) return {Composition{}};
    return refinements(Composition{n}, cap);
}

std::vector<Composition> partitions_of(int n) {
    if (n < 0) throw DomainError("negative size");
    std::vector<Composition> out;
    std::vector<int> current;
    std::function<void(int, int)> descend = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            descend(remaining - p, p);
            current.pop_back();
        }
    };
    descend(n, n);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Composition> rearrangements(const Composition& lambda) {
    std::vector<int> parts = lambda.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Composition sorted_partition(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Composition(std::move(parts));
}

bool is_partition(const Composition& lambda) {
    return std::is_sorted(lambda.parts().begin(), lambda.parts().end(), std::greater<int>());
}

Composition complement(const Composition& alpha) {
    const std::vector<int> sep = subset_of(alpha);
    std::vector<int> comp;
    for (int a = 1; a < alpha.size(); ++a)
        if (!std::binary_search(sep.begin(), sep.end(), a)) comp.push_back(a);
    return composition_from_subset(comp, alpha.size());
}

Composition reversed(const Composition& alpha) {
    std::vector<int> parts(alpha.parts().rbegin(), alpha.parts().rend());
    return Composition(std::move(parts));
}

Composition transposed(const Composition& alpha) { return reversed(complement(alpha)); }

Composition meet(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) throw SizeError("meet requires equal sizes");
    const std::vector<int> sa = subset_of(a), sb = subset_of(b);
    std::vector<int> out;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
    return composition_from_subset(out, a.size());
}

Composition join(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) throw SizeError("join requires equal sizes");
    const std::vector<int> sa = subset_of(a), sb = subset_of(b);
    std::vector<int> out;
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
    return composition_from_subset(out, a.size());
}

Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

static std::map<int, int> part_multiplicities(const Composition& alpha) {
    std::map<int, int> m;
    for (int p : alpha.parts()) ++m[p];
    return m;
}

BigInt zee(const Composition& alpha) {
    BigInt z = 1;
    for (const auto& [part, mult] : part_multiplicities(alpha)) {
        for (int j = 0; j < mult; ++j) z *= part;
        z *= factorial(mult);
    }
    return z;
}

BigInt pi_weight(const Composition& alpha) {
    BigInt w = 1;
    int acc = 0;
    for (int p : alpha.parts()) {
        acc += p;
        w *= acc;
    }
    return w;
}

BigInt pi_weight(const Composition& alpha, const Composition& beta) {
    BigInt w = 1;
    for (const Composition& block : split_blocks(alpha, beta)) w *= pi_weight(block);
    return w;
}

BigInt sp_weight(const Composition& gamma) {
    BigInt w = factorial(gamma.length());
    for (int p : gamma.parts()) w *= p;
    return w;
}

BigInt sp_weight(const Composition& beta, const Composition& alpha) {
    BigInt w = 1;
    for (const Composition& block : split_blocks(beta, alpha)) w *= sp_weight(block);
    return w;
}

BigInt lp_weight(const Composition& beta, const Composition& alpha) {
    BigInt w = 1;
    for (const Composition& block : split_blocks(beta, alpha)) w *= block.last();
    return w;
}

BigInt ell_weight(const Composition& beta, const Composition& alpha) {
    BigInt w = 1;
    for (const Composition& block : split_blocks(beta, alpha)) w *= block.length();
    return w;
}

BigInt c_binomial(const Composition& a, const Composition& b) {
    const auto ma = part_multiplicities(a);
    const auto mb = part_multiplicities(b);
    BigInt c = 1;
    for (const auto& [part, mult] : ma) {
        auto it = mb.find(part);
        if (it != mb.end()) c *= binomial(mult + it->second, mult);
    }
    return c;
}

static void shuffle_rec(const std::vector<int>& a, std::size_t i, const std::vector<int>& b,
                        std::size_t j, std::vector<int>& prefix, CompositionMultiset& out) {
    if (i == a.size() && j == b.size()) {
        out[Composition(prefix)] += 1;
        return;
    }
    if (i < a.size()) {
        prefix.push_back(a[i]);
        shuffle_rec(a, i + 1, b, j, prefix, out);
        prefix.pop_back();
    }
    if (j < b.size()) {
        prefix.push_back(b[j]);
        shuffle_rec(a, i, b, j + 1, prefix, out);
        prefix.pop_back();
    }
}

CompositionMultiset shuffles(const Composition& a, const Composition& b) {
    CompositionMultiset out;
    std::vector<int> prefix;
    shuffle_rec(a.parts(), 0, b.parts(), 0, prefix, out);
    return out;
}

static void quasi_shuffle_rec(const std::vector<int>& a, std::size_t i, const std::vector<int>& b,
                              std::size_t j, std::vector<int>& prefix, CompositionMultiset& out) {
    if (i == a.size() && j == b.size()) {
        out[Composition(prefix)] += 1;
        return;
    }
    if (i < a.size()) {
        prefix.push_back(a[i]);
        quasi_shuffle_rec(a, i + 1, b, j, prefix, out);
        prefix.pop_back();
    }
    if (j < b.size()) {
        prefix.push_back(b[j]);
        quasi_shuffle_rec(a, i, b, j + 1, prefix, out);
        prefix.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        prefix.push_back(a[i] + b[j]);
        quasi_shuffle_rec(a, i + 1, b, j + 1, prefix, out);
        prefix.pop_back();
    }
}

CompositionMultiset overlapping_shuffles(const Composition& a, const Composition& b) {
    CompositionMultiset out;
    std::vector<int> prefix;
    quasi_shuffle_rec(a.parts(), 0, b.parts(), 0, prefix, out);
    return out;
}

Multiplicity overlapping_shuffle_multiplicity(const Composition& a, const Composition& b,
                                              const Composition& target) {
    if (target.size() != a.size() + b.size()) return 0;
    const int la = a.length(), lb = b.length(), lt = target.length();
    // ways[i][j]: interleavings of the first i parts of a and j parts of b
    // forming the first t(i,j) parts of target; t is implicit in the scan.
    std::vector<std::vector<std::vector<Multiplicity>>> ways(
        static_cast<std::size_t>(la + 1),
        std::vector<std::vector<Multiplicity>>(
            static_cast<std::size_t>(lb + 1),
            std::vector<Multiplicity>(static_cast<std::size_t>(lt + 1), 0)));
    ways[0][0][0] = 1;
    for (int t = 0; t < lt; ++t) {
        for (int i = 0; i <= la; ++i) {
            for (int j = 0; j <= lb; ++j) {
                const Multiplicity w = ways[i][j][t];
                if (w == 0) continue;
                if (i < la && a[i] == target[t]) ways[i + 1][j][t + 1] += w;
                if (j < lb && b[j] == target[t]) ways[i][j + 1][t + 1] += w;
                if (i < la && j < lb && a[i] + b[j] == target[t]) ways[i + 1][j + 1][t + 1] += w;
            }
        }
    }
    return ways[static_cast<std::size_t>(la)][static_cast<std::size_t>(lb)]
               [static_cast<std::size_t>(lt)];
}

bool lyndon_less(const Composition& u, const Composition& v) {
    return std::lexicographical_compare(u.parts().begin(), u.parts().end(), v.parts().begin(),
                                        v.parts().end());
}

bool is_lyndon(const Composition& w) {
    if (w.empty()) throw DomainError("the empty word is not in the Lyndon order");
    const std::vector<int>& p = w.parts();
    for (std::size_t s = 1; s < p.size(); ++s) {
        const Composition suffix(std::vector<int>(p.begin() + static_cast<long>(s), p.end()));
        if (!lyndon_less(w, suffix)) return false;
    }
    return true;
}

std::vector<Composition> lyndon_factorization(const Composition& w) {
    if (w.empty()) throw DomainError("cannot factor the empty word");
    // Duval's algorithm.
    const std::vector<int>& s = w.parts();
    const int n = static_cast<int>(s.size());
    std::vector<Composition> out;
    int i = 0;
    while (i < n) {
        int j = i + 1, k = i;
        while (j < n && s[static_cast<std::size_t>(k)] <= s[static_cast<std::size_t>(j)]) {
            if (s[static_cast<std::size_t>(k)] < s[static_cast<std::size_t>(j)])
                k = i;
            else
                ++k;
            ++j;
        }
        while (i <= k) {
            out.emplace_back(std::vector<int>(s.begin() + i, s.begin() + i + (j - k)));
            i += j - k;
        }
    }
    return out;
}

} // namespace qpsum
