#include "qpsum/bijections.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "qpsum/errors.hpp"

namespace qpsum {

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks_)
    : blocks(std::move(blocks_)) {
    int count = 0;
    for (auto& block : blocks) {
        if (block.empty()) throw PartitionError("ordered set partition blocks must be nonempty");
        std::sort(block.begin(), block.end());
        count += static_cast<int>(block.size());
    }
    std::vector<bool> seen(static_cast<std::size_t>(count) + 1, false);
    for (const auto& block : blocks) {
        for (int v : block) {
            if (v < 1 || v > count || seen[static_cast<std::size_t>(v)])
                throw PartitionError("blocks must be disjoint and cover {1..k}");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
}

int OrderedSetPartition::ground_size() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

std::string to_string(const OrderedSetPartition& osp) {
    std::string out = "(";
    for (std::size_t i = 0; i < osp.blocks.size(); ++i) {
        if (i > 0) out += ',';
        out += '{';
        for (std::size_t j = 0; j < osp.blocks[i].size(); ++j) {
            if (j > 0) out += ',';
            out += std::to_string(osp.blocks[i][j]);
        }
        out += '}';
    }
    return out + ")";
}

OrderedSetPartition parse_ordered_set_partition(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> ParseError { return ParseError(msg, i + 1); };
    if (i >= text.size() || text[i] != '(') throw fail("expected '('");
    ++i;
    std::vector<std::vector<int>> blocks;
    while (i < text.size() && text[i] != ')') {
        if (text[i] != '{') throw fail("expected '{'");
        ++i;
        std::vector<int> block;
        while (i < text.size() && text[i] != '}') {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw fail("expected a value in block");
            block.push_back(std::stoi(text.substr(start, i - start)));
            if (i < text.size() && text[i] == ',') ++i;
        }
        if (i >= text.size()) throw fail("unterminated block");
        ++i; // '}'
        blocks.push_back(std::move(block));
        if (i < text.size() && text[i] == ',') ++i;
    }
    if (i >= text.size()) throw fail("unterminated partition");
    try {
        return OrderedSetPartition(std::move(blocks));
    } catch (const PartitionError& e) {
        throw ParseError(e.what(), 1);
    }
}

// -- shift vectors ------------------------------------------------------

ShiftVector make_shift_vector(std::vector<std::vector<int>> entries, const Composition& alpha,
                              const Composition& beta) {
    const auto blocks = split_blocks(alpha, beta);
    if (entries.size() != blocks.size())
        throw DomainError("shift vector must have one group per block");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (static_cast<int>(entries[i].size()) != blocks[i].length())
            throw DomainError("shift group length must match the block length");
        int prefix = 0;
        for (int j = 0; j < blocks[i].length(); ++j) {
            prefix += blocks[i][j];
            const int s = entries[i][static_cast<std::size_t>(j)];
            if (s < 0 || s >= prefix)
                throw DomainError("shift entry out of range for its prefix sum");
        }
    }
    ShiftVector sv;
    sv.entries = std::move(entries);
    return sv;
}

ShiftVector make_shift_vector(const std::vector<int>& flat, const Composition& alpha,
                              const Composition& beta) {
    const auto blocks = split_blocks(alpha, beta);
    if (static_cast<int>(flat.size()) != alpha.length())
        throw DomainError("expected one shift per part of alpha");
    std::vector<std::vector<int>> entries;
    std::size_t pos = 0;
    for (const auto& block : blocks) {
        entries.emplace_back(flat.begin() + static_cast<long>(pos),
                             flat.begin() + static_cast<long>(pos + block.parts().size()));
        pos += block.parts().size();
    }
    return make_shift_vector(std::move(entries), alpha, beta);
}

// -- Sh ------------------------------------------------------------------

Permutation sh_forward(const Permutation& sigma, const ShiftVector& shifts,
                       const Composition& alpha, const Composition& beta) {
    if (!is_consistent(sigma, alpha, beta))
        throw ConsistencyError("sigma must be consistent with alpha <= beta");
    make_shift_vector(shifts.entries, alpha, beta); // revalidate shape and ranges
    const auto blocks = split_blocks(alpha, beta);
    auto words = split_word(sigma, beta);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto& w = words[i];
        int prefix = 0;
        for (int j = 0; j < blocks[i].length(); ++j) {
            prefix += blocks[i][j];
            const int s = shifts.entries[i][static_cast<std::size_t>(j)];
            std::rotate(w.begin(), w.begin() + (prefix - s), w.begin() + prefix);
        }
    }
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(alpha.size()));
    for (const auto& w : words) word.insert(word.end(), w.begin(), w.end());
    return Permutation(std::move(word));
}

std::pair<Permutation, ShiftVector> sh_inverse(const Permutation& tau, const Composition& alpha,
                                               const Composition& beta) {
    if (tau.size() != alpha.size()) throw SizeError("permutation size must match |alpha|");
    if (!refines(alpha, beta)) throw RefinementError("alpha must refine beta");
    const auto blocks = split_blocks(alpha, beta);
    auto words = split_word(tau, beta);
    std::vector<std::vector<int>> entries(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto& w = words[i];
        entries[i].assign(static_cast<std::size_t>(blocks[i].length()), 0);
        std::vector<int> prefix_sums;
        int acc = 0;
        for (int p : blocks[i].parts()) {
            acc += p;
            prefix_sums.push_back(acc);
        }
        // Undo the rotations from the longest prefix down, cycling left until
        // the largest value in the prefix is last and recording the shifts.
        for (int j = blocks[i].length() - 1; j >= 0; --j) {
            const int a = prefix_sums[static_cast<std::size_t>(j)];
            const auto max_it = std::max_element(w.begin(), w.begin() + a);
            const int pos = static_cast<int>(max_it - w.begin());
            const int t = (pos + 1) % a;
            std::rotate(w.begin(), w.begin() + t, w.begin() + a);
            entries[i][static_cast<std::size_t>(j)] = t;
        }
    }
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(alpha.size()));
    for (const auto& w : words) word.insert(word.end(), w.begin(), w.end());
    return {Permutation(std::move(word)), make_shift_vector(std::move(entries), alpha, beta)};
}

// -- Br ------------------------------------------------------------------

std::pair<OrderedSetPartition, CycleForm> br_forward(const Composition& alpha,
                                                     const Permutation& sigma,
                                                     const Composition& beta) {
    if (!is_consistent(sigma, alpha, beta))
        throw ConsistencyError("sigma must be consistent with alpha <= beta");
    // Parenthesize the word by alpha; each segment is already max-last.
    const auto segments = split_word(sigma, alpha);
    CycleForm parenthesized;
    parenthesized.cycles = segments;
    CycleForm pf = canonical_cycle_form(parenthesized, CycleOrder::partition);

    // Which beta-block each value sits in.
    std::vector<int> block_of(static_cast<std::size_t>(beta.size()) + 1, 0);
    {
        int pos = 0;
        for (int i = 0; i < beta.length(); ++i) {
            for (int j = 0; j < beta[i]; ++j)
                block_of[static_cast<std::size_t>(sigma[pos + j])] = i;
            pos += beta[i];
        }
    }
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(beta.length()));
    for (std::size_t j = 0; j < pf.cycles.size(); ++j) {
        const int blk = block_of[static_cast<std::size_t>(pf.cycles[j].front())];
        groups[static_cast<std::size_t>(blk)].push_back(static_cast<int>(j) + 1);
    }
    return {OrderedSetPartition(std::move(groups)), std::move(pf)};
}

std::pair<Composition, Permutation> br_inverse(const OrderedSetPartition& grouping,
                                               const CycleForm& partition_form,
                                               const Composition& beta) {
    if (!is_partition_form(partition_form))
        throw ValidityError("cycles must be given in partition form");
    const int k = static_cast<int>(partition_form.cycles.size());
    if (grouping.ground_size() != k)
        throw PartitionError("grouping must partition the cycle indices");
    if (grouping.block_count() != beta.length())
        throw PartitionError("grouping must have one block per part of beta");

    std::vector<int> word;
    std::vector<int> alpha_parts;
    word.reserve(static_cast<std::size_t>(beta.size()));
    for (int i = 0; i < beta.length(); ++i) {
        std::vector<std::vector<int>> cycles;
        int total = 0;
        for (int j : grouping.blocks[static_cast<std::size_t>(i)]) {
            const auto& c = partition_form.cycles[static_cast<std::size_t>(j - 1)];
            total += static_cast<int>(c.size());
            cycles.push_back(c);
        }
        if (total != beta[i])
            throw PartitionError("cycle lengths in block do not sum to the part of beta");
        // standard order within the block: increasing maxima (maxima are last)
        std::sort(cycles.begin(), cycles.end(),
                  [](const auto& a, const auto& b) { return a.back() < b.back(); });
        for (const auto& c : cycles) {
            alpha_parts.push_back(static_cast<int>(c.size()));
            word.insert(word.end(), c.begin(), c.end());
        }
    }
    return {Composition(std::move(alpha_parts)), Permutation(std::move(word))};
}

// -- groupings -----------------------------------------------------------

static void groupings_rec(const Composition& alpha, const Composition& beta, std::size_t block,
                          std::vector<int>& remaining, std::vector<std::vector<int>>& chosen,
                          std::vector<OrderedSetPartition>& out) {
    if (block == static_cast<std::size_t>(beta.length())) {
        if (remaining.empty()) out.push_back(OrderedSetPartition(chosen));
        return;
    }
    const int target = beta[static_cast<int>(block)];
    // choose a subset of the remaining indices with alpha-sum equal to target
    std::vector<int> subset;
    std::function<void(std::size_t, int)> choose = [&](std::size_t from, int sum) {
        if (sum == target) {
            std::vector<int> next_remaining;
            std::size_t si = 0;
            for (int idx : remaining) {
                if (si < subset.size() && subset[si] == idx)
                    ++si;
                else
                    next_remaining.push_back(idx);
            }
            chosen.push_back(subset);
            std::swap(remaining, next_remaining);
            groupings_rec(alpha, beta, block + 1, remaining, chosen, out);
            std::swap(remaining, next_remaining);
            chosen.pop_back();
            return;
        }
        for (std::size_t i = from; i < remaining.size(); ++i) {
            const int idx = remaining[i];
            const int part = alpha[idx - 1];
            if (sum + part > target) continue;
            subset.push_back(idx);
            choose(i + 1, sum + part);
            subset.pop_back();
        }
    };
    choose(0, 0);
}

std::vector<OrderedSetPartition> enumerate_groupings(const Composition& alpha,
                                                     const Composition& beta) {
    if (alpha.size() != beta.size()) throw SizeError("groupings require equal sizes");
    if (alpha.empty()) return {};
    std::vector<int> remaining(static_cast<std::size_t>(alpha.length()));
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<std::vector<int>> chosen;
    std::vector<OrderedSetPartition> out;
    groupings_rec(alpha, beta, 0, remaining, chosen, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long count_groupings(const Composition& alpha, const Composition& beta) {
    if (alpha.empty() && beta.empty()) return 1;
    return static_cast<long long>(enumerate_groupings(alpha, beta).size());
}

// -- prescribed-size ordered set partitions --------------------------------

static void sized_osp_rec(const std::vector<int>& sizes, std::size_t block,
                          std::vector<int>& remaining, std::vector<std::vector<int>>& chosen,
                          std::vector<OrderedSetPartition>& out) {
    if (block == sizes.size()) {
        out.push_back(OrderedSetPartition(chosen));
        return;
    }
    const int want = sizes[block];
    std::vector<int> subset;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (static_cast<int>(subset.size()) == want) {
            std::vector<int> next_remaining;
            std::size_t si = 0;
            for (int idx : remaining) {
                if (si < subset.size() && subset[si] == idx)
                    ++si;
                else
                    next_remaining.push_back(idx);
            }
            chosen.push_back(subset);
            std::swap(remaining, next_remaining);
            sized_osp_rec(sizes, block + 1, remaining, chosen, out);
            std::swap(remaining, next_remaining);
            chosen.pop_back();
            return;
        }
        const int need = want - static_cast<int>(subset.size());
        for (std::size_t i = from; i + static_cast<std::size_t>(need) <= remaining.size(); ++i) {
            subset.push_back(remaining[i]);
            choose(i + 1);
            subset.pop_back();
        }
    };
    choose(0);
}

std::vector<OrderedSetPartition> enumerate_osp(const Composition& alpha,
                                               const Composition& beta) {
    if (!refines(alpha, beta)) return {};
    if (alpha.empty()) return {};
    std::vector<int> sizes;
    for (const Composition& block : split_blocks(alpha, beta)) sizes.push_back(block.length());
    std::vector<int> remaining(static_cast<std::size_t>(alpha.length()));
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<std::vector<int>> chosen;
    std::vector<OrderedSetPartition> out;
    sized_osp_rec(sizes, 0, remaining, chosen, out);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt osp_count(const Composition& alpha, const Composition& beta) {
    if (!refines(alpha, beta)) return 0;
    BigInt count = factorial(alpha.length());
    for (const Composition& block : split_blocks(alpha, beta))
        count /= factorial(block.length());
    return count;
}

std::vector<OrderedSetPartition> size_class_partitions(const Composition& lambda) {
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    std::vector<int> sizes;
    for (const auto& [part, m] : mult) sizes.push_back(m);
    std::vector<int> remaining(static_cast<std::size_t>(lambda.length()));
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<std::vector<int>> chosen;
    std::vector<OrderedSetPartition> out;
    if (lambda.empty()) return out;
    sized_osp_rec(sizes, 0, remaining, chosen, out);
    std::sort(out.begin(), out.end());
    return out;
}

// -- g ----------------------------------------------------------------------

/// Positions of each part size, ascending, for stable relabelings.
static std::map<int, std::vector<int>> positions_by_size(const Composition& c) {
    std::map<int, std::vector<int>> pos;
    for (int i = 0; i < c.length(); ++i) pos[c[i]].push_back(i + 1);
    return pos;
}

static Permutation word_of_osp(const OrderedSetPartition& osp) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(osp.ground_size()));
    for (const auto& block : osp.blocks) word.insert(word.end(), block.begin(), block.end());
    return Permutation(std::move(word));
}

std::pair<Composition, OrderedSetPartition> g_forward(const OrderedSetPartition& A,
                                                      const OrderedSetPartition& B,
                                                      const Composition& lambda,
                                                      const Composition& beta) {
    if (!is_partition(lambda)) throw PartitionError("lambda must be weakly decreasing");
    if (lambda.size() != beta.size()) throw SizeError("|lambda| must equal |beta|");
    const auto lambda_pos = positions_by_size(lambda);
    // A: one block per distinct part size, ascending; block t holds the
    // positions receiving the t-th smallest size.
    if (A.ground_size() != lambda.length() ||
        A.block_count() != static_cast<int>(lambda_pos.size()))
        throw PartitionError("size-class partition does not match lambda");
    {
        auto it = lambda_pos.begin();
        for (const auto& block : A.blocks) {
            if (block.size() != it->second.size())
                throw PartitionError("size-class block has the wrong multiplicity");
            ++it;
        }
    }
    // B must group lambda's parts into beta.
    if (B.ground_size() != lambda.length() || B.block_count() != beta.length())
        throw PartitionError("grouping does not match lambda and beta");
    for (int j = 0; j < beta.length(); ++j) {
        int sum = 0;
        for (int i : B.blocks[static_cast<std::size_t>(j)]) sum += lambda[i - 1];
        if (sum != beta[j]) throw PartitionError("grouping block sums do not match beta");
    }

    // alpha' assigns size s_t to the positions in A's t-th block.
    std::vector<int> alpha_prime(static_cast<std::size_t>(lambda.length()), 0);
    {
        auto it = lambda_pos.begin();
        for (const auto& block : A.blocks) {
            for (int j : block) alpha_prime[static_cast<std::size_t>(j - 1)] = it->first;
            ++it;
        }
    }
    // Stable relabeling lambda -> alpha': the i-th part of a given size in
    // lambda maps to the i-th position of that size in alpha' (which is the
    // sorted block of A).
    std::vector<int> relabel(static_cast<std::size_t>(lambda.length()) + 1, 0);
    {
        auto it = lambda_pos.begin();
        for (const auto& block : A.blocks) {
            const auto& from = it->second;
            for (std::size_t i = 0; i < from.size(); ++i)
                relabel[static_cast<std::size_t>(from[i])] = block[i];
            ++it;
        }
    }
    std::vector<std::vector<int>> c_blocks;
    c_blocks.reserve(B.blocks.size());
    for (const auto& block : B.blocks) {
        std::vector<int> image;
        image.reserve(block.size());
        for (int v : block) image.push_back(relabel[static_cast<std::size_t>(v)]);
        c_blocks.push_back(std::move(image));
    }
    OrderedSetPartition C(std::move(c_blocks));

    // alpha_j = alpha'_{w_C(j)}
    const Permutation wc = word_of_osp(C);
    std::vector<int> alpha_parts(static_cast<std::size_t>(lambda.length()));
    for (int j = 1; j <= lambda.length(); ++j)
        alpha_parts[static_cast<std::size_t>(j - 1)] =
            alpha_prime[static_cast<std::size_t>(wc.image(j) - 1)];
    return {Composition(std::move(alpha_parts)), std::move(C)};
}

std::pair<OrderedSetPartition, OrderedSetPartition> g_inverse(const Composition& alpha,
                                                              const OrderedSetPartition& C,
                                                              const Composition& beta) {
    if (!refines(alpha, beta)) throw RefinementError("alpha must refine beta");
    const auto blocks = split_blocks(alpha, beta);
    if (C.ground_size() != alpha.length() || C.block_count() != beta.length())
        throw DomainError("C is not a prescribed-size partition for (alpha, beta)");
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (static_cast<int>(C.blocks[i].size()) != blocks[i].length())
            throw DomainError("C block sizes must match the block lengths of alpha in beta");

    const Permutation wc = word_of_osp(C);
    // alpha'_{w_C(j)} = alpha_j
    std::vector<int> alpha_prime(static_cast<std::size_t>(alpha.length()), 0);
    for (int j = 1; j <= alpha.length(); ++j)
        alpha_prime[static_cast<std::size_t>(wc.image(j) - 1)] = alpha[j - 1];
    const Composition alpha_prime_comp{std::vector<int>(alpha_prime)};

    const Composition lambda = sorted_partition(alpha);
    const auto prime_pos = positions_by_size(alpha_prime_comp);
    const auto lambda_pos = positions_by_size(lambda);

    std::vector<std::vector<int>> a_blocks;
    a_blocks.reserve(prime_pos.size());
    for (const auto& [part, positions] : prime_pos) a_blocks.push_back(positions);
    OrderedSetPartition A(std::move(a_blocks));

    // Stable relabeling alpha' -> lambda.
    std::vector<int> relabel(static_cast<std::size_t>(alpha.length()) + 1, 0);
    for (const auto& [part, positions] : prime_pos) {
        const auto& to = lambda_pos.at(part);
        for (std::size_t i = 0; i < positions.size(); ++i)
            relabel[static_cast<std::size_t>(positions[i])] = to[i];
    }
    std::vector<std::vector<int>> b_blocks;
    b_blocks.reserve(C.blocks.size());
    for (const auto& block : C.blocks) {
        std::vector<int> image;
        image.reserve(block.size());
        for (int v : block) image.push_back(relabel[static_cast<std::size_t>(v)]);
        b_blocks.push_back(std::move(image));
    }
    return {std::move(A), OrderedSetPartition(std::move(b_blocks))};
}

} // namespace qpsum
