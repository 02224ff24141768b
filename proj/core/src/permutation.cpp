#include "qpsum/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "qpsum/errors.hpp"

namespace qpsum {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw ValidityError("word is not a permutation of [n]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

std::string to_string(const Permutation& sigma) {
    std::string out;
    const bool digits = sigma.size() <= 9;
    for (int i = 0; i < sigma.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(sigma[i]);
    }
    return out;
}

Permutation parse_permutation(const std::string& text) {
    std::vector<int> word;
    if (text.find(',') != std::string::npos) {
        std::size_t i = 0;
        while (i < text.size()) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected a value in permutation", i + 1);
            word.push_back(std::stoi(text.substr(start, i - start)));
            if (i < text.size()) {
                if (text[i] != ',') throw ParseError("expected ','", i + 1);
                ++i;
            }
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '0')
                throw ParseError("expected digits 1-9 in one-line permutation", i + 1);
            word.push_back(text[i] - '0');
        }
    }
    try {
        return Permutation(std::move(word));
    } catch (const ValidityError& e) {
        throw ParseError(e.what(), 1);
    }
}

int CycleForm::size() const {
    int n = 0;
    for (const auto& c : cycles) n += static_cast<int>(c.size());
    return n;
}

std::string to_string(const CycleForm& cf) {
    std::string out;
    for (const auto& cycle : cf.cycles) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out;
}

CycleForm parse_cycle_form(const std::string& text) {
    CycleForm cf;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '('", i + 1);
        ++i;
        std::vector<int> cycle;
        while (i < text.size() && text[i] != ')') {
            while (i < text.size() && text[i] == ' ') ++i;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected a value in cycle", i + 1);
            cycle.push_back(std::stoi(text.substr(start, i - start)));
            while (i < text.size() && text[i] == ' ') ++i;
        }
        if (i == text.size()) throw ParseError("unterminated cycle", i + 1);
        ++i; // ')'
        if (cycle.empty()) throw ParseError("empty cycle", i);
        cf.cycles.push_back(std::move(cycle));
    }
    return cf;
}

static void validate_cycles(const CycleForm& cf) {
    const int n = cf.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& cycle : cf.cycles) {
        if (cycle.empty()) throw ValidityError("empty cycle");
        for (int v : cycle) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw ValidityError("cycles must partition [n]");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
}

CycleForm cycles_of(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
    CycleForm cf;
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        int v = start;
        do {
            visited[static_cast<std::size_t>(v)] = true;
            cycle.push_back(v);
            v = sigma.image(v);
        } while (v != start);
        cf.cycles.push_back(std::move(cycle));
    }
    return cf;
}

Permutation permutation_from_cycles(const CycleForm& cf) {
    validate_cycles(cf);
    const int n = cf.size();
    std::vector<int> word(static_cast<std::size_t>(n));
    for (const auto& cycle : cf.cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int from = cycle[i];
            const int to = cycle[(i + 1) % cycle.size()];
            word[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    return Permutation(std::move(word));
}

static std::vector<int> rotate_max_last(const std::vector<int>& cycle) {
    const auto max_it = std::max_element(cycle.begin(), cycle.end());
    std::vector<int> out(max_it + 1, cycle.end());
    out.insert(out.end(), cycle.begin(), max_it + 1);
    return out;
}

CycleForm canonical_cycle_form(const CycleForm& cf, CycleOrder order) {
    validate_cycles(cf);
    CycleForm out;
    out.cycles.reserve(cf.cycles.size());
    for (const auto& cycle : cf.cycles) out.cycles.push_back(rotate_max_last(cycle));
    auto max_of = [](const std::vector<int>& c) { return c.back(); };
    if (order == CycleOrder::standard) {
        std::sort(out.cycles.begin(), out.cycles.end(),
                  [&](const auto& a, const auto& b) { return max_of(a) < max_of(b); });
    } else {
        std::sort(out.cycles.begin(), out.cycles.end(), [&](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return max_of(a) < max_of(b);
        });
    }
    return out;
}

CycleForm canonical_cycle_form(const Permutation& sigma, CycleOrder order) {
    return canonical_cycle_form(cycles_of(sigma), order);
}

Composition cycle_type(const CycleForm& cf) {
    std::vector<int> lengths;
    lengths.reserve(cf.cycles.size());
    for (const auto& c : cf.cycles) lengths.push_back(static_cast<int>(c.size()));
    return Composition(std::move(lengths));
}

bool is_partition_form(const CycleForm& cf) {
    for (std::size_t i = 0; i < cf.cycles.size(); ++i) {
        const auto& c = cf.cycles[i];
        if (*std::max_element(c.begin(), c.end()) != c.back()) return false;
        if (i > 0) {
            const auto& prev = cf.cycles[i - 1];
            if (prev.size() < c.size()) return false;
            if (prev.size() == c.size() && prev.back() > c.back()) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> split_word(const Permutation& sigma, const Composition& beta) {
    if (sigma.size() != beta.size()) throw SizeError("permutation and composition sizes differ");
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(beta.length()));
    int pos = 0;
    for (int i = 0; i < beta.length(); ++i) {
        out.emplace_back(sigma.word().begin() + pos, sigma.word().begin() + pos + beta[i]);
        pos += beta[i];
    }
    return out;
}

/// Checks the word segment against one block of parts: every part's segment
/// must end in its maximum, and those maxima must increase along the block.
static bool block_consistent(const std::vector<int>& word, const Composition& block) {
    int pos = 0;
    int prev_max = 0;
    for (int j = 0; j < block.length(); ++j) {
        const auto begin = word.begin() + pos;
        const auto end = begin + block[j];
        const int mx = *std::max_element(begin, end);
        if (*(end - 1) != mx) return false;
        if (mx < prev_max) return false;
        prev_max = mx;
        pos += block[j];
    }
    return true;
}

bool is_consistent(const Permutation& sigma, const Composition& alpha, const Composition& beta) {
    if (sigma.size() != alpha.size()) throw SizeError("permutation size must match |alpha|");
    if (!refines(alpha, beta)) throw RefinementError("alpha must refine beta");
    const auto blocks = split_blocks(alpha, beta);
    const auto words = split_word(sigma, beta);
    for (std::size_t i = 0; i < words.size(); ++i)
        if (!block_consistent(words[i], blocks[i])) return false;
    return true;
}

std::vector<Permutation> all_permutations(int n, int cap) {
    if (n < 0) throw DomainError("negative size");
    if (n > cap) throw ResourceError("permutation enumeration exceeds cap");
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<Permutation> consistent_permutations(const Composition& alpha,
                                                 const Composition& beta, int cap) {
    if (!refines(alpha, beta)) throw RefinementError("alpha must refine beta");
    std::vector<Permutation> out;
    for (const Permutation& sigma : all_permutations(alpha.size(), cap))
        if (is_consistent(sigma, alpha, beta)) out.push_back(sigma);
    return out;
}

Composition coarsest_consistent(const Composition& alpha, const Permutation& sigma) {
    if (!is_consistent(sigma, alpha, alpha))
        throw ConsistencyError("sigma is not consistent with alpha <= alpha");
    // Block maxima of the alpha-segments; merging is allowed exactly across
    // ascents, so the coarsest choice merges every maximal increasing run.
    const auto words = split_word(sigma, alpha);
    std::vector<int> maxima;
    maxima.reserve(words.size());
    for (const auto& w : words) maxima.push_back(*std::max_element(w.begin(), w.end()));
    std::vector<int> parts;
    int acc = 0;
    for (int i = 0; i < alpha.length(); ++i) {
        acc += alpha[i];
        if (i + 1 == alpha.length() ||
            maxima[static_cast<std::size_t>(i)] > maxima[static_cast<std::size_t>(i + 1)]) {
            parts.push_back(acc);
            acc = 0;
        }
    }
    return Composition(std::move(parts));
}

} // namespace qpsum
