#include <algorithm>
#include <functional>
#include <map>

#include "qpsum/algebra.hpp"
#include "qpsum/errors.hpp"

namespace qpsum {

namespace {

int sign_pow(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

void require_qsym(const BasisElement& f, const char* what) {
    if (f.side() != Side::qsym) throw SideError(what);
}

} // namespace

BasisElement multiply(const BasisElement& f, const BasisElement& g) {
    require_qsym(f, "products are defined on the quasisymmetric side");
    require_qsym(g, "products are defined on the quasisymmetric side");
    const BasisElement fm = expand_to_monomial(f);
    const BasisElement gm = expand_to_monomial(g);
    BasisElement product(Basis::M);
    for (const auto& [delta, cd] : fm.terms()) {
        for (const auto& [eta, ce] : gm.terms()) {
            const Rational c = cd * ce;
            for (const auto& [zeta, mult] : overlapping_shuffles(delta, eta))
                product.add_term(zeta, c * mult);
        }
    }
    return convert(product, f.basis());
}

static BasisElement shuffle_product(Basis basis, const Composition& alpha,
                                    const Composition& beta) {
    BasisElement out(basis);
    const Rational inv_c = Rational(1) / Rational(c_binomial(alpha, beta));
    for (const auto& [gamma, mult] : shuffles(alpha, beta)) out.add_term(gamma, inv_c * mult);
    return out;
}

BasisElement psi_shuffle_product(const Composition& alpha, const Composition& beta) {
    return shuffle_product(Basis::Psi, alpha, beta);
}

BasisElement phi_shuffle_product(const Composition& alpha, const Composition& beta) {
    return shuffle_product(Basis::Phi, alpha, beta);
}

BasisElement antipode(const BasisElement& f) {
    require_qsym(f, "the antipode acts on the quasisymmetric side here");
    const BasisElement in_f = convert(f, Basis::F);
    BasisElement image(Basis::F);
    for (const auto& [delta, c] : in_f.terms())
        image.add_term(transposed(delta), c * sign_pow(delta.size()));
    return convert(image, f.basis());
}

BasisElement omega_map(const BasisElement& f) {
    require_qsym(f, "omega acts on the quasisymmetric side here");
    const BasisElement in_f = convert(f, Basis::F);
    BasisElement image(Basis::F);
    for (const auto& [delta, c] : in_f.terms()) image.add_term(transposed(delta), c);
    return convert(image, f.basis());
}

BasisElement monomial_interval_to_fundamental(const Composition& alpha,
                                              const Composition& beta) {
    if (!refines(alpha, beta)) throw RefinementError("alpha must refine beta");
    const int n = alpha.size();
    const std::vector<int> base = subset_of(beta);
    const std::vector<int> alpha_set = subset_of(alpha);
    std::vector<int> extra; // separators absent from alpha, freely addable
    for (int a = 1; a < n; ++a)
        if (!std::binary_search(alpha_set.begin(), alpha_set.end(), a)) extra.push_back(a);
    BasisElement out(Basis::F);
    const int k = static_cast<int>(extra.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> sub = base;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) sub.push_back(extra[static_cast<std::size_t>(i)]);
        std::sort(sub.begin(), sub.end());
        const Composition delta = composition_from_subset(sub, n);
        out.add_term(delta, sign_pow(beta.length() - delta.length()));
    }
    return out;
}

BasisElement power_to_fundamental(const Composition& alpha, PowerKind kind, int cap) {
    if (alpha.empty()) return BasisElement::unit(Basis::F);
    const int n = alpha.size();
    BasisElement out(Basis::F);
    if (kind == PowerKind::type1) {
        // Group the alpha-consistent permutations by the coarsest composition
        // they stay consistent with; each group contributes one signed
        // fundamental per coarsening of complement(alpha).
        std::map<Composition, long long, CanonicalLess> hat_counts;
        for (const Permutation& sigma : consistent_permutations(alpha, alpha, cap))
            ++hat_counts[coarsest_consistent(alpha, sigma)];
        const Rational prefactor = Rational(zee(alpha)) / Rational(factorial(n));
        for (const auto& [gamma, count] : hat_counts) {
            for (const Composition& eta : coarsenings(complement(alpha))) {
                const Composition delta = join(gamma, eta);
                out.add_term(delta, prefactor * count * sign_pow(eta.length() - 1));
            }
        }
    } else {
        BigInt multinomial = factorial(alpha.length());
        {
            std::map<int, int> mult;
            for (int p : alpha.parts()) ++mult[p];
            for (const auto& [part, m] : mult) multinomial /= factorial(m);
        }
        const Rational prefactor = Rational(1) / Rational(multinomial);
        for (const Composition& gamma : compositions_of(n)) {
            Rational inner = 0;
            for (const Composition& beta : coarsenings(meet(gamma, alpha)))
                inner += Rational(sign_pow(gamma.length() - beta.length())) *
                         Rational(osp_count(alpha, beta));
            out.add_term(gamma, prefactor * inner);
        }
    }
    return out;
}

BasisElement power_type_transition(const Composition& alpha, PowerKind from) {
    // Double sums over alpha <= beta <= gamma.  The scaled bases need the
    // 1/z_gamma factor on top of the dualized homogeneous-basis coefficients.
    const Basis target = from == PowerKind::type1 ? Basis::Phi : Basis::Psi;
    BasisElement out(target);
    const Rational z_alpha(zee(alpha));
    for (const Composition& beta : coarsenings(alpha)) {
        const Rational mid =
            from == PowerKind::type1
                ? z_alpha / Rational(pi_weight(alpha, beta))
                : z_alpha / Rational(sp_weight(alpha, beta));
        for (const Composition& gamma : coarsenings(beta)) {
            Rational coeff = mid * sign_pow(beta.length() - gamma.length());
            if (from == PowerKind::type1) {
                BigInt parts_product = 1;
                for (int p : gamma.parts()) parts_product *= p;
                coeff *= Rational(parts_product) / Rational(ell_weight(beta, gamma));
            } else {
                coeff *= Rational(lp_weight(beta, gamma));
            }
            coeff /= Rational(zee(gamma));
            out.add_term(gamma, coeff);
        }
    }
    return out;
}

BasisElement symmetric_power_in_monomial(const Composition& lambda) {
    if (!is_partition(lambda)) throw PartitionError("lambda must be weakly decreasing");
    if (lambda.empty()) return BasisElement::unit(Basis::M);
    BasisElement out(Basis::M);
    for (const Composition& alpha : compositions_of(lambda.size())) {
        const long long r = count_groupings(lambda, alpha);
        if (r != 0) out.add_term(alpha, r);
    }
    return out;
}

BasisElement power_refinement_sum(const Composition& lambda, PowerKind kind) {
    if (!is_partition(lambda)) throw PartitionError("lambda must be weakly decreasing");
    BasisElement out(kind == PowerKind::type1 ? Basis::Psi : Basis::Phi);
    for (const Composition& alpha : rearrangements(lambda)) out.add_term(alpha, 1);
    return out;
}

// -- Lyndon generation ---------------------------------------------------------

bool LyndonExpression::FactorsLess::operator()(const std::vector<Composition>& a,
                                               const std::vector<Composition>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

namespace {

using ShufflePoly = std::map<std::vector<Composition>, Rational, LyndonExpression::FactorsLess>;

void poly_add(ShufflePoly& p, const std::vector<Composition>& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

CompositionMultiset shuffle_of_factors(const std::vector<Composition>& factors) {
    CompositionMultiset acc;
    acc[Composition{}] = 1;
    for (const Composition& f : factors) {
        CompositionMultiset next;
        for (const auto& [word, mult] : acc)
            for (const auto& [shuffled, m2] : shuffles(word, f)) next[shuffled] += mult * m2;
        acc = std::move(next);
    }
    return acc;
}

bool word_lex_less(const Composition& a, const Composition& b) {
    return a.parts() < b.parts();
}

/// Expresses the word w in the shuffle algebra as a polynomial in Lyndon
/// words, by eliminating against the shuffle of its Lyndon factors.  Every
/// other word in that shuffle is lexicographically smaller, so the recursion
/// terminates within the (finite) content class of w.
const ShufflePoly& rewrite_word(const Composition& w,
                                std::map<Composition, ShufflePoly, CanonicalLess>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;

    ShufflePoly expr;
    if (is_lyndon(w)) {
        poly_add(expr, {w}, 1);
    } else {
        std::vector<Composition> factors = lyndon_factorization(w);
        const CompositionMultiset support = shuffle_of_factors(factors);
        const Multiplicity lead = support.at(w);
        std::sort(factors.begin(), factors.end(), canonical_less);
        poly_add(expr, factors, 1);
        for (const auto& [v, mult] : support) {
            if (v == w) continue;
            if (word_lex_less(w, v))
                throw Error("unexpected word above the leading term in a factor shuffle");
            const ShufflePoly& sub = rewrite_word(v, memo);
            for (const auto& [key, c] : sub) poly_add(expr, key, -Rational(mult) * c);
        }
        const Rational inv_lead = Rational(1) / Rational(lead);
        for (auto& [key, c] : expr) c *= inv_lead;
    }
    return memo.emplace(w, std::move(expr)).first->second;
}

} // namespace

LyndonExpression lyndon_rewrite(const Composition& alpha) {
    if (alpha.empty()) throw DomainError("cannot rewrite the empty composition");
    std::map<Composition, ShufflePoly, CanonicalLess> memo;
    const ShufflePoly& shuffle_form = rewrite_word(alpha, memo);

    // Pass from the index-shuffle algebra to actual products: a monomial with
    // factors L_1..L_k picks up z(concat of factors) / prod z(L_i), and every
    // factor list here has the same content as alpha.
    LyndonExpression out;
    const Rational z_alpha(zee(alpha));
    for (const auto& [factors, c] : shuffle_form) {
        Rational scale = z_alpha;
        for (const Composition& f : factors) scale /= Rational(zee(f));
        out.terms.emplace(factors, c * scale);
    }
    return out;
}

BasisElement evaluate_lyndon(const LyndonExpression& expr) {
    BasisElement out(Basis::Psi);
    for (const auto& [factors, c] : expr.terms) {
        BasisElement product = BasisElement::unit(Basis::Psi);
        for (const Composition& f : factors) {
            BasisElement next(Basis::Psi);
            for (const auto& [gamma, cg] : product.terms()) {
                BasisElement step = psi_shuffle_product(gamma, f);
                step *= cg;
                next += step;
            }
            product = std::move(next);
        }
        product *= c;
        out += product;
    }
    return out;
}

} // namespace qpsum
