#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qpsum/bijections.hpp"
#include "qpsum/element.hpp"

namespace qpsum {

enum class PowerKind { type1, type2 }; ///< type1 = Psi family, type2 = Phi family

inline constexpr int kConversionDegreeCap = 10;

// -- expansions into the pivot bases -----------------------------------------
//
// Quasisymmetric elements expand into M, noncommutative ones into h, by the
// closed forms:
//   F_a   = sum_{b refining a} M_b
//   Psi_a = z_a * sum_{b coarsening a} M_b / pi(a, b)       (psi unscaled)
//   Phi_a = z_a * sum_{b coarsening a} M_b / sp(a, b)       (phi unscaled)
//   e_a   = sum_{b refining a} (-1)^{|a| - l(b)} h_b
//   r_a   = sum_{b coarsening a} (-1)^{l(a) - l(b)} h_b
//   NPsi_a = sum_{b refining a} (-1)^{l(b) - l(a)} lp(b, a) h_b
//   NPhi_a = sum_{b refining a} (-1)^{l(b) - l(a)} (prod a_i / ell(b, a)) h_b

BasisElement expand_to_monomial(const BasisElement& f);    ///< qsym -> M
BasisElement expand_to_homogeneous(const BasisElement& g); ///< nsym -> h

/// Exact conversion between bases on the same side.  Routes through the
/// pivot basis (M or h); the pivot-to-target direction inverts the degree-n
/// transition matrix exactly, once per (basis, degree).
BasisElement convert(const BasisElement& f, Basis target);

/// conversion_matrix(from, to, n)[i][j] is the coefficient of to_{comp_j} in
/// the conversion of from_{comp_i}, with compositions of n in canonical order.
std::vector<std::vector<Rational>> conversion_matrix(Basis from, Basis to, int n);

// -- homogeneous basis in the power bases ------------------------------------

/// h_a = sum_{b refining a} NPsi_b / pi(b, a), resp. NPhi_b / sp(b, a).
BasisElement homogeneous_in_power_basis(const Composition& alpha, PowerKind kind);

// -- products ----------------------------------------------------------------

/// Product of two quasisymmetric elements: both are expanded to M, multiplied
/// by the quasi-shuffle rule M_d * M_e = sum over overlapping shuffles, and
/// the result converted back to f's basis.
BasisElement multiply(const BasisElement& f, const BasisElement& g);

/// Closed-form products staying inside the power bases:
/// X_a * X_b = (1 / C(a,b)) * sum over shuffles of X_gamma, with multiplicity.
BasisElement psi_shuffle_product(const Composition& alpha, const Composition& beta);
BasisElement phi_shuffle_product(const Composition& alpha, const Composition& beta);

// -- antipode and omega --------------------------------------------------------

/// Antipode, computed on the fundamental expansion by F_a -> (-1)^{|a|} F_{a^t}
/// and converted back to the input basis.
BasisElement antipode(const BasisElement& f);

/// The involution omega: F_a -> F_{a^t}; equals (-1)^n S on degree n.
BasisElement omega_map(const BasisElement& f);

// -- Hall pairing -----------------------------------------------------------

/// Bilinear extension of <M_a, h_b> = delta_{a,b}.  One argument must be
/// quasisymmetric and the other noncommutative (in either order).
Rational hall_pairing(const BasisElement& f, const BasisElement& g);

// -- direct fundamental-side formulas (second route, for cross-validation) ----

/// sum_{a <= d <= b} M_d rewritten as a signed sum of distinct fundamentals
/// over the interval [join(b, complement(a)), b].
BasisElement monomial_interval_to_fundamental(const Composition& alpha,
                                              const Composition& beta);

/// Closed-form fundamental expansion of Psi_a (from consistent-permutation
/// statistics) or Phi_a (from signed prescribed-size ordered set partition
/// counts).  Must agree with convert(generator, F).
BasisElement power_to_fundamental(const Composition& alpha, PowerKind kind,
                                  int cap = kPermutationEnumerationCap);

/// The double-sum transition between the two power families, with the scaled
/// bases' 1/z correction applied; agrees with the pivot conversion.
/// from = type1 rewrites Psi_a in the Phi basis and vice versa.
BasisElement power_type_transition(const Composition& alpha, PowerKind from);

// -- symmetric power sums inside QSym ----------------------------------------

/// p_lambda = sum_alpha R_{lambda,alpha} M_alpha; lambda weakly decreasing.
BasisElement symmetric_power_in_monomial(const Composition& lambda);

/// sum of Psi_alpha (resp. Phi_alpha) over the rearrangements alpha of lambda;
/// expands in M to exactly p_lambda.
BasisElement power_refinement_sum(const Composition& lambda, PowerKind kind);

// -- Lyndon generation ---------------------------------------------------------

/// A formal rational polynomial in the Psi generators indexed by Lyndon
/// compositions: each monomial is a multiset of Lyndon factors (kept sorted
/// in canonical order).
struct LyndonExpression {
    struct FactorsLess {
        bool operator()(const std::vector<Composition>& a,
                        const std::vector<Composition>& b) const;
    };
    std::map<std::vector<Composition>, Rational, FactorsLess> terms;

    friend bool operator==(const LyndonExpression& a, const LyndonExpression& b) {
        return a.terms == b.terms;
    }
};

/// Rewrites Psi_alpha as a polynomial in Lyndon-indexed Psi generators by
/// index-shuffle elimination; re-expanding the result through the closed-form
/// shuffle product reproduces Psi_alpha exactly.
LyndonExpression lyndon_rewrite(const Composition& alpha);

/// Expands a Lyndon expression through psi_shuffle_product; result in Psi.
BasisElement evaluate_lyndon(const LyndonExpression& expr);

} // namespace qpsum
