#include "qpsum/algebra.hpp"
#include "qpsum/errors.hpp"

namespace qpsum {

BasisElement homogeneous_in_power_basis(const Composition& alpha, PowerKind kind) {
    BasisElement out(kind == PowerKind::type1 ? Basis::NPsi : Basis::NPhi);
    for (const Composition& beta : refinements(alpha)) {
        const Rational w = kind == PowerKind::type1 ? Rational(pi_weight(beta, alpha))
                                                    : Rational(sp_weight(beta, alpha));
        out.add_term(beta, Rational(1) / w);
    }
    return out;
}

Rational hall_pairing(const BasisElement& f, const BasisElement& g) {
    if (f.side() == g.side())
        throw SideError("the pairing takes one quasisymmetric and one noncommutative element");
    const BasisElement& qs = f.side() == Side::qsym ? f : g;
    const BasisElement& ns = f.side() == Side::qsym ? g : f;
    const BasisElement m = expand_to_monomial(qs);
    const BasisElement h = expand_to_homogeneous(ns);
    Rational value = 0;
    for (const auto& [index, c] : m.terms()) {
        const Rational hc = h.coefficient(index);
        if (hc != 0) value += c * hc;
    }
    return value;
}

} // namespace qpsum
