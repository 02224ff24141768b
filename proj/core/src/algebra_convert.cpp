#include <map>
#include <mutex>
#include <utility>

#include "qpsum/algebra.hpp"
#include "qpsum/errors.hpp"

namespace qpsum {

namespace {

Basis pivot_of(Side s) { return s == Side::qsym ? Basis::M : Basis::H; }

int sign_pow(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

/// Closed-form expansion of a single generator into its side's pivot basis.
BasisElement generator_in_pivot(Basis b, const Composition& alpha) {
    const Side side = side_of(b);
    BasisElement out(pivot_of(side));
    switch (b) {
        case Basis::M:
        case Basis::H:
            out.add_term(alpha, 1);
            break;
        case Basis::F:
            for (const Composition& beta : refinements(alpha)) out.add_term(beta, 1);
            break;
        case Basis::Psi:
        case Basis::SmallPsi: {
            const Rational scale = b == Basis::Psi ? Rational(zee(alpha)) : Rational(1);
            for (const Composition& beta : coarsenings(alpha))
                out.add_term(beta, scale / Rational(pi_weight(alpha, beta)));
            break;
        }
        case Basis::Phi:
        case Basis::SmallPhi: {
            const Rational scale = b == Basis::Phi ? Rational(zee(alpha)) : Rational(1);
            for (const Composition& beta : coarsenings(alpha))
                out.add_term(beta, scale / Rational(sp_weight(alpha, beta)));
            break;
        }
        case Basis::E:
            for (const Composition& beta : refinements(alpha))
                out.add_term(beta, sign_pow(alpha.size() - beta.length()));
            break;
        case Basis::R:
            for (const Composition& beta : coarsenings(alpha))
                out.add_term(beta, sign_pow(alpha.length() - beta.length()));
            break;
        case Basis::NPsi:
            for (const Composition& beta : refinements(alpha))
                out.add_term(beta, Rational(sign_pow(beta.length() - alpha.length()) *
                                            lp_weight(beta, alpha)));
            break;
        case Basis::NPhi: {
            BigInt parts_product = 1;
            for (int p : alpha.parts()) parts_product *= p;
            for (const Composition& beta : refinements(alpha))
                out.add_term(beta, Rational(sign_pow(beta.length() - alpha.length()) *
                                            parts_product) /
                                       Rational(ell_weight(beta, alpha)));
            break;
        }
    }
    return out;
}

BasisElement expand_to_pivot(const BasisElement& f) {
    const Basis pivot = pivot_of(f.side());
    if (f.basis() == pivot) return f;
    BasisElement out(pivot);
    for (const auto& [alpha, c] : f.terms()) {
        BasisElement expanded = generator_in_pivot(f.basis(), alpha);
        expanded *= c;
        out += expanded;
    }
    return out;
}

using Matrix = std::vector<std::vector<Rational>>;

/// Exact inverse by Gauss-Jordan elimination.
Matrix invert(Matrix a) {
    const std::size_t k = a.size();
    Matrix inv(k, std::vector<Rational>(k, 0));
    for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && a[pivot][col] == 0) ++pivot;
        if (pivot == k) throw Error("transition matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational d = a[col][col];
        for (std::size_t j = 0; j < k; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t row = 0; row < k; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col];
            for (std::size_t j = 0; j < k; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

/// E[i][j] = coefficient of pivot_{comp_j} in basis_{comp_i}, canonical order.
Matrix expansion_matrix(Basis b, int n) {
    const std::vector<Composition> comps = compositions_of(n);
    std::map<Composition, std::size_t, CanonicalLess> index;
    for (std::size_t i = 0; i < comps.size(); ++i) index.emplace(comps[i], i);
    Matrix e(comps.size(), std::vector<Rational>(comps.size(), 0));
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (const auto& [beta, c] : generator_in_pivot(b, comps[i]).terms())
            e[i][index.at(beta)] = c;
    }
    return e;
}

/// Cached inverse of the degree-n expansion matrix of a basis: maps pivot
/// coordinates to target coordinates.  Built once per (basis, degree) behind
/// a mutex; read-only afterwards.
const Matrix& pivot_to_basis_matrix(Basis b, int n) {
    static std::map<std::pair<Basis, int>, Matrix> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({b, n});
    if (it == cache.end()) {
        if (n > kConversionDegreeCap)
            throw ResourceError("conversion degree exceeds cap");
        it = cache.emplace(std::make_pair(b, n), invert(expansion_matrix(b, n))).first;
    }
    return it->second;
}

} // namespace

BasisElement expand_to_monomial(const BasisElement& f) {
    if (f.side() != Side::qsym)
        throw SideError("monomial expansion requires a quasisymmetric element");
    return expand_to_pivot(f);
}

BasisElement expand_to_homogeneous(const BasisElement& g) {
    if (g.side() != Side::nsym)
        throw SideError("homogeneous expansion requires a noncommutative element");
    return expand_to_pivot(g);
}

BasisElement convert(const BasisElement& f, Basis target) {
    if (side_of(target) != f.side())
        throw SideError("cannot convert between the quasisymmetric and noncommutative sides");
    if (target == f.basis()) return f;
    const BasisElement in_pivot = expand_to_pivot(f);
    if (target == pivot_of(f.side())) return in_pivot;

    BasisElement out(target);
    for (int n : in_pivot.degrees()) {
        const std::vector<Composition> comps = compositions_of(n);
        const Matrix& g = pivot_to_basis_matrix(target, n);
        std::vector<Rational> p(comps.size(), 0);
        for (std::size_t i = 0; i < comps.size(); ++i) p[i] = in_pivot.coefficient(comps[i]);
        for (std::size_t j = 0; j < comps.size(); ++j) {
            Rational t = 0;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                if (p[i] != 0 && g[i][j] != 0) t += p[i] * g[i][j];
            }
            out.add_term(comps[j], t);
        }
    }
    return out;
}

std::vector<std::vector<Rational>> conversion_matrix(Basis from, Basis to, int n) {
    const std::vector<Composition> comps = compositions_of(n);
    std::map<Composition, std::size_t, CanonicalLess> index;
    for (std::size_t i = 0; i < comps.size(); ++i) index.emplace(comps[i], i);
    Matrix t(comps.size(), std::vector<Rational>(comps.size(), 0));
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const BasisElement row = convert(BasisElement::generator(from, comps[i]), to);
        for (const auto& [beta, c] : row.terms()) t[i][index.at(beta)] = c;
    }
    return t;
}

} // namespace qpsum
