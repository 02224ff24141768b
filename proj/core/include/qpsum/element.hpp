#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpsum/composition.hpp"
#include "qpsum/rational.hpp"

namespace qpsum {

enum class Side { qsym, nsym };

/// The supported bases.  M/F/Psi/Phi/psi/phi live on the quasisymmetric side,
/// h/e/r/NPsi/NPhi on the noncommutative side.  SmallPsi and SmallPhi are the
/// unscaled duals (Psi = z_alpha * psi per index, likewise Phi).
enum class Basis { M, F, Psi, Phi, SmallPsi, SmallPhi, H, E, R, NPsi, NPhi };

Side side_of(Basis b);
std::string to_string(Basis b);            ///< "M","F","Psi","Phi","psi","phi","h","e","r","NPsi","NPhi"
std::string to_string(Side s);             ///< "qsym" / "nsym"
Basis parse_basis(const std::string& name);
std::vector<Basis> qsym_bases();
std::vector<Basis> nsym_bases();

/// A basis-tagged, finitely supported linear combination of compositions with
/// exact rational coefficients.  Zero coefficients are never stored; terms
/// iterate in canonical composition order.  Mixed degrees are allowed.
class BasisElement {
public:
    using TermMap = std::map<Composition, Rational, CanonicalLess>;

    explicit BasisElement(Basis basis) : basis_(basis) {}

    static BasisElement zero(Basis basis) { return BasisElement(basis); }
    static BasisElement unit(Basis basis) { return generator(basis, Composition{}); }
    static BasisElement generator(Basis basis, const Composition& index);

    Basis basis() const { return basis_; }
    Side side() const { return side_of(basis_); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Composition& index) const;

    /// Adds c to the coefficient at index, erasing it if the result is zero.
    void add_term(const Composition& index, const Rational& c);

    BasisElement& operator+=(const BasisElement& other); ///< same basis required
    BasisElement& operator-=(const BasisElement& other);
    BasisElement& operator*=(const Rational& c);

    friend BasisElement operator+(BasisElement a, const BasisElement& b) { return a += b; }
    friend BasisElement operator-(BasisElement a, const BasisElement& b) { return a -= b; }
    friend BasisElement operator*(BasisElement a, const Rational& c) { return a *= c; }
    friend BasisElement operator*(const Rational& c, BasisElement a) { return a *= c; }

    friend bool operator==(const BasisElement& a, const BasisElement& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasisElement& a, const BasisElement& b) { return !(a == b); }

    /// The distinct degrees present, ascending.
    std::vector<int> degrees() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }

    /// The homogeneous component of the given degree.
    BasisElement component(int degree) const;

private:
    Basis basis_;
    TermMap terms_;
};

} // namespace qpsum
