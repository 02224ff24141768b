#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpsum/element.hpp"

namespace qpsum::oracle {

// Independent ground truth.  Everything here evaluates elements as honest
// polynomials in m commuting variables straight from the combinatorial
// definitions, re-deriving every scalar statistic locally; none of the
// conversion machinery in algebra.hpp is used.

/// A polynomial in a fixed number of variables with exact rational
/// coefficients, keyed by dense exponent vectors of length nvars.
class Polynomial {
public:
    using TermMap = std::map<std::vector<int>, Rational>;

    explicit Polynomial(int nvars);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const std::vector<int>& exponents) const;
    void add_term(const std::vector<int>& exponents, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    int nvars_;
    TermMap terms_;
};

/// Truncation of a quasisymmetric element to the variables x_1..x_m, expanded
/// from the defining formulas of each basis (faithful on degree-n components
/// whenever m >= n).
Polynomial evaluate(const BasisElement& f, int nvars);

/// The honest symmetric power sum p_lambda = prod_i (x_1^{l_i}+...+x_m^{l_i}).
Polynomial power_sum_polynomial(const Composition& lambda, int nvars);

/// True iff the coefficients depend only on the ordered sequence of nonzero
/// exponents.
bool is_quasisymmetric(const Polynomial& p);

/// Recomputes the degree-n transition matrix between two quasisymmetric bases
/// by evaluating both in n variables and solving the exact linear system.
/// result[i][j] = coefficient of to_{comp_j} in from_{comp_i}.
std::vector<std::vector<Rational>> transition_by_solve(Basis from, Basis to, int n);

/// True iff the evaluations of the degree-n monomial generators in m = n
/// variables are linearly independent.
bool monomial_evaluations_independent(int n);

struct Report {
    std::string identity;
    int n_max = 0;
    long long instances = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// The identity ids accepted by verify().
std::vector<std::string> catalog();

/// Exhaustively checks one catalog identity on every instance of degree up to
/// n_max.  Unknown ids raise DomainError.
Report verify(const std::string& identity, int n_max);

std::string report_to_json_string(const Report& report);

} // namespace qpsum::oracle
