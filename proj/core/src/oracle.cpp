#include "qpsum/oracle.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <set>

#include "qpsum/bijections.hpp"
#include "qpsum/errors.hpp"
#include "qpsum/permutation.hpp"

namespace qpsum::oracle {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw DomainError("polynomials need at least one variable");
}

Rational Polynomial::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const std::vector<int>& exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw DomainError("exponent vector length must equal the variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (nvars_ != other.nvars_) throw DomainError("variable counts differ");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (nvars_ != other.nvars_) throw DomainError("variable counts differ");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw DomainError("variable counts differ");
    Polynomial out(a.nvars());
    std::vector<int> sum(static_cast<std::size_t>(a.nvars()));
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Local re-derivations of every scalar statistic used by the formulas below.
// Shared code with the rest of the library is limited to the Composition and
// Rational types and their plain enumerations.
// ---------------------------------------------------------------------------

namespace {

BigInt ofactorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt obinomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < std::min(k, n - k); ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

BigInt ozee(const Composition& alpha) {
    std::map<int, int> mult;
    for (int p : alpha.parts()) ++mult[p];
    BigInt z = 1;
    for (const auto& [part, m] : mult) {
        for (int j = 0; j < m; ++j) z *= part;
        z *= ofactorial(m);
    }
    return z;
}

/// Runs of parts of fine that sum to the parts of coarse, as (start, count).
std::vector<std::pair<int, int>> oblocks(const Composition& fine, const Composition& coarse) {
    std::vector<std::pair<int, int>> out;
    int fi = 0;
    for (int i = 0; i < coarse.length(); ++i) {
        int acc = 0;
        const int start = fi;
        while (acc < coarse[i]) {
            acc += fine[fi];
            ++fi;
        }
        if (acc != coarse[i]) throw RefinementError("not a refinement");
        out.emplace_back(start, fi - start);
    }
    if (fi != fine.length()) throw RefinementError("not a refinement");
    return out;
}

BigInt opi(const Composition& fine, const Composition& coarse) {
    BigInt w = 1;
    for (const auto& [start, count] : oblocks(fine, coarse)) {
        int acc = 0;
        for (int j = 0; j < count; ++j) {
            acc += fine[start + j];
            w *= acc;
        }
    }
    return w;
}

BigInt osp_stat(const Composition& fine, const Composition& coarse) {
    BigInt w = 1;
    for (const auto& [start, count] : oblocks(fine, coarse)) {
        w *= ofactorial(count);
        for (int j = 0; j < count; ++j) w *= fine[start + j];
    }
    return w;
}

BigInt olp(const Composition& fine, const Composition& coarse) {
    BigInt w = 1;
    for (const auto& [start, count] : oblocks(fine, coarse)) w *= fine[start + count - 1];
    return w;
}

BigInt oell(const Composition& fine, const Composition& coarse) {
    BigInt w = 1;
    for (const auto& [start, count] : oblocks(fine, coarse)) w *= count;
    return w;
}

/// Number of ordered set partitions of [l(fine)] with the block sizes induced
/// by coarse: the multinomial of the block lengths.
BigInt oosp_count(const Composition& fine, const Composition& coarse) {
    BigInt w = ofactorial(fine.length());
    for (const auto& [start, count] : oblocks(fine, coarse)) w /= ofactorial(count);
    return w;
}

BigInt omultinomial_of_multiplicities(const Composition& alpha) {
    std::map<int, int> mult;
    for (int p : alpha.parts()) ++mult[p];
    BigInt w = ofactorial(alpha.length());
    for (const auto& [part, m] : mult) w /= ofactorial(m);
    return w;
}

int osign(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

void for_each_combination(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == k) {
            fn(idx);
            return;
        }
        for (int v = from; v <= m - (k - pos); ++v) {
            idx[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
}

Polynomial constant_one(int m) {
    Polynomial p(m);
    p.add_term(std::vector<int>(static_cast<std::size_t>(m), 0), 1);
    return p;
}

/// M_alpha in m variables, straight from the defining sum over increasing
/// variable supports.
Polynomial eval_monomial_basis(const Composition& alpha, int m) {
    Polynomial p(m);
    if (alpha.empty()) return constant_one(m);
    const int k = alpha.length();
    if (k > m) return p;
    for_each_combination(m, k, [&](const std::vector<int>& idx) {
        std::vector<int> exps(static_cast<std::size_t>(m), 0);
        for (int j = 0; j < k; ++j) exps[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] = alpha[j];
        p.add_term(exps, 1);
    });
    return p;
}

/// F_alpha in m variables: weakly increasing chains with strict steps at the
/// descent set of alpha.
Polynomial eval_fundamental_basis(const Composition& alpha, int m) {
    Polynomial p(m);
    if (alpha.empty()) return constant_one(m);
    const int n = alpha.size();
    std::vector<bool> strict(static_cast<std::size_t>(n) + 1, false);
    {
        int acc = 0;
        for (int i = 0; i + 1 < alpha.length(); ++i) {
            acc += alpha[i];
            strict[static_cast<std::size_t>(acc)] = true;
        }
    }
    std::vector<int> exps(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int pos, int minvar) {
        if (pos > n) {
            p.add_term(exps, 1);
            return;
        }
        for (int v = minvar; v <= m; ++v) {
            ++exps[static_cast<std::size_t>(v - 1)];
            rec(pos + 1, strict[static_cast<std::size_t>(pos)] ? v + 1 : v);
            --exps[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(1, 1);
    return p;
}

/// The two power families expanded over coarsenings with locally computed
/// weights, then evaluated through eval_monomial_basis.
Polynomial eval_power_basis(const Composition& alpha, int m, bool type1, bool scaled) {
    Polynomial p(m);
    const Rational scale = scaled ? Rational(ozee(alpha)) : Rational(1);
    for (const Composition& beta : coarsenings(alpha)) {
        const BigInt w = type1 ? opi(alpha, beta) : osp_stat(alpha, beta);
        Polynomial mb = eval_monomial_basis(beta, m);
        mb *= scale / Rational(w);
        p += mb;
    }
    return p;
}

} // namespace

Polynomial evaluate(const BasisElement& f, int nvars) {
    if (f.side() != Side::qsym) throw SideError("only quasisymmetric elements evaluate");
    Polynomial out(nvars);
    for (const auto& [alpha, c] : f.terms()) {
        Polynomial part(nvars);
        switch (f.basis()) {
            case Basis::M: part = eval_monomial_basis(alpha, nvars); break;
            case Basis::F: part = eval_fundamental_basis(alpha, nvars); break;
            case Basis::Psi: part = eval_power_basis(alpha, nvars, true, true); break;
            case Basis::SmallPsi: part = eval_power_basis(alpha, nvars, true, false); break;
            case Basis::Phi: part = eval_power_basis(alpha, nvars, false, true); break;
            case Basis::SmallPhi: part = eval_power_basis(alpha, nvars, false, false); break;
            default: throw SideError("only quasisymmetric elements evaluate");
        }
        part *= c;
        out += part;
    }
    return out;
}

Polynomial power_sum_polynomial(const Composition& lambda, int nvars) {
    Polynomial out = constant_one(nvars);
    for (int part : lambda.parts()) {
        Polynomial pk(nvars);
        for (int v = 0; v < nvars; ++v) {
            std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
            exps[static_cast<std::size_t>(v)] = part;
            pk.add_term(exps, 1);
        }
        out = out * pk;
    }
    return out;
}

bool is_quasisymmetric(const Polynomial& p) {
    std::map<std::vector<int>, std::pair<Rational, long long>> classes;
    for (const auto& [exps, c] : p.terms()) {
        std::vector<int> signature;
        for (int e : exps)
            if (e != 0) signature.push_back(e);
        auto [it, inserted] = classes.emplace(signature, std::make_pair(c, 1LL));
        if (!inserted) {
            if (it->second.first != c) return false;
            ++it->second.second;
        }
    }
    for (const auto& [signature, data] : classes) {
        if (BigInt(data.second) != obinomial(p.nvars(), static_cast<int>(signature.size())))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exact linear algebra on evaluations.
// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<Rational>>;

/// Gauss-Jordan solve of A x = B column-by-column; A has full column rank.
/// Returns x with dimensions (cols(A) x cols(B)).
Matrix solve_exact(Matrix a, Matrix b) {
    const std::size_t rows = a.size();
    const std::size_t k = rows == 0 ? 0 : a[0].size();
    const std::size_t rhs = rows == 0 ? 0 : b[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) throw Error("evaluation system is singular");
        std::swap(a[pivot], a[rank]);
        std::swap(b[pivot], b[rank]);
        const Rational d = a[rank][col];
        for (std::size_t j = 0; j < k; ++j) a[rank][j] /= d;
        for (std::size_t j = 0; j < rhs; ++j) b[rank][j] /= d;
        for (std::size_t row = 0; row < rows; ++row) {
            if (row == rank || a[row][col] == 0) continue;
            const Rational factor = a[row][col];
            for (std::size_t j = 0; j < k; ++j) a[row][j] -= factor * a[rank][j];
            for (std::size_t j = 0; j < rhs; ++j) b[row][j] -= factor * b[rank][j];
        }
        ++rank;
    }
    for (std::size_t row = rank; row < rows; ++row)
        for (std::size_t j = 0; j < rhs; ++j)
            if (b[row][j] != 0) throw Error("evaluation system is inconsistent");
    Matrix x(k, std::vector<Rational>(rhs, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < rhs; ++j) x[i][j] = b[i][j];
    return x;
}

/// Stacks the evaluations of one basis' degree-n generators as columns.
std::pair<Matrix, std::vector<std::vector<int>>> evaluation_columns(Basis basis, int n,
                                                                    int nvars) {
    const std::vector<Composition> comps = compositions_of(n);
    std::vector<Polynomial> polys;
    polys.reserve(comps.size());
    std::set<std::vector<int>> monomials;
    for (const Composition& alpha : comps) {
        polys.push_back(evaluate(BasisElement::generator(basis, alpha), nvars));
        for (const auto& [e, c] : polys.back().terms()) monomials.insert(e);
    }
    std::vector<std::vector<int>> rows(monomials.begin(), monomials.end());
    Matrix a(rows.size(), std::vector<Rational>(comps.size(), 0));
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (std::size_t i = 0; i < rows.size(); ++i) a[i][j] = polys[j].coefficient(rows[i]);
    return {std::move(a), std::move(rows)};
}

} // namespace

std::vector<std::vector<Rational>> transition_by_solve(Basis from, Basis to, int n) {
    if (side_of(from) != Side::qsym || side_of(to) != Side::qsym)
        throw SideError("transition solving works on quasisymmetric bases");
    if (n == 0) return {{Rational(1)}};
    const int nvars = n;
    auto [a, rows] = evaluation_columns(to, n, nvars);
    const std::vector<Composition> comps = compositions_of(n);
    Matrix b(rows.size(), std::vector<Rational>(comps.size(), 0));
    {
        std::map<std::vector<int>, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
        for (std::size_t j = 0; j < comps.size(); ++j) {
            const Polynomial p = evaluate(BasisElement::generator(from, comps[j]), nvars);
            for (const auto& [e, c] : p.terms()) {
                auto it = row_index.find(e);
                if (it == row_index.end()) throw Error("evaluation system is inconsistent");
                b[it->second][j] = c;
            }
        }
    }
    const Matrix x = solve_exact(std::move(a), std::move(b));
    // x[i][j] = coefficient of to_i in from_j; transpose to match the contract.
    Matrix out(comps.size(), std::vector<Rational>(comps.size(), 0));
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = 0; j < comps.size(); ++j) out[j][i] = x[i][j];
    return out;
}

bool monomial_evaluations_independent(int n) {
    if (n == 0) return true;
    auto [a, rows] = evaluation_columns(Basis::M, n, n);
    try {
        Matrix zero(rows.size(), std::vector<Rational>(0));
        solve_exact(std::move(a), std::move(zero));
    } catch (const Error&) {
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Identity catalog.
// ---------------------------------------------------------------------------

namespace {

struct Checker {
    Report report;

    void instance(bool ok, const std::string& label) {
        ++report.instances;
        if (!ok) report.failures.push_back(label);
    }
};

std::string clabel(const char* name, const Composition& c) {
    return std::string(name) + "=" + (c.empty() ? std::string("()") : to_string(c));
}

void check_refine(Checker& chk, int n_max, bool type1) {
    for (int n = 1; n <= n_max; ++n) {
        for (const Composition& lambda : partitions_of(n)) {
            Polynomial sum(n);
            for (const Composition& alpha : rearrangements(lambda)) {
                const Basis b = type1 ? Basis::Psi : Basis::Phi;
                sum += evaluate(BasisElement::generator(b, alpha), n);
            }
            chk.instance(sum == power_sum_polynomial(lambda, n), clabel("lambda", lambda));
        }
    }
}

void check_cons_count(Checker& chk, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const auto perms = all_permutations(n);
        const BigInt nfact = ofactorial(n);
        for (const Composition& beta : compositions_of(n)) {
            for (const Composition& alpha : refinements(beta)) {
                long long count = 0;
                for (const Permutation& sigma : perms)
                    if (is_consistent(sigma, alpha, beta)) ++count;
                chk.instance(BigInt(count) * opi(alpha, beta) == nfact,
                             clabel("alpha", alpha) + " " + clabel("beta", beta));
            }
        }
    }
}

void check_br_count(Checker& chk, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const auto perms = all_permutations(n);
        const BigInt nfact = ofactorial(n);
        for (const Composition& beta : compositions_of(n)) {
            std::map<Composition, BigInt, CanonicalLess> sums;
            for (const Composition& alpha : refinements(beta)) {
                long long count = 0;
                for (const Permutation& sigma : perms)
                    if (is_consistent(sigma, alpha, beta)) ++count;
                sums[sorted_partition(alpha)] += count;
            }
            for (const Composition& lambda : partitions_of(n)) {
                const BigInt lhs =
                    BigInt(count_groupings(lambda, beta)) * nfact / ozee(lambda);
                const BigInt rhs = sums.count(lambda) ? sums.at(lambda) : BigInt(0);
                chk.instance(lhs == rhs,
                             clabel("lambda", lambda) + " " + clabel("beta", beta));
            }
        }
    }
}

void check_osp_count(Checker& chk, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (const Composition& beta : compositions_of(n)) {
            std::map<Composition, BigInt, CanonicalLess> sums;
            for (const Composition& alpha : refinements(beta))
                sums[sorted_partition(alpha)] += BigInt(enumerate_osp(alpha, beta).size());
            for (const Composition& lambda : partitions_of(n)) {
                const BigInt lhs = omultinomial_of_multiplicities(lambda) *
                                   BigInt(count_groupings(lambda, beta));
                const BigInt rhs = sums.count(lambda) ? sums.at(lambda) : BigInt(0);
                chk.instance(lhs == rhs,
                             clabel("lambda", lambda) + " " + clabel("beta", beta));
            }
        }
    }
}

void check_duality_fund(Checker& chk, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const auto comps = compositions_of(n);
        for (const Composition& alpha : comps) {
            // F_alpha pairs with r_beta: sum over gamma refining alpha and
            // coarsening beta of the ribbon sign.
            for (const Composition& beta : comps) {
                Rational value = 0;
                for (const Composition& gamma : refinements(alpha))
                    if (refines(beta, gamma))
                        value += osign(beta.length() - gamma.length());
                chk.instance(value == (alpha == beta ? 1 : 0),
                             clabel("alpha", alpha) + " " + clabel("beta", beta));
            }
        }
    }
}

void check_duality_power(Checker& chk, int n_max, bool type1) {
    for (int n = 1; n <= n_max; ++n) {
        const auto comps = compositions_of(n);
        for (const Composition& alpha : comps) {
            const Rational z_alpha(ozee(alpha));
            for (const Composition& beta : comps) {
                BigInt beta_parts_product = 1;
                for (int p : beta.parts()) beta_parts_product *= p;
                Rational value = 0;
                for (const Composition& gamma : coarsenings(alpha)) {
                    if (!refines(gamma, beta)) continue;
                    const Rational left =
                        type1 ? z_alpha / Rational(opi(alpha, gamma))
                              : z_alpha / Rational(osp_stat(alpha, gamma));
                    const Rational right =
                        type1 ? Rational(osign(gamma.length() - beta.length()) *
                                         olp(gamma, beta))
                              : Rational(osign(gamma.length() - beta.length())) *
                                    Rational(beta_parts_product) /
                                    Rational(oell(gamma, beta));
                    value += left * right;
                }
                const Rational expected = alpha == beta ? z_alpha : Rational(0);
                chk.instance(value == expected,
                             clabel("alpha", alpha) + " " + clabel("beta", beta));
            }
        }
    }
}

void check_product(Checker& chk, int n_max, bool type1) {
    const Basis b = type1 ? Basis::Psi : Basis::Phi;
    for (int total = 1; total <= n_max; ++total) {
        for (int na = 0; na <= total; ++na) {
            const int nb = total - na;
            for (const Composition& alpha : compositions_of(na)) {
                for (const Composition& beta : compositions_of(nb)) {
                    const int m = std::max(1, total);
                    const Polynomial lhs =
                        evaluate(BasisElement::generator(b, alpha), m) *
                        evaluate(BasisElement::generator(b, beta), m);
                    std::map<int, int> mult_a, mult_all;
                    for (int p : alpha.parts()) ++mult_a[p], ++mult_all[p];
                    for (int p : beta.parts()) ++mult_all[p];
                    BigInt c = 1;
                    for (const auto& [part, m_all] : mult_all)
                        c *= obinomial(m_all, mult_a.count(part) ? mult_a.at(part) : 0);
                    Polynomial rhs(m);
                    for (const auto& [gamma, mult] : shuffles(alpha, beta)) {
                        Polynomial pg = evaluate(BasisElement::generator(b, gamma), m);
                        pg *= Rational(mult);
                        rhs += pg;
                    }
                    rhs *= Rational(1) / Rational(c);
                    chk.instance(lhs == rhs,
                                 clabel("alpha", alpha) + " " + clabel("beta", beta));
                }
            }
        }
    }
}

void check_psi_to_f(Checker& chk, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const auto perms = all_permutations(n);
        for (const Composition& alpha : compositions_of(n)) {
            std::map<Composition, long long, CanonicalLess> hat_counts;
            for (const Permutation& sigma : perms)
                if (is_consistent(sigma, alpha, alpha))
                    ++hat_counts[coarsest_consistent(alpha, sigma)];
            const Rational prefactor = Rational(ozee(alpha)) / Rational(ofactorial(n));
            Polynomial rhs(n);
            for (const auto& [gamma, count] : hat_counts) {
                for (const Composition& eta : coarsenings(complement(alpha))) {
                    Polynomial fp = eval_fundamental_basis(join(gamma, eta), n);
                    fp *= prefactor * Rational(count * osign(eta.length() - 1));
                    rhs += fp;
                }
            }
            chk.instance(rhs == eval_power_basis(alpha, n, true, true),
                         clabel("alpha", alpha));
        }
    }
}

void check_phi_to_f(Checker& chk, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (const Composition& alpha : compositions_of(n)) {
            const Rational prefactor =
                Rational(1) / Rational(omultinomial_of_multiplicities(alpha));
            Polynomial rhs(n);
            for (const Composition& gamma : compositions_of(n)) {
                Rational inner = 0;
                for (const Composition& beta : coarsenings(meet(gamma, alpha)))
                    inner += Rational(osign(gamma.length() - beta.length())) *
                             Rational(oosp_count(alpha, beta));
                if (inner == 0) continue;
                Polynomial fp = eval_fundamental_basis(gamma, n);
                fp *= prefactor * inner;
                rhs += fp;
            }
            chk.instance(rhs == eval_power_basis(alpha, n, false, true),
                         clabel("alpha", alpha));
        }
    }
}

void check_mon_interval(Checker& chk, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (const Composition& beta : compositions_of(n)) {
            for (const Composition& alpha : refinements(beta)) {
                Polynomial lhs(n);
                for (const Composition& delta : coarsenings(alpha))
                    if (refines(delta, beta)) lhs += eval_monomial_basis(delta, n);
                Polynomial rhs(n);
                const Composition fine_end = join(beta, complement(alpha));
                for (const Composition& delta : coarsenings(fine_end)) {
                    if (!refines(delta, beta)) continue;
                    Polynomial fp = eval_fundamental_basis(delta, n);
                    fp *= Rational(osign(beta.length() - delta.length()));
                    rhs += fp;
                }
                chk.instance(lhs == rhs, clabel("alpha", alpha) + " " + clabel("beta", beta));
            }
        }
    }
}

void check_antipode_psi(Checker& chk, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (const Composition& alpha : compositions_of(n)) {
            // S(Psi_alpha) assembled on the fundamental side.
            Polynomial lhs(n);
            for (const Composition& beta : coarsenings(alpha)) {
                const Rational cb = Rational(ozee(alpha)) / Rational(opi(alpha, beta));
                for (const Composition& delta : refinements(beta)) {
                    Polynomial fp = eval_fundamental_basis(transposed(delta), n);
                    fp *= cb * Rational(osign(delta.length() - beta.length()) * osign(n));
                    lhs += fp;
                }
            }
            Polynomial rhs = eval_power_basis(reversed(alpha), n, true, true);
            rhs *= Rational(osign(alpha.length()));
            chk.instance(lhs == rhs, clabel("alpha", alpha));
        }
    }
}

std::set<Composition, CanonicalLess> shuffle_coarsenings(const CompositionMultiset& shuf) {
    std::set<Composition, CanonicalLess> xis;
    for (const auto& [gamma, mult] : shuf)
        for (const Composition& xi : coarsenings(gamma)) xis.insert(xi);
    return xis;
}

void check_shuffle_pi(Checker& chk, int n_max) {
    for (int total = 2; total <= n_max; ++total) {
        for (int na = 1; na < total; ++na) {
            const int nb = total - na;
            for (const Composition& alpha : compositions_of(na)) {
                const auto alpha_coarsenings = coarsenings(alpha);
                for (const Composition& beta : compositions_of(nb)) {
                    const auto beta_coarsenings = coarsenings(beta);
                    const CompositionMultiset shuf = shuffles(alpha, beta);
                    const BigInt bin = obinomial(total, na);
                    const BigInt ma = ofactorial(na), mb = ofactorial(nb),
                                 mall = ofactorial(total);
                    for (const Composition& xi : shuffle_coarsenings(shuf)) {
                        Rational lhs = 0;
                        for (const Composition& delta : alpha_coarsenings) {
                            for (const Composition& eta : beta_coarsenings) {
                                const Multiplicity mult =
                                    overlapping_shuffle_multiplicity(delta, eta, xi);
                                if (mult == 0) continue;
                                lhs += Rational(mult) * Rational(ma) /
                                       Rational(opi(alpha, delta)) * Rational(mb) /
                                       Rational(opi(beta, eta));
                            }
                        }
                        lhs *= Rational(bin);
                        Rational rhs = 0;
                        for (const auto& [gamma, mult] : shuf) {
                            if (!refines(gamma, xi)) continue;
                            rhs += Rational(mult) * Rational(mall) / Rational(opi(gamma, xi));
                        }
                        chk.instance(lhs == rhs, clabel("alpha", alpha) + " " +
                                                     clabel("beta", beta) + " " +
                                                     clabel("xi", xi));
                    }
                }
            }
        }
    }
}

void check_shuffle_osp(Checker& chk, int n_max) {
    for (int total = 2; total <= n_max; ++total) {
        for (int na = 1; na < total; ++na) {
            const int nb = total - na;
            for (const Composition& alpha : compositions_of(na)) {
                const auto alpha_coarsenings = coarsenings(alpha);
                for (const Composition& beta : compositions_of(nb)) {
                    const auto beta_coarsenings = coarsenings(beta);
                    const CompositionMultiset shuf = shuffles(alpha, beta);
                    const BigInt bin = obinomial(alpha.length() + beta.length(), alpha.length());
                    for (const Composition& xi : shuffle_coarsenings(shuf)) {
                        BigInt lhs = 0;
                        for (const Composition& delta : alpha_coarsenings) {
                            for (const Composition& eta : beta_coarsenings) {
                                const Multiplicity mult =
                                    overlapping_shuffle_multiplicity(delta, eta, xi);
                                if (mult == 0) continue;
                                lhs += BigInt(mult) * oosp_count(alpha, delta) *
                                       oosp_count(beta, eta);
                            }
                        }
                        lhs *= bin;
                        BigInt rhs = 0;
                        for (const auto& [gamma, mult] : shuf) {
                            if (!refines(gamma, xi)) continue;
                            rhs += BigInt(mult) * oosp_count(gamma, xi);
                        }
                        chk.instance(lhs == rhs, clabel("alpha", alpha) + " " +
                                                     clabel("beta", beta) + " " +
                                                     clabel("xi", xi));
                    }
                }
            }
        }
    }
}

void check_combinatorial_psi(Checker& chk, int n_max) {
    // The consistent-permutation interpretation of Psi, evaluated with m = n
    // variables; the monomial route must agree.
    for (int n = 1; n <= n_max; ++n) {
        const int m = n;
        const auto perms = all_permutations(n);
        for (const Composition& alpha : compositions_of(n)) {
            const int k = alpha.length();
            // The inner chain sum depends on sigma only through which
            // adjacent blocks admit equality, so cache by that pattern.
            std::map<std::vector<bool>, Polynomial> pattern_polys;
            Polynomial rhs(m);
            for (const Permutation& sigma : perms) {
                const auto words = split_word(sigma, alpha);
                std::vector<bool> allow_equal(static_cast<std::size_t>(k), false);
                for (int j = 0; j + 1 < k; ++j) {
                    const int mx_j = *std::max_element(words[static_cast<std::size_t>(j)].begin(),
                                                       words[static_cast<std::size_t>(j)].end());
                    const int mx_n = *std::max_element(
                        words[static_cast<std::size_t>(j + 1)].begin(),
                        words[static_cast<std::size_t>(j + 1)].end());
                    allow_equal[static_cast<std::size_t>(j)] = mx_j < mx_n;
                }
                auto it = pattern_polys.find(allow_equal);
                if (it == pattern_polys.end()) {
                    Polynomial chain(m);
                    std::vector<int> exps(static_cast<std::size_t>(m), 0);
                    std::function<void(int, int)> rec = [&](int j, int minvar) {
                        if (j == k) {
                            chain.add_term(exps, 1);
                            return;
                        }
                        for (int v = minvar; v <= m; ++v) {
                            exps[static_cast<std::size_t>(v - 1)] += alpha[j];
                            rec(j + 1, allow_equal[static_cast<std::size_t>(j)] ? v : v + 1);
                            exps[static_cast<std::size_t>(v - 1)] -= alpha[j];
                        }
                    };
                    rec(0, 1);
                    it = pattern_polys.emplace(allow_equal, std::move(chain)).first;
                }
                rhs += it->second;
            }
            BigInt mult_fact = 1;
            {
                std::map<int, int> mult;
                for (int p : alpha.parts()) ++mult[p];
                for (const auto& [part, cnt] : mult) mult_fact *= ofactorial(cnt);
            }
            rhs *= Rational(mult_fact) / Rational(ofactorial(n));
            chk.instance(rhs == eval_power_basis(alpha, m, true, true), clabel("alpha", alpha));
        }
    }
}

} // namespace

std::vector<std::string> catalog() {
    return {"refine-type1", "refine-type2", "cons-count",    "br-count",
            "osp-count",    "duality-fund", "duality-psi",   "duality-phi",
            "product-psi",  "product-phi",  "psi-to-f",      "phi-to-f",
            "mon-interval", "antipode-psi", "shuffle-pi",    "shuffle-osp",
            "combpsi"};
}

Report verify(const std::string& identity, int n_max) {
    Checker chk;
    chk.report.identity = identity;
    chk.report.n_max = n_max;
    if (identity == "refine-type1")
        check_refine(chk, n_max, true);
    else if (identity == "refine-type2")
        check_refine(chk, n_max, false);
    else if (identity == "cons-count")
        check_cons_count(chk, n_max);
    else if (identity == "br-count")
        check_br_count(chk, n_max);
    else if (identity == "osp-count")
        check_osp_count(chk, n_max);
    else if (identity == "duality-fund")
        check_duality_fund(chk, n_max);
    else if (identity == "duality-psi")
        check_duality_power(chk, n_max, true);
    else if (identity == "duality-phi")
        check_duality_power(chk, n_max, false);
    else if (identity == "product-psi")
        check_product(chk, n_max, true);
    else if (identity == "product-phi")
        check_product(chk, n_max, false);
    else if (identity == "psi-to-f")
        check_psi_to_f(chk, n_max);
    else if (identity == "phi-to-f")
        check_phi_to_f(chk, n_max);
    else if (identity == "mon-interval")
        check_mon_interval(chk, n_max);
    else if (identity == "antipode-psi")
        check_antipode_psi(chk, n_max);
    else if (identity == "shuffle-pi")
        check_shuffle_pi(chk, n_max);
    else if (identity == "shuffle-osp")
        check_shuffle_osp(chk, n_max);
    else if (identity == "combpsi")
        check_combinatorial_psi(chk, n_max);
    else
        throw DomainError("unknown identity '" + identity + "'");
    return chk.report;
}

std::string report_to_json_string(const Report& report) {
    nlohmann::ordered_json doc;
    doc["identity"] = report.identity;
    doc["n_max"] = report.n_max;
    doc["instances"] = report.instances;
    doc["failures"] = report.failures;
    return doc.dump();
}

} // namespace qpsum::oracle
