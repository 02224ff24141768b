#include "qpsum/element.hpp"

#include <algorithm>

#include "qpsum/errors.hpp"

namespace qpsum {

Side side_of(Basis b) {
    switch (b) {
        case Basis::M:
        case Basis::F:
        case Basis::Psi:
        case Basis::Phi:
        case Basis::SmallPsi:
        case Basis::SmallPhi:
            return Side::qsym;
        default:
            return Side::nsym;
    }
}

std::string to_string(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::F: return "F";
        case Basis::Psi: return "Psi";
        case Basis::Phi: return "Phi";
        case Basis::SmallPsi: return "psi";
        case Basis::SmallPhi: return "phi";
        case Basis::H: return "h";
        case Basis::E: return "e";
        case Basis::R: return "r";
        case Basis::NPsi: return "NPsi";
        case Basis::NPhi: return "NPhi";
    }
    throw DomainError("unknown basis");
}

std::string to_string(Side s) { return s == Side::qsym ? "qsym" : "nsym"; }

Basis parse_basis(const std::string& name) {
    for (Basis b : {Basis::M, Basis::F, Basis::Psi, Basis::Phi, Basis::SmallPsi, Basis::SmallPhi,
                    Basis::H, Basis::E, Basis::R, Basis::NPsi, Basis::NPhi}) {
        if (to_string(b) == name) return b;
    }
    throw ParseError("unknown basis name '" + name + "'", 1);
}

std::vector<Basis> qsym_bases() {
    return {Basis::M, Basis::F, Basis::Psi, Basis::Phi, Basis::SmallPsi, Basis::SmallPhi};
}

std::vector<Basis> nsym_bases() {
    return {Basis::H, Basis::E, Basis::R, Basis::NPsi, Basis::NPhi};
}

BasisElement BasisElement::generator(Basis basis, const Composition& index) {
    BasisElement f(basis);
    f.terms_.emplace(index, Rational(1));
    return f;
}

Rational BasisElement::coefficient(const Composition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BasisElement::add_term(const Composition& index, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BasisElement& BasisElement::operator+=(const BasisElement& other) {
    if (basis_ != other.basis_) throw DomainError("cannot add elements in different bases");
    for (const auto& [index, c] : other.terms_) add_term(index, c);
    return *this;
}

BasisElement& BasisElement::operator-=(const BasisElement& other) {
    if (basis_ != other.basis_) throw DomainError("cannot subtract elements in different bases");
    for (const auto& [index, c] : other.terms_) add_term(index, -c);
    return *this;
}

BasisElement& BasisElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [index, coeff] : terms_) coeff *= c;
    return *this;
}

std::vector<int> BasisElement::degrees() const {
    std::vector<int> out;
    for (const auto& [index, c] : terms_) {
        if (out.empty() || out.back() != index.size()) out.push_back(index.size());
    }
    // canonical order is sorted by size first, so the list is already ascending
    return out;
}

BasisElement BasisElement::component(int degree) const {
    BasisElement out(basis_);
    for (const auto& [index, c] : terms_)
        if (index.size() == degree) out.add_term(index, c);
    return out;
}

} // namespace qpsum
