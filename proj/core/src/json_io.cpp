#include "qpsum/json_io.hpp"

#include <cctype>

#include "qpsum/errors.hpp"

namespace qpsum {

nlohmann::ordered_json element_to_json(const BasisElement& f) {
    nlohmann::ordered_json doc;
    doc["side"] = to_string(f.side());
    doc["basis"] = to_string(f.basis());
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [index, c] : f.terms()) {
        nlohmann::ordered_json term;
        term["index"] = index.parts();
        term["coeff"] = to_string(c);
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

std::string element_to_json_string(const BasisElement& f) { return element_to_json(f).dump(); }

BasisElement element_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("basis") || !doc.contains("terms"))
        throw ParseError("element document needs 'basis' and 'terms'", 1);
    const Basis basis = parse_basis(doc.at("basis").get<std::string>());
    if (doc.contains("side") && doc.at("side").get<std::string>() != to_string(side_of(basis)))
        throw ParseError("'side' does not match the basis", 1);
    BasisElement out(basis);
    for (const auto& term : doc.at("terms")) {
        if (!term.contains("index") || !term.contains("coeff"))
            throw ParseError("each term needs 'index' and 'coeff'", 1);
        std::vector<int> parts;
        for (const auto& p : term.at("index")) {
            const int v = p.get<int>();
            if (v < 1) throw ParseError("index parts must be positive", 1);
            parts.push_back(v);
        }
        out.add_term(Composition(std::move(parts)),
                     parse_rational(term.at("coeff").get<std::string>()));
    }
    return out;
}

std::string format_element_text(const BasisElement& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    const std::string basis = to_string(f.basis());
    for (const auto& [index, c] : f.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        out += to_string(negative ? Rational(-c) : c);
        out += ' ';
        out += basis;
        out += '[';
        out += to_string(index);
        out += ']';
    }
    return out;
}

BasisElement parse_element(const std::string& text) {
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    if (start < text.size() && text[start] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
        }
        return element_from_json(doc);
    }
    const std::size_t colon = text.find(':', start);
    if (colon == std::string::npos)
        throw ParseError("expected 'Basis:parts' or a JSON document", start + 1);
    const Basis basis = parse_basis(text.substr(start, colon - start));
    const Composition index = parse_composition(text.substr(colon + 1), colon + 1);
    return BasisElement::generator(basis, index);
}

} // namespace qpsum
