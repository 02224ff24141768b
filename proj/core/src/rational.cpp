#include "qpsum/rational.hpp"

#include <cctype>

namespace qpsum {

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto expect_digits = [&](std::size_t from) {
        if (from >= n || !std::isdigit(static_cast<unsigned char>(text[from])))
            throw ParseError("expected digits in rational", from + 1);
    };
    if (n == 0) throw ParseError("empty rational", 1);
    if (text[0] == '-' || text[0] == '+') i = 1;
    expect_digits(i);
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i < n) {
        if (text[i] != '/') throw ParseError("malformed rational", i + 1);
        expect_digits(i + 1);
        std::size_t j = i + 1;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j != n) throw ParseError("trailing characters after rational", j + 1);
        BigInt den(text.substr(i + 1));
        if (den == 0) throw ParseError("zero denominator", i + 2);
        return Rational(BigInt(text.substr(0, i)), den);
    }
    return Rational(BigInt(text));
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

} // namespace qpsum
