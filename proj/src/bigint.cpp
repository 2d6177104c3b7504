#include "ofsign/bigint.hpp"

#include <stdexcept>

namespace ofsign {

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

BigInt parse_integer(const std::string& s) {
    if (!is_integer_literal(s)) throw std::invalid_argument("invalid integer '" + s + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const BigInt num = parse_integer(text.substr(0, slash));
        const BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || !is_integer_literal(frac) || frac[0] == '-' || frac[0] == '+') {
            throw std::invalid_argument("invalid decimal '" + text + "'");
        }
        const bool negative = !whole.empty() && whole[0] == '-';
        const std::string digits = (whole.empty() || whole == "-" || whole == "+") ? "0" : whole;
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        BigInt magnitude = abs(parse_integer(digits)) * scale + parse_integer(frac);
        Rational q(negative ? BigInt(-magnitude) : magnitude, scale);
        q.canonicalize();
        return q;
    }
    return Rational(parse_integer(text));
}

}  // namespace ofsign
