#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace berezin {

// Exact rational coefficients.  GMP keeps values canonical (gcd-reduced,
// positive denominator), so operator== is structural equality.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "7", "-7", "3/2", "-3/2".  Anything else (including decimals) is
// rejected: the engine is exact and must not guess a rounding.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    bool digits = false, slash = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
            digits = true;
        } else if (c == '/' && digits && !slash) {
            slash = true;
            digits = false;
        } else {
            throw std::invalid_argument("bad rational literal: " + text);
        }
    }
    if (!digits) throw std::invalid_argument("bad rational literal: " + text);
    Rational q;
    // GMP's reader takes a sign only as '-'; the explicit plus is ours to drop.
    if (q.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

}  // namespace berezin
