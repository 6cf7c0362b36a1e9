#include "gonc/rational.hpp"

#include "gonc/errors.hpp"

namespace gonc {

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/" + denominator(q).str();
    }
    return s;
}

namespace {

Int int_from_string(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad integer literal: '" + std::string(s) + "'");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("bad integer literal: '" + std::string(s) + "'");
    }
    return Int(std::string(s));
}

}  // namespace

Rational rational_from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(int_from_string(s));
    }
    Int num = int_from_string(s.substr(0, slash));
    Int den = int_from_string(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
}

Rational rat_pow(const Rational& base, int exp) {
    Rational result(1);
    Rational b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        b *= b;
    }
    return result;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int to_integer(const Rational& q) {
    if (!is_integer(q))
        throw NonIntegerResult("expected an integer, got " + to_string(q));
    return numerator(q);
}

}  // namespace gonc
