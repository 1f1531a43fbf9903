#include "sunflower/rational.hpp"

#include "sunflower/error.hpp"

namespace sunflower {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw InvalidArgument("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw InvalidArgument("malformed rational '" + text + "'");
    }
}

std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rpow(const Rational& x, unsigned n) {
    Rational acc = 1, b = x;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

Rational binom(const Rational& x, unsigned n) {
    Rational acc = 1;
    for (unsigned i = 0; i < n; ++i) acc *= (x - i) / Rational(i + 1);
    return acc;
}

BigInt floor_of(const Rational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    BigInt q = num / den;
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

long double to_long_double(const Rational& x) { return x.convert_to<long double>(); }

} // namespace sunflower
