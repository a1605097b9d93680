#include "zolab/rational.hpp"

#include <limits>

namespace zolab {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("not a rational: '" + text + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

BigInt rational_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

BigInt rational_ceil(const Rational& r) {
    return -rational_floor(-r);
}

double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

long long bigint_to_ll(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw DomainError("integer out of machine range: " + v.str());
    return v.convert_to<long long>();
}

} // namespace zolab
