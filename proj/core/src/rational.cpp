#include "cyclelab/rational.hpp"

#include <cctype>

namespace cyclelab {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s));
    bool neg = s[0] == '-';
    std::string digits = s;
    digits.erase(dot, 1);
    if (neg) digits.erase(0, 1);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("parse_rational: bad literal " + s);
    long long den = 1;
    for (size_t i = dot; i < s.size() - 1; ++i) {
        if (den > 1000000000000000LL) throw std::invalid_argument("parse_rational: too many decimals");
        den *= 10;
    }
    long long num = digits.empty() ? 0 : std::stoll(digits);
    return Rational(neg ? -num : num, den);
}

}  // namespace cyclelab
