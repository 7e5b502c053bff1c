#include "sfq/exact.hpp"

#include <stdexcept>

namespace sfq {

BigInt big_pow(std::uint64_t base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Rational(num, den);
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::string ExactProb::total_string() const {
    return std::to_string(q) + "^" + std::to_string(m);
}

} // namespace sfq
