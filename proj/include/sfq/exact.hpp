#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sfq {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

BigInt big_pow(std::uint64_t base, int exp);
Rational make_rational(const BigInt& num, const BigInt& den);

// "num/den" in lowest terms, always with a slash.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);
Rational parse_rational(const std::string& s);

// count out of q^m, with q^m kept symbolic.
struct ExactProb {
    BigInt count = 0;
    std::uint64_t q = 1;
    int m = 0;

    BigInt total() const { return big_pow(q, m); }
    Rational value() const { return make_rational(count, total()); }
    std::string total_string() const;  // "3^7"
    std::string value_string() const { return to_string(value()); }
};

} // namespace sfq
