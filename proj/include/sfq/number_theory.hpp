#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sfq {

// Trial-division factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

int moebius(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);
// Positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

// q = p^k with p prime and k >= 1, else {0, 0}.
std::pair<std::uint64_t, int> prime_power(std::uint64_t q);

std::uint64_t ipow(std::uint64_t base, int exp);

} // namespace sfq
