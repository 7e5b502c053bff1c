#include "sfq/number_theory.hpp"

#include <stdexcept>

namespace sfq {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

int moebius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("moebius(0)");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("totient(0)");
    std::uint64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors(0)");
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::pair<std::uint64_t, int> prime_power(std::uint64_t q) {
    if (q < 2) return {0, 0};
    auto f = factorize(q);
    if (f.size() != 1) return {0, 0};
    return f.front();
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace sfq
