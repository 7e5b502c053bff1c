#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sfq/field.hpp"
#include "sfq/number_theory.hpp"

#include <stdexcept>

using namespace sfq;

TEST_CASE("number theory") {
    CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(1).empty());
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(prime_power(9) == std::pair<std::uint64_t, int>{3, 2});
    CHECK(prime_power(6) == std::pair<std::uint64_t, int>{0, 0});
    CHECK(prime_power(1) == std::pair<std::uint64_t, int>{0, 0});
    CHECK(ipow(3, 7) == 2187);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::uint64_t phi_sum = 0;
        long long mu_sum = 0;
        for (auto d : divisors(n)) {
            phi_sum += totient(d);
            mu_sum += moebius(d);
        }
        CHECK(phi_sum == n);
        CHECK(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("construction") {
    CHECK_THROWS_WITH_AS(Field::make(6), "q=6 is not a prime power (6 = 2 * 3)", std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(0), std::invalid_argument);
    auto f9 = Field::make(9);
    CHECK(f9->p() == 3);
    CHECK(f9->k() == 2);
    CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(f9->modulus_string() == "[1,0,1]");
    CHECK(Field::make(5)->modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK_THROWS_AS(Field::with_modulus(3, {2, 0, 1}), std::invalid_argument);  // x^2 + 2 = (x-1)(x+1)
    CHECK(is_irreducible_mod_p({1, 1, 1}, 2));
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
    // monic irreducibles of degree 2 over F_p number (p^2 - p) / 2
    CHECK(monic_irreducibles(3, 2).size() == 3);
    CHECK(monic_irreducibles(5, 2).size() == 10);
    CHECK(monic_irreducibles(2, 3).size() == 2);
}

static void check_axioms(const Field& f) {
    const std::uint32_t q = f.q();
    for (std::uint32_t a = 0; a < q; ++a) {
        const Element x{a};
        CHECK(f.add(x, f.zero()) == x);
        CHECK(f.mul(x, f.one()) == x);
        CHECK(f.add(x, f.neg(x)) == f.zero());
        if (a) {
            CHECK(f.mul(x, f.inv(x)) == f.one());
            CHECK(f.pow(x, q - 1) == f.one());
            CHECK((q - 1) % f.mult_order(x) == 0);
        }
        for (std::uint32_t b = 0; b < q; ++b) {
            const Element y{b};
            CHECK(f.add(x, y) == f.add(y, x));
            CHECK(f.mul(x, y) == f.mul(y, x));
            for (std::uint32_t c = 0; c < q; c += (q > 9 ? 3 : 1)) {
                const Element z{c};
                CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
            }
        }
    }
    // the multiplicative group is cyclic
    bool generator = false;
    for (std::uint32_t a = 1; a < q; ++a) generator |= f.mult_order(Element{a}) == q - 1;
    CHECK(generator);
}

TEST_CASE("field axioms") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
        CAPTURE(q);
        check_axioms(*Field::make(q));
    }
    check_axioms(*Field::with_modulus(3, {2, 2, 1}));
    CHECK_THROWS_AS(Field::make(7)->inv(Element{0}), std::domain_error);
}

TEST_CASE("frobenius is additive") {
    for (std::uint32_t q : {4u, 8u, 9u, 25u}) {
        auto f = Field::make(q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                CHECK(f->pow(f->add(Element{a}, Element{b}), f->p()) ==
                      f->add(f->pow(Element{a}, f->p()), f->pow(Element{b}, f->p())));
    }
}

TEST_CASE("from_int lands in the prime subfield") {
    auto f = Field::make(9);
    CHECK(f->from_int(4) == f->one());
    CHECK(f->from_int(-1) == Element{2});
    CHECK(f->from_int(0) == f->zero());
    CHECK_THROWS(f->element(9));
}

TEST_CASE("large prime without tables") {
    auto f = Field::make(1031);
    const Element a{1000}, b{77};
    CHECK(f->mul(f->div(a, b), b) == a);
    CHECK(f->pow(a, 1030) == f->one());
}
