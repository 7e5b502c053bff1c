#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "sfq/counting.hpp"

using namespace sfq;

namespace {

Rational R(long long a, long long b) { return Rational(a) / Rational(b); }

} // namespace

TEST_CASE("brute force matches the Leibniz oracle") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto f = Field::make(q);
        for (auto& l : partitions_up_to_max_label(q == 4 ? 4 : 5)) {
            CAPTURE(l.to_string());
            const auto d = brute_force_distribution(l, f, Basis::H);
            const auto want = oracle::distribution(l.vec(), f);
            for (std::uint32_t a = 0; a < q; ++a) CHECK(d.counts[a] == want[a]);
            CHECK(d.conserved());
        }
    }
}

TEST_CASE("fast count equals brute force") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        auto f = Field::make(q);
        for (auto& l : partitions_up_to_max_label(q <= 3 ? 6 : 4))
            for (auto b : {Basis::H, Basis::E}) {
                CAPTURE(l.to_string());
                CHECK(fast_distribution(l, f, b) == brute_force_distribution(l, f, b));
            }
    }
}

TEST_CASE("worked values") {
    auto f2 = Field::make(2), f3 = Field::make(3);
    CHECK(fast_distribution(Partition({2, 1}), f2, Basis::H).prob_zero().value() == R(1, 2));
    const auto d22 = fast_distribution(Partition({2, 2}), f2, Basis::H);
    CHECK(d22.count(Element{0}) == 4);
    CHECK(d22.total() == 8);
    CHECK(fast_distribution(Partition({3, 2}), f2, Basis::H).prob_zero().value() == R(5, 8));
    CHECK(fast_distribution(Partition({2, 2, 1}), f2, Basis::H).prob_zero().value() == R(5, 8));
    const auto p = fast_distribution(Partition({4, 4, 2, 2}), f2, Basis::H).prob_zero();
    CHECK(p.count == 72);
    CHECK(p.total_string() == "2^7");
    const auto p3 = fast_distribution(Partition({4, 4, 2, 2}), f3, Basis::H).prob_zero();
    CHECK(p3.count == 855);
    CHECK(p3.value_string() == "95/243");
}

TEST_CASE("transpose and basis symmetry") {
    for (std::uint32_t q : {2u, 3u}) {
        auto f = Field::make(q);
        for (auto& l : partitions_up_to_max_label(6)) {
            const auto h = fast_distribution(l, f, Basis::H);
            CHECK(h.prob_zero().value() == fast_distribution(l, f, Basis::E).prob_zero().value());
            CHECK(h.prob_zero().value() == fast_distribution(transpose(l), f, Basis::H).prob_zero().value());
        }
    }
}

TEST_CASE("counts do not depend on the worker count") {
    auto f = Field::make(3);
    const Partition l({4, 3, 1});
    const auto base = fast_distribution(l, f, Basis::H, {1, 1e9});
    for (int w : {2, 4, 16}) CHECK(fast_distribution(l, f, Basis::H, {w, 1e9}) == base);
}

TEST_CASE("budget") {
    auto f = Field::make(3);
    CHECK_THROWS_WITH_AS(fast_distribution(Partition({4, 4, 2, 2}), f, Basis::H, {0, 100}),
                         doctest::Contains("3^7"), BudgetExceeded);
    CHECK_THROWS_AS(brute_force_distribution(Partition({3, 3}), f, Basis::H, {0, 10}), BudgetExceeded);
    CHECK_NOTHROW(fast_distribution(Partition({3, 3}), f, Basis::H, {0, 54}));
}

TEST_CASE("joint counts match the oracle") {
    for (std::uint32_t q : {2u, 3u}) {
        auto f = Field::make(q);
        const std::vector<std::vector<int>> pairs[] = {
            {{2, 2}, {3, 3}}, {{1}, {3, 2, 1}}, {{2}, {1, 1}}, {{3, 1}, {2, 2}}};
        for (auto& shapes : pairs) {
            JointCountSpec spec;
            for (auto& s : shapes) spec.shapes.emplace_back(s);
            for (std::uint32_t t = 0; t < q; ++t) {
                spec.targets = {Element{0}, Element{t}};
                int m = 0;
                for (auto& s : shapes) m = std::max(m, oracle::max_label(s));
                long long hits = 0;
                oracle::each_point(m, q, [&](const auto& h) {
                    hits += oracle::jt_det(shapes[0], h, *f) == 0 && oracle::jt_det(shapes[1], h, *f) == t;
                });
                const ExactProb p = joint_distribution(spec, f);
                CHECK(p.m == m);
                CHECK(p.count == hits);
            }
        }
    }
    auto f2 = Field::make(2);
    JointCountSpec neg{{Partition({2, 2}), Partition({3, 3})}, {Element{0}, Element{0}}};
    CHECK(joint_distribution(neg, f2).value() == R(5, 16));
}

TEST_CASE("joint of a single shape is its marginal") {
    auto f = Field::make(3);
    for (auto& l : partitions_up_to_max_label(4)) {
        JointCountSpec spec{{l}, {Element{0}}};
        CHECK(joint_distribution(spec, f).value() == fast_distribution(l, f, Basis::H).prob_zero().value());
    }
}

TEST_CASE("conditional probability") {
    auto f = Field::make(3);
    JointCountSpec spec{{staircase(4), staircase(2)}, {Element{0}, Element{0}}};
    const ConditionalResult c = conditional_prob(spec, f);
    CHECK(c.conditional == R(1, 3));
    CHECK(c.marginal.value() == R(1, 3));
    CHECK(c.joint.value() == c.conditional * c.marginal.value());
    JointCountSpec bad{{Partition({1})}, {Element{0}}};
    CHECK_THROWS_AS(conditional_prob(bad, f), std::invalid_argument);
}
