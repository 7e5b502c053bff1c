#pragma once

#include "sfq/exact.hpp"
#include "sfq/schur_matrix.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sfq {

struct CountConfig {
    int workers = 0;       // 0: OpenMP default
    double budget = 1e9;   // determinant evaluations allowed per call
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValueDistribution {
    Partition shape;
    Basis basis = Basis::H;
    FieldPtr field;
    int m = 0;                  // variables x_1..x_m
    std::vector<BigInt> counts; // indexed by element rep

    BigInt count(Element a) const { return counts.at(a.rep); }
    BigInt total() const;
    ExactProb prob(Element a) const;
    ExactProb prob_zero() const { return prob(Element{0}); }
    bool conserved() const;
    bool operator==(const ValueDistribution& o) const;
};

// Definitional oracle: every point of F_q^m, one Gaussian elimination each, serial.
ValueDistribution brute_force_distribution(const Partition& lambda, FieldPtr f, Basis basis,
                                           const CountConfig& cfg = {});
// Peels off the top variable: det is affine in x_m, so per fiber on x_1..x_{m-1}
// either every value is hit once or one value is hit q times.
ValueDistribution fast_distribution(const Partition& lambda, FieldPtr f, Basis basis,
                                    const CountConfig& cfg = {});

struct JointCountSpec {
    std::vector<Partition> shapes;
    std::vector<Element> targets;
    Basis basis = Basis::H;
};

int joint_max_label(const JointCountSpec& spec);
// Assignments of x_1..x_m (m the largest max label) sending every shape to its target.
ExactProb joint_distribution(const JointCountSpec& spec, FieldPtr f, const CountConfig& cfg = {});

struct ConditionalResult {
    ExactProb joint;
    ExactProb marginal;   // event of shapes[1]
    Rational conditional; // P(shapes[0] -> t0 | shapes[1] -> t1)
};

ConditionalResult conditional_prob(const JointCountSpec& spec, FieldPtr f, const CountConfig& cfg = {});

} // namespace sfq
