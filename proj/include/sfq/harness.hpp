#pragma once

#include "sfq/counting.hpp"
#include "sfq/formulas.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sfq {

enum class Verdict { Match, Mismatch, NoPrediction, Skipped };
enum class Relation { Equal, Greater, LessEqual, NotEqual };

std::string to_string(Verdict v);
std::string to_string(Relation r);
Verdict parse_verdict(const std::string& s);
Relation parse_relation(const std::string& s);
bool holds(Relation r, const Rational& measured, const Rational& predicted);

struct VerificationRecord {
    std::string kind;  // shape, classify, joint, conditional, upper-bound, two-staircase, quasi-poly
    std::vector<Partition> shapes;
    std::uint64_t q = 0;
    Basis basis = Basis::H;
    bool measured = false;
    BigInt count;          // numerator of the measured probability
    std::string total;     // "q^m" or, for conditionals, the conditioning count
    Rational value;        // measured probability
    std::optional<Rational> predicted;
    std::string rule;
    Relation relation = Relation::Equal;
    Verdict verdict = Verdict::NoPrediction;
    bool asserted = true;  // counts toward the exit code
    std::string reason;
    std::optional<double> ms;
};

struct FitSummary {
    Partition shape;
    int modulus = 1;
    int degree = 0;
    std::string fitted;
    std::string expected;
    bool agrees = false;
};

struct ScanSummary {
    int total = 0, match = 0, mismatch = 0, no_prediction = 0, skipped = 0;
    int asserted_mismatch = 0;
    int conjecture_violations = 0;
};

struct ScanReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;  // echoed settings, all strings
    std::vector<VerificationRecord> records;
    std::vector<FitSummary> fits;

    ScanSummary summary() const;
    // Deterministic order by (shapes, q, basis, kind).
    void sort();
    int exit_code() const { return summary().asserted_mismatch > 0 ? 1 : 0; }
    void append(const ScanReport& o);
};

struct HarnessConfig {
    CountConfig count;
    bool timing = false;  // wall-clock per record; off keeps reports byte-stable
};

// Measured P(0) against the predicted closed form, with the bounds
// 1/q <= P <= 1/q + n(n-1)/q^2 and agreement of every matching rule.
VerificationRecord verify_shape(const Partition& lambda, std::uint64_t q, Basis basis,
                                const HarnessConfig& cfg);

ScanReport scan_verify(int max_label, const std::vector<std::uint64_t>& qs,
                       const std::vector<Basis>& bases, const HarnessConfig& cfg);
// P(0) = 1/q exactly for hooks, rectangles and staircases, P(0) > 1/q for the rest.
ScanReport scan_classification(int max_label, const std::vector<std::uint64_t>& qs,
                               const HarnessConfig& cfg);

struct IndependenceOptions {
    std::string family;  // hooks-by-size, squares, rect-diff-c, rect-sum-c, staircase-step2, negative-control
    int limit = 3;
    int c = 0;
    int max_subset = 3;
};

ScanReport independence_suite(const IndependenceOptions& opt, std::uint64_t q, const HarnessConfig& cfg);

struct ConjectureOptions {
    std::string which;  // upper-bound, two-staircase, quasi-poly
    int max_label = 6;
    std::vector<std::uint64_t> qs;
    int limit = 3;      // two-staircase: largest n
};

ScanReport conjecture_scan(const ConjectureOptions& opt, const HarnessConfig& cfg);

// Shapes whose P(0) is a quasi-polynomial: P = (q^(k-1) + (q-1) g(q)) / q^k with g
// one polynomial per residue of q mod N. expected[r] lists g's coefficients, ascending.
struct QuasiShape {
    Partition shape;
    int k;
    int modulus;
    int degree;
    int shared_above;
    std::vector<std::vector<int>> expected;
};
std::vector<QuasiShape> quasi_shapes();
// g(q) = (q^k P - q^(k-1)) / (q-1)
Rational quasi_excess(const Rational& p, std::uint64_t q, int k);

} // namespace sfq
