#pragma once

#include "sfq/exact.hpp"
#include "sfq/field.hpp"
#include "sfq/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sfq {

struct Prediction {
    Rational value;
    std::string rule;    // e.g. "hook", "prop-quasi-4422"
    std::string family;  // human-readable description of the matched family
};

// First matching closed form for P(s_λ -> 0), in this order: hook, rectangle,
// staircase; the fixed quasi-polynomial shapes; the (q^2+q-1)/q^3 families;
// far-apart rows, far-apart with a short last row, one repeated variable.
// nullopt means no rule covers the shape.
std::optional<Prediction> predicted_prob_zero(const Partition& lambda, std::uint64_t q);
// Every rule that matches, in the same order; used to check overlapping rules agree.
std::vector<Prediction> all_matching_predictions(const Partition& lambda, std::uint64_t q);
// The open 2-staircase claim (2n, ..., 4, 2) with n >= 2, kept apart from the proven rules.
std::optional<Prediction> two_staircase_conjecture(const Partition& lambda, std::uint64_t q);
bool is_two_staircase(const Partition& lambda);

// |GL_k(F_q)|
BigInt gl_order(int k, std::uint64_t q);

// 1/q + n(n-1)/q^2 with n the size of the reduced Jacobi-Trudi matrix.
Rational asymptotic_bound(const Partition& lambda, std::uint64_t q);
int reduced_size(const Partition& lambda);
// 1 - |GL_k|/q^(k^2), k the number of parts.
Rational upper_bound_conjecture(const Partition& lambda, std::uint64_t q);

// g_b(d) = d if d divides (q-1)/ord(b), else 0.
std::uint64_t g_b(std::uint64_t d, std::uint64_t q, std::uint64_t ord_b);
// Möbius inverse of g_b.
long long f_b(std::uint64_t d, std::uint64_t q, std::uint64_t ord_b);

// P(s_(a^n) -> b) for b != 0, summed over compositions of n.
Rational rect_value_prob_compositions(int a, int n, const FieldPtr& f, Element b);
// Same quantity as a divisor sum over gcd(q-1, n).
Rational rect_value_prob_moebius(int a, int n, const FieldPtr& f, Element b);

// One polynomial per residue class of q mod N; coefficients ascending in degree.
struct QuasiPolynomial {
    int modulus = 1;
    int degree = 0;
    std::vector<std::optional<std::vector<Rational>>> classes;  // nullopt: no data for the class

    std::optional<Rational> eval(std::uint64_t q) const;
    std::string to_string() const;
};

struct FitPoint {
    std::uint64_t q;
    Rational value;
};

// Exact interpolation. Coefficients of degree > shared_above are common to all
// classes, the rest are per class; shared_above < 0 means fully per class.
// Throws std::invalid_argument when the points cannot determine the coefficients;
// returns nullopt when surplus points contradict the fit.
std::optional<QuasiPolynomial> quasipoly_fit(const std::vector<FitPoint>& points, int modulus,
                                             int degree, int shared_above = -1);

} // namespace sfq
