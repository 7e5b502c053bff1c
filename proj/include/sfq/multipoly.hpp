#pragma once

#include "sfq/field.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sfq {

// Sparse exponent vector: (variable index >= 1, exponent >= 1), variables ascending.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(int index, int exp = 1);

    const std::vector<std::pair<int, int>>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    int degree() const;
    int exponent(int var) const;
    int top_var() const { return f_.empty() ? 0 : f_.back().first; }
    Monomial without(int var) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    std::string to_string() const;

private:
    std::vector<std::pair<int, int>> f_;
};

struct NotLabelForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undefined (nullopt) for the zero polynomial.
using Label = std::optional<int>;

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(FieldPtr f) : field_(std::move(f)) {}
    static MultiPoly constant(FieldPtr f, Element c);
    static MultiPoly var(FieldPtr f, int index);
    // "x5 - 2*x4 + x1^2*x3"; integers are read in the prime subfield, #n is the element with rep n.
    static MultiPoly parse(FieldPtr f, std::string_view text);

    const FieldPtr& field() const { return field_; }
    const std::map<Monomial, Element>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the empty monomial.
    Element constant_term() const;
    Element coefficient(const Monomial& m) const;
    int top_var() const;
    int degree_in(int var) const;
    int total_degree() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(Element c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

    // Partial evaluation; unbound variables stay symbolic.
    MultiPoly substitute(const std::map<int, Element>& bindings) const;
    // values[i] is the value of x_{i+1}; every variable present must be covered.
    Element evaluate(const std::vector<Element>& values) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    void check_same(const MultiPoly& o) const;
    void add_term(const Monomial& m, Element c);

    FieldPtr field_;
    std::map<Monomial, Element> terms_;
};

// Label of x_k - f(x_1..x_{k-1}) is k, of a nonzero constant 0, of zero undefined.
// The top variable may carry any nonzero scalar. Throws NotLabelForm otherwise.
Label label_of(const MultiPoly& p);

} // namespace sfq
