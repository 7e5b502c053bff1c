#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sfq {

// Element of GF(p^k): base-p digits of rep are the residue polynomial's
// coefficients, constant term least significant.
struct Element {
    std::uint32_t rep = 0;
    constexpr bool is_zero() const { return rep == 0; }
    friend constexpr bool operator==(Element, Element) = default;
    friend constexpr auto operator<=>(Element, Element) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    // Canonical field of order q: smallest monic irreducible modulus in base-p order.
    static FieldPtr make(std::uint32_t q);
    // Same order, caller-chosen monic irreducible modulus (ascending coefficients).
    static FieldPtr with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    int k() const { return k_; }
    std::uint32_t q() const { return q_; }
    // Ascending coefficients, length k+1, leading 1. For k = 1 this is x: [0,1].
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Element zero() const { return {0}; }
    Element one() const { return {1}; }
    Element element(std::uint32_t rep) const;
    // Image of an integer in the prime subfield.
    Element from_int(long long n) const;

    Element add(Element a, Element b) const { return {add_raw(a.rep, b.rep)}; }
    Element sub(Element a, Element b) const { return {add_raw(a.rep, neg_raw(b.rep))}; }
    Element mul(Element a, Element b) const { return {mul_raw(a.rep, b.rep)}; }
    Element neg(Element a) const { return {neg_raw(a.rep)}; }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const;

    // Least t >= 1 with b^t = 1.
    std::uint64_t mult_order(Element b) const;

    // Raw-rep arithmetic for hot loops; inputs must be valid reps.
    std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const {
        return tables_ ? add_t_[a * q_ + b] : slow_add(a, b);
    }
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
        return tables_ ? mul_t_[a * q_ + b] : slow_mul(a, b);
    }
    std::uint32_t neg_raw(std::uint32_t a) const { return tables_ ? neg_t_[a] : slow_neg(a); }
    std::uint32_t sub_raw(std::uint32_t a, std::uint32_t b) const { return add_raw(a, neg_raw(b)); }
    // a must be nonzero.
    std::uint32_t inv_raw(std::uint32_t a) const { return tables_ ? inv_t_[a] : slow_inv(a); }

    std::string modulus_string() const;

private:
    Field(std::uint32_t p, int k, std::vector<std::uint32_t> modulus);

    std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t slow_neg(std::uint32_t a) const;
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t slow_inv(std::uint32_t a) const;

    std::uint32_t p_;
    int k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    bool tables_ = false;
    std::vector<std::uint32_t> add_t_, mul_t_, neg_t_, inv_t_;
};

inline FieldPtr make_field(std::uint32_t q) { return Field::make(q); }

// Polynomials over Z_p in ascending coefficient order; exposed for tests.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);
// All monic irreducible polynomials of degree k over Z_p in base-p order.
std::vector<std::vector<std::uint32_t>> monic_irreducibles(std::uint32_t p, int k);

} // namespace sfq
