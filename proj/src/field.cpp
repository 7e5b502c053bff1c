#include "sfq/field.hpp"

#include "sfq/number_theory.hpp"

#include <sstream>
#include <tuple>
#include <stdexcept>

namespace sfq {

namespace {

constexpr std::uint32_t kTableLimit = 1024;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is tiny; Fermat would also do
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        std::int64_t qt = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - qt * nt);
        std::tie(r, nr) = std::make_pair(nr, r - qt * nr);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

// remainder of a modulo b over Z_p; b nonzero
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() > db) {
        const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        const size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = c * b[i] % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly digits(std::uint32_t rep, std::uint32_t p, int k) {
    Poly d(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        d[static_cast<size_t>(i)] = rep % p;
        rep /= p;
    }
    return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p) {
    std::uint32_t rep = 0;
    for (size_t i = d.size(); i-- > 0;) rep = rep * p + d[i];
    return rep;
}

} // namespace

bool is_irreducible_mod_p(const Poly& poly_in, std::uint32_t p) {
    Poly poly = poly_in;
    trim(poly);
    if (poly.size() < 2) return false;
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (int d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly div = digits(static_cast<std::uint32_t>(low), p, d);
            div.push_back(1);
            if (poly_mod(poly, div, p).empty()) return false;
        }
    }
    return true;
}

std::vector<Poly> monic_irreducibles(std::uint32_t p, int k) {
    std::vector<Poly> out;
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t low = 0; low < count; ++low) {
        Poly m = digits(static_cast<std::uint32_t>(low), p, k);
        m.push_back(1);
        if (is_irreducible_mod_p(m, p)) out.push_back(std::move(m));
    }
    return out;
}

Field::Field(std::uint32_t p, int k, Poly modulus)
    : p_(p), k_(k), q_(static_cast<std::uint32_t>(ipow(p, k))), modulus_(std::move(modulus)) {
    if (q_ <= kTableLimit) {
        const size_t qq = size_t(q_) * q_;
        add_t_.resize(qq);
        mul_t_.resize(qq);
        neg_t_.resize(q_);
        inv_t_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            neg_t_[a] = slow_neg(a);
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_t_[a * q_ + b] = slow_add(a, b);
                mul_t_[a * q_ + b] = slow_mul(a, b);
            }
        }
        for (std::uint32_t a = 1; a < q_; ++a)
            for (std::uint32_t b = 1; b < q_; ++b)
                if (mul_t_[a * q_ + b] == 1) {
                    inv_t_[a] = b;
                    break;
                }
        tables_ = true;
    }
}

FieldPtr Field::make(std::uint32_t q) {
    auto [p, k] = prime_power(q);
    if (p == 0) {
        std::ostringstream os;
        os << "q=" << q << " is not a prime power";
        if (q >= 2) {
            os << " (" << q << " =";
            bool first = true;
            for (auto [f, e] : factorize(q)) {
                os << (first ? " " : " * ") << f;
                if (e > 1) os << '^' << e;
                first = false;
            }
            os << ')';
        }
        throw std::invalid_argument(os.str());
    }
    if (ipow(p, k) > (1u << 20)) throw std::invalid_argument("field order too large");
    Poly modulus;
    if (k == 1) {
        modulus = {0, 1};
    } else {
        // first irreducible in base-p order
        const std::uint64_t count = ipow(p, k);
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly m = digits(static_cast<std::uint32_t>(low), static_cast<std::uint32_t>(p), k);
            m.push_back(1);
            if (is_irreducible_mod_p(m, static_cast<std::uint32_t>(p))) {
                modulus = std::move(m);
                break;
            }
        }
    }
    return FieldPtr(new Field(static_cast<std::uint32_t>(p), k, std::move(modulus)));
}

FieldPtr Field::with_modulus(std::uint32_t p, Poly modulus) {
    trim(modulus);
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree >= 1");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    const int k = static_cast<int>(modulus.size()) - 1;
    if (!is_irreducible_mod_p(modulus, p)) throw std::invalid_argument("modulus is reducible");
    if (k == 1) modulus = {0, 1};  // every linear modulus gives the same prime field
    return FieldPtr(new Field(p, k, std::move(modulus)));
}

Element Field::element(std::uint32_t rep) const {
    if (rep >= q_) throw std::out_of_range("element rep out of range");
    return {rep};
}

Element Field::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

Element Field::inv(Element a) const {
    if (a.is_zero()) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    return {inv_raw(a.rep)};
}

Element Field::pow(Element a, std::uint64_t e) const {
    Element r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::mult_order(Element b) const {
    if (b.is_zero()) throw std::domain_error("multiplicative order of zero");
    // smallest divisor t of q-1 with b^t = 1
    for (auto t : divisors(q_ - 1))
        if (pow(b, t) == one()) return t;
    throw std::logic_error("mult_order: no divisor works");
}

std::uint32_t Field::slow_add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return (a + b) % p_;
    std::uint32_t r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

std::uint32_t Field::slow_neg(std::uint32_t a) const {
    if (k_ == 1) return (p_ - a) % p_;
    std::uint32_t r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    Poly da = digits(a, p_, k_), db = digits(b, p_, k_);
    Poly prod(static_cast<size_t>(2 * k_ - 1), 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            prod[static_cast<size_t>(i + j)] = static_cast<std::uint32_t>(
                (prod[static_cast<size_t>(i + j)] + std::uint64_t(da[static_cast<size_t>(i)]) *
                                                        db[static_cast<size_t>(j)]) % p_);
    Poly r = poly_mod(prod, modulus_, p_);
    r.resize(static_cast<size_t>(k_), 0);
    return undigits(r, p_);
}

std::uint32_t Field::slow_inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero");
    if (k_ == 1) return inv_mod_p(a, p_);
    // a^(q-2)
    std::uint32_t r = 1, base = a;
    std::uint64_t e = q_ - 2;
    while (e) {
        if (e & 1) r = slow_mul(r, base);
        base = slow_mul(base, base);
        e >>= 1;
    }
    return r;
}

std::string Field::modulus_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    os << ']';
    return os.str();
}

} // namespace sfq
