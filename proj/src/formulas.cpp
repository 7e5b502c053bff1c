#include "sfq/formulas.hpp"

#include "sfq/number_theory.hpp"

#include <numeric>
#include <sstream>

namespace sfq {

namespace {

Rational qpow(std::uint64_t q, int e) {
    if (e >= 0) return Rational(big_pow(q, e));
    return make_rational(1, big_pow(q, -e));
}

Rational rq(std::uint64_t q) { return Rational(BigInt(q)); }

bool gaps_at_least(const Partition& l, int g, int skip = -1) {
    for (int i = 0; i + 1 < l.length(); ++i) {
        if (i == skip) continue;
        if (l[i] - l[i + 1] < g) return false;
    }
    return true;
}

void push(std::vector<Prediction>& out, Rational v, const char* rule, std::string fam) {
    out.push_back({std::move(v), rule, std::move(fam)});
}

// (a, b, 1^m): returns b and m when the shape has this form with b >= 2
bool thick_hook(const Partition& l, int& b, int& m) {
    if (l.length() < 2 || l[1] < 2) return false;
    for (int i = 2; i < l.length(); ++i)
        if (l[i] != 1) return false;
    b = l[1];
    m = l.length() - 2;
    return true;
}

// (a^m, 1^n) with a, m > 1, n >= 1
bool fattened_tail(const Partition& l) {
    const int a = l.empty() ? 0 : l[0];
    if (a < 2) return false;
    int m = 0;
    while (m < l.length() && l[m] == a) ++m;
    if (m < 2 || m == l.length()) return false;
    for (int i = m; i < l.length(); ++i)
        if (l[i] != 1) return false;
    return true;
}

std::vector<Prediction> collect(const Partition& l, std::uint64_t q, bool first_only) {
    std::vector<Prediction> out;
    if (l.empty()) return out;
    const Rational Q = rq(q);
    auto done = [&] { return first_only && !out.empty(); };
    const ShapeClass sc = classify(l);

    if (sc.hook()) push(out, 1 / Q, "hook", "(a,1^m)");
    if (done()) return out;
    if (sc.rectangle()) push(out, 1 / Q, "rectangle", "(b^m)");
    if (done()) return out;
    if (sc.staircase()) push(out, 1 / Q, "staircase", "(k,k-1,...,1)");
    if (done()) return out;

    const auto& v = l.vec();
    if (v == std::vector<int>{4, 4, 2, 2}) {
        const Rational g = q % 2 == 0 ? Q * Q - Q : Q * Q - Q + 1;
        push(out, (qpow(q, 4) + (Q - 1) * g) / qpow(q, 5), "prop-quasi-4422", "(4,4,2,2)");
    }
    if (v == std::vector<int>{4, 4, 3, 3}) {
        const Rational q3 = qpow(q, 3);
        const Rational g = q % 3 == 0 ? q3 : q % 3 == 1 ? q3 - 1 : q3 + 1;
        push(out, (qpow(q, 5) + (Q - 1) * g) / qpow(q, 6), "quasi-4433", "(4,4,3,3)");
    }
    if (v == std::vector<int>{4, 4, 3, 2}) {
        const Rational g = q % 2 == 0 ? Q * Q + Q - 1 : Q * Q + Q - 2;
        push(out, (qpow(q, 4) + (Q - 1) * g) / qpow(q, 5), "quasi-4432", "(4,4,3,2)");
    }
    if (done()) return out;

    const Rational two_row = (Q * Q + Q - 1) / qpow(q, 3);
    if (l.length() == 3 && l[0] >= 5 && l[1] == l[0] - 1 && l[2] == l[0] - 2)
        push(out, two_row, "three-consecutive", "(a,a-1,a-2), a>=5");
    if (done()) return out;
    int b = 0, m = 0;
    if (thick_hook(l, b, m) && l[0] != b + m)
        push(out, two_row, "thick-hook", "(a,b,1^m), b>=2, a!=b+m");
    if (done()) return out;
    if (fattened_tail(l)) push(out, two_row, "fattened-hook-tail", "(a^m,1^n), a,m>1, n>=1");
    if (done()) return out;

    const int k = l.length();
    if (gaps_at_least(l, k - 1)) {
        if (l[k - 1] >= k) {
            push(out, 1 - Rational(gl_order(k, q)) / qpow(q, k * k), "far-apart",
                 "gaps >= k-1, last row >= k");
        } else {
            push(out, 1 - Rational(gl_order(k - 1, q)) / qpow(q, (k - 1) * (k - 1)),
                 "far-apart-short", "gaps >= k-1, last row < k");
        }
    }
    if (done()) return out;
    if (k >= 2 && l[k - 1] >= k) {
        for (int j = 0; j + 1 < k; ++j) {
            if (l[j] - l[j + 1] != k - 2 || !gaps_at_least(l, k - 1, j)) continue;
            const int e = k * k - 2 * k + 2;
            Rational prod = 1;
            for (int i = 0; i <= k - 3; ++i) prod *= qpow(q, k - 2) - qpow(q, i);
            const Rational inner = qpow(q, 2 * k - 2) - qpow(q, k - 1) - qpow(q, k - 2) + 1;
            push(out, (qpow(q, e) - inner * prod) / qpow(q, e), "one-repeat",
                 "one gap k-2, other gaps >= k-1, last row >= k");
            break;
        }
    }
    return out;
}

} // namespace

std::optional<Prediction> predicted_prob_zero(const Partition& lambda, std::uint64_t q) {
    auto r = collect(lambda, q, true);
    if (r.empty()) return std::nullopt;
    return r.front();
}

std::vector<Prediction> all_matching_predictions(const Partition& lambda, std::uint64_t q) {
    return collect(lambda, q, false);
}

bool is_two_staircase(const Partition& l) {
    const int n = l.length();
    if (n == 0) return false;
    for (int i = 0; i < n; ++i)
        if (l[i] != 2 * (n - i)) return false;
    return true;
}

std::optional<Prediction> two_staircase_conjecture(const Partition& l, std::uint64_t q) {
    // (2) is a single row, already 1/q
    if (!is_two_staircase(l) || l.length() < 2) return std::nullopt;
    const Rational Q = rq(q);
    return Prediction{(Q * Q + Q - 1) / qpow(q, 3), "two-staircase-conjecture", "(2n,...,4,2)"};
}

BigInt gl_order(int k, std::uint64_t q) {
    BigInt r = 1;
    const BigInt qk = big_pow(q, k);
    for (int j = 0; j < k; ++j) r *= qk - big_pow(q, j);
    return r;
}

int reduced_size(const Partition& l) {
    // each constant 1 of the Jacobi-Trudi matrix retires one row
    int ones = 0;
    for (int i = 0; i < l.length(); ++i)
        for (int j = 0; j < l.length(); ++j)
            if (l[i] - i + j == 0) ++ones;
    return l.length() - ones;
}

Rational asymptotic_bound(const Partition& lambda, std::uint64_t q) {
    const int n = reduced_size(lambda);
    return 1 / rq(q) + Rational(n * (n - 1)) / qpow(q, 2);
}

Rational upper_bound_conjecture(const Partition& lambda, std::uint64_t q) {
    const int k = lambda.length();
    return 1 - Rational(gl_order(k, q)) / qpow(q, k * k);
}

std::uint64_t g_b(std::uint64_t d, std::uint64_t q, std::uint64_t ord_b) {
    return ((q - 1) / ord_b) % d == 0 ? d : 0;
}

long long f_b(std::uint64_t d, std::uint64_t q, std::uint64_t ord_b) {
    long long s = 0;
    for (auto e : divisors(d)) s += moebius(e) * static_cast<long long>(g_b(d / e, q, ord_b));
    return s;
}

namespace {

void check_rect(int a, int n, const FieldPtr& f, Element b) {
    if (n < 1 || a < n) throw std::invalid_argument("rectangle value formula needs a >= n >= 1");
    if (b.is_zero()) throw std::invalid_argument("rectangle value formula covers nonzero targets only");
    if (b.rep >= f->q()) throw std::invalid_argument("target outside the field");
}

} // namespace

Rational rect_value_prob_compositions(int a, int n, const FieldPtr& f, Element b) {
    check_rect(a, n, f, b);
    const std::uint64_t q = f->q();
    const std::uint64_t ord = f->mult_order(b);
    Rational sum = 0;
    for (auto& comp : compositions(n)) {
        std::uint64_t g = q - 1;
        for (int c : comp) g = std::gcd(g, static_cast<std::uint64_t>(c));
        const int k = static_cast<int>(comp.size());
        sum += Rational(big_pow(q - 1, k - 1) * g_b(g, q, ord)) / qpow(q, n);
    }
    return sum;
}

Rational rect_value_prob_moebius(int a, int n, const FieldPtr& f, Element b) {
    check_rect(a, n, f, b);
    const std::uint64_t q = f->q();
    const std::uint64_t ord = f->mult_order(b);
    Rational sum = 0;
    for (auto d : divisors(std::gcd(q - 1, static_cast<std::uint64_t>(n)))) {
        // exponent n(d-1)/d + 1
        const int e = static_cast<int>(static_cast<std::uint64_t>(n) * (d - 1) / d) + 1;
        sum += Rational(f_b(d, q, ord)) / qpow(q, e);
    }
    return sum;
}

std::optional<Rational> QuasiPolynomial::eval(std::uint64_t q) const {
    const auto& c = classes[static_cast<size_t>(q % static_cast<std::uint64_t>(modulus))];
    if (!c) return std::nullopt;
    Rational r = 0;
    for (size_t i = c->size(); i-- > 0;) r = r * rq(q) + (*c)[i];
    return r;
}

std::string QuasiPolynomial::to_string() const {
    std::ostringstream os;
    for (size_t r = 0; r < classes.size(); ++r) {
        if (r) os << "; ";
        os << "q%" << modulus << "==" << r << ": ";
        if (!classes[r]) {
            os << "?";
            continue;
        }
        bool first = true;
        for (size_t i = classes[r]->size(); i-- > 0;) {
            const Rational& c = (*classes[r])[i];
            if (c == 0) continue;
            Rational a = c < 0 ? Rational(-c) : c;
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            const bool unit = a == 1 && i > 0;
            if (!unit) os << (denominator(a) == 1 ? numerator(a).str() : sfq::to_string(a));
            if (i > 0) os << (unit ? "" : "*") << "q" << (i > 1 ? "^" + std::to_string(i) : "");
            first = false;
        }
        if (first) os << "0";
    }
    return os.str();
}

std::optional<QuasiPolynomial> quasipoly_fit(const std::vector<FitPoint>& points, int modulus,
                                             int degree, int shared_above) {
    if (modulus < 1 || degree < 0) throw std::invalid_argument("quasipoly_fit: bad modulus or degree");
    if (shared_above < 0 || shared_above > degree) shared_above = degree;
    std::vector<bool> present(static_cast<size_t>(modulus), false);
    for (auto& p : points) present[p.q % static_cast<std::uint64_t>(modulus)] = true;
    // unknowns: shared coefficients for degrees shared_above+1..degree, then per class 0..shared_above
    const int shared = degree - shared_above;
    std::vector<int> class_base(static_cast<size_t>(modulus), -1);
    int unknowns = shared;
    for (int r = 0; r < modulus; ++r)
        if (present[static_cast<size_t>(r)]) {
            class_base[static_cast<size_t>(r)] = unknowns;
            unknowns += shared_above + 1;
        }
    const size_t rows = points.size();
    const size_t cols = static_cast<size_t>(unknowns) + 1;
    std::vector<Rational> a(rows * cols, Rational(0));
    for (size_t i = 0; i < rows; ++i) {
        const std::uint64_t q = points[i].q;
        Rational* row = &a[i * cols];
        for (int d = shared_above + 1; d <= degree; ++d) row[d - shared_above - 1] = qpow(q, d);
        const int base = class_base[q % static_cast<std::uint64_t>(modulus)];
        for (int d = 0; d <= shared_above; ++d) row[base + d] = qpow(q, d);
        row[unknowns] = points[i].value;
    }
    // exact Gauss-Jordan
    size_t rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < unknowns && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && a[p * cols + static_cast<size_t>(c)] == 0) ++p;
        if (p == rows) continue;
        for (size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[rank * cols + j]);
        const Rational inv = 1 / a[rank * cols + static_cast<size_t>(c)];
        for (size_t j = 0; j < cols; ++j) a[rank * cols + j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i * cols + static_cast<size_t>(c)] == 0) continue;
            const Rational fct = a[i * cols + static_cast<size_t>(c)];
            for (size_t j = 0; j < cols; ++j) a[i * cols + j] -= fct * a[rank * cols + j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (static_cast<int>(rank) < unknowns)
        throw std::invalid_argument("quasipoly_fit: too few points per residue class");
    for (size_t i = rank; i < rows; ++i)
        if (a[i * cols + static_cast<size_t>(unknowns)] != 0) return std::nullopt;
    std::vector<Rational> sol(static_cast<size_t>(unknowns));
    for (size_t i = 0; i < rank; ++i)
        sol[static_cast<size_t>(pivot_col[i])] = a[i * cols + static_cast<size_t>(unknowns)];

    QuasiPolynomial qp;
    qp.modulus = modulus;
    qp.degree = degree;
    qp.classes.resize(static_cast<size_t>(modulus));
    for (int r = 0; r < modulus; ++r) {
        if (!present[static_cast<size_t>(r)]) continue;
        std::vector<Rational> c(static_cast<size_t>(degree) + 1);
        for (int d = 0; d <= shared_above; ++d)
            c[static_cast<size_t>(d)] = sol[static_cast<size_t>(class_base[static_cast<size_t>(r)] + d)];
        for (int d = shared_above + 1; d <= degree; ++d)
            c[static_cast<size_t>(d)] = sol[static_cast<size_t>(d - shared_above - 1)];
        qp.classes[static_cast<size_t>(r)] = std::move(c);
    }
    return qp;
}

} // namespace sfq
