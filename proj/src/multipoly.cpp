#include "sfq/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sfq {

Monomial Monomial::var(int index, int exp) {
    if (index < 1) throw std::invalid_argument("variable index must be >= 1");
    Monomial m;
    if (exp > 0) m.f_.emplace_back(index, exp);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [v, e] : f_) d += e;
    return d;
}

int Monomial::exponent(int var) const {
    for (auto& [v, e] : f_)
        if (v == var) return e;
    return 0;
}

Monomial Monomial::without(int var) const {
    Monomial m;
    for (auto& ve : f_)
        if (ve.first != var) m.f_.push_back(ve);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.f_.size() || j < b.f_.size()) {
        if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
            r.f_.push_back(a.f_[i++]);
        } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
            r.f_.push_back(b.f_[j++]);
        } else {
            r.f_.emplace_back(a.f_[i].first, a.f_[i].second + b.f_[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

std::string Monomial::to_string() const {
    std::string s;
    for (auto& [v, e] : f_) {
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(v);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

MultiPoly MultiPoly::constant(FieldPtr f, Element c) {
    MultiPoly p(std::move(f));
    if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::var(FieldPtr f, int index) {
    MultiPoly p(f);
    p.terms_.emplace(Monomial::var(index), f->one());
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Element MultiPoly::constant_term() const { return coefficient(Monomial{}); }

Element MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Element{0} : it->second;
}

int MultiPoly::top_var() const {
    int t = 0;
    for (auto& [m, c] : terms_) t = std::max(t, m.top_var());
    return t;
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void MultiPoly::check_same(const MultiPoly& o) const {
    if (field_ && o.field_ && field_ != o.field_ &&
        (field_->q() != o.field_->q() || field_->modulus() != o.field_->modulus()))
        throw std::invalid_argument("polynomials over different fields");
}

void MultiPoly::add_term(const Monomial& m, Element c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = field_->add(it->second, c);
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same(o);
    MultiPoly r = field_ ? *this : o;
    if (!field_) return r;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, field_->neg(c));
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same(o);
    MultiPoly r(field_ ? field_ : o.field_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, field_->mul(ca, cb));
    return r;
}

MultiPoly MultiPoly::scaled(Element c) const {
    MultiPoly r(field_);
    if (c.is_zero()) return r;
    for (auto& [m, a] : terms_) r.terms_.emplace(m, field_->mul(a, c));
    return r;
}

MultiPoly MultiPoly::substitute(const std::map<int, Element>& bindings) const {
    MultiPoly r(field_);
    for (auto& [m, c] : terms_) {
        Element coef = c;
        Monomial rest;
        for (auto& [v, e] : m.factors()) {
            auto it = bindings.find(v);
            if (it == bindings.end())
                rest = rest * Monomial::var(v, e);
            else
                coef = field_->mul(coef, field_->pow(it->second, static_cast<std::uint64_t>(e)));
        }
        r.add_term(rest, coef);
    }
    return r;
}

Element MultiPoly::evaluate(const std::vector<Element>& values) const {
    Element acc{0};
    for (auto& [m, c] : terms_) {
        Element t = c;
        for (auto& [v, e] : m.factors()) {
            if (static_cast<size_t>(v) > values.size())
                throw std::out_of_range("evaluate: missing value for x" + std::to_string(v));
            t = field_->mul(t, field_->pow(values[static_cast<size_t>(v - 1)],
                                           static_cast<std::uint64_t>(e)));
        }
        acc = field_->add(acc, t);
    }
    return acc;
}

namespace {

// Display order: nonconstant terms by ascending degree, then by the exponent
// at the highest differing variable (larger first); constant last.
bool display_before(const Monomial& a, const Monomial& b) {
    if (a.is_one() != b.is_one()) return b.is_one();
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    size_t i = fa.size(), j = fb.size();
    while (i > 0 && j > 0) {
        auto [va, ea] = fa[i - 1];
        auto [vb, eb] = fb[j - 1];
        if (va != vb) return va > vb;
        if (ea != eb) return ea > eb;
        --i;
        --j;
    }
    return i > j;
}

} // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Element>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return display_before(x.first, y.first); });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : sorted) {
        const Element n = field_->neg(c);
        const bool minus = n.rep < c.rep;
        const std::uint32_t shown = minus ? n.rep : c.rep;
        if (first)
            os << (minus ? "-" : "");
        else
            os << (minus ? " - " : " + ");
        // outside the prime subfield a coefficient is written by its rep, as #rep
        const std::string coef = shown < field_->p() ? std::to_string(shown) : "#" + std::to_string(shown);
        if (m.is_one())
            os << coef;
        else if (shown == 1)
            os << m.to_string();
        else
            os << coef << '*' << m.to_string();
        first = false;
    }
    return os.str();
}

namespace {

struct Parser {
    FieldPtr f;
    std::string_view s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_end() {
        skip();
        return i >= s.size();
    }
    long long number() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("polynomial parse: expected number at " +
                                                    std::to_string(start));
        return std::stoll(std::string(s.substr(start, i - start)));
    }
    MultiPoly factor() {
        skip();
        if (i < s.size() && s[i] == '(') {
            ++i;
            MultiPoly inner = expr();
            skip();
            if (i >= s.size() || s[i] != ')') throw std::invalid_argument("polynomial parse: ')'");
            ++i;
            return power(inner);
        }
        if (i < s.size() && (s[i] == 'x' || s[i] == 'h' || s[i] == 'e')) {
            ++i;
            if (i < s.size() && s[i] == '_') ++i;
            long long idx = number();
            return power(MultiPoly::var(f, static_cast<int>(idx)));
        }
        if (i < s.size() && s[i] == '#') {
            ++i;
            return power(MultiPoly::constant(f, f->element(static_cast<std::uint32_t>(number()))));
        }
        return power(MultiPoly::constant(f, f->from_int(number())));
    }
    MultiPoly power(MultiPoly base) {
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            long long e = number();
            MultiPoly r = MultiPoly::constant(f, f->one());
            for (long long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }
    MultiPoly term() {
        MultiPoly t = factor();
        for (;;) {
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                t = t * factor();
            } else if (i < s.size() && (s[i] == 'x' || s[i] == 'h' || s[i] == 'e' || s[i] == '(' || s[i] == '#')) {
                t = t * factor();  // juxtaposition, as in x1x5
            } else {
                return t;
            }
        }
    }
    MultiPoly expr() {
        skip();
        MultiPoly acc(f);
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        acc = neg ? -term() : term();
        for (;;) {
            skip();
            if (i >= s.size() || (s[i] != '+' && s[i] != '-')) return acc;
            neg = s[i++] == '-';
            MultiPoly t = term();
            acc = neg ? acc - t : acc + t;
        }
    }
};

} // namespace

MultiPoly MultiPoly::parse(FieldPtr f, std::string_view text) {
    Parser p{f, text};
    MultiPoly r = p.expr();
    if (!p.at_end()) throw std::invalid_argument("polynomial parse: trailing input in '" +
                                                 std::string(text) + "'");
    if (r.field_ == nullptr) r = MultiPoly(f);
    return r;
}

Label label_of(const MultiPoly& p) {
    if (p.is_zero()) return std::nullopt;
    if (p.is_constant()) return 0;
    const int k = p.top_var();
    int hits = 0;
    for (auto& [m, c] : p.terms()) {
        if (m.exponent(k) == 0) continue;
        ++hits;
        if (!(m == Monomial::var(k)))
            throw NotLabelForm("x" + std::to_string(k) + " appears nonlinearly or in a product in " +
                               p.to_string());
    }
    if (hits != 1) throw NotLabelForm("malformed top variable in " + p.to_string());
    return k;
}

} // namespace sfq
