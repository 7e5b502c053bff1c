#include "sfq/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sfq {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::NoPrediction: return "no-prediction";
    case Verdict::Skipped: return "skipped";
    }
    return "?";
}

std::string to_string(Relation r) {
    switch (r) {
    case Relation::Equal: return "equal";
    case Relation::Greater: return "greater";
    case Relation::LessEqual: return "less-equal";
    case Relation::NotEqual: return "not-equal";
    }
    return "?";
}

Verdict parse_verdict(const std::string& s) {
    for (auto v : {Verdict::Match, Verdict::Mismatch, Verdict::NoPrediction, Verdict::Skipped})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown verdict " + s);
}

Relation parse_relation(const std::string& s) {
    for (auto r : {Relation::Equal, Relation::Greater, Relation::LessEqual, Relation::NotEqual})
        if (to_string(r) == s) return r;
    throw std::invalid_argument("unknown relation " + s);
}

bool holds(Relation r, const Rational& m, const Rational& p) {
    switch (r) {
    case Relation::Equal: return m == p;
    case Relation::Greater: return m > p;
    case Relation::LessEqual: return m <= p;
    case Relation::NotEqual: return m != p;
    }
    return false;
}

ScanSummary ScanReport::summary() const {
    ScanSummary s;
    for (auto& r : records) {
        ++s.total;
        switch (r.verdict) {
        case Verdict::Match: ++s.match; break;
        case Verdict::Mismatch:
            ++s.mismatch;
            if (r.asserted)
                ++s.asserted_mismatch;
            else
                ++s.conjecture_violations;
            break;
        case Verdict::NoPrediction: ++s.no_prediction; break;
        case Verdict::Skipped: ++s.skipped; break;
        }
    }
    for (auto& f : fits)
        if (!f.agrees) ++s.conjecture_violations;
    return s;
}

void ScanReport::sort() {
    std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        if (a.shapes != b.shapes) return a.shapes < b.shapes;
        if (a.q != b.q) return a.q < b.q;
        if (a.basis != b.basis) return a.basis < b.basis;
        return a.kind < b.kind;
    });
}

void ScanReport::append(const ScanReport& o) {
    records.insert(records.end(), o.records.begin(), o.records.end());
    fits.insert(fits.end(), o.fits.begin(), o.fits.end());
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    bool on;
    Clock::time_point t0 = Clock::now();
    std::optional<double> ms() const {
        if (!on) return std::nullopt;
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    }
};

void measure(VerificationRecord& r, const ExactProb& p) {
    r.measured = true;
    r.count = p.count;
    r.total = p.total_string();
    r.value = p.value();
}

// Lower bound 1/q and the reduced-size upper bound; returns an explanation when violated.
std::string bound_violation(const Partition& l, std::uint64_t q, const Rational& p) {
    const Rational lo = Rational(1) / Rational(BigInt(q));
    const Rational hi = asymptotic_bound(l, q);
    if (p < lo) return "below 1/q";
    if (p > hi) return "above 1/q + n(n-1)/q^2 = " + to_string(hi);
    return {};
}

void judge(VerificationRecord& r) {
    if (!r.predicted) {
        r.verdict = Verdict::NoPrediction;
        return;
    }
    r.verdict = holds(r.relation, r.value, *r.predicted) ? Verdict::Match : Verdict::Mismatch;
}

std::string join_shapes(const std::vector<Partition>& v) {
    std::string s;
    for (auto& p : v) s += (s.empty() ? "" : ";") + p.to_string();
    return s;
}

std::string join_qs(const std::vector<std::uint64_t>& qs) {
    std::string s;
    for (auto q : qs) s += (s.empty() ? "" : ",") + std::to_string(q);
    return s;
}

std::string budget_string(double b) {
    std::ostringstream os;
    os.precision(17);
    os << b;
    return os.str();
}

} // namespace

VerificationRecord verify_shape(const Partition& lambda, std::uint64_t q, Basis basis,
                                const HarnessConfig& cfg) {
    const FieldPtr f = make_field(static_cast<std::uint32_t>(q));
    VerificationRecord r;
    r.kind = "shape";
    r.shapes = {lambda};
    r.q = q;
    r.basis = basis;
    Timer t{cfg.timing};
    ValueDistribution d;
    try {
        d = fast_distribution(lambda, f, basis, cfg.count);
    } catch (const BudgetExceeded& ex) {
        r.verdict = Verdict::Skipped;
        r.reason = ex.what();
        return r;
    }
    measure(r, d.prob_zero());
    const auto preds = all_matching_predictions(lambda, q);
    if (!preds.empty()) {
        r.predicted = preds.front().value;
        r.rule = preds.front().rule;
    }
    judge(r);
    for (size_t i = 1; i < preds.size(); ++i)
        if (preds[i].value != preds.front().value) {
            r.verdict = Verdict::Mismatch;
            r.reason = "rules disagree: " + preds[i].rule + " gives " + to_string(preds[i].value);
        }
    if (auto why = bound_violation(lambda, q, r.value); !why.empty()) {
        r.verdict = Verdict::Mismatch;
        r.reason = why;
    }
    r.ms = t.ms();
    return r;
}

ScanReport scan_verify(int max_label, const std::vector<std::uint64_t>& qs,
                       const std::vector<Basis>& bases, const HarnessConfig& cfg) {
    ScanReport rep;
    rep.command = "verify";
    std::string bs;
    for (auto b : bases) bs += (bs.empty() ? "" : ",") + to_string(b);
    rep.config = {{"max_label", std::to_string(max_label)}, {"q", join_qs(qs)}, {"basis", bs},
                  {"budget", budget_string(cfg.count.budget)}};
    for (auto& l : partitions_up_to_max_label(max_label))
        for (auto q : qs)
            for (auto b : bases) rep.records.push_back(verify_shape(l, q, b, cfg));
    rep.sort();
    return rep;
}

ScanReport scan_classification(int max_label, const std::vector<std::uint64_t>& qs,
                               const HarnessConfig& cfg) {
    ScanReport rep;
    rep.command = "classify";
    rep.config = {{"max_label", std::to_string(max_label)}, {"q", join_qs(qs)},
                  {"budget", budget_string(cfg.count.budget)}};
    for (auto& l : partitions_up_to_max_label(max_label))
        for (auto q : qs) {
            const FieldPtr f = make_field(static_cast<std::uint32_t>(q));
            VerificationRecord r;
            r.kind = "classify";
            r.shapes = {l};
            r.q = q;
            Timer t{cfg.timing};
            const ShapeClass sc = classify(l);
            r.rule = sc.uniform_family() ? sc.to_string() : "other";
            r.relation = sc.uniform_family() ? Relation::Equal : Relation::Greater;
            r.predicted = Rational(1) / Rational(BigInt(q));
            try {
                measure(r, fast_distribution(l, f, Basis::H, cfg.count).prob_zero());
            } catch (const BudgetExceeded& ex) {
                r.verdict = Verdict::Skipped;
                r.reason = ex.what();
                rep.records.push_back(r);
                continue;
            }
            judge(r);
            if (auto why = bound_violation(l, q, r.value); !why.empty()) {
                r.verdict = Verdict::Mismatch;
                r.reason = why;
            }
            r.ms = t.ms();
            rep.records.push_back(r);
        }
    rep.sort();
    return rep;
}

namespace {

struct IndependenceCase {
    std::vector<Partition> shapes;
    bool conditional = false;  // P(shapes[0] | shapes[1]) = 1/q
    Relation relation = Relation::Equal;
};

std::vector<IndependenceCase> independence_cases(const IndependenceOptions& opt) {
    std::vector<IndependenceCase> out;
    auto pairs = [&](const std::vector<Partition>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j) out.push_back({{v[i], v[j]}});
    };
    const std::string& fam = opt.family;
    if (fam == "hooks-by-size") {
        std::vector<Partition> hooks;
        for (int s = 1; s <= opt.limit; ++s)
            for (int a = s; a >= 1; --a) {
                std::vector<int> parts{a};
                parts.insert(parts.end(), static_cast<size_t>(s - a), 1);
                hooks.emplace_back(parts);
            }
        for (size_t i = 0; i < hooks.size(); ++i)
            for (size_t j = i + 1; j < hooks.size(); ++j)
                if (hooks[i].size() != hooks[j].size()) out.push_back({{hooks[i], hooks[j]}});
    } else if (fam == "squares") {
        std::vector<Partition> sq;
        for (int k = 1; k <= opt.limit; ++k) sq.push_back(rectangle(k, k));
        const int n = static_cast<int>(sq.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            const int bits = __builtin_popcount(mask);
            if (bits < 2 || bits > opt.max_subset) continue;
            IndependenceCase c;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) c.shapes.push_back(sq[static_cast<size_t>(i)]);
            out.push_back(c);
        }
    } else if (fam == "rect-diff-c") {
        std::vector<Partition> v;
        for (int l = 1; l <= opt.limit; ++l)
            if (l + opt.c >= 1) v.push_back(rectangle(l + opt.c, l));
        pairs(v);
    } else if (fam == "rect-sum-c") {
        if (opt.c < 2) throw std::invalid_argument("rect-sum-c needs --c >= 2");
        std::vector<Partition> v;
        for (int l = 1; l < opt.c; ++l) v.push_back(rectangle(opt.c - l, l));
        pairs(v);
    } else if (fam == "staircase-step2") {
        std::set<std::vector<Partition>> seen;
        auto add = [&](Partition a, Partition b) {
            if (seen.insert({a, b}).second) out.push_back({{a, b}});
        };
        for (int k = 1; k + 2 <= opt.limit; ++k) add(staircase(k), staircase(k + 2));
        for (int k = 2; k <= opt.limit; ++k) add(staircase(1), staircase(k));
        for (int k = 3; k <= opt.limit; ++k) out.push_back({{staircase(k), staircase(k - 2)}, true});
    } else if (fam == "negative-control") {
        out.push_back({{rectangle(2, 2), rectangle(3, 2)}, false, Relation::NotEqual});
    } else {
        throw std::invalid_argument("unknown independence family '" + fam + "'");
    }
    return out;
}

} // namespace

ScanReport independence_suite(const IndependenceOptions& opt, std::uint64_t q, const HarnessConfig& cfg) {
    ScanReport rep;
    rep.command = "independence";
    rep.config = {{"family", opt.family}, {"limit", std::to_string(opt.limit)},
                  {"c", std::to_string(opt.c)}, {"max_subset", std::to_string(opt.max_subset)},
                  {"q", std::to_string(q)}, {"budget", budget_string(cfg.count.budget)}};
    const FieldPtr f = make_field(static_cast<std::uint32_t>(q));
    std::map<Partition, Rational> marginal;
    auto marg = [&](const Partition& p) -> Rational {
        auto it = marginal.find(p);
        if (it != marginal.end()) return it->second;
        return marginal[p] = fast_distribution(p, f, Basis::H, cfg.count).prob_zero().value();
    };
    for (auto& c : independence_cases(opt)) {
        VerificationRecord r;
        r.shapes = c.shapes;
        r.q = q;
        r.relation = c.relation;
        Timer t{cfg.timing};
        JointCountSpec spec;
        spec.shapes = c.shapes;
        spec.targets.assign(c.shapes.size(), f->zero());
        try {
            if (c.conditional) {
                r.kind = "conditional";
                r.rule = "conditional = 1/q";
                const ConditionalResult cr = conditional_prob(spec, f, cfg.count);
                r.measured = true;
                r.count = cr.joint.count;
                r.total = to_string(cr.marginal.count);
                r.value = cr.conditional;
                r.predicted = Rational(1) / Rational(BigInt(q));
            } else {
                r.kind = "joint";
                r.rule = c.relation == Relation::NotEqual ? "dependent" : "product of marginals";
                measure(r, joint_distribution(spec, f, cfg.count));
                Rational prod = 1;
                for (auto& s : c.shapes) prod *= marg(s);
                r.predicted = prod;
            }
        } catch (const BudgetExceeded& ex) {
            r.kind = c.conditional ? "conditional" : "joint";
            r.verdict = Verdict::Skipped;
            r.reason = ex.what();
            rep.records.push_back(r);
            continue;
        }
        judge(r);
        r.ms = t.ms();
        rep.records.push_back(r);
    }
    rep.sort();
    return rep;
}

std::vector<QuasiShape> quasi_shapes() {
    return {
        {Partition({4, 4, 2, 2}), 5, 2, 2, 2, {{0, -1, 1}, {1, -1, 1}}},
        {Partition({4, 4, 3, 3}), 6, 3, 3, 0, {{0, 0, 0, 1}, {-1, 0, 0, 1}, {1, 0, 0, 1}}},
        {Partition({4, 4, 3, 2}), 5, 2, 2, 2, {{-1, 1, 1}, {-2, 1, 1}}},
    };
}

Rational quasi_excess(const Rational& p, std::uint64_t q, int k) {
    const Rational Q{BigInt(q)};
    const Rational qk{big_pow(q, k)}, qk1{big_pow(q, k - 1)};
    return (qk * p - qk1) / (Q - 1);
}

ScanReport conjecture_scan(const ConjectureOptions& opt, const HarnessConfig& cfg) {
    ScanReport rep;
    rep.command = "conjecture";
    rep.config = {{"which", opt.which}, {"max_label", std::to_string(opt.max_label)},
                  {"q", join_qs(opt.qs)}, {"limit", std::to_string(opt.limit)},
                  {"budget", budget_string(cfg.count.budget)}};
    auto run = [&](const Partition& l, std::uint64_t q, const std::string& kind,
                   std::optional<Rational> predicted, const std::string& rule, Relation rel) {
        VerificationRecord r;
        r.kind = kind;
        r.shapes = {l};
        r.q = q;
        r.asserted = false;
        r.relation = rel;
        r.rule = rule;
        r.predicted = std::move(predicted);
        Timer t{cfg.timing};
        try {
            measure(r, fast_distribution(l, make_field(static_cast<std::uint32_t>(q)), Basis::H,
                                         cfg.count)
                           .prob_zero());
        } catch (const BudgetExceeded& ex) {
            r.verdict = Verdict::Skipped;
            r.reason = ex.what();
            return r;
        }
        judge(r);
        r.ms = t.ms();
        return r;
    };

    if (opt.which == "upper-bound") {
        for (auto& l : partitions_up_to_max_label(opt.max_label))
            for (auto q : opt.qs)
                rep.records.push_back(run(l, q, "upper-bound", upper_bound_conjecture(l, q),
                                          "1 - |GL_k|/q^(k^2)", Relation::LessEqual));
    } else if (opt.which == "two-staircase") {
        for (int n = 2; n <= opt.limit; ++n) {
            std::vector<int> parts;
            for (int i = n; i >= 1; --i) parts.push_back(2 * i);
            const Partition l(parts);
            for (auto q : opt.qs) {
                auto pred = two_staircase_conjecture(l, q);
                rep.records.push_back(run(l, q, "two-staircase", pred->value, pred->rule, Relation::Equal));
            }
        }
    } else if (opt.which == "quasi-poly") {
        for (auto& qs : quasi_shapes()) {
            std::vector<FitPoint> pts;
            for (auto q : opt.qs) {
                auto pred = predicted_prob_zero(qs.shape, q);
                VerificationRecord r = run(qs.shape, q, "quasi-poly",
                                           pred ? std::optional<Rational>(pred->value) : std::nullopt,
                                           pred ? pred->rule : "", Relation::Equal);
                if (r.measured) pts.push_back({q, quasi_excess(r.value, q, qs.k)});
                rep.records.push_back(r);
            }
            FitSummary fs;
            fs.shape = qs.shape;
            fs.modulus = qs.modulus;
            fs.degree = qs.degree;
            QuasiPolynomial want;
            want.modulus = qs.modulus;
            want.degree = qs.degree;
            for (auto& e : qs.expected) {
                std::vector<Rational> c;
                for (int v : e) c.emplace_back(v);
                want.classes.push_back(c);
            }
            fs.expected = want.to_string();
            try {
                auto fit = quasipoly_fit(pts, qs.modulus, qs.degree, qs.shared_above);
                if (!fit) {
                    fs.fitted = "no fit";
                } else {
                    fs.fitted = fit->to_string();
                    fs.agrees = true;
                    for (int r = 0; r < qs.modulus; ++r) {
                        const auto& got = fit->classes[static_cast<size_t>(r)];
                        if (!got || *got != *want.classes[static_cast<size_t>(r)]) fs.agrees = false;
                    }
                }
            } catch (const std::invalid_argument& ex) {
                fs.fitted = ex.what();
            }
            rep.fits.push_back(fs);
        }
    } else {
        throw std::invalid_argument("unknown conjecture '" + opt.which + "'");
    }
    rep.sort();
    return rep;
}

} // namespace sfq
