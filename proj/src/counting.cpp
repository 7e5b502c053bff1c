#include "sfq/counting.hpp"

#include "sfq/number_theory.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace sfq {

BigInt ValueDistribution::total() const { return big_pow(field->q(), m); }

ExactProb ValueDistribution::prob(Element a) const { return {count(a), field->q(), m}; }

bool ValueDistribution::conserved() const {
    BigInt s = 0;
    for (auto& c : counts) s += c;
    return s == total();
}

bool ValueDistribution::operator==(const ValueDistribution& o) const {
    return m == o.m && counts == o.counts && field->q() == o.field->q();
}

namespace {

// Jacobi-Trudi entries as variable indices: -1 zero, 0 one, k for x_k.
struct Template {
    int n = 0;
    std::vector<int> idx;

    static Template of(const Partition& lambda, Basis basis) {
        const Partition shape = basis == Basis::H ? lambda : transpose(lambda);
        Template t;
        t.n = shape.length();
        t.idx.resize(static_cast<size_t>(t.n * t.n));
        for (int i = 0; i < t.n; ++i)
            for (int j = 0; j < t.n; ++j) {
                const int k = shape[i] - i + j;
                t.idx[static_cast<size_t>(i * t.n + j)] = k < 0 ? -1 : k;
            }
        return t;
    }

    // vals[0] must be 1; vals[k] is x_k
    void fill(std::uint32_t* out, const std::uint32_t* vals) const {
        for (size_t e = 0; e < idx.size(); ++e) out[e] = idx[e] < 0 ? 0 : vals[idx[e]];
    }

    std::uint32_t det(std::uint32_t* scratch, const std::uint32_t* vals, const Field& f) const {
        fill(scratch, vals);
        return det_in_place(scratch, n, f);
    }
};

void check_budget(std::uint64_t q, int m, double cost, const CountConfig& cfg) {
    if (cost > cfg.budget) {
        std::ostringstream os;
        os << "q^m = " << q << "^" << m << " needs " << cost
           << " determinant evaluations, over the budget of " << cfg.budget;
        throw BudgetExceeded(os.str());
    }
}

double dpow(double b, int e) {
    double r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

int thread_count(const CountConfig& cfg) {
    return cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
}

// Split F_q^vars into outer blocks of q^inner points; adequate granularity
// for dynamic scheduling without per-point overhead.
struct Split {
    int inner = 0;
    std::uint64_t outer_count = 1;
    std::uint64_t inner_count = 1;
    Split(std::uint32_t q, int vars) {
        inner = 0;
        inner_count = 1;
        while (inner < vars && inner_count < 2048) {
            inner_count *= q;
            ++inner;
        }
        outer_count = ipow(q, vars - inner);
    }
};

// Visit each point of F_q^vars as vals[1..vars], split across threads. body(vals, tally)
// runs once per point; tallies are summed after the loop.
template <class Body>
std::vector<std::uint64_t> sweep(std::uint32_t q, int vars, int tally_size, const CountConfig& cfg,
                                 Body body) {
    const Split sp(q, vars);
    const int threads = thread_count(cfg);
    std::vector<std::vector<std::uint64_t>> per(static_cast<size_t>(threads),
                                                 std::vector<std::uint64_t>(static_cast<size_t>(tally_size), 0));
#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint64_t>& tally = per[static_cast<size_t>(omp_get_thread_num())];
        Body local = body;  // per-thread scratch
        std::vector<std::uint32_t> vals(static_cast<size_t>(vars + 2), 0);
        vals[0] = 1;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t o = 0; o < static_cast<std::int64_t>(sp.outer_count); ++o) {
            // high digits from the outer index, low digits counted up from zero
            std::uint64_t rest = static_cast<std::uint64_t>(o);
            for (int v = sp.inner + 1; v <= vars; ++v) {
                vals[static_cast<size_t>(v)] = static_cast<std::uint32_t>(rest % q);
                rest /= q;
            }
            for (int v = 1; v <= sp.inner; ++v) vals[static_cast<size_t>(v)] = 0;
            for (std::uint64_t i = 0; i < sp.inner_count; ++i) {
                local(vals.data(), tally.data());
                for (int v = 1; v <= sp.inner; ++v) {
                    if (++vals[static_cast<size_t>(v)] < q) break;
                    vals[static_cast<size_t>(v)] = 0;
                }
            }
        }
    }
    std::vector<std::uint64_t> sum(static_cast<size_t>(tally_size), 0);
    for (auto& t : per)
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += t[i];
    return sum;
}

ValueDistribution make_dist(const Partition& lambda, FieldPtr f, Basis basis, int m) {
    ValueDistribution d;
    d.shape = lambda;
    d.basis = basis;
    d.field = std::move(f);
    d.m = m;
    d.counts.assign(d.field->q(), BigInt(0));
    return d;
}

} // namespace

ValueDistribution brute_force_distribution(const Partition& lambda, FieldPtr f, Basis basis,
                                           const CountConfig& cfg) {
    const int m = lambda.max_label();
    const std::uint32_t q = f->q();
    check_budget(q, m, dpow(q, m), cfg);
    ValueDistribution d = make_dist(lambda, f, basis, m);
    const Template t = Template::of(lambda, basis);
    std::vector<std::uint32_t> vals(static_cast<size_t>(m + 1), 0), scratch(t.idx.size());
    vals[0] = 1;
    std::vector<std::uint64_t> tally(q, 0);
    const std::uint64_t total = ipow(q, m);
    for (std::uint64_t point = 0; point < total; ++point) {
        ++tally[t.det(scratch.data(), vals.data(), *f)];
        for (int v = 1; v <= m; ++v) {
            if (++vals[static_cast<size_t>(v)] < q) break;
            vals[static_cast<size_t>(v)] = 0;
        }
    }
    for (std::uint32_t a = 0; a < q; ++a) d.counts[a] = tally[a];
    return d;
}

ValueDistribution fast_distribution(const Partition& lambda, FieldPtr f, Basis basis,
                                    const CountConfig& cfg) {
    const int m = lambda.max_label();
    if (m == 0) return brute_force_distribution(lambda, f, basis, cfg);
    const std::uint32_t q = f->q();
    check_budget(q, m, 2 * dpow(q, m - 1), cfg);
    ValueDistribution d = make_dist(lambda, f, basis, m);
    const Template t = Template::of(lambda, basis);
    const Field& field = *f;
    // tally[a] for fibers with vanishing cofactor, tally[q] for uniform fibers
    auto tally = sweep(q, m - 1, static_cast<int>(q) + 1, cfg,
                       [&, scratch = std::vector<std::uint32_t>()](std::uint32_t* vals,
                                                                  std::uint64_t* out) mutable {
                           scratch.resize(t.idx.size());
                           vals[m] = 0;
                           const std::uint32_t r = t.det(scratch.data(), vals, field);
                           vals[m] = 1;
                           const std::uint32_t s = t.det(scratch.data(), vals, field);
                           vals[m] = 0;
                           if (s != r)
                               ++out[q];
                           else
                               out[r] += q;
                       });
    for (std::uint32_t a = 0; a < q; ++a) d.counts[a] = BigInt(tally[a]) + tally[q];
    return d;
}

int joint_max_label(const JointCountSpec& spec) {
    int m = 0;
    for (auto& s : spec.shapes) m = std::max(m, s.max_label());
    return m;
}

ExactProb joint_distribution(const JointCountSpec& spec, FieldPtr f, const CountConfig& cfg) {
    if (spec.shapes.size() != spec.targets.size())
        throw std::invalid_argument("joint: shapes and targets differ in length");
    const int m = joint_max_label(spec);
    const std::uint32_t q = f->q();
    for (auto& t : spec.targets)
        if (t.rep >= q) throw std::invalid_argument("joint: target outside the field");
    check_budget(q, m, dpow(q, m) * std::max<size_t>(1, spec.shapes.size()), cfg);
    std::vector<Template> ts;
    size_t cells = 0;
    for (auto& s : spec.shapes) {
        ts.push_back(Template::of(s, spec.basis));
        cells = std::max(cells, ts.back().idx.size());
    }
    const Field& field = *f;
    auto tally = sweep(q, m, 1, cfg,
                       [&, scratch = std::vector<std::uint32_t>()](std::uint32_t* vals,
                                                                  std::uint64_t* out) mutable {
                           scratch.resize(cells);
                           for (size_t i = 0; i < ts.size(); ++i)
                               if (ts[i].det(scratch.data(), vals, field) != spec.targets[i].rep) return;
                           ++out[0];
                       });
    return {BigInt(tally[0]), q, m};
}

ConditionalResult conditional_prob(const JointCountSpec& spec, FieldPtr f, const CountConfig& cfg) {
    if (spec.shapes.size() != 2 || spec.targets.size() != 2)
        throw std::invalid_argument("conditional: exactly two shapes are needed");
    ConditionalResult r;
    r.joint = joint_distribution(spec, f, cfg);
    // the conditioning event counted in the same sample space
    JointCountSpec cond{{spec.shapes[1]}, {spec.targets[1]}, spec.basis};
    const int m = joint_max_label(spec);
    ExactProb own = joint_distribution(cond, f, cfg);
    r.marginal = {own.count * big_pow(f->q(), m - own.m), f->q(), m};
    if (r.marginal.count == 0) throw std::domain_error("conditional: conditioning event is empty");
    r.conditional = make_rational(r.joint.count, r.marginal.count);
    return r;
}

} // namespace sfq
