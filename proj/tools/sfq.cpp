#include "sfq/harness.hpp"
#include "sfq/reduction.hpp"
#include "sfq/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <sstream>

using namespace sfq;
using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
    return out;
}

std::vector<std::uint64_t> parse_qs(const std::string& s) {
    std::vector<std::uint64_t> qs;
    for (auto& t : split(s, ',')) {
        size_t used = 0;
        const unsigned long long q = std::stoull(t, &used);
        if (used != t.size()) throw std::invalid_argument("bad q '" + t + "'");
        make_field(static_cast<std::uint32_t>(q));
        qs.push_back(q);
    }
    if (qs.empty()) throw std::invalid_argument("empty q list");
    return qs;
}

std::vector<Basis> parse_bases(const std::string& s) {
    std::vector<Basis> out;
    for (auto& t : split(s, ',')) out.push_back(parse_basis(t));
    return out;
}

Partition parse_shape(const std::string& s) {
    Partition p = Partition::parse(s);
    if (p.empty()) throw std::invalid_argument("empty shape");
    return p;
}

std::string text_prob(const ValueDistribution& d) {
    const ExactProb p = d.prob_zero();
    std::ostringstream os;
    os << "shape " << d.shape.to_string() << "  q " << d.field->q() << "  basis "
       << to_string(d.basis) << "  m " << d.m << "\n"
       << "count(0) " << to_string(p.count) << " / " << p.total_string() << " = "
       << p.value_string() << "\n";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singularity counts of Schur polynomials over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();

    int workers = 0;
    double budget = 1e9;
    std::string format = "json";
    bool timing = false;
    app.add_option("--workers", workers, "OpenMP threads (0: default)");
    app.add_option("--budget", budget, "determinant evaluations allowed per count");
    app.add_option("--format", format, "report format: json or csv");
    app.add_flag("--timing", timing, "record wall-clock milliseconds per record");

    std::string shape, shapes, targets, qstr = "2", basis = "h", family = "squares", which = "upper-bound";
    int max_label = 6, limit = 3, c = 0, max_subset = 3;
    bool as_json = false, trace = false;

    auto* prob = app.add_subcommand("prob", "P(s_shape -> 0) by exhaustive count");
    prob->add_option("--shape", shape)->required();
    prob->add_option("--q", qstr)->required();
    prob->add_option("--basis", basis);
    prob->add_flag("--json", as_json);

    auto* dist = app.add_subcommand("dist", "full value distribution");
    dist->add_option("--shape", shape)->required();
    dist->add_option("--q", qstr)->required();
    dist->add_option("--basis", basis);

    auto* joint = app.add_subcommand("joint", "joint count for several shapes and targets");
    joint->add_option("--shapes", shapes)->required();
    joint->add_option("--targets", targets);
    joint->add_option("--q", qstr)->required();
    joint->add_option("--basis", basis);

    std::string reduce_q = "101";
    auto* reduce = app.add_subcommand("reduce", "Jacobi-Trudi matrix and its pivot reduction");
    reduce->add_option("--shape", shape)->required();
    reduce->add_option("--q", reduce_q);
    reduce->add_option("--basis", basis);
    reduce->add_flag("--trace", trace);

    auto* verify = app.add_subcommand("verify", "measured P(0) against the closed forms");
    verify->add_option("--max-label", max_label);
    verify->add_option("--shape", shape, "verify a single shape instead of a sweep");
    verify->add_option("--q", qstr);
    verify->add_option("--basis", basis, "comma list of h,e");

    auto* cls = app.add_subcommand("classify", "1/q exactly iff hook, rectangle or staircase");
    cls->add_option("--max-label", max_label);
    cls->add_option("--q", qstr);

    auto* indep = app.add_subcommand("independence", "joint counts against products of marginals");
    indep->add_option("--family", family);
    indep->add_option("--limit", limit);
    indep->add_option("--c", c);
    indep->add_option("--max-subset", max_subset);
    indep->add_option("--q", qstr);

    auto* conj = app.add_subcommand("conjecture", "scan an open conjecture");
    conj->add_option("--which", which);
    conj->add_option("--max-label", max_label);
    conj->add_option("--q", qstr);
    conj->add_option("--limit", limit);

    auto* predict = app.add_subcommand("predict", "closed-form P(0), if a rule covers the shape");
    predict->add_option("--shape", shape)->required();
    predict->add_option("--q", qstr)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const Format fmt = parse_format(format);
        HarnessConfig cfg;
        cfg.count.workers = workers;
        cfg.count.budget = budget;
        cfg.timing = timing;

        if (*prob || *dist) {
            const Partition l = parse_shape(shape);
            const auto qs = parse_qs(qstr);
            const FieldPtr f = make_field(static_cast<std::uint32_t>(qs.front()));
            const auto d = fast_distribution(l, f, parse_basis(basis), cfg.count);
            if (*dist)
                std::cout << distribution_json(d, true);
            else
                std::cout << (as_json ? distribution_json(d, false) : text_prob(d));
            return 0;
        }
        if (*joint) {
            JointCountSpec spec;
            spec.basis = parse_basis(basis);
            for (auto& s : split(shapes, ';')) spec.shapes.push_back(parse_shape(s));
            const auto qs = parse_qs(qstr);
            const FieldPtr f = make_field(static_cast<std::uint32_t>(qs.front()));
            if (targets.empty()) {
                spec.targets.assign(spec.shapes.size(), f->zero());
            } else {
                for (auto& t : split(targets, ';')) spec.targets.push_back(f->element(
                    static_cast<std::uint32_t>(std::stoul(t))));
            }
            if (spec.targets.size() != spec.shapes.size())
                throw std::invalid_argument("need one target per shape");
            const ExactProb p = joint_distribution(spec, f, cfg.count);
            ordered_json j;
            j["shapes"] = ordered_json::array();
            for (auto& s : spec.shapes) j["shapes"].push_back(s.vec());
            j["targets"] = ordered_json::array();
            for (auto& t : spec.targets) j["targets"].push_back(t.rep);
            j["q"] = f->q();
            j["m"] = p.m;
            j["count"] = to_string(p.count);
            j["total"] = p.total_string();
            j["prob"] = p.value_string();
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (*reduce) {
            const Partition l = parse_shape(shape);
            const FieldPtr f = make_field(static_cast<std::uint32_t>(parse_qs(reduce_q).front()));
            const SchurMatrix m = jt_matrix(l, parse_basis(basis), f);
            std::vector<std::string> log;
            const PsiResult r = psi(m, PivotOrder::TopDown, trace ? &log : nullptr);
            std::cout << "M (" << m.size() << "x" << m.size() << ")\n" << m.to_string() << "\n";
            std::cout << "psi(M) (" << r.matrix.size() << "x" << r.matrix.size() << ")\n"
                      << r.matrix.to_string() << "\n";
            std::cout << "alpha " << r.alpha.rep << "\n";
            std::cout << "M: " << classify_matrix(m).to_string() << "\n";
            std::cout << "psi(M): " << classify_matrix(r.matrix).to_string() << "\n";
            if (trace) {
                std::cout << "trace\n";
                for (auto& line : log) std::cout << "  " << line << "\n";
            }
            return 0;
        }
        if (*predict) {
            const Partition l = parse_shape(shape);
            const auto q = parse_qs(qstr).front();
            ordered_json j;
            if (auto p = predicted_prob_zero(l, q)) {
                j["rule"] = p->rule;
                j["value"] = to_string(p->value);
            } else {
                j["rule"] = nullptr;
                j["value"] = nullptr;
            }
            std::cout << j.dump() << "\n";
            return 0;
        }

        ScanReport rep;
        if (*verify) {
            const auto qs = parse_qs(qstr);
            const auto bases = parse_bases(basis);
            if (!shape.empty()) {
                rep.command = "verify";
                rep.config = {{"shape", parse_shape(shape).to_string()}, {"q", qstr}, {"basis", basis}};
                for (auto q : qs)
                    for (auto b : bases) rep.records.push_back(verify_shape(parse_shape(shape), q, b, cfg));
                rep.sort();
            } else {
                rep = scan_verify(max_label, qs, bases, cfg);
            }
        } else if (*cls) {
            rep = scan_classification(max_label, parse_qs(qstr), cfg);
        } else if (*indep) {
            IndependenceOptions opt{family, limit, c, max_subset};
            const auto qs = parse_qs(qstr);
            for (size_t i = 0; i < qs.size(); ++i) {
                ScanReport part = independence_suite(opt, qs[i], cfg);
                if (i == 0) {
                    rep.command = part.command;
                    rep.config = part.config;
                    for (auto& [k, v] : rep.config)
                        if (k == "q") v = qstr;
                }
                rep.append(part);
            }
            rep.sort();
        } else if (*conj) {
            ConjectureOptions opt{which, max_label, parse_qs(qstr), limit};
            rep = conjecture_scan(opt, cfg);
        }
        std::cout << report_emit(rep, fmt);
        const ScanSummary s = rep.summary();
        if (s.conjecture_violations > 0)
            std::cerr << "conjecture violations: " << s.conjecture_violations << "\n";
        if (s.asserted_mismatch > 0) std::cerr << "mismatches: " << s.asserted_mismatch << "\n";
        return rep.exit_code();
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
