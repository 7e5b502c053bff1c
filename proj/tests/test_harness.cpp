#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sfq/harness.hpp"
#include "sfq/report.hpp"

using namespace sfq;

namespace {

HarnessConfig with_workers(int w) {
    HarnessConfig c;
    c.count.workers = w;
    return c;
}

} // namespace

TEST_CASE("verify_shape examples") {
    const auto cfg = with_workers(0);
    auto r = verify_shape(Partition({2, 1}), 2, Basis::H, cfg);
    CHECK(r.verdict == Verdict::Match);
    CHECK(r.value == Rational(1) / 2);
    r = verify_shape(Partition({4, 4, 2, 2}), 2, Basis::H, cfg);
    CHECK(r.verdict == Verdict::Match);
    CHECK(r.count == 72);
    CHECK(r.total == "2^7");
    CHECK(r.rule == "prop-quasi-4422");
    r = verify_shape(Partition({2, 2, 1}), 2, Basis::H, cfg);
    CHECK(r.verdict == Verdict::Match);
    CHECK(r.value == Rational(5) / 8);
    r = verify_shape(Partition({3, 2, 2}), 2, Basis::H, cfg);
    CHECK(r.verdict == Verdict::NoPrediction);
    CHECK_FALSE(r.ms.has_value());
}

TEST_CASE("over budget is skipped with a reason") {
    HarnessConfig cfg;
    cfg.count.budget = 10;
    const auto r = verify_shape(Partition({4, 4, 2, 2}), 3, Basis::H, cfg);
    CHECK(r.verdict == Verdict::Skipped);
    CHECK(r.reason.find("3^7") != std::string::npos);
    CHECK_THROWS_AS(verify_shape(Partition({1}), 6, Basis::H, cfg), std::invalid_argument);
}

TEST_CASE("classification scan") {
    const auto rep = scan_classification(5, {2, 3}, with_workers(0));
    CHECK(rep.records.size() == 2 * partitions_up_to_max_label(5).size());
    const auto s = rep.summary();
    CHECK(s.match == s.total);
    CHECK(rep.exit_code() == 0);
    for (auto& r : rep.records) {
        if (r.shapes[0] == Partition({2, 2}) && r.q == 2) {
            CHECK(r.count == 4);
            CHECK(r.relation == Relation::Equal);
        }
        if (r.shapes[0] == Partition({3, 2}) && r.q == 2) {
            CHECK(r.value == Rational(5) / 8);
            CHECK(r.relation == Relation::Greater);
        }
    }
}

TEST_CASE("reports do not depend on the worker count") {
    const auto a = report_emit(scan_verify(5, {2, 3}, {Basis::H, Basis::E}, with_workers(1)), Format::Json);
    for (int w : {4, 16}) {
        CHECK(report_emit(scan_verify(5, {2, 3}, {Basis::H, Basis::E}, with_workers(w)), Format::Json) == a);
        IndependenceOptions opt{"squares", 3, 0, 3};
        CHECK(report_emit(independence_suite(opt, 2, with_workers(w)), Format::Csv) ==
              report_emit(independence_suite(opt, 2, with_workers(1)), Format::Csv));
    }
}

TEST_CASE("records sort by shape, q, basis and kind") {
    auto rep = scan_verify(3, {3, 2}, {Basis::E, Basis::H}, with_workers(0));
    for (size_t i = 1; i < rep.records.size(); ++i) {
        auto& a = rep.records[i - 1];
        auto& b = rep.records[i];
        CHECK(std::tie(a.shapes, a.q, a.basis) <= std::tie(b.shapes, b.q, b.basis));
    }
}

TEST_CASE("report serialization") {
    ScanReport empty;
    empty.command = "verify";
    const std::string e = report_emit(empty, Format::Json);
    CHECK(e.find("\"records\": []") != std::string::npos);
    CHECK(e.find("\"summary\"") != std::string::npos);
    CHECK(report_emit(empty, Format::Csv) == "shape,q,basis,count0,total,prob,predicted,rule,verdict,ms\n");

    ScanReport one;
    one.command = "verify";
    one.config = {{"q", "3"}};
    one.records.push_back(verify_shape(Partition({4, 4, 2, 2}), 3, Basis::H, with_workers(0)));
    const std::string text = report_emit(one, Format::Json);
    CHECK(text.find("\"count0\": \"855\"") != std::string::npos);
    CHECK(text.find("\"prob\": \"95/243\"") != std::string::npos);
    CHECK(report_emit(report_parse(text), Format::Json) == text);

    const std::string csv = report_emit(one, Format::Csv);
    CHECK(csv.find("\"4,4,2,2\",3,h,855,3^7,95/243,95/243,prop-quasi-4422,match,\n") != std::string::npos);

    auto conj = conjecture_scan({"quasi-poly", 7, {2, 3, 4, 5}, 3}, with_workers(0));
    const std::string ct = report_emit(conj, Format::Json);
    CHECK(report_emit(report_parse(ct), Format::Json) == ct);
    CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("independence families") {
    const auto cfg = with_workers(0);
    for (std::uint64_t q : {2, 3}) {
        auto sq = independence_suite({"squares", 3, 0, 3}, q, cfg);
        CHECK(sq.records.size() == 4);  // three pairs and the triple
        CHECK(sq.summary().match == 4);

        auto st = independence_suite({"staircase-step2", 4, 0, 3}, q, cfg);
        CHECK(st.exit_code() == 0);
        bool saw_conditional = false;
        for (auto& r : st.records)
            if (r.kind == "conditional" && r.shapes[0] == staircase(4)) {
                saw_conditional = true;
                CHECK(r.value == Rational(1) / Rational(BigInt(q)));
            }
        CHECK(saw_conditional);

        auto neg = independence_suite({"negative-control", 0, 0, 3}, q, cfg);
        REQUIRE(neg.records.size() == 1);
        CHECK(neg.records[0].relation == Relation::NotEqual);
        CHECK(neg.records[0].verdict == Verdict::Match);

        auto diff = independence_suite({"rect-diff-c", 3, 1, 3}, q, cfg);
        CHECK(diff.exit_code() == 0);
        auto hooks = independence_suite({"hooks-by-size", 4, 0, 3}, q, cfg);
        CHECK(hooks.exit_code() == 0);
    }
    CHECK_THROWS_AS(independence_suite({"nope", 3, 0, 3}, 2, cfg), std::invalid_argument);
    CHECK_THROWS_AS(independence_suite({"rect-sum-c", 3, 0, 3}, 2, cfg), std::invalid_argument);
}

TEST_CASE("the same-sum rectangle family is not independent") {
    // h_4 and e_4 over F_2 vanish together 2 times in 16, not 4
    const auto rep = independence_suite({"rect-sum-c", 0, 5, 3}, 2, with_workers(0));
    bool seen = false;
    for (auto& r : rep.records)
        if (r.shapes == std::vector<Partition>{Partition({4}), Partition({1, 1, 1, 1})}) {
            seen = true;
            CHECK(r.value == Rational(1) / 8);
            CHECK(r.verdict == Verdict::Mismatch);
        }
    CHECK(seen);
    CHECK(rep.exit_code() == 1);
}

TEST_CASE("conjecture scans are reported, not asserted") {
    const auto cfg = with_workers(0);
    auto ub = conjecture_scan({"upper-bound", 5, {2, 3}, 3}, cfg);
    CHECK(ub.summary().conjecture_violations == 0);
    for (auto& r : ub.records) CHECK_FALSE(r.asserted);

    auto ts = conjecture_scan({"two-staircase", 6, {2}, 3}, cfg);
    REQUIRE(ts.records.size() == 2);
    CHECK(ts.records[0].shapes[0] == Partition({4, 2}));
    CHECK(ts.records[0].verdict == Verdict::Match);
    CHECK(ts.exit_code() == 0);

    // a failing unasserted record counts as a violation but leaves the exit code alone
    ScanReport r;
    VerificationRecord v;
    v.asserted = false;
    v.verdict = Verdict::Mismatch;
    r.records.push_back(v);
    CHECK(r.summary().conjecture_violations == 1);
    CHECK(r.exit_code() == 0);
    v.asserted = true;
    r.records.push_back(v);
    CHECK(r.exit_code() == 1);
    CHECK_THROWS_AS(conjecture_scan({"nope", 5, {2}, 3}, cfg), std::invalid_argument);
}

TEST_CASE("quasi-polynomial excess") {
    // (4,4,2,2) at q = 3: 95/243 = (81 + 2 * 7) / 243
    CHECK(quasi_excess(Rational(95) / 243, 3, 5) == 7);
    CHECK(quasi_shapes().size() == 3);
}
