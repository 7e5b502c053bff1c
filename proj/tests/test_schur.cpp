#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "sfq/reduction.hpp"
#include "sfq/formulas.hpp"
#include "sfq/schur_matrix.hpp"

#include <random>

using namespace sfq;

namespace {

FieldPtr F101 = Field::make(101);

SchurMatrix M(const std::vector<std::vector<std::string>>& rows, FieldPtr f = F101) {
    return SchurMatrix::parse(f, rows);
}

std::vector<Element> elems(const FieldPtr& f, std::initializer_list<int> v) {
    std::vector<Element> out;
    for (int x : v) out.push_back(f->from_int(x));
    return out;
}

std::vector<Element> random_point(std::mt19937& rng, const FieldPtr& f, int m) {
    std::uniform_int_distribution<std::uint32_t> d(0, f->q() - 1);
    std::vector<Element> v(static_cast<size_t>(m));
    for (auto& e : v) e = Element{d(rng)};
    return v;
}

const SchurMatrix general_6x6 = M({
    {"x4", "x5", "x6-x1x3", "x8-x5^2", "x10", "x13+4"},
    {"x2", "x3", "x5-x3", "x7-x5^2", "x9", "x12-x11+3"},
    {"0", "x2-x1", "x4", "x5", "x8-x1-x2", "x11"},
    {"0", "3", "x3-3x1x2", "x4", "x7", "x10-x7x9"},
    {"0", "0", "x2-x1", "x3-x2", "x6-4x2+4", "2x9"},
    {"0", "0", "0", "x1", "x2-2", "x8"},
});

const SchurMatrix special_4x4 = M({
    {"x5", "x6", "x8-x5^2", "x9-x3x6"},
    {"x4", "x5-x2", "x7", "x8"},
    {"x2", "x3", "x4", "x5"},
    {"x1", "x2", "x3", "x4"},
});

const SchurMatrix M1 = M({
    {"0", "2x2", "x4", "x5"},
    {"0", "1", "4x3", "x4"},
    {"0", "0", "x1", "x3-x2"},
    {"0", "0", "0", "x2"},
});

} // namespace

TEST_CASE("Jacobi-Trudi matrices") {
    const SchurMatrix m2 = jt_matrix(Partition({4, 4, 2, 2}), Basis::H, F101);
    CHECK(m2 == M({{"h4", "h5", "h6", "h7"}, {"h3", "h4", "h5", "h6"}, {"1", "h1", "h2", "h3"}, {"0", "1", "h1", "h2"}}));
    CHECK(m2.max_var() == 7);
    CHECK(m2.leading_zeros() == std::vector<int>{0, 0, 0, 1});
    const SchurMatrix e = jt_matrix(Partition({3, 1}), Basis::E, F101);
    CHECK(e == jt_matrix(Partition({2, 1, 1}), Basis::H, F101));
    CHECK(e.basis() == Basis::E);
    CHECK(rectangle_matrix(3, F101) == jt_matrix(Partition({3, 3, 3}), Basis::H, F101));
    CHECK(rectangle_matrix(2, F101, 2) == jt_matrix(Partition({4, 4}), Basis::H, F101));
    CHECK(jt_matrix(Partition(), Basis::H, F101).empty());
}

TEST_CASE("symbolic determinant matches the Leibniz oracle") {
    std::mt19937 rng(1);
    for (auto& l : partitions_up_to_max_label(6)) {
        const MultiPoly d = jt_matrix(l, Basis::H, F101).det();
        for (int t = 0; t < 5; ++t) {
            auto v = random_point(rng, F101, l.max_label());
            std::vector<std::uint32_t> h{1};
            for (auto e : v) h.push_back(e.rep);
            CHECK(d.evaluate(v).rep == oracle::jt_det(l.vec(), h, *F101));
        }
    }
    CHECK(SchurMatrix(F101, 0).det() == MultiPoly::constant(F101, F101->one()));
}

TEST_CASE("numeric determinant matches the symbolic one") {
    std::mt19937 rng(2);
    for (auto& l : partitions_up_to_max_label(6)) {
        const SchurMatrix m = jt_matrix(l, Basis::H, F101);
        const MultiPoly d = m.det();
        auto v = random_point(rng, F101, l.max_label());
        auto a = m.evaluate(v);
        CHECK(det_in_place(a.data(), m.size(), *F101) == d.evaluate(v).rep);
    }
}

TEST_CASE("matrix classes") {
    auto c = classify_matrix(general_6x6);
    CHECK(c.general);
    CHECK_FALSE(c.reduced);
    CHECK(general_6x6.leading_zeros() == std::vector<int>{0, 0, 1, 1, 2, 3});
    CHECK(general_6x6.max_var() == 13);

    // The 4x4 sample matrix has equal sums on its leading 2x2 block but not on
    // rows 1,3 x columns 1,3 (5+4 against 8+2), so it is reduced but not special.
    c = classify_matrix(special_4x4);
    CHECK(c.reduced);
    CHECK_FALSE(c.special);
    CHECK(c.reason == "label sums differ on rows 1,3 and columns 1,3");
    CHECK(classify_matrix(special_4x4.submatrix({0, 1}, {0, 1})).special);

    CHECK(classify_matrix(M1).general);
    CHECK_FALSE(classify_matrix(M1).reduced);

    // labels must increase along rows
    CHECK_FALSE(classify_matrix(M({{"x3", "x2"}, {"x1", "x3"}})).general);
    // leading zeros may not shrink going down
    CHECK_FALSE(classify_matrix(M({{"0", "x3"}, {"x1", "x2"}})).general);
    // a 2x2 submatrix with unequal label sums
    CHECK_FALSE(classify_matrix(M({{"x4", "x6"}, {"x3", "x4"}})).special);
    CHECK(classify_matrix(M({{"x4", "x5"}, {"x3", "x4"}})).special);
    // a nonzero constant term
    CHECK_FALSE(classify_matrix(M({{"x4+1", "x5"}, {"x3", "x4"}})).special);
    // a zero entry
    CHECK_FALSE(classify_matrix(M({{"x2", "x3"}, {"0", "x2"}})).special);
}

TEST_CASE("psi golden matrices") {
    const PsiResult r1 = psi(M1);
    CHECK(r1.matrix == M({{"0", "x4-8x2x3", "x5-2x2x4"}, {"0", "x1", "x3-x2"}, {"0", "0", "x2"}}));

    const PsiResult r2 = psi(jt_matrix(Partition({4, 4, 2, 2}), Basis::H, F101));
    CHECK(r2.matrix == M({{"h6-h1h5-h2h4+h1^2h4", "h7-h2h5-h3h4+h1h2h4"},
                          {"h5+h1^2h3-h2h3-h1h4", "h6-h2h4-h3^2+h1h2h3"}}));
    CHECK(r2.matrix.to_string() ==
          "[x6 - x1*x5 - x2*x4 + x1^2*x4, x7 - x2*x5 - x3*x4 + x1*x2*x4]\n"
          "[x5 - x1*x4 - x2*x3 + x1^2*x3, x6 - x2*x4 - x3^2 + x1*x2*x3]\n");
    CHECK(classify_matrix(r2.matrix).special);
}

TEST_CASE("psi preserves the determinant up to its scalar") {
    for (auto& l : partitions_up_to_max_label(6)) {
        const SchurMatrix m = jt_matrix(l, Basis::H, F101);
        const PsiResult r = psi(m);
        CHECK(r.matrix.det() == m.det().scaled(r.alpha));
        CHECK(r.matrix.size() == reduced_size(l));
    }
    const PsiResult r = psi(M1);
    CHECK(r.matrix.det() == M1.det().scaled(r.alpha));
}

TEST_CASE("psi of every Jacobi-Trudi matrix is special") {
    for (auto& l : partitions_up_to_max_label(7))
        for (auto b : {Basis::H, Basis::E}) {
            CAPTURE(l.to_string());
            const auto c = classify_matrix(psi(jt_matrix(l, b, F101)).matrix);
            CHECK_MESSAGE(c.special, c.reason);
        }
}

TEST_CASE("bottom-up pivot order changes nothing but the scalar") {
    for (auto& l : partitions_up_to_max_label(6)) {
        const SchurMatrix m = jt_matrix(l, Basis::H, F101);
        const PsiResult a = psi(m, PivotOrder::TopDown);
        const PsiResult b = psi(m, PivotOrder::BottomUp);
        CHECK(a.matrix.size() == b.matrix.size());
        CHECK(a.matrix.det().scaled(F101->inv(a.alpha)) == b.matrix.det().scaled(F101->inv(b.alpha)));
    }
}

TEST_CASE("psi tilde keeps the size and the determinant") {
    for (auto& l : partitions_up_to_max_label(5)) {
        const SchurMatrix m = jt_matrix(l, Basis::H, F101);
        const SchurMatrix t = psi_tilde(m);
        CHECK(t.size() == m.size());
        CHECK(t.det() == m.det());
    }
}

TEST_CASE("phi on the 4x4 rectangle") {
    const SchurMatrix a = rectangle_matrix(4, F101);
    std::vector<std::string> log;
    const SchurMatrix s1 = phi(a, elems(F101, {1}));
    CHECK(s1 == M({{"x5-x2x4", "x6-x3x4", "x7-x4^2"},
                   {"x4-x2x3", "x5-x3^2", "x6-x3x4"},
                   {"x3-x2^2", "x4-x2x3", "x5-x2x4"}}));
    const SchurMatrix s2 = phi(a, elems(F101, {1, 2}));
    CHECK(s2 == M({{"x5-2x4", "x6-x3x4", "x7-x4^2"},
                   {"x4-2x3", "x5-x3^2", "x6-x3x4"},
                   {"x3-4", "x4-2x3", "x5-2x4"}}));
    const SchurMatrix s3 = phi(a, elems(F101, {1, 2, 4}));
    CHECK(s3 == M({{"x5-2x4", "x6-4x4", "x7-x4^2"},
                   {"x4-8", "x5-16", "x6-4x4"},
                   {"0", "x4-8", "x5-2x4"}}));
    const SchurMatrix s4 = phi(a, elems(F101, {1, 2, 4, 8}));
    CHECK(s4 == M({{"x5-16", "x6-32", "x7-64"}, {"0", "x5-16", "x6-32"}, {"0", "0", "x5-16"}}));

    const int ks[] = {1, 1, 1, 2, 3};
    const SchurMatrix steps[] = {a, s1, s2, s3, s4};
    for (int i = 0; i < 5; ++i) {
        const Trichotomy t = rectangle_trichotomy(steps[i], 4);
        CHECK(t.option == 3);
        CHECK(t.k == ks[i]);
    }
    phi(a, prefix_assignment(elems(F101, {1})), &log);
    CHECK_FALSE(log.empty());
}

TEST_CASE("phi rejects bad input") {
    const SchurMatrix a = rectangle_matrix(3, F101);
    CHECK_THROWS_AS(phi(a, Assignment{{2, F101->one()}}), std::invalid_argument);
    CHECK_THROWS_AS(phi(jt_matrix(Partition({2, 1}), Basis::H, F101), elems(F101, {1})),
                    std::invalid_argument);
}

TEST_CASE("phi tilde on (4^4) with x1 = 0, x2 = 2") {
    const SchurMatrix a = rectangle_matrix(4, F101);
    const auto vals = elems(F101, {0, 2});
    const Reduction st = phi_tilde_state(a, prefix_assignment(vals));
    const BlockDecomposition bd = decompose_blocks(st);
    REQUIRE(bd.ok);
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0].kind == Block::Kind::Scalar);
    CHECK(bd.blocks[0].size == 2);
    CHECK(bd.blocks[0].scalar == F101->from_int(2));
    CHECK(bd.blocks[1].kind == Block::Kind::Remainder);
    CHECK(st.active() == phi(a, vals));
    CHECK(phi_tilde(a, vals).det() == a.substitute({{1, vals[0]}, {2, vals[1]}}).det());
}

TEST_CASE("block structure example") {
    auto f5 = Field::make(5);
    const auto vals = elems(f5, {0, 2, 1, 1, 4});
    const auto bs = block_structure(Partition({3, 3, 3}), f5, vals);
    REQUIRE(bs.has_value());
    CHECK(*bs == Composition{2, 1});

    const SchurMatrix a = rectangle_matrix(3, f5);
    const SchurMatrix partial = phi_tilde(a, elems(f5, {0, 2}));
    // the pivot arithmetic leaves -x3^3 (that is x3^3/4 over F_5) next to x5 - x3*x4
    CHECK(partial == M({{"0", "0", "x5-x3x4-x3^3"}, {"2", "0", "0"}, {"0", "2", "0"}}, f5));
    const SchurMatrix full = phi_tilde(a, vals);
    CHECK(full == M({{"0", "0", "2"}, {"2", "0", "0"}, {"0", "2", "0"}}, f5));
    CHECK(full.det() == a.substitute({{1, vals[0]}, {2, vals[1]}, {3, vals[2]}, {4, vals[3]}, {5, vals[4]}}).det());
}

TEST_CASE("block structure sums to n and preserves determinants on random traces") {
    std::mt19937 rng(7);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        auto f = Field::make(q);
        for (int n = 1; n <= 4; ++n) {
            const SchurMatrix a = rectangle_matrix(n, f);
            for (int t = 0; t < 100; ++t) {
                const auto v = random_point(rng, f, 2 * n - 1);
                std::vector<std::uint32_t> h{1};
                for (auto e : v) h.push_back(e.rep);
                const std::uint32_t d = oracle::jt_det(std::vector<int>(static_cast<size_t>(n), n), h, *f);
                const auto bs = block_structure(rectangle(n, n), f, v);
                CHECK(bs.has_value() == (d != 0));
                if (bs) {
                    int s = 0;
                    for (int c : *bs) s += c;
                    CHECK(s == n);
                }
                for (int r = 1; r <= 2 * n - 1; ++r) {
                    std::vector<Element> prefix(v.begin(), v.begin() + r);
                    const Reduction st = phi_tilde_state(a, prefix_assignment(prefix));
                    CHECK(decompose_blocks(st).ok);
                    std::map<int, Element> sub;
                    for (int i = 0; i < r; ++i) sub[i + 1] = prefix[static_cast<size_t>(i)];
                    CHECK(st.full().det() == a.substitute(sub).det());
                }
            }
        }
    }
}

TEST_CASE("trichotomy over every prefix of small rectangles") {
    for (std::uint32_t q : {2u, 3u}) {
        auto f = Field::make(q);
        for (int n = 1; n <= 3; ++n)
            for (int a = n; a <= 4; ++a) {
                const SchurMatrix A = rectangle_matrix(n, f, a - n);
                const int m = a + n - 1;
                for (int r = 0; r <= m; ++r)
                    oracle::each_point(r, q, [&](const auto& h) {
                        std::vector<Element> vals;
                        for (int i = 1; i <= r; ++i) vals.push_back(Element{h[static_cast<size_t>(i)]});
                        const Trichotomy t = rectangle_trichotomy(phi(A, vals), n, a - n);
                        CHECK_MESSAGE(t.option != 0, t.reason);
                    });
            }
    }
}

TEST_CASE("minors are unchanged by operations inside the selected rows and columns") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<std::uint32_t> d(0, 100);
    const int n = 5;
    for (int t = 0; t < 200; ++t) {
        std::vector<std::uint32_t> a(n * n);
        for (auto& x : a) x = d(rng);
        const std::vector<int> S{0, 2, 3}, T{1, 2, 4};
        auto minor = [&](const std::vector<std::uint32_t>& m) {
            std::vector<std::uint32_t> sub;
            for (int i : S)
                for (int j : T) sub.push_back(m[static_cast<size_t>(i * n + j)]);
            return det_in_place(sub.data(), 3, *F101);
        };
        const auto before = minor(a);
        // R_0 -= c R_3 and C_4 -= c' C_1
        const std::uint32_t c = d(rng), c2 = d(rng);
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(j)] = F101->sub_raw(a[static_cast<size_t>(j)], F101->mul_raw(c, a[static_cast<size_t>(3 * n + j)]));
        for (int i = 0; i < n; ++i)
            a[static_cast<size_t>(i * n + 4)] =
                F101->sub_raw(a[static_cast<size_t>(i * n + 4)], F101->mul_raw(c2, a[static_cast<size_t>(i * n + 1)]));
        CHECK(minor(a) == before);
    }
}

TEST_CASE("assign keeps the general Schur shape or throws") {
    Reduction r(rectangle_matrix(3, F101));
    r.eliminate();
    r.assign(1, F101->from_int(3));
    r.eliminate();
    CHECK(classify_matrix(r.active()).general);
    CHECK(r.active().det().scaled(F101->one()) ==
          rectangle_matrix(3, F101).substitute({{1, F101->from_int(3)}}).det().scaled(r.alpha()));
}
