#include "sfq/reduction.hpp"

#include <algorithm>
#include <sstream>

namespace sfq {

namespace {

std::string cell(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

} // namespace

Reduction::Reduction(SchurMatrix m, std::vector<std::string>* trace)
    : m_(std::move(m)),
      row_on_(static_cast<size_t>(m_.size()), true),
      col_on_(static_cast<size_t>(m_.size()), true),
      alpha_(m_.field() ? m_.field()->one() : Element{1}),
      trace_(trace) {}

void Reduction::log(const std::string& s) {
    if (trace_) trace_->push_back(s);
}

std::vector<int> Reduction::active_rows() const {
    std::vector<int> r;
    for (int i = 0; i < m_.size(); ++i)
        if (row_on_[static_cast<size_t>(i)]) r.push_back(i);
    return r;
}

std::vector<int> Reduction::active_cols() const {
    std::vector<int> c;
    for (int j = 0; j < m_.size(); ++j)
        if (col_on_[static_cast<size_t>(j)]) c.push_back(j);
    return c;
}

SchurMatrix Reduction::active() const {
    if (m_.empty()) return m_;
    return m_.submatrix(active_rows(), active_cols());
}

std::vector<Pivot> Reduction::eliminate(PivotOrder order) {
    const int n = m_.size();
    const Field& f = *m_.field();
    std::vector<Pivot> piv;
    for (int i : active_rows())
        for (int j : active_cols()) {
            const MultiPoly& e = m_.at(i, j);
            if (!e.is_zero() && e.is_constant()) piv.push_back({i, j, e.constant_term()});
        }
    if (order == PivotOrder::BottomUp) std::reverse(piv.begin(), piv.end());

    for (auto& pv : piv) {
        const MultiPoly& pe = m_.at(pv.row, pv.col);
        if (pe.is_zero() || !pe.is_constant())
            throw std::logic_error("pivot " + cell(pv.row, pv.col) + " lost its constant value");
        pv.value = pe.constant_term();
        const Element pinv = f.inv(pv.value);
        log("pivot " + cell(pv.row, pv.col) + " = " + std::to_string(pv.value.rep));
        // clear the pivot column with row operations
        for (int i = 0; i < n; ++i) {
            if (i == pv.row || m_.at(i, pv.col).is_zero()) continue;
            const MultiPoly factor = m_.at(i, pv.col).scaled(pinv);
            for (int j = 0; j < n; ++j)
                if (!m_.at(pv.row, j).is_zero()) m_.at(i, j) -= factor * m_.at(pv.row, j);
            log("  R" + std::to_string(i + 1) + " -= (" + factor.to_string() + ")*R" +
                std::to_string(pv.row + 1));
        }
        // then the pivot row with column operations
        for (int j = 0; j < n; ++j) {
            if (j == pv.col || m_.at(pv.row, j).is_zero()) continue;
            const MultiPoly factor = m_.at(pv.row, j).scaled(pinv);
            for (int i = 0; i < n; ++i)
                if (!m_.at(i, pv.col).is_zero()) m_.at(i, j) -= factor * m_.at(i, pv.col);
            log("  C" + std::to_string(j + 1) + " -= (" + factor.to_string() + ")*C" +
                std::to_string(pv.col + 1));
        }
    }
    // retire: expanding along a cleared row gives det = (-1)^(r+c) p det(minor)
    for (auto& pv : piv) {
        int r = 1, c = 1;
        for (int i = 0; i < pv.row; ++i) r += row_on_[static_cast<size_t>(i)] ? 1 : 0;
        for (int j = 0; j < pv.col; ++j) c += col_on_[static_cast<size_t>(j)] ? 1 : 0;
        Element s = ((r + c) & 1) ? f.neg(pv.value) : pv.value;
        alpha_ = f.mul(alpha_, f.inv(s));
        row_on_[static_cast<size_t>(pv.row)] = false;
        col_on_[static_cast<size_t>(pv.col)] = false;
        retired_.push_back(pv);
    }
    return piv;
}

void Reduction::assign(int var, Element value) {
    m_ = m_.substitute({{var, value}});
    log("x" + std::to_string(var) + " = " + std::to_string(value.rep));
    const SchurMatrix a = active();
    const MatrixClass mc = classify_matrix(a);
    if (!mc.general) {
        std::ostringstream os;
        os << "after x" << var << "=" << value.rep << " the active matrix left general Schur form ("
           << mc.reason << "):\n"
           << a.to_string();
        if (trace_)
            for (auto& line : *trace_) os << line << '\n';
        throw std::logic_error(os.str());
    }
}

PsiResult psi(const SchurMatrix& m, PivotOrder order, std::vector<std::string>* trace) {
    const MatrixClass mc = classify_matrix(m);
    if (!mc.general) throw std::invalid_argument("psi: not a general Schur matrix (" + mc.reason + ")");
    Reduction r(m, trace);
    r.eliminate(order);
    return {r.active(), r.alpha()};
}

SchurMatrix psi_tilde(const SchurMatrix& m) {
    const MatrixClass mc = classify_matrix(m);
    if (!mc.general)
        throw std::invalid_argument("psi_tilde: not a general Schur matrix (" + mc.reason + ")");
    Reduction r(m);
    r.eliminate();
    return r.full();
}

Assignment prefix_assignment(const std::vector<Element>& values) {
    Assignment a;
    for (size_t i = 0; i < values.size(); ++i) a.emplace_back(static_cast<int>(i + 1), values[i]);
    return a;
}

namespace {

void check_phi_input(const SchurMatrix& m, const Assignment& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].first != static_cast<int>(i + 1))
            throw std::invalid_argument("assignments must be x1, x2, ... in order; got x" +
                                        std::to_string(a[i].first) + " at position " +
                                        std::to_string(i + 1));
    if (m.empty()) return;
    const MatrixClass mc = classify_matrix(m);
    if (!mc.reduced)
        throw std::invalid_argument("phi needs a reduced general Schur matrix (" + mc.reason + ")");
}

} // namespace

SchurMatrix phi(const SchurMatrix& m, const Assignment& a, std::vector<std::string>* trace) {
    check_phi_input(m, a);
    SchurMatrix cur = m;
    for (auto& [var, val] : a) {
        if (cur.empty()) break;
        cur = cur.substitute({{var, val}});
        if (trace) trace->push_back("x" + std::to_string(var) + " = " + std::to_string(val.rep));
        const MatrixClass mc = classify_matrix(cur);
        if (!mc.general)
            throw std::logic_error("phi: substitution x" + std::to_string(var) +
                                   " broke general Schur form (" + mc.reason + ")\n" +
                                   cur.to_string());
        cur = psi(cur, PivotOrder::TopDown, trace).matrix;
    }
    return cur;
}

SchurMatrix phi(const SchurMatrix& m, const std::vector<Element>& values) {
    return phi(m, prefix_assignment(values));
}

Reduction phi_tilde_state(const SchurMatrix& m, const Assignment& a) {
    check_phi_input(m, a);
    Reduction r(m);
    for (auto& [var, val] : a) {
        if (r.active_rows().empty()) break;
        r.assign(var, val);
        r.eliminate();
    }
    return r;
}

SchurMatrix phi_tilde(const SchurMatrix& m, const std::vector<Element>& values) {
    return phi_tilde_state(m, prefix_assignment(values)).full();
}

BlockDecomposition decompose_blocks(const Reduction& red) {
    BlockDecomposition out;
    const SchurMatrix& m = red.full();
    const int n = m.size();
    std::vector<int> pivot_row(static_cast<size_t>(n), -1);
    std::vector<Element> pivot_val(static_cast<size_t>(n));
    for (auto& p : red.pivots()) {
        pivot_row[static_cast<size_t>(p.col)] = p.row;
        pivot_val[static_cast<size_t>(p.col)] = p.value;
    }
    const auto arows = red.active_rows();
    const auto acols = red.active_cols();
    const int rem = static_cast<int>(arows.size());
    // 0 outside blocks, 1 scalar diagonal, 2 scalar off-diagonal, 3 remainder
    std::vector<int> role(static_cast<size_t>(n * n), 0);
    auto fail = [&](std::string why) {
        out.ok = false;
        out.reason = std::move(why);
        return out;
    };

    int R = n, C = 0;
    bool used_remainder = false;
    while (C < n) {
        const int pr = pivot_row[static_cast<size_t>(C)];
        if (pr >= 0) {
            const int s = R - pr;
            if (s < 1 || C + s > n) return fail("pivot in column " + std::to_string(C + 1) +
                                                " does not start a block");
            const Element c = pivot_val[static_cast<size_t>(C)];
            for (int t = 0; t < s; ++t) {
                if (pivot_row[static_cast<size_t>(C + t)] != pr + t)
                    return fail("scalar block broken at " + cell(pr + t, C + t));
                if (!(pivot_val[static_cast<size_t>(C + t)] == c))
                    return fail("scalar block has unequal diagonal at " + cell(pr + t, C + t));
            }
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j) role[static_cast<size_t>((pr + i) * n + C + j)] = i == j ? 1 : 2;
            out.blocks.push_back({Block::Kind::Scalar, s, c});
            R -= s;
            C += s;
        } else {
            if (used_remainder || rem == 0)
                return fail("column " + std::to_string(C + 1) + " belongs to no block");
            for (int t = 0; t < rem; ++t) {
                if (arows[static_cast<size_t>(t)] != R - rem + t || acols[static_cast<size_t>(t)] != C + t)
                    return fail("active part is not a contiguous block at column " +
                                std::to_string(C + 1));
            }
            for (int i = 0; i < rem; ++i)
                for (int j = 0; j < rem; ++j) role[static_cast<size_t>((R - rem + i) * n + C + j)] = 3;
            out.blocks.push_back({Block::Kind::Remainder, rem, Element{0}});
            used_remainder = true;
            R -= rem;
            C += rem;
        }
        if (R < 0) return fail("blocks overrun the rows");
    }
    if (R != 0) return fail("blocks do not cover all rows");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int rl = role[static_cast<size_t>(i * n + j)];
            const MultiPoly& e = m.at(i, j);
            if ((rl == 0 || rl == 2) && !e.is_zero())
                return fail("nonzero entry " + cell(i, j) + " outside the blocks: " + e.to_string());
            if (rl == 1) {
                const Element c = pivot_val[static_cast<size_t>(j)];
                if (!(e == MultiPoly::constant(m.field(), c)))
                    return fail("scalar block entry " + cell(i, j) + " changed");
            }
        }
    out.ok = true;
    return out;
}

std::optional<Composition> block_structure(const Partition& rect, FieldPtr f,
                                           const std::vector<Element>& assignment) {
    const ShapeClass sc = classify(rect);
    if (rect.empty() || !sc.rectangle())
        throw std::invalid_argument("block_structure needs a rectangular shape, got " + rect.to_string());
    const int n = rect.length();
    if (rect[0] < n)
        throw std::invalid_argument("block_structure needs (a^n) with a >= n; use the transpose");
    if (static_cast<int>(assignment.size()) != 2 * n - 1)
        throw std::invalid_argument("block_structure needs values for all " +
                                    std::to_string(2 * n - 1) + " variables");
    const SchurMatrix a = rectangle_matrix(n, f);
    auto num = a.evaluate(assignment);
    if (det_in_place(num.data(), n, *f) == 0) return std::nullopt;
    const Reduction st = phi_tilde_state(a, prefix_assignment(assignment));
    const BlockDecomposition d = decompose_blocks(st);
    if (!d.ok) throw std::logic_error("block decomposition failed: " + d.reason);
    Composition sizes;
    for (auto& b : d.blocks) {
        if (b.kind != Block::Kind::Scalar)
            throw std::logic_error("nonsingular assignment left an unreduced block");
        sizes.push_back(b.size);
    }
    return sizes;
}

Trichotomy rectangle_trichotomy(const SchurMatrix& b, int n, int shift) {
    Trichotomy t;
    const int np = b.size();
    if (np == 0) {
        t.option = 1;
        return t;
    }
    // diagonal k holds entries with i - j = np - k
    auto diag_zero = [&](int k) {
        for (int i = 0; i < np; ++i) {
            const int j = i - (np - k);
            if (j >= 0 && j < np && !b.at(i, j).is_zero()) return false;
        }
        return true;
    };
    int k = 1;
    while (k <= 2 * np - 1 && diag_zero(k)) ++k;
    if (k > np) {
        t.option = 2;
        return t;
    }
    const MultiPoly* first = nullptr;
    for (int i = 0; i < np; ++i) {
        const int j = i - (np - k);
        if (j < 0 || j >= np) continue;
        if (!first)
            first = &b.at(i, j);
        else if (!(b.at(i, j) == *first)) {
            t.reason = "diagonal " + std::to_string(k) + " entries differ";
            return t;
        }
    }
    for (int d = k; d <= 2 * np - 1; ++d) {
        const int want = 2 * n - 2 * np + d + shift;
        for (int i = 0; i < np; ++i) {
            const int j = i - (np - d);
            if (j < 0 || j >= np) continue;
            Label l;
            try {
                l = label_of(b.at(i, j));
            } catch (const NotLabelForm&) {
                l = std::nullopt;
            }
            if (!l || *l != want) {
                t.reason = "entry " + cell(i, j) + " on diagonal " + std::to_string(d) +
                           " has label " + (l ? std::to_string(*l) : std::string("undefined")) +
                           ", expected " + std::to_string(want);
                return t;
            }
        }
    }
    t.option = 3;
    t.k = k;
    return t;
}

} // namespace sfq
