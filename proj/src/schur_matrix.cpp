#include "sfq/schur_matrix.hpp"

#include <sstream>

namespace sfq {

std::string to_string(Basis b) { return b == Basis::H ? "h" : "e"; }

Basis parse_basis(std::string_view s) {
    if (s == "h") return Basis::H;
    if (s == "e") return Basis::E;
    throw std::invalid_argument("basis must be h or e, got '" + std::string(s) + "'");
}

SchurMatrix::SchurMatrix(FieldPtr f, int n, Basis basis)
    : field_(std::move(f)), n_(n), basis_(basis),
      e_(static_cast<size_t>(n * n), MultiPoly(field_)) {}

SchurMatrix SchurMatrix::parse(FieldPtr f, const std::vector<std::vector<std::string>>& rows) {
    const int n = static_cast<int>(rows.size());
    SchurMatrix m(f, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("matrix rows must be square");
        for (int j = 0; j < n; ++j)
            m.at(i, j) = MultiPoly::parse(f, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

std::vector<int> SchurMatrix::leading_zeros() const {
    std::vector<int> d(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        int z = 0;
        while (z < n_ && at(i, z).is_zero()) ++z;
        d[static_cast<size_t>(i)] = z;
    }
    return d;
}

int SchurMatrix::max_var() const {
    int t = 0;
    for (auto& p : e_) t = std::max(t, p.top_var());
    return t;
}

SchurMatrix SchurMatrix::substitute(const std::map<int, Element>& bindings) const {
    SchurMatrix r = *this;
    for (auto& p : r.e_) p = p.substitute(bindings);
    return r;
}

SchurMatrix SchurMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    if (rows.size() != cols.size()) throw std::invalid_argument("submatrix must be square");
    SchurMatrix r(field_, static_cast<int>(rows.size()), basis_);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return r;
}

MultiPoly SchurMatrix::det() const {
    if (n_ > 12) throw std::invalid_argument("symbolic determinant limited to 12x12");
    if (n_ == 0) return MultiPoly::constant(field_, field_->one());
    // dp[mask]: determinant of rows 0..|mask|-1 against the columns in mask
    const size_t full = size_t(1) << n_;
    std::vector<MultiPoly> dp(full, MultiPoly(field_));
    dp[0] = MultiPoly::constant(field_, field_->one());
    for (size_t mask = 0; mask < full; ++mask) {
        if (dp[mask].is_zero()) continue;
        const int row = __builtin_popcountll(mask);
        if (row == n_) continue;
        int above = 0;  // columns in mask to the left of j
        for (int j = 0; j < n_; ++j) {
            if (mask & (size_t(1) << j)) {
                ++above;
                continue;
            }
            const MultiPoly& a = at(row, j);
            if (a.is_zero()) continue;
            // sign from the number of chosen columns to the right of j
            const int right = row - above;
            MultiPoly t = dp[mask] * a;
            if (right & 1) t = -t;
            dp[mask | (size_t(1) << j)] += t;
        }
    }
    return dp[full - 1];
}

std::vector<std::uint32_t> SchurMatrix::evaluate(const std::vector<Element>& values) const {
    std::vector<std::uint32_t> out(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) out[i] = e_[i].evaluate(values).rep;
    return out;
}

std::string SchurMatrix::to_string() const {
    if (n_ == 0) return "[]\n";
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << '[';
        for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

SchurMatrix jt_matrix(const Partition& lambda, Basis basis, FieldPtr f) {
    const Partition shape = basis == Basis::H ? lambda : transpose(lambda);
    const int n = shape.length();
    SchurMatrix m(f, n, basis);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int idx = shape[i] - i + j;
            if (idx == 0)
                m.at(i, j) = MultiPoly::constant(f, f->one());
            else if (idx > 0)
                m.at(i, j) = MultiPoly::var(f, idx);
        }
    return m;
}

SchurMatrix rectangle_matrix(int n, FieldPtr f, int shift) {
    SchurMatrix m(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = MultiPoly::var(f, j - i + n + shift);
    return m;
}

std::string MatrixClass::to_string() const {
    if (special) return "general,reduced,special";
    if (reduced) return "general,reduced";
    if (general) return "general";
    return "none";
}

MatrixClass classify_matrix(const SchurMatrix& m) {
    MatrixClass c;
    const int n = m.size();
    std::vector<Label> lab(static_cast<size_t>(n * n));
    auto L = [&](int i, int j) -> Label& { return lab[static_cast<size_t>(i * n + j)]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            try {
                L(i, j) = label_of(m.at(i, j));
            } catch (const NotLabelForm& ex) {
                c.reason = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") not in label form: " + ex.what();
                return c;
            }
        }
    // (a) leading zeros then nonzero entries, d nondecreasing
    const auto d = m.leading_zeros();
    for (int i = 0; i < n; ++i) {
        for (int j = d[static_cast<size_t>(i)]; j < n; ++j)
            if (!L(i, j)) {
                c.reason = "zero after the leading zeros in row " + std::to_string(i + 1);
                return c;
            }
        if (i > 0 && d[static_cast<size_t>(i)] < d[static_cast<size_t>(i - 1)]) {
            c.reason = "leading zero counts decrease at row " + std::to_string(i + 1);
            return c;
        }
    }
    // (c) labels increase along rows and decrease down columns
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!L(i, j)) continue;
            if (j + 1 < n && L(i, j + 1) && !(*L(i, j) < *L(i, j + 1))) {
                c.reason = "labels not increasing in row " + std::to_string(i + 1);
                return c;
            }
            if (i + 1 < n && L(i + 1, j) && !(*L(i, j) > *L(i + 1, j))) {
                c.reason = "labels not decreasing in column " + std::to_string(j + 1);
                return c;
            }
        }
    c.general = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (L(i, j) && *L(i, j) == 0) {
                c.reason = "nonzero constant at (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")";
                return c;
            }
    c.reduced = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!L(i, j)) {
                c.reason = "zero entry";
                return c;
            }
            if (!m.at(i, j).constant_term().is_zero()) {
                c.reason = "nonzero constant term at (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")";
                return c;
            }
        }
    for (int i = 0; i < n; ++i)
        for (int i2 = i + 1; i2 < n; ++i2)
            for (int j = 0; j < n; ++j)
                for (int j2 = j + 1; j2 < n; ++j2)
                    if (*L(i, j) + *L(i2, j2) != *L(i, j2) + *L(i2, j)) {
                        c.reason = "label sums differ on rows " + std::to_string(i + 1) + "," +
                                   std::to_string(i2 + 1) + " and columns " +
                                   std::to_string(j + 1) + "," + std::to_string(j2 + 1);
                        return c;
                    }
    c.special = true;
    return c;
}

std::uint32_t det_in_place(std::uint32_t* a, int n, const Field& f) {
    std::uint32_t det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r * n + col]) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = col; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
            det = f.neg_raw(det);
        }
        const std::uint32_t p = a[col * n + col];
        det = f.mul_raw(det, p);
        const std::uint32_t pinv = f.inv_raw(p);
        for (int r = col + 1; r < n; ++r) {
            const std::uint32_t v = a[r * n + col];
            if (!v) continue;
            const std::uint32_t factor = f.neg_raw(f.mul_raw(v, pinv));
            for (int j = col + 1; j < n; ++j)
                a[r * n + j] = f.add_raw(a[r * n + j], f.mul_raw(factor, a[col * n + j]));
        }
    }
    return det;
}

} // namespace sfq
