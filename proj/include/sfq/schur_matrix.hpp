#pragma once

#include "sfq/multipoly.hpp"
#include "sfq/partition.hpp"

#include <string>
#include <vector>

namespace sfq {

enum class Basis { H, E };
std::string to_string(Basis b);
Basis parse_basis(std::string_view s);

// Square matrix of polynomials, row-major, 0-based indices.
class SchurMatrix {
public:
    SchurMatrix() = default;
    SchurMatrix(FieldPtr f, int n, Basis basis = Basis::H);
    // Rows of polynomial text, e.g. {{"x2","x3"},{"1","x1"}}.
    static SchurMatrix parse(FieldPtr f, const std::vector<std::vector<std::string>>& rows);

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }
    const FieldPtr& field() const { return field_; }
    Basis basis() const { return basis_; }

    MultiPoly& at(int i, int j) { return e_[static_cast<size_t>(i * n_ + j)]; }
    const MultiPoly& at(int i, int j) const { return e_[static_cast<size_t>(i * n_ + j)]; }

    // d_i: number of leading zero entries of each row.
    std::vector<int> leading_zeros() const;
    int max_var() const;

    SchurMatrix substitute(const std::map<int, Element>& bindings) const;
    SchurMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    // Symbolic determinant by subset expansion; det of the 0x0 matrix is 1.
    MultiPoly det() const;
    // values[i] is x_{i+1}; result is the numeric matrix as reps, row-major.
    std::vector<std::uint32_t> evaluate(const std::vector<Element>& values) const;

    bool operator==(const SchurMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    std::string to_string() const;

private:
    FieldPtr field_;
    int n_ = 0;
    Basis basis_ = Basis::H;
    std::vector<MultiPoly> e_;
};

// Entry (i,j) = x_{λ_i - i + j}, x_0 = 1, negative index 0. Basis e is built from λ'.
SchurMatrix jt_matrix(const Partition& lambda, Basis basis, FieldPtr f);
// (x_{j-i+n+shift}); shift = a - n gives jt((a^n)).
SchurMatrix rectangle_matrix(int n, FieldPtr f, int shift = 0);

struct MatrixClass {
    bool general = false;
    bool reduced = false;
    bool special = false;
    std::string reason;  // first violated condition, empty when special
    std::string to_string() const;
};

MatrixClass classify_matrix(const SchurMatrix& m);

// Numeric determinant of an n x n matrix of reps by Gaussian elimination; a is destroyed.
std::uint32_t det_in_place(std::uint32_t* a, int n, const Field& f);

} // namespace sfq
