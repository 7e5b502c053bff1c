#pragma once

#include "sfq/partition.hpp"
#include "sfq/schur_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sfq {

enum class PivotOrder { TopDown, BottomUp };

struct Pivot {
    int row = 0;  // index in the full matrix
    int col = 0;
    Element value;
};

// Pivot elimination state shared by ψ, ψ̃, φ and φ̃. Row and column operations act
// on whole rows and columns of the full matrix; retired pivot rows and columns are
// marked inactive instead of being removed. The active submatrix is the ψ/φ view,
// the full matrix the ψ̃/φ̃ view.
class Reduction {
public:
    explicit Reduction(SchurMatrix m, std::vector<std::string>* trace = nullptr);

    // Eliminate every nonzero constant of the active part and retire its row and column.
    std::vector<Pivot> eliminate(PivotOrder order = PivotOrder::TopDown);
    // Substitute x_var = value everywhere, then require the active part to be general Schur.
    void assign(int var, Element value);

    const SchurMatrix& full() const { return m_; }
    SchurMatrix active() const;
    std::vector<int> active_rows() const;
    std::vector<int> active_cols() const;
    bool row_active(int i) const { return row_on_[static_cast<size_t>(i)]; }
    bool col_active(int j) const { return col_on_[static_cast<size_t>(j)]; }
    // det(active) = alpha * det(full)
    Element alpha() const { return alpha_; }
    // Retired pivots in retirement order.
    const std::vector<Pivot>& pivots() const { return retired_; }

private:
    void log(const std::string& s);

    SchurMatrix m_;
    std::vector<bool> row_on_, col_on_;
    Element alpha_;
    std::vector<Pivot> retired_;
    std::vector<std::string>* trace_;
};

struct PsiResult {
    SchurMatrix matrix;
    Element alpha;  // det(matrix) = alpha * det(input)
};

PsiResult psi(const SchurMatrix& m, PivotOrder order = PivotOrder::TopDown,
              std::vector<std::string>* trace = nullptr);
SchurMatrix psi_tilde(const SchurMatrix& m);

// Assignments are (variable, value) pairs that must be x_1, x_2, ... in order.
using Assignment = std::vector<std::pair<int, Element>>;
Assignment prefix_assignment(const std::vector<Element>& values);

// Input must be reduced. φ works on shrinking matrices; φ̃ keeps the full size.
SchurMatrix phi(const SchurMatrix& m, const Assignment& a, std::vector<std::string>* trace = nullptr);
SchurMatrix phi(const SchurMatrix& m, const std::vector<Element>& values);
Reduction phi_tilde_state(const SchurMatrix& m, const Assignment& a);
SchurMatrix phi_tilde(const SchurMatrix& m, const std::vector<Element>& values);

struct Block {
    enum class Kind { Scalar, Remainder } kind;
    int size = 0;
    Element scalar;  // for Scalar blocks
};

struct BlockDecomposition {
    bool ok = false;
    std::vector<Block> blocks;  // lower left to upper right
    std::string reason;
};

// Read φ̃ state as a block anti-diagonal matrix: scalar multiples of the identity on
// the retired pivots and one remainder block on the active part.
BlockDecomposition decompose_blocks(const Reduction& r);

// Block sizes for the rectangle (a^n), a >= n, under a full assignment of the 2n-1
// renamed variables; nullopt when the determinant vanishes.
std::optional<Composition> block_structure(const Partition& rect, FieldPtr f,
                                           const std::vector<Element>& assignment);

struct Trichotomy {
    int option = 0;  // 1 empty, 2 lower part zero, 3 first nonzero diagonal constant; 0 none
    int k = 0;       // first nonzero diagonal for option 3
    std::string reason;
};

// Classify φ(A; prefix) for the n x n rectangle matrix whose labels are shifted by shift.
Trichotomy rectangle_trichotomy(const SchurMatrix& phi_result, int n, int shift = 0);

} // namespace sfq
