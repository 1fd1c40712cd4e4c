#pragma once

// Smith normal form over the Euclidean domain A = F_q[T].

#include <vector>

#include "drinfeld/linalg.hpp"
#include "drinfeld/upoly.hpp"

namespace drinfeld {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(const FieldTower* F, std::size_t rows, std::size_t cols);
    static PolyMatrix identity(const FieldTower* F, std::size_t n);
    /// T·Id − M for a square matrix M over F_q.
    static PolyMatrix characteristic(const FieldTower* F, const FqMatrix& M);

    [[nodiscard]] const FieldTower* field() const { return F_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    UPoly& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    [[nodiscard]] const UPoly& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    [[nodiscard]] PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

    /// Determinant by cofactor expansion along the first row (square, small sizes only).
    [[nodiscard]] UPoly determinant() const;

private:
    const FieldTower* F_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<UPoly> d_;
};

struct SmithForm {
    PolyMatrix U;  // unimodular, rows × rows
    PolyMatrix D;  // diagonal, monic or zero entries, each dividing the next
    PolyMatrix V;  // unimodular, cols × cols
    /// Diagonal of D, length min(rows, cols).
    std::vector<UPoly> diagonal;
};

/// U·M·V = D. Pivots are entries of minimal degree, ties broken by row-major position.
SmithForm smith_normal_form(const PolyMatrix& M);

/// Invariant factors of M (monic, ascending divisibility, units included).
std::vector<UPoly> invariant_factors(const PolyMatrix& M);

}  // namespace drinfeld
