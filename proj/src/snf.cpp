#include "drinfeld/snf.hpp"

#include <optional>
#include <utility>

#include "drinfeld/errors.hpp"

namespace drinfeld {

PolyMatrix::PolyMatrix(const FieldTower* F, std::size_t rows, std::size_t cols)
    : F_(F), rows_(rows), cols_(cols), d_(rows * cols, UPoly::zero(F)) {}

PolyMatrix PolyMatrix::identity(const FieldTower* F, std::size_t n) {
    PolyMatrix I(F, n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = UPoly::one(F);
    return I;
}

PolyMatrix PolyMatrix::characteristic(const FieldTower* F, const FqMatrix& M) {
    if (M.rows() != M.cols()) throw Error("characteristic matrix of a non-square matrix");
    PolyMatrix A(F, M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            A.at(i, j) = UPoly::constant(F, F->neg(M.at(i, j)));
            if (i == j) A.at(i, j) = A.at(i, j) + UPoly::T(F);
        }
    return A;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch");
    PolyMatrix R(F_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) R.at(i, j) = R.at(i, j) + at(i, k) * o.at(k, j);
        }
    return R;
}

UPoly PolyMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    if (rows_ == 0) return UPoly::one(F_);
    if (rows_ == 1) return at(0, 0);
    UPoly det = UPoly::zero(F_);
    for (std::size_t j = 0; j < cols_; ++j) {
        PolyMatrix minor(F_, rows_ - 1, cols_ - 1);
        for (std::size_t i = 1; i < rows_; ++i)
            for (std::size_t k = 0, kk = 0; k < cols_; ++k) {
                if (k == j) continue;
                minor.at(i - 1, kk++) = at(i, k);
            }
        const UPoly term = at(0, j) * minor.determinant();
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

namespace {

void swap_rows(PolyMatrix& A, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A.at(a, j), A.at(b, j));
}

void swap_cols(PolyMatrix& A, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < A.rows(); ++i) std::swap(A.at(i, a), A.at(i, b));
}

// row_dst += f · row_src
void add_row(PolyMatrix& A, std::size_t dst, std::size_t src, const UPoly& f) {
    for (std::size_t j = 0; j < A.cols(); ++j)
        if (!A.at(src, j).is_zero()) A.at(dst, j) = A.at(dst, j) + f * A.at(src, j);
}

// col_dst += f · col_src
void add_col(PolyMatrix& A, std::size_t dst, std::size_t src, const UPoly& f) {
    for (std::size_t i = 0; i < A.rows(); ++i)
        if (!A.at(i, src).is_zero()) A.at(i, dst) = A.at(i, dst) + f * A.at(i, src);
}

std::optional<std::pair<std::size_t, std::size_t>> min_degree_entry(const PolyMatrix& A, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    int best_deg = 0;
    for (std::size_t i = t; i < A.rows(); ++i)
        for (std::size_t j = t; j < A.cols(); ++j) {
            const UPoly& e = A.at(i, j);
            if (e.is_zero()) continue;
            if (!best || e.deg() < best_deg) {
                best = {i, j};
                best_deg = e.deg();
            }
        }
    return best;
}

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& M) {
    const FieldTower* F = M.field();
    PolyMatrix A = M;
    PolyMatrix U = PolyMatrix::identity(F, M.rows());
    PolyMatrix V = PolyMatrix::identity(F, M.cols());
    const std::size_t r = std::min(M.rows(), M.cols());

    for (std::size_t t = 0; t < r; ++t) {
        bool empty = false;
        for (;;) {
            const auto pivot = min_degree_entry(A, t);
            if (!pivot) {
                empty = true;
                break;
            }
            swap_rows(A, t, pivot->first);
            swap_rows(U, t, pivot->first);
            swap_cols(A, t, pivot->second);
            swap_cols(V, t, pivot->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < A.rows(); ++i) {
                if (A.at(i, t).is_zero()) continue;
                auto [q, rem] = divmod(A.at(i, t), A.at(t, t));
                const UPoly neg_q = -q;
                add_row(A, i, t, neg_q);
                add_row(U, i, t, neg_q);
                if (!rem.is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < A.cols(); ++j) {
                if (A.at(t, j).is_zero()) continue;
                auto [q, rem] = divmod(A.at(t, j), A.at(t, t));
                const UPoly neg_q = -q;
                add_col(A, j, t, neg_q);
                add_col(V, j, t, neg_q);
                if (!rem.is_zero()) clean = false;
            }
            if (!clean) continue;

            // Row and column t are clear; the pivot must divide the remaining block.
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < A.rows() && !offender; ++i)
                for (std::size_t j = t + 1; j < A.cols(); ++j)
                    if (!divides(A.at(t, t), A.at(i, j))) {
                        offender = i;
                        break;
                    }
            if (!offender) break;
            const UPoly one = UPoly::one(F);
            add_row(A, t, *offender, one);
            add_row(U, t, *offender, one);
        }
        if (empty) break;
        const Elem inv = F->inv(A.at(t, t).lc());
        for (std::size_t j = 0; j < A.cols(); ++j) A.at(t, j) = A.at(t, j).scale(inv);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(t, j) = U.at(t, j).scale(inv);
    }

    SmithForm out{std::move(U), std::move(A), std::move(V), {}};
    for (std::size_t t = 0; t < r; ++t) out.diagonal.push_back(out.D.at(t, t));
    return out;
}

std::vector<UPoly> invariant_factors(const PolyMatrix& M) { return smith_normal_form(M).diagonal; }

}  // namespace drinfeld
