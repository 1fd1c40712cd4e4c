#include "drinfeld/linalg.hpp"

namespace drinfeld {

namespace {

// Reduces A in place to reduced row echelon form; returns the pivot column of each pivot row.
// Columns at or beyond `limit` are carried along but never chosen as pivots.
std::vector<std::size_t> rref(const FieldTower& F, FqMatrix& A, std::size_t limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < limit && row < A.rows(); ++col) {
        std::size_t sel = row;
        while (sel < A.rows() && A.at(sel, col).code == 0) ++sel;
        if (sel == A.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A.at(sel, j), A.at(row, j));
        const Elem inv = F.inv(A.at(row, col));
        for (std::size_t j = 0; j < A.cols(); ++j) A.at(row, j) = F.mul(A.at(row, j), inv);
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == row || A.at(i, col).code == 0) continue;
            const Elem f = A.at(i, col);
            for (std::size_t j = 0; j < A.cols(); ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

LinearSolution solve(const FieldTower& F, FqMatrix A, std::vector<Elem> b) {
    const std::size_t n = A.cols();
    FqMatrix aug(A.rows(), n + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n) = b[i];
    }
    const auto pivots = rref(F, aug, n);
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
        if (aug.at(i, n).code != 0) return {LinearSolution::Kind::Inconsistent, {}};
    if (pivots.size() < n) return {LinearSolution::Kind::Underdetermined, {}};
    std::vector<Elem> x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, n);
    return {LinearSolution::Kind::Unique, std::move(x)};
}

std::vector<std::vector<Elem>> nullspace(const FieldTower& F, FqMatrix A) {
    const std::size_t n = A.cols();
    const auto pivots = rref(F, A, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(n, FieldTower::zero());
        v[free] = FieldTower::one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(A.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const FieldTower& F, FqMatrix A) { return rref(F, A, A.cols()).size(); }

}  // namespace drinfeld
