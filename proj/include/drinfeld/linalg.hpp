#pragma once

// Dense Gaussian elimination over F_q. Entries are F_q codes; arithmetic is
// taken from any tower whose base field is F_q.

#include <cstddef>
#include <vector>

#include "drinfeld/field.hpp"

namespace drinfeld {

class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Elem& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    [[nodiscard]] Elem at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> d_;
};

struct LinearSolution {
    enum class Kind { Unique, Inconsistent, Underdetermined };
    Kind kind = Kind::Inconsistent;
    std::vector<Elem> x;  // populated for Unique
};

/// Solves A·x = b.
LinearSolution solve(const FieldTower& F, FqMatrix A, std::vector<Elem> b);
/// Basis of {x : A·x = 0}, in reduced form (one free variable set to 1 per vector).
std::vector<std::vector<Elem>> nullspace(const FieldTower& F, FqMatrix A);
std::size_t rank(const FieldTower& F, FqMatrix A);

}  // namespace drinfeld
