#pragma once

#include <cstddef>
#include <vector>

#include "hopffact/field.hpp"

namespace hopffact {

using Vec = std::vector<FieldElem>;

/// Dense matrix of exact field elements, row-major. All entries live in one
/// field and stay in canonical form.
class Matrix {
  public:
    Matrix() = default;
    Matrix(const Field& field, std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const FieldElem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec col(std::size_t c) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;
};

Matrix identity(const Field& field, std::size_t n);
Matrix operator*(const Matrix& a, const Matrix& b);
Vec mat_vec(const Matrix& m, const Vec& v);
bool is_identity(const Matrix& m);

struct RrefResult {
    Matrix rref;
    std::size_t rank = 0;
    std::vector<Vec> kernel;  // basis of the right null space
};

/// Exact reduced row echelon form with kernel basis. Every kernel vector is
/// re-checked to be annihilated by the input matrix.
RrefResult rref_and_kernel(const Field& field, const Matrix& m);

}  // namespace hopffact
