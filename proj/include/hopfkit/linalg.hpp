#pragma once

#include <optional>
#include <vector>

#include "hopfkit/tensor.hpp"

namespace hopfkit {

// Dense row-major matrix used for elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit Matrix(const LinearMap& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  LinearMap to_linear_map() const;
  // Stacks the rows of o below this matrix.
  void append_rows(const Matrix& o);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);
std::size_t rank(const LinearMap& m);
// Null-space basis; one vector per free column, in increasing column order,
// with a 1 in that column.
std::vector<Vec> kernel_basis(const Matrix& m);
std::vector<Vec> kernel_basis(const LinearMap& m);
LinearMap matrix_inverse(const LinearMap& m);
// Some x with A x = b, or nothing.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Polynomials as coefficient lists, constant term first.
using Poly = std::vector<Scalar>;
Poly charpoly(const Matrix& m);
Scalar eval(const Poly& p, const Scalar& x);
// Every root of p lying in the given field, sorted and without repetition.
std::vector<Scalar> roots_in_field(const Poly& p, const FieldSpec& field);

}  // namespace hopfkit
