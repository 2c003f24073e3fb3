#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "idcert/arith/field.hpp"

namespace idcert {

/// Row-major dense matrix over an exact field.
template <class Field>
class DenseMatrix {
 public:
  using Element = typename Field::Element;

  explicit DenseMatrix(Field field = Field{}, std::size_t rows = 0, std::size_t cols = 0)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  /// All rows must have equal length.
  static DenseMatrix from_rows(Field field, const std::vector<std::vector<Element>>& rows);
  static DenseMatrix identity(Field field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Element> values);
  DenseMatrix transpose() const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <class Field>
struct RowEchelon {
  DenseMatrix<Field> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Over a prime field the row operations run on the SIMD
/// kernels; over the rationals plain Gauss-Jordan.
template <class Field>
RowEchelon<Field> rref(const DenseMatrix<Field>& m);

template <class Field>
std::size_t rank(const DenseMatrix<Field>& m) {
  return rref(m).rank;
}

/// Rows form a basis of {x : m * x^T = 0}, one row per non-pivot column.
template <class Field>
DenseMatrix<Field> kernel_basis(const DenseMatrix<Field>& m);

/// Nonzero rows of rref(m).
template <class Field>
DenseMatrix<Field> row_space_basis(const DenseMatrix<Field>& m);

/// Reduces an integer/rational matrix into a prime field.
DenseMatrix<PrimeField> reduce_mod(const DenseMatrix<RationalField>& m, const PrimeField& field);

extern template class DenseMatrix<RationalField>;
extern template class DenseMatrix<PrimeField>;
extern template RowEchelon<RationalField> rref(const DenseMatrix<RationalField>&);
extern template RowEchelon<PrimeField> rref(const DenseMatrix<PrimeField>&);
extern template DenseMatrix<RationalField> kernel_basis(const DenseMatrix<RationalField>&);
extern template DenseMatrix<PrimeField> kernel_basis(const DenseMatrix<PrimeField>&);
extern template DenseMatrix<RationalField> row_space_basis(const DenseMatrix<RationalField>&);
extern template DenseMatrix<PrimeField> row_space_basis(const DenseMatrix<PrimeField>&);

}  // namespace idcert
