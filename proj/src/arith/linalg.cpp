#include "idcert/arith/linalg.hpp"

#include <utility>

#include "idcert/errors.hpp"
#include "idcert/kernels/modp_kernels.hpp"

namespace idcert {

template <class Field>
DenseMatrix<Field> DenseMatrix<Field>::from_rows(Field field,
                                                 const std::vector<std::vector<Element>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(field, 0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DomainError("ragged rows in matrix literal");
    m.append_row(r);
  }
  return m;
}

template <class Field>
DenseMatrix<Field> DenseMatrix<Field>::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <class Field>
void DenseMatrix<Field>::append_row(std::span<const Element> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw DomainError("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

template <class Field>
DenseMatrix<Field> DenseMatrix<Field>::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

namespace {

RowEchelon<RationalField> rref_rational(const DenseMatrix<RationalField>& m) {
  RowEchelon<RationalField> out{m, 0, {}};
  auto& a = out.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  mpq_class factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // cheapest pivot keeps coefficient growth down
    std::size_t best = rows;
    std::size_t best_size = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      std::size_t size = mpz_sizeinbase(a(i, c).get_num_mpz_t(), 2) +
                         mpz_sizeinbase(a(i, c).get_den_mpz_t(), 2);
      if (best == rows || size < best_size) {
        best = i;
        best_size = size;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(best, j), a(r, j));
    const mpq_class inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(a(r, j)) != 0) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

RowEchelon<PrimeField> rref_prime(const DenseMatrix<PrimeField>& m) {
  const auto& kern = kernels::modp_kernels();
  const std::uint32_t p = m.field().characteristic();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).value();

  RowEchelon<PrimeField> out{DenseMatrix<PrimeField>(m.field(), rows, cols), 0, {}};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
    std::uint32_t* pivot_row = a.data() + r * cols;
    const std::uint32_t inv = ModP(pivot_row[c], p).inverse().value();
    kern.scale(pivot_row + c, cols - c, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      std::uint32_t* row = a.data() + i * cols;
      if (i == r || row[c] == 0) continue;
      kern.axpy(row + c, pivot_row + c, cols - c, p - row[c], p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.reduced(i, j) = ModP(a[i * cols + j], p);
  return out;
}

}  // namespace

template <class Field>
RowEchelon<Field> rref(const DenseMatrix<Field>& m) {
  if constexpr (std::is_same_v<Field, PrimeField>) {
    return rref_prime(m);
  } else {
    return rref_rational(m);
  }
}

template <class Field>
DenseMatrix<Field> kernel_basis(const DenseMatrix<Field>& m) {
  const auto ech = rref(m);
  const Field& f = m.field();
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  DenseMatrix<Field> basis(f, cols - ech.rank, cols);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(k, free) = f.one();
    for (std::size_t i = 0; i < ech.rank; ++i) basis(k, ech.pivots[i]) = -ech.reduced(i, free);
    ++k;
  }
  return basis;
}

template <class Field>
DenseMatrix<Field> row_space_basis(const DenseMatrix<Field>& m) {
  const auto ech = rref(m);
  DenseMatrix<Field> basis(m.field(), 0, m.cols());
  for (std::size_t i = 0; i < ech.rank; ++i) basis.append_row(ech.reduced.row(i));
  return basis;
}

DenseMatrix<PrimeField> reduce_mod(const DenseMatrix<RationalField>& m, const PrimeField& field) {
  DenseMatrix<PrimeField> out(field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field.from_rational(m(i, j));
  return out;
}

template class DenseMatrix<RationalField>;
template class DenseMatrix<PrimeField>;
template RowEchelon<RationalField> rref(const DenseMatrix<RationalField>&);
template RowEchelon<PrimeField> rref(const DenseMatrix<PrimeField>&);
template DenseMatrix<RationalField> kernel_basis(const DenseMatrix<RationalField>&);
template DenseMatrix<PrimeField> kernel_basis(const DenseMatrix<PrimeField>&);
template DenseMatrix<RationalField> row_space_basis(const DenseMatrix<RationalField>&);
template DenseMatrix<PrimeField> row_space_basis(const DenseMatrix<PrimeField>&);

}  // namespace idcert
