#include "tenscan/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tenscan/error.hpp"
#include "tenscan/poly.hpp"

namespace tenscan {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
}

std::string dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(PrimeField field,
               std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimMismatch, "ragged matrix literal");
    for (std::int64_t v : r) data_.push_back(field.reduce(v));
  }
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorKind::DimMismatch, "entry count does not match dimensions");
  for (auto& v : data_) v %= field.modulus();
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

std::vector<Matrix::Residue> Matrix::column(std::size_t j) const {
  std::vector<Residue> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_)
    throw Error(ErrorKind::DimMismatch, "block outside of " + dims(*this));
  Matrix b(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::scaled(Residue s) const {
  Matrix r = *this;
  for (auto& v : r.data_) v = field_.mul(v, s);
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::DimMismatch, "sum of " + dims(a) + " and " + dims(b));
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::DimMismatch, "difference of " + dims(a) + " and " + dims(b));
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::DimMismatch, "product of " + dims(a) + " and " + dims(b));
  const std::uint64_t p = a.field_.modulus();
  Matrix r(a.field_, a.rows_, b.cols_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * b(k, j)) % p;
    }
    for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = static_cast<Matrix::Residue>(acc[j]);
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << "] (" << m.rows() << 'x' << m.cols() << " mod " << m.field().modulus() << ')';
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimMismatch, "hstack row mismatch");
  Matrix r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimMismatch, "vstack column mismatch");
  Matrix r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

Matrix embed_leading(const Matrix& inner, std::size_t n) {
  if (!inner.is_square() || inner.rows() > n)
    throw Error(ErrorKind::DimMismatch, "cannot embed " + dims(inner) + " into " + std::to_string(n));
  return block_diag(inner, Matrix::identity(inner.field(), n - inner.rows()));
}

RrefResult rref(const Matrix& m) {
  const PrimeField& f = m.field();
  Matrix r = m;
  Matrix e = Matrix::identity(f, m.rows());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;

  auto swap_rows = [](Matrix& x, std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(i, j), x(k, j));
  };
  auto scale_row = [&f](Matrix& x, std::size_t i, Matrix::Residue s) {
    for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = f.mul(x(i, j), s);
  };
  // x[i] -= s * x[k]
  auto axpy_row = [&f](Matrix& x, std::size_t i, std::size_t k, Matrix::Residue s) {
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(k, j)) x(i, j) = f.sub(x(i, j), f.mul(s, x(k, j)));
  };

  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && r(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      swap_rows(r, piv, row);
      swap_rows(e, piv, row);
    }
    const auto s = f.inv(r(row, col));
    scale_row(r, row, s);
    scale_row(e, row, s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      const auto factor = r(i, col);
      axpy_row(r, i, row, factor);
      axpy_row(e, i, row, factor);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(e), row, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::Singular, "non-square matrix " + dims(m));
  auto res = rref(m);
  if (res.rank != m.rows()) throw Error(ErrorKind::Singular, "singular matrix " + dims(m));
  return std::move(res.transform);
}

Matrix kernel_basis(const Matrix& m) {
  const PrimeField& f = m.field();
  auto res = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivots) is_pivot[c] = true;
  Matrix k(f, m.cols(), m.cols() - res.rank);
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(free, out) = 1;
    for (std::size_t i = 0; i < res.rank; ++i)
      k(res.pivots[i], out) = f.neg(res.reduced(i, free));
    ++out;
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimMismatch, "solve: row mismatch");
  auto res = rref(hstack(a, b));
  for (std::size_t i = 0; i < res.rank; ++i)
    if (res.pivots[i] >= a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < res.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(res.pivots[i], j) = res.reduced(i, a.cols() + j);
  return x;
}

Matrix complete_basis(const Matrix& basis) {
  const std::size_t n = basis.rows();
  Matrix current = basis;
  std::size_t r = rank(current);
  if (r != basis.cols()) throw Error(ErrorKind::Singular, "complete_basis: dependent columns");
  for (std::size_t i = 0; i < n && current.cols() < n; ++i) {
    Matrix unit(basis.field(), n, 1);
    unit(i, 0) = 1;
    Matrix candidate = hstack(current, unit);
    if (rank(candidate) == current.cols() + 1) current = std::move(candidate);
  }
  return current;
}

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimMismatch, "char_poly of " + dims(m));
  const PrimeField& f = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const auto pinv = f.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h(r, j) == 0) continue;
      const auto factor = f.mul(h(r, j), pinv);
      for (std::size_t c = 0; c < n; ++c) h(r, c) = f.sub(h(r, c), f.mul(factor, h(j + 1, c)));
      for (std::size_t c = 0; c < n; ++c) h(c, j + 1) = f.add(h(c, j + 1), f.mul(factor, h(c, r)));
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod_{t=k-i+1..k} h_{t,t-1}) p_{k-i-1}
  // with 1-based indices.
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(f, 1));
  const Poly x = Poly::x(f);
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next = (x - Poly::constant(f, h(k - 1, k - 1))) * p[k - 1];
    Matrix::Residue prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = f.mul(prod, h(k - i, k - i - 1));
      if (prod == 0) break;
      const auto coef = f.mul(h(k - i - 1, k - 1), prod);
      next = next - p[k - i - 1].scaled(coef);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

}  // namespace tenscan
