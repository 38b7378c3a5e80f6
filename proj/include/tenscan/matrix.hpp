#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "tenscan/field.hpp"

namespace tenscan {

class Poly;

// Dense row-major matrix over GF(p). Zero rows or zero columns are legal and
// stand for the maps 0 -> F^m and F^n -> 0.
class Matrix {
 public:
  using Residue = PrimeField::Residue;

  Matrix(PrimeField field, std::size_t rows, std::size_t cols);
  // Entries are reduced mod p; `rows` lists full rows.
  Matrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Residue> entries);

  static Matrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const noexcept;

  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Residue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElem at(std::size_t i, std::size_t j) const { return {field_, data_[i * cols_ + j]}; }

  std::span<const Residue> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const Residue> entries() const noexcept { return data_; }
  std::vector<Residue> column(std::size_t j) const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  Matrix scaled(Residue s) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
// Places `inner` in the leading corner of an n x n identity.
Matrix embed_leading(const Matrix& inner, std::size_t n);

struct RrefResult {
  Matrix reduced;                    // R
  Matrix transform;                  // E, invertible, E * M == R
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);
// Error(Singular) if rank deficient or non-square.
Matrix inverse(const Matrix& m);
// Columns form a basis of {x : M x = 0}.
Matrix kernel_basis(const Matrix& m);
// Some X with A X = B, or nullopt if the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
// Extends the linearly independent columns of `basis` to a basis of F^n using
// unit vectors; the given columns come first.
Matrix complete_basis(const Matrix& basis);
// Monic det(xI - M) via Hessenberg reduction.
Poly char_poly(const Matrix& m);

}  // namespace tenscan
