#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "tenscan/matrix.hpp"
#include "tenscan/pencil.hpp"
#include "tenscan/poly.hpp"

namespace tenscan {

// An m x n x q array a[i][j][k]. Stored slice by slice: index (k, i, j) maps
// to k*m*n + i*n + j.
class SpatialMatrix {
 public:
  using Residue = PrimeField::Residue;

  SpatialMatrix(PrimeField field, std::size_t m, std::size_t n, std::size_t q);
  // Every slice must be m x n over `field`.
  SpatialMatrix(PrimeField field, std::size_t m, std::size_t n, const std::vector<Matrix>& slices);
  static SpatialMatrix from_pair(const MatrixPair& pair);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t q() const noexcept { return q_; }
  std::array<std::size_t, 3> dims() const noexcept { return {m_, n_, q_}; }
  bool is_zero() const noexcept;

  Residue operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(k * m_ + i) * n_ + j];
  }
  Residue& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(k * m_ + i) * n_ + j];
  }
  std::span<const Residue> entries() const noexcept { return data_; }

  // Horizontal slice A_k (m x n).
  Matrix slice(std::size_t k) const;
  std::vector<Matrix> slices() const;

  // The three slice families, one flattened slice per row:
  //   horizontal: q x (m n), row k holds A_k
  //   lateral:    n x (m q), row j holds the m x q slice with j fixed
  //   frontal:    m x (n q), row i holds the n x q slice with i fixed
  Matrix horizontal_family() const;
  Matrix lateral_family() const;
  Matrix frontal_family() const;

  // Leading m' x n' x q' corner.
  SpatialMatrix corner(std::size_t m, std::size_t n, std::size_t q) const;

  friend bool operator==(const SpatialMatrix&, const SpatialMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SpatialMatrix& a);

 private:
  PrimeField field_;
  std::size_t m_, n_, q_;
  std::vector<Residue> data_;
};

// Result axis a is source axis perm[a] (0 = m, 1 = n, 2 = q).
SpatialMatrix permute_axes(const SpatialMatrix& a, std::array<int, 3> perm);

// (R, S, T) acting by b_{i'j'k'} = sum a_{ijk} r_{ii'} s_{jj'} t_{kk'}.
struct TransformWitness {
  Matrix R;
  Matrix S;
  Matrix T;

  static TransformWitness identity(PrimeField field, std::size_t m, std::size_t n, std::size_t q);
  // Acting by the result equals acting by `first`, then by `then`.
  static TransformWitness compose(const TransformWitness& first, const TransformWitness& then);
  TransformWitness inverse() const;

  friend bool operator==(const TransformWitness&, const TransformWitness&) = default;
};

// Error(DimMismatch) for wrong sizes or fields, Error(SingularWitness) if a
// factor is not invertible.
SpatialMatrix apply_transform(const SpatialMatrix& a, const TransformWitness& w);
// b[.., x', ..] = sum_x a[.., x, ..] M(x, x') along one axis (0 = m, 1 = n,
// 2 = q). No invertibility check.
SpatialMatrix mode_product(const SpatialMatrix& a, const Matrix& M, int axis);
// C_k = R^T A_k S, then B_k = sum_i C_i t_{ik}.
SpatialMatrix two_step_realize(const SpatialMatrix& a, const Matrix& R, const Matrix& S,
                               const Matrix& T);

struct SliceRanks {
  std::size_t m = 0;  // rank of the frontal family
  std::size_t n = 0;  // rank of the lateral family
  std::size_t q = 0;  // rank of the horizontal family

  friend bool operator==(const SliceRanks&, const SliceRanks&) = default;
};

SliceRanks slice_ranks(const SpatialMatrix& a);
bool is_regular(const SpatialMatrix& a);

struct RegularPart {
  SpatialMatrix part;
  // apply_transform(a, witness) holds `part` in its leading corner, zeros
  // elsewhere.
  TransformWitness witness;
};

RegularPart regular_part(const SpatialMatrix& a);

// Minimal indices and finite elementary divisors of an m x n x 2 tensor with
// no infinite summands.
struct CanonicalSum {
  std::vector<std::size_t> right;
  std::vector<std::size_t> left;
  std::vector<Poly> finite;

  std::size_t rows() const;
  std::size_t cols() const;
  KroneckerForm as_kronecker() const;
  static CanonicalSum from_kronecker(const KroneckerForm& form);

  friend std::strong_ordering operator<=>(const CanonicalSum& a, const CanonicalSum& b);
  friend bool operator==(const CanonicalSum& a, const CanonicalSum& b) {
    return (a <=> b) == 0;
  }
};

SpatialMatrix synthesize_tensor(const CanonicalSum& sum, PrimeField field);

struct Theorem1Result {
  CanonicalSum sum;
  TransformWitness witness;  // maps the input to synthesize_tensor(sum)
};

// Error(WrongSliceCount) unless q == 2; Error(FieldTooSmall) when every slice
// mixing leaves an infinite summand.
Theorem1Result theorem1_form(const SpatialMatrix& a, std::uint64_t seed = kDefaultSeed);

struct MobiusMinimum {
  CanonicalSum sum;
  Mobius2x2 transform;  // first minimizing T in enumeration order
};

// Least image of `sum` under simultaneous Moebius replacement of its finite
// polynomials, over all of PGL_2(GF(p)). Error(FieldTooLargeForSearch) when
// p^3 - p exceeds kMobiusSearchLimit.
inline constexpr std::uint64_t kMobiusSearchLimit = 10'000'000;
MobiusMinimum mobius_orbit_minimize_with_transform(const CanonicalSum& sum, PrimeField field);
CanonicalSum mobius_orbit_minimize(const CanonicalSum& sum, PrimeField field);

struct Canonicalization {
  CanonicalSum label;
  SpatialMatrix target;      // synthesized label
  TransformWitness witness;  // maps the input to target
};

// q == 2: Moebius-minimized theorem1_form sum. q == 1: rank normal form, read
// as the pencil (A, 0). Error(WrongSliceCount) otherwise.
CanonicalSum canonical_label(const SpatialMatrix& a, std::uint64_t seed = kDefaultSeed);
Canonicalization canonicalize(const SpatialMatrix& a, std::uint64_t seed = kDefaultSeed);

struct Equivalence {
  bool equivalent = false;
  std::optional<TransformWitness> witness;  // maps a to b
};

// Compares labels of regular parts. Error(DimMismatch) for different dims or
// fields, Error(Unsupported) for regular parts with more than two slices.
Equivalence equivalent(const SpatialMatrix& a, const SpatialMatrix& b,
                       std::uint64_t seed = kDefaultSeed);

enum class RegularLabel {
  C1x1x1,
  C2x2x1,
  C2x1x2,
  C1x2x2,
  C3x2x2_a12,
  C3x2x2_a12a,
  C4x2x2,
  A,
  B,
};

std::string_view to_string(RegularLabel label);
std::optional<RegularLabel> regular_label_from_string(std::string_view name);

struct RegularClass22 {
  RegularLabel label;
  std::optional<FieldElem> param;  // A and B only, minimal in its orbit

  friend bool operator==(const RegularClass22&, const RegularClass22&) = default;
};

struct Classification {
  RegularClass22 cls;
  TransformWitness witness;  // maps the input to representative(cls)
};

// D(u, v) = || I_2 | [[0, v], [1, u]] ||.
SpatialMatrix d_tensor(FieldElem u, FieldElem v);
SpatialMatrix representative(const RegularClass22& cls, PrimeField field);
// Sorted orbit of the parameter of an A or B class.
std::vector<PrimeField::Residue> parameter_orbit(RegularLabel family, PrimeField::Residue v,
                                                 PrimeField field);
// Every class with minimal parameters, in listing order.
std::vector<RegularClass22> theorem2_catalog(PrimeField field);

// Error(NotRegular) with the slice-family ranks; Error(UnsupportedShape) for
// n > 2, q > 2 or the empty tensor.
Classification classify_regular(const SpatialMatrix& a, std::uint64_t seed = kDefaultSeed);

// Exhaustive search over projective (a : b : c : d). Error(FieldTooLargeForSearch)
// when p exceeds `search_bound`.
inline constexpr std::uint64_t kLemma2SearchBound = 13;
bool lemma2_equivalent(FieldElem u, FieldElem v, FieldElem u2, FieldElem v2,
                       std::uint64_t search_bound = kLemma2SearchBound);

}  // namespace tenscan
