#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tenscan/matrix.hpp"
#include "tenscan/poly.hpp"

namespace tenscan {

struct MatrixPair {
  Matrix first;
  Matrix second;

  friend bool operator==(const MatrixPair&, const MatrixPair&) = default;
};

enum class BlockKind { RightSingular, LeftSingular, Infinite, Finite };

// One indecomposable summand of a pencil:
//   RightSingular(r): (F_r, G_r), (r-1) x r
//   LeftSingular(s):  (F_s^T, G_s^T), s x (s-1)
//   Infinite(l):      (J_l(0), I_l)
//   Finite(chi):      (I_l, Phi_chi), chi a monic prime power of degree l
class PencilBlock {
 public:
  static PencilBlock right(std::size_t r);
  static PencilBlock left(std::size_t s);
  static PencilBlock infinite(std::size_t l);
  static PencilBlock finite(Poly chi);

  BlockKind kind() const noexcept { return kind_; }
  // r, s or l.
  std::size_t size() const noexcept { return size_; }
  const Poly& chi() const { return *chi_; }

  std::size_t row_dim() const noexcept;
  std::size_t col_dim() const noexcept;

  // Right < Left < Infinite < Finite; by size within the singular and
  // infinite kinds, by the canonical polynomial order for Finite.
  friend std::strong_ordering operator<=>(const PencilBlock& a, const PencilBlock& b);
  friend bool operator==(const PencilBlock& a, const PencilBlock& b) {
    return (a <=> b) == 0;
  }

 private:
  PencilBlock(BlockKind kind, std::size_t size, std::optional<Poly> chi)
      : kind_(kind), size_(size), chi_(std::move(chi)) {}

  BlockKind kind_;
  std::size_t size_;
  std::optional<Poly> chi_;
};

struct KroneckerForm {
  std::vector<PencilBlock> blocks;  // canonical order

  std::size_t rows() const;
  std::size_t cols() const;
  std::vector<std::size_t> sizes(BlockKind kind) const;
  std::vector<Poly> finite_polys() const;
  friend bool operator==(const KroneckerForm&, const KroneckerForm&) = default;
};

// R^T A_k S equals the synthesized canonical pair.
struct PairWitness {
  Matrix R;
  Matrix S;
};

struct KroneckerResult {
  KroneckerForm form;
  PairWitness witness;
};

struct FrobeniusResult {
  std::vector<Poly> divisors;  // elementary divisors, canonical order
  Matrix basis;                // P with P^{-1} A P = Phi_1 (+) ... (+) Phi_q
};

MatrixPair block_matrices(const PencilBlock& block, PrimeField field);
MatrixPair direct_sum(std::span<const MatrixPair> pairs, PrimeField field);
MatrixPair synthesize(const KroneckerForm& form, PrimeField field);

FrobeniusResult frobenius_form(const Matrix& a, std::uint64_t seed = kDefaultSeed);
KroneckerResult kronecker_form(const Matrix& a1, const Matrix& a2,
                               std::uint64_t seed = kDefaultSeed);
bool is_decomposable_pair(const Matrix& a1, const Matrix& a2);

}  // namespace tenscan
