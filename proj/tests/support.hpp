#pragma once

// Shared generators and slow reference routines for the test suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tenscan/matrix.hpp"
#include "tenscan/poly.hpp"

namespace tenscan::testing {

using Rng = std::mt19937_64;

inline PrimeField::Residue random_residue(const PrimeField& f, Rng& rng) {
  return std::uniform_int_distribution<std::uint32_t>(0, f.modulus() - 1)(rng);
}

inline std::size_t random_size(std::size_t lo, std::size_t hi, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Matrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_residue(f, rng);
  return m;
}

// Random matrix of at most the given rank (product of thin factors).
inline Matrix random_low_rank(const PrimeField& f, std::size_t rows, std::size_t cols,
                              std::size_t max_rank, Rng& rng) {
  return random_matrix(f, rows, max_rank, rng) * random_matrix(f, max_rank, cols, rng);
}

inline Matrix random_invertible(const PrimeField& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

inline Poly random_monic(const PrimeField& f, std::size_t degree, Rng& rng) {
  std::vector<PrimeField::Residue> c(degree + 1);
  for (auto& v : c) v = random_residue(f, rng);
  c[degree] = 1;
  return Poly(f, std::move(c));
}

// det(xI - M) by Leibniz expansion with polynomial entries.
inline Poly leibniz_char_poly(const Matrix& m) {
  const PrimeField& f = m.field();
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total(f);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly term = Poly::constant(f, 1);
    for (std::size_t i = 0; i < n; ++i) {
      Poly entry = Poly::constant(f, f.neg(m(i, perm[i])));
      if (perm[i] == i) entry = entry + Poly::x(f);
      term = term * entry;
    }
    total = (inversions % 2) ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace tenscan::testing
