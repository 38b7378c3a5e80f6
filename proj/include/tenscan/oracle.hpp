#pragma once

// Brute-force ground truth over tiny fields.

#include <array>
#include <cstdint>
#include <vector>

#include "tenscan/matrix.hpp"
#include "tenscan/spatial.hpp"

namespace tenscan::oracle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct GroupEnumeration {
  PrimeField field;
  std::size_t dim = 0;
  std::vector<Matrix> elements;  // lexicographic in row-major entries
};

// |GL_dim(GF(p))|.
std::uint64_t gl_order(std::size_t dim, std::uint64_t p);

// All invertible dim x dim matrices. Error(BudgetExceeded) if p^(dim^2)
// exceeds the budget.
GroupEnumeration enumerate_gl(std::size_t dim, PrimeField field,
                              std::uint64_t budget = kDefaultBudget);

// Enumerates the group factors of the two shorter axes and solves for the
// longest one (ties go to m): the remaining factor exists iff the unfoldings
// along that axis have equal row spaces. Error(DimMismatch) for different
// dims or fields, Error(BudgetExceeded) if the enumerated product exceeds the
// budget.
Equivalence oracle_equivalent(const SpatialMatrix& a, const SpatialMatrix& b,
                              std::uint64_t budget = kDefaultBudget);

// Entries read in storage order (k, i, j) as base-p digits, first entry most
// significant.
std::uint64_t tensor_index(const SpatialMatrix& a);
SpatialMatrix tensor_from_index(std::uint64_t index, PrimeField field,
                                std::array<std::size_t, 3> dims);

struct Orbit {
  std::uint64_t representative = 0;  // smallest tensor index in the orbit
  std::vector<std::uint64_t> members;  // sorted
};

// Closure under scalings by a primitive root and transvections I + E_ij on
// each axis. Orbits are listed by representative. Error(BudgetExceeded) if
// p^(m n q) exceeds the budget.
std::vector<Orbit> orbit_partition(std::array<std::size_t, 3> dims, PrimeField field,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace tenscan::oracle
