#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tenscan/error.hpp"
#include "tenscan/matrix.hpp"
#include "tenscan/poly.hpp"

using namespace tenscan;
using namespace tenscan::testing;

TEST_CASE("prime field construction") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(2147483647));
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 31), Error);
}

TEST_CASE("field_inverse") {
  CHECK(field_inverse(FieldElem(PrimeField(5), 2)).value() == 3);
  CHECK(field_inverse(FieldElem(PrimeField(7), 3)).value() == 5);
  for (std::uint64_t p : {2, 3, 5, 7, 13, 2147483647}) {
    PrimeField f(p);
    CHECK(field_inverse(FieldElem(f, 1)).value() == 1);
  }
  try {
    field_inverse(FieldElem(PrimeField(5), 0));
    FAIL("expected ZeroInverse");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroInverse);
  }
  PrimeField big(2147483647);
  FieldElem a(big, 123456789);
  CHECK((a * a.inverse()).value() == 1);
}

TEST_CASE("primitive roots and squares") {
  CHECK(PrimeField(5).primitive_root() == 2);
  CHECK(PrimeField(7).primitive_root() == 3);
  PrimeField f5(5);
  CHECK(f5.is_square(1));
  CHECK(f5.is_square(4));
  CHECK_FALSE(f5.is_square(2));
  CHECK_FALSE(f5.is_square(3));
}

TEST_CASE("rref examples") {
  PrimeField f2(2);
  auto r = rref(Matrix(f2, {{0, 1}, {1, 0}}));
  CHECK(r.reduced == Matrix::identity(f2, 2));
  CHECK(r.rank == 2);
  CHECK(rref(Matrix(f2, {{1, 1}, {1, 1}})).rank == 1);

  PrimeField f3(3);
  auto z = rref(Matrix(f3, 3, 2));
  CHECK(z.reduced == Matrix(f3, 3, 2));
  CHECK(z.transform == Matrix::identity(f3, 3));
  CHECK(z.rank == 0);
}

TEST_CASE("inverse examples") {
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    for (std::size_t n = 0; n < 4; ++n) CHECK(inverse(Matrix::identity(f, n)) == Matrix::identity(f, n));
  }
  PrimeField f5(5);
  CHECK(inverse(Matrix(f5, {{0, 1}, {1, 0}})) == Matrix(f5, {{0, 1}, {1, 0}}));
  PrimeField f2(2);
  CHECK(inverse(Matrix(f2, {{1, 1}, {0, 1}})) == Matrix(f2, {{1, 1}, {0, 1}}));
  try {
    inverse(Matrix(f5, {{1, 2}, {2, 4}}));
    FAIL("expected Singular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
}

TEST_CASE("kernel_basis examples") {
  PrimeField f3(3);
  CHECK(kernel_basis(Matrix::identity(f3, 3)).cols() == 0);
  Matrix k = kernel_basis(Matrix(f3, 2, 3));
  CHECK(k.cols() == 3);
  CHECK(rank(k) == 3);
  PrimeField f2(2);
  CHECK(kernel_basis(Matrix(f2, {{1, 1}})) == Matrix(f2, {{1}, {1}}));
}

TEST_CASE("zero-dimensional matrices") {
  PrimeField f(5);
  Matrix a(f, 3, 0), b(f, 0, 2);
  CHECK((a * b) == Matrix(f, 3, 2));
  CHECK((b * Matrix(f, 2, 4)).rows() == 0);
  CHECK(rank(a) == 0);
  CHECK(kernel_basis(b).cols() == 2);
  CHECK(kernel_basis(a).cols() == 0);
  CHECK(inverse(Matrix(f, 0, 0)) == Matrix(f, 0, 0));
  CHECK(char_poly(Matrix(f, 0, 0)) == Poly::constant(f, 1));
}

TEST_CASE("char_poly examples") {
  PrimeField f5(5);
  // x^2 - u x - v with u = 1, v = 2
  Poly chi(f5, {-2, -1, 1});
  CHECK(char_poly(companion(chi)) == chi);
  CHECK(char_poly(Matrix(f5, {{0, 0}, {1, 0}})) == Poly(f5, {0, 0, 1}));
  CHECK(char_poly(Matrix::identity(f5, 2)) == Poly(f5, {1, 3, 1}));
}

TEST_CASE("char_poly matches Leibniz expansion") {
  Rng rng(11);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    PrimeField f(p);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = random_size(0, 5, rng);
      Matrix m = trial % 3 == 0 ? random_low_rank(f, n, n, n / 2, rng) : random_matrix(f, n, n, rng);
      CHECK(char_poly(m) == leibniz_char_poly(m));
    }
  }
}

TEST_CASE("linear algebra properties") {
  Rng rng(7);
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t rows = random_size(0, 6, rng), cols = random_size(0, 6, rng);
      Matrix m = trial % 2 ? random_matrix(f, rows, cols, rng)
                           : random_low_rank(f, rows, cols, random_size(0, 3, rng), rng);
      auto r = rref(m);
      CHECK(is_invertible(r.transform));
      CHECK(r.transform * m == r.reduced);
      CHECK(rank(m) == rank(m.transpose()));
      Matrix k = kernel_basis(m);
      CHECK(k.cols() == cols - r.rank);
      CHECK((m * k).is_zero());
      CHECK(rank(k) == k.cols());
    }
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = random_size(0, 6, rng);
      Matrix m = random_invertible(f, n, rng);
      Matrix inv = inverse(m);
      CHECK(m * inv == Matrix::identity(f, n));
      CHECK(inv * m == Matrix::identity(f, n));
      CHECK(inverse(inv) == m);
    }
  }
}

TEST_CASE("char_poly similarity invariance and block multiplicativity") {
  Rng rng(3);
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = random_size(1, 6, rng);
      Matrix m = random_matrix(f, n, n, rng);
      Matrix s = random_invertible(f, n, rng);
      CHECK(char_poly(s * m * inverse(s)) == char_poly(m));
      Matrix other = random_matrix(f, random_size(0, 4, rng), 0, rng);
      Matrix b = random_matrix(f, other.rows(), other.rows(), rng);
      CHECK(char_poly(block_diag(m, b)) == char_poly(m) * char_poly(b));
    }
  }
}

TEST_CASE("solve and complete_basis") {
  Rng rng(5);
  PrimeField f(3);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix a = random_low_rank(f, 4, 5, random_size(0, 4, rng), rng);
    Matrix x = random_matrix(f, 5, 2, rng);
    Matrix b = a * x;
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
  }
  CHECK_FALSE(solve(Matrix(f, {{1, 0}, {0, 0}}), Matrix(f, {{0}, {1}})).has_value());
  Matrix basis = complete_basis(Matrix(f, {{1}, {1}, {0}}));
  CHECK(basis.cols() == 3);
  CHECK(is_invertible(basis));
  CHECK(basis.block(0, 0, 3, 1) == Matrix(f, {{1}, {1}, {0}}));
}
