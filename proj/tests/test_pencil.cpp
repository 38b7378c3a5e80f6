#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tenscan/error.hpp"
#include "tenscan/pencil.hpp"

using namespace tenscan;
using namespace tenscan::testing;

namespace {

void check_witness(const Matrix& a1, const Matrix& a2, const KroneckerResult& res) {
  const PrimeField& f = a1.field();
  MatrixPair target = synthesize(res.form, f);
  REQUIRE(res.witness.R.rows() == a1.rows());
  REQUIRE(res.witness.S.rows() == a1.cols());
  CHECK(is_invertible(res.witness.R));
  CHECK(is_invertible(res.witness.S));
  CHECK(res.witness.R.transpose() * a1 * res.witness.S == target.first);
  CHECK(res.witness.R.transpose() * a2 * res.witness.S == target.second);
  CHECK(res.form.rows() == a1.rows());
  CHECK(res.form.cols() == a1.cols());
  for (std::size_t i = 1; i < res.form.blocks.size(); ++i)
    CHECK(res.form.blocks[i - 1] <= res.form.blocks[i]);
  for (const auto& b : res.form.blocks) {
    CHECK(b.size() >= 1);
    if (b.kind() == BlockKind::Finite) CHECK(factor_prime_powers(b.chi()).size() == 1);
  }
}

// Pencils with a planted mix of block types, hidden by random conjugation.
MatrixPair planted_pencil(const PrimeField& f, Rng& rng) {
  std::vector<MatrixPair> parts;
  const std::size_t count = random_size(1, 3, rng);
  for (std::size_t i = 0; i < count; ++i) {
    switch (random_size(0, 3, rng)) {
      case 0: parts.push_back(block_matrices(PencilBlock::right(random_size(1, 3, rng)), f)); break;
      case 1: parts.push_back(block_matrices(PencilBlock::left(random_size(1, 3, rng)), f)); break;
      case 2: parts.push_back(block_matrices(PencilBlock::infinite(random_size(1, 2, rng)), f)); break;
      default: {
        Poly chi = random_monic(f, random_size(1, 2, rng), rng);
        parts.push_back({Matrix::identity(f, chi.degree()), companion(chi)});
      }
    }
  }
  MatrixPair sum = direct_sum(parts, f);
  Matrix r = random_invertible(f, sum.first.rows(), rng);
  Matrix s = random_invertible(f, sum.first.cols(), rng);
  return {r * sum.first * s, r * sum.second * s};
}

}  // namespace

TEST_CASE("block_matrices examples") {
  PrimeField f(5);
  auto r2 = block_matrices(PencilBlock::right(2), f);
  CHECK(r2.first == Matrix(f, {{1, 0}}));
  CHECK(r2.second == Matrix(f, {{0, 1}}));
  auto r1 = block_matrices(PencilBlock::right(1), f);
  CHECK(r1.first.rows() == 0);
  CHECK(r1.first.cols() == 1);
  CHECK(r1.second.rows() == 0);
  auto fin = block_matrices(PencilBlock::finite(Poly(f, {3, 4, 1})), f);
  CHECK(fin.first == Matrix::identity(f, 2));
  CHECK(fin.second == Matrix(f, {{0, 2}, {1, 1}}));
  auto l3 = block_matrices(PencilBlock::left(3), f);
  CHECK(l3.first == Matrix(f, {{1, 0}, {0, 1}, {0, 0}}));
  CHECK(l3.second == Matrix(f, {{0, 0}, {1, 0}, {0, 1}}));
  auto inf = block_matrices(PencilBlock::infinite(2), f);
  CHECK(inf.first == Matrix(f, {{0, 0}, {1, 0}}));
  CHECK(inf.second == Matrix::identity(f, 2));
}

TEST_CASE("direct_sum examples") {
  PrimeField f(5);
  auto empty = direct_sum({}, f);
  CHECK(empty.first.rows() == 0);
  CHECK(empty.first.cols() == 0);
  std::vector<MatrixPair> zero{block_matrices(PencilBlock::right(1), f),
                               block_matrices(PencilBlock::left(1), f)};
  auto z = direct_sum(zero, f);
  CHECK(z.first == Matrix(f, 1, 1));
  CHECK(z.second == Matrix(f, 1, 1));
  std::vector<MatrixPair> diag{{Matrix(f, {{1}}), Matrix(f, {{2}})},
                               {Matrix(f, {{1}}), Matrix(f, {{3}})}};
  auto d = direct_sum(diag, f);
  CHECK(d.first == Matrix::identity(f, 2));
  CHECK(d.second == Matrix(f, {{2, 0}, {0, 3}}));
}

TEST_CASE("kronecker_form examples") {
  PrimeField f5(5);
  auto zero = kronecker_form(Matrix(f5, 1, 1), Matrix(f5, 1, 1));
  REQUIRE(zero.form.blocks.size() == 2);
  CHECK(zero.form.blocks[0] == PencilBlock::right(1));
  CHECK(zero.form.blocks[1] == PencilBlock::left(1));
  check_witness(Matrix(f5, 1, 1), Matrix(f5, 1, 1), zero);

  Matrix f2(f5, {{1, 0}}), g2(f5, {{0, 1}});
  auto r2 = kronecker_form(f2, g2);
  REQUIRE(r2.form.blocks.size() == 1);
  CHECK(r2.form.blocks[0] == PencilBlock::right(2));
  check_witness(f2, g2, r2);

  for (std::int64_t lambda = 0; lambda < 5; ++lambda) {
    Matrix j(f5, {{lambda, 0}, {1, lambda}});
    auto res = kronecker_form(Matrix::identity(f5, 2), j);
    REQUIRE(res.form.blocks.size() == 1);
    Poly expected = pow(Poly(f5, {-lambda, 1}), 2);
    CHECK(res.form.blocks[0] == PencilBlock::finite(expected));
    CHECK(char_poly(j) == expected);
    check_witness(Matrix::identity(f5, 2), j, res);
  }

  auto empty = kronecker_form(Matrix(f5, 0, 0), Matrix(f5, 0, 0));
  CHECK(empty.form.blocks.empty());
  auto wide = kronecker_form(Matrix(f5, 0, 3), Matrix(f5, 0, 3));
  CHECK(wide.form.sizes(BlockKind::RightSingular) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("is_decomposable_pair examples") {
  PrimeField f5(5), f2(2);
  CHECK_FALSE(is_decomposable_pair(Matrix(f5, {{1, 0}}), Matrix(f5, {{0, 1}})));
  CHECK(is_decomposable_pair(Matrix::identity(f5, 2), Matrix(f5, {{0, 0}, {0, 1}})));
  CHECK_FALSE(is_decomposable_pair(Matrix::identity(f2, 2), companion(Poly(f2, {1, 1, 1}))));
  auto res = kronecker_form(Matrix::identity(f2, 2), companion(Poly(f2, {1, 1, 1})));
  REQUIRE(res.form.blocks.size() == 1);
  CHECK(res.form.blocks[0] == PencilBlock::finite(Poly(f2, {1, 1, 1})));
}

TEST_CASE("frobenius_form examples") {
  PrimeField f5(5);
  Poly chi(f5, {1, 2, 1});  // (x+1)^2
  auto c = frobenius_form(companion(chi));
  CHECK(c.divisors == std::vector<Poly>{chi});
  auto z = frobenius_form(Matrix(f5, 2, 2));
  CHECK(z.divisors == std::vector<Poly>{Poly(f5, {0, 1}), Poly(f5, {0, 1})});
  CHECK(is_invertible(z.basis));
  auto d = frobenius_form(Matrix(f5, {{1, 0}, {0, 2}}));
  CHECK(d.divisors == std::vector<Poly>{Poly(f5, {-1, 1}), Poly(f5, {-2, 1})});
}

TEST_CASE("frobenius_form properties") {
  Rng rng(31);
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = random_size(0, 6, rng);
      Matrix a = random_matrix(f, n, n, rng);
      if (trial % 3 == 0) {
        // Plant repeated elementary divisors.
        Matrix blk = random_matrix(f, n / 2, n / 2, rng);
        Matrix d = block_diag(blk, blk);
        if (d.rows() < n) d = block_diag(d, random_matrix(f, n - d.rows(), n - d.rows(), rng));
        Matrix s = random_invertible(f, n, rng);
        a = s * d * inverse(s);
      }
      auto res = frobenius_form(a);
      REQUIRE(is_invertible(res.basis));
      Matrix expected(f, 0, 0);
      Poly product = Poly::constant(f, 1);
      for (std::size_t i = 0; i < res.divisors.size(); ++i) {
        expected = block_diag(expected, companion(res.divisors[i]));
        product = product * res.divisors[i];
        CHECK(factor_prime_powers(res.divisors[i]).size() == 1);
        if (i) CHECK(res.divisors[i - 1] <= res.divisors[i]);
      }
      CHECK(inverse(res.basis) * a * res.basis == expected);
      CHECK(product == char_poly(a));
      Matrix s = random_invertible(f, n, rng);
      CHECK(frobenius_form(s * a * inverse(s)).divisors == res.divisors);
    }
  }
}

TEST_CASE("kronecker_form on random pencils") {
  Rng rng(41);
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t m = random_size(0, 6, rng), n = random_size(0, 6, rng);
      Matrix a1(f, 0, 0), a2(f, 0, 0);
      switch (trial % 4) {
        case 0:
          a1 = random_matrix(f, m, n, rng);
          a2 = random_matrix(f, m, n, rng);
          break;
        case 1:
          a1 = random_low_rank(f, m, n, random_size(0, 3, rng), rng);
          a2 = random_low_rank(f, m, n, random_size(0, 3, rng), rng);
          break;
        case 2:
          a1 = random_low_rank(f, m, n, random_size(0, 2, rng), rng);
          a2 = random_matrix(f, m, n, rng);
          break;
        default: {
          auto pair = planted_pencil(f, rng);
          a1 = pair.first;
          a2 = pair.second;
        }
      }
      auto res = kronecker_form(a1, a2);
      check_witness(a1, a2, res);

      Matrix r = random_invertible(f, a1.rows(), rng);
      Matrix s = random_invertible(f, a1.cols(), rng);
      auto conj = kronecker_form(r * a1 * s, r * a2 * s);
      CHECK(conj.form == res.form);

      MatrixPair canon = synthesize(res.form, f);
      CHECK(kronecker_form(canon.first, canon.second).form == res.form);
      CHECK(is_decomposable_pair(a1, a2) == (res.form.blocks.size() >= 2));
    }
  }
}
