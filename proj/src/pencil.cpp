#include "tenscan/pencil.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tenscan/error.hpp"

namespace tenscan {

PencilBlock PencilBlock::right(std::size_t r) {
  if (r == 0) throw std::invalid_argument("minimal index must be >= 1");
  return {BlockKind::RightSingular, r, std::nullopt};
}

PencilBlock PencilBlock::left(std::size_t s) {
  if (s == 0) throw std::invalid_argument("minimal index must be >= 1");
  return {BlockKind::LeftSingular, s, std::nullopt};
}

PencilBlock PencilBlock::infinite(std::size_t l) {
  if (l == 0) throw std::invalid_argument("block size must be >= 1");
  return {BlockKind::Infinite, l, std::nullopt};
}

PencilBlock PencilBlock::finite(Poly chi) {
  if (chi.degree() < 1 || !chi.is_monic())
    throw Error(ErrorKind::NotMonic, "finite block needs a monic polynomial of degree >= 1");
  const auto l = static_cast<std::size_t>(chi.degree());
  return {BlockKind::Finite, l, std::move(chi)};
}

std::size_t PencilBlock::row_dim() const noexcept {
  return kind_ == BlockKind::RightSingular ? size_ - 1 : size_;
}

std::size_t PencilBlock::col_dim() const noexcept {
  return kind_ == BlockKind::LeftSingular ? size_ - 1 : size_;
}

std::strong_ordering operator<=>(const PencilBlock& a, const PencilBlock& b) {
  if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
  if (a.kind_ == BlockKind::Finite) return *a.chi_ <=> *b.chi_;
  return a.size_ <=> b.size_;
}

std::size_t KroneckerForm::rows() const {
  std::size_t r = 0;
  for (const auto& b : blocks) r += b.row_dim();
  return r;
}

std::size_t KroneckerForm::cols() const {
  std::size_t c = 0;
  for (const auto& b : blocks) c += b.col_dim();
  return c;
}

std::vector<std::size_t> KroneckerForm::sizes(BlockKind kind) const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks)
    if (b.kind() == kind) out.push_back(b.size());
  return out;
}

std::vector<Poly> KroneckerForm::finite_polys() const {
  std::vector<Poly> out;
  for (const auto& b : blocks)
    if (b.kind() == BlockKind::Finite) out.push_back(b.chi());
  return out;
}

MatrixPair block_matrices(const PencilBlock& block, PrimeField field) {
  const std::size_t k = block.size();
  switch (block.kind()) {
    case BlockKind::RightSingular:
    case BlockKind::LeftSingular: {
      Matrix f(field, k - 1, k), g(field, k - 1, k);
      for (std::size_t i = 0; i + 1 < k; ++i) {
        f(i, i) = 1;
        g(i, i + 1) = 1;
      }
      if (block.kind() == BlockKind::RightSingular) return {f, g};
      return {f.transpose(), g.transpose()};
    }
    case BlockKind::Infinite: {
      Matrix j(field, k, k);
      for (std::size_t i = 0; i + 1 < k; ++i) j(i + 1, i) = 1;
      return {j, Matrix::identity(field, k)};
    }
    case BlockKind::Finite:
      return {Matrix::identity(field, k), companion(block.chi())};
  }
  throw std::logic_error("unreachable block kind");
}

MatrixPair direct_sum(std::span<const MatrixPair> pairs, PrimeField field) {
  MatrixPair acc{Matrix(field, 0, 0), Matrix(field, 0, 0)};
  for (const auto& p : pairs) {
    acc.first = block_diag(acc.first, p.first);
    acc.second = block_diag(acc.second, p.second);
  }
  return acc;
}

MatrixPair synthesize(const KroneckerForm& form, PrimeField field) {
  std::vector<MatrixPair> parts;
  parts.reserve(form.blocks.size());
  for (const auto& b : form.blocks) parts.push_back(block_matrices(b, field));
  return direct_sum(parts, field);
}

namespace {

Matrix column_space_basis(const Matrix& m) {
  auto res = rref(m.transpose());
  return res.reduced.block(0, 0, res.rank, m.rows()).transpose();
}

// {x : M x in span(U)} for U with independent columns.
Matrix preimage(const Matrix& m, const Matrix& u) {
  Matrix joined = hstack(m, u.scaled(m.field().neg(1)));
  Matrix k = kernel_basis(joined);
  return k.block(0, 0, m.cols(), k.cols());
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("kronecker_form: ") + what);
}

}  // namespace

FrobeniusResult frobenius_form(const Matrix& a, std::uint64_t seed) {
  if (!a.is_square()) throw Error(ErrorKind::DimMismatch, "frobenius_form needs a square matrix");
  const PrimeField& f = a.field();
  const std::size_t n = a.rows();
  if (n == 0) return {{}, Matrix(f, 0, 0)};

  struct Cyclic {
    Poly divisor;
    Matrix vectors;
  };
  std::vector<Cyclic> cyclic;

  for (const auto& factor : factor_prime_powers(char_poly(a), seed)) {
    const Matrix g = eval_at(factor.base, a);
    const auto d = static_cast<std::size_t>(factor.base.degree());
    const std::size_t e = factor.exponent;

    std::vector<Matrix> kernels{Matrix(f, n, 0)};
    std::vector<Matrix> g_powers{Matrix::identity(f, n)};
    for (std::size_t k = 1; k <= e; ++k) {
      g_powers.push_back(g_powers.back() * g);
      kernels.push_back(kernel_basis(g_powers.back()));
    }

    // Greedy basis of ker g^k / ker g^(k-1) over F[x]/(base), top layer first.
    struct Generator {
      Matrix vec;
      std::size_t exponent;
    };
    std::vector<Generator> generators;
    for (std::size_t k = e; k >= 1; --k) {
      Matrix span = kernels[k - 1];
      auto add_orbit = [&](Matrix w) {
        for (std::size_t i = 0; i < d; ++i) {
          span = hstack(span, w);
          w = a * w;
        }
      };
      for (const auto& gen : generators) add_orbit(g_powers[gen.exponent - k] * gen.vec);
      std::size_t r = rank(span);
      const Matrix& layer = kernels[k];
      for (std::size_t j = 0; j < layer.cols(); ++j) {
        Matrix w = layer.block(0, j, n, 1);
        if (rank(hstack(span, w)) == r) continue;
        generators.push_back({w, k});
        add_orbit(w);
        r = rank(span);
      }
    }

    for (const auto& gen : generators) {
      const std::size_t len = d * gen.exponent;
      Matrix vectors(f, n, 0);
      Matrix w = gen.vec;
      for (std::size_t i = 0; i < len; ++i) {
        vectors = hstack(vectors, w);
        w = a * w;
      }
      cyclic.push_back({pow(factor.base, gen.exponent), std::move(vectors)});
    }
  }

  std::stable_sort(cyclic.begin(), cyclic.end(),
                   [](const Cyclic& x, const Cyclic& y) { return x.divisor < y.divisor; });
  FrobeniusResult out{{}, Matrix(f, n, 0)};
  for (auto& c : cyclic) {
    out.divisors.push_back(c.divisor);
    out.basis = hstack(out.basis, c.vectors);
  }
  if (!is_invertible(out.basis)) throw std::logic_error("frobenius_form: cyclic bases overlap");
  return out;
}

namespace {

// P * A_k * Q = diag(blocks..., rest_k).
struct Reduction {
  Matrix P;
  Matrix Q;
  std::vector<std::size_t> sizes;
  MatrixPair rest;
};

// Columns c_1..c_r with A2 c_1 = 0, A1 c_j = A2 c_{j+1}, A1 c_r = 0.
std::optional<Matrix> find_chain(const Matrix& a1, const Matrix& a2, std::size_t r) {
  const PrimeField& f = a1.field();
  const std::size_t m = a1.rows(), n = a1.cols();
  Matrix k(f, (r + 1) * m, r * n);
  auto put = [&](std::size_t brow, std::size_t bcol, const Matrix& src, bool negate) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        k(brow * m + i, bcol * n + j) = negate ? f.neg(src(i, j)) : src(i, j);
  };
  put(0, 0, a2, false);
  for (std::size_t j = 1; j < r; ++j) {
    put(j, j - 1, a1, false);
    put(j, j, a2, true);
  }
  put(r, r - 1, a1, false);
  Matrix ker = kernel_basis(k);
  if (ker.cols() == 0) return std::nullopt;
  Matrix chain(f, n, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) chain(i, j) = ker(j * n + i, 0);
  return chain;
}

// Solves F X + Y A1 = -D1, G X + Y A2 = -D2 for X (r x n'), Y ((r-1) x m').
std::pair<Matrix, Matrix> solve_coupling(const MatrixPair& fg, const MatrixPair& rest,
                                         const MatrixPair& coupling) {
  const PrimeField& f = fg.first.field();
  const std::size_t rows = fg.first.rows(), r = fg.first.cols();
  const std::size_t mm = rest.first.rows(), nn = rest.first.cols();
  const std::size_t unknowns = r * nn + rows * mm;
  Matrix sys(f, 2 * rows * nn, unknowns);
  Matrix rhs(f, 2 * rows * nn, 1);
  const Matrix* lead[2] = {&fg.first, &fg.second};
  const Matrix* tail[2] = {&rest.first, &rest.second};
  const Matrix* off[2] = {&coupling.first, &coupling.second};
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < nn; ++j) {
        const std::size_t eq = (k * rows + i) * nn + j;
        for (std::size_t l = 0; l < r; ++l) sys(eq, l * nn + j) = (*lead[k])(i, l);
        for (std::size_t l = 0; l < mm; ++l) sys(eq, r * nn + i * mm + l) = (*tail[k])(l, j);
        rhs(eq, 0) = f.neg((*off[k])(i, j));
      }
    }
  }
  auto sol = solve(sys, rhs);
  check(sol.has_value(), "singular block does not decouple");
  Matrix x(f, r, nn), y(f, rows, mm);
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j < nn; ++j) x(l, j) = (*sol)(l * nn + j, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t l = 0; l < mm; ++l) y(i, l) = (*sol)(r * nn + i * mm + l, 0);
  return {x, y};
}

// Splits off every (F_r, G_r) summand, smallest r first.
Reduction split_right_blocks(const Matrix& a1, const Matrix& a2) {
  const PrimeField& f = a1.field();
  const std::size_t m = a1.rows(), n = a1.cols();
  Reduction red{Matrix::identity(f, m), Matrix::identity(f, n), {}, {a1, a2}};
  std::size_t done_rows = 0, done_cols = 0;
  std::size_t r = 1;
  for (;;) {
    const Matrix& c1 = red.rest.first;
    const Matrix& c2 = red.rest.second;
    const std::size_t mm = c1.rows(), nn = c1.cols();
    std::optional<Matrix> chain;
    for (; r <= nn && !chain; ++r) chain = find_chain(c1, c2, r);
    if (!chain) break;
    --r;

    const Matrix lead_cols = chain->block(0, 0, nn, r - 1);
    const Matrix images = c1 * lead_cols;
    check(rank(*chain) == r, "chain vectors are dependent");
    check(rank(images) == r - 1, "chain images are dependent");
    Matrix qs = complete_basis(*chain);
    Matrix ps = inverse(complete_basis(images));

    Matrix t1 = ps * c1 * qs, t2 = ps * c2 * qs;
    const MatrixPair fg = block_matrices(PencilBlock::right(r), f);
    const std::size_t mr = mm - (r - 1), nr = nn - r;
    const MatrixPair tail{t1.block(r - 1, r, mr, nr), t2.block(r - 1, r, mr, nr)};
    const MatrixPair coupling{t1.block(0, r, r - 1, nr), t2.block(0, r, r - 1, nr)};
    auto [x, y] = solve_coupling(fg, tail, coupling);

    Matrix row_op = Matrix::identity(f, mm), col_op = Matrix::identity(f, nn);
    for (std::size_t i = 0; i < r - 1; ++i)
      for (std::size_t j = 0; j < mr; ++j) row_op(i, r - 1 + j) = y(i, j);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < nr; ++j) col_op(i, r + j) = x(i, j);
    ps = row_op * ps;
    qs = qs * col_op;
    t1 = ps * c1 * qs;
    t2 = ps * c2 * qs;
    check(t1 == block_diag(fg.first, tail.first) && t2 == block_diag(fg.second, tail.second),
          "right block not split off");

    red.P = block_diag(Matrix::identity(f, done_rows), ps) * red.P;
    red.Q = red.Q * block_diag(Matrix::identity(f, done_cols), qs);
    done_rows += r - 1;
    done_cols += r;
    red.sizes.push_back(r);
    red.rest = tail;
  }
  return red;
}

}  // namespace

KroneckerResult kronecker_form(const Matrix& a1, const Matrix& a2, std::uint64_t seed) {
  if (a1.rows() != a2.rows() || a1.cols() != a2.cols())
    throw Error(ErrorKind::DimMismatch, "pencil matrices differ in size");
  if (!(a1.field() == a2.field())) throw Error(ErrorKind::FieldMismatch, "pencil over two fields");
  const PrimeField& f = a1.field();
  const std::size_t m = a1.rows(), n = a1.cols();

  KroneckerForm form;
  Matrix P = Matrix::identity(f, m), Q = Matrix::identity(f, n);

  // Right singular part.
  Reduction right = split_right_blocks(a1, a2);
  for (auto r : right.sizes) form.blocks.push_back(PencilBlock::right(r));
  P = right.P;
  Q = right.Q;
  std::size_t done_rows = m - right.rest.first.rows();
  std::size_t done_cols = n - right.rest.first.cols();

  // Left singular part, via the transposed remainder.
  Reduction left = split_right_blocks(right.rest.first.transpose(), right.rest.second.transpose());
  for (auto s : left.sizes) form.blocks.push_back(PencilBlock::left(s));
  P = block_diag(Matrix::identity(f, done_rows), left.Q.transpose()) * P;
  Q = Q * block_diag(Matrix::identity(f, done_cols), left.P.transpose());
  const Matrix reg1 = left.rest.first.transpose();
  const Matrix reg2 = left.rest.second.transpose();
  done_rows = m - reg1.rows();
  done_cols = n - reg1.cols();
  check(reg1.is_square(), "regular remainder is not square");

  // Regular part: W* carries the infinite blocks, V* the finite ones.
  const std::size_t nr = reg1.rows();
  Matrix w(f, nr, 0);
  for (;;) {
    Matrix next = preimage(reg1, column_space_basis(reg2 * w));
    if (next.cols() == w.cols()) break;
    w = std::move(next);
  }
  Matrix v = Matrix::identity(f, nr);
  for (;;) {
    Matrix next = preimage(reg2, column_space_basis(reg1 * v));
    if (next.cols() == v.cols()) break;
    v = std::move(next);
  }
  const std::size_t ni = w.cols(), nf = v.cols();
  check(ni + nf == nr, "deflating subspaces do not span");
  const Matrix qr = hstack(w, v);
  const Matrix pr_inv = hstack(reg2 * w, reg1 * v);
  check(is_invertible(qr) && is_invertible(pr_inv), "regular part is singular");
  const Matrix pr = inverse(pr_inv);
  const Matrix t1 = pr * reg1 * qr, t2 = pr * reg2 * qr;
  const Matrix nil = t1.block(0, 0, ni, ni);
  const Matrix fin = t2.block(ni, ni, nf, nf);
  check(t1 == block_diag(nil, Matrix::identity(f, nf)) &&
            t2 == block_diag(Matrix::identity(f, ni), fin),
        "regular part does not split");

  FrobeniusResult inf_frob = frobenius_form(nil, seed);
  FrobeniusResult fin_frob = frobenius_form(fin, seed);
  for (const auto& d : inf_frob.divisors) {
    check(d == Poly::monomial(f, 1, static_cast<std::size_t>(d.degree())), "non-nilpotent infinite part");
    form.blocks.push_back(PencilBlock::infinite(static_cast<std::size_t>(d.degree())));
  }
  for (const auto& d : fin_frob.divisors) form.blocks.push_back(PencilBlock::finite(d));

  const Matrix row_reg = block_diag(inverse(inf_frob.basis), inverse(fin_frob.basis)) * pr;
  const Matrix col_reg = qr * block_diag(inf_frob.basis, fin_frob.basis);
  P = block_diag(Matrix::identity(f, done_rows), row_reg) * P;
  Q = Q * block_diag(Matrix::identity(f, done_cols), col_reg);

  check(std::is_sorted(form.blocks.begin(), form.blocks.end()), "blocks out of canonical order");
  const MatrixPair target = synthesize(form, f);
  check(P * a1 * Q == target.first && P * a2 * Q == target.second, "witness does not verify");
  return {std::move(form), {P.transpose(), Q}};
}

bool is_decomposable_pair(const Matrix& a1, const Matrix& a2) {
  return kronecker_form(a1, a2).form.blocks.size() >= 2;
}

}  // namespace tenscan
