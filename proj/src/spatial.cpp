#include "tenscan/spatial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tenscan/error.hpp"

namespace tenscan {

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal check failed: ") + what);
}

nlohmann::json dims_json(const SpatialMatrix& a) { return {a.m(), a.n(), a.q()}; }

void check_witness_shape(const SpatialMatrix& a, const TransformWitness& w) {
  const Matrix* mats[3] = {&w.R, &w.S, &w.T};
  const auto d = a.dims();
  for (int axis = 0; axis < 3; ++axis) {
    const Matrix& M = *mats[axis];
    if (M.rows() != d[axis] || M.cols() != d[axis] || !(M.field() == a.field()))
      throw Error(ErrorKind::DimMismatch, "witness does not match the tensor dimensions",
                  {{"dims", dims_json(a)}, {"axis", axis}, {"rows", M.rows()}, {"cols", M.cols()}});
  }
  for (int axis = 0; axis < 3; ++axis)
    if (!is_invertible(*mats[axis]))
      throw Error(ErrorKind::SingularWitness, "witness matrix is singular", {{"axis", axis}});
}

TransformWitness pad(const TransformWitness& w, std::size_t m, std::size_t n, std::size_t q) {
  const PrimeField& f = w.R.field();
  return {block_diag(w.R, Matrix::identity(f, m - w.R.rows())),
          block_diag(w.S, Matrix::identity(f, n - w.S.rows())),
          block_diag(w.T, Matrix::identity(f, q - w.T.rows()))};
}

TransformWitness mixing(const PrimeField& f, std::size_t m, std::size_t n, const Matrix& T) {
  return {Matrix::identity(f, m), Matrix::identity(f, n), T};
}

PencilBlock to_block(const Poly& chi) { return PencilBlock::finite(chi); }

bool is_power_of_linear(const Poly& chi, const Poly& linear) {
  return chi == pow(linear, static_cast<std::size_t>(chi.degree()));
}

}  // namespace

// ---------------------------------------------------------------------------
// SpatialMatrix

SpatialMatrix::SpatialMatrix(PrimeField field, std::size_t m, std::size_t n, std::size_t q)
    : field_(field), m_(m), n_(n), q_(q), data_(m * n * q, 0) {}

SpatialMatrix::SpatialMatrix(PrimeField field, std::size_t m, std::size_t n,
                             const std::vector<Matrix>& slices)
    : SpatialMatrix(field, m, n, slices.size()) {
  for (std::size_t k = 0; k < q_; ++k) {
    const Matrix& s = slices[k];
    if (s.rows() != m || s.cols() != n || !(s.field() == field))
      throw Error(ErrorKind::DimMismatch, "slice has the wrong size or field",
                  {{"slice", k}, {"rows", s.rows()}, {"cols", s.cols()}});
    std::copy(s.entries().begin(), s.entries().end(), data_.begin() + k * m * n);
  }
}

SpatialMatrix SpatialMatrix::from_pair(const MatrixPair& pair) {
  return SpatialMatrix(pair.first.field(), pair.first.rows(), pair.first.cols(),
                       {pair.first, pair.second});
}

bool SpatialMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

Matrix SpatialMatrix::slice(std::size_t k) const {
  auto first = data_.begin() + k * m_ * n_;
  return Matrix(field_, m_, n_, std::vector<Residue>(first, first + m_ * n_));
}

std::vector<Matrix> SpatialMatrix::slices() const {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < q_; ++k) out.push_back(slice(k));
  return out;
}

Matrix SpatialMatrix::horizontal_family() const {
  return Matrix(field_, q_, m_ * n_, data_);
}

Matrix SpatialMatrix::lateral_family() const {
  Matrix out(field_, n_, m_ * q_);
  for (std::size_t k = 0; k < q_; ++k)
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(j, i * q_ + k) = (*this)(i, j, k);
  return out;
}

Matrix SpatialMatrix::frontal_family() const {
  Matrix out(field_, m_, n_ * q_);
  for (std::size_t k = 0; k < q_; ++k)
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j * q_ + k) = (*this)(i, j, k);
  return out;
}

SpatialMatrix SpatialMatrix::corner(std::size_t m, std::size_t n, std::size_t q) const {
  SpatialMatrix out(field_, m, n, q);
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j, k) = (*this)(i, j, k);
  return out;
}

std::ostream& operator<<(std::ostream& os, const SpatialMatrix& a) {
  os << a.m() << 'x' << a.n() << 'x' << a.q() << " {";
  for (std::size_t k = 0; k < a.q(); ++k) os << (k ? " | " : "") << a.slice(k);
  return os << '}';
}

SpatialMatrix permute_axes(const SpatialMatrix& a, std::array<int, 3> perm) {
  std::array<int, 3> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2})
    throw Error(ErrorKind::DimMismatch, "not a permutation of the three axes");
  const auto d = a.dims();
  SpatialMatrix b(a.field(), d[perm[0]], d[perm[1]], d[perm[2]]);
  for (std::size_t k = 0; k < a.q(); ++k)
    for (std::size_t i = 0; i < a.m(); ++i)
      for (std::size_t j = 0; j < a.n(); ++j) {
        const std::size_t idx[3] = {i, j, k};
        b(idx[perm[0]], idx[perm[1]], idx[perm[2]]) = a(i, j, k);
      }
  return b;
}

// ---------------------------------------------------------------------------
// Witnesses and the action

SpatialMatrix mode_product(const SpatialMatrix& a, const Matrix& M, int axis) {
  const PrimeField& f = a.field();
  SpatialMatrix b(f, a.m(), a.n(), a.q());
  const auto d = a.dims();
  for (std::size_t k = 0; k < d[2]; ++k)
    for (std::size_t i = 0; i < d[0]; ++i)
      for (std::size_t j = 0; j < d[1]; ++j) {
        const auto v = a(i, j, k);
        if (v == 0) continue;
        const std::size_t idx[3] = {i, j, k};
        const std::size_t x = idx[axis];
        for (std::size_t y = 0; y < d[axis]; ++y) {
          const auto coef = M(x, y);
          if (coef == 0) continue;
          std::size_t out[3] = {i, j, k};
          out[axis] = y;
          auto& cell = b(out[0], out[1], out[2]);
          cell = f.add(cell, f.mul(v, coef));
        }
      }
  return b;
}

TransformWitness TransformWitness::identity(PrimeField field, std::size_t m, std::size_t n,
                                            std::size_t q) {
  return {Matrix::identity(field, m), Matrix::identity(field, n), Matrix::identity(field, q)};
}

TransformWitness TransformWitness::compose(const TransformWitness& first,
                                           const TransformWitness& then) {
  return {first.R * then.R, first.S * then.S, first.T * then.T};
}

TransformWitness TransformWitness::inverse() const {
  return {tenscan::inverse(R), tenscan::inverse(S), tenscan::inverse(T)};
}

SpatialMatrix apply_transform(const SpatialMatrix& a, const TransformWitness& w) {
  check_witness_shape(a, w);
  return mode_product(mode_product(mode_product(a, w.R, 0), w.S, 1), w.T, 2);
}

SpatialMatrix two_step_realize(const SpatialMatrix& a, const Matrix& R, const Matrix& S,
                               const Matrix& T) {
  check_witness_shape(a, {R, S, T});
  const PrimeField& f = a.field();
  const Matrix Rt = R.transpose();
  std::vector<Matrix> c;
  for (std::size_t k = 0; k < a.q(); ++k) c.push_back(Rt * a.slice(k) * S);
  std::vector<Matrix> b;
  for (std::size_t k = 0; k < a.q(); ++k) {
    Matrix sum(f, a.m(), a.n());
    for (std::size_t i = 0; i < a.q(); ++i) sum = sum + c[i].scaled(T(i, k));
    b.push_back(std::move(sum));
  }
  return SpatialMatrix(f, a.m(), a.n(), b);
}

// ---------------------------------------------------------------------------
// Regularity

SliceRanks slice_ranks(const SpatialMatrix& a) {
  return {rank(a.frontal_family()), rank(a.lateral_family()), rank(a.horizontal_family())};
}

bool is_regular(const SpatialMatrix& a) {
  return slice_ranks(a) == SliceRanks{a.m(), a.n(), a.q()};
}

RegularPart regular_part(const SpatialMatrix& a) {
  const PrimeField& f = a.field();
  // Each reduction makes the leading slices of one family independent and the
  // rest zero; later reductions act injectively on the other families.
  auto ht = rref(a.horizontal_family());
  Matrix T = ht.transform.transpose();
  SpatialMatrix b = mode_product(a, T, 2);
  auto lt = rref(b.lateral_family());
  Matrix S = lt.transform.transpose();
  b = mode_product(b, S, 1);
  auto ft = rref(b.frontal_family());
  Matrix R = ft.transform.transpose();
  b = mode_product(b, R, 0);

  TransformWitness w{R, S, T};
  check(apply_transform(a, w) == b, "regular-part witness");
  SpatialMatrix part = b.corner(ft.rank, lt.rank, ht.rank);
  SpatialMatrix padded(f, a.m(), a.n(), a.q());
  for (std::size_t k = 0; k < part.q(); ++k)
    for (std::size_t i = 0; i < part.m(); ++i)
      for (std::size_t j = 0; j < part.n(); ++j) padded(i, j, k) = part(i, j, k);
  check(padded == b, "regular part must fill the corner");
  check(is_regular(part), "regular part must be regular");
  return {std::move(part), std::move(w)};
}

// ---------------------------------------------------------------------------
// Canonical sums

std::size_t CanonicalSum::rows() const {
  std::size_t total = 0;
  for (auto r : right) total += r - 1;
  for (auto s : left) total += s;
  for (const auto& chi : finite) total += chi.degree();
  return total;
}

std::size_t CanonicalSum::cols() const {
  std::size_t total = 0;
  for (auto r : right) total += r;
  for (auto s : left) total += s - 1;
  for (const auto& chi : finite) total += chi.degree();
  return total;
}

KroneckerForm CanonicalSum::as_kronecker() const {
  KroneckerForm form;
  for (auto r : right) form.blocks.push_back(PencilBlock::right(r));
  for (auto s : left) form.blocks.push_back(PencilBlock::left(s));
  for (const auto& chi : finite) form.blocks.push_back(to_block(chi));
  return form;
}

CanonicalSum CanonicalSum::from_kronecker(const KroneckerForm& form) {
  check(form.sizes(BlockKind::Infinite).empty(), "canonical sums have no infinite blocks");
  return {form.sizes(BlockKind::RightSingular), form.sizes(BlockKind::LeftSingular),
          form.finite_polys()};
}

std::strong_ordering operator<=>(const CanonicalSum& a, const CanonicalSum& b) {
  if (auto c = a.right <=> b.right; c != 0) return c;
  if (auto c = a.left <=> b.left; c != 0) return c;
  return std::lexicographical_compare_three_way(a.finite.begin(), a.finite.end(),
                                                b.finite.begin(), b.finite.end());
}

SpatialMatrix synthesize_tensor(const CanonicalSum& sum, PrimeField field) {
  return SpatialMatrix::from_pair(synthesize(sum.as_kronecker(), field));
}

// ---------------------------------------------------------------------------
// Slice mixing and the two-slice normal form

Theorem1Result theorem1_form(const SpatialMatrix& a, std::uint64_t seed) {
  if (a.q() != 2)
    throw Error(ErrorKind::WrongSliceCount, "expected exactly two horizontal slices",
                {{"dims", dims_json(a)}});
  const PrimeField& f = a.field();
  auto kron = kronecker_form(a.slice(0), a.slice(1), seed);
  if (kron.form.sizes(BlockKind::Infinite).empty())
    return {CanonicalSum::from_kronecker(kron.form),
            {kron.witness.R, kron.witness.S, Matrix::identity(f, 2)}};

  // Infinite summands (J, I) become finite after a slice mixing that keeps
  // every finite summand (I, Phi) regular. Swapping works unless some chi is
  // a power of x; otherwise mix B_1 + b B_2 with I + b Phi nonsingular, which
  // fails exactly when chi = (x + 1/b)^l.
  const auto finite = kron.form.finite_polys();
  const Poly x = Poly::x(f);
  std::optional<Matrix> T;
  if (std::none_of(finite.begin(), finite.end(),
                   [&](const Poly& chi) { return is_power_of_linear(chi, x); })) {
    T = Matrix(f, {{0, 1}, {1, 0}});
  } else {
    for (PrimeField::Residue b = 1; b < f.modulus() && !T; ++b) {
      const Poly linear(f, std::vector<PrimeField::Residue>{f.inv(b), 1});
      if (std::none_of(finite.begin(), finite.end(),
                       [&](const Poly& chi) { return is_power_of_linear(chi, linear); }))
        T = Matrix(f, 2, 2, {1, 0, b, 1});
    }
  }
  if (!T) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& blk : kron.form.blocks) {
      switch (blk.kind()) {
        case BlockKind::RightSingular: blocks.push_back({{"right", blk.size()}}); break;
        case BlockKind::LeftSingular: blocks.push_back({{"left", blk.size()}}); break;
        case BlockKind::Infinite: blocks.push_back({{"inf", blk.size()}}); break;
        case BlockKind::Finite: {
          auto c = blk.chi().coeffs();
          blocks.push_back({{"finite", std::vector<PrimeField::Residue>(c.begin(), c.end())}});
        }
      }
    }
    throw Error(ErrorKind::FieldTooSmall,
                "every slice mixing leaves an infinite summand; the field is too small",
                {{"p", f.modulus()}, {"dims", dims_json(a)}, {"blocks", blocks}});
  }

  SpatialMatrix mixed = mode_product(a, *T, 2);
  auto again = kronecker_form(mixed.slice(0), mixed.slice(1), seed);
  check(again.form.sizes(BlockKind::Infinite).empty(), "slice mixing removes infinite blocks");
  return {CanonicalSum::from_kronecker(again.form), {again.witness.R, again.witness.S, *T}};
}

MobiusMinimum mobius_orbit_minimize_with_transform(const CanonicalSum& sum, PrimeField field) {
  MobiusMinimum best{sum, Mobius2x2(field, 1, 0, 0, 1)};
  if (sum.finite.empty()) return best;
  const std::uint64_t p = field.modulus();
  if (p > 1000 || p * p * p - p > kMobiusSearchLimit)
    throw Error(ErrorKind::FieldTooLargeForSearch, "PGL_2 enumeration is too large",
                {{"p", p}, {"limit", kMobiusSearchLimit}});

  // Projective representatives: the first nonzero entry of (a, b, c, d) is 1.
  std::vector<Poly> image;
  for (std::uint64_t a = 0; a <= 1; ++a)
    for (std::uint64_t b = 0; b < p; ++b) {
      if (a == 0 && b > 1) break;
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d) {
          if (a == 0 && b == 0) continue;
          const auto det = field.sub(field.mul(a, d), field.mul(b, c));
          if (det == 0) continue;
          Mobius2x2 t(field, a, b, c, d);
          image.clear();
          bool admissible = true;
          for (const auto& chi : sum.finite) {
            try {
              image.push_back(mobius_transform(chi, t));
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::Inadmissible) throw;
              admissible = false;
              break;
            }
          }
          if (!admissible) continue;
          std::sort(image.begin(), image.end());
          if (std::lexicographical_compare(image.begin(), image.end(), best.sum.finite.begin(),
                                           best.sum.finite.end())) {
            best.sum.finite = image;
            best.transform = t;
          }
        }
    }
  return best;
}

CanonicalSum mobius_orbit_minimize(const CanonicalSum& sum, PrimeField field) {
  return mobius_orbit_minimize_with_transform(sum, field).sum;
}

// ---------------------------------------------------------------------------
// Labels and equivalence

CanonicalSum canonical_label(const SpatialMatrix& a, std::uint64_t seed) {
  if (a.q() == 1) {
    Matrix zero(a.field(), a.m(), a.n());
    return CanonicalSum::from_kronecker(kronecker_form(a.slice(0), zero, seed).form);
  }
  return mobius_orbit_minimize(theorem1_form(a, seed).sum, a.field());
}

Canonicalization canonicalize(const SpatialMatrix& a, std::uint64_t seed) {
  const PrimeField& f = a.field();
  if (a.q() == 1) {
    // (A, 0): right and left indices 1 for the kernels, x for each unit.
    Matrix zero(f, a.m(), a.n());
    auto kron = kronecker_form(a.slice(0), zero, seed);
    CanonicalSum label = CanonicalSum::from_kronecker(kron.form);
    SpatialMatrix target(f, a.m(), a.n(), {synthesize(kron.form, f).first});
    TransformWitness w{kron.witness.R, kron.witness.S, Matrix::identity(f, 1)};
    check(apply_transform(a, w) == target, "rank normal form witness");
    return {std::move(label), std::move(target), std::move(w)};
  }

  auto t1 = theorem1_form(a, seed);
  auto best = mobius_orbit_minimize_with_transform(t1.sum, f);
  TransformWitness w = t1.witness;
  if (best.sum != t1.sum) {
    // Mixing the canonical pair by T realizes the replacement chi -> eta;
    // the re-reduction brings it back to block form.
    Matrix T = best.transform.as_matrix();
    SpatialMatrix mixed = mode_product(synthesize_tensor(t1.sum, f), T, 2);
    auto kron = kronecker_form(mixed.slice(0), mixed.slice(1), seed);
    check(CanonicalSum::from_kronecker(kron.form) == best.sum, "Moebius replacement is realized");
    w = TransformWitness::compose(TransformWitness::compose(w, mixing(f, a.m(), a.n(), T)),
                                  {kron.witness.R, kron.witness.S, Matrix::identity(f, 2)});
  }
  SpatialMatrix target = synthesize_tensor(best.sum, f);
  check(apply_transform(a, w) == target, "canonical witness");
  return {std::move(best.sum), std::move(target), std::move(w)};
}

Equivalence equivalent(const SpatialMatrix& a, const SpatialMatrix& b, std::uint64_t seed) {
  if (a.dims() != b.dims() || !(a.field() == b.field()))
    throw Error(ErrorKind::DimMismatch, "tensors differ in dimensions or field",
                {{"a", dims_json(a)}, {"b", dims_json(b)}});
  const PrimeField& f = a.field();
  if (a == b) return {true, TransformWitness::identity(f, a.m(), a.n(), a.q())};

  auto ra = regular_part(a), rb = regular_part(b);
  if (ra.part.dims() != rb.part.dims()) return {false, std::nullopt};
  if (ra.part.q() > 2)
    throw Error(ErrorKind::Unsupported, "regular parts with more than two slices are unsupported",
                {{"regular_dims", dims_json(ra.part)}});

  TransformWitness wa = ra.witness, wb = rb.witness;
  if (ra.part.q() > 0) {
    auto ca = canonicalize(ra.part, seed), cb = canonicalize(rb.part, seed);
    if (ca.label != cb.label) return {false, std::nullopt};
    wa = TransformWitness::compose(wa, pad(ca.witness, a.m(), a.n(), a.q()));
    wb = TransformWitness::compose(wb, pad(cb.witness, a.m(), a.n(), a.q()));
  }
  TransformWitness w = TransformWitness::compose(wa, wb.inverse());
  check(apply_transform(a, w) == b, "equivalence witness");
  return {true, std::move(w)};
}

// ---------------------------------------------------------------------------
// Regular tensors with n <= 2, q <= 2

std::string_view to_string(RegularLabel label) {
  switch (label) {
    case RegularLabel::C1x1x1: return "C1x1x1";
    case RegularLabel::C2x2x1: return "C2x2x1";
    case RegularLabel::C2x1x2: return "C2x1x2";
    case RegularLabel::C1x2x2: return "C1x2x2";
    case RegularLabel::C3x2x2_a12: return "C3x2x2_a12";
    case RegularLabel::C3x2x2_a12a: return "C3x2x2_a12a";
    case RegularLabel::C4x2x2: return "C4x2x2";
    case RegularLabel::A: return "A";
    case RegularLabel::B: return "B";
  }
  return "?";
}

std::optional<RegularLabel> regular_label_from_string(std::string_view name) {
  for (auto label : {RegularLabel::C1x1x1, RegularLabel::C2x2x1, RegularLabel::C2x1x2,
                     RegularLabel::C1x2x2, RegularLabel::C3x2x2_a12, RegularLabel::C3x2x2_a12a,
                     RegularLabel::C4x2x2, RegularLabel::A, RegularLabel::B})
    if (to_string(label) == name) return label;
  return std::nullopt;
}

SpatialMatrix d_tensor(FieldElem u, FieldElem v) {
  const PrimeField& f = u.field();
  Matrix second(f, 2, 2, {0, v.value(), 1, u.value()});
  return SpatialMatrix(f, 2, 2, {Matrix::identity(f, 2), second});
}

SpatialMatrix representative(const RegularClass22& cls, PrimeField f) {
  auto two = [&](std::size_t m, std::size_t n, Matrix a, Matrix b) {
    return SpatialMatrix(f, m, n, {std::move(a), std::move(b)});
  };
  switch (cls.label) {
    case RegularLabel::C1x1x1: return SpatialMatrix(f, 1, 1, {Matrix(f, {{1}})});
    case RegularLabel::C2x2x1: return SpatialMatrix(f, 2, 2, {Matrix::identity(f, 2)});
    case RegularLabel::C2x1x2: return two(2, 1, Matrix(f, {{1}, {0}}), Matrix(f, {{0}, {1}}));
    case RegularLabel::C1x2x2: return two(1, 2, Matrix(f, {{1, 0}}), Matrix(f, {{0, 1}}));
    case RegularLabel::C3x2x2_a12:
      return two(3, 2, Matrix(f, {{1, 0}, {0, 1}, {0, 0}}), Matrix(f, {{0, 0}, {0, 0}, {0, 1}}));
    case RegularLabel::C3x2x2_a12a:
      return two(3, 2, Matrix(f, {{1, 0}, {0, 1}, {0, 0}}), Matrix(f, {{0, 0}, {1, 0}, {0, 1}}));
    case RegularLabel::C4x2x2:
      return two(4, 2, Matrix(f, {{1, 0}, {0, 1}, {0, 0}, {0, 0}}),
                 Matrix(f, {{0, 0}, {0, 0}, {1, 0}, {0, 1}}));
    case RegularLabel::A:
    case RegularLabel::B: {
      if (!cls.param) throw Error(ErrorKind::Unsupported, "A and B classes need a parameter");
      if (cls.label == RegularLabel::B && f.modulus() != 2)
        throw Error(ErrorKind::Unsupported, "B classes exist only in characteristic 2");
      const FieldElem u(f, cls.label == RegularLabel::B ? 1 : 0);
      return d_tensor(u, FieldElem(f, cls.param->value()));
    }
  }
  throw std::logic_error("unknown regular label");
}

std::vector<PrimeField::Residue> parameter_orbit(RegularLabel family, PrimeField::Residue v,
                                                 PrimeField f) {
  const PrimeField::Residue p = f.modulus();
  v = f.reduce(v);
  std::set<PrimeField::Residue> orbit;
  if (family == RegularLabel::B) {
    // v' = v + beta + beta^2
    for (PrimeField::Residue beta = 0; beta < p; ++beta)
      orbit.insert(f.add(v, f.add(beta, f.mul(beta, beta))));
  } else if (family == RegularLabel::A && p != 2) {
    // v' = v z for nonzero squares z
    for (PrimeField::Residue a = 1; a < p; ++a) orbit.insert(f.mul(v, f.mul(a, a)));
  } else if (family == RegularLabel::A) {
    // v' = (alpha v + beta) / (gamma v + delta) over squares
    std::set<PrimeField::Residue> squares;
    for (PrimeField::Residue a = 0; a < p; ++a) squares.insert(f.mul(a, a));
    for (auto al : squares)
      for (auto be : squares)
        for (auto ga : squares)
          for (auto de : squares) {
            if (f.add(f.mul(al, de), f.mul(be, ga)) == 0) continue;
            const auto den = f.add(f.mul(ga, v), de);
            if (den == 0) continue;
            orbit.insert(f.div(f.add(f.mul(al, v), be), den));
          }
  } else {
    throw Error(ErrorKind::Unsupported, "only A and B classes carry a parameter");
  }
  return {orbit.begin(), orbit.end()};
}

std::vector<RegularClass22> theorem2_catalog(PrimeField f) {
  std::vector<RegularClass22> out;
  for (auto label : {RegularLabel::C1x1x1, RegularLabel::C2x2x1, RegularLabel::C2x1x2,
                     RegularLabel::C1x2x2, RegularLabel::C3x2x2_a12, RegularLabel::C3x2x2_a12a,
                     RegularLabel::C4x2x2})
    out.push_back({label, std::nullopt});
  std::vector<RegularLabel> families{RegularLabel::A};
  if (f.modulus() == 2) families.push_back(RegularLabel::B);
  for (auto family : families) {
    std::set<PrimeField::Residue> minima;
    for (PrimeField::Residue v = 0; v < f.modulus(); ++v)
      minima.insert(parameter_orbit(family, v, f).front());
    for (auto v : minima) out.push_back({family, FieldElem(f, v)});
  }
  return out;
}

Classification classify_regular(const SpatialMatrix& a, std::uint64_t seed) {
  const PrimeField& f = a.field();
  if (a.n() > 2 || a.q() > 2)
    throw Error(ErrorKind::UnsupportedShape, "classification needs n <= 2 and q <= 2",
                {{"dims", dims_json(a)}});
  const SliceRanks ranks = slice_ranks(a);
  if (ranks != SliceRanks{a.m(), a.n(), a.q()})
    throw Error(ErrorKind::NotRegular, "tensor is not regular",
                {{"dims", dims_json(a)}, {"ranks", {ranks.m, ranks.n, ranks.q}}});
  if (a.q() == 0)
    throw Error(ErrorKind::UnsupportedShape, "the empty tensor has no listed class",
                {{"dims", dims_json(a)}});

  RegularClass22 cls{RegularLabel::C1x1x1, std::nullopt};
  Canonicalization own = canonicalize(a, seed);
  if (a.q() == 1) {
    cls.label = a.m() == 1 ? RegularLabel::C1x1x1 : RegularLabel::C2x2x1;
  } else {
    const CanonicalSum& s = own.label;
    using V = std::vector<std::size_t>;
    std::size_t finite_degree = 0;
    for (const auto& chi : s.finite) finite_degree += chi.degree();
    if (s.right == V{2} && s.left.empty() && s.finite.empty()) {
      cls.label = RegularLabel::C1x2x2;
    } else if (s.right.empty() && s.left == V{2} && s.finite.empty()) {
      cls.label = RegularLabel::C2x1x2;
    } else if (s.right.empty() && s.left == V{3} && s.finite.empty()) {
      cls.label = RegularLabel::C3x2x2_a12a;
    } else if (s.right.empty() && s.left == V{2, 2} && s.finite.empty()) {
      cls.label = RegularLabel::C4x2x2;
    } else if (s.right.empty() && s.left == V{2} && finite_degree == 1) {
      cls.label = RegularLabel::C3x2x2_a12;
    } else if (s.right.empty() && s.left.empty() && finite_degree == 2) {
      // The pencil is (I_2, C) with char_poly(C) = x^2 - u x - v, so the
      // tensor is equivalent to D(u, v).
      Poly chi = Poly::constant(f, 1);
      for (const auto& c : s.finite) chi = chi * c;
      const FieldElem u(f, f.neg(chi.coeff(1))), v(f, f.neg(chi.coeff(0)));
      FieldElem raw = v;
      if (f.modulus() != 2) {
        // (a, b, c, d) = (1, 0, -u/2, 1) gives u' = 0, v' = v + u^2/4.
        cls.label = RegularLabel::A;
        raw = v + u * u / FieldElem(f, 4);
      } else if (!u.is_zero()) {
        // (a, b, c, d) = (1, 0, 0, 1/u) gives u' = 1, v' = v / u^2.
        cls.label = RegularLabel::B;
        raw = v / (u * u);
      } else {
        cls.label = RegularLabel::A;
      }
      cls.param = FieldElem(f, parameter_orbit(cls.label, raw.value(), f).front());
    } else {
      throw std::logic_error("regular tensor outside the n <= 2, q <= 2 catalog");
    }
  }

  const SpatialMatrix rep = representative(cls, f);
  Canonicalization theirs = canonicalize(rep, seed);
  check(own.label == theirs.label, "tensor and representative share a label");
  TransformWitness w = TransformWitness::compose(own.witness, theirs.witness.inverse());
  check(apply_transform(a, w) == rep, "classification witness");
  return {cls, std::move(w)};
}

bool lemma2_equivalent(FieldElem u, FieldElem v, FieldElem u2, FieldElem v2,
                       std::uint64_t search_bound) {
  const PrimeField& f = u.field();
  const std::uint64_t p = f.modulus();
  if (p > search_bound)
    throw Error(ErrorKind::FieldTooLargeForSearch, "field exceeds the projective search bound",
                {{"p", p}, {"bound", search_bound}});
  const FieldElem two(f, 2);
  for (std::uint64_t ia = 0; ia <= 1; ++ia)
    for (std::uint64_t ib = 0; ib < p; ++ib) {
      if (ia == 0 && ib > 1) break;
      for (std::uint64_t ic = 0; ic < p; ++ic)
        for (std::uint64_t id = 0; id < p; ++id) {
          if (ia == 0 && ib == 0 && ic > 1) break;
          const FieldElem a(f, ia), b(f, ib), c(f, ic), d(f, id);
          if ((a * d - b * c).is_zero()) continue;
          const FieldElem den = a * a + u * a * b - v * b * b;
          if (den.is_zero()) continue;
          const FieldElem nu = two * a * c + u * a * d + u * c * b - two * v * b * d;
          const FieldElem nv = -(c * c) - u * c * d + v * d * d;
          if (u2 * den == nu && v2 * den == nv) return true;
        }
    }
  return false;
}

}  // namespace tenscan
