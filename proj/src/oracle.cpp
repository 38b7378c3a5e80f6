#include "tenscan/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>

#include "tenscan/error.hpp"

namespace tenscan::oracle {

namespace {

// p^e, or nullopt past the budget.
std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::uint64_t e, std::uint64_t budget) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (v > budget / p) return std::nullopt;
    v *= p;
  }
  return v;
}

Matrix unfold(const SpatialMatrix& a, int axis) {
  switch (axis) {
    case 0: return a.frontal_family();
    case 1: return a.lateral_family();
    default: return a.horizontal_family();
  }
}

std::vector<Matrix> generators(std::size_t dim, const PrimeField& f) {
  std::vector<Matrix> out;
  const auto g = f.primitive_root();
  for (std::size_t i = 0; i < dim; ++i) {
    Matrix d = Matrix::identity(f, dim);
    d(i, i) = g;
    if (g != 1) out.push_back(std::move(d));
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      Matrix t = Matrix::identity(f, dim);
      t(i, j) = 1;
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

std::uint64_t gl_order(std::size_t dim, std::uint64_t p) {
  std::uint64_t pn = 1;
  for (std::size_t i = 0; i < dim; ++i) pn *= p;
  std::uint64_t order = 1, pi = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

GroupEnumeration enumerate_gl(std::size_t dim, PrimeField field, std::uint64_t budget) {
  const std::uint64_t p = field.modulus();
  auto total = bounded_power(p, dim * dim, budget);
  if (!total)
    throw Error(ErrorKind::BudgetExceeded, "GL enumeration exceeds the budget",
                {{"dim", dim}, {"p", p}, {"budget", budget}});
  GroupEnumeration out{field, dim, {}};
  std::vector<PrimeField::Residue> digits(dim * dim, 0);
  for (std::uint64_t index = 0; index < *total; ++index) {
    std::uint64_t rest = index;
    for (std::size_t pos = digits.size(); pos-- > 0;) {
      digits[pos] = static_cast<PrimeField::Residue>(rest % p);
      rest /= p;
    }
    Matrix m(field, dim, dim, digits);
    if (is_invertible(m)) out.elements.push_back(std::move(m));
  }
  return out;
}

Equivalence oracle_equivalent(const SpatialMatrix& a, const SpatialMatrix& b,
                              std::uint64_t budget) {
  if (a.dims() != b.dims() || !(a.field() == b.field()))
    throw Error(ErrorKind::DimMismatch, "tensors differ in dimensions or field");
  const PrimeField& f = a.field();
  const auto d = a.dims();
  int solved = 0;
  for (int axis = 1; axis < 3; ++axis)
    if (d[axis] > d[solved]) solved = axis;
  const int first = solved == 0 ? 1 : 0;
  const int second = solved == 2 ? 1 : 2;

  auto g1 = enumerate_gl(d[first], f, budget);
  auto g2 = enumerate_gl(d[second], f, budget);
  if (g1.elements.size() > budget / std::max<std::size_t>(g2.elements.size(), 1))
    throw Error(ErrorKind::BudgetExceeded, "oracle search exceeds the budget",
                {{"candidates", {g1.elements.size(), g2.elements.size()}}, {"budget", budget}});

  const auto rb = rref(unfold(b, solved));
  const Matrix eb_inv = inverse(rb.transform);
  for (const auto& x : g1.elements) {
    const SpatialMatrix ax = mode_product(a, x, first);
    for (const auto& y : g2.elements) {
      const SpatialMatrix axy = mode_product(ax, y, second);
      const auto ra = rref(unfold(axy, solved));
      if (!(ra.reduced == rb.reduced)) continue;
      // E_a U_a = E_b U_b, so U_b = (E_b^{-1} E_a) U_a.
      const Matrix z = (eb_inv * ra.transform).transpose();
      Matrix mats[3] = {Matrix(f, 0, 0), Matrix(f, 0, 0), Matrix(f, 0, 0)};
      mats[first] = x;
      mats[second] = y;
      mats[solved] = z;
      TransformWitness w{mats[0], mats[1], mats[2]};
      if (!(apply_transform(a, w) == b))
        throw std::logic_error("internal check failed: oracle witness");
      return {true, std::move(w)};
    }
  }
  return {false, std::nullopt};
}

std::uint64_t tensor_index(const SpatialMatrix& a) {
  const std::uint64_t p = a.field().modulus();
  std::uint64_t index = 0;
  for (auto v : a.entries()) index = index * p + v;
  return index;
}

SpatialMatrix tensor_from_index(std::uint64_t index, PrimeField field,
                                std::array<std::size_t, 3> dims) {
  const auto [m, n, q] = dims;
  const std::uint64_t p = field.modulus();
  std::vector<PrimeField::Residue> digits(m * n * q);
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    digits[pos] = static_cast<PrimeField::Residue>(index % p);
    index /= p;
  }
  SpatialMatrix out(field, m, n, q);
  std::size_t pos = 0;
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j, k) = digits[pos++];
  return out;
}

std::vector<Orbit> orbit_partition(std::array<std::size_t, 3> dims, PrimeField field,
                                   std::uint64_t budget) {
  const auto [m, n, q] = dims;
  auto total = bounded_power(field.modulus(), m * n * q, budget);
  if (!total)
    throw Error(ErrorKind::BudgetExceeded, "tensor space exceeds the budget",
                {{"dims", {m, n, q}}, {"p", field.modulus()}, {"budget", budget}});

  std::vector<std::pair<int, Matrix>> gens;
  for (int axis = 0; axis < 3; ++axis)
    for (auto& g : generators(dims[axis], field)) gens.emplace_back(axis, std::move(g));

  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> orbit_of(*total, kUnseen);
  std::vector<Orbit> orbits;
  for (std::uint64_t start = 0; start < *total; ++start) {
    if (orbit_of[start] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(orbits.size());
    Orbit orbit{start, {}};
    std::deque<std::uint64_t> queue{start};
    orbit_of[start] = id;
    while (!queue.empty()) {
      const std::uint64_t cur = queue.front();
      queue.pop_front();
      orbit.members.push_back(cur);
      const SpatialMatrix t = tensor_from_index(cur, field, dims);
      for (const auto& [axis, g] : gens) {
        const std::uint64_t next = tensor_index(mode_product(t, g, axis));
        if (orbit_of[next] != kUnseen) continue;
        orbit_of[next] = id;
        queue.push_back(next);
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace tenscan::oracle
