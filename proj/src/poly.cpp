#include "tenscan/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "tenscan/error.hpp"

namespace tenscan {

Poly::Poly(PrimeField field, std::vector<Residue> ascending)
    : field_(field), coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c %= field_.modulus();
  trim();
}

Poly::Poly(PrimeField field, std::initializer_list<std::int64_t> ascending) : field_(field) {
  coeffs_.reserve(ascending.size());
  for (auto c : ascending) coeffs_.push_back(field.reduce(c));
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(PrimeField field, Residue c) { return Poly(field, std::vector<Residue>{c}); }

Poly Poly::monomial(PrimeField field, Residue c, std::size_t degree) {
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

Poly Poly::scaled(Residue s) const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = field_.mul(c, s);
  r.trim();
  return r;
}

Poly Poly::derivative() const {
  std::vector<Residue> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(field_.mul(coeffs_[i], field_.reduce(static_cast<std::int64_t>(i))));
  return Poly(field_, std::move(d));
}

Poly::Residue Poly::eval(Residue at) const {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, at), *it);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Poly::Residue> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field_.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Poly::Residue> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field_.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const std::uint64_t p = a.field_.modulus();
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs_[i]} * b.coeffs_[j]) % p;
  }
  return Poly(a.field_, std::vector<Poly::Residue>(acc.begin(), acc.end()));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Compare the companion's last column (u_l, ..., u_1), i.e. the negated
  // coefficients from the constant term up.
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    auto c = a.field_.neg(a.coeffs_[i]) <=> b.field_.neg(b.coeffs_[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  os << '[';
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) os << (i ? ", " : "") << p.coeffs_[i];
  return os << ']';
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::BothZero, "polynomial division by zero");
  const PrimeField& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Poly::Residue> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Poly::Residue> quo(a.degree() - b.degree() + 1, 0);
  const auto inv_lead = f.inv(b.lead());
  const auto bd = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const auto c = f.mul(rem[k + bd], inv_lead);
    quo[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= bd; ++j) rem[k + j] = f.sub(rem[k + j], f.mul(c, b.coeff(j)));
  }
  rem.resize(bd);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus) {
  const PrimeField& f = base.field();
  Poly result = Poly::constant(f, 1) % modulus;
  Poly b = base % modulus;
  while (exponent) {
    if (exponent & 1) result = (result * b) % modulus;
    exponent >>= 1;
    if (exponent) b = (b * b) % modulus;
  }
  return result;
}

Poly pow(const Poly& base, std::size_t exponent) {
  Poly result = Poly::constant(base.field(), 1);
  for (std::size_t i = 0; i < exponent; ++i) result = result * base;
  return result;
}

Matrix eval_at(const Poly& f, const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimMismatch, "eval_at needs a square matrix");
  const PrimeField& field = m.field();
  const std::size_t n = m.rows();
  Matrix acc(field, n, n);
  const auto c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * m + Matrix::identity(field, n).scaled(*it);
  return acc;
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0)");
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

using Rng = std::mt19937_64;

// Pairs (squarefree g, multiplicity) with f = prod g^mult.
void squarefree(const Poly& f, std::size_t scale, std::vector<std::pair<Poly, std::size_t>>& out) {
  const PrimeField& field = f.field();
  const std::uint32_t p = field.modulus();
  Poly c = poly_gcd(f, f.derivative());
  Poly w = f / c;
  std::size_t i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.emplace_back(fac.monic(), i * scale);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_one()) {
    // c(x) = h(x^p) = h(x)^p since a^p = a in GF(p).
    std::vector<Poly::Residue> root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
    squarefree(Poly(field, std::move(root)).monic(), scale * p, out);
  }
}

// Squarefree g -> (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, std::size_t>> distinct_degree(const Poly& g) {
  const PrimeField& field = g.field();
  std::vector<std::pair<Poly, std::size_t>> out;
  Poly rest = g;
  const Poly x = Poly::x(field);
  Poly h = x % rest;
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(rest.degree()); ++d) {
    h = powmod(h, field.modulus(), rest);
    Poly common = poly_gcd(rest, h - x);
    if (!common.is_one()) {
      out.emplace_back(common, d);
      rest = rest / common;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), static_cast<std::size_t>(rest.degree()));
  return out;
}

Poly random_poly(const PrimeField& field, std::size_t below_degree, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> coef(0, field.modulus() - 1);
  std::vector<Poly::Residue> c(below_degree);
  for (auto& v : c) v = coef(rng);
  return Poly(field, std::move(c));
}

// Splits g, a product of distinct irreducibles of degree d, into them.
void equal_degree(const Poly& g, std::size_t d, Rng& rng, std::vector<Poly>& out) {
  if (static_cast<std::size_t>(g.degree()) == d) {
    out.push_back(g.monic());
    return;
  }
  const PrimeField& field = g.field();
  const std::uint32_t p = field.modulus();
  const auto n = static_cast<std::size_t>(g.degree());
  for (;;) {
    Poly a = random_poly(field, n, rng);
    if (a.degree() < 1) continue;
    Poly probe(field);
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(d-1)).
      Poly term = a % g;
      probe = term;
      for (std::size_t i = 1; i < d; ++i) {
        term = (term * term) % g;
        probe = probe + term;
      }
    } else {
      // a^((p^d - 1)/2) as prod_i (a^((p-1)/2))^(p^i).
      Poly c = powmod(a, (p - 1) / 2, g);
      Poly acc = c;
      Poly term = c;
      for (std::size_t i = 1; i < d; ++i) {
        term = powmod(term, p, g);
        acc = (acc * term) % g;
      }
      probe = acc - Poly::constant(field, 1);
    }
    if (probe.is_zero()) continue;
    Poly split = poly_gcd(g, probe);
    if (split.degree() > 0 && split.degree() < g.degree()) {
      equal_degree(split, d, rng, out);
      equal_degree(g / split, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PrimePowerFactor> factor_prime_powers(const Poly& f, std::uint64_t seed) {
  if (f.degree() < 1 || !f.is_monic())
    throw Error(ErrorKind::NotMonic, "factor_prime_powers needs a monic polynomial of degree >= 1");
  Rng rng(seed);
  std::vector<std::pair<Poly, std::size_t>> sqf;
  squarefree(f, 1, sqf);
  std::map<Poly, std::size_t> exponents;
  for (const auto& [g, mult] : sqf) {
    for (const auto& [part, d] : distinct_degree(g)) {
      std::vector<Poly> irreducibles;
      equal_degree(part, d, rng, irreducibles);
      for (auto& q : irreducibles) exponents[q] += mult;
    }
  }
  std::vector<PrimePowerFactor> out;
  for (auto& [base, e] : exponents) out.push_back({base, e});
  return out;
}

bool is_irreducible(const Poly& f, std::uint64_t seed) {
  if (f.degree() < 1) return false;
  auto factors = factor_prime_powers(f.monic(), seed);
  return factors.size() == 1 && factors[0].exponent == 1;
}

bool is_prime_power(const Poly& f, std::uint64_t seed) {
  if (f.degree() < 1) return false;
  return factor_prime_powers(f.monic(), seed).size() == 1;
}

Matrix companion(const Poly& chi) {
  if (chi.degree() < 1) throw Error(ErrorKind::ZeroDegree, "companion of a constant polynomial");
  if (!chi.is_monic()) throw Error(ErrorKind::NotMonic, "companion of a non-monic polynomial");
  const PrimeField& f = chi.field();
  const auto l = static_cast<std::size_t>(chi.degree());
  Matrix m(f, l, l);
  for (std::size_t i = 0; i + 1 < l; ++i) m(i + 1, i) = 1;
  for (std::size_t i = 0; i < l; ++i) m(i, l - 1) = f.neg(chi.coeff(i));
  return m;
}

Mobius2x2::Mobius2x2(FieldElem a, FieldElem b, FieldElem c, FieldElem d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (!(a.field() == b.field() && a.field() == c.field() && a.field() == d.field()))
    throw Error(ErrorKind::FieldMismatch, "Mobius entries over different fields");
  if ((a * d - b * c).is_zero()) throw Error(ErrorKind::Singular, "ad - bc = 0");
}

Mobius2x2 Mobius2x2::inverse() const {
  const FieldElem det_inv = (a_ * d_ - b_ * c_).inverse();
  return {d_ * det_inv, -b_ * det_inv, -c_ * det_inv, a_ * det_inv};
}

Matrix Mobius2x2::as_matrix() const {
  Matrix t(field(), 2, 2);
  t(0, 0) = a_.value();
  t(0, 1) = c_.value();
  t(1, 0) = b_.value();
  t(1, 1) = d_.value();
  return t;
}

Poly mobius_transform(const Poly& chi, const Mobius2x2& t) {
  if (chi.degree() < 1) throw Error(ErrorKind::ZeroDegree, "mobius_transform of a constant");
  if (!chi.is_monic()) throw Error(ErrorKind::NotMonic, "mobius_transform needs monic chi");
  const PrimeField& f = chi.field();
  if (!(f == t.field())) throw Error(ErrorKind::FieldMismatch, "Mobius over a different field");
  const auto l = static_cast<std::size_t>(chi.degree());
  const Poly num(f, {-static_cast<std::int64_t>(t.c().value()), t.a().value()});  // x a - c
  const Poly den(f, {t.d().value(), -static_cast<std::int64_t>(t.b().value())});  // d - x b
  std::vector<Poly> num_pow{Poly::constant(f, 1)}, den_pow{Poly::constant(f, 1)};
  for (std::size_t i = 1; i <= l; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Poly eta(f);
  for (std::size_t i = 0; i <= l; ++i)
    eta = eta + (num_pow[i] * den_pow[l - i]).scaled(chi.coeff(i));
  // The x^l coefficient equals det(a I + b Phi_chi).
  if (eta.degree() != static_cast<int>(l))
    throw Error(ErrorKind::Inadmissible, "a I + b Phi_chi is singular");
  return eta.monic();
}

Poly mobius_charpoly_check(const Poly& chi, const Mobius2x2& t) {
  const Matrix phi = companion(chi);
  const PrimeField& f = chi.field();
  const std::size_t l = phi.rows();
  const Matrix id = Matrix::identity(f, l);
  const Matrix lhs = id.scaled(t.a().value()) + phi.scaled(t.b().value());
  if (!is_invertible(lhs)) throw Error(ErrorKind::Inadmissible, "a I + b Phi_chi is singular");
  const Matrix rhs = id.scaled(t.c().value()) + phi.scaled(t.d().value());
  return char_poly(rhs * inverse(lhs));
}

}  // namespace tenscan
