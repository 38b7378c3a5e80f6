#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "tenscan/field.hpp"
#include "tenscan/matrix.hpp"

namespace tenscan {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'0f'ca'7e'2bULL;

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class Poly {
 public:
  using Residue = PrimeField::Residue;

  explicit Poly(PrimeField field) : field_(field) {}
  Poly(PrimeField field, std::vector<Residue> ascending);
  Poly(PrimeField field, std::initializer_list<std::int64_t> ascending);

  static Poly constant(PrimeField field, Residue c);
  static Poly monomial(PrimeField field, Residue c, std::size_t degree);
  static Poly x(PrimeField field) { return monomial(field, 1, 1); }

  const PrimeField& field() const noexcept { return field_; }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Residue lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Residue coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Poly monic() const;
  Poly scaled(Residue s) const;
  Poly derivative() const;
  Residue eval(Residue at) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  // Canonical order: by degree, then the sequence -c_0, -c_1, ... (the
  // parameters u_l, ..., u_1 of x^l - u_1 x^{l-1} - ... - u_l).
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);
  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();

  PrimeField field_;
  std::vector<Residue> coeffs_;
};

// Error(BothZero) if b is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus);
Poly pow(const Poly& base, std::size_t exponent);
// f(M) by Horner.
Matrix eval_at(const Poly& f, const Matrix& m);

// Monic gcd; Error(BothZero) when both inputs vanish.
Poly poly_gcd(const Poly& f, const Poly& g);

struct PrimePowerFactor {
  Poly base;                 // monic irreducible
  std::size_t exponent = 0;  // >= 1

  Poly expand() const { return pow(base, exponent); }
  friend bool operator==(const PrimePowerFactor&, const PrimePowerFactor&) = default;
};

// Squarefree decomposition, distinct-degree split, then randomized
// equal-degree split (trace map in characteristic 2). Output is sorted by the
// canonical polynomial order of the bases. Error(NotMonic) for non-monic or
// constant input.
std::vector<PrimePowerFactor> factor_prime_powers(const Poly& f,
                                                  std::uint64_t seed = kDefaultSeed);
bool is_irreducible(const Poly& f, std::uint64_t seed = kDefaultSeed);
bool is_prime_power(const Poly& f, std::uint64_t seed = kDefaultSeed);

// The companion matrix Phi_chi: ones on the subdiagonal, last column
// (u_l, ..., u_1)^T for chi = x^l - u_1 x^{l-1} - ... - u_l.
Matrix companion(const Poly& chi);

// T = [a c; b d] with ad - bc != 0. Acting on slice pairs it sends
// (B1, B2) to (a B1 + b B2, c B1 + d B2).
class Mobius2x2 {
 public:
  Mobius2x2(FieldElem a, FieldElem b, FieldElem c, FieldElem d);
  Mobius2x2(PrimeField field, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
      : Mobius2x2(FieldElem{field, a}, FieldElem{field, b}, FieldElem{field, c},
                  FieldElem{field, d}) {}

  const FieldElem& a() const noexcept { return a_; }
  const FieldElem& b() const noexcept { return b_; }
  const FieldElem& c() const noexcept { return c_; }
  const FieldElem& d() const noexcept { return d_; }
  const PrimeField& field() const noexcept { return a_.field(); }

  Mobius2x2 inverse() const;
  // The slice-mixing matrix with t11 = a, t12 = c, t21 = b, t22 = d.
  Matrix as_matrix() const;

  friend bool operator==(const Mobius2x2&, const Mobius2x2&) = default;

 private:
  FieldElem a_, b_, c_, d_;
};

// Monic eta = eps (d - x b)^l chi((x a - c)/(d - x b)), expanded without
// division. Error(Inadmissible) when a I + b Phi_chi is singular.
Poly mobius_transform(const Poly& chi, const Mobius2x2& t);
// char_poly((c I + d Phi)(a I + b Phi)^{-1}); a second route to the same
// polynomial through matrix arithmetic.
Poly mobius_charpoly_check(const Poly& chi, const Mobius2x2& t);

}  // namespace tenscan
