#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace tenscan {

// GF(p) for a prime 2 <= p < 2^31. Elements are plain residues in [0, p);
// the field object supplies the arithmetic.
class PrimeField {
 public:
  using Residue = std::uint32_t;

  explicit PrimeField(std::uint64_t p);

  Residue modulus() const noexcept { return p_; }
  Residue characteristic() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  // Throws Error(ZeroInverse) for a == 0.
  Residue inv(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  // Smallest generator of the multiplicative group.
  Residue primitive_root() const;
  bool is_square(Residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue p_;
};

bool is_prime(std::uint64_t n);

class FieldElem {
 public:
  FieldElem(PrimeField field, std::int64_t value)
      : field_(field), value_(field.reduce(value)) {}

  const PrimeField& field() const noexcept { return field_; }
  PrimeField::Residue value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElem operator+(const FieldElem& o) const { return {field_, field_.add(value_, o.value_), raw_tag{}}; }
  FieldElem operator-(const FieldElem& o) const { return {field_, field_.sub(value_, o.value_), raw_tag{}}; }
  FieldElem operator*(const FieldElem& o) const { return {field_, field_.mul(value_, o.value_), raw_tag{}}; }
  FieldElem operator/(const FieldElem& o) const { return {field_, field_.div(value_, o.value_), raw_tag{}}; }
  FieldElem operator-() const { return {field_, field_.neg(value_), raw_tag{}}; }
  FieldElem inverse() const { return {field_, field_.inv(value_), raw_tag{}}; }
  FieldElem pow(std::uint64_t e) const { return {field_, field_.pow(value_, e), raw_tag{}}; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  // Orders by integer representative; only meaningful within one field.
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
    return a.value_ <=> b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& e) {
    return os << e.value_;
  }

 private:
  struct raw_tag {};
  FieldElem(PrimeField field, PrimeField::Residue v, raw_tag) : field_(field), value_(v) {}

  PrimeField field_;
  PrimeField::Residue value_;
};

// Multiplicative inverse; Error(ZeroInverse) when a = 0.
FieldElem field_inverse(const FieldElem& a);

}  // namespace tenscan
