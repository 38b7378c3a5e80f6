#include "tenscan/field.hpp"

#include <string>

#include "tenscan/error.hpp"

namespace tenscan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::ZeroDegree: return "ZeroDegree";
    case ErrorKind::Inadmissible: return "Inadmissible";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::SingularWitness: return "SingularWitness";
    case ErrorKind::WrongSliceCount: return "WrongSliceCount";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::FieldTooLargeForSearch: return "FieldTooLargeForSearch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorKind::NotPrime,
                "modulus " + std::to_string(p) + " is not a prime below 2^31");
  p_ = static_cast<Residue>(p);
}

PrimeField::Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

PrimeField::Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    std::int64_t tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

PrimeField::Residue PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  std::uint64_t order = p_ - 1;
  std::uint64_t primes[32];
  int count = 0;
  std::uint64_t rest = order;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      primes[count++] = d;
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) primes[count++] = rest;
  for (Residue g = 2; g < p_; ++g) {
    bool generator = true;
    for (int i = 0; i < count && generator; ++i)
      generator = pow(g, order / primes[i]) != 1;
    if (generator) return g;
  }
  return 1;
}

bool PrimeField::is_square(Residue a) const {
  if (a == 0 || p_ == 2) return true;
  return pow(a, (p_ - 1) / 2) == 1;
}

FieldElem field_inverse(const FieldElem& a) { return a.inverse(); }

}  // namespace tenscan
