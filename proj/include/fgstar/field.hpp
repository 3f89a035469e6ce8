#pragma once

// Coefficient fields for the group algebra: exact rationals (arbitrary
// precision) and prime fields F_p with p an odd prime. Algebra code is
// generic over a field object exposing Scalar plus the usual operations;
// characteristic 2 is ruled out at construction, everything downstream
// relies on that.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fgstar {

class Rationals {
public:
  using Scalar = boost::multiprecision::cpp_rational;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long long v) const { return Scalar(v); }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  bool is_zero(const Scalar& a) const { return a.is_zero(); }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  // cpp_rational keeps lowest terms with positive denominator, so this
  // rendering is canonical
  std::string str(const Scalar& a) const {
    if (denominator(a) == 1)
      return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
  }

  std::string name() const { return "rational"; }
  long long characteristic() const { return 0; }
  bool operator==(const Rationals&) const { return true; }
};

class PrimeField {
public:
  using Scalar = std::int64_t;

  explicit PrimeField(long long p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
      throw std::invalid_argument("prime field needs an odd prime, got " +
                                  std::to_string(p));
  }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long long v) const {
    Scalar r = v % p_;
    return r < 0 ? r + p_ : r;
  }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const { return (a - b + p_) % p_; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  bool is_zero(Scalar a) const { return a == 0; }
  bool eq(Scalar a, Scalar b) const { return a == b; }

  std::string str(Scalar a) const {
    return std::to_string(a) + " mod " + std::to_string(p_);
  }

  std::string name() const { return "fp:" + std::to_string(p_); }
  long long characteristic() const { return p_; }
  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
  static bool is_prime(long long p) {
    if (p < 2)
      return false;
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0)
        return false;
    return true;
  }

  long long p_;
};

} // namespace fgstar
