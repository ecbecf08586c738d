// Exact cyclotomic numbers: residues in Q[t]/(Phi_n) on the power basis
// 1, z, ..., z^(phi(n)-1), with rational coefficients.  Arithmetic between
// different conductors promotes both operands to the lcm conductor; no
// implicit reduction back (see reduced() for the explicit pass).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coreg/rational.hpp"

namespace coreg {

// Largest conductor the library will promote to; guards against runaway
// lcm growth on adversarial input.
inline constexpr std::uint32_t kConductorCap = 1024;

std::uint32_t euler_phi(std::uint32_t n);
std::vector<std::uint32_t> divisors(std::uint32_t n);
const std::vector<Rational>& cyclotomic_polynomial(std::uint32_t n);  // Phi_n, monic

class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), c_(1) {}
  Cyclotomic(const Rational& r) : conductor_(1), c_{r} {}  // NOLINT: implicit by design
  Cyclotomic(long long n) : conductor_(1), c_{Rational(n)} {}  // NOLINT
  // Residue with given coefficients; pads/validates length phi(n).
  Cyclotomic(std::uint32_t conductor, std::vector<Rational> coeffs);

  static Cyclotomic zeta(std::uint32_t n);  // primitive n-th root of unity
  // zeta(n)^k without building intermediate powers.
  static Cyclotomic zeta_pow(std::uint32_t n, std::int64_t k);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // The value as a rational; requires is_rational().
  Rational rational_value() const;

  // Same value in Q(zeta_m); n must divide m.
  Cyclotomic embedded(std::uint32_t m) const;
  // Same value at the smallest conductor that contains it.
  Cyclotomic reduced() const;
  // Galois twist z -> z^a, gcd(a, conductor) = 1.
  Cyclotomic galois(std::uint32_t a) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }

  Cyclotomic inverse() const;
  Cyclotomic pow(std::int64_t e) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Roots of unity in Q(zeta_n) are exactly +-zeta_n^k, a cyclic group of
  // order lcm(2, n); these helpers test membership and locate the element.
  bool is_root_of_unity() const;
  std::uint32_t root_of_unity_order() const;  // requires is_root_of_unity()
  // j such that *this == zeta(order)^j, 0 <= j < order.
  std::uint32_t as_zeta_exponent(std::uint32_t order) const;

  // Deterministic total order on representations (conductor, then coeffs);
  // used for canonical tie-breaks, not a field order.
  int cmp(const Cyclotomic& b) const;

  std::uint64_t hash() const;
  std::string str() const;

 private:
  std::uint32_t conductor_;
  std::vector<Rational> c_;
};

// lambda with lambda^k == y, for y a root of unity; lives in a cyclotomic
// field of conductor <= k * order(y).
Cyclotomic kth_root_of_unity_value(const Cyclotomic& y, std::uint32_t k);

std::uint32_t gcd_u32(std::uint32_t a, std::uint32_t b);
std::uint32_t lcm_u32_checked(std::uint32_t a, std::uint32_t b);  // fails past kConductorCap

}  // namespace coreg
