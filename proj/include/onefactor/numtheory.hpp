#pragma once

#include <compare>
#include <cstdint>

namespace onefactor {

using Int = std::int64_t;

// An integer reduced modulo `modulus`, always stored in [0, modulus).
class Residue {
 public:
  // Reduces `value` (which may be negative) into [0, modulus).
  // Throws std::invalid_argument when modulus < 1.
  Residue(Int value, Int modulus);

  Int value() const { return value_; }
  Int modulus() const { return modulus_; }

  Residue operator+(const Residue& other) const;
  Residue operator-(const Residue& other) const;
  Residue operator*(const Residue& other) const;
  Residue operator-() const;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;

 private:
  Int value_;
  Int modulus_;
};

// Greatest common divisor of |a| and |b|; gcd(0, 0) = 0.
Int gcd(Int a, Int b);

// Euler's totient by trial-division factorization. Throws for n < 1.
Int totient(Int n);

// x with (r * x) mod n = 1. Throws std::domain_error("no inverse") when
// gcd(r, n) != 1, std::invalid_argument when n < 2.
Residue mod_inverse(Int r, Int n);

// k/2 mod n, i.e. k times the inverse of 2. The modulus of `k` must be odd
// and at least 3.
Residue half_mod(const Residue& k);

// The unique p in [0, s*t) with p = k (mod s) and p = l (mod t), where s and
// t are the moduli of `k` and `l`. Throws std::domain_error("moduli not
// coprime") when gcd(s, t) != 1.
Residue crt_combine(const Residue& k, const Residue& l);

}  // namespace onefactor
