#include "onefactor/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace onefactor {
namespace {

__extension__ using Wide = __int128;

Int reduce(Int value, Int modulus) {
  Int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("residue moduli differ: " + std::to_string(a.modulus()) +
                                " vs " + std::to_string(b.modulus()));
  }
}

// Returns (g, x) with a*x = g (mod b), g = gcd(a, b), for a, b >= 0.
std::pair<Int, Int> extended_euclid(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
  }
  return {old_r, old_x};
}

}  // namespace

Residue::Residue(Int value, Int modulus) : value_(0), modulus_(modulus) {
  if (modulus < 1) {
    throw std::invalid_argument("modulus must be >= 1, got " + std::to_string(modulus));
  }
  value_ = reduce(value, modulus);
}

Residue Residue::operator+(const Residue& other) const {
  require_same_modulus(*this, other);
  return Residue(value_ + other.value_, modulus_);
}

Residue Residue::operator-(const Residue& other) const {
  require_same_modulus(*this, other);
  return Residue(value_ - other.value_, modulus_);
}

Residue Residue::operator*(const Residue& other) const {
  require_same_modulus(*this, other);
  auto product = static_cast<Wide>(value_) * other.value_;
  return Residue(static_cast<Int>(product % modulus_), modulus_);
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int totient(Int n) {
  if (n < 1) {
    throw std::invalid_argument("totient requires n >= 1, got " + std::to_string(n));
  }
  Int result = n;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Residue mod_inverse(Int r, Int n) {
  if (n < 2) {
    throw std::invalid_argument("mod_inverse requires n >= 2, got " + std::to_string(n));
  }
  auto [g, x] = extended_euclid(reduce(r, n), n);
  if (g != 1) {
    throw std::domain_error("no inverse: gcd(" + std::to_string(r) + ", " + std::to_string(n) +
                            ") = " + std::to_string(g));
  }
  return Residue(x, n);
}

Residue half_mod(const Residue& k) {
  const Int n = k.modulus();
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("half_mod requires an odd modulus >= 3, got " + std::to_string(n));
  }
  // k/2 when k is even, (k+n)/2 when k is odd.
  const Int v = k.value();
  return Residue(v % 2 == 0 ? v / 2 : (v + n) / 2, n);
}

Residue crt_combine(const Residue& k, const Residue& l) {
  const Int s = k.modulus();
  const Int t = l.modulus();
  if (gcd(s, t) != 1) {
    throw std::domain_error("moduli not coprime: gcd(" + std::to_string(s) + ", " +
                            std::to_string(t) + ") = " + std::to_string(gcd(s, t)));
  }
  if (s == 1) return Residue(l.value(), t);
  if (t == 1) return Residue(k.value(), s);
  // p = k + s * ((l - k) * s^{-1} mod t)
  const Residue s_inv = mod_inverse(s, t);
  const Residue step = Residue(l.value() - k.value(), t) * s_inv;
  return Residue(k.value() + s * step.value(), s * t);
}

}  // namespace onefactor
