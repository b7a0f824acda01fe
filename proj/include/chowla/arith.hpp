#pragma once

// Elementary arithmetic modulo small primes: primality, primitive roots,
// discrete logarithms, Legendre symbols and 2-adic valuations.

#include <cstdint>
#include <vector>

namespace chowla {

bool is_prime(std::int64_t n);

/// Throws std::invalid_argument unless n is an odd prime.
void require_odd_prime(std::int64_t n);

std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m);
std::int64_t mod_inv(std::int64_t a, std::int64_t p);
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// 2-adic valuation; v2(0) is defined as a large sentinel.
int v2(std::int64_t n);

/// Legendre symbol (a/p) in {-1, 0, 1}.
int legendre(std::int64_t a, std::int64_t p);

/// Smallest positive primitive root modulo the odd prime p.
std::int64_t primitive_root(std::int64_t p);

/// Discrete logarithms base a generator of (Z/pZ)^*.
class DiscreteLog {
 public:
  DiscreteLog(std::int64_t p, std::int64_t generator);

  std::int64_t p() const { return p_; }
  std::int64_t generator() const { return g_; }
  /// Exponent e in [0, p-2] with g^e = a mod p; a must be coprime to p.
  std::int64_t log(std::int64_t a) const;
  /// g^e mod p for any integer e.
  std::int64_t power(std::int64_t e) const;

 private:
  std::int64_t p_;
  std::int64_t g_;
  std::vector<std::int64_t> log_;    // indexed by residue
  std::vector<std::int64_t> power_;  // indexed by exponent mod p-1
};

}  // namespace chowla
