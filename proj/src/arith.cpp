#include "chowla/arith.hpp"

#include <stdexcept>
#include <string>

namespace chowla {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_odd_prime(std::int64_t n) {
  if (n == 2 || !is_prime(n)) {
    throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(n));
  }
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");
  __int128 result = 1 % m;
  __int128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = mod(a, p), r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::domain_error("mod_inv: not invertible");
  return mod(s0, p);
}

int v2(std::int64_t n) {
  if (n == 0) return 64;
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  return v;
}

int legendre(std::int64_t a, std::int64_t p) {
  std::int64_t r = mod(a, p);
  if (r == 0) return 0;
  return mod_pow(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::int64_t primitive_root(std::int64_t p) {
  require_odd_prime(p);
  std::vector<std::int64_t> factors;
  std::int64_t n = p - 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::int64_t q : factors) {
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p = 3 is caught above (g = 2); unreachable for odd primes
}

DiscreteLog::DiscreteLog(std::int64_t p, std::int64_t generator)
    : p_(p), g_(mod(generator, p)), log_(p, -1), power_(p - 1) {
  std::int64_t x = 1;
  for (std::int64_t e = 0; e < p - 1; ++e) {
    if (log_[x] != -1) throw std::invalid_argument("DiscreteLog: not a generator");
    log_[x] = e;
    power_[e] = x;
    x = x * g_ % p;
  }
}

std::int64_t DiscreteLog::log(std::int64_t a) const {
  std::int64_t r = mod(a, p_);
  if (r == 0) throw std::domain_error("discrete log of a multiple of p");
  return log_[r];
}

std::int64_t DiscreteLog::power(std::int64_t e) const { return power_[mod(e, p_ - 1)]; }

}  // namespace chowla
