/* Copyright 2026 The knpoly Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef KNPOLY_INTMATH_HPP_
#define KNPOLY_INTMATH_HPP_

#include <cstdint>
#include <vector>

namespace knpoly {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 7; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t mod) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % mod);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = mulmod_u64(r, base, mod);
    base = mulmod_u64(base, base, mod);
    exp >>= 1;
  }
  return r;
}

// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  std::uint64_t order = 1;
  std::uint64_t x = a % n;
  while (x != 1 % n) {
    x = mulmod_u64(x, a, n);
    ++order;
  }
  return order;
}

// p^e, or 0 on overflow past `cap`.
inline std::uint64_t checked_pow_u64(std::uint64_t p, std::uint64_t e,
                                     std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > cap / p) return 0;
    r *= p;
  }
  return r;
}

}  // namespace knpoly

#endif  // KNPOLY_INTMATH_HPP_
