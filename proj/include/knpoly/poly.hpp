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

#ifndef KNPOLY_POLY_HPP_
#define KNPOLY_POLY_HPP_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "knpoly/errors.hpp"
#include "knpoly/fq.hpp"
#include "knpoly/intmath.hpp"

namespace knpoly {

template <class E>
concept FieldElement = requires(const E& a, const E& b) {
  { a + b } -> std::same_as<E>;
  { a - b } -> std::same_as<E>;
  { a* b } -> std::same_as<E>;
  { a / b } -> std::same_as<E>;
  { -a } -> std::same_as<E>;
  { a.inv() } -> std::same_as<E>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::same_as<E>;
  { a.one_like() } -> std::same_as<E>;
};

// Dense polynomial over a field, little-endian coefficients, trailing zeros
// trimmed. The zero polynomial has an empty coefficient list and degree -1
// (a sentinel, never meaningful as a number).
template <FieldElement E>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<E> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(const E& v) { return Poly(std::vector<E>{v}); }
  static Poly x(const E& like) {
    return Poly(std::vector<E>{like.zero_like(), like.one_like()});
  }

  bool is_zero() const noexcept { return c_.empty(); }
  std::ptrdiff_t degree() const noexcept {
    return static_cast<std::ptrdiff_t>(c_.size()) - 1;
  }
  const std::vector<E>& coeffs() const noexcept { return c_; }

  // Coefficient of x^i, zero beyond the degree.
  E coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    if (c_.empty()) {
      throw InternalError("ZeroPolyCoeff",
                          "coefficient of the zero polynomial has no field");
    }
    return c_.front().zero_like();
  }

  const E& leading() const { return c_.back(); }
  bool is_monic() const {
    return !c_.empty() && !c_.back().is_zero() &&
           c_.back() == c_.back().one_like();
  }

  Poly operator+(const Poly& o) const {
    const auto& a = c_.size() >= o.c_.size() ? c_ : o.c_;
    const auto& b = c_.size() >= o.c_.size() ? o.c_ : c_;
    std::vector<E> out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
    return Poly(std::move(out));
  }

  Poly operator-(const Poly& o) const {
    std::vector<E> out = c_;
    if (o.c_.size() > out.size()) {
      out.resize(o.c_.size(), o.c_.front().zero_like());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] = out[i] - o.c_[i];
    return Poly(std::move(out));
  }

  Poly operator-() const {
    std::vector<E> out = c_;
    for (auto& v : out) v = -v;
    return Poly(std::move(out));
  }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<E> out(c_.size() + o.c_.size() - 1, c_.front().zero_like());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        out[i + j] = out[i + j] + c_[i] * o.c_[j];
      }
    }
    return Poly(std::move(out));
  }

  Poly operator*(const E& s) const {
    if (s.is_zero()) return Poly();
    std::vector<E> out = c_;
    for (auto& v : out) v = v * s;
    return Poly(std::move(out));
  }

  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!(c_[i] == o.c_[i])) return false;
    }
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  E eval(const E& at) const {
    E acc = at.zero_like();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    return *this * c_.back().inv();
  }

  // Multiplies by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<E> out(c_.size() + k, c_.front().zero_like());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return Poly(std::move(out));
  }

  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero() || c_.size() < d.c_.size()) return {Poly(), *this};
    const E lead_inv = d.c_.back().inv();
    std::vector<E> rem = c_;
    std::vector<E> quo(c_.size() - d.c_.size() + 1, c_.front().zero_like());
    for (std::size_t i = c_.size(); i-- >= d.c_.size();) {
      if (!rem[i].is_zero()) {
        E f = rem[i] * lead_inv;
        std::size_t shift = i - (d.c_.size() - 1);
        quo[shift] = f;
        for (std::size_t j = 0; j < d.c_.size(); ++j) {
          rem[shift + j] = rem[shift + j] - f * d.c_[j];
        }
      }
      if (i == 0) break;
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<E> c_;
};

template <FieldElement E>
Poly<E> operator*(const E& s, const Poly<E>& p) {
  return p * s;
}

// Monic greatest common divisor; gcd(f, 0) is the monic scaling of f.
template <FieldElement E>
Poly<E> poly_gcd(Poly<E> a, Poly<E> b) {
  if (a.is_zero() && b.is_zero()) {
    throw BothZero("gcd of two zero polynomials");
  }
  while (!b.is_zero()) {
    Poly<E> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// n-fold sum of v, by doubling.
template <FieldElement E>
E scale_by_uint(const E& v, std::uint64_t n) {
  E acc = v.zero_like();
  E base = v;
  while (n > 0) {
    if (n & 1) acc = acc + base;
    base = base + base;
    n >>= 1;
  }
  return acc;
}

// Formal derivative; characteristic-p wraparound comes from the coefficient
// field itself.
template <FieldElement E>
Poly<E> poly_derivative(const Poly<E>& f) {
  if (f.degree() < 1) return Poly<E>();
  const auto& c = f.coeffs();
  std::vector<E> out;
  out.reserve(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    out.push_back(scale_by_uint(c[i], i));
  }
  return Poly<E>(std::move(out));
}

// P*(x) = x^deg(P) * P(1/x): plain coefficient reversal. Monic mode rescales
// so the leading coefficient becomes one (the roots are unchanged).
template <FieldElement E>
Poly<E> reciprocal(const Poly<E>& p, bool normalize_monic = false) {
  if (p.is_zero() || p.coeff(0).is_zero()) {
    throw ZeroConstantTerm("reciprocal of a polynomial with zero constant term");
  }
  std::vector<E> rev(p.coeffs().rbegin(), p.coeffs().rend());
  Poly<E> out(std::move(rev));
  return normalize_monic ? out.monic() : out;
}

template <FieldElement E>
Poly<E> poly_powmod(Poly<E> base, std::uint64_t exp, const Poly<E>& mod) {
  Poly<E> r = Poly<E>::constant(mod.leading().one_like());
  base = base % mod;
  while (exp > 0) {
    if (exp & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return r;
}

using FqPoly = Poly<FqElem>;

inline FqPoly fq_poly(const std::shared_ptr<const FqField>& f,
                      const std::vector<std::uint64_t>& encs) {
  std::vector<FqElem> c;
  c.reserve(encs.size());
  for (std::uint64_t e : encs) c.push_back(fq(f, e));
  return FqPoly(std::move(c));
}

// x^n - 1 over the given field.
inline FqPoly xn_minus_1(const std::shared_ptr<const FqField>& f,
                         std::uint64_t n) {
  std::vector<FqElem> c(n + 1, FqElem(f.get(), 0));
  c[0] = -fq(f, 1);
  c[n] = fq(f, 1);
  return FqPoly(std::move(c));
}

namespace detail {

// h(x) -> h(x)^q mod f, iterated `steps` times.
inline FqPoly iterate_q_power(FqPoly h, std::uint64_t q, const FqPoly& f,
                              std::uint64_t steps) {
  for (std::uint64_t s = 0; s < steps; ++s) h = poly_powmod(h, q, f);
  return h;
}

}  // namespace detail

// Rabin's irreducibility criterion over F_q: f of degree d is irreducible iff
// x^(q^d) = x (mod f) and gcd(x^(q^(d/l)) - x, f) = 1 for every prime l | d.
// q-power towers are walked step by step, so q^d is never formed as an
// integer.
inline bool is_irreducible(const FqPoly& f) {
  if (f.degree() < 1) return false;
  const std::uint64_t d = static_cast<std::uint64_t>(f.degree());
  if (d == 1) return true;
  const FqField& fld = f.leading().field();
  const std::uint64_t q = fld.q();
  const FqPoly fm = f.monic();
  const FqPoly x = FqPoly::x(f.leading());

  const auto divisors = prime_divisors(d);
  FqPoly h = x;
  std::uint64_t reached = 0;
  for (auto it = divisors.rbegin(); it != divisors.rend(); ++it) {
    std::uint64_t target = d / *it;
    h = detail::iterate_q_power(std::move(h), q, fm, target - reached);
    reached = target;
    if (poly_gcd(h - x, fm).degree() != 0) return false;
  }
  h = detail::iterate_q_power(std::move(h), q, fm, d - reached);
  return (h - x).is_zero();
}

}  // namespace knpoly

#endif  // KNPOLY_POLY_HPP_
