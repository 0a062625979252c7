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

#ifndef KNPOLY_FQ_HPP_
#define KNPOLY_FQ_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "knpoly/errors.hpp"
#include "knpoly/intmath.hpp"

namespace knpoly {

namespace detail {

// Dense little-endian polynomials over F_p as residue vectors, used only to
// validate and select field moduli before any FqField exists.

inline void modp_trim(std::vector<std::uint32_t>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::vector<std::uint32_t> modp_mul(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  std::vector<std::uint32_t> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(acc[i]);
  }
  modp_trim(out);
  return out;
}

inline std::vector<std::uint32_t> modp_rem(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint64_t p) {
  std::uint64_t lead_inv = powmod_u64(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    std::uint64_t c = mulmod_u64(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t sub = mulmod_u64(c, b[j], p);
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
    }
    modp_trim(a);
  }
  return a;
}

inline std::vector<std::uint32_t> modp_gcd(std::vector<std::uint32_t> a,
                                           std::vector<std::uint32_t> b,
                                           std::uint64_t p) {
  while (!b.empty()) {
    auto r = modp_rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::vector<std::uint32_t> modp_mulmod(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
    const std::vector<std::uint32_t>& f, std::uint64_t p) {
  return modp_rem(modp_mul(a, b, p), f, p);
}

inline std::vector<std::uint32_t> modp_powmod(std::vector<std::uint32_t> base,
                                              std::uint64_t exp,
                                              const std::vector<std::uint32_t>& f,
                                              std::uint64_t p) {
  std::vector<std::uint32_t> r{1};
  while (exp > 0) {
    if (exp & 1) r = modp_mulmod(r, base, f, p);
    base = modp_mulmod(base, base, f, p);
    exp >>= 1;
  }
  return r;
}

// Rabin's criterion: f of degree d is irreducible over F_p iff
// x^(p^d) = x (mod f) and gcd(x^(p^(d/l)) - x, f) = 1 for each prime l | d.
inline bool modp_is_irreducible(const std::vector<std::uint32_t>& f,
                                std::uint64_t p) {
  if (f.size() < 2) return false;
  std::size_t d = f.size() - 1;
  if (d == 1) return true;
  auto frob_power = [&](std::size_t steps) {
    std::vector<std::uint32_t> h{0, 1};
    for (std::size_t i = 0; i < steps; ++i) h = modp_powmod(h, p, f, p);
    return h;
  };
  auto sub_x = [&](std::vector<std::uint32_t> h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = static_cast<std::uint32_t>((h[1] + p - 1) % p);
    modp_trim(h);
    return h;
  };
  for (std::uint64_t l : prime_divisors(d)) {
    auto g = modp_gcd(sub_x(frob_power(d / l)), f, p);
    if (g.size() != 1) return false;
  }
  return sub_x(frob_power(d)).empty();
}

}  // namespace detail

// F_q = F_(p^m) as F_p[z]/(modulus). Elements are stored as the integer
// encoding sum(coords[i] * p^i) of their coordinate vector in the power basis
// of the modulus; for m = 1 the encoding is the residue itself.
class FqField : public std::enable_shared_from_this<FqField> {
 public:
  static constexpr std::uint64_t kDefaultMaxQ = 1ull << 20;

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t m() const noexcept { return m_; }
  std::uint64_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept {
    return modulus_;
  }

  bool same_as(const FqField& other) const noexcept {
    if (this == &other) return true;
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

  std::uint64_t add_enc(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) {
      std::uint64_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    std::uint64_t out = 0;
    std::uint64_t scale = 1;
    for (std::uint64_t i = 0; i < m_; ++i) {
      std::uint64_t da = a % p_, db = b % p_;
      a /= p_;
      b /= p_;
      std::uint64_t s = da + db;
      if (s >= p_) s -= p_;
      out += s * scale;
      scale *= p_;
    }
    return out;
  }

  std::uint64_t neg_enc(std::uint64_t a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint64_t out = 0;
    std::uint64_t scale = 1;
    for (std::uint64_t i = 0; i < m_; ++i) {
      std::uint64_t da = a % p_;
      a /= p_;
      out += (da == 0 ? 0 : p_ - da) * scale;
      scale *= p_;
    }
    return out;
  }

  std::uint64_t sub_enc(std::uint64_t a, std::uint64_t b) const {
    return add_enc(a, neg_enc(b));
  }

  std::uint64_t mul_enc(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) return mulmod_u64(a, b, p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t da[kMaxM], db[kMaxM];
    std::uint64_t acc[2 * kMaxM - 1] = {0};
    decode(a, da);
    decode(b, db);
    for (std::uint64_t i = 0; i < m_; ++i) {
      if (da[i] == 0) continue;
      for (std::uint64_t j = 0; j < m_; ++j) {
        acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
      }
    }
    for (std::uint64_t i = 2 * m_ - 2; i >= m_; --i) {
      std::uint64_t c = acc[i];
      if (c != 0) {
        acc[i] = 0;
        for (std::uint64_t j = 0; j < m_; ++j) {
          std::uint64_t sub = mulmod_u64(c, modulus_[j], p_);
          acc[i - m_ + j] = (acc[i - m_ + j] + p_ - sub) % p_;
        }
      }
    }
    std::uint64_t out = 0;
    std::uint64_t scale = 1;
    for (std::uint64_t i = 0; i < m_; ++i) {
      out += acc[i] * scale;
      scale *= p_;
    }
    return out;
  }

  std::uint64_t pow_enc(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e > 0) {
      if (e & 1) r = mul_enc(r, a);
      a = mul_enc(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv_enc(std::uint64_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
    if (m_ == 1) return powmod_u64(a, p_ - 2, p_);
    return pow_enc(a, q_ - 2);
  }

  std::uint64_t div_enc(std::uint64_t a, std::uint64_t b) const {
    return mul_enc(a, inv_enc(b));
  }

  // a^(p^i); frobenius_p(a, m) = a.
  std::uint64_t frobenius_p_enc(std::uint64_t a, std::uint64_t i) const {
    i %= m_;
    for (std::uint64_t s = 0; s < i; ++s) a = pow_enc(a, p_);
    return a;
  }

  // Tr_{q|p}(a) = sum of a^(p^i) for i < m; lands in the prime subfield.
  std::uint64_t trace_to_prime_enc(std::uint64_t a) const {
    if (m_ == 1) return a;
    std::uint64_t acc = 0;
    std::uint64_t x = a;
    for (std::uint64_t i = 0; i < m_; ++i) {
      acc = add_enc(acc, x);
      x = pow_enc(x, p_);
    }
    if (acc >= p_) {
      throw InternalError("TraceOutsidePrimeField",
                          "trace landed outside F_p");
    }
    return acc;
  }

  bool in_prime_subfield_enc(std::uint64_t a) const {
    return pow_enc(a, p_) == a;
  }

 private:
  friend std::shared_ptr<const FqField> make_field(
      std::uint64_t, std::uint64_t, const std::vector<std::uint32_t>*,
      std::uint64_t);

  static constexpr std::uint64_t kMaxM = 32;

  FqField(std::uint64_t p, std::uint64_t m, std::vector<std::uint32_t> modulus,
          std::uint64_t q)
      : p_(p), m_(m), q_(q), modulus_(std::move(modulus)) {}

  void decode(std::uint64_t e, std::uint32_t* out) const {
    for (std::uint64_t i = 0; i < m_; ++i) {
      out[i] = static_cast<std::uint32_t>(e % p_);
      e /= p_;
    }
  }

  std::uint64_t p_, m_, q_;
  std::vector<std::uint32_t> modulus_;  // length m+1, monic
};

// Builds F_(p^m). With no modulus given, picks the monic irreducible degree-m
// polynomial over F_p of smallest integer encoding, so every run and every
// implementation using the same rule agrees on the field model.
inline std::shared_ptr<const FqField> make_field(
    std::uint64_t p, std::uint64_t m,
    const std::vector<std::uint32_t>* modulus = nullptr,
    std::uint64_t max_q = FqField::kDefaultMaxQ) {
  if (!is_prime_u64(p)) {
    throw NonPrimeCharacteristic("p = " + std::to_string(p) +
                                 " is not prime");
  }
  if (m < 1 || m > 32) {
    throw ValidationError("ExtensionDegreeOutOfRange",
                          "m = " + std::to_string(m) +
                              " outside supported range [1, 32]");
  }
  std::uint64_t q = checked_pow_u64(p, m, max_q);
  if (q == 0) {
    throw ValidationError("FieldTooLarge",
                          "p^m exceeds the field size cap " +
                              std::to_string(max_q));
  }

  std::vector<std::uint32_t> mod;
  if (modulus != nullptr) {
    mod = *modulus;
    detail::modp_trim(mod);
    if (mod.size() != m + 1 || mod.back() != 1) {
      throw ValidationError("BadModulusShape",
                            "modulus must be monic of degree m");
    }
    for (std::uint32_t c : mod) {
      if (c >= p) {
        throw ValidationError("BadModulusShape",
                              "modulus coefficients must lie in [0, p)");
      }
    }
    if (m > 1 && !detail::modp_is_irreducible(mod, p)) {
      throw ReducibleModulus("supplied modulus is reducible over F_" +
                             std::to_string(p));
    }
  } else if (m == 1) {
    mod = {0, 1};  // x
  } else {
    for (std::uint64_t low = 0; low < q; ++low) {
      std::vector<std::uint32_t> cand(m + 1, 0);
      std::uint64_t e = low;
      for (std::uint64_t i = 0; i < m; ++i) {
        cand[i] = static_cast<std::uint32_t>(e % p);
        e /= p;
      }
      cand[m] = 1;
      if (detail::modp_is_irreducible(cand, p)) {
        mod = std::move(cand);
        break;
      }
    }
  }
  return std::shared_ptr<const FqField>(new FqField(p, m, std::move(mod), q));
}

// An element of F_q, pinned to its field; all operators validate that both
// operands come from the same field.
class FqElem {
 public:
  FqElem() : fld_(nullptr), enc_(0) {}
  FqElem(const FqField* fld, std::uint64_t enc) : fld_(fld), enc_(enc) {}

  std::uint64_t enc() const noexcept { return enc_; }
  const FqField& field() const { return *fld_; }
  const FqField* field_ptr() const noexcept { return fld_; }

  bool is_zero() const noexcept { return enc_ == 0; }
  FqElem zero_like() const { return FqElem(fld_, 0); }
  FqElem one_like() const { return FqElem(fld_, 1); }

  FqElem operator+(const FqElem& o) const {
    check(o);
    return FqElem(fld_, fld_->add_enc(enc_, o.enc_));
  }
  FqElem operator-(const FqElem& o) const {
    check(o);
    return FqElem(fld_, fld_->sub_enc(enc_, o.enc_));
  }
  FqElem operator*(const FqElem& o) const {
    check(o);
    return FqElem(fld_, fld_->mul_enc(enc_, o.enc_));
  }
  FqElem operator/(const FqElem& o) const {
    check(o);
    return FqElem(fld_, fld_->div_enc(enc_, o.enc_));
  }
  FqElem operator-() const {
    req();
    return FqElem(fld_, fld_->neg_enc(enc_));
  }

  FqElem inv() const {
    req();
    return FqElem(fld_, fld_->inv_enc(enc_));
  }
  FqElem pow(std::uint64_t e) const {
    req();
    return FqElem(fld_, fld_->pow_enc(enc_, e));
  }

  bool operator==(const FqElem& o) const {
    check(o);
    return enc_ == o.enc_;
  }
  bool operator!=(const FqElem& o) const { return !(*this == o); }

 private:
  void req() const {
    if (fld_ == nullptr) {
      throw MismatchedFields("arithmetic on an uninitialized element");
    }
  }
  void check(const FqElem& o) const {
    if (fld_ == nullptr || o.fld_ == nullptr) {
      throw MismatchedFields("arithmetic on an uninitialized element");
    }
    if (fld_ == o.fld_) return;
    if (!fld_->same_as(*o.fld_)) {
      throw MismatchedFields("operands belong to different fields");
    }
  }

  const FqField* fld_;
  std::uint64_t enc_;
};

inline FqElem fq(const std::shared_ptr<const FqField>& f, std::uint64_t enc) {
  if (enc >= f->q()) {
    throw ValidationError("EncodingOutOfRange",
                          "element encoding " + std::to_string(enc) +
                              " not in [0, q)");
  }
  return FqElem(f.get(), enc);
}

inline FqElem frobenius_p(const FqElem& a, std::uint64_t i) {
  return FqElem(a.field_ptr(), a.field().frobenius_p_enc(a.enc(), i));
}

// Residue in [0, p).
inline std::uint64_t trace_q_over_p(const FqElem& a) {
  return a.field().trace_to_prime_enc(a.enc());
}

}  // namespace knpoly

#endif  // KNPOLY_FQ_HPP_
