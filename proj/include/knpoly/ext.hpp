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

#ifndef KNPOLY_EXT_HPP_
#define KNPOLY_EXT_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "knpoly/errors.hpp"
#include "knpoly/fq.hpp"
#include "knpoly/intmath.hpp"
#include "knpoly/poly.hpp"

namespace knpoly {

class ExtElem;

// F_(q^n) realized as F_q[y]/(F) for monic irreducible F. The class of y is
// a root of F. The q-power Frobenius is F_q-linear on coordinates, so it is
// precomputed once as the n x n matrix sending y^i to (y^i)^q.
class ExtField : public std::enable_shared_from_this<ExtField> {
 public:
  const FqPoly& modulus() const noexcept { return F_; }
  std::uint64_t n() const noexcept { return n_; }
  const FqField& base() const noexcept { return *base_; }
  std::shared_ptr<const FqField> base_ptr() const noexcept { return base_; }

  ExtElem from_poly(FqPoly rep) const;
  ExtElem zero() const;
  ExtElem one() const;
  ExtElem root() const;                 // the class of y
  ExtElem embed(const FqElem& c) const; // base-field constant

  // rep -> rep^q as a coordinate map.
  FqPoly apply_frobenius(const FqPoly& rep) const {
    if (rep.is_zero()) return rep;
    std::vector<FqElem> out(n_, FqElem(base_.get(), 0));
    const auto& c = rep.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      const auto& col = frob_cols_[i].coeffs();
      for (std::size_t j = 0; j < col.size(); ++j) {
        out[j] = out[j] + c[i] * col[j];
      }
    }
    return FqPoly(std::move(out));
  }

 private:
  friend std::shared_ptr<const ExtField> ext_make(const FqPoly&);

  ExtField(std::shared_ptr<const FqField> base, FqPoly F)
      : base_(std::move(base)), F_(std::move(F)),
        n_(static_cast<std::uint64_t>(F_.degree())) {
    FqElem one(base_.get(), 1);
    FqPoly y_to_q = poly_powmod(FqPoly::x(one), base_->q(), F_);
    frob_cols_.reserve(n_);
    FqPoly cur = FqPoly::constant(one);
    for (std::uint64_t i = 0; i < n_; ++i) {
      frob_cols_.push_back(cur);
      if (i + 1 < n_) cur = (cur * y_to_q) % F_;
    }
  }

  std::shared_ptr<const FqField> base_;
  FqPoly F_;
  std::uint64_t n_;
  std::vector<FqPoly> frob_cols_;  // frob_cols_[i] = (y^i)^q mod F
};

class ExtElem {
 public:
  ExtElem() : ext_(nullptr) {}
  ExtElem(const ExtField* ext, FqPoly rep)
      : ext_(ext), rep_(std::move(rep)) {}

  const FqPoly& rep() const noexcept { return rep_; }
  const ExtField& ext() const { return *ext_; }
  const ExtField* ext_ptr() const noexcept { return ext_; }

  bool is_zero() const noexcept { return rep_.is_zero(); }
  ExtElem zero_like() const { return ExtElem(ext_, FqPoly()); }
  ExtElem one_like() const {
    return ExtElem(ext_, FqPoly::constant(FqElem(&ext_->base(), 1)));
  }

  ExtElem operator+(const ExtElem& o) const {
    check(o);
    return ExtElem(ext_, rep_ + o.rep_);
  }
  ExtElem operator-(const ExtElem& o) const {
    check(o);
    return ExtElem(ext_, rep_ - o.rep_);
  }
  ExtElem operator-() const { return ExtElem(ext_, -rep_); }
  ExtElem operator*(const ExtElem& o) const {
    check(o);
    return ExtElem(ext_, (rep_ * o.rep_) % ext_->modulus());
  }
  ExtElem operator/(const ExtElem& o) const { return *this * o.inv(); }

  // Inverse by the extended Euclidean algorithm in F_q[y]; avoids ever
  // forming q^n as an integer exponent.
  ExtElem inv() const {
    if (is_zero()) {
      throw DivisionByZero("inverse of zero in the extension field");
    }
    FqPoly r0 = ext_->modulus();
    FqPoly r1 = rep_;
    FqElem one(&ext_->base(), 1);
    FqPoly t0;  // zero
    FqPoly t1 = FqPoly::constant(one);
    while (!r1.is_zero()) {
      auto [q, r2] = r0.divmod(r1);
      FqPoly t2 = t0 - q * t1;
      r0 = std::move(r1);
      r1 = std::move(r2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 = gcd = nonzero constant (modulus irreducible).
    return ExtElem(ext_, (t0 * r0.leading().inv()) % ext_->modulus());
  }

  ExtElem pow(std::uint64_t e) const {
    ExtElem r = one_like();
    ExtElem b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const ExtElem& o) const {
    check(o);
    return rep_ == o.rep_;
  }
  bool operator!=(const ExtElem& o) const { return !(*this == o); }

 private:
  void check(const ExtElem& o) const {
    if (ext_ == nullptr || o.ext_ == nullptr) {
      throw MismatchedFields("arithmetic on an uninitialized element");
    }
    if (ext_ == o.ext_) return;
    if (!(ext_->base().same_as(o.ext_->base()) &&
          ext_->modulus() == o.ext_->modulus())) {
      throw MismatchedFields("operands belong to different extension fields");
    }
  }

  const ExtField* ext_;
  FqPoly rep_;
};

inline ExtElem ExtField::from_poly(FqPoly rep) const {
  return ExtElem(this, rep % F_);
}
inline ExtElem ExtField::zero() const { return ExtElem(this, FqPoly()); }
inline ExtElem ExtField::one() const {
  return ExtElem(this, FqPoly::constant(FqElem(base_.get(), 1)));
}
inline ExtElem ExtField::root() const {
  if (n_ == 1) {
    // y = -F(0) is a base-field constant when the modulus is linear.
    return ExtElem(this, FqPoly::constant(-F_.coeff(0)));
  }
  return ExtElem(this, FqPoly::x(FqElem(base_.get(), 1)));
}
inline ExtElem ExtField::embed(const FqElem& c) const {
  if (!c.field().same_as(*base_)) {
    throw MismatchedFields("constant comes from a different base field");
  }
  return ExtElem(this, c.is_zero()
                           ? FqPoly()
                           : FqPoly::constant(FqElem(base_.get(), c.enc())));
}

inline std::shared_ptr<const ExtField> ext_make(const FqPoly& F) {
  if (F.degree() < 1 || !F.is_monic()) {
    throw ValidationError("BadExtensionModulus",
                          "extension modulus must be monic of degree >= 1");
  }
  if (F.degree() > 1 && !is_irreducible(F)) {
    throw ReducibleModulus("extension modulus is reducible");
  }
  auto base = F.leading().field().shared_from_this();
  return std::shared_ptr<const ExtField>(new ExtField(std::move(base), F));
}

// a^(q^j); frobenius_q(a, n) = a.
inline ExtElem frobenius_q(const ExtElem& a, std::uint64_t j) {
  const ExtField& E = a.ext();
  j %= E.n();
  FqPoly rep = a.rep();
  for (std::uint64_t s = 0; s < j; ++s) rep = E.apply_frobenius(rep);
  return ExtElem(&E, std::move(rep));
}

// The n conjugates a, a^q, ..., a^(q^(n-1)).
inline std::vector<ExtElem> conjugates(const ExtElem& a) {
  const ExtField& E = a.ext();
  std::vector<ExtElem> out;
  out.reserve(E.n());
  FqPoly rep = a.rep();
  for (std::uint64_t i = 0; i < E.n(); ++i) {
    out.emplace_back(&E, rep);
    if (i + 1 < E.n()) rep = E.apply_frobenius(rep);
  }
  return out;
}

// Tr_{q^n|q}(a) = sum of all conjugates; lands in F_q.
inline FqElem trace_qn_over_q(const ExtElem& a) {
  const ExtField& E = a.ext();
  ExtElem acc = E.zero();
  for (const ExtElem& c : conjugates(a)) acc = acc + c;
  if (acc.rep().degree() > 0) {
    throw InternalError("TraceOutsideBaseField",
                        "relative trace landed outside F_q");
  }
  return acc.is_zero() ? FqElem(&E.base(), 0) : acc.rep().coeff(0);
}

// L_phi(a) = sum of t_v * a^(q^v) for phi = sum of t_v x^v in F_q[x].
inline ExtElem linearized_eval(const FqPoly& phi, const ExtElem& a) {
  const ExtField& E = a.ext();
  ExtElem acc = E.zero();
  if (phi.is_zero()) return acc;
  FqPoly rep = a.rep();
  for (std::size_t v = 0; v < phi.coeffs().size(); ++v) {
    const FqElem& t = phi.coeffs()[v];
    if (!t.is_zero()) {
      acc = acc + ExtElem(&E, rep * FqElem(&E.base(), t.enc()));
    }
    if (v + 1 < phi.coeffs().size()) rep = E.apply_frobenius(rep);
  }
  return acc;
}

// Same map, but against a precomputed conjugate list of a (index j holds
// a^(q^j)); conjugate indices wrap mod n since Frobenius has order n.
inline ExtElem linearized_eval_cached(const FqPoly& phi,
                                      const std::vector<ExtElem>& conj) {
  const ExtField& E = conj.front().ext();
  ExtElem acc = E.zero();
  if (phi.is_zero()) return acc;
  for (std::size_t v = 0; v < phi.coeffs().size(); ++v) {
    const FqElem& t = phi.coeffs()[v];
    if (t.is_zero()) continue;
    const ExtElem& av = conj[v % conj.size()];
    acc = acc + ExtElem(&E, av.rep() * FqElem(&E.base(), t.enc()));
  }
  return acc;
}

// True iff a lies in no proper subfield F_(q^v) with v | n, v < n. It
// suffices to test the maximal subfields v = n / l over the primes l | n.
inline bool is_proper(const ExtElem& a) {
  const std::uint64_t n = a.ext().n();
  if (n == 1) return true;
  for (std::uint64_t l : prime_divisors(n)) {
    if (frobenius_q(a, n / l) == a) return false;
  }
  return true;
}

// Machine witness for the partial-fraction identity
//   sum_{j=0}^{p-1} 1/(gamma + j*theta) = -1/(gamma^p - gamma),
// which holds whenever gamma^p != gamma and theta is in F_p*. Returns the
// result of exact evaluation of both sides.
inline bool lemma25_check(const ExtElem& gamma, const FqElem& theta) {
  const ExtField& E = gamma.ext();
  const std::uint64_t p = E.base().p();
  if (theta.is_zero()) throw ZeroTheta("theta must be nonzero");
  if (!theta.field().same_as(E.base())) {
    throw MismatchedFields("theta comes from a different base field");
  }
  if (!E.base().in_prime_subfield_enc(theta.enc())) {
    throw ThetaOutsidePrimeField("theta must lie in the prime subfield F_p");
  }
  ExtElem gp = gamma.pow(p);
  if (gp == gamma) {
    throw ImproperGamma("gamma^p = gamma; gamma lies in F_p");
  }
  ExtElem th = E.embed(theta);
  ExtElem lhs = E.zero();
  ExtElem cur = gamma;
  for (std::uint64_t j = 0; j < p; ++j) {
    lhs = lhs + cur.inv();
    cur = cur + th;
  }
  ExtElem rhs = -((gp - gamma).inv());
  return lhs == rhs;
}

}  // namespace knpoly

#endif  // KNPOLY_EXT_HPP_
