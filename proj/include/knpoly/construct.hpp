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

#ifndef KNPOLY_CONSTRUCT_HPP_
#define KNPOLY_CONSTRUCT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "knpoly/errors.hpp"
#include "knpoly/fq.hpp"
#include "knpoly/intmath.hpp"
#include "knpoly/knormal.hpp"
#include "knpoly/poly.hpp"

namespace knpoly {

inline constexpr std::uint64_t kDefaultVerifyBudget = 64;
inline constexpr std::uint64_t kDefaultConstructCap = 16384;

// Decomposition n = r * p^e with e >= 1 and r = 1 or a prime distinct
// from p, plus the primitivity of q modulo r. Construction steps multiply
// the degree by p, and k stays below p^e along the whole sequence.
struct HypothesisProfile {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::uint64_t e = 0;
  std::uint64_t p_to_e = 0;
  bool q_primitive_mod_r = false;
  std::uint64_t k_max = 0;
};

enum class Verification { kOracleVerified, kConstructedUnverified };

inline const char* to_string(Verification v) {
  return v == Verification::kOracleVerified ? "oracle-verified"
                                            : "constructed-unverified";
}

// One polynomial of a constructed sequence. k is the k-normality degree
// the construction guarantees; entries marked oracle-verified had it
// re-derived independently by classify().
struct SequenceEntry {
  std::uint64_t u = 0;
  FqPoly poly;
  std::uint64_t degree = 0;
  Verification verified = Verification::kConstructedUnverified;
  std::uint64_t k = 0;
};

// A sequence entry that carries an irreducibility guarantee but no
// k-normality claim.
struct IrreducibleEntry {
  std::uint64_t u = 0;
  FqPoly poly;
  std::uint64_t degree = 0;
  Verification verified = Verification::kConstructedUnverified;
};

struct Thm32Result {
  std::vector<SequenceEntry> entries;
  // The un-normalized compositions G_u (G_0 the monic reciprocal of the
  // seed), kept for boundary- and derivative-identity checks.
  std::vector<FqPoly> raw_chain;
  bool truncated = false;
};

struct Prop23Result {
  FqPoly F;
  bool predicted = false;    // the normative irreducibility verdict
  bool cond_delta2 = false;  // delta2^((q-1)/(p-1)) = 1
  bool cond_trace = false;   // the A-normalized trace is nonzero
  bool has_A = false;        // some A in F_q* with A^(p-1) = delta2
  FqElem A;
  Verification verified = Verification::kConstructedUnverified;
};

struct Prop24Result {
  std::vector<IrreducibleEntry> entries;
  bool truncated = false;
};

namespace detail {

// x^p - cx + d over the coefficient field of scale c.
inline FqPoly additive_kernel_poly(const FqField& f, const FqElem& c,
                                   const FqElem& d) {
  std::vector<FqElem> v(f.p() + 1, FqElem(&f, 0));
  v[0] = d;
  v[1] = -c;
  v[f.p()] = FqElem(&f, 1);
  return FqPoly(std::move(v));
}

inline void require_monic_irreducible_seed(const FqPoly& P) {
  if (P.degree() < 1) {
    throw ReducibleInput("constants cannot be irreducible");
  }
  if (!P.is_monic()) {
    throw ValidationError("NonMonicInput",
                          "construction seeds must be monic");
  }
  if (!is_irreducible(P)) {
    throw ReducibleInput("construction seed is reducible");
  }
}

inline const FqField& seed_field(const FqPoly& P) {
  return P.leading().field();
}

inline void require_same_field(const FqElem& v, const FqField& f,
                               const char* what) {
  if (v.field_ptr() == nullptr || !v.field().same_as(f)) {
    throw MismatchedFields(std::string(what) +
                           " lies in a different field than the seed");
  }
}

// n as an element of F_p inside F_q.
inline FqElem int_in_prime_field(const FqField& f, std::uint64_t n) {
  return FqElem(&f, n % f.p());
}

}  // namespace detail

// den^(deg P) * P(num/den), expanded by Horner accumulation. With num and
// den monic of equal degree d the result has degree (deg P) * d and leading
// coefficient P(1) whenever P(1) != 0.
inline FqPoly compose_frac(const FqPoly& P, const FqPoly& num,
                           const FqPoly& den) {
  if (num.degree() < 1 || num.degree() != den.degree()) {
    throw DegreeMismatch("num and den must have equal degree >= 1, got " +
                         std::to_string(num.degree()) + " and " +
                         std::to_string(den.degree()));
  }
  if (!num.is_monic() || !den.is_monic()) {
    throw DegreeMismatch("num and den must both be monic");
  }
  if (P.degree() < 0) return P;
  const auto N = P.degree();
  FqPoly acc = FqPoly::constant(P.coeff(static_cast<std::size_t>(N)));
  FqPoly denpow = FqPoly::constant(P.leading().one_like());
  for (auto i = N; i-- > 0;) {
    denpow = denpow * den;
    acc = acc * num + P.coeff(static_cast<std::size_t>(i)) * denpow;
  }
  return acc;
}

// Decomposes n = r * p^e and checks the degree shape and the primitivity
// of q modulo r required by the recursive constructions.
inline HypothesisProfile check_hypotheses(std::uint64_t n,
                                          const FqField& field) {
  if (n < 2) {
    throw UnsupportedDegreeShape("degree must be at least 2, got " +
                                 std::to_string(n));
  }
  const std::uint64_t p = field.p();
  std::uint64_t e = 0;
  std::uint64_t pe = 1;
  std::uint64_t r = n;
  while (r % p == 0) {
    r /= p;
    ++e;
    pe *= p;
  }
  if (e == 0) {
    throw UnsupportedDegreeShape(
        "degree " + std::to_string(n) + " is not divisible by p = " +
        std::to_string(p) + "; no valid r * p^e decomposition with e >= 1");
  }
  if (r != 1 && !is_prime_u64(r)) {
    throw UnsupportedDegreeShape("cofactor r = " + std::to_string(r) +
                                 " of degree " + std::to_string(n) +
                                 " is composite");
  }
  HypothesisProfile prof;
  prof.n = n;
  prof.r = r;
  prof.e = e;
  prof.p_to_e = pe;
  prof.k_max = pe - 1;
  prof.q_primitive_mod_r = true;
  if (r != 1) {
    prof.q_primitive_mod_r =
        multiplicative_order(field.q() % r, r) == r - 1;
  }
  if (!prof.q_primitive_mod_r) {
    throw NotPrimitiveModR("q = " + std::to_string(field.q()) +
                           " is not a primitive root modulo r = " +
                           std::to_string(r));
  }
  return prof;
}

// Tr_(q|p)(delta * P*'(1) / P*(1)) != 0, with P* the monic reciprocal.
inline bool trace_condition_thm31(const FqPoly& P, const FqElem& delta) {
  FqPoly Ps = reciprocal(P, true);
  FqElem one = P.leading().one_like();
  FqElem ratio = delta * poly_derivative(Ps).eval(one) / Ps.eval(one);
  return trace_q_over_p(ratio) != 0;
}

// Tr_(q|p)(P*'(0)/P*(0)) * Tr_(q|p)(P*'(1)/P*(1)) != 0.
inline bool trace_condition_thm32(const FqPoly& P) {
  FqPoly Ps = reciprocal(P, true);
  FqPoly dPs = poly_derivative(Ps);
  FqElem zero = P.leading().zero_like();
  FqElem one = P.leading().one_like();
  if (trace_q_over_p(dPs.eval(zero) / Ps.eval(zero)) == 0) return false;
  return trace_q_over_p(dPs.eval(one) / Ps.eval(one)) != 0;
}

namespace detail {

// Classifies a constructed polynomial and checks the guaranteed k; used
// for entries whose degree fits the verification budget.
inline void verify_constructed_k(const FqPoly& F, std::uint64_t expected_k,
                                 std::uint64_t u) {
  auto rep = classify(F);
  if (rep.k != expected_k) {
    throw InternalError(
        "ConstructionVerificationFailed",
        "entry u = " + std::to_string(u) + " classified as k = " +
            std::to_string(rep.k) + ", construction guarantees k = " +
            std::to_string(expected_k));
  }
}

}  // namespace detail

// One construction step: composes the monic reciprocal of P with
// (x^p - x) / (x^p - x + delta) and returns the monic reciprocal of the
// result, of degree n*p and the same k-normality degree as P.
inline SequenceEntry theorem31_step(
    const FqPoly& P, const FqElem& delta,
    std::uint64_t verify_budget = kDefaultVerifyBudget) {
  auto seed = classify(P);
  const FqField& field = detail::seed_field(P);
  const std::uint64_t n = static_cast<std::uint64_t>(P.degree());
  HypothesisProfile prof = check_hypotheses(n, field);
  if (seed.k >= prof.p_to_e) {
    throw KTooLarge("k = " + std::to_string(seed.k) +
                    " must be below p^e = " + std::to_string(prof.p_to_e));
  }
  detail::require_same_field(delta, field, "delta");
  if (delta.is_zero()) {
    throw HypothesisViolation("ZeroDelta", "delta must be a unit of F_q");
  }
  if (!trace_condition_thm31(P, delta)) {
    throw TraceGateFailed(
        "Tr(delta * P*'(1)/P*(1)) = 0; the step does not apply");
  }
  FqElem zero = delta.zero_like();
  FqElem one = delta.one_like();
  FqPoly num = detail::additive_kernel_poly(field, one, zero);
  FqPoly den = detail::additive_kernel_poly(field, one, delta);
  FqPoly F = compose_frac(reciprocal(P, true), num, den);
  SequenceEntry entry;
  entry.u = 1;
  entry.degree = n * field.p();
  if (static_cast<std::uint64_t>(F.degree()) != entry.degree) {
    throw InternalError("DegreeLawViolated",
                        "composition degree dropped below n*p");
  }
  entry.poly = reciprocal(F, true);
  entry.k = seed.k;
  if (entry.degree <= verify_budget) {
    detail::verify_constructed_k(entry.poly, seed.k, entry.u);
    entry.verified = Verification::kOracleVerified;
  }
  return entry;
}

// The full recursion: G_0 is the monic reciprocal of P and
// G_u = (x^p - x + delta)^(n*p^(u-1)) * G_(u-1)((x^p - x)/(x^p - x + delta));
// the returned entries are the monic reciprocals G*_u. The trace gate is
// evaluated once, on the seed: the recursion guarantees every later step.
// Entries past construct_cap are not built; the result is flagged
// truncated instead.
inline Thm32Result theorem32_sequence(
    const FqPoly& P, const FqElem& delta, std::uint64_t u_max,
    std::uint64_t verify_budget = kDefaultVerifyBudget,
    std::uint64_t construct_cap = kDefaultConstructCap) {
  auto seed = classify(P);
  const FqField& field = detail::seed_field(P);
  const std::uint64_t n = static_cast<std::uint64_t>(P.degree());
  const std::uint64_t p = field.p();
  HypothesisProfile prof = check_hypotheses(n, field);
  if (seed.k >= prof.p_to_e) {
    throw KTooLarge("k = " + std::to_string(seed.k) +
                    " must be below p^e = " + std::to_string(prof.p_to_e));
  }
  detail::require_same_field(delta, field, "delta");
  if (delta.is_zero() || !field.in_prime_subfield_enc(delta.enc())) {
    throw HypothesisViolation(
        "DeltaOutsidePrimeField",
        "the recursion requires delta in F_p*, the prime subfield units");
  }
  if (!trace_condition_thm32(P)) {
    throw TraceGateFailed(
        "Tr(P*'(0)/P*(0)) * Tr(P*'(1)/P*(1)) = 0; the recursion does not "
        "apply to this seed");
  }

  FqElem zero = delta.zero_like();
  FqElem one = delta.one_like();
  FqPoly num = detail::additive_kernel_poly(field, one, zero);
  FqPoly den = detail::additive_kernel_poly(field, one, delta);

  Thm32Result out;
  FqPoly G = reciprocal(P, true);
  out.raw_chain.push_back(G);
  out.entries.push_back(
      SequenceEntry{0, P, n, Verification::kOracleVerified, seed.k});

  const FqElem g0_at_zero = G.eval(zero);
  const FqElem dG0_at_zero = poly_derivative(G).eval(zero);
  FqElem dG1_at_zero = zero;

  for (std::uint64_t u = 1; u <= u_max; ++u) {
    const std::uint64_t next_deg =
        static_cast<std::uint64_t>(G.degree()) * p;
    if (next_deg > construct_cap) {
      out.truncated = true;
      break;
    }
    FqPoly next = compose_frac(G, num, den);
    if (static_cast<std::uint64_t>(next.degree()) != next_deg) {
      throw InternalError("DegreeLawViolated",
                          "composition degree dropped at u = " +
                              std::to_string(u));
    }
    if (next.leading() != G.eval(one)) {
      throw InternalError("DegreeLawViolated",
                          "leading coefficient is not G_(u-1)(1) at u = " +
                              std::to_string(u));
    }

    // Boundary identity: G_u(0) = G_u(1) = delta^(u*n) * G_0(0).
    FqElem at0 = next.eval(zero);
    FqElem at1 = next.eval(one);
    FqElem boundary = delta.pow(u * n) * g0_at_zero;
    if (at0 != boundary || at1 != boundary) {
      throw InternalError("BoundaryIdentityViolated",
                          "G_u(0), G_u(1) differ from delta^(un) * G_0(0) "
                          "at u = " +
                              std::to_string(u));
    }

    // Derivative identities: G_1'(0) = G_1'(1) = -delta^(n-1) * G_0'(0),
    // and G_u'(0) = G_u'(1) = (-1)^(u-1) delta^((n-1)(u-1)) G_1'(0) for
    // u >= 2.
    FqPoly dnext = poly_derivative(next);
    FqElem d_at0 = dnext.eval(zero);
    FqElem d_at1 = dnext.eval(one);
    FqElem expected_d = (u == 1)
        ? -(delta.pow(n - 1) * dG0_at_zero)
        : (u % 2 == 1 ? delta.pow((n - 1) * (u - 1)) * dG1_at_zero
                      : -(delta.pow((n - 1) * (u - 1)) * dG1_at_zero));
    if (d_at0 != d_at1 || d_at0 != expected_d) {
      throw InternalError("DerivativeIdentityViolated",
                          "G_u'(0), G_u'(1) differ from the recursion "
                          "identity at u = " +
                              std::to_string(u));
    }
    if (u == 1) dG1_at_zero = d_at0;

    out.raw_chain.push_back(next);
    SequenceEntry entry;
    entry.u = u;
    entry.poly = reciprocal(next, true);
    entry.degree = next_deg;
    entry.k = seed.k;
    if (next_deg <= verify_budget) {
      detail::verify_constructed_k(entry.poly, seed.k, u);
      entry.verified = Verification::kOracleVerified;
    }
    out.entries.push_back(std::move(entry));
    G = std::move(next);
  }
  return out;
}

namespace detail {

// Exact irreducibility of the degree-p composition step when delta2 has
// no (p-1)-th root in F_q itself. A root B may still appear in F_(q^n),
// so the two base-field conditions cannot decide; instead F is
// irreducible exactly when x^p - delta2*x + (delta0 - alpha*delta1) /
// (1 - alpha) has no root in F_(q^n) = F_q[alpha].
inline bool affine_step_irreducible_over_extension(const FqPoly& P,
                                                   const FqElem& d0,
                                                   const FqElem& d1,
                                                   const FqElem& d2) {
  const FqField& field = seed_field(P);
  const std::uint64_t p = field.p();
  const std::uint64_t q = field.q();
  const std::uint64_t n = static_cast<std::uint64_t>(P.degree());
  if (p > 256) {
    throw BudgetExceeded(
        "the verdict for a delta2 outside (F_q*)^(p-1) is decided over "
        "F_(q^n); characteristics above 256 are past the supported size");
  }
  auto E = ext_make(P);
  const ExtElem alpha = E->root();
  const ExtElem c =
      (E->embed(d0) - E->embed(d1) * alpha) / (E->one() - alpha);
  std::vector<ExtElem> hc(p + 1, E->zero());
  hc[0] = c;
  hc[1] = -E->embed(d2);
  hc[p] = E->one();
  const Poly<ExtElem> H(std::move(hc));
  const Poly<ExtElem> X({E->zero(), E->one()});
  Poly<ExtElem> h = X;
  for (std::uint64_t i = 0; i < n; ++i) h = poly_powmod(h, q, H);
  if ((h - X).is_zero()) return false;
  return poly_gcd(h - X, H).degree() == 0;
}

}  // namespace detail

// F = (x^p - d2*x + d1)^n * P((x^p - d2*x + d0)/(x^p - d2*x + d1)),
// together with the normative irreducibility prediction. When delta2 =
// A^(p-1) for some A in F_q*, F is irreducible of degree n*p iff
// d2^((q-1)/(p-1)) = 1 and the A-normalized trace is nonzero; both
// conditions are reported. Otherwise the verdict is decided by the exact
// root test over F_(q^n). When deg F fits the budget the prediction is
// cross-checked against an independent irreducibility test.
inline Prop23Result prop23_compose(
    const FqPoly& P, const FqElem& d0, const FqElem& d1, const FqElem& d2,
    std::uint64_t verify_budget = kDefaultVerifyBudget) {
  detail::require_monic_irreducible_seed(P);
  if (P.degree() < 2) {
    throw UnsupportedDegreeShape("the composition requires deg P >= 2");
  }
  const FqField& field = detail::seed_field(P);
  detail::require_same_field(d0, field, "delta0");
  detail::require_same_field(d1, field, "delta1");
  detail::require_same_field(d2, field, "delta2");
  if (d2.is_zero()) {
    throw InvalidDeltas("delta2 must be a unit of F_q");
  }
  if (d0.is_zero() && d1.is_zero()) {
    throw ZeroDeltaPair("delta0 and delta1 cannot both be zero");
  }
  if (d0 == d1) {
    throw NonCoprimePair(
        "delta0 = delta1 makes the numerator and denominator equal");
  }
  const std::uint64_t p = field.p();
  const std::uint64_t q = field.q();
  const std::uint64_t n = static_cast<std::uint64_t>(P.degree());

  FqPoly num = detail::additive_kernel_poly(field, d2, d0);
  FqPoly den = detail::additive_kernel_poly(field, d2, d1);

  Prop23Result out;
  out.F = compose_frac(P, num, den);
  if (static_cast<std::uint64_t>(out.F.degree()) != n * p) {
    throw InternalError("DegreeLawViolated",
                        "composition degree dropped below n*p");
  }

  out.cond_delta2 = d2.pow((q - 1) / (p - 1)) == d2.one_like();
  out.A = d2.zero_like();
  for (std::uint64_t enc = 1; enc < q; ++enc) {
    FqElem a(&field, enc);
    if (a.pow(p - 1) == d2) {
      out.A = a;
      out.has_A = true;
      break;
    }
  }
  if (out.has_A != out.cond_delta2) {
    throw InternalError("NormCriterionViolated",
                        "existence of A with A^(p-1) = delta2 disagrees "
                        "with delta2^((q-1)/(p-1)) = 1");
  }
  if (out.has_A) {
    FqElem one = d2.one_like();
    FqElem ratio = (d1 - d0) * poly_derivative(P).eval(one) / P.eval(one);
    FqElem arg = (ratio - detail::int_in_prime_field(field, n) * d1) /
                 out.A.pow(p);
    out.cond_trace = trace_q_over_p(arg) != 0;
    out.predicted = out.cond_trace;
  } else {
    out.predicted =
        detail::affine_step_irreducible_over_extension(P, d0, d1, d2);
  }

  if (static_cast<std::uint64_t>(out.F.degree()) <= verify_budget) {
    if (is_irreducible(out.F.monic()) != out.predicted) {
      throw InternalError("EquivalenceViolated",
                          "irreducibility test disagrees with the "
                          "predicted verdict");
    }
    out.verified = Verification::kOracleVerified;
  }
  return out;
}

// The irreducible sequence F_0 = P,
// F_u = (x^p - x + d1)^(n*p^(u-1)) * F_(u-1)((x^p - x + d0)/(x^p - x + d1)),
// gated once by the two-trace product on the seed, evaluated at 1 and at
// d0/d1. Emitted entries are monic; entries within the budget are
// independently verified irreducible.
inline Prop24Result prop24_sequence(
    const FqPoly& P, const FqElem& d0, const FqElem& d1, std::uint64_t u_max,
    std::uint64_t verify_budget = kDefaultVerifyBudget,
    std::uint64_t construct_cap = kDefaultConstructCap) {
  detail::require_monic_irreducible_seed(P);
  if (P.degree() < 2) {
    throw UnsupportedDegreeShape("the recursion requires deg P >= 2");
  }
  const FqField& field = detail::seed_field(P);
  detail::require_same_field(d0, field, "delta0");
  detail::require_same_field(d1, field, "delta1");
  if (d1.is_zero()) {
    throw InvalidDeltas("delta1 must be nonzero");
  }
  if (d0 == d1) {
    throw InvalidDeltas(
        "delta0 = delta1 makes the numerator and denominator equal");
  }
  if (!field.in_prime_subfield_enc(d0.enc()) ||
      !field.in_prime_subfield_enc(d1.enc())) {
    throw InvalidDeltas("delta0 and delta1 must lie in F_p");
  }
  const std::uint64_t p = field.p();
  const std::uint64_t n = static_cast<std::uint64_t>(P.degree());

  FqElem one = d1.one_like();
  FqElem c = d0 / d1;
  FqPoly dP = poly_derivative(P);
  FqElem nd1 = detail::int_in_prime_field(field, n) * d1;
  FqElem at1 = P.eval(one);
  FqElem atc = P.eval(c);
  FqElem t1 = ((d1 - d0) * dP.eval(one) - nd1 * at1) / at1;
  FqElem t2 = ((d1 - d0) * dP.eval(c) + nd1 * atc) / atc;
  if (trace_q_over_p(t1) == 0 || trace_q_over_p(t2) == 0) {
    throw TraceGateFailed(
        "the two-trace product on the seed vanishes; the recursion does "
        "not apply");
  }

  FqPoly num = detail::additive_kernel_poly(field, one, d0);
  FqPoly den = detail::additive_kernel_poly(field, one, d1);

  Prop24Result out;
  out.entries.push_back(
      IrreducibleEntry{0, P, n, Verification::kOracleVerified});
  FqPoly G = P;
  for (std::uint64_t u = 1; u <= u_max; ++u) {
    const std::uint64_t next_deg =
        static_cast<std::uint64_t>(G.degree()) * p;
    if (next_deg > construct_cap) {
      out.truncated = true;
      break;
    }
    FqPoly next = compose_frac(G, num, den);
    if (static_cast<std::uint64_t>(next.degree()) != next_deg) {
      throw InternalError("DegreeLawViolated",
                          "composition degree dropped at u = " +
                              std::to_string(u));
    }
    if (next.leading() != G.eval(one)) {
      throw InternalError("DegreeLawViolated",
                          "leading coefficient is not F_(u-1)(1) at u = " +
                              std::to_string(u));
    }
    IrreducibleEntry entry;
    entry.u = u;
    entry.poly = next.monic();
    entry.degree = next_deg;
    if (next_deg <= verify_budget) {
      if (!is_irreducible(entry.poly)) {
        throw InternalError("ConstructionVerificationFailed",
                            "entry u = " + std::to_string(u) +
                                " is reducible; the recursion guarantees "
                                "irreducibility");
      }
      entry.verified = Verification::kOracleVerified;
    }
    out.entries.push_back(std::move(entry));
    G = std::move(next);
  }
  return out;
}

}  // namespace knpoly

#endif  // KNPOLY_CONSTRUCT_HPP_
