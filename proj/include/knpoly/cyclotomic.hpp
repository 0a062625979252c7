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

#ifndef KNPOLY_CYCLOTOMIC_HPP_
#define KNPOLY_CYCLOTOMIC_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "knpoly/errors.hpp"
#include "knpoly/ext.hpp"
#include "knpoly/fq.hpp"
#include "knpoly/intmath.hpp"
#include "knpoly/poly.hpp"

namespace knpoly {

// x^n - 1 = (phi_1 * ... * phi_r)^t over F_q, with n = n1 * p^e, t = p^e,
// gcd(n1, p) = 1, and phi_i the distinct irreducible factors of x^(n1) - 1.
struct CyclotomicFactorization {
  std::uint64_t n = 0;
  std::uint64_t n1 = 0;
  std::uint64_t e = 0;
  std::uint64_t t = 1;
  std::vector<FqPoly> factors;
  std::shared_ptr<const FqField> field;
};

// Degree-s monic divisors R_(s,i) of x^n - 1 with their cofactors
// phi_(s,i) = (x^n - 1) / R_(s,i), for every s in [0, n).
struct DivisorTable {
  std::uint64_t n = 0;
  std::vector<std::vector<std::pair<FqPoly, FqPoly>>> entries;  // index s
  std::vector<std::uint64_t> u;                                 // u[s]

  const std::vector<std::pair<FqPoly, FqPoly>>& at_degree(
      std::uint64_t s) const {
    return entries.at(s);
  }
};

namespace detail {

// Orders polynomials as their little-endian base-q integer encodings would,
// without ever forming those integers.
inline bool poly_encoding_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = ca.size(); i-- > 0;) {
    if (ca[i].enc() != cb[i].enc()) return ca[i].enc() < cb[i].enc();
  }
  return false;
}

// Smallest-encoding monic irreducible of degree d over F_q, found by an
// ascending scan over the low-coefficient encodings.
inline FqPoly first_irreducible(const std::shared_ptr<const FqField>& f,
                                std::uint64_t d) {
  const std::uint64_t scan_cap = 1ull << 22;
  for (std::uint64_t low = 0; low < scan_cap; ++low) {
    std::vector<FqElem> c(d + 1, FqElem(f.get(), 0));
    std::uint64_t e = low;
    for (std::uint64_t i = 0; i < d && e > 0; ++i) {
      c[i] = fq(f, e % f->q());
      e /= f->q();
    }
    if (e > 0) break;
    c[d] = fq(f, 1);
    FqPoly cand(std::move(c));
    if (is_irreducible(cand)) return cand;
  }
  throw InternalError("IrreducibleScanExhausted",
                      "no irreducible of degree " + std::to_string(d) +
                          " found within the scan cap");
}

// Base-q digits (little-endian) of (q^ord - 1) / n1, by schoolbook long
// division on the base-q numeral (q-1, ..., q-1); avoids big integers.
inline std::vector<std::uint64_t> digits_of_group_index(std::uint64_t q,
                                                        std::uint64_t ord,
                                                        std::uint64_t n1) {
  std::vector<std::uint64_t> digits(ord, 0);
  std::uint64_t rem = 0;
  for (std::uint64_t j = ord; j-- > 0;) {
    std::uint64_t cur = rem * q + (q - 1);
    digits[j] = cur / n1;
    rem = cur % n1;
  }
  if (rem != 0) {
    throw InternalError("GroupIndexNotIntegral",
                        "n1 does not divide q^ord - 1");
  }
  return digits;
}

// eta^((q^ord - 1)/n1) using the base-q digit expansion of the exponent;
// eta^(q^j) comes from the Frobenius, so no exponent ever exceeds q.
inline ExtElem power_to_group_index(const ExtElem& eta,
                                    const std::vector<std::uint64_t>& digits) {
  ExtElem acc = eta.one_like();
  ExtElem frob = eta;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (digits[j] != 0) acc = acc * frob.pow(digits[j]);
    if (j + 1 < digits.size()) frob = frobenius_q(frob, 1);
  }
  return acc;
}

// Deterministic primitive n1-th root of unity in F_(q^ord): scan candidates
// by ascending encoding, project each into the order-n1 subgroup, and keep
// the first projection of exact order n1.
inline ExtElem find_root_of_unity(const std::shared_ptr<const ExtField>& E,
                                  std::uint64_t n1) {
  const std::uint64_t q = E->base().q();
  const std::uint64_t ord = E->n();
  const auto digits = digits_of_group_index(q, ord, n1);
  const auto prime_parts = prime_divisors(n1);
  const std::uint64_t scan_cap = 1ull << 22;
  for (std::uint64_t enc = 1; enc < scan_cap; ++enc) {
    std::vector<FqElem> c;
    std::uint64_t e = enc;
    for (std::uint64_t i = 0; i < ord && e > 0; ++i) {
      c.push_back(fq(E->base_ptr(), e % q));
      e /= q;
    }
    if (e > 0) break;
    ExtElem eta = E->from_poly(FqPoly(std::move(c)));
    ExtElem zeta = power_to_group_index(eta, digits);
    if (zeta.pow(n1) != eta.one_like()) {
      throw InternalError("RootOfUnityOrder",
                          "projection left the order-n1 subgroup");
    }
    bool exact = !zeta.is_zero();
    for (std::uint64_t l : prime_parts) {
      if (!exact) break;
      if (zeta.pow(n1 / l) == eta.one_like()) exact = false;
    }
    if (exact) return zeta;
  }
  throw InternalError("RootOfUnityScanExhausted",
                      "no primitive n1-th root of unity found in scan");
}

}  // namespace detail

// Factors x^n - 1 over F_q through the cyclotomic-coset structure of
// x^(n1) - 1, then verifies the product identity exactly before returning.
inline CyclotomicFactorization factor_xn_minus_1(
    std::uint64_t n, const std::shared_ptr<const FqField>& field) {
  if (n < 1) {
    throw ValidationError("BadDegree", "n must be at least 1");
  }
  CyclotomicFactorization out;
  out.n = n;
  out.field = field;
  const std::uint64_t p = field->p();
  std::uint64_t n1 = n;
  while (n1 % p == 0) {
    n1 /= p;
    ++out.e;
  }
  out.n1 = n1;
  out.t = checked_pow_u64(p, out.e, ~0ull);

  FqElem one = fq(field, 1);
  if (n1 == 1) {
    out.factors.push_back(FqPoly(std::vector<FqElem>{-one, one}));  // x - 1
  } else {
    const std::uint64_t ord = multiplicative_order(field->q() % n1, n1);
    auto E = ext_make(detail::first_irreducible(field, ord));
    ExtElem zeta = detail::find_root_of_unity(E, n1);

    std::vector<ExtElem> zeta_pow;
    zeta_pow.reserve(n1);
    ExtElem zp = zeta.one_like();
    for (std::uint64_t i = 0; i < n1; ++i) {
      zeta_pow.push_back(zp);
      zp = zp * zeta;
    }

    std::vector<bool> seen(n1, false);
    for (std::uint64_t s = 0; s < n1; ++s) {
      if (seen[s]) continue;
      std::vector<std::uint64_t> coset;
      std::uint64_t cur = s;
      while (!seen[cur]) {
        seen[cur] = true;
        coset.push_back(cur);
        cur = mulmod_u64(cur, field->q() % n1, n1);
      }
      Poly<ExtElem> prod = Poly<ExtElem>::constant(zeta.one_like());
      for (std::uint64_t i : coset) {
        Poly<ExtElem> lin(
            std::vector<ExtElem>{-zeta_pow[i], zeta.one_like()});
        prod = prod * lin;
      }
      std::vector<FqElem> down;
      down.reserve(prod.coeffs().size());
      for (const ExtElem& c : prod.coeffs()) {
        if (c.rep().degree() > 0) {
          throw InternalError("CosetFactorNotRational",
                              "coset product has a coefficient outside F_q");
        }
        down.push_back(c.is_zero() ? FqElem(field.get(), 0)
                                   : FqElem(field.get(), c.rep().coeff(0).enc()));
      }
      out.factors.push_back(FqPoly(std::move(down)));
    }
    std::sort(out.factors.begin(), out.factors.end(),
              detail::poly_encoding_less);
  }

  FqPoly prod = FqPoly::constant(one);
  for (const FqPoly& f : out.factors) prod = prod * f;
  FqPoly total = FqPoly::constant(one);
  std::uint64_t t = out.t;
  FqPoly base = prod;
  while (t > 0) {
    if (t & 1) total = total * base;
    t >>= 1;
    if (t > 0) base = base * base;
  }
  if (total != xn_minus_1(field, n)) {
    throw InternalError("FactorizationIdentity",
                        "(phi_1 ... phi_r)^t != x^n - 1");
  }
  return out;
}

// Enumerates, for every degree s in [0, n), the monic divisors R_(s,i) of
// x^n - 1 as exponent tuples over the factors (each exponent in [0, t]),
// in lexicographic tuple order, along with phi_(s,i) = (x^n - 1)/R_(s,i).
// The degree-n divisor (the full product) is excluded.
inline DivisorTable divisor_table(const CyclotomicFactorization& fact) {
  DivisorTable table;
  table.n = fact.n;
  table.entries.resize(fact.n);
  const FqPoly full = xn_minus_1(fact.field, fact.n);

  struct Frame {
    std::size_t idx;
    std::uint64_t deg;
    FqPoly prefix;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, FqPoly::constant(fq(fact.field, 1))});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.idx == fact.factors.size()) {
      if (fr.deg < fact.n) {
        FqPoly phi = full / fr.prefix;
        table.entries[fr.deg].emplace_back(std::move(fr.prefix),
                                           std::move(phi));
      }
      continue;
    }
    const FqPoly& factor = fact.factors[fr.idx];
    const std::uint64_t fdeg = static_cast<std::uint64_t>(factor.degree());
    // Pushed in reverse exponent order so the stack pops in ascending
    // (lexicographic) order.
    std::vector<Frame> batch;
    FqPoly cur = fr.prefix;
    std::uint64_t deg = fr.deg;
    for (std::uint64_t exp = 0; exp <= fact.t; ++exp) {
      batch.push_back({fr.idx + 1, deg, cur});
      if (exp == fact.t || deg + fdeg > fact.n) break;
      cur = cur * factor;
      deg += fdeg;
    }
    for (auto it = batch.rbegin(); it != batch.rend(); ++it) {
      stack.push_back(std::move(*it));
    }
  }

  table.u.resize(fact.n, 0);
  for (std::uint64_t s = 0; s < fact.n; ++s) {
    table.u[s] = table.entries[s].size();
  }
  return table;
}

}  // namespace knpoly

#endif  // KNPOLY_CYCLOTOMIC_HPP_
