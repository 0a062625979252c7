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

#ifndef KNPOLY_KNORMAL_HPP_
#define KNPOLY_KNORMAL_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "knpoly/cyclotomic.hpp"
#include "knpoly/errors.hpp"
#include "knpoly/ext.hpp"
#include "knpoly/fq.hpp"
#include "knpoly/poly.hpp"

namespace knpoly {

// Result of deciding the k-normality degree of an irreducible polynomial:
// k = deg gcd(x^n - 1, g_alpha) for a root alpha, rank = n - k is the
// dimension of the span of the conjugates of alpha over F_q. methods_agree
// records, per method (gcd definition, divisor characterization, conjugate
// rank), that no disagreement was observed; a report is never returned
// otherwise.
struct KNormalReport {
  std::uint64_t k = 0;
  std::uint64_t rank = 0;
  Poly<ExtElem> gcd_witness;
  std::array<bool, 3> methods_agree{true, true, true};
  bool proper = false;
  std::shared_ptr<const ExtField> ext;
};

// k-degree of a single field element (not necessarily proper, possibly
// zero, in which case k = n and the rank is 0).
struct ElementKReport {
  std::uint64_t k = 0;
  std::uint64_t rank = 0;
  bool proper = false;
};

namespace detail {

// Validates a classification input: monic, irreducible, and not the
// polynomial x (whose root 0 has a degenerate k-degree of n).
inline void require_classifiable(const FqPoly& F) {
  if (F.degree() < 1) {
    throw ReducibleInput("constants cannot be irreducible");
  }
  if (!F.is_monic()) {
    throw ValidationError("NonMonicInput",
                          "classification requires a monic polynomial");
  }
  if (F.coeff(0).is_zero()) {
    if (F.degree() == 1) {
      throw ZeroConstantTerm(
          "the polynomial x has the zero root, whose k-degree degenerates "
          "to n");
    }
    throw ReducibleInput("divisible by x");
  }
  if (!is_irreducible(F)) {
    throw ReducibleInput("input polynomial is reducible");
  }
}

// g_beta(x) = sum_{i=0}^{n-1} beta^(q^i) x^(n-1-i) with coefficients in
// F_(q^n).
inline Poly<ExtElem> conjugate_generating_poly(
    const std::vector<ExtElem>& conj) {
  const std::size_t n = conj.size();
  std::vector<ExtElem> c(n, conj.front().zero_like());
  for (std::size_t i = 0; i < n; ++i) c[n - 1 - i] = conj[i];
  return Poly<ExtElem>(std::move(c));
}

// x^n - 1 with coefficients lifted into the extension field.
inline Poly<ExtElem> xn_minus_1_ext(const ExtField& E, std::uint64_t n) {
  std::vector<ExtElem> c(n + 1, E.zero());
  c[0] = -E.one();
  c[n] = E.one();
  return Poly<ExtElem>(std::move(c));
}

// Rank over F_q of the n x n matrix whose rows are the coordinate vectors
// of the conjugates.
inline std::uint64_t conjugate_rank(const std::vector<ExtElem>& conj,
                                    std::uint64_t n) {
  const FqField& base = conj.front().ext().base();
  FqElem zero(&base, 0);
  std::vector<std::vector<FqElem>> rows;
  rows.reserve(conj.size());
  for (const ExtElem& c : conj) {
    std::vector<FqElem> row(n, zero);
    const auto& rep = c.rep().coeffs();
    for (std::size_t j = 0; j < rep.size(); ++j) row[j] = rep[j];
    rows.push_back(std::move(row));
  }
  std::uint64_t rank = 0;
  for (std::uint64_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    FqElem inv = rows[rank][col].inv();
    for (std::uint64_t j = col; j < n; ++j) {
      rows[rank][j] = rows[rank][j] * inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      FqElem f = rows[r][col];
      for (std::uint64_t j = col; j < n; ++j) {
        rows[r][j] = rows[r][j] - f * rows[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

// The Prop. 2.2 scan at a single k: some L_(phi_(k,j))(alpha) vanishes and
// every L_(phi_(s,i))(alpha) with k < s < n is nonzero.
inline bool characterization_at_k(const DivisorTable& table,
                                  const std::vector<ExtElem>& conj,
                                  std::uint64_t k) {
  bool some_vanishes = false;
  for (const auto& [R, phi] : table.at_degree(k)) {
    if (linearized_eval_cached(phi, conj).is_zero()) {
      some_vanishes = true;
      break;
    }
  }
  if (!some_vanishes) return false;
  for (std::uint64_t s = k + 1; s < table.n; ++s) {
    for (const auto& [R, phi] : table.at_degree(s)) {
      if (linearized_eval_cached(phi, conj).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace detail

// k-degree of an arbitrary element by the gcd definition, cross-checked
// against the conjugate rank. k ranges over [0, n]; k = n only for zero.
inline ElementKReport element_k_degree(const ExtElem& beta) {
  const ExtField& E = beta.ext();
  const std::uint64_t n = E.n();
  ElementKReport out;
  out.proper = is_proper(beta);
  auto conj = conjugates(beta);
  std::uint64_t k;
  if (beta.is_zero()) {
    k = n;
  } else {
    auto g = detail::conjugate_generating_poly(conj);
    k = static_cast<std::uint64_t>(
        poly_gcd(detail::xn_minus_1_ext(E, n), g).degree());
  }
  std::uint64_t rank = detail::conjugate_rank(conj, n);
  if (rank + k != n) {
    throw MethodDisagreement(
        "gcd k-degree and conjugate rank disagree on an element: k = " +
        std::to_string(k) + ", rank = " + std::to_string(rank));
  }
  out.k = k;
  out.rank = rank;
  return out;
}

// k = deg gcd(x^n - 1, g_alpha) over F_(q^n), alpha the class of y in
// F_q[y]/(F).
inline KNormalReport k_degree_by_gcd(const FqPoly& F) {
  detail::require_classifiable(F);
  auto ext = ext_make(F);
  const std::uint64_t n = ext->n();
  auto conj = conjugates(ext->root());
  auto g = detail::conjugate_generating_poly(conj);
  auto witness = poly_gcd(detail::xn_minus_1_ext(*ext, n), g);
  KNormalReport report;
  report.k = static_cast<std::uint64_t>(witness.degree());
  report.rank = n - report.k;
  report.gcd_witness = std::move(witness);
  report.proper = is_proper(ext->root());
  report.ext = std::move(ext);
  return report;
}

// Prop. 2.2's divisor characterization: F is N_k iff some linearized
// cofactor at degree k kills alpha while every cofactor at degrees in
// (k, n) does not.
inline bool nk_test_by_characterization(const FqPoly& F, std::uint64_t k) {
  detail::require_classifiable(F);
  auto ext = ext_make(F);
  const std::uint64_t n = ext->n();
  if (k >= n) {
    throw KOutOfRange("k = " + std::to_string(k) +
                      " outside [0, n) for n = " + std::to_string(n));
  }
  auto fact = factor_xn_minus_1(n, ext->base_ptr());
  auto table = divisor_table(fact);
  auto conj = conjugates(ext->root());
  return detail::characterization_at_k(table, conj, k);
}

// Runs all three methods and returns a unified report; any disagreement is
// raised as an internal error, never returned.
inline KNormalReport classify(const FqPoly& F) {
  detail::require_classifiable(F);
  auto ext = ext_make(F);
  const std::uint64_t n = ext->n();
  auto conj = conjugates(ext->root());

  auto g = detail::conjugate_generating_poly(conj);
  auto witness = poly_gcd(detail::xn_minus_1_ext(*ext, n), g);
  const std::uint64_t k_gcd = static_cast<std::uint64_t>(witness.degree());

  const std::uint64_t rank = detail::conjugate_rank(conj, n);
  const std::uint64_t k_rank = n - rank;

  auto fact = factor_xn_minus_1(n, ext->base_ptr());
  auto table = divisor_table(fact);
  const bool char_ok = detail::characterization_at_k(table, conj, k_gcd);

  if (k_rank != k_gcd || !char_ok) {
    throw MethodDisagreement(
        "k by gcd = " + std::to_string(k_gcd) +
        ", k by rank = " + std::to_string(k_rank) +
        ", characterization at gcd k " + (char_ok ? "passed" : "failed"));
  }

  KNormalReport report;
  report.k = k_gcd;
  report.rank = rank;
  report.gcd_witness = std::move(witness);
  report.methods_agree = {true, true, true};
  report.proper = is_proper(ext->root());
  report.ext = std::move(ext);
  return report;
}

}  // namespace knpoly

#endif  // KNPOLY_KNORMAL_HPP_
