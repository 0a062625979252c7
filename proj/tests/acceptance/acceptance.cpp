// Copyright 2026 The knpoly Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate for the library. Runs one self-contained check per
// release criterion, prints one [PASS]/[FAIL] line each, and exits
// nonzero if any check fails.

#include <knpoly/construct.hpp>
#include <knpoly/cyclotomic.hpp>
#include <knpoly/ext.hpp>
#include <knpoly/fq.hpp>
#include <knpoly/knormal.hpp>
#include <knpoly/parse.hpp>
#include <knpoly/poly.hpp>
#include <knpoly/search.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace {

using knpoly::ExtElem;
using knpoly::FqElem;
using knpoly::FqPoly;
using knpoly::Verification;

using Field = std::shared_ptr<const knpoly::FqField>;

struct Criterion {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& context) {
    if (!cond && ok) {
      ok = false;
      detail = context;
    }
  }
};

// All monic irreducible polynomials of the given degree with a nonzero
// constant term, in encoding order.
std::vector<FqPoly> classifiable_irreducibles(const Field& field,
                                              std::uint64_t degree) {
  const std::uint64_t q = field->q();
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < degree; ++i) total *= q;
  std::vector<FqPoly> out;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::vector<std::uint64_t> encs;
    std::uint64_t rest = t;
    for (std::uint64_t i = 0; i < degree; ++i) {
      encs.push_back(rest % q);
      rest /= q;
    }
    encs.push_back(1);
    const FqPoly F = knpoly::fq_poly(field, encs);
    if (F.coeff(0).enc() != 0 && knpoly::is_irreducible(F)) {
      out.push_back(F);
    }
  }
  return out;
}

// The extension element whose coordinate vector holds the base-q digits
// of idx.
ExtElem element_at(const std::shared_ptr<const knpoly::ExtField>& E,
                   const Field& base, std::uint64_t idx) {
  const std::uint64_t q = base->q();
  std::vector<std::uint64_t> digits;
  for (std::uint64_t i = 0; i < E->n(); ++i) {
    digits.push_back(idx % q);
    idx /= q;
  }
  return E->from_poly(knpoly::fq_poly(base, digits));
}

std::uint64_t int_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void criterion_triple_method_agreement(Criterion& c) {
  for (auto [p, max_deg] :
       {std::pair<std::uint64_t, std::uint64_t>{2, 6}, {3, 4}}) {
    auto field = knpoly::make_field(p, 1);
    for (std::uint64_t deg = 1; deg <= max_deg; ++deg) {
      for (const FqPoly& F : classifiable_irreducibles(field, deg)) {
        const auto r = knpoly::classify(F);
        const bool agree =
            r.methods_agree[0] && r.methods_agree[1] && r.methods_agree[2];
        c.require(agree, "methods disagree for " +
                             knpoly::render_poly_caret(F) + " over F_" +
                             std::to_string(p));
        c.require(r.k + r.rank == deg,
                  "k + rank != degree for " + knpoly::render_poly_caret(F));
      }
    }
  }
}

void criterion_quadratic_chain(Criterion& c) {
  auto f2 = knpoly::make_field(2, 1);
  const auto res = knpoly::theorem32_sequence(
      knpoly::fq_poly(f2, {1, 1, 1}), knpoly::fq(f2, 1), 3);
  c.require(res.entries.size() == 4, "expected entries u = 0..3");
  if (!c.ok) return;
  c.require(res.entries[1].poly == knpoly::fq_poly(f2, {1, 0, 0, 1, 1}),
            "u=1 is not x^4 + x^3 + 1: got " +
                knpoly::render_poly_caret(res.entries[1].poly));
  c.require(res.entries[2].degree == 8, "u=2 degree != 8");
  c.require(res.entries[3].degree == 16, "u=3 degree != 16");
  for (std::uint64_t u = 1; u <= 3; ++u) {
    const auto& entry = res.entries[u];
    c.require(entry.verified == Verification::kOracleVerified,
              "u=" + std::to_string(u) + " not oracle-verified");
    const auto report = knpoly::classify(entry.poly);
    c.require(report.k == 0,
              "u=" + std::to_string(u) + " classifies as k = " +
                  std::to_string(report.k) + ", expected 0");
  }
}

void criterion_reciprocal_step(Criterion& c) {
  auto f2 = knpoly::make_field(2, 1);
  const auto entry = knpoly::theorem31_step(
      knpoly::fq_poly(f2, {1, 1, 0, 0, 1}), knpoly::fq(f2, 1));
  c.require(entry.degree == 8, "output degree != 8");
  c.require(entry.poly ==
                knpoly::fq_poly(f2, {1, 0, 1, 1, 0, 1, 0, 0, 1}),
            "output is not x^8 + x^5 + x^3 + x^2 + 1: got " +
                knpoly::render_poly_caret(entry.poly));
  c.require(entry.k == 1, "constructed k != 1");
  c.require(entry.verified == Verification::kOracleVerified,
            "output not oracle-verified");
  const auto report = knpoly::classify(entry.poly);
  c.require(report.k == 1, "output classifies as k = " +
                               std::to_string(report.k) + ", expected 1");
}

void criterion_composition_equivalence(Criterion& c) {
  std::uint64_t predicted_true = 0;
  std::uint64_t predicted_false = 0;
  for (std::uint64_t p : {2ull, 3ull}) {
    auto field = knpoly::make_field(p, 1);
    for (std::uint64_t deg = 2; deg <= 4; ++deg) {
      for (const FqPoly& P : classifiable_irreducibles(field, deg)) {
        for (std::uint64_t d1 = 1; d1 < p; ++d1) {
          for (std::uint64_t d0 = 0; d0 < p; ++d0) {
            if (d0 == d1) continue;
            for (std::uint64_t d2 = 1; d2 < p; ++d2) {
              const auto r = knpoly::prop23_compose(
                  P, knpoly::fq(field, d0), knpoly::fq(field, d1),
                  knpoly::fq(field, d2));
              c.require(r.verified == Verification::kOracleVerified,
                        "composition left unverified for " +
                            knpoly::render_poly_caret(P));
              (r.predicted ? predicted_true : predicted_false) += 1;
            }
          }
        }
      }
    }
  }
  c.require(predicted_true > 0 && predicted_false > 0,
            "sweep did not exercise both criterion verdicts");
}

void criterion_partial_fraction_identity(Criterion& c) {
  struct Tower {
    std::uint64_t p, m, n;
  };
  const std::vector<Tower> exhaustive = {
      {2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 1, 5}, {2, 1, 6},
      {3, 1, 2}, {3, 1, 3}, {3, 1, 4}, {2, 2, 2}, {2, 2, 3},
      {5, 1, 2}, {7, 1, 2}, {3, 2, 2}, {2, 3, 2}};
  for (const auto& t : exhaustive) {
    auto base = knpoly::make_field(t.p, t.m);
    auto E = knpoly::ext_make(knpoly::detail::first_irreducible(base, t.n));
    const std::uint64_t size = int_pow(base->q(), t.n);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      const ExtElem gamma = element_at(E, base, idx);
      if (gamma.pow(t.p) == gamma) continue;
      for (std::uint64_t th = 1; th < t.p; ++th) {
        c.require(knpoly::lemma25_check(gamma, knpoly::fq(base, th)),
                  "identity fails exhaustively at p=" + std::to_string(t.p) +
                      " m=" + std::to_string(t.m) +
                      " n=" + std::to_string(t.n) +
                      " idx=" + std::to_string(idx));
      }
    }
  }

  const std::vector<Tower> sampled = {{2, 1, 10}, {2, 1, 16}, {3, 1, 8},
                                      {5, 1, 5},  {7, 1, 4},  {13, 1, 3},
                                      {251, 1, 2}, {2, 4, 3}};
  std::mt19937_64 rng(2026);
  for (const auto& t : sampled) {
    auto base = knpoly::make_field(t.p, t.m);
    auto E = knpoly::ext_make(knpoly::detail::first_irreducible(base, t.n));
    const std::uint64_t size = int_pow(base->q(), t.n);
    std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
    std::uint64_t found = 0;
    while (found < 500) {
      const ExtElem gamma = element_at(E, base, pick(rng));
      if (!knpoly::is_proper(gamma)) continue;
      ++found;
      for (std::uint64_t th = 1; th < t.p; ++th) {
        c.require(knpoly::lemma25_check(gamma, knpoly::fq(base, th)),
                  "identity fails for a sampled element at p=" +
                      std::to_string(t.p) + " n=" + std::to_string(t.n));
      }
      if (!c.ok) return;
    }
  }
}

void criterion_affine_invariance(Criterion& c) {
  std::uint64_t checked = 0;
  for (auto [p, ns] : {std::pair<std::uint64_t, std::vector<std::uint64_t>>{
                           2, {2, 4}},
                       {3, {3}}}) {
    auto field = knpoly::make_field(p, 1);
    for (std::uint64_t n : ns) {
      auto E =
          knpoly::ext_make(knpoly::detail::first_irreducible(field, n));
      const std::uint64_t size = int_pow(p, n);
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        const ExtElem alpha = element_at(E, field, idx);
        if (knpoly::frobenius_q(alpha, 1) == alpha) continue;
        const auto base = knpoly::element_k_degree(alpha);
        for (std::uint64_t a = 0; a < p; ++a) {
          for (std::uint64_t b = 1; b < p; ++b) {
            const ExtElem shifted = E->embed(knpoly::fq(field, a)) +
                                    E->embed(knpoly::fq(field, b)) * alpha;
            const auto r = knpoly::element_k_degree(shifted);
            c.require(r.k == base.k && r.proper == base.proper,
                      "shift changes k at p=" + std::to_string(p) +
                          " n=" + std::to_string(n) +
                          " idx=" + std::to_string(idx) +
                          " a=" + std::to_string(a) +
                          " b=" + std::to_string(b));
            ++checked;
          }
        }
      }
    }
  }
  c.require(checked > 0, "sweep was empty");
}

void criterion_quartic_partition(Criterion& c) {
  auto f2 = knpoly::make_field(2, 1);
  const auto normal = knpoly::search_nk(f2, 4, 0);
  c.require(normal.size() == 2, "expected two 0-normal quartics, found " +
                                    std::to_string(normal.size()));
  if (normal.size() == 2) {
    c.require(normal[0].encoding == 25 && normal[1].encoding == 31,
              "0-normal encodings are not {25, 31}");
    c.require(normal[0].report.k == 0 && normal[1].report.k == 0,
              "0-normal hit reports a nonzero k");
  }
  const auto one_normal = knpoly::search_nk(f2, 4, 1);
  c.require(one_normal.size() == 1, "expected one 1-normal quartic, found " +
                                        std::to_string(one_normal.size()));
  if (one_normal.size() == 1) {
    c.require(one_normal[0].encoding == 19, "1-normal encoding is not 19");
    c.require(one_normal[0].report.k == 1, "1-normal hit reports k != 1");
  }
  c.require(knpoly::search_nk(f2, 4, 2).empty(), "unexpected 2-normal hit");
  c.require(knpoly::search_nk(f2, 4, 3).empty(), "unexpected 3-normal hit");
  c.require(classifiable_irreducibles(f2, 4).size() ==
                normal.size() + one_normal.size(),
            "hits do not partition the quartic irreducibles");
}

void criterion_chain_identities(Criterion& c) {
  struct Chain {
    std::uint64_t p;
    std::vector<std::uint64_t> seed;
    std::vector<std::uint64_t> deltas;
    std::uint64_t u_max;
    std::uint64_t budget;
  };
  const std::vector<Chain> chains = {
      {2, {1, 1, 1}, {1}, 5, 64},
      {3, {2, 0, 1, 1}, {1, 2}, 3, 81}};
  for (const auto& spec : chains) {
    auto field = knpoly::make_field(spec.p, 1);
    const FqPoly seed = knpoly::fq_poly(field, spec.seed);
    const std::uint64_t n = static_cast<std::uint64_t>(seed.degree());
    for (std::uint64_t denc : spec.deltas) {
      const FqElem delta = knpoly::fq(field, denc);
      const auto res =
          knpoly::theorem32_sequence(seed, delta, spec.u_max, spec.budget);
      c.require(res.raw_chain.size() == spec.u_max + 1,
                "chain is shorter than requested");
      if (!c.ok) return;
      const FqElem zero = knpoly::fq(field, 0);
      const FqElem one = knpoly::fq(field, 1);
      const FqElem g0_at_zero = res.raw_chain[0].eval(zero);
      const FqElem dg1_at_zero =
          knpoly::poly_derivative(res.raw_chain[1]).eval(zero);
      const std::string at = " (p=" + std::to_string(spec.p) +
                             " delta=" + std::to_string(denc) + ")";
      c.require(dg1_at_zero ==
                    -(delta.pow(n - 1) *
                      knpoly::poly_derivative(res.raw_chain[0]).eval(zero)),
                "first derivative value is off" + at);
      for (std::uint64_t u = 1; u <= spec.u_max; ++u) {
        const FqPoly& gu = res.raw_chain[u];
        c.require(static_cast<std::uint64_t>(gu.degree()) ==
                      n * int_pow(spec.p, u),
                  "degree law fails at u=" + std::to_string(u) + at);
        const FqElem expected_value = delta.pow(u * n) * g0_at_zero;
        c.require(gu.eval(zero) == expected_value &&
                      gu.eval(one) == expected_value,
                  "boundary values differ at u=" + std::to_string(u) + at);
        const FqPoly dgu = knpoly::poly_derivative(gu);
        c.require(dgu.eval(zero) == dgu.eval(one),
                  "derivative boundary differs at u=" + std::to_string(u) +
                      at);
        if (u >= 2) {
          FqElem expected_deriv =
              delta.pow((n - 1) * (u - 1)) * dg1_at_zero;
          if (u % 2 == 0) expected_deriv = -expected_deriv;
          c.require(dgu.eval(zero) == expected_deriv,
                    "derivative sign pattern fails at u=" +
                        std::to_string(u) + at);
        }
      }
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    void (*body)(Criterion&);
  };
  const std::vector<Entry> entries = {
      {"triple-method agreement, F_2 deg <= 6 and F_3 deg <= 4",
       criterion_triple_method_agreement},
      {"quadratic-map chain from x^2 + x + 1 over F_2",
       criterion_quadratic_chain},
      {"reciprocal composition step from x^4 + x + 1 over F_2",
       criterion_reciprocal_step},
      {"composition criterion matches direct irreducibility, q in {2, 3}",
       criterion_composition_equivalence},
      {"partial-fraction inversion identity, exhaustive and sampled",
       criterion_partial_fraction_identity},
      {"affine shifts preserve k when p divides n",
       criterion_affine_invariance},
      {"search partitions the quartic irreducibles over F_2",
       criterion_quartic_partition},
      {"chain boundary and derivative identities up to degree 81",
       criterion_chain_identities}};

  int failures = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      entries[i].body(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] %zu/%zu %s (%lld ms)%s%s\n", c.ok ? "PASS" : "FAIL",
                i + 1, entries.size(), entries[i].label,
                static_cast<long long>(ms), c.ok ? "" : ": ",
                c.detail.c_str());
    if (!c.ok) ++failures;
  }
  if (failures != 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", entries.size());
  return 0;
}
