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

#ifndef KNPOLY_SEARCH_HPP_
#define KNPOLY_SEARCH_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "knpoly/errors.hpp"
#include "knpoly/fq.hpp"
#include "knpoly/intmath.hpp"
#include "knpoly/knormal.hpp"
#include "knpoly/poly.hpp"

namespace knpoly {

inline constexpr std::uint64_t kDefaultSearchBudget = 1u << 20;

struct SearchHit {
  std::uint64_t encoding = 0;  // full encoding including the monic term
  FqPoly poly;
  KNormalReport report;
};

namespace detail {

// Monic degree-n polynomial whose lower coefficients are the base-q digits
// of t.
inline FqPoly candidate_poly(const std::shared_ptr<const FqField>& field,
                             std::uint64_t n, std::uint64_t t) {
  const std::uint64_t q = field->q();
  std::vector<FqElem> c(n + 1, FqElem(field.get(), 0));
  for (std::uint64_t i = 0; i < n && t != 0; ++i) {
    c[i] = FqElem(field.get(), t % q);
    t /= q;
  }
  c[n] = FqElem(field.get(), 1);
  return FqPoly(std::move(c));
}

}  // namespace detail

// Enumerates every monic irreducible polynomial of degree n over F_q in
// increasing encoding order and returns those whose k-normality degree is
// exactly k. The sweep is split across threads; the merged result is
// sorted, so the output never depends on the parallelism.
inline std::vector<SearchHit> search_nk(
    const std::shared_ptr<const FqField>& field, std::uint64_t n,
    std::uint64_t k, std::uint64_t budget = kDefaultSearchBudget,
    unsigned thread_count = 0) {
  if (n < 1) {
    throw ValidationError("BadDegree", "search degree must be at least 1");
  }
  if (k >= n) {
    throw KOutOfRange("k = " + std::to_string(k) +
                      " outside [0, n) for n = " + std::to_string(n));
  }
  const std::uint64_t q = field->q();
  const std::uint64_t space = checked_pow_u64(q, n, budget);
  if (space == 0) {
    throw BudgetExceeded("q^n = " + std::to_string(q) + "^" +
                         std::to_string(n) +
                         " exceeds the search budget of " +
                         std::to_string(budget));
  }

  if (thread_count == 0) {
    thread_count = std::thread::hardware_concurrency();
    if (thread_count == 0) thread_count = 1;
    thread_count = std::min<unsigned>(thread_count, 8);
  }
  const std::uint64_t chunk =
      (space + thread_count - 1) / thread_count;

  std::vector<std::vector<SearchHit>> partial(thread_count);
  std::vector<std::exception_ptr> failures(thread_count);
  std::vector<std::thread> workers;
  workers.reserve(thread_count);
  for (unsigned w = 0; w < thread_count; ++w) {
    workers.emplace_back([&, w] {
      try {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(space, lo + chunk);
        for (std::uint64_t t = lo; t < hi; ++t) {
          if (t % q == 0) continue;  // zero constant term, divisible by x
          FqPoly cand = detail::candidate_poly(field, n, t);
          if (!is_irreducible(cand)) continue;
          auto report = classify(cand);
          if (report.k != k) continue;
          partial[w].push_back(
              SearchHit{space + t, std::move(cand), std::move(report)});
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& th : workers) th.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::vector<SearchHit> hits;
  for (auto& p : partial) {
    for (auto& h : p) hits.push_back(std::move(h));
  }
  std::sort(hits.begin(), hits.end(),
            [](const SearchHit& a, const SearchHit& b) {
              return a.encoding < b.encoding;
            });
  return hits;
}

}  // namespace knpoly

#endif  // KNPOLY_SEARCH_HPP_
