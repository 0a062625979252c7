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

#include <cstdint>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <knpoly/fq.hpp>
#include <knpoly/parse.hpp>
#include <knpoly/poly.hpp>

namespace {

using knpoly::FqPoly;
using knpoly::ParseError;
using knpoly::fq_poly;
using knpoly::make_field;
using knpoly::parse_fq_poly;

}  // namespace

TEST_CASE("encoding lists parse little-endian", "[parse]") {
  auto f2 = make_field(2, 1);
  CHECK(parse_fq_poly(f2, "1,1,0,0,1") == fq_poly(f2, {1, 1, 0, 0, 1}));
  CHECK(parse_fq_poly(f2, " 1 , 0 , 1 ") == fq_poly(f2, {1, 0, 1}));
  CHECK(parse_fq_poly(f2, "1") == fq_poly(f2, {1}));
  CHECK(parse_fq_poly(f2, "0").is_zero());

  auto f9 = make_field(3, 2);
  CHECK(parse_fq_poly(f9, "7,0,1") == fq_poly(f9, {7, 0, 1}));
}

TEST_CASE("caret expressions parse in any term order", "[parse]") {
  auto f2 = make_field(2, 1);
  const FqPoly expect = fq_poly(f2, {1, 1, 0, 0, 1});
  CHECK(parse_fq_poly(f2, "x^4+x+1") == expect);
  CHECK(parse_fq_poly(f2, "1 + x + x^4") == expect);
  CHECK(parse_fq_poly(f2, "x^4 + x + 1") == expect);
  CHECK(parse_fq_poly(f2, "x") == fq_poly(f2, {0, 1}));
  CHECK(parse_fq_poly(f2, "x^2") == fq_poly(f2, {0, 0, 1}));

  auto f3 = make_field(3, 1);
  CHECK(parse_fq_poly(f3, "x^2+2*x+1") == fq_poly(f3, {1, 2, 1}));
  CHECK(parse_fq_poly(f3, "2x") == fq_poly(f3, {0, 2}));
  CHECK(parse_fq_poly(f3, "2*x^3") == fq_poly(f3, {0, 0, 0, 2}));
}

TEST_CASE("caret expressions handle signs and repeats", "[parse]") {
  auto f3 = make_field(3, 1);
  CHECK(parse_fq_poly(f3, "x^2-x") == fq_poly(f3, {0, 2, 1}));
  CHECK(parse_fq_poly(f3, "-x") == fq_poly(f3, {0, 2}));
  CHECK(parse_fq_poly(f3, "x - x - 1") == fq_poly(f3, {2}));
  // No 'x' anywhere, so this is an encoding list, not a negated constant.
  CHECK_THROWS_AS(parse_fq_poly(f3, "-1"), knpoly::ParseError);
  CHECK(parse_fq_poly(f3, "x + x") == fq_poly(f3, {0, 2}));
  CHECK(parse_fq_poly(f3, "x^2 + 2*x^2") == FqPoly::zero());

  auto f2 = make_field(2, 1);
  CHECK(parse_fq_poly(f2, "x + x").is_zero());
  CHECK(parse_fq_poly(f2, "x - 1") == fq_poly(f2, {1, 1}));
}

TEST_CASE("constant caret terms accept plain encodings", "[parse]") {
  auto f4 = make_field(2, 2);
  CHECK(parse_fq_poly(f4, "x^2 + 2*x + 3") == fq_poly(f4, {3, 2, 1}));
  CHECK(parse_fq_poly(f4, "2") == fq_poly(f4, {2}));
}

TEST_CASE("parser rejects malformed input", "[parse]") {
  auto f2 = make_field(2, 1);
  CHECK_THROWS_AS(parse_fq_poly(f2, ""), ParseError);
  CHECK_THROWS_AS(parse_fq_poly(f2, "   "), ParseError);
  CHECK_THROWS_AS(parse_fq_poly(f2, "x^"), ParseError);
  CHECK_THROWS_AS(parse_fq_poly(f2, "^2"), ParseError);
  CHECK_THROWS_AS(parse_fq_poly(f2, "x2"), ParseError);
  CHECK_THROWS_AS(parse_fq_poly(f2, "x +"), ParseError);
  CHECK_THROWS_AS(parse_fq_poly(f2, "1,1,"), ParseError);
  CHECK_THROWS_AS(parse_fq_poly(f2, ",1"), ParseError);
  CHECK_THROWS_AS(parse_fq_poly(f2, "2,1"), ParseError);  // encoding >= q
  CHECK_THROWS_AS(parse_fq_poly(f2, "2*"), ParseError);
  CHECK_THROWS_AS(parse_fq_poly(f2, "x^9999999999"), ParseError);
  CHECK_THROWS_AS(parse_fq_poly(f2, "x^2 y"), ParseError);
  CHECK_THROWS_AS(parse_fq_poly(f2, "3x"), ParseError);  // coefficient >= q
}

TEST_CASE("rendering produces the documented forms", "[parse]") {
  auto f2 = make_field(2, 1);
  CHECK(knpoly::render_poly_caret(fq_poly(f2, {1, 1, 0, 0, 1})) ==
        "x^4 + x + 1");
  CHECK(knpoly::render_poly_caret(fq_poly(f2, {0, 1})) == "x");
  CHECK(knpoly::render_poly_caret(FqPoly::zero()) == "0");
  CHECK(knpoly::render_poly_encs(fq_poly(f2, {1, 1, 0, 0, 1})) ==
        "1,1,0,0,1");
  CHECK(knpoly::render_poly_encs(FqPoly::zero()) == "0");

  auto f3 = make_field(3, 1);
  CHECK(knpoly::render_poly_caret(fq_poly(f3, {2, 0, 0, 2})) ==
        "2*x^3 + 2");
  CHECK(knpoly::render_poly_caret(fq_poly(f3, {0, 1, 2})) == "2*x^2 + x");
}

TEST_CASE("random polynomials round-trip both grammars", "[parse]") {
  std::mt19937_64 rng(43);
  for (auto [p, m] : {std::pair<std::uint64_t, std::uint64_t>{2, 1}, {3, 1},
                      {2, 2}, {5, 1}}) {
    auto f = make_field(p, m);
    for (int s = 0; s < 80; ++s) {
      std::vector<std::uint64_t> encs(1 + rng() % 9);
      for (auto& e : encs) e = rng() % f->q();
      const FqPoly poly = fq_poly(f, encs);
      CHECK(parse_fq_poly(f, knpoly::render_poly_caret(poly)) == poly);
      CHECK(parse_fq_poly(f, knpoly::render_poly_encs(poly)) == poly);
    }
  }
}
