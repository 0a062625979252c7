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

#ifndef KNPOLY_PARSE_HPP_
#define KNPOLY_PARSE_HPP_

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "knpoly/errors.hpp"
#include "knpoly/fq.hpp"
#include "knpoly/poly.hpp"

namespace knpoly {

inline constexpr std::uint64_t kMaxParsedPower = 1u << 20;

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
}

inline bool parse_u64_at(std::string_view s, std::size_t& pos,
                         std::uint64_t& out) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    return false;
  }
  std::uint64_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
    if (v > (UINT64_MAX - d) / 10) {
      throw ParseError("integer literal too large in \"" + std::string(s) +
                       "\"");
    }
    v = v * 10 + d;
    ++pos;
  }
  out = v;
  return true;
}

inline FqElem encoding_elem(const FqField& f, std::uint64_t enc,
                            std::string_view text) {
  if (enc >= f.q()) {
    throw ParseError("coefficient encoding " + std::to_string(enc) +
                     " is outside [0, " + std::to_string(f.q()) +
                     ") in \"" + std::string(text) + "\"");
  }
  return FqElem(&f, enc);
}

inline FqPoly parse_encoding_list(const FqField& f, std::string_view text) {
  std::vector<FqElem> coeffs;
  std::size_t pos = 0;
  for (;;) {
    skip_ws(text, pos);
    std::uint64_t enc = 0;
    if (!parse_u64_at(text, pos, enc)) {
      throw ParseError("expected an encoding integer at position " +
                       std::to_string(pos) + " in \"" + std::string(text) +
                       "\"");
    }
    coeffs.push_back(encoding_elem(f, enc, text));
    skip_ws(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw ParseError("expected ',' at position " + std::to_string(pos) +
                       " in \"" + std::string(text) + "\"");
    }
    ++pos;
  }
  return FqPoly(std::move(coeffs));
}

inline FqPoly parse_caret_expr(const FqField& f, std::string_view text) {
  std::vector<FqElem> coeffs;
  FqElem zero(&f, 0);
  std::size_t pos = 0;
  bool negative = false;
  skip_ws(text, pos);
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  for (;;) {
    skip_ws(text, pos);
    std::uint64_t enc = 0;
    bool have_coeff = parse_u64_at(text, pos, enc);
    skip_ws(text, pos);
    if (have_coeff && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws(text, pos);
      if (pos >= text.size() || text[pos] != 'x') {
        throw ParseError("expected 'x' after '*' in \"" + std::string(text) +
                         "\"");
      }
    }
    std::uint64_t power = 0;
    bool have_x = pos < text.size() && text[pos] == 'x';
    if (have_x) {
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (!parse_u64_at(text, pos, power)) {
          throw ParseError("expected an exponent after '^' in \"" +
                           std::string(text) + "\"");
        }
        if (power > kMaxParsedPower) {
          throw ParseError("exponent " + std::to_string(power) +
                           " exceeds the supported maximum");
        }
      }
    }
    if (!have_coeff && !have_x) {
      throw ParseError("expected a term at position " + std::to_string(pos) +
                       " in \"" + std::string(text) + "\"");
    }
    FqElem c = have_coeff ? encoding_elem(f, enc, text) : FqElem(&f, 1);
    if (negative) c = -c;
    if (coeffs.size() <= power) coeffs.resize(power + 1, zero);
    coeffs[power] = coeffs[power] + c;
    skip_ws(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != '+' && text[pos] != '-') {
      throw ParseError("expected '+' or '-' at position " +
                       std::to_string(pos) + " in \"" + std::string(text) +
                       "\"");
    }
    negative = text[pos] == '-';
    ++pos;
  }
  return FqPoly(std::move(coeffs));
}

}  // namespace detail

// Accepts either a little-endian comma list of F_q encodings ("1,1,0,0,1")
// or a caret expression ("x^4+x+1", "x^2+2*x+1") with coefficients written
// as encodings below q.
inline FqPoly parse_fq_poly(const std::shared_ptr<const FqField>& field,
                            std::string_view text) {
  std::size_t pos = 0;
  detail::skip_ws(text, pos);
  if (pos == text.size()) {
    throw ParseError("empty polynomial text");
  }
  if (text.find(',') != std::string_view::npos) {
    return detail::parse_encoding_list(*field, text);
  }
  if (text.find('x') != std::string_view::npos) {
    return detail::parse_caret_expr(*field, text);
  }
  return detail::parse_encoding_list(*field, text);
}

// Descending-power caret form, encodings as coefficients: "x^4 + x + 1";
// the zero polynomial renders as "0".
inline std::string render_poly_caret(const FqPoly& P) {
  if (P.degree() < 0) return "0";
  std::string out;
  for (auto i = P.degree(); i >= 0; --i) {
    const FqElem& c = P.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c.enc() == 1;
    if (i == 0) {
      out += std::to_string(c.enc());
    } else {
      if (!unit) {
        out += std::to_string(c.enc());
        out += '*';
      }
      out += 'x';
      if (i > 1) {
        out += '^';
        out += std::to_string(i);
      }
    }
  }
  return out;
}

// Little-endian encoding list: "1,1,0,0,1"; the zero polynomial renders
// as "0".
inline std::string render_poly_encs(const FqPoly& P) {
  if (P.degree() < 0) return "0";
  std::string out;
  for (std::size_t i = 0; i < P.coeffs().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(P.coeff(i).enc());
  }
  return out;
}

}  // namespace knpoly

#endif  // KNPOLY_PARSE_HPP_
