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
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knpoly/knpoly.hpp"

namespace {

using nlohmann::json;

bool log_enabled() {
  const char* v = std::getenv("KNPOLY_LOG");
  return v != nullptr && *v != '\0';
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[knpoly] " << msg << "\n";
}

struct CommonOpts {
  std::uint64_t p = 2;
  std::uint64_t m = 1;
  std::string modulus;
  std::string format = "human";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts* c) {
  cmd->add_option("--p", c->p, "field characteristic (prime)")
      ->capture_default_str();
  cmd->add_option("--m", c->m, "extension degree of the base field F_(p^m)")
      ->capture_default_str();
  cmd->add_option("--modulus", c->modulus,
                  "base-field modulus over F_p (defaults to the smallest "
                  "encoding)");
  cmd->add_option("--format", c->format, "output format")
      ->check(CLI::IsMember({"human", "jsonl"}))
      ->capture_default_str();
  cmd->add_option("--out", c->out_path,
                  "write data output to this file instead of stdout");
}

std::shared_ptr<const knpoly::FqField> open_field(const CommonOpts& c) {
  if (c.modulus.empty()) return knpoly::make_field(c.p, c.m);
  auto fp = knpoly::make_field(c.p, 1);
  knpoly::FqPoly mp = knpoly::parse_fq_poly(fp, c.modulus);
  std::vector<std::uint32_t> encs;
  for (const auto& e : mp.coeffs()) {
    encs.push_back(static_cast<std::uint32_t>(e.enc()));
  }
  return knpoly::make_field(c.p, c.m, &encs);
}

// Data output goes to stdout or --out; diagnostics always to stderr.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw knpoly::ValidationError("BadOutputPath",
                                      "cannot open \"" + path +
                                          "\" for writing");
      }
      os_ = &file_;
    }
  }
  std::ostream& out() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = &std::cout;
};

knpoly::FqPoly parse_input_poly(
    const std::shared_ptr<const knpoly::FqField>& field,
    const std::string& text) {
  knpoly::FqPoly P = knpoly::parse_fq_poly(field, text);
  if (P.degree() >= 0 && !P.is_monic()) {
    std::cerr << "note: input normalized to its monic associate\n";
    P = P.monic();
  }
  return P;
}

json coeff_array(const knpoly::FqPoly& P) {
  json a = json::array();
  for (const auto& c : P.coeffs()) a.push_back(c.enc());
  return a;
}

int run_search(const CommonOpts& common, std::uint64_t n, std::uint64_t k,
               std::uint64_t budget) {
  auto field = open_field(common);
  log_line("search: q=" + std::to_string(field->q()) + " n=" +
           std::to_string(n) + " k=" + std::to_string(k));
  auto hits = knpoly::search_nk(field, n, k, budget);
  log_line("search: " + std::to_string(hits.size()) + " polynomials found");
  Sink sink(common.out_path);
  if (common.format == "jsonl") {
    for (const auto& h : hits) {
      json rec{{"encoding", h.encoding},
               {"degree", n},
               {"coeffs", coeff_array(h.poly)},
               {"k", h.report.k},
               {"rank", h.report.rank},
               {"proper", h.report.proper}};
      sink.out() << rec.dump() << "\n";
    }
  } else {
    sink.out() << "# q=" << field->q() << " n=" << n << " k=" << k << ": "
               << hits.size() << " polynomial(s)\n";
    for (const auto& h : hits) {
      sink.out() << knpoly::render_poly_caret(h.poly) << "\n";
    }
  }
  return 0;
}

int run_verify(const CommonOpts& common, const std::string& poly_text,
               bool have_k, std::uint64_t want_k) {
  auto field = open_field(common);
  knpoly::FqPoly P = parse_input_poly(field, poly_text);
  auto report = knpoly::classify(P);
  bool agree = report.methods_agree[0] && report.methods_agree[1] &&
               report.methods_agree[2];
  Sink sink(common.out_path);
  if (common.format == "jsonl") {
    json rec{{"coeffs", coeff_array(P)},
             {"degree", P.degree()},
             {"k", report.k},
             {"rank", report.rank},
             {"proper", report.proper},
             {"methods_agree", agree}};
    sink.out() << rec.dump() << "\n";
  } else {
    sink.out() << "poly: " << knpoly::render_poly_caret(P) << "\n"
               << "k: " << report.k << "\n"
               << "rank: " << report.rank << "\n"
               << "proper: " << (report.proper ? "true" : "false") << "\n"
               << "methods_agree: " << (agree ? "true" : "false") << "\n";
  }
  if (have_k && report.k != want_k) {
    std::cerr << "k mismatch: classified k = " << report.k
              << ", requested k = " << want_k << "\n";
    return 1;
  }
  return 0;
}

void emit_entry(Sink& sink, const std::string& format, std::uint64_t u,
                const knpoly::FqPoly& poly, std::uint64_t degree,
                const char* verified, const json& k_value,
                const json* predicted) {
  if (format == "jsonl") {
    json rec{{"u", u},
             {"degree", degree},
             {"coeffs", coeff_array(poly)},
             {"k", k_value},
             {"verified", verified}};
    if (predicted != nullptr) rec["predicted"] = *predicted;
    sink.out() << rec.dump() << "\n";
  } else {
    sink.out() << "u=" << u << " degree=" << degree;
    if (!k_value.is_null()) {
      sink.out() << " k=" << k_value.get<std::uint64_t>();
    }
    sink.out() << " verified=" << verified;
    if (predicted != nullptr) {
      sink.out() << " predicted=" << (predicted->get<bool>() ? "irreducible"
                                                             : "reducible");
    }
    sink.out() << " poly=" << knpoly::render_poly_caret(poly) << "\n";
  }
}

int run_extend(const CommonOpts& common, const std::string& poly_text,
               const std::string& theorem, const std::string& prop,
               std::uint64_t delta_enc, std::uint64_t d0_enc,
               std::uint64_t d1_enc, std::uint64_t d2_enc,
               std::uint64_t steps, std::uint64_t budget) {
  if (theorem.empty() == prop.empty()) {
    throw knpoly::ParseError(
        "choose exactly one of --theorem {3.1, 3.2} and --prop {2.3, 2.4}");
  }
  auto field = open_field(common);
  knpoly::FqPoly P = parse_input_poly(field, poly_text);
  Sink sink(common.out_path);

  if (theorem == "3.1") {
    auto entry = knpoly::theorem31_step(P, knpoly::fq(field, delta_enc),
                                        budget);
    emit_entry(sink, common.format, entry.u, entry.poly, entry.degree,
               knpoly::to_string(entry.verified), json(entry.k), nullptr);
    return 0;
  }
  if (theorem == "3.2") {
    auto result = knpoly::theorem32_sequence(
        P, knpoly::fq(field, delta_enc), steps, budget);
    for (const auto& e : result.entries) {
      emit_entry(sink, common.format, e.u, e.poly, e.degree,
                 knpoly::to_string(e.verified), json(e.k), nullptr);
    }
    if (result.truncated) {
      std::cerr << "sequence truncated: the degree cap was reached before "
                   "completing the requested steps\n";
    }
    return 0;
  }
  if (prop == "2.3") {
    auto result = knpoly::prop23_compose(
        P, knpoly::fq(field, d0_enc), knpoly::fq(field, d1_enc),
        knpoly::fq(field, d2_enc), budget);
    json predicted(result.predicted);
    emit_entry(sink, common.format, 1, result.F.monic(),
               static_cast<std::uint64_t>(result.F.degree()),
               knpoly::to_string(result.verified), json(nullptr), &predicted);
    return 0;
  }
  if (prop == "2.4") {
    auto result = knpoly::prop24_sequence(
        P, knpoly::fq(field, d0_enc), knpoly::fq(field, d1_enc), steps,
        budget);
    for (const auto& e : result.entries) {
      emit_entry(sink, common.format, e.u, e.poly, e.degree,
                 knpoly::to_string(e.verified), json(nullptr), nullptr);
    }
    if (result.truncated) {
      std::cerr << "sequence truncated: the degree cap was reached before "
                   "completing the requested steps\n";
    }
    return 0;
  }
  throw knpoly::ParseError("unknown mode: --theorem \"" + theorem +
                           "\" / --prop \"" + prop + "\"");
}

int run_factor(const CommonOpts& common, std::uint64_t n) {
  auto field = open_field(common);
  auto fact = knpoly::factor_xn_minus_1(n, field);
  auto table = knpoly::divisor_table(fact);
  Sink sink(common.out_path);
  if (common.format == "jsonl") {
    json factors = json::array();
    for (const auto& f : fact.factors) factors.push_back(coeff_array(f));
    json u = json::array();
    for (auto v : table.u) u.push_back(v);
    json rec{{"n", fact.n},     {"q", field->q()}, {"n1", fact.n1},
             {"e", fact.e},     {"t", fact.t},     {"factors", factors},
             {"u", u}};
    sink.out() << rec.dump() << "\n";
  } else {
    sink.out() << "n: " << fact.n << " q: " << field->q() << "\n"
               << "n1: " << fact.n1 << " e: " << fact.e << " t: " << fact.t
               << "\n";
    sink.out() << "factors:";
    for (const auto& f : fact.factors) {
      sink.out() << " (" << knpoly::render_poly_caret(f) << ")";
    }
    sink.out() << "\n";
    sink.out() << "divisors per degree:";
    for (std::uint64_t s = 0; s < table.n; ++s) {
      sink.out() << " u_" << s << "=" << table.u[s];
    }
    sink.out() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction and verification of k-normal polynomials "
               "over finite fields"};
  app.require_subcommand(1);

  CommonOpts search_common;
  std::uint64_t search_n = 0;
  std::uint64_t search_k = 0;
  std::uint64_t search_budget = knpoly::kDefaultSearchBudget;
  CLI::App* search_cmd = app.add_subcommand(
      "search", "enumerate all degree-n irreducibles with k-normality k");
  add_common(search_cmd, &search_common);
  search_cmd->add_option("--n", search_n, "polynomial degree")->required();
  search_cmd->add_option("--k", search_k, "k-normality degree")->required();
  search_cmd->add_option("--budget", search_budget,
                         "maximum q^n for exhaustive search")
      ->capture_default_str();

  CommonOpts verify_common;
  std::string verify_poly;
  std::uint64_t verify_k = 0;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "classify one polynomial by all three methods");
  add_common(verify_cmd, &verify_common);
  verify_cmd->add_option("--poly", verify_poly, "polynomial to classify")
      ->required();
  CLI::Option* verify_k_opt =
      verify_cmd->add_option("--k", verify_k,
                             "expected k; exit status 1 on mismatch");

  CommonOpts extend_common;
  std::string extend_poly;
  std::string extend_theorem;
  std::string extend_prop;
  std::uint64_t extend_delta = 1;
  std::uint64_t extend_d0 = 0;
  std::uint64_t extend_d1 = 1;
  std::uint64_t extend_d2 = 1;
  std::uint64_t extend_steps = 1;
  std::uint64_t extend_budget = knpoly::kDefaultVerifyBudget;
  CLI::App* extend_cmd = app.add_subcommand(
      "extend", "grow a sequence from a seed polynomial");
  add_common(extend_cmd, &extend_common);
  extend_cmd->add_option("--poly", extend_poly, "seed polynomial")
      ->required();
  extend_cmd->add_option("--theorem", extend_theorem,
                         "recursive k-normal construction")
      ->check(CLI::IsMember({"3.1", "3.2"}));
  extend_cmd->add_option("--prop", extend_prop,
                         "irreducibility composition")
      ->check(CLI::IsMember({"2.3", "2.4"}));
  extend_cmd->add_option("--delta", extend_delta,
                         "delta encoding for --theorem modes")
      ->capture_default_str();
  extend_cmd->add_option("--delta0", extend_d0,
                         "delta0 encoding for --prop modes")
      ->capture_default_str();
  extend_cmd->add_option("--delta1", extend_d1,
                         "delta1 encoding for --prop modes")
      ->capture_default_str();
  extend_cmd->add_option("--delta2", extend_d2,
                         "delta2 encoding for --prop 2.3")
      ->capture_default_str();
  extend_cmd->add_option("--steps", extend_steps, "number of steps u_max")
      ->capture_default_str();
  extend_cmd->add_option("--budget", extend_budget,
                         "verify entries up to this degree")
      ->capture_default_str();

  CommonOpts factor_common;
  std::uint64_t factor_n = 0;
  CLI::App* factor_cmd = app.add_subcommand(
      "factor", "factor x^n - 1 and print the divisor table");
  add_common(factor_cmd, &factor_common);
  factor_cmd->add_option("--n", factor_n, "exponent n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (search_cmd->parsed()) {
      return run_search(search_common, search_n, search_k, search_budget);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_common, verify_poly,
                        verify_k_opt->count() > 0, verify_k);
    }
    if (extend_cmd->parsed()) {
      return run_extend(extend_common, extend_poly, extend_theorem,
                        extend_prop, extend_delta, extend_d0, extend_d1,
                        extend_d2, extend_steps, extend_budget);
    }
    if (factor_cmd->parsed()) {
      return run_factor(factor_common, factor_n);
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const knpoly::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
