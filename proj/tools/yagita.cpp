#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "yagita/arith.hpp"
#include "yagita/chern.hpp"
#include "yagita/errors.hpp"
#include "yagita/formulas.hpp"
#include "yagita/fppoly.hpp"
#include "yagita/harness.hpp"
#include "yagita/ringspec.hpp"
#include "yagita/witness.hpp"

using namespace yagita;
using nlohmann::json;

namespace {

constexpr std::uint64_t kMaxPrime = 10'000;

struct Globals {
  bool json = false;
  std::uint64_t cap = kDefaultCap;
  std::uint64_t seed = 1;
};

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw std::invalid_argument("primes above " + std::to_string(kMaxPrime) + " are not supported");
}

CycMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const json j = json::parse(in);
  if (j.is_array()) {
    std::vector<std::vector<CycNum>> rows;
    for (const auto& row : j) {
      rows.emplace_back();
      for (const auto& e : row) rows.back().push_back(CycNum::from_json(e));
    }
    for (const auto& r : rows)
      if (r.size() != rows.size()) throw std::invalid_argument("matrix file: rows must form a square matrix");
    return CycMatrix::from_rows(rows);
  }
  return CycMatrix::from_json(j);
}

int cmd_compute(const Globals& g, std::uint64_t p, std::uint64_t n, const std::string& ring_text, bool sl) {
  check_prime(p);
  const RingSpec ring = RingSpec::parse(ring_text);
  const std::uint64_t l = compute_l(ring, p);
  std::string value;
  std::string kind = "exact";
  if (!sl) {
    value = std::to_string(ring.is_integers() ? yagita_gl_Z(p, n) : yagita_gl(p, n, l));
  } else if (n < 2) {
    value = "1";
  } else {
    const SlResult r = yagita_sl_best(p, n, ring);
    value = std::to_string(r.value);
    if (!r.is_exact()) kind = "ambiguous_half";
  }
  if (g.json) {
    std::cout << json{{"p", std::to_string(p)}, {"n", std::to_string(n)}, {"ring", ring.to_string()},
                      {"l", std::to_string(l)}, {"group", sl ? "SL" : "GL"}, {"value", value}, {"kind", kind}}
                     .dump(2)
              << "\n";
  } else if (kind == "exact") {
    std::cout << value << "\n";
  } else {
    const auto v = std::stoull(value);
    std::cout << v << " or " << v / 2 << " (ambiguous exceptional SL case)\n";
  }
  return 0;
}

int cmd_witness(const Globals& g, const std::string& kind_text, std::string ring_text) {
  const WitnessKind kind = WitnessKind::parse(kind_text);
  check_prime(kind.p);
  if (ring_text.empty()) ring_text = kind.family == WitnessKind::Family::Q8 ? "Z[i]" : "Z";
  const WitnessEmbedding w = build_witness(kind, RingSpec::parse(ring_text));
  const WitnessCheck check = verify_witness(w, g.cap);
  const ExtNat upper = yagita_upper_witness(*check.group, kind.p);
  if (g.json) {
    json gens = json::array();
    for (const auto& m : w.generators) gens.push_back(m.to_json());
    json rel = json::array();
    for (const auto& r : w.relators) rel.push_back(word_to_string(r));
    json dets = json::array();
    for (const auto& d : check.generator_dets) dets.push_back(d.to_json());
    std::cout << json{{"kind", kind.to_string()},
                      {"ring", w.ring.to_string()},
                      {"construction", w.construction},
                      {"dimension", std::to_string(w.dimension)},
                      {"generators", gens},
                      {"relators", rel},
                      {"report",
                       {{"expected_order", std::to_string(w.expected_order)},
                        {"closure_order", std::to_string(check.closure_order)},
                        {"order_ok", check.order_ok},
                        {"relations_ok", check.relations_ok},
                        {"claims_sl", w.claims_sl},
                        {"all_det_one", check.all_det_one},
                        {"generator_dets", dets},
                        {"oracle", std::to_string(w.expected_yagita)},
                        {"chern_upper", upper.to_string()},
                        {"verified", check.verified}}}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << w.label() << "\n";
    for (std::size_t i = 0; i < w.generators.size(); ++i)
      std::cout << "generator " << i << ":\n" << w.generators[i].to_string() << "\n";
    std::cout << "closure order " << check.closure_order << " (expected " << w.expected_order << ")\n"
              << "relations " << (check.relations_ok ? "ok" : "FAILED") << "\n"
              << "all determinants 1: " << (check.all_det_one ? "yes" : "no") << "\n"
              << "oracle " << w.expected_yagita << ", Chern bound " << upper.to_string() << "\n"
              << (check.verified ? "verified" : "NOT verified") << "\n";
  }
  return check.verified ? 0 : 1;
}

int cmd_chern(const Globals& g, const std::string& path, std::uint64_t p) {
  check_prime(p);
  const CycMatrix m = read_matrix(path);
  if (m.size() > kMaxWitnessDimension) throw std::invalid_argument("matrix dimension exceeds 64");
  const EigenExponents e = eigen_exponents(m, p);
  const TotalChernClass c = total_chern(e);
  const ExtNat nu = exponent_gcd(c);
  if (g.json) {
    std::cout << json{{"p", std::to_string(p)}, {"exponents", e.to_json()}, {"total_chern", c.to_string()},
                      {"n_upper", nu.to_string()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "exponents " << e.to_string() << "\ntotal Chern class " << c.to_string() << "\nn_upper "
              << nu.to_string() << "\n";
  }
  return 0;
}

int cmd_verify(const Globals& g, std::uint64_t p, std::uint64_t n, const std::string& ring_text, bool sl) {
  check_prime(p);
  VerifyOptions opt;
  opt.special = sl;
  opt.cap = g.cap;
  const VerificationReport r = verify_case(p, n, RingSpec::parse(ring_text), opt);
  if (g.json) {
    std::cout << r.dump() << "\n";
  } else {
    std::cout << (sl ? "SL_" : "GL_") << n << "(" << r.ring << "), p = " << p << ", l = " << r.l << "\n";
    std::cout << "formula " << r.formula_value;
    if (r.formula_ambiguous) std::cout << " or " << r.formula_value / 2;
    std::cout << "\n";
    for (const auto& w : r.witnesses)
      std::cout << "  " << w.kind << " [" << w.construction << "] dim " << w.dimension << ": "
                << (w.verified ? "verified" : "unverified") << ", order " << w.closure_order << ", oracle "
                << w.oracle << ", Chern bound " << (w.chern_upper.empty() ? "-" : w.chern_upper)
                << (w.note.empty() ? "" : " (" + w.note + ")") << "\n";
    std::cout << "certified lower bound " << r.certified_lower << "\n";
    std::cout << "verdict " << verdict_name(r.verdict) << "\n";
  }
  return exit_code(r.verdict);
}

int cmd_table(const Globals& g, std::uint64_t p, const std::string& ring_text, std::uint64_t n_max) {
  check_prime(p);
  const RingSpec ring = RingSpec::parse(ring_text);
  const auto rows = table(p, ring, n_max);
  if (g.json)
    std::cout << table_json(p, ring, rows).dump(2) << "\n";
  else
    std::cout << table_tsv(rows);
  return 0;
}

json prop6_json(const FpPoly& f, const Prop6Verdict& v) {
  return {{"poly", f.to_string()}, {"gcd", std::to_string(v.gcd)}, {"m", std::to_string(v.m)},
          {"q", std::to_string(v.q)}, {"holds", v.holds}};
}

int cmd_prop6(const Globals& g, std::uint64_t p, const std::string& poly, std::uint64_t random) {
  check_prime(p);
  if (!poly.empty()) {
    FpPoly f = FpPoly::parse(poly + " (mod " + std::to_string(p) + ")");
    const Prop6Verdict v = check_prop6(f);
    if (g.json)
      std::cout << prop6_json(f, v).dump(2) << "\n";
    else
      std::cout << f.to_string() << ": gcd " << v.gcd << " = " << v.m << " * " << p << "^" << v.q
                << (v.holds ? ", holds" : ", FAILS") << "\n";
    return v.holds ? 0 : 1;
  }
  if (random == 0) throw std::invalid_argument("prop6 needs --poly or --random");
  std::mt19937_64 rng(g.seed);
  std::uint64_t held = 0;
  json cases = json::array();
  for (std::uint64_t i = 0; i < random; ++i) {
    const FpPoly f = random_unit_root_poly(p, rng);
    const Prop6Verdict v = check_prop6(f);
    held += v.holds;
    if (g.json) cases.push_back(prop6_json(f, v));
  }
  if (g.json)
    std::cout << json{{"p", std::to_string(p)}, {"seed", std::to_string(g.seed)}, {"count", std::to_string(random)},
                      {"held", std::to_string(held)}, {"cases", cases}}
                     .dump(2)
              << "\n";
  else
    std::cout << held << "/" << random << " polynomials satisfy the m p^q shape"
              << (held == random ? " (all hold)" : "") << "\n";
  return held == random ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yagita invariants of GL_n and SL_n over rings of integers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--cap", g.cap, "Maximum group order enumerated")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomised runs");

  std::uint64_t p = 0, n = 1, n_max = 16, random = 0;
  std::string ring = "Z", kind, file, poly, witness_ring;
  bool sl = false;

  auto* compute = app.add_subcommand("compute", "Evaluate the closed formula");
  compute->add_option("--prime,-p", p)->required();
  compute->add_option("--n,-n", n)->required()->check(CLI::PositiveNumber);
  compute->add_option("--ring,-r", ring);
  compute->add_flag("--sl", sl, "Special linear group");

  auto* witness = app.add_subcommand("witness", "Build and verify one witness group");
  witness->add_option("--kind,-k", kind, "g1:p:m, g2:p:m, e:p:m, q8 or d8")->required();
  witness->add_option("--ring,-r", witness_ring);

  auto* chern = app.add_subcommand("chern", "Chern-class data of an order-p matrix");
  chern->add_option("--matrix-file,-f", file)->required()->check(CLI::ExistingFile);
  chern->add_option("--prime,-p", p)->required();

  auto* verify = app.add_subcommand("verify", "Formula against verified witnesses");
  verify->add_option("--prime,-p", p)->required();
  verify->add_option("--n,-n", n)->required()->check(CLI::PositiveNumber);
  verify->add_option("--ring,-r", ring);
  verify->add_flag("--sl", sl, "Special linear group");

  auto* tab = app.add_subcommand("table", "GL and SL values for n = 1..n-max");
  tab->add_option("--prime,-p", p)->required();
  tab->add_option("--ring,-r", ring);
  tab->add_option("--n-max", n_max)->check(CLI::Range(std::uint64_t{1}, kMaxTableN));

  auto* prop6 = app.add_subcommand("prop6", "Exponent gcd shape of polynomials with unit roots");
  prop6->add_option("--prime,-p", p)->required();
  prop6->add_option("--poly", poly, "e.g. \"1 + 2*x^2\"");
  prop6->add_option("--random", random, "Number of random polynomials");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*compute) return cmd_compute(g, p, n, ring, sl);
    if (*witness) return cmd_witness(g, kind, witness_ring);
    if (*chern) return cmd_chern(g, file, p);
    if (*verify) return cmd_verify(g, p, n, ring, sl);
    if (*tab) return cmd_table(g, p, ring, n_max);
    if (*prop6) return cmd_prop6(g, p, poly, random);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --cap)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
