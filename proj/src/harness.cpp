#include "yagita/harness.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "yagita/arith.hpp"
#include "yagita/chern.hpp"
#include "yagita/errors.hpp"
#include "yagita/formulas.hpp"
#include "yagita/fppoly.hpp"
#include "yagita/witness.hpp"

namespace yagita {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "Pass";
    case Verdict::PassWithAmbiguity:
      return "PassWithAmbiguity";
    case Verdict::Incomplete:
      return "Incomplete";
    case Verdict::Fail:
      return "Fail";
  }
  return "Fail";
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Pass, Verdict::PassWithAmbiguity, Verdict::Incomplete, Verdict::Fail})
    if (verdict_name(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return 0;
    case Verdict::PassWithAmbiguity:
      return 2;
    case Verdict::Incomplete:
      return 3;
    case Verdict::Fail:
      return 1;
  }
  return 1;
}

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

std::uint64_t num(const nlohmann::json& j) {
  const std::string s = j.get<std::string>();
  std::size_t pos = 0;
  const auto v = std::stoull(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not a decimal integer: '" + s + "'");
  return v;
}

struct Outcome {
  WitnessResult result;
  std::vector<ChernEntry> chern;
  bool failed = false;
};

Outcome run_witness(const WitnessEmbedding& w, std::uint64_t gl_value, std::uint64_t cap) {
  Outcome out;
  WitnessResult& r = out.result;
  r.kind = w.kind.to_string();
  r.construction = w.construction;
  r.dimension = w.dimension;
  r.claims_sl = w.claims_sl;
  r.oracle = w.expected_yagita;
  WitnessCheck check;
  try {
    check = verify_witness(w, cap);
  } catch (const CapExceeded& e) {
    r.note = std::string("cap exceeded: ") + e.what();
    return out;
  }
  r.closure_order = check.closure_order;
  r.verified = check.verified;
  if (!check.verified) {
    out.failed = true;
    r.note = "verification failed";
    return out;
  }
  const std::uint64_t p = w.kind.p;
  const auto subgroups = order_p_cyclic_subgroups(*check.group, p);
  ExtNat upper = ExtNat::finite(1);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const ExtNat nu = n_upper(subgroups[i], p);
    ChernEntry c;
    c.subgroup_id = r.kind + "#" + str(i);
    c.n_upper = nu.to_string();
    if (nu.is_infinite()) {
      c.divides_formula = c.prop6_form = c.rational = true;
    } else {
      const std::uint64_t v = nu.value();
      c.divides_formula = gl_value % (2 * v) == 0;
      c.prop6_form = (p - 1) % mp_q_decompose(v, p).m == 0;
      c.rational = v % w.l == 0;
    }
    upper = lcm(upper, nu.is_infinite() ? nu : ExtNat::finite(2 * nu.value()));
    out.chern.push_back(std::move(c));
  }
  r.chern_upper = upper.to_string();
  // The oracle value is a lower bound for the group, the Chern value an
  // upper bound.
  if (upper.is_finite() && upper.value() % r.oracle != 0) {
    out.failed = true;
    r.note = "oracle does not divide the Chern bound";
  }
  return out;
}

}  // namespace

VerificationReport verify_case(std::uint64_t p, std::uint64_t n, const RingSpec& ring, const VerifyOptions& options) {
  if (!is_prime(p)) throw std::invalid_argument("verify_case: p must be prime");
  if (n < 1) throw std::invalid_argument("verify_case: n must be positive");
  VerificationReport rep;
  rep.p = p;
  rep.n = n;
  rep.ring = ring.to_string();
  rep.l = compute_l(ring, p);
  rep.special = options.special;
  rep.gl_formula_value = ring.is_integers() ? yagita_gl_Z(p, n) : yagita_gl(p, n, rep.l);
  if (options.special && n >= 2) {
    const SlResult sl = yagita_sl_best(p, n, ring);
    rep.formula_value = sl.value;
    rep.formula_ambiguous = !sl.is_exact();
  } else if (options.special) {
    rep.formula_value = 1;
  } else {
    rep.formula_value = rep.gl_formula_value;
  }

  const WitnessMenu menu = witness_menu(p, n, ring);
  const auto& list = options.special ? menu.sl : menu.gl;
  std::vector<Outcome> outcomes;
  if (options.parallel && list.size() > 1) {
    std::vector<std::future<Outcome>> jobs;
    for (const auto& w : list)
      jobs.push_back(std::async(std::launch::async, run_witness, std::cref(w), rep.gl_formula_value, options.cap));
    for (auto& j : jobs) outcomes.push_back(j.get());
  } else {
    for (const auto& w : list) outcomes.push_back(run_witness(w, rep.gl_formula_value, options.cap));
  }
  std::vector<std::size_t> order(list.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (list[a].kind != list[b].kind) return list[a].kind < list[b].kind;
    if (list[a].dimension != list[b].dimension) return list[a].dimension < list[b].dimension;
    return list[a].construction < list[b].construction;
  });

  bool failed = false;
  bool skipped = n > kMaxWitnessDimension;
  for (std::size_t i : order) {
    Outcome& o = outcomes[i];
    failed = failed || o.failed;
    if (!o.result.verified && !o.failed) skipped = true;
    if (o.result.verified) {
      rep.certified_lower = lcm_u64(rep.certified_lower, o.result.oracle);
      if (rep.formula_value % o.result.oracle != 0) rep.oracles_divide_formula = false;
    }
    rep.witnesses.push_back(std::move(o.result));
    for (auto& c : o.chern) {
      failed = failed || !(c.divides_formula && c.prop6_form && c.rational);
      rep.chern_consistency.push_back(std::move(c));
    }
  }
  failed = failed || !rep.oracles_divide_formula;

  const std::uint64_t v = rep.formula_value;
  if (failed) {
    rep.verdict = Verdict::Fail;
  } else if (!rep.formula_ambiguous && rep.certified_lower == v) {
    rep.verdict = Verdict::Pass;
  } else if (rep.formula_ambiguous && (rep.certified_lower == v || 2 * rep.certified_lower == v)) {
    rep.verdict = Verdict::PassWithAmbiguity;
  } else if (options.special || skipped) {
    rep.verdict = Verdict::Incomplete;
  } else {
    rep.verdict = Verdict::Fail;
  }
  return rep;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["parameters"] = {{"p", str(p)},
                     {"n", str(n)},
                     {"ring", ring},
                     {"l", str(l)},
                     {"group", special ? "SL" : "GL"}};
  j["formula_value"] = {{"value", str(formula_value)},
                        {"kind", formula_ambiguous ? "ambiguous_half" : "exact"},
                        {"gl_value", str(gl_formula_value)}};
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : witnesses)
    j["witnesses"].push_back({{"kind", w.kind},
                              {"construction", w.construction},
                              {"dimension", str(w.dimension)},
                              {"claims_sl", w.claims_sl},
                              {"verified", w.verified},
                              {"oracle", str(w.oracle)},
                              {"closure_order", str(w.closure_order)},
                              {"chern_upper", w.chern_upper},
                              {"note", w.note}});
  j["certified_lower"] = str(certified_lower);
  j["chern_consistency"] = nlohmann::json::array();
  for (const auto& c : chern_consistency)
    j["chern_consistency"].push_back({{"subgroup_id", c.subgroup_id},
                                      {"n_upper", c.n_upper},
                                      {"divides_formula", c.divides_formula},
                                      {"prop6_form", c.prop6_form},
                                      {"rational", c.rational}});
  j["oracles_divide_formula"] = oracles_divide_formula;
  j["verdict"] = verdict_name(verdict);
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  const auto& par = j.at("parameters");
  r.p = num(par.at("p"));
  r.n = num(par.at("n"));
  r.ring = par.at("ring").get<std::string>();
  r.l = num(par.at("l"));
  const std::string group = par.at("group").get<std::string>();
  if (group != "GL" && group != "SL") throw std::invalid_argument("unknown group '" + group + "'");
  r.special = group == "SL";
  const auto& f = j.at("formula_value");
  r.formula_value = num(f.at("value"));
  const std::string kind = f.at("kind").get<std::string>();
  if (kind != "exact" && kind != "ambiguous_half") throw std::invalid_argument("unknown formula kind '" + kind + "'");
  r.formula_ambiguous = kind == "ambiguous_half";
  r.gl_formula_value = num(f.at("gl_value"));
  for (const auto& w : j.at("witnesses")) {
    WitnessResult x;
    x.kind = w.at("kind").get<std::string>();
    x.construction = w.at("construction").get<std::string>();
    x.dimension = num(w.at("dimension"));
    x.claims_sl = w.at("claims_sl").get<bool>();
    x.verified = w.at("verified").get<bool>();
    x.oracle = num(w.at("oracle"));
    x.closure_order = num(w.at("closure_order"));
    x.chern_upper = w.at("chern_upper").get<std::string>();
    x.note = w.at("note").get<std::string>();
    r.witnesses.push_back(std::move(x));
  }
  r.certified_lower = num(j.at("certified_lower"));
  for (const auto& c : j.at("chern_consistency")) {
    ChernEntry x;
    x.subgroup_id = c.at("subgroup_id").get<std::string>();
    x.n_upper = c.at("n_upper").get<std::string>();
    x.divides_formula = c.at("divides_formula").get<bool>();
    x.prop6_form = c.at("prop6_form").get<bool>();
    x.rational = c.at("rational").get<bool>();
    r.chern_consistency.push_back(std::move(x));
  }
  r.oracles_divide_formula = j.at("oracles_divide_formula").get<bool>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  return r;
}

std::string VerificationReport::dump() const { return to_json().dump(2); }

std::vector<TableRow> table(std::uint64_t p, const RingSpec& ring, std::uint64_t n_max) {
  if (n_max < 1 || n_max > kMaxTableN) throw std::invalid_argument("table: n_max must lie in [1, 4096]");
  const std::uint64_t l = compute_l(ring, p);
  std::vector<TableRow> rows;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    TableRow row{n, ring.is_integers() ? yagita_gl_Z(p, n) : yagita_gl(p, n, l), "1"};
    if (n >= 2) row.sl = yagita_sl_best(p, n, ring).to_string();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table_tsv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n\tGL\tSL\n";
  for (const auto& r : rows) out << r.n << '\t' << r.gl << '\t' << r.sl << '\n';
  return out.str();
}

nlohmann::json table_json(std::uint64_t p, const RingSpec& ring, const std::vector<TableRow>& rows) {
  nlohmann::json j;
  j["p"] = str(p);
  j["ring"] = ring.to_string();
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) j["rows"].push_back({{"n", str(r.n)}, {"GL", str(r.gl)}, {"SL", r.sl}});
  return j;
}

}  // namespace yagita
