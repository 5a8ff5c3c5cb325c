#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "yagita/chern.hpp"
#include "yagita/errors.hpp"
#include "yagita/formulas.hpp"
#include "yagita/fppoly.hpp"
#include "yagita/harness.hpp"
#include "yagita/ringspec.hpp"
#include "yagita/witness.hpp"

namespace py = pybind11;
using namespace yagita;

namespace {

py::dict sl_dict(const SlResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["exact"] = r.is_exact();
  d["text"] = r.to_string();
  return d;
}

py::dict prop6_dict(std::uint64_t p, const std::vector<std::int64_t>& coeffs) {
  const Prop6Verdict v = check_prop6(FpPoly(p, coeffs));
  py::dict d;
  d["gcd"] = v.gcd;
  d["m"] = v.m;
  d["q"] = v.q;
  d["holds"] = v.holds;
  return d;
}

py::dict witness_dict(const std::string& kind, const std::string& ring, std::uint64_t cap) {
  const WitnessEmbedding w = build_witness(WitnessKind::parse(kind), RingSpec::parse(ring));
  const WitnessCheck c = verify_witness(w, cap);
  py::list gens;
  for (const auto& g : w.generators) gens.append(g.to_json().dump());
  py::dict d;
  d["kind"] = w.kind.to_string();
  d["construction"] = w.construction;
  d["dimension"] = w.dimension;
  d["generators"] = gens;
  d["expected_order"] = w.expected_order;
  d["closure_order"] = c.closure_order;
  d["relations_ok"] = c.relations_ok;
  d["all_det_one"] = c.all_det_one;
  d["claims_sl"] = w.claims_sl;
  d["oracle"] = w.expected_yagita;
  d["chern_upper"] = yagita_upper_witness(*c.group, w.kind.p).to_string();
  d["verified"] = c.verified;
  return d;
}

std::string verify_json(std::uint64_t p, std::uint64_t n, const std::string& ring, bool sl, std::uint64_t cap) {
  VerifyOptions opt;
  opt.special = sl;
  opt.cap = cap;
  py::gil_scoped_release release;
  return verify_case(p, n, RingSpec::parse(ring), opt).dump();
}

}  // namespace

PYBIND11_MODULE(yagita_py, m) {
  m.doc() = "Yagita invariants of GL_n and SL_n over rings of integers";

  py::register_exception<yagita::UnsupportedField>(m, "UnsupportedField", PyExc_ValueError);

  m.def("psi", [](std::uint64_t num, std::uint64_t den, std::uint64_t p) { return psi(num, den, p); },
        py::arg("num"), py::arg("den"), py::arg("p"));
  m.def("yagita_gl", &yagita_gl, py::arg("p"), py::arg("n"), py::arg("l"));
  m.def("yagita_gl_Z", &yagita_gl_Z, py::arg("p"), py::arg("n"));
  m.def("yagita_sl_Z", &yagita_sl_Z, py::arg("p"), py::arg("n"));
  m.def("yagita_gl_R", &yagita_gl_R, py::arg("p"), py::arg("n"));
  m.def(
      "yagita_sl",
      [](std::uint64_t p, std::uint64_t n, const std::string& ring) {
        const RingSpec r = RingSpec::parse(ring);
        return sl_dict(yagita_sl(p, n, compute_l(r, p), r));
      },
      py::arg("p"), py::arg("n"), py::arg("ring"));
  m.def(
      "yagita_sl_best",
      [](std::uint64_t p, std::uint64_t n, const std::string& ring) {
        return sl_dict(yagita_sl_best(p, n, RingSpec::parse(ring)));
      },
      py::arg("p"), py::arg("n"), py::arg("ring"));
  m.def("lcm_form_reduced", &lcm_form_reduced, py::arg("p"), py::arg("l"), py::arg("n"));
  m.def("middle_row_lcm", &middle_row_lcm, py::arg("p"), py::arg("n"), py::arg("l"));

  m.def("parse_ring", [](const std::string& s) { return RingSpec::parse(s).to_string(); }, py::arg("text"));
  m.def("compute_l", [](const std::string& ring, std::uint64_t p) { return compute_l(RingSpec::parse(ring), p); },
        py::arg("ring"), py::arg("p"));
  m.def("roots_of_unity_order", [](const std::string& ring) { return roots_of_unity_order(RingSpec::parse(ring)); },
        py::arg("ring"));

  m.def("check_prop6", &prop6_dict, py::arg("p"), py::arg("coeffs"));
  m.def(
      "random_unit_root_poly",
      [](std::uint64_t p, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return random_unit_root_poly(p, rng).coeffs();
      },
      py::arg("p"), py::arg("seed"));

  m.def("witness", &witness_dict, py::arg("kind"), py::arg("ring") = "Z", py::arg("cap") = kDefaultCap);
  m.def("verify_case", &verify_json, py::arg("p"), py::arg("n"), py::arg("ring") = "Z", py::arg("sl") = false,
        py::arg("cap") = kDefaultCap);
  m.def(
      "table",
      [](std::uint64_t p, const std::string& ring, std::uint64_t n_max) {
        const RingSpec r = RingSpec::parse(ring);
        return table_json(p, r, table(p, r, n_max)).dump();
      },
      py::arg("p"), py::arg("ring") = "Z", py::arg("n_max") = 16);
}
