#pragma once

// End-to-end checks: formula value against the lcm of the oracle values of
// machine-verified witnesses, plus Chern-class consistency of every order-p
// subgroup found along the way.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "yagita/exactmat.hpp"
#include "yagita/ringspec.hpp"

namespace yagita {

enum class Verdict { Pass, PassWithAmbiguity, Incomplete, Fail };

std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& s);
/// 0 Pass, 2 PassWithAmbiguity, 3 Incomplete, 1 Fail.
int exit_code(Verdict v);

struct WitnessResult {
  std::string kind;
  std::string construction;
  std::uint64_t dimension = 0;
  bool claims_sl = false;
  bool verified = false;
  std::uint64_t oracle = 0;
  std::uint64_t closure_order = 0;
  /// lcm of 2 n_upper over the order-p subgroups, "inf" if unbounded, empty
  /// when the witness was not verified.
  std::string chern_upper;
  /// Set when construction or enumeration stopped early.
  std::string note;
};

struct ChernEntry {
  std::string subgroup_id;
  std::string n_upper;
  /// 2 n_upper divides the GL value at the ambient n.
  bool divides_formula = false;
  /// n_upper = m p^q with m | p - 1.
  bool prop6_form = false;
  /// l divides n_upper.
  bool rational = false;
};

struct VerificationReport {
  std::uint64_t p = 2;
  std::uint64_t n = 1;
  std::string ring;
  std::uint64_t l = 1;
  bool special = false;
  /// Exact value, or the larger of the two candidates when ambiguous.
  std::uint64_t formula_value = 1;
  bool formula_ambiguous = false;
  std::uint64_t gl_formula_value = 1;
  std::vector<WitnessResult> witnesses;
  std::uint64_t certified_lower = 1;
  std::vector<ChernEntry> chern_consistency;
  bool oracles_divide_formula = true;
  Verdict verdict = Verdict::Fail;

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  std::string dump() const;
};

struct VerifyOptions {
  bool special = false;
  std::uint64_t cap = kDefaultCap;
  bool parallel = true;
};

VerificationReport verify_case(std::uint64_t p, std::uint64_t n, const RingSpec& ring,
                               const VerifyOptions& options = {});

struct TableRow {
  std::uint64_t n;
  std::uint64_t gl;
  std::string sl;
};

inline constexpr std::uint64_t kMaxTableN = 4096;

std::vector<TableRow> table(std::uint64_t p, const RingSpec& ring, std::uint64_t n_max);
std::string table_tsv(const std::vector<TableRow>& rows);
nlohmann::json table_json(std::uint64_t p, const RingSpec& ring, const std::vector<TableRow>& rows);

}  // namespace yagita
