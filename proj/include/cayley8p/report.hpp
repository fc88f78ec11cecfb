#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cayley8p/oracle.hpp"
#include "cayley8p/polya.hpp"

namespace cayley8p {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string& name);

struct Discrepancy {
  std::string quantity;
  std::string method_a;
  BigInt value_a;
  std::string method_b;
  BigInt value_b;
};

/// Counts for one p. The headline fields come from the closed formulas;
/// `methods` holds whichever independent routes were computed:
///   closed_form, cycle_index_eval, burnside, orbit_partition -> N
///   oracle_circulant -> N_c, oracle_connected -> N'
struct CountReport {
  int p = 0;
  std::uint64_t aut_order = 0;
  int domain_size = 0;
  BigInt n_total;
  BigInt n_circulant;
  BigInt n_connected;
  std::map<std::string, BigInt> methods;
  std::vector<Discrepancy> discrepancies;
};

/// Closed forms plus the cheap cross-checks (cycle-index evaluation at 2 and
/// Burnside). Disagreements among the three N routes are recorded.
CountReport make_count_report(OddPrime p);

enum class CheckStatus { Pass, Fail, Flagged };

const char* to_string(CheckStatus status);

/// "fail" marks an internal inconsistency; "flagged" marks a disagreement
/// between a published formula and an exhaustive oracle.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string details;
};

enum class VerifyLevel { Quick, Full };

VerifyLevel parse_level(const std::string& name);

struct VerificationReport {
  int p = 0;
  VerifyLevel level = VerifyLevel::Quick;
  std::vector<Check> checks;
  CountReport counts;
  std::optional<OrbitCensus> census;
  std::optional<BigInt> circulant_oracle;

  bool has_failure() const;
  const Check* find(const std::string& name) const;
};

/// Quick: group laws, automorphism family, cycle types and cycle index by both
/// routes, N by three routes. Full additionally runs the exhaustive sweeps
/// (subject to options.cap) and the circulant oracle.
VerificationReport run_verify(OddPrime p, VerifyLevel level, const SweepOptions& options = {});

nlohmann::json to_json(const CountReport& report);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json cycle_index_to_json(const CycleIndexPoly& poly);

std::string render_count(const CountReport& report, OutputFormat format);
std::string render_table(const std::vector<CountReport>& rows, OutputFormat format);
std::string render_verify(const VerificationReport& report, OutputFormat format);

inline constexpr const char* kCsvHeader = "p,n_total,n_circulant,n_connected";

}  // namespace cayley8p
