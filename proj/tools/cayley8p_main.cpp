// Command-line front end: counts, table reproduction, cycle analysis and
// oracle verification for Cayley graphs over T_{8p}.

#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayley8p/oracle.hpp"
#include "cayley8p/pair_domain.hpp"
#include "cayley8p/polya.hpp"
#include "cayley8p/report.hpp"

namespace {

using namespace cayley8p;

std::vector<long long> parse_p_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad p in list: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("--p-list is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of Cayley graphs over T_{8p}"};
  app.require_subcommand(1);

  long long p = 0;
  std::string format = "text";
  std::string p_list;
  std::string level = "quick";
  long long eval_at = 0;
  bool bruteforce = false;
  int max_oracle_p = 5;
  unsigned workers = 1;
  std::string mask_hex;

  const auto formats = CLI::IsMember({"text", "json", "csv"});

  auto* count = app.add_subcommand("count", "N, N_c, N', |Aut| and |D| for one p");
  count->add_option("--p", p, "odd prime")->required();
  count->add_option("--format", format)->check(formats);

  auto* table = app.add_subcommand("table", "one row of N, N_c, N' per p");
  table->add_option("--p-list", p_list, "comma-separated odd primes")->required();
  table->add_option("--format", format)->check(formats);

  auto* verify = app.add_subcommand("verify", "cross-check formulas against brute-force oracles");
  verify->add_option("--p", p, "odd prime")->required();
  verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--format", format)->check(formats);
  verify->add_option("--max-oracle-p", max_oracle_p,
                     "largest p for exhaustive sweeps (p=7 sweeps 2^28 masks and takes minutes)");
  verify->add_option("--workers", workers, "sweep threads; 0 = all cores (results do not depend on it)");

  auto* cycle_index = app.add_subcommand("cycle-index", "cycle index polynomial or its value");
  cycle_index->add_option("--p", p, "odd prime")->required();
  cycle_index->add_option("--eval", eval_at, "substitute every variable by this value");
  cycle_index->add_option("--format", format)->check(formats);
  cycle_index->add_flag("--bruteforce", bruteforce, "use the polynomial tallied from decomposed permutations");

  auto* cycle_types = app.add_subcommand("cycle-types", "cycle type of every automorphism on the pair classes");
  cycle_types->add_option("--p", p, "odd prime")->required();
  cycle_types->add_option("--format", format)->check(formats);

  auto* dot = app.add_subcommand("dot", "Graphviz export of one Cayley graph");
  dot->add_option("--p", p, "odd prime")->required();
  dot->add_option("--mask", mask_hex, "hex mask over the pair classes (bit i = class i)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const OutputFormat fmt = parse_format(format);
    if (count->parsed()) {
      std::cout << render_count(make_count_report(OddPrime(p)), fmt);
    } else if (table->parsed()) {
      std::vector<CountReport> rows;
      for (long long q : parse_p_list(p_list)) rows.push_back(make_count_report(OddPrime(q)));
      std::cout << render_table(rows, fmt);
    } else if (verify->parsed()) {
      const VerificationReport report =
          run_verify(OddPrime(p), parse_level(level), SweepOptions{max_oracle_p, workers});
      std::cout << render_verify(report, fmt);
      return report.has_failure() ? 1 : 0;
    } else if (cycle_index->parsed()) {
      const OddPrime prime(p);
      if (eval_at != 0) {
        if (eval_at < 0) throw std::invalid_argument("--eval must be positive");
        const BigInt value =
            evaluate(bruteforce ? cycle_index_bruteforce(prime) : cycle_index_closed_form(prime), eval_at);
        if (fmt == OutputFormat::Json) {
          std::cout << nlohmann::json{{"p", p}, {"eval", eval_at}, {"value", value.str()}}.dump() << "\n";
        } else {
          std::cout << value << "\n";
        }
      } else {
        const CycleIndexPoly brute = cycle_index_bruteforce(prime);
        const CycleIndexPoly closed = bruteforce ? brute : cycle_index_closed_form(prime);
        const bool matches = closed == brute;
        if (fmt == OutputFormat::Json) {
          std::cout << nlohmann::json{{"p", p},
                                      {"matches_bruteforce", matches},
                                      {"terms", cycle_index_to_json(closed)}}
                           .dump()
                    << "\n";
        } else if (fmt == OutputFormat::Csv) {
          std::cout << "coeff_num,coeff_den,monomial\n";
          for (const auto& term : cycle_index_to_json(closed)) {
            std::cout << term["coeff_num"].get<std::string>() << ","
                      << term["coeff_den"].get<std::string>() << ",\"" << term["monomial"].dump() << "\"\n";
          }
        } else {
          std::cout << closed.to_string() << "\n"
                    << (bruteforce ? "# tallied from decomposed permutations\n"
                        : matches  ? "# matches the brute-force cycle index term by term\n"
                                   : "# differs from the brute-force cycle index (see --bruteforce)\n");
        }
      }
    } else if (cycle_types->parsed()) {
      const auto action = shared_action(OddPrime(p));
      nlohmann::json records = nlohmann::json::array();
      if (fmt == OutputFormat::Csv) std::cout << "automorphism,cycle_type\n";
      for (std::size_t t = 0; t < action->order(); ++t) {
        const auto& f = action->automorphisms()[t];
        const CycleType type = cycle_type_of(action->permutations()[t]);
        if (fmt == OutputFormat::Text) {
          std::cout << f.to_string() << ": " << type.to_string() << "\n";
        } else if (fmt == OutputFormat::Csv) {
          std::cout << "\"" << f.to_string() << "\"," << type.to_string() << "\n";
        } else {
          nlohmann::json counts = nlohmann::json::array();
          for (auto [length, mult] : type.counts()) counts.push_back({length, mult});
          records.push_back({{"automorphism", f.to_string()}, {"cycle_type", counts}});
        }
      }
      if (fmt == OutputFormat::Json) std::cout << records.dump() << "\n";
    } else if (dot->parsed()) {
      const OddPrime prime(p);
      std::cout << build_cayley_graph(ConnectionSet(prime, mask_from_hex(prime, mask_hex))).to_dot();
    }
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
