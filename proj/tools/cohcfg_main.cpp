#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cohcfg/coherent_config.hpp"
#include "cohcfg/equitable.hpp"
#include "cohcfg/errors.hpp"
#include "cohcfg/io.hpp"
#include "cohcfg/operations.hpp"
#include "cohcfg/orbitals.hpp"
#include "cohcfg/sieve.hpp"
#include "cohcfg/tableau.hpp"

namespace {

std::string join(const std::vector<std::int64_t>& values) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  out << "}";
  return out.str();
}

std::vector<std::int64_t> parse_int_list(const std::string& text, char separator,
                                         const std::string& what) {
  std::vector<std::int64_t> values;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, separator)) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw cohcfg::BadParameters(what + ": cannot parse '" + piece + "'");
    }
  }
  return values;
}

int exit_for(const cohcfg::Error& error) {
  const std::string& kind = error.kind();
  if (kind == "IoError" || kind == "BadParameters" || kind == "BadInstance") return 2;
  return 1;
}

void print_error(const cohcfg::Error& error, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["error"] = error.kind();
    j["message"] = error.what();
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [name, value] : error.details()) details[name] = value;
    j["details"] = std::move(details);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error (" << error.kind() << "): " << error.what() << "\n";
  }
}

void print_summary(const cohcfg::CoherentConfig& cc) {
  std::cout << cc.point_count() << " points, " << cc.fiber_count()
            << (cc.fiber_count() == 1 ? " fiber, " : " fibers, ") << cc.color_count()
            << (cc.color_count() == 1 ? " relation" : " relations") << "\n";
  for (int fx = 0; fx < cc.fiber_count(); ++fx)
    for (int fy = 0; fy < cc.fiber_count(); ++fy) {
      const std::vector<cohcfg::Color> colors = cc.block_colors(fx, fy);
      std::vector<std::int64_t> degrees;
      for (cohcfg::Color c : colors) degrees.push_back(cc.degree[c]);
      std::cout << "block (" << fx << "," << fy << "): " << colors.size()
                << (colors.size() == 1 ? " relation" : " relations") << ", degrees "
                << join(degrees) << "\n";
    }
}

int cmd_validate(const std::string& path, const std::string& format) {
  const cohcfg::CoherentConfig cc = cohcfg::validate_configuration(cohcfg::read_color_matrix(path));
  if (format == "json") {
    std::cout << cohcfg::config_json(cc);
    return 0;
  }
  print_summary(cc);
  if (cc.fiber_count() == 2 && cc.fibers[0].size() == cc.fibers[1].size()) {
    const cohcfg::MatchingReport report = cohcfg::matching_structure(cc);
    switch (report.kind) {
      case cohcfg::MatchingKind::Matching:
        std::cout << "matching structure: Matching (relation " << *report.relation
                  << ", isomorphism verified)\n";
        break;
      case cohcfg::MatchingKind::DirectSumLike:
        std::cout << "matching structure: DirectSumLike\n";
        break;
      case cohcfg::MatchingKind::NoMatching:
        std::cout << "matching structure: NoMatching\n";
        break;
    }
  }
  return 0;
}

int cmd_orbitals(const std::string& path, const std::string& out, const std::string& format) {
  const cohcfg::ActionSpec action = cohcfg::read_action(path);
  const cohcfg::CoherentConfig cc = cohcfg::orbital_configuration(action);
  if (format == "json") {
    std::cout << cohcfg::config_json(cc);
  } else {
    std::cout << cc.fiber_count() << (cc.fiber_count() == 1 ? " fiber, " : " fibers, ")
              << cc.color_count() << (cc.color_count() == 1 ? " relation" : " relations");
    if (cc.fiber_count() == 2)
      std::cout << ", |R_XY| = " << cc.block_colors(0, 1).size();
    std::cout << "\n";
  }
  if (!out.empty()) cohcfg::write_config(out, cc);
  return 0;
}

int cmd_sieve(std::int64_t m, std::int64_t r, std::int64_t survey_bound, bool trace,
              bool expect_forced, const std::string& format) {
  if (survey_bound > 0) {
    const std::vector<cohcfg::SieveReport> reports = cohcfg::survey(survey_bound);
    bool any_survivor = false;
    for (const cohcfg::SieveReport& report : reports)
      if (!report.forced) any_survivor = true;
    if (format == "json") {
      std::cout << cohcfg::survey_json(reports);
    } else {
      std::cout << "m\tr\tk\tverdict\tsurvivors\n";
      for (const cohcfg::SieveReport& report : reports) {
        std::cout << report.params.m << "\t" << report.params.r << "\t" << report.params.k << "\t"
                  << (report.forced ? "Forced" : "Survivors") << "\t";
        for (std::size_t i = 0; i < report.survivors.size(); ++i)
          std::cout << (i ? " " : "") << join(report.survivors[i]);
        std::cout << "\n";
      }
    }
    return expect_forced && any_survivor ? 1 : 0;
  }

  if (m <= 0 || r <= 0) throw cohcfg::BadParameters("need -m and -r, or --survey");
  const cohcfg::SieveReport report = cohcfg::run_pipeline(cohcfg::SieveParameters::create(m, r));
  if (format == "json") {
    std::cout << cohcfg::report_json(report);
  } else {
    std::cout << "m = " << report.params.m << ", r = " << report.params.r
              << ", k = " << report.params.k << ", e = " << report.params.e << ", case "
              << report.theorem_case << "\n";
    if (trace)
      for (const cohcfg::CandidateOutcome& candidate : report.candidates) {
        std::cout << candidate.degrees.size() << "-multiset " << join(candidate.degrees) << ": ";
        if (candidate.eliminated_by) {
          std::cout << candidate.eliminated_by->rule << " (";
          const auto& witness = candidate.eliminated_by->witness;
          for (std::size_t i = 0; i < witness.size(); ++i)
            std::cout << (i ? ", " : "") << witness[i].first << " = " << witness[i].second;
          std::cout << ")\n";
        } else {
          std::cout << "survives\n";
        }
      }
    std::cout << "verdict: " << (report.forced ? "Forced" : "Survivors") << "\n";
    for (const std::string& note : report.notes) std::cout << "note: " << note << "\n";
  }
  return expect_forced && !report.forced ? 1 : 0;
}

int cmd_tableau(const std::string& cells_text, std::int64_t k, const std::string& format) {
  const std::vector<std::int64_t> sizes = parse_int_list(cells_text, ',', "--cells");
  if (sizes.size() != 3)
    throw cohcfg::BadParameters("--cells expects three comma-separated sizes");
  const cohcfg::TableauInstance instance =
      cohcfg::TableauInstance::create({sizes[0], sizes[1], sizes[2]}, k);
  const cohcfg::TableauResult result = cohcfg::eliminate(instance);
  if (format == "json") {
    std::cout << cohcfg::tableau_json(result);
  } else {
    std::int64_t range = 0, mismatch = 0;
    for (const cohcfg::BranchRecord& record : result.trace) {
      if (record.outcome == "diagonal-range") ++range;
      if (record.outcome == "trace-mismatch") ++mismatch;
    }
    std::cout << "cells (" << instance.cells[0] << ", " << instance.cells[1] << ", "
              << instance.cells[2] << "), k = " << instance.k << ": "
              << (result.feasible() ? "feasible" : "infeasible") << "\n";
    std::cout << "branches: " << result.trace.size() << " searched, " << range
              << " out of diagonal range, " << mismatch << " with wrong trace, "
              << result.solutions.size() << " solution classes\n";
    for (const cohcfg::BetaTableau& solution : result.solutions) {
      std::cout << "solution" << (solution.self_paired ? " (self-paired)" : "") << ":\n";
      for (int i = 0; i < 3; ++i) {
        std::cout << " ";
        for (int j = 0; j < 3; ++j) std::cout << " " << solution.beta[i][j];
        std::cout << "\n";
      }
    }
    for (const std::string& note : result.annotations) std::cout << "note: " << note << "\n";
  }
  return result.feasible() ? 0 : 1;
}

int enumeration_limit() {
  const char* env = std::getenv("CC_MAX_POINTS");
  if (env == nullptr) return cohcfg::kDefaultEnumerationLimit;
  char* end = nullptr;
  const long parsed = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || parsed <= 0)
    throw cohcfg::BadParameters("CC_MAX_POINTS must be a positive integer");
  return static_cast<int>(parsed);
}

int cmd_equitable(const std::string& path, bool enumerate, const std::string& cells_text,
                  const std::string& format) {
  const cohcfg::CoherentConfig cc = cohcfg::validate_configuration(cohcfg::read_color_matrix(path));
  if (enumerate) {
    const std::vector<cohcfg::EquitablePartition> partitions =
        cohcfg::enumerate_equitable(cc, enumeration_limit());
    if (format == "json") {
      std::cout << cohcfg::partitions_json(partitions, cc.color_count());
      return 0;
    }
    const std::int64_t modulus = cc.color_count() - 1;
    bool all_congruent = true;
    std::cout << partitions.size() << " equitable partitions, cell counts:";
    for (const cohcfg::EquitablePartition& partition : partitions) {
      std::cout << " " << partition.cells.size();
      if (modulus >= 2 && (static_cast<std::int64_t>(partition.cells.size()) - 1) % modulus != 0)
        all_congruent = false;
    }
    std::cout << "\n";
    std::cout << "every count = 1 mod " << modulus << ": " << (all_congruent ? "yes" : "no")
              << "\n";
    return 0;
  }

  if (cells_text.empty())
    throw cohcfg::BadParameters("pass --enumerate or --cells");
  std::vector<std::vector<cohcfg::Point>> cells;
  std::stringstream stream(cells_text);
  std::string piece;
  while (std::getline(stream, piece, ';')) {
    std::vector<cohcfg::Point> cell;
    for (std::int64_t value : parse_int_list(piece, ',', "--cells"))
      cell.push_back(static_cast<cohcfg::Point>(value));
    cells.push_back(std::move(cell));
  }
  const cohcfg::EquitablePartition partition = cohcfg::verify_equitable(cc, cells);
  if (format == "json") {
    std::cout << cohcfg::partition_json(partition);
    return 0;
  }
  std::cout << "equitable with " << partition.cells.size() << " cells\n";
  for (std::size_t r = 0; r < partition.parameters.size(); ++r) {
    std::cout << "relation " << r << " parameters:\n";
    for (const std::vector<std::int64_t>& row : partition.parameters[r]) {
      std::cout << " ";
      for (std::int64_t value : row) std::cout << " " << value;
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherent configuration toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string path, out, cells_text;
  std::int64_t m = 0, r = 0, survey_bound = 0, k = 0;
  bool trace = false, expect_forced = false, enumerate = false;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "check a color matrix file");
  validate->add_option("path", path, "configuration file")->required();
  add_format(validate);

  CLI::App* orbitals = app.add_subcommand("orbitals", "orbital configuration of a group action");
  orbitals->add_option("path", path, "action file")->required();
  orbitals->add_option("-o,--out", out, "write the configuration here");
  add_format(orbitals);

  CLI::App* sieve = app.add_subcommand("sieve", "degree feasibility pipeline");
  sieve->add_option("-m", m, "fiber size (odd prime)");
  sieve->add_option("-r", r, "relations per block");
  sieve->add_option("--survey", survey_bound, "run every (m, r) with m below this bound");
  sieve->add_flag("--trace", trace, "print per-candidate rule attributions");
  sieve->add_flag("--expect-forced", expect_forced, "exit 1 if any survivor remains");
  add_format(sieve);

  CLI::App* tableau = app.add_subcommand("tableau", "3-cell parameter feasibility");
  tableau->add_option("--cells", cells_text, "cell sizes a,b,c")->required();
  tableau->add_option("-k", k, "common valency")->required();
  add_format(tableau);

  CLI::App* equitable = app.add_subcommand("equitable", "equitable partitions of a scheme");
  equitable->add_option("path", path, "configuration file")->required();
  equitable->add_flag("--enumerate", enumerate, "list every equitable partition");
  equitable->add_option("--cells", cells_text, "partition to verify, e.g. 0;1,2,4;3,5,6");
  add_format(equitable);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(path, format);
    if (app.got_subcommand(orbitals)) return cmd_orbitals(path, out, format);
    if (app.got_subcommand(sieve))
      return cmd_sieve(m, r, survey_bound, trace, expect_forced, format);
    if (app.got_subcommand(tableau)) return cmd_tableau(cells_text, k, format);
    if (app.got_subcommand(equitable)) return cmd_equitable(path, enumerate, cells_text, format);
  } catch (const cohcfg::Error& error) {
    print_error(error, format);
    return exit_for(error);
  }
  return 2;
}
