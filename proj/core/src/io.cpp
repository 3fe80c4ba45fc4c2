#include "cohcfg/io.hpp"

#include <fstream>

#include "cohcfg/errors.hpp"
#include "json.hpp"

namespace cohcfg {

using json = nlohmann::ordered_json;

namespace {

json parse_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open " + path);
  try {
    return json::parse(file);
  } catch (const json::exception& error) {
    throw IoError("parse error in " + path + ": " + error.what());
  }
}

std::vector<std::vector<int>> int_rows(const json& value, const std::string& where) {
  if (!value.is_array()) throw IoError(where + " must be an array of integer arrays");
  std::vector<std::vector<int>> rows;
  for (const json& row : value) {
    if (!row.is_array()) throw IoError(where + " must be an array of integer arrays");
    std::vector<int> entries;
    for (const json& cell : row) {
      if (!cell.is_number_integer()) throw IoError(where + " entries must be integers");
      entries.push_back(cell.get<int>());
    }
    rows.push_back(std::move(entries));
  }
  return rows;
}

json elimination_object(const Elimination& elimination) {
  json witness = json::object();
  for (const auto& [name, value] : elimination.witness) witness[name] = value;
  return witness;
}

json report_object(const SieveReport& report) {
  json j;
  j["m"] = report.params.m;
  j["r"] = report.params.r;
  j["k"] = report.params.k;
  j["e"] = report.params.e;
  j["theorem_case"] = report.theorem_case;
  json candidates = json::array();
  for (const CandidateOutcome& candidate : report.candidates) {
    json entry;
    entry["degrees"] = candidate.degrees;
    if (candidate.eliminated_by) {
      entry["eliminated_by"] = candidate.eliminated_by->rule;
      entry["witness"] = elimination_object(*candidate.eliminated_by);
    } else {
      entry["eliminated_by"] = nullptr;
      entry["witness"] = nullptr;
    }
    candidates.push_back(std::move(entry));
  }
  j["candidates"] = std::move(candidates);
  j["survivors"] = report.survivors;
  j["verdict"] = report.forced ? "Forced" : "Survivors";
  j["notes"] = report.notes;
  return j;
}

json partition_object(const EquitablePartition& partition) {
  json j;
  j["cells"] = partition.cells;
  j["parameters"] = partition.parameters;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

ColorMatrix read_color_matrix(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("colors"))
    throw IoError(path + ": expected an object with a \"colors\" array");
  const auto rows = int_rows(j["colors"], path + ": \"colors\"");
  if (j.contains("size") &&
      (!j["size"].is_number_integer() ||
       j["size"].get<std::int64_t>() != static_cast<std::int64_t>(rows.size())))
    throw IoError(path + ": \"size\" does not match the row count");
  return ColorMatrix::from_rows(rows);
}

std::string config_json(const CoherentConfig& cc) {
  json j;
  j["size"] = cc.point_count();
  json rows = json::array();
  for (Point u = 0; u < cc.point_count(); ++u) {
    json row = json::array();
    for (Point v = 0; v < cc.point_count(); ++v) row.push_back(cc.matrix.at(u, v));
    rows.push_back(std::move(row));
  }
  j["colors"] = std::move(rows);
  j["fibers"] = cc.fibers;
  json degrees = json::object();
  for (Color c = 0; c < cc.color_count(); ++c) degrees[std::to_string(c)] = cc.degree[c];
  j["degrees"] = std::move(degrees);
  json transpose = json::object();
  for (Color c = 0; c < cc.color_count(); ++c) transpose[std::to_string(c)] = cc.transpose[c];
  j["transpose"] = std::move(transpose);
  return dump(j);
}

void write_config(const std::string& path, const CoherentConfig& cc) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open " + path);
  file << config_json(cc);
  if (!file) throw IoError("write failed for " + path);
}

ActionSpec read_action(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("domain") || !j["domain"].is_number_integer() ||
      !j.contains("generators"))
    throw IoError(path + ": expected an object with \"domain\" and \"generators\"");
  ActionSpec action;
  action.domain = j["domain"].get<int>();
  action.generators = int_rows(j["generators"], path + ": \"generators\"");
  return action;
}

std::string report_json(const SieveReport& report) { return dump(report_object(report)); }

std::string survey_json(const std::vector<SieveReport>& reports) {
  json j = json::array();
  for (const SieveReport& report : reports) j.push_back(report_object(report));
  return dump(j);
}

std::string tableau_json(const TableauResult& result) {
  json j;
  j["instance"] = {{"cells", result.instance.cells},
                   {"k", result.instance.k},
                   {"m", result.instance.m()}};
  j["feasible"] = result.feasible();
  json solutions = json::array();
  for (const BetaTableau& solution : result.solutions)
    solutions.push_back({{"beta", solution.beta},
                         {"gamma", solution.gamma},
                         {"self_paired", solution.self_paired}});
  j["solutions"] = std::move(solutions);
  json trace = json::array();
  for (const BranchRecord& record : result.trace)
    trace.push_back({{"b12", record.b12},
                     {"b13", record.b13},
                     {"b23", record.b23},
                     {"diagonal", record.diagonal},
                     {"outcome", record.outcome}});
  j["trace"] = std::move(trace);
  j["annotations"] = result.annotations;
  return dump(j);
}

std::string partition_json(const EquitablePartition& partition) {
  return dump(partition_object(partition));
}

std::string partitions_json(const std::vector<EquitablePartition>& partitions,
                            std::int64_t colors) {
  json j;
  j["count"] = partitions.size();
  json counts = json::array();
  for (const EquitablePartition& partition : partitions) counts.push_back(partition.cells.size());
  j["cell_counts"] = std::move(counts);
  const std::int64_t modulus = colors - 1;
  j["modulus"] = modulus;
  bool all_congruent = true;
  if (modulus >= 2)
    for (const EquitablePartition& partition : partitions)
      if ((static_cast<std::int64_t>(partition.cells.size()) - 1) % modulus != 0)
        all_congruent = false;
  j["all_congruent"] = all_congruent;
  json list = json::array();
  for (const EquitablePartition& partition : partitions) list.push_back(partition_object(partition));
  j["partitions"] = std::move(list);
  return dump(j);
}

}  // namespace cohcfg
