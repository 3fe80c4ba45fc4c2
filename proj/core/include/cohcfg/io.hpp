#ifndef COHCFG_IO_HPP
#define COHCFG_IO_HPP

#include <string>
#include <vector>

#include "cohcfg/coherent_config.hpp"
#include "cohcfg/equitable.hpp"
#include "cohcfg/orbitals.hpp"
#include "cohcfg/sieve.hpp"
#include "cohcfg/tableau.hpp"

namespace cohcfg {

// Configuration files: {"size": n, "colors": [[...], ...]}; unknown keys are
// ignored on input. Emitted files add fibers, degrees and the transpose map as
// derived metadata. Parse and shape problems raise IoError.
ColorMatrix read_color_matrix(const std::string& path);
void write_config(const std::string& path, const CoherentConfig& cc);
std::string config_json(const CoherentConfig& cc);

// Action files: {"domain": n, "generators": [[...], ...]}.
ActionSpec read_action(const std::string& path);

// Report serializations; key order is fixed so identical inputs produce
// byte-identical output.
std::string report_json(const SieveReport& report);
std::string survey_json(const std::vector<SieveReport>& reports);
std::string tableau_json(const TableauResult& result);
std::string partition_json(const EquitablePartition& partition);
std::string partitions_json(const std::vector<EquitablePartition>& partitions,
                            std::int64_t colors);

}  // namespace cohcfg

#endif
