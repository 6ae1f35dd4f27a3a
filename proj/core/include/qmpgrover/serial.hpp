#pragma once

#include <string>
#include <vector>

#include "qmpgrover/analytics.hpp"
#include "qmpgrover/distribution.hpp"
#include "qmpgrover/ir.hpp"
#include "qmpgrover/layout.hpp"

namespace qmpgrover {

// JSON and CSV wire formats. All bitstrings serialize MSB-left; all floats
// print with enough digits to round-trip, so identical inputs give
// byte-identical output.

/// {width, ops:[{kind, targets, controls?, oracle_targets?}],
///  measure_window:{least,length}}
std::string circuit_to_json(const Circuit& circuit);

/// {shots, counts:{bitstring:int}}
std::string counts_to_json(const Counts& counts);
Counts counts_from_json(const std::string& text);

/// CSV rows (outcome, probability), one per basis state of the window.
std::string distribution_to_csv(const Distribution& dist);

/// CSV with header b,j,p_gsa,p_no_qmp,p_qmp.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// {name, qubit_count, edges:[[a,b],...]}
CouplingMap coupling_from_json(const std::string& text);
std::string coupling_to_json(const CouplingMap& map);

/// {blocks:[[q,...],...], buffers:[q,...]}
std::string placement_to_json(const Placement& placement);

/// Shortest repeatable decimal form of a double ("0.5", not "5.0e-01").
std::string format_double(double value);

}  // namespace qmpgrover
