#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmpgrover/ir.hpp"

namespace qmpgrover {

/// Undirected physical-qubit graph of a device. Edges are stored normalized
/// (a < b), sorted, without duplicates or self-loops.
struct CouplingMap {
    std::string name;
    int qubit_count = 0;
    std::vector<std::pair<int, int>> edges;

    static CouplingMap create(std::string name, int qubit_count,
                              std::vector<std::pair<int, int>> edges);

    /// Sorted neighbor lists, indexed by qubit.
    std::vector<std::vector<int>> adjacency() const;
};

/// Built-in device graphs: "heavy-hex-27", "heavy-hex-65", "heavy-hex-127"
/// (the IBM heavy-hexagon patterns at those qubit counts), "line-K" path
/// graphs, and "grid-RxC" square grids. Throws ValidationError on unknown
/// names.
CouplingMap load_builtin_map(const std::string& name);

/// Assignment of B blocks to disjoint physical paths plus the buffer qubits
/// reserved idle between them.
struct Placement {
    std::vector<std::vector<int>> blocks;  // per block, the ordered path
    std::vector<int> buffers;              // sorted, disjoint from blocks
};

struct PlacementFailure {
    int failed_block = 0;   // first block that could not be placed
    int blocks_placed = 0;
    std::string reason;
};

/// Either a placement or a structured infeasibility report.
struct PlacementResult {
    std::optional<Placement> placement;
    std::optional<PlacementFailure> failure;

    bool feasible() const { return placement.has_value(); }
};

/// Greedy deterministic path packing: anchors are tried in index order
/// (reordered by ascending `weights` when given), paths extend through the
/// lowest-index free neighbor with backtracking, and every placed block
/// blocks a halo of radius `buffer` around itself. Guarantees graph distance
/// > buffer between qubits of different blocks.
PlacementResult place_blocks(const CouplingMap& map, int block_count, int block_size,
                             int buffer, std::span<const double> weights = {});

/// Independent validity check straight from the graph: disjointness, path
/// adjacency inside each block, and cross-block distance > buffer. Returns
/// human-readable violations; empty means valid.
std::vector<std::string> check_placement(const CouplingMap& map,
                                         const Placement& placement, int block_size,
                                         int buffer);

/// ASAP layering: gates sharing no qubit may share a layer; depth is the
/// layer count.
int logical_depth(const Circuit& circuit);

/// Inputs that feed the volume metrics: assigned qubits (buffers excluded)
/// and logical depth.
struct PlacementReport {
    int nq = 0;
    int depth = 0;
};

/// Throws ValidationError when the placement does not cover the circuit.
PlacementReport placement_report(const Placement& placement, const Circuit& circuit);

}  // namespace qmpgrover
