#include "qmpgrover/layout.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

namespace qmpgrover {

namespace {

struct RowSpec {
    int start;       // qubit id of the leftmost row qubit
    int length;      // qubits in the row
    int col_offset;  // column of the leftmost qubit
};

struct BridgeSpec {
    int column;
    int qubit;  // id of the bridge qubit between the two rows
};

// Heavy-hex lattices are rows of linearly coupled qubits joined by single
// bridge qubits at alternating columns.
CouplingMap make_heavy_hex(std::string name, int qubit_count,
                           const std::vector<RowSpec>& rows,
                           const std::vector<std::vector<BridgeSpec>>& bridges) {
    std::vector<std::pair<int, int>> edges;
    for (const RowSpec& row : rows) {
        for (int i = 0; i + 1 < row.length; ++i) {
            edges.emplace_back(row.start + i, row.start + i + 1);
        }
    }
    const auto row_qubit = [](const RowSpec& row, int column) {
        return row.start + (column - row.col_offset);
    };
    for (std::size_t gap = 0; gap < bridges.size(); ++gap) {
        const RowSpec& top = rows[gap];
        const RowSpec& bottom = rows[gap + 1];
        for (const BridgeSpec& bridge : bridges[gap]) {
            edges.emplace_back(row_qubit(top, bridge.column), bridge.qubit);
            edges.emplace_back(bridge.qubit, row_qubit(bottom, bridge.column));
        }
    }
    return CouplingMap::create(std::move(name), qubit_count, std::move(edges));
}

CouplingMap heavy_hex_27() {
    // 27-qubit Falcon lattice.
    return CouplingMap::create(
        "heavy-hex-27", 27,
        {{0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
         {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
         {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
         {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}});
}

CouplingMap heavy_hex_65() {
    // 65-qubit Hummingbird lattice: rows of 10/11/11/11/10.
    const std::vector<RowSpec> rows = {
        {0, 10, 0}, {13, 11, 0}, {27, 11, 0}, {41, 11, 0}, {55, 10, 1}};
    const std::vector<std::vector<BridgeSpec>> bridges = {
        {{0, 10}, {4, 11}, {8, 12}},
        {{2, 24}, {6, 25}, {10, 26}},
        {{0, 38}, {4, 39}, {8, 40}},
        {{2, 52}, {6, 53}, {10, 54}}};
    return make_heavy_hex("heavy-hex-65", 65, rows, bridges);
}

CouplingMap heavy_hex_127() {
    // 127-qubit Eagle lattice: rows of 14/15/15/15/15/15/14.
    const std::vector<RowSpec> rows = {{0, 14, 0},  {18, 15, 0}, {37, 15, 0},
                                       {56, 15, 0}, {75, 15, 0}, {94, 15, 0},
                                       {113, 14, 1}};
    const std::vector<std::vector<BridgeSpec>> bridges = {
        {{0, 14}, {4, 15}, {8, 16}, {12, 17}},
        {{2, 33}, {6, 34}, {10, 35}, {14, 36}},
        {{0, 52}, {4, 53}, {8, 54}, {12, 55}},
        {{2, 71}, {6, 72}, {10, 73}, {14, 74}},
        {{0, 90}, {4, 91}, {8, 92}, {12, 93}},
        {{2, 109}, {6, 110}, {10, 111}, {14, 112}}};
    return make_heavy_hex("heavy-hex-127", 127, rows, bridges);
}

CouplingMap line_map(const std::string& name, int length) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < length; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return CouplingMap::create(name, length, std::move(edges));
}

CouplingMap grid_map(const std::string& name, int rows, int cols) {
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int q = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(q, q + 1);
            if (r + 1 < rows) edges.emplace_back(q, q + cols);
        }
    }
    return CouplingMap::create(name, rows * cols, std::move(edges));
}

int parse_positive_int(const std::string& text, const std::string& what) {
    if (text.empty() || text.size() > 6 ||
        !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ValidationError("bad " + what + " \"" + text + "\"");
    }
    const int value = std::stoi(text);
    if (value < 1) {
        throw ValidationError(what + " must be positive");
    }
    return value;
}

// Multi-source BFS distances from `sources`, capped at `limit` hops.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj,
                               const std::vector<int>& sources, int limit) {
    std::vector<int> dist(adj.size(), std::numeric_limits<int>::max());
    std::deque<int> queue;
    for (int s : sources) {
        dist[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const int q = queue.front();
        queue.pop_front();
        const int d = dist[static_cast<std::size_t>(q)];
        if (d >= limit) continue;
        for (int nb : adj[static_cast<std::size_t>(q)]) {
            if (dist[static_cast<std::size_t>(nb)] > d + 1) {
                dist[static_cast<std::size_t>(nb)] = d + 1;
                queue.push_back(nb);
            }
        }
    }
    return dist;
}

// Depth-first path extension through the lowest-index usable neighbor,
// backtracking on dead ends.
bool extend_path(const std::vector<std::vector<int>>& adj,
                 const std::vector<bool>& usable, std::vector<bool>& on_path,
                 std::vector<int>& path, int target_length) {
    if (static_cast<int>(path.size()) == target_length) {
        return true;
    }
    for (int nb : adj[static_cast<std::size_t>(path.back())]) {
        if (!usable[static_cast<std::size_t>(nb)] || on_path[static_cast<std::size_t>(nb)]) {
            continue;
        }
        path.push_back(nb);
        on_path[static_cast<std::size_t>(nb)] = true;
        if (extend_path(adj, usable, on_path, path, target_length)) {
            return true;
        }
        on_path[static_cast<std::size_t>(nb)] = false;
        path.pop_back();
    }
    return false;
}

}  // namespace

CouplingMap CouplingMap::create(std::string name, int qubit_count,
                                std::vector<std::pair<int, int>> edges) {
    if (qubit_count < 1) {
        throw ValidationError("coupling map needs at least one qubit");
    }
    for (auto& [a, b] : edges) {
        if (a == b) {
            throw ValidationError("self-loop on qubit " + std::to_string(a));
        }
        if (a < 0 || b < 0 || a >= qubit_count || b >= qubit_count) {
            throw ValidationError("edge (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ") outside " +
                                  std::to_string(qubit_count) + " qubits");
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return CouplingMap{std::move(name), qubit_count, std::move(edges)};
}

std::vector<std::vector<int>> CouplingMap::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(qubit_count));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& neighbors : adj) {
        std::sort(neighbors.begin(), neighbors.end());
    }
    return adj;
}

CouplingMap load_builtin_map(const std::string& name) {
    if (name == "heavy-hex-27") return heavy_hex_27();
    if (name == "heavy-hex-65") return heavy_hex_65();
    if (name == "heavy-hex-127") return heavy_hex_127();
    if (name.rfind("line-", 0) == 0) {
        return line_map(name, parse_positive_int(name.substr(5), "line length"));
    }
    if (name.rfind("grid-", 0) == 0) {
        const std::string dims = name.substr(5);
        const std::size_t x = dims.find('x');
        if (x == std::string::npos) {
            throw ValidationError("grid maps are named grid-RxC");
        }
        return grid_map(name, parse_positive_int(dims.substr(0, x), "grid rows"),
                        parse_positive_int(dims.substr(x + 1), "grid cols"));
    }
    throw ValidationError("unknown coupling map \"" + name + "\"");
}

PlacementResult place_blocks(const CouplingMap& map, int block_count, int block_size,
                             int buffer, std::span<const double> weights) {
    if (block_count < 1 || block_size < 1) {
        throw ValidationError("block count and block size must be positive");
    }
    if (buffer < 0) {
        throw ValidationError("buffer distance must be nonnegative");
    }
    if (!weights.empty() &&
        weights.size() != static_cast<std::size_t>(map.qubit_count)) {
        throw ValidationError("weight vector must have one entry per qubit");
    }

    const std::vector<std::vector<int>> adj = map.adjacency();
    std::vector<int> anchor_order(static_cast<std::size_t>(map.qubit_count));
    std::iota(anchor_order.begin(), anchor_order.end(), 0);
    if (!weights.empty()) {
        std::stable_sort(anchor_order.begin(), anchor_order.end(),
                         [&](int a, int b) {
                             return weights[static_cast<std::size_t>(a)] <
                                    weights[static_cast<std::size_t>(b)];
                         });
    }

    std::vector<bool> usable(static_cast<std::size_t>(map.qubit_count), true);
    std::vector<bool> assigned(static_cast<std::size_t>(map.qubit_count), false);
    Placement placement;

    for (int block = 0; block < block_count; ++block) {
        std::vector<int> path;
        std::vector<bool> on_path(static_cast<std::size_t>(map.qubit_count), false);
        for (int anchor : anchor_order) {
            if (!usable[static_cast<std::size_t>(anchor)]) continue;
            path.assign(1, anchor);
            on_path[static_cast<std::size_t>(anchor)] = true;
            if (extend_path(adj, usable, on_path, path, block_size)) {
                break;
            }
            on_path[static_cast<std::size_t>(anchor)] = false;
            path.clear();
        }
        if (static_cast<int>(path.size()) != block_size) {
            PlacementFailure failure;
            failure.failed_block = block;
            failure.blocks_placed = block;
            failure.reason = "no free path of " + std::to_string(block_size) +
                             " qubits with separation > " + std::to_string(buffer) +
                             " on " + map.name + " for block " + std::to_string(block) +
                             " of " + std::to_string(block_count);
            return PlacementResult{std::nullopt, failure};
        }
        for (int q : path) {
            assigned[static_cast<std::size_t>(q)] = true;
            usable[static_cast<std::size_t>(q)] = false;
        }
        // Halo: everything within `buffer` hops of the new block is off
        // limits for later blocks.
        const std::vector<int> dist = bfs_distances(adj, path, buffer);
        for (int q = 0; q < map.qubit_count; ++q) {
            if (dist[static_cast<std::size_t>(q)] <= buffer) {
                usable[static_cast<std::size_t>(q)] = false;
            }
        }
        placement.blocks.push_back(std::move(path));
    }

    // Reserved-idle qubits: unassigned but inside some block's halo.
    std::set<int> buffers;
    for (const std::vector<int>& block : placement.blocks) {
        const std::vector<int> dist = bfs_distances(adj, block, buffer);
        for (int q = 0; q < map.qubit_count; ++q) {
            if (!assigned[static_cast<std::size_t>(q)] &&
                dist[static_cast<std::size_t>(q)] <= buffer) {
                buffers.insert(q);
            }
        }
    }
    placement.buffers.assign(buffers.begin(), buffers.end());
    return PlacementResult{std::move(placement), std::nullopt};
}

std::vector<std::string> check_placement(const CouplingMap& map,
                                         const Placement& placement, int block_size,
                                         int buffer) {
    std::vector<std::string> violations;
    const std::vector<std::vector<int>> adj = map.adjacency();
    std::set<std::pair<int, int>> edge_set(map.edges.begin(), map.edges.end());
    const auto connected = [&](int a, int b) {
        return edge_set.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    std::set<int> seen;
    for (std::size_t b = 0; b < placement.blocks.size(); ++b) {
        const std::vector<int>& block = placement.blocks[b];
        if (static_cast<int>(block.size()) != block_size) {
            violations.push_back("block " + std::to_string(b) + " has " +
                                 std::to_string(block.size()) + " qubits, expected " +
                                 std::to_string(block_size));
        }
        for (int q : block) {
            if (q < 0 || q >= map.qubit_count) {
                violations.push_back("block " + std::to_string(b) + " uses qubit " +
                                     std::to_string(q) + " outside the device");
            } else if (!seen.insert(q).second) {
                violations.push_back("qubit " + std::to_string(q) +
                                     " assigned more than once");
            }
        }
        for (std::size_t i = 0; i + 1 < block.size(); ++i) {
            if (!connected(block[i], block[i + 1])) {
                violations.push_back("block " + std::to_string(b) + " breaks at (" +
                                     std::to_string(block[i]) + ", " +
                                     std::to_string(block[i + 1]) + "): not coupled");
            }
        }
    }
    for (int q : placement.buffers) {
        if (seen.count(q) > 0) {
            violations.push_back("buffer qubit " + std::to_string(q) +
                                 " is also assigned to a block");
        }
    }
    for (std::size_t b = 0; b < placement.blocks.size(); ++b) {
        const std::vector<int> dist = bfs_distances(adj, placement.blocks[b], buffer);
        for (std::size_t other = b + 1; other < placement.blocks.size(); ++other) {
            for (int q : placement.blocks[other]) {
                if (q >= 0 && q < map.qubit_count &&
                    dist[static_cast<std::size_t>(q)] <= buffer) {
                    violations.push_back(
                        "blocks " + std::to_string(b) + " and " + std::to_string(other) +
                        " are within distance " + std::to_string(buffer) + " at qubit " +
                        std::to_string(q));
                }
            }
        }
    }
    return violations;
}

int logical_depth(const Circuit& circuit) {
    std::vector<int> last_layer(static_cast<std::size_t>(circuit.width()), 0);
    int depth = 0;
    for (const GateOp& op : circuit.ops()) {
        int layer = 0;
        for (int q : op.touched_qubits()) {
            layer = std::max(layer, last_layer[static_cast<std::size_t>(q)]);
        }
        ++layer;
        for (int q : op.touched_qubits()) {
            last_layer[static_cast<std::size_t>(q)] = layer;
        }
        depth = std::max(depth, layer);
    }
    return depth;
}

PlacementReport placement_report(const Placement& placement, const Circuit& circuit) {
    int assigned = 0;
    for (const std::vector<int>& block : placement.blocks) {
        assigned += static_cast<int>(block.size());
    }
    if (assigned < circuit.width()) {
        throw ValidationError("placement assigns " + std::to_string(assigned) +
                              " qubits but the circuit needs " +
                              std::to_string(circuit.width()));
    }
    return PlacementReport{assigned, logical_depth(circuit)};
}

}  // namespace qmpgrover
