#include "qmpgrover/serial.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"
#include "qmpgrover/bitstring.hpp"

namespace qmpgrover {

using nlohmann::json;

std::string format_double(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buffer[40];
    if (std::isfinite(value) && value == std::floor(value) && std::abs(value) < 1e15) {
        std::snprintf(buffer, sizeof(buffer), "%.0f", value);
        return buffer;
    }
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
        if (std::strtod(buffer, nullptr) == value) {
            break;
        }
    }
    return buffer;
}

std::string circuit_to_json(const Circuit& circuit) {
    json ops = json::array();
    for (const GateOp& op : circuit.ops()) {
        json entry;
        entry["kind"] = gate_kind_name(op.kind);
        entry["targets"] = op.targets;
        if (!op.controls.empty()) {
            entry["controls"] = op.controls;
        }
        if (!op.oracle_targets.empty()) {
            entry["oracle_targets"] = op.oracle_targets;
        }
        ops.push_back(std::move(entry));
    }
    json doc;
    doc["width"] = circuit.width();
    doc["ops"] = std::move(ops);
    doc["measure_window"] = {{"least", circuit.measure_window().least},
                             {"length", circuit.measure_window().length}};
    return doc.dump(2) + "\n";
}

std::string counts_to_json(const Counts& counts) {
    json doc;
    doc["shots"] = counts.shots;
    doc["counts"] = json::object();
    for (const auto& [key, value] : counts.counts) {
        doc["counts"][key] = value;
    }
    return doc.dump(2) + "\n";
}

Counts counts_from_json(const std::string& text) {
    const json doc = json::parse(text);
    Counts out;
    out.shots = doc.at("shots").get<std::uint64_t>();
    for (const auto& [key, value] : doc.at("counts").items()) {
        if (!is_bitstring(key)) {
            throw ValidationError("counts key \"" + key + "\" is not a binary string");
        }
        out.counts[key] = value.get<std::uint64_t>();
        out.bit_length = static_cast<int>(key.size());
    }
    for (const auto& [key, value] : out.counts) {
        if (key.size() != static_cast<std::size_t>(out.bit_length)) {
            throw ValidationError("counts keys have mixed lengths");
        }
    }
    return out;
}

std::string distribution_to_csv(const Distribution& dist) {
    std::string out = "outcome,probability\n";
    for (std::uint64_t value = 0; value < dist.size(); ++value) {
        out += index_to_bits(value, dist.bits());
        out += ',';
        out += format_double(dist[value]);
        out += '\n';
    }
    return out;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "b,j,p_gsa,p_no_qmp,p_qmp\n";
    for (const SweepRow& row : rows) {
        out += std::to_string(row.b);
        out += ',';
        out += std::to_string(row.j);
        out += ',';
        out += format_double(row.gsa);
        out += ',';
        out += format_double(row.no_qmp);
        out += ',';
        out += format_double(row.qmp);
        out += '\n';
    }
    return out;
}

CouplingMap coupling_from_json(const std::string& text) {
    const json doc = json::parse(text);
    std::vector<std::pair<int, int>> edges;
    for (const auto& edge : doc.at("edges")) {
        if (!edge.is_array() || edge.size() != 2) {
            throw ValidationError("coupling edges must be [a, b] pairs");
        }
        edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
    }
    return CouplingMap::create(doc.value("name", std::string("custom")),
                               doc.at("qubit_count").get<int>(), std::move(edges));
}

std::string coupling_to_json(const CouplingMap& map) {
    json doc;
    doc["name"] = map.name;
    doc["qubit_count"] = map.qubit_count;
    doc["edges"] = json::array();
    for (const auto& [a, b] : map.edges) {
        doc["edges"].push_back({a, b});
    }
    return doc.dump(2) + "\n";
}

std::string placement_to_json(const Placement& placement) {
    json doc;
    doc["blocks"] = placement.blocks;
    doc["buffers"] = placement.buffers;
    return doc.dump(2) + "\n";
}

}  // namespace qmpgrover
