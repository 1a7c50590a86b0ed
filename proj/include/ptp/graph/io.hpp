#pragma once

#include "ptp/graph/partitioned_graph.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace ptp::graph {

/// A JSON document that does not match the graph schema. `path()` is a JSON
/// pointer to the offending value, e.g. "/blocks/01/2/0".
class SchemaError : public GraphError {
public:
    SchemaError(std::string path, const std::string& message);
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Schema:
///   { "directed": bool, "part_sizes": [m, n],
///     "blocks": { "00": [[int, …], …], "01": …, "10": …, "11": … } }
/// Blocks are row-major nonnegative integer matrices of shapes m×m, m×n,
/// n×m, n×n. Zero-row blocks are written as [].
nlohmann::json to_json(const PartitionedGraph& g);
PartitionedGraph graph_from_json(const nlohmann::json& doc);

/// Canonical text form: fixed key order, one matrix row per line, trailing
/// newline. Equal graphs produce identical text.
std::string to_canonical_json(const PartitionedGraph& g);

/// Parses text; malformed JSON is reported as a SchemaError at path "".
PartitionedGraph parse_graph(const std::string& text);

PartitionedGraph load(const std::filesystem::path& path);
void save(const PartitionedGraph& g, const std::filesystem::path& path);

/// Canonical text for a plain integer matrix:
///   { "rows": r, "cols": c, "entries": [[…], …] }
std::string matrix_to_canonical_json(const IntMatrix& m);

/// Graphviz text. Nodes are named "(part,index)"; an arc of multiplicity
/// k > 1 carries the label "×k". Undirected graphs draw each edge once.
std::string to_dot(const PartitionedGraph& g, const std::string& name = "G");
void export_dot(const PartitionedGraph& g, const std::filesystem::path& path,
                const std::string& name = "G");

}  // namespace ptp::graph
