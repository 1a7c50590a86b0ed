#include "ptp/graph/io.hpp"

#include <fstream>
#include <sstream>

namespace ptp::graph {

using nlohmann::json;

namespace {

const char* const kBlockKeys[2][2] = {{"00", "01"}, {"10", "11"}};

std::size_t read_size(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw SchemaError(path, "expected a nonnegative integer");
    if (v.is_number_unsigned()) return v.get<std::size_t>();
    const auto x = v.get<std::int64_t>();
    if (x < 0) throw SchemaError(path, "expected a nonnegative integer");
    return static_cast<std::size_t>(x);
}

IntMatrix read_block(const json& v, std::size_t rows, std::size_t cols, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array of rows");
    if (v.size() != rows)
        throw SchemaError(path, "expected " + std::to_string(rows) + " rows, found " +
                                    std::to_string(v.size()));
    IntMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string row_path = path + "/" + std::to_string(i);
        const json& row = v[i];
        if (!row.is_array()) throw SchemaError(row_path, "expected an array of integers");
        if (row.size() != cols)
            throw SchemaError(row_path, "expected " + std::to_string(cols) + " entries, found " +
                                            std::to_string(row.size()));
        for (std::size_t j = 0; j < cols; ++j) {
            const std::string entry_path = row_path + "/" + std::to_string(j);
            const json& e = row[j];
            if (!e.is_number_integer())
                throw SchemaError(entry_path, "expected a nonnegative integer arc count");
            if (e.is_number_unsigned()) {
                const auto u = e.get<std::uint64_t>();
                if (u > static_cast<std::uint64_t>(INT64_MAX))
                    throw SchemaError(entry_path, "arc count is too large");
                out(i, j) = static_cast<std::int64_t>(u);
            } else {
                out(i, j) = e.get<std::int64_t>();
                if (out(i, j) < 0) throw SchemaError(entry_path, "arc count is negative");
            }
        }
    }
    return out;
}

json block_json(const IntMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_rows(std::ostringstream& os, const IntMatrix& a, const std::string& indent) {
    if (a.rows() == 0) {
        os << "[]";
        return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << indent << "  [";
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
        os << "]" << (i + 1 < a.rows() ? "," : "") << "\n";
    }
    os << indent << "]";
}

std::string node_name(std::size_t part, std::size_t index) {
    return "\"(" + std::to_string(part) + "," + std::to_string(index) + ")\"";
}

}  // namespace

SchemaError::SchemaError(std::string path, const std::string& message)
    : GraphError("schema error at '" + path + "': " + message), path_(std::move(path)) {}

json to_json(const PartitionedGraph& g) {
    json doc;
    doc["directed"] = g.directed();
    doc["part_sizes"] = json::array({g.m(), g.n()});
    json blocks;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) blocks[kBlockKeys[i][j]] = block_json(g.block(i, j));
    doc["blocks"] = std::move(blocks);
    return doc;
}

PartitionedGraph graph_from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("", "expected an object");
    for (const auto& [key, value] : doc.items())
        if (key != "directed" && key != "part_sizes" && key != "blocks")
            throw SchemaError("/" + key, "unknown key");
    if (!doc.contains("directed")) throw SchemaError("/directed", "missing key");
    if (!doc["directed"].is_boolean()) throw SchemaError("/directed", "expected a boolean");
    if (!doc.contains("part_sizes")) throw SchemaError("/part_sizes", "missing key");
    const json& sizes = doc["part_sizes"];
    if (!sizes.is_array() || sizes.size() != 2)
        throw SchemaError("/part_sizes", "expected an array of two sizes");
    const std::size_t m = read_size(sizes[0], "/part_sizes/0");
    const std::size_t n = read_size(sizes[1], "/part_sizes/1");
    const std::size_t dims[2] = {m, n};

    if (!doc.contains("blocks")) throw SchemaError("/blocks", "missing key");
    const json& blocks = doc["blocks"];
    if (!blocks.is_object()) throw SchemaError("/blocks", "expected an object");
    for (const auto& [key, value] : blocks.items())
        if (key != "00" && key != "01" && key != "10" && key != "11")
            throw SchemaError("/blocks/" + key, "unknown block");
    IntMatrix parsed[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const std::string path = std::string("/blocks/") + kBlockKeys[i][j];
            if (!blocks.contains(kBlockKeys[i][j])) throw SchemaError(path, "missing block");
            parsed[i][j] = read_block(blocks[kBlockKeys[i][j]], dims[i], dims[j], path);
        }
    try {
        return PartitionedGraph(doc["directed"].get<bool>(), parsed[0][0], parsed[0][1],
                                parsed[1][0], parsed[1][1]);
    } catch (const SchemaError&) {
        throw;
    } catch (const GraphError& e) {
        throw SchemaError("/blocks", e.what());
    }
}

std::string to_canonical_json(const PartitionedGraph& g) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"directed\": " << (g.directed() ? "true" : "false") << ",\n";
    os << "  \"part_sizes\": [" << g.m() << ", " << g.n() << "],\n";
    os << "  \"blocks\": {\n";
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            os << "    \"" << kBlockKeys[i][j] << "\": ";
            write_rows(os, g.block(i, j), "    ");
            os << (i == 1 && j == 1 ? "\n" : ",\n");
        }
    os << "  }\n}\n";
    return os.str();
}

PartitionedGraph parse_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
    return graph_from_json(doc);
}

PartitionedGraph load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void save(const PartitionedGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << to_canonical_json(g);
    if (!out) throw IoError("write failed for " + path.string());
}

std::string matrix_to_canonical_json(const IntMatrix& m) {
    std::ostringstream os;
    os << "{\n  \"rows\": " << m.rows() << ",\n  \"cols\": " << m.cols() << ",\n  \"entries\": ";
    write_rows(os, m, "  ");
    os << "\n}\n";
    return os.str();
}

std::string to_dot(const PartitionedGraph& g, const std::string& name) {
    std::ostringstream os;
    const bool directed = g.directed();
    os << (directed ? "digraph" : "graph") << " \"" << name << "\" {\n";
    for (std::size_t part = 0; part < 2; ++part) {
        const std::size_t size = part ? g.n() : g.m();
        os << "  subgraph \"cluster_part" << part << "\" {\n    label=\"part " << part << "\";\n";
        for (std::size_t i = 0; i < size; ++i) os << "    " << node_name(part, i) << ";\n";
        os << "  }\n";
    }
    const IntMatrix adj = g.adjacency();
    const std::size_t m = g.m();
    const auto vertex = [m](std::size_t v) { return v < m ? node_name(0, v) : node_name(1, v - m); };
    const char* op = directed ? " -> " : " -- ";
    for (std::size_t u = 0; u < adj.rows(); ++u)
        for (std::size_t v = directed ? 0 : u; v < adj.cols(); ++v) {
            const std::int64_t k = adj(u, v);
            if (k == 0) continue;
            os << "  " << vertex(u) << op << vertex(v);
            if (k > 1) os << " [label=\"×" << k << "\"]";
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

void export_dot(const PartitionedGraph& g, const std::filesystem::path& path,
                const std::string& name) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << to_dot(g, name);
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace ptp::graph
