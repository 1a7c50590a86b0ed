#pragma once

#include "ptp/linalg/matrix.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptp::graph {

using linalg::Complex;
using linalg::DenseMatrix;
using linalg::IntMatrix;

/// Malformed graph data: shape mismatch, negative counts, asymmetric
/// undirected blocks, bad split lists.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A multigraph whose vertices are split into part 0 (size m) and part 1
/// (size n), stored as four arc-count blocks.
///
/// Block (i, j) counts arcs from part i to part j. An undirected edge is a
/// pair of opposite arcs, so undirected graphs satisfy A00 = A00ᵀ,
/// A11 = A11ᵀ and A10 = A01ᵀ. A loop on vertex v is a single arc (v, v).
class PartitionedGraph {
public:
    /// The empty undirected graph with no vertices.
    PartitionedGraph();

    /// Validates shapes, nonnegativity and, for undirected graphs, symmetry.
    PartitionedGraph(bool directed, IntMatrix a00, IntMatrix a01, IntMatrix a10, IntMatrix a11);

    /// Undirected graph with A10 = A01ᵀ.
    static PartitionedGraph undirected(IntMatrix a00, IntMatrix a01, IntMatrix a11);

    /// Splits a full adjacency matrix. part0 lists the vertices of part 0;
    /// part 1 is the complement. Both parts are ordered by ascending index.
    static PartitionedGraph from_split(const IntMatrix& adjacency,
                                       std::span<const std::size_t> part0, bool directed);

    bool directed() const noexcept { return directed_; }
    std::size_t m() const noexcept { return a00_.rows(); }
    std::size_t n() const noexcept { return a11_.rows(); }
    std::size_t vertex_count() const noexcept { return m() + n(); }

    /// Block (i, j), i, j ∈ {0, 1}.
    const IntMatrix& block(int i, int j) const;
    const IntMatrix& a00() const noexcept { return a00_; }
    const IntMatrix& a01() const noexcept { return a01_; }
    const IntMatrix& a10() const noexcept { return a10_; }
    const IntMatrix& a11() const noexcept { return a11_; }

    /// [[A00, A01], [A10, A11]] with part 0 first.
    IntMatrix adjacency() const;
    /// Total number of arcs (entry sum of the adjacency matrix).
    std::int64_t arc_count() const;

    friend bool operator==(const PartitionedGraph&, const PartitionedGraph&) = default;

private:
    bool directed_ = false;
    IntMatrix a00_, a01_, a10_, a11_;
};

/// Swaps the roles of the parts: A00↔A11, A01↔A10. An involution.
PartitionedGraph reflect(const PartitionedGraph& g);

/// H00 (part 0) or H11 (part 1).
const IntMatrix& induced_block(const PartitionedGraph& h, int part);

/// Adjacency of the partitioned tensor product of G with H:
///
///     [[I_{|U0|} ⊗ H00,  G01 ⊗ H01    ],
///      [G10 ⊗ H10,       I_{|U1|} ⊗ H11]]
///
/// Product vertices are in block order: every (u, v) ∈ U0 × V0 first, then
/// U1 × V1, each block lexicographic in (u, v). Arcs of G inside a part do
/// not contribute; when present, a note is appended to `warnings` if given.
IntMatrix ptp_adjacency_exact(const PartitionedGraph& g, const PartitionedGraph& h,
                              std::vector<std::string>* warnings = nullptr);
DenseMatrix ptp_adjacency(const PartitionedGraph& g, const PartitionedGraph& h,
                          std::vector<std::string>* warnings = nullptr);

/// The product as a partitioned graph: part 0 = U0 × V0, part 1 = U1 × V1.
/// Directed unless both factors are undirected.
PartitionedGraph ptp_graph(const PartitionedGraph& g, const PartitionedGraph& h,
                           std::vector<std::string>* warnings = nullptr);

/// H↑σ = [[H00, σH01], [σH10, H11]].
DenseMatrix arrow(const PartitionedGraph& h, Complex sigma);

}  // namespace ptp::graph
