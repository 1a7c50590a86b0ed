#include "ptp/graph/partitioned_graph.hpp"

#include <algorithm>
#include <string>

namespace ptp::graph {

namespace {

std::string shape(const IntMatrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_shape(const IntMatrix& a, std::size_t rows, std::size_t cols, const char* name) {
    if (a.rows() != rows || a.cols() != cols)
        throw GraphError(std::string("block ") + name + " is " + shape(a) + ", expected " +
                         std::to_string(rows) + "x" + std::to_string(cols));
}

void require_nonnegative(const IntMatrix& a, const char* name) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) < 0)
                throw GraphError(std::string("block ") + name + " has a negative arc count at (" +
                                 std::to_string(i) + ", " + std::to_string(j) + ")");
}

IntMatrix submatrix(const IntMatrix& a, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols) {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
    return out;
}

}  // namespace

PartitionedGraph::PartitionedGraph()
    : PartitionedGraph(false, IntMatrix(0, 0), IntMatrix(0, 0), IntMatrix(0, 0), IntMatrix(0, 0)) {}

PartitionedGraph::PartitionedGraph(bool directed, IntMatrix a00, IntMatrix a01, IntMatrix a10,
                                   IntMatrix a11)
    : directed_(directed),
      a00_(std::move(a00)),
      a01_(std::move(a01)),
      a10_(std::move(a10)),
      a11_(std::move(a11)) {
    if (!a00_.square()) throw GraphError("block 00 is " + shape(a00_) + ", expected square");
    if (!a11_.square()) throw GraphError("block 11 is " + shape(a11_) + ", expected square");
    const std::size_t m = a00_.rows();
    const std::size_t n = a11_.rows();
    require_shape(a01_, m, n, "01");
    require_shape(a10_, n, m, "10");
    require_nonnegative(a00_, "00");
    require_nonnegative(a01_, "01");
    require_nonnegative(a10_, "10");
    require_nonnegative(a11_, "11");
    if (!directed_) {
        if (!a00_.is_symmetric()) throw GraphError("undirected graph: block 00 is not symmetric");
        if (!a11_.is_symmetric()) throw GraphError("undirected graph: block 11 is not symmetric");
        if (a10_ != a01_.transpose())
            throw GraphError("undirected graph: block 10 is not the transpose of block 01");
    }
}

PartitionedGraph PartitionedGraph::undirected(IntMatrix a00, IntMatrix a01, IntMatrix a11) {
    IntMatrix a10 = a01.transpose();
    return PartitionedGraph(false, std::move(a00), std::move(a01), std::move(a10), std::move(a11));
}

PartitionedGraph PartitionedGraph::from_split(const IntMatrix& adjacency,
                                              std::span<const std::size_t> part0, bool directed) {
    if (!adjacency.square()) throw GraphError("adjacency matrix is not square");
    const std::size_t total = adjacency.rows();
    std::vector<bool> in0(total, false);
    for (std::size_t v : part0) {
        if (v >= total)
            throw GraphError("split index " + std::to_string(v) + " is out of range for " +
                             std::to_string(total) + " vertices");
        if (in0[v]) throw GraphError("split index " + std::to_string(v) + " is repeated");
        in0[v] = true;
    }
    std::vector<std::size_t> p0, p1;
    for (std::size_t v = 0; v < total; ++v) (in0[v] ? p0 : p1).push_back(v);
    return PartitionedGraph(directed, submatrix(adjacency, p0, p0), submatrix(adjacency, p0, p1),
                            submatrix(adjacency, p1, p0), submatrix(adjacency, p1, p1));
}

const IntMatrix& PartitionedGraph::block(int i, int j) const {
    if (i == 0 && j == 0) return a00_;
    if (i == 0 && j == 1) return a01_;
    if (i == 1 && j == 0) return a10_;
    if (i == 1 && j == 1) return a11_;
    throw std::out_of_range("PartitionedGraph::block: indices must be 0 or 1");
}

IntMatrix PartitionedGraph::adjacency() const {
    const std::size_t m = this->m();
    IntMatrix out(vertex_count(), vertex_count());
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj) {
            const IntMatrix& b = block(bi, bj);
            const std::size_t r0 = bi ? m : 0;
            const std::size_t c0 = bj ? m : 0;
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
        }
    return out;
}

std::int64_t PartitionedGraph::arc_count() const {
    return a00_.sum() + a01_.sum() + a10_.sum() + a11_.sum();
}

PartitionedGraph reflect(const PartitionedGraph& g) {
    return PartitionedGraph(g.directed(), g.a11(), g.a10(), g.a01(), g.a00());
}

const IntMatrix& induced_block(const PartitionedGraph& h, int part) {
    if (part != 0 && part != 1) throw std::out_of_range("induced_block: part must be 0 or 1");
    return h.block(part, part);
}

IntMatrix ptp_adjacency_exact(const PartitionedGraph& g, const PartitionedGraph& h,
                              std::vector<std::string>* warnings) {
    if (warnings) {
        if (!g.a00().is_zero())
            warnings->push_back("arcs of G inside part 0 do not contribute and were ignored");
        if (!g.a11().is_zero())
            warnings->push_back("arcs of G inside part 1 do not contribute and were ignored");
    }
    const IntMatrix b00 = kron(IntMatrix::identity(g.m()), h.a00());
    const IntMatrix b01 = kron(g.a01(), h.a01());
    const IntMatrix b10 = kron(g.a10(), h.a10());
    const IntMatrix b11 = kron(IntMatrix::identity(g.n()), h.a11());
    // Directedness only matters for validation; the blocks are assembled as is.
    return PartitionedGraph(true, b00, b01, b10, b11).adjacency();
}

DenseMatrix ptp_adjacency(const PartitionedGraph& g, const PartitionedGraph& h,
                          std::vector<std::string>* warnings) {
    return DenseMatrix(ptp_adjacency_exact(g, h, warnings));
}

PartitionedGraph ptp_graph(const PartitionedGraph& g, const PartitionedGraph& h,
                           std::vector<std::string>* warnings) {
    const IntMatrix full = ptp_adjacency_exact(g, h, warnings);
    std::vector<std::size_t> part0(g.m() * h.m());
    for (std::size_t i = 0; i < part0.size(); ++i) part0[i] = i;
    return PartitionedGraph::from_split(full, part0, g.directed() || h.directed());
}

DenseMatrix arrow(const PartitionedGraph& h, Complex sigma) {
    DenseMatrix out(h.adjacency());
    const std::size_t m = h.m();
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            if ((i < m) != (j < m)) out(i, j) *= sigma;
    return out;
}

}  // namespace ptp::graph
