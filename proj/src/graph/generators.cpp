#include "ptp/graph/generators.hpp"

#include <algorithm>
#include <string>

namespace ptp::graph {

namespace {

std::vector<std::size_t> even_indices(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; v += 2) out.push_back(v);
    return out;
}

IntMatrix shift_power(std::size_t s, std::int64_t e) {
    IntMatrix out(s, s);
    const auto size = static_cast<std::int64_t>(s);
    const std::int64_t shift = ((e % size) + size) % size;
    for (std::size_t i = 0; i < s; ++i)
        out(i, static_cast<std::size_t>((static_cast<std::int64_t>(i) + shift) % size)) = 1;
    return out;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

IntMatrix blocks2x2(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
    return PartitionedGraph(true, a, b, c, d).adjacency();
}

bool contains(const std::vector<std::size_t>& set, std::size_t x) {
    return std::find(set.begin(), set.end(), x) != set.end();
}

void check_elements(const std::vector<std::size_t>& set, std::size_t order, const char* name) {
    for (std::size_t x : set)
        if (x >= order)
            throw GraphError(std::string(name) + " contains " + std::to_string(x) +
                             ", which is not a group element");
    std::vector<std::size_t> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw GraphError(std::string(name) + " has repeated elements");
}

}  // namespace

PartitionedGraph path(std::size_t n, std::optional<std::vector<std::size_t>> part0) {
    IntMatrix adj(n, n);
    for (std::size_t v = 0; v + 1 < n; ++v) adj(v, v + 1) = adj(v + 1, v) = 1;
    const auto split = part0 ? *part0 : even_indices(n);
    return PartitionedGraph::from_split(adj, split, false);
}

PartitionedGraph cycle(std::size_t n, std::optional<std::vector<std::size_t>> part0) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    IntMatrix adj(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t w = (v + 1) % n;
        adj(v, w) = adj(w, v) = 1;
    }
    const auto split = part0 ? *part0 : even_indices(n);
    return PartitionedGraph::from_split(adj, split, false);
}

PartitionedGraph hypercube(std::size_t m) {
    if (m >= 20) throw GraphError("hypercube dimension is too large");
    const std::size_t total = std::size_t{1} << m;
    IntMatrix adj(total, total);
    std::vector<std::size_t> even;
    for (std::size_t v = 0; v < total; ++v) {
        for (std::size_t b = 0; b < m; ++b) adj(v, v ^ (std::size_t{1} << b)) = 1;
        if (__builtin_popcountll(v) % 2 == 0) even.push_back(v);
    }
    return PartitionedGraph::from_split(adj, even, false);
}

PartitionedGraph complete_bipartite(std::size_t m, std::size_t n) {
    return PartitionedGraph::undirected(IntMatrix(m, m), IntMatrix(m, n, 1), IntMatrix(n, n));
}

PartitionedGraph bridge_join(const IntMatrix& h00, const IntMatrix& h11, std::size_t x0,
                             std::size_t x1) {
    if (!h00.square() || !h11.square()) throw GraphError("bridge_join: blocks must be square");
    if (x0 >= h00.rows()) throw GraphError("bridge_join: x0 is out of range");
    if (x1 >= h11.rows()) throw GraphError("bridge_join: x1 is out of range");
    IntMatrix a01(h00.rows(), h11.rows());
    a01(x0, x1) = 1;
    return PartitionedGraph::undirected(h00, std::move(a01), h11);
}

IntMatrix cyclic_shift(std::size_t s) { return shift_power(s, 1); }

PartitionedGraph circulant_family(std::size_t j, std::size_t k) {
    if (k == 0) throw GraphError("circulant_family: k must be at least 1");
    if (j >= 2 * k) throw GraphError("circulant_family: j must be below 2k");
    const std::size_t s = 2 * k;
    const auto jj = static_cast<std::int64_t>(j);
    const auto kk = static_cast<std::int64_t>(k);
    const IntMatrix sym = shift_power(s, jj) + shift_power(s, -jj);
    const IntMatrix h00 = sym + shift_power(s, kk);
    const IntMatrix h01 = hstack(IntMatrix::identity(s), shift_power(s, 1));
    const IntMatrix h11 = blocks2x2(sym, shift_power(s, kk + 1), shift_power(s, kk - 1), sym);
    return PartitionedGraph::undirected(h00, h01, h11);
}

std::size_t GroupPresentation::inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order; ++b)
        if (table[a][b] == 0) return b;
    throw GraphError("group element " + std::to_string(a) + " has no inverse");
}

void GroupPresentation::validate() const {
    if (order == 0) throw GraphError("group order must be positive");
    if (table.size() != order) throw GraphError("multiplication table has the wrong number of rows");
    for (const auto& row : table) {
        if (row.size() != order)
            throw GraphError("multiplication table has a row of the wrong length");
        for (std::size_t x : row)
            if (x >= order) throw GraphError("multiplication table entry is out of range");
    }
    for (std::size_t a = 0; a < order; ++a) {
        std::vector<bool> row_seen(order, false), col_seen(order, false);
        for (std::size_t b = 0; b < order; ++b) {
            if (row_seen[table[a][b]] || col_seen[table[b][a]])
                throw GraphError("multiplication table is not a Latin square");
            row_seen[table[a][b]] = col_seen[table[b][a]] = true;
        }
        if (table[0][a] != a || table[a][0] != a)
            throw GraphError("element 0 is not the identity");
    }
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            for (std::size_t c = 0; c < order; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw GraphError("multiplication table is not associative");

    check_elements(connection_set, order, "connection set");
    for (std::size_t x : connection_set)
        if (!contains(connection_set, inverse(x)))
            throw GraphError("connection set is not closed under inverses");

    check_elements(normal_subgroup, order, "subgroup");
    if (!contains(normal_subgroup, 0)) throw GraphError("subgroup does not contain the identity");
    for (std::size_t a : normal_subgroup)
        for (std::size_t b : normal_subgroup)
            if (!contains(normal_subgroup, table[a][inverse(b)]))
                throw GraphError("Y is not a subgroup");
    for (std::size_t g = 0; g < order; ++g)
        for (std::size_t y : normal_subgroup)
            if (!contains(normal_subgroup, table[table[g][y]][inverse(g)]))
                throw GraphError("Y is not a normal subgroup");
}

std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n) {
    if (n == 0) throw GraphError("cyclic group order must be positive");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

std::vector<std::vector<std::size_t>> dihedral_group_table(std::size_t n) {
    if (n == 0) throw GraphError("dihedral group parameter must be positive");
    const std::size_t order = 2 * n;
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    // (r^i s^a)(r^j s^b) = r^{i + (−1)^a j} s^{a+b}.
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t i = x % n, a = x / n;
            const std::size_t j = y % n, b = y / n;
            const std::size_t rot = a == 0 ? (i + j) % n : (i + n - j) % n;
            t[x][y] = rot + n * ((a + b) % 2);
        }
    return t;
}

PartitionedGraph cayley(const GroupPresentation& group) {
    group.validate();
    const std::size_t n = group.order;
    IntMatrix inner(n, n), cross(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t q = group.table[a][group.inverse(b)];
            inner(a, b) = contains(group.connection_set, q) ? 1 : 0;
            cross(a, b) = contains(group.normal_subgroup, q) ? 1 : 0;
        }
    return PartitionedGraph::undirected(inner, cross, inner);
}

}  // namespace ptp::graph
