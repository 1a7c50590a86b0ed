#pragma once

#include "ptp/graph/partitioned_graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ptp::graph {

/// Path 0 – 1 – … – (N−1). Part 0 is `part0` (default: even indices).
PartitionedGraph path(std::size_t n, std::optional<std::vector<std::size_t>> part0 = {});

/// Cycle 0 – 1 – … – (N−1) – 0, N ≥ 3. Part 0 is `part0` (default: even indices).
PartitionedGraph cycle(std::size_t n, std::optional<std::vector<std::size_t>> part0 = {});

/// The M-cube on bit strings 0 … 2^M − 1, split by parity of the number of
/// one bits (even parity is part 0). Both within-part blocks are zero.
PartitionedGraph hypercube(std::size_t m);

/// K_{m,n}: every part-0 vertex joined once to every part-1 vertex.
PartitionedGraph complete_bipartite(std::size_t m, std::size_t n);

/// Disjoint union of undirected h00 (part 0) and h11 (part 1) plus one edge
/// between x0 ∈ part 0 and x1 ∈ part 1.
PartitionedGraph bridge_join(const IntMatrix& h00, const IntMatrix& h11, std::size_t x0,
                             std::size_t x1);

/// The cyclic permutation matrix C_s with C(i, i+1 mod s) = 1.
IntMatrix cyclic_shift(std::size_t s);

/// With C = C_{2k} (k ≥ 1, 0 ≤ j < 2k), part sizes 2k and 4k:
///   H00 = C^j + C^k + C^{−j},  H01 = (I  C),
///   H11 = [[C^j + C^{−j}, C^{k+1}], [C^{k−1}, C^j + C^{−j}]].
/// The result is undirected; multigraph entries appear when exponents collide.
PartitionedGraph circulant_family(std::size_t j, std::size_t k);

/// A finite group given by its multiplication table with identity 0, a
/// connection set X and a subgroup Y.
struct GroupPresentation {
    std::size_t order = 0;
    /// table[a][b] = a·b.
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::size_t> connection_set;
    std::vector<std::size_t> normal_subgroup;

    /// Throws GraphError unless the table is an associative Latin square with
    /// identity 0, X is closed under inverses and Y is a normal subgroup.
    void validate() const;
    std::size_t inverse(std::size_t a) const;
};

/// Multiplication tables of Z_n and of the dihedral group of order 2n
/// (elements r^i s^e encoded as i + n·e).
std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n);
std::vector<std::vector<std::size_t>> dihedral_group_table(std::size_t n);

/// Both parts are the group elements in index order. α ~ β inside a part iff
/// αβ⁻¹ ∈ X; α ∈ part 0 ~ β ∈ part 1 iff αβ⁻¹ ∈ Y.
PartitionedGraph cayley(const GroupPresentation& group);

}  // namespace ptp::graph
