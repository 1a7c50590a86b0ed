#pragma once

#include "ptp/graph/partitioned_graph.hpp"
#include "ptp/spectra/report.hpp"

#include <cstddef>

namespace ptp::spectra {

using graph::PartitionedGraph;
using linalg::IntMatrix;

/// p(G ⊗̲ H)·p(H|V0)^e against p(G^R ⊗̲ H)·p(H|V1)^e with e = |U1| − |U0|.
/// For e < 0 the powers move to the other side: p(G ⊗̲ H)·p(H|V1)^{−e}
/// against p(G^R ⊗̲ H)·p(H|V0)^{−e}. All polynomials are exact.
struct GmIdentityReport {
    Report report;
    std::ptrdiff_t exponent = 0;  // |U1| − |U0|
};

GmIdentityReport verify_gm_identity(const PartitionedGraph& g, const PartitionedGraph& h,
                                    double tol);

/// The two products and a cospectral pair derived from them.
///
/// `product` = G ⊗̲ H and `reflected` = G^R ⊗̲ H. When |U0| = |U1| these are
/// the pair. Otherwise each side gets the disjoint union with the copies of
/// H|V0 or H|V1 that the identity multiplies in, and isolated vertices
/// common to both sides are removed. The report compares the exact
/// characteristic polynomials of `first` and `second`.
struct CospectralPair {
    IntMatrix product;
    IntMatrix reflected;
    IntMatrix first;
    IntMatrix second;
    std::size_t isolated_removed = 0;
    std::ptrdiff_t exponent = 0;
    Report report;
};

CospectralPair cospectral_pair(const PartitionedGraph& g, const PartitionedGraph& h, double tol);

/// Disjoint union: block-diagonal adjacency.
IntMatrix disjoint_union(const IntMatrix& a, const IntMatrix& b);

/// p(H↑σ) for H00 and H11 joined by the single edge x0 – x1:
///   p(H00)·p(H11) − σ²·p(H00 without x0)·p(H11 without x1).
/// Exact when σ is an integer, floating otherwise.
Poly bridge_char_poly(const IntMatrix& h00, const IntMatrix& h11, std::size_t x0, std::size_t x1,
                      Complex sigma);

}  // namespace ptp::spectra
