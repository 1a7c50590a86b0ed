#pragma once

#include "ptp/graph/partitioned_graph.hpp"
#include "ptp/spectra/report.hpp"

#include <stdexcept>
#include <vector>

namespace ptp::spectra {

using graph::PartitionedGraph;

/// In checked mode (the default) every closed form is compared with direct
/// eigenvalues before it is returned; a disagreement beyond
/// tol·(1 + ‖matrix‖_F) in multiset distance throws ClosedFormMismatch.
struct ClosedFormOptions {
    bool checked = true;
    double tol = 1e-8;
};

class ClosedFormMismatch : public std::runtime_error {
public:
    ClosedFormMismatch(const std::string& what, double distance);
    double distance() const noexcept { return distance_; }

private:
    double distance_;
};

struct Root {
    Complex value;
    std::size_t multiplicity = 1;
};

struct RootMultiset {
    std::vector<Root> roots;
    std::size_t size() const;
    std::vector<Complex> expanded() const;
    Poly polynomial() const;
};

/// H undirected with H01 all ones and H00, H11 both d-regular:
/// (d + σ√(mn), λ_2, …, λ_m, d − σ√(mn), λ'_2, …, λ'_n), where λ_i and λ'_i
/// are the eigenvalues of H00 and H11 with one copy of d removed from each.
/// Throws SpectraError when H does not have this shape.
std::vector<Complex> regular_all_ones_spectrum(const PartitionedGraph& h, Complex sigma,
                                               const ClosedFormOptions& options = {});

/// Spectrum of hypercube(M) ⊗̲ path(N) with the parity split on the cube and
/// even indices of the path in part 0. For each j < M/2 and 1 ≤ k ≤ N the
/// root (2M − 4j)·cos(kπ/(N+1)) has multiplicity C(M, j); for even M the
/// zero root from j = M/2 adds C(M, M/2)/2 per k. Degree 2^{M−1}·N.
RootMultiset hypercube_path_spectrum(std::size_t m, std::size_t n,
                                     const ClosedFormOptions& options = {});

/// The 6k eigenvalues of circulant_family(j, k)↑σ. With β_l = 2cos(πjl/k)
/// and s_l = (−1)^l, for 0 ≤ l < 2k:
///   β_l − s_l,   β_l + s_l + √2·σ,   β_l + s_l − √2·σ.
std::vector<Complex> circulant_family_spectrum(std::size_t j, std::size_t k, Complex sigma,
                                               const ClosedFormOptions& options = {});

}  // namespace ptp::spectra
