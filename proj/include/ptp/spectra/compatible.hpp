#pragma once

#include "ptp/graph/partitioned_graph.hpp"
#include "ptp/spectra/report.hpp"

#include <cstdint>
#include <vector>

namespace ptp::spectra {

using graph::PartitionedGraph;

/// Exact test of H0·H1 = H1·H0 where H0 = diag(H00, H11) and H1 holds the
/// off-diagonal blocks. Equivalent to H00·H01 = H01·H11 and
/// H11·H10 = H10·H00; for undirected H the second follows from the first.
bool check_compatible(const PartitionedGraph& h);

struct CommutingSpectrumOptions {
    std::uint32_t seed = 0x5eed;
    /// Certification tolerance relative to 1 + ‖H‖_F.
    double tol = 1e-7;
    /// Random values of c tried before falling back.
    int attempts = 3;
};

/// Eigenvalues of H↑σ = H0 + σ·H1 as paired values λ_j + σ·μ_j.
///
/// `lambda[j]` and `mu[j]` are eigenvalues of H0 and H1 on a common
/// eigenvector. The pairing is read from eigenvectors of H0 + c·H1 for a
/// seeded random c and certified at three further values of σ. If no
/// attempt certifies, `values` are direct eigenvalues of H↑σ, `fallback`
/// is set and `lambda`/`mu` are empty.
struct CommutingSpectrum {
    std::vector<Complex> values;
    std::vector<Complex> lambda;
    std::vector<Complex> mu;
    bool fallback = false;
};

/// Throws SpectraError unless check_compatible(h).
CommutingSpectrum commuting_spectrum(const PartitionedGraph& h, Complex sigma,
                                     const CommutingSpectrumOptions& options = {});

}  // namespace ptp::spectra
