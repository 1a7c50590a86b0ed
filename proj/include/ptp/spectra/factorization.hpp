#pragma once

#include "ptp/graph/partitioned_graph.hpp"
#include "ptp/linalg/triangularize.hpp"
#include "ptp/spectra/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptp::spectra {

using graph::PartitionedGraph;

enum class Residual { h00, h11, none };
enum class Method { svd, triangular };

std::string to_string(Residual r);
std::string to_string(Method m);

/// p(G ⊗̲ H) = ∏_j p(H↑σ_j) · p(residual)^exponent, j < min(|U0|, |U1|).
///
/// The residual block is H00 when |U0| > |U1|, H11 when |U1| > |U0| and
/// absent when the parts of G have equal size.
struct SpectralFactorization {
    std::vector<Complex> sigmas;
    Residual residual = Residual::none;
    std::size_t residual_exponent = 0;
    Method method = Method::svd;
};

/// Input that the requested method cannot handle (e.g. directed G for svd).
class SpectraError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// σ_j are the singular values of G01 = G10ᵀ, descending. Requires undirected G.
SpectralFactorization factor_undirected(const PartitionedGraph& g, const PartitionedGraph& h);

/// σ_j come from the simultaneous triangularization of (G01, G10): S_jj when
/// S_jj = T_jj, otherwise 0. Each σ_j is normalized to nonnegative real part
/// (H↑σ and H↑(−σ) are similar). The number of nonzero σ_j is fixed exactly
/// from the integer characteristic polynomial of G01·G10 (or G10·G01).
/// Propagates linalg::TriangularizationError.
SpectralFactorization factor_directed(const PartitionedGraph& g, const PartitionedGraph& h,
                                      const linalg::TriangularizeOptions& options = {});

/// svd for undirected G, triangular otherwise, or the method given.
SpectralFactorization factor(const PartitionedGraph& g, const PartitionedGraph& h,
                             std::optional<Method> method = {});

/// ∏_j p(H↑σ_j) · p(residual)^exponent. Factors with an integral σ_j are
/// computed exactly; the rest in floating point.
Poly assemble(const SpectralFactorization& f, const PartitionedGraph& h);

/// Exact characteristic polynomial of the full product matrix.
Poly product_char_poly(const PartitionedGraph& g, const PartitionedGraph& h);

/// Compares assemble(f, h) (lhs) with product_char_poly(g, h) (rhs).
Report check_factorization(const PartitionedGraph& g, const PartitionedGraph& h,
                           const SpectralFactorization& f, double tol);

/// { "sigmas": [...], "residual": "H00"|"H11"|"none", "residual_exponent": e,
///   "method": "svd"|"triangular" }
nlohmann::json to_json(const SpectralFactorization& f);

}  // namespace ptp::spectra
