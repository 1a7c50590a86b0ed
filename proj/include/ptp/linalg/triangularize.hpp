#pragma once

#include "ptp/linalg/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ptp::linalg {

/// A = Q·S·R⁻¹ and B = R·T·Q⁻¹ with S, T upper triangular and consistent
/// diagonals: for every j < min(m, n), S_jj = T_jj or S_jj·T_jj = 0.
struct TriangularPair {
    DenseMatrix q;       // m × m, nonsingular
    DenseMatrix r;       // n × n, nonsingular
    DenseMatrix s;       // m × n, upper triangular
    DenseMatrix t;       // n × m, upper triangular
    DenseMatrix q_inv;   // Q⁻¹, tracked through the recursion
    DenseMatrix r_inv;   // R⁻¹
    /// sigmas[j] = S_jj when S_jj = T_jj, otherwise 0.
    std::vector<Complex> sigmas;
};

struct TriangularizeOptions {
    /// Relative zero threshold for eigenvalues of AB and for rank decisions:
    /// a quantity counts as nonzero when it exceeds zero_tol·(1 + ‖·‖_F).
    double zero_tol = 1e-10;
    /// Reconstruction tolerance, relative to 1 + ‖A‖_F + ‖B‖_F.
    double check_tol = 1e-8;
    /// Number of nonzero eigenvalues of AB (equivalently BA), counted with
    /// multiplicity, when known exactly. Overrides the eigenvalue threshold:
    /// the recursion takes exactly this many nonzero-eigenvalue steps.
    std::optional<std::size_t> nonzero_eigenvalues;
};

/// Reports the recursion depth at which a branch of the case analysis could
/// not be certified, or a failed postcondition (depth = npos).
class TriangularizationError : public NumericalError {
public:
    TriangularizationError(const std::string& what, std::size_t depth);
    std::size_t depth() const noexcept { return depth_; }

private:
    std::size_t depth_;
};

/// Simultaneous triangularization of an m×n / n×m pair.
///
/// For m ≤ n the recursion takes, at each level, either a nonzero eigenvalue
/// λ of AB (largest modulus first; σ = principal √λ, x with ABx = λx,
/// y = Bx/σ) or, once AB is nilpotent, a null vector x of AB and the
/// Bx ≠ 0 / Ay = 0 / Ay = x case split. x and y are completed to bases with
/// Householder reflectors and the trailing (m−1)×(n−1) pair is handled
/// recursively. m > n is reduced to the swapped pair (B, A).
///
/// Both reconstruction identities and the triangular/diagonal invariants are
/// verified before returning.
TriangularPair simultaneous_triangularize(const DenseMatrix& a, const DenseMatrix& b,
                                          const TriangularizeOptions& options = {});

struct TriangularPairCheck {
    double a_residual = 0.0;   // ‖A − QSR⁻¹‖_F
    double b_residual = 0.0;   // ‖B − RTQ⁻¹‖_F
    double lower_max = 0.0;    // max |S_ij|, |T_ij| for i > j
    bool diagonals_consistent = true;
    bool sigmas_match = true;
    bool ok = false;
};

/// Independent verification of a TriangularPair against (A, B); inverses are
/// recomputed by LU rather than trusted from the pair.
TriangularPairCheck check_triangular_pair(const DenseMatrix& a, const DenseMatrix& b,
                                          const TriangularPair& pair, double tol = 1e-8);

}  // namespace ptp::linalg
