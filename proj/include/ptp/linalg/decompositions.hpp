#pragma once

#include "ptp/linalg/matrix.hpp"

#include <vector>

namespace ptp::linalg {

/// All n eigenvalues of a square matrix, with multiplicity.
///
/// Householder reduction to upper Hessenberg form followed by single-shift
/// complex QR iteration (Wilkinson shifts, exceptional shifts every ten
/// stalled sweeps). Order is the deflation order, not sorted.
/// Throws NumericalError after 30·n sweeps without deflation.
std::vector<Complex> eigenvalues(const DenseMatrix& m);

/// Full orthogonal/unitary decomposition A = U · diag(sigmas) · V^H.
struct ComplexSvd {
    DenseMatrix u;                // rows × rows, unitary
    DenseMatrix v;                // cols × cols, unitary
    std::vector<double> sigmas;   // min(rows, cols), descending
};

/// One-sided Jacobi SVD for complex input. Unitary factors are completed to
/// full square bases.
ComplexSvd complex_svd(const DenseMatrix& a);

/// Real singular value decomposition A = Q · S · R^T.
struct Svd {
    DenseMatrix q;                // m × m orthogonal
    DenseMatrix r;                // n × n orthogonal
    std::vector<double> sigmas;   // min(m, n), descending, nonnegative
};

/// Throws std::invalid_argument on input with nonzero imaginary parts.
Svd svd(const DenseMatrix& a);

/// Orthonormal basis (as columns) of {x : A x ≈ 0}, where singular values at
/// or below `threshold` count as zero. Columns are ordered by increasing
/// singular value.
DenseMatrix null_space(const DenseMatrix& a, double threshold);

/// Unit vector minimizing ‖A x‖, together with that minimum.
struct NearNullVector {
    std::vector<Complex> x;
    double residual = 0.0;
};
NearNullVector smallest_singular_vector(const DenseMatrix& a);

/// Unitary matrix whose first column is x / ‖x‖ (Householder completion).
DenseMatrix unitary_completion(std::span<const Complex> x);

/// LU factorization with partial pivoting.
class LuDecomposition {
public:
    explicit LuDecomposition(const DenseMatrix& a);

    bool singular() const noexcept { return singular_; }
    std::vector<Complex> solve(std::span<const Complex> b) const;
    DenseMatrix inverse() const;
    Complex determinant() const;

private:
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
    int sign_ = 1;
    bool singular_ = false;
};

DenseMatrix inverse(const DenseMatrix& a);

/// Principal square root: nonnegative real part; on the negative real axis
/// the root with nonnegative imaginary part.
Complex principal_sqrt(Complex z);

}  // namespace ptp::linalg
