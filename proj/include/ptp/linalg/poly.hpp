#pragma once

#include "ptp/linalg/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace ptp::linalg {

using BigInt = boost::multiprecision::cpp_int;

/// Default relative tolerance for coefficient comparisons.
inline constexpr double kDefaultTolerance = 1e-8;

/// Tolerance for polynomial comparisons: 1e-8 up to degree 20, 1e-6 beyond,
/// since coefficient magnitudes grow combinatorially with dimension.
double default_poly_tolerance(std::size_t degree);

/// Univariate polynomial, coefficients in ascending degree.
///
/// An exact polynomial carries arbitrary-precision integer coefficients; a
/// floating one complex doubles. Arithmetic between two exact polynomials
/// stays exact; anything involving a floating operand is floating.
class Poly {
public:
    enum class Kind { exact, floating };

    Poly();  // the constant 1, exact
    static Poly exact(std::vector<BigInt> ascending);
    static Poly floating(std::vector<Complex> ascending);
    static Poly from_roots(std::span<const Complex> roots);

    Kind kind() const noexcept { return kind_; }
    bool is_exact() const noexcept { return kind_ == Kind::exact; }
    std::size_t degree() const noexcept;

    /// Throws std::logic_error on a floating polynomial.
    const std::vector<BigInt>& exact_coeffs() const;
    std::span<const Complex> coeffs() const noexcept { return floating_; }
    double max_abs_coeff() const;

    Complex operator()(Complex x) const;
    Poly to_floating() const { return Poly::floating(floating_); }

    /// Drops imaginary parts of magnitude ≤ tol·max(1, |c|); throws
    /// NumericalError when a larger one is present.
    Poly real_part_checked(double tol) const;

    std::string to_string(char var = 'x') const;

    friend bool operator==(const Poly& a, const Poly& b);

private:
    Kind kind_ = Kind::exact;
    std::vector<BigInt> exact_;
    std::vector<Complex> floating_;
};

Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_pow(const Poly& p, std::size_t e);
/// (x − a) for a scalar a, floating.
Poly linear_factor(Complex a);
Poly poly_scale(const Poly& p, Complex s);
Poly poly_sub(const Poly& p, const Poly& q);

/// max_k |p_k − q_k|; throws std::invalid_argument on degree mismatch.
double poly_max_abs_diff(const Poly& p, const Poly& q);

/// |p_k − q_k| ≤ tol · max(1, ‖p‖∞, ‖q‖∞) for every k. For exact pairs the
/// difference is formed exactly before scaling. Use operator== for exact
/// identity. Throws std::invalid_argument on degree mismatch.
bool poly_eq(const Poly& p, const Poly& q, double tol = kDefaultTolerance);

/// Multiplicity of 0 as a root (number of vanishing low-order coefficients).
std::size_t zero_root_multiplicity(const Poly& p);

enum class CharPolyMode { exact, floating };

/// det(λI − M) as a monic polynomial of degree dim M.
///
/// exact: Faddeev–LeVerrier over arbitrary-precision integers; every trace
/// division is exact. Requires integer entries.
/// floating: expanded from eigenvalues; for real input, imaginary residue up
/// to 1e-8 relative is discarded.
Poly char_poly(const DenseMatrix& m, CharPolyMode mode);
Poly char_poly(const IntMatrix& m);

/// Exact when the matrix is integral, floating otherwise.
Poly char_poly_auto(const DenseMatrix& m);

}  // namespace ptp::linalg
