#include "ptp/linalg/triangularize.hpp"

#include "ptp/linalg/decompositions.hpp"

#include <algorithm>
#include <cmath>

namespace ptp::linalg {

namespace {

struct Factors {
    DenseMatrix q, q_inv, r, r_inv, s, t;
};

Complex largest_modulus(const std::vector<Complex>& values) {
    Complex best = 0.0;
    for (const auto& v : values)
        if (std::abs(v) > std::abs(best)) best = v;
    return best;
}

// Basis with first column exactly `first` (not normalized), unitary otherwise.
// Returns the basis and its inverse.
std::pair<DenseMatrix, DenseMatrix> scaled_basis(const std::vector<Complex>& first) {
    const double len = norm(first);
    DenseMatrix basis = unitary_completion(first);
    DenseMatrix inv = basis.adjoint();
    for (std::size_t i = 0; i < basis.rows(); ++i) basis(i, 0) *= len;
    for (std::size_t j = 0; j < inv.cols(); ++j) inv(0, j) /= len;
    return {std::move(basis), std::move(inv)};
}

// Requires a.rows() <= a.cols().
Factors triangularize_wide(const DenseMatrix& a, const DenseMatrix& b, std::size_t depth,
                           std::optional<std::size_t> nonzero_left,
                           const TriangularizeOptions& opt) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m == 0) {
        return {DenseMatrix(0, 0), DenseMatrix(0, 0), DenseMatrix::identity(n),
                DenseMatrix::identity(n), DenseMatrix(0, n), DenseMatrix(n, 0)};
    }

    const DenseMatrix ab = a * b;
    const double ab_thr = opt.zero_tol * (1.0 + ab.frobenius_norm());
    const Complex lambda = largest_modulus(eigenvalues(ab));
    const bool nonzero_step = nonzero_left ? *nonzero_left > 0 : std::abs(lambda) > ab_thr;

    std::vector<Complex> x, y;
    Complex sigma = 0.0, tau = 0.0;

    if (nonzero_step) {
        if (std::abs(lambda) == 0.0)
            throw TriangularizationError("expected a nonzero eigenvalue of AB, found none", depth);
        sigma = principal_sqrt(lambda);
        tau = sigma;
        DenseMatrix shifted = ab;
        for (std::size_t i = 0; i < m; ++i) shifted(i, i) -= lambda;
        x = smallest_singular_vector(shifted).x;
        y = b * std::span<const Complex>(x);
        for (auto& e : y) e /= sigma;
        const double rho = norm(y);
        if (rho == 0.0) throw TriangularizationError("y = Bx/sigma vanished", depth);
        // Balance ‖x‖·‖y‖ = ‖y‖/‖x‖·‖x‖²: give x norm 1/√ρ and y norm √ρ.
        const double alpha = 1.0 / std::sqrt(rho);
        for (auto& e : x) e *= alpha;
        for (auto& e : y) e *= alpha;
    } else {
        const NearNullVector nul = smallest_singular_vector(ab);
        if (nul.residual > ab_thr)
            throw TriangularizationError("AB is not numerically singular in the nilpotent branch",
                                         depth);
        x = nul.x;
        const auto bx = b * std::span<const Complex>(x);
        const double bx_norm = norm(bx);
        if (bx_norm > opt.zero_tol * (1.0 + b.frobenius_norm())) {
            // Ay = ABx/‖Bx‖ = 0, Bx = ‖Bx‖·y.
            y = bx;
            for (auto& e : y) e /= bx_norm;
            tau = bx_norm;
        } else {
            const NearNullVector a_nul = smallest_singular_vector(a);
            if (a_nul.residual <= opt.zero_tol * (1.0 + a.frobenius_norm())) {
                y = a_nul.x;  // Ay = 0, Bx = 0
            } else {
                if (m != n)
                    throw TriangularizationError("A has independent columns but is not square",
                                                 depth);
                LuDecomposition lu(a);
                if (lu.singular())
                    throw TriangularizationError("A is numerically singular and nonsingular",
                                                 depth);
                y = lu.solve(x);
                const double yn = norm(y);
                for (auto& e : y) e /= yn;
                sigma = 1.0 / yn;  // A·y = x/‖y‖
            }
        }
    }

    auto [xs, xs_inv] = scaled_basis(x);
    auto [ys, ys_inv] = scaled_basis(y);
    const DenseMatrix a_hat = xs_inv * a * ys;
    const DenseMatrix b_hat = ys_inv * b * xs;

    std::optional<std::size_t> next_left;
    if (nonzero_left) next_left = *nonzero_left - (nonzero_step ? 1 : 0);
    const Factors sub = triangularize_wide(a_hat.block(1, 1, m - 1, n - 1),
                                           b_hat.block(1, 1, n - 1, m - 1), depth + 1,
                                           next_left, opt);

    Factors f;
    f.q = xs * embed_trailing(sub.q);
    f.q_inv = embed_trailing(sub.q_inv) * xs_inv;
    f.r = ys * embed_trailing(sub.r);
    f.r_inv = embed_trailing(sub.r_inv) * ys_inv;

    f.s = DenseMatrix(m, n);
    f.s(0, 0) = sigma;
    f.s.set_block(0, 1, a_hat.block(0, 1, 1, n - 1) * sub.r);
    f.s.set_block(1, 1, sub.s);

    f.t = DenseMatrix(n, m);
    f.t(0, 0) = tau;
    f.t.set_block(0, 1, b_hat.block(0, 1, 1, m - 1) * sub.q);
    f.t.set_block(1, 1, sub.t);
    return f;
}

}  // namespace

TriangularizationError::TriangularizationError(const std::string& what, std::size_t depth)
    : NumericalError(depth == static_cast<std::size_t>(-1)
                         ? "triangularization: " + what
                         : "triangularization at depth " + std::to_string(depth) + ": " + what),
      depth_(depth) {}

TriangularPair simultaneous_triangularize(const DenseMatrix& a, const DenseMatrix& b,
                                          const TriangularizeOptions& options) {
    if (b.rows() != a.cols() || b.cols() != a.rows())
        throw std::invalid_argument("simultaneous_triangularize: A is m×n but B is not n×m");
    const std::size_t l = std::min(a.rows(), a.cols());
    if (options.nonzero_eigenvalues && *options.nonzero_eigenvalues > l)
        throw std::invalid_argument("simultaneous_triangularize: nonzero eigenvalue count exceeds min(m, n)");

    TriangularPair out;
    if (a.rows() <= a.cols()) {
        Factors f = triangularize_wide(a, b, 0, options.nonzero_eigenvalues, options);
        out = {std::move(f.q), std::move(f.r), std::move(f.s), std::move(f.t),
               std::move(f.q_inv), std::move(f.r_inv), {}};
    } else {
        // B = Q'S'R'⁻¹, A = R'T'Q'⁻¹  ⇒  A = Q S R⁻¹ with Q = R', S = T', R = Q'.
        Factors f = triangularize_wide(b, a, 0, options.nonzero_eigenvalues, options);
        out = {std::move(f.r), std::move(f.q), std::move(f.t), std::move(f.s),
               std::move(f.r_inv), std::move(f.q_inv), {}};
    }

    out.sigmas.resize(l);
    for (std::size_t j = 0; j < l; ++j) {
        const Complex sj = out.s(j, j);
        const Complex tj = out.t(j, j);
        out.sigmas[j] = sj == tj ? sj : Complex(0.0);
    }

    const TriangularPairCheck check = check_triangular_pair(a, b, out, options.check_tol);
    if (!check.ok) {
        throw TriangularizationError(
            "postcondition failed (A residual " + std::to_string(check.a_residual) +
                ", B residual " + std::to_string(check.b_residual) + ")",
            static_cast<std::size_t>(-1));
    }
    return out;
}

TriangularPairCheck check_triangular_pair(const DenseMatrix& a, const DenseMatrix& b,
                                          const TriangularPair& pair, double tol) {
    TriangularPairCheck c;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const DenseMatrix q_inv = m ? inverse(pair.q) : DenseMatrix(0, 0);
    const DenseMatrix r_inv = n ? inverse(pair.r) : DenseMatrix(0, 0);
    c.a_residual = (a - pair.q * pair.s * r_inv).frobenius_norm();
    c.b_residual = (b - pair.r * pair.t * q_inv).frobenius_norm();

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < std::min(i, n); ++j)
            c.lower_max = std::max(c.lower_max, std::abs(pair.s(i, j)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < std::min(i, m); ++j)
            c.lower_max = std::max(c.lower_max, std::abs(pair.t(i, j)));

    const std::size_t l = std::min(m, n);
    if (pair.sigmas.size() != l) c.sigmas_match = false;
    for (std::size_t j = 0; j < l; ++j) {
        const Complex sj = pair.s(j, j);
        const Complex tj = pair.t(j, j);
        const bool equal = std::abs(sj - tj) <= tol * (1.0 + std::abs(sj) + std::abs(tj));
        const bool zero_product = std::min(std::abs(sj), std::abs(tj)) <= tol;
        if (!equal && !zero_product) c.diagonals_consistent = false;
        if (c.sigmas_match) {
            const Complex expected = equal ? sj : Complex(0.0);
            if (std::abs(pair.sigmas[j] - expected) > tol * (1.0 + std::abs(expected)))
                c.sigmas_match = false;
        }
    }

    const double scale = 1.0 + a.frobenius_norm() + b.frobenius_norm();
    c.ok = c.a_residual <= tol * scale && c.b_residual <= tol * scale && c.lower_max <= tol &&
           c.diagonals_consistent && c.sigmas_match;
    return c;
}

}  // namespace ptp::linalg
