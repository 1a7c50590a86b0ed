#include "ptp/spectra/factorization.hpp"

#include "ptp/linalg/decompositions.hpp"

#include <cmath>

namespace ptp::spectra {

using linalg::CharPolyMode;
using linalg::DenseMatrix;
using linalg::IntMatrix;

namespace {

void set_residual(SpectralFactorization& f, std::size_t m, std::size_t n) {
    if (m > n) {
        f.residual = Residual::h00;
        f.residual_exponent = m - n;
    } else if (n > m) {
        f.residual = Residual::h11;
        f.residual_exponent = n - m;
    } else {
        f.residual = Residual::none;
        f.residual_exponent = 0;
    }
}

// Nearest integer when σ is within rounding of one, so the factor can be
// formed exactly.
std::optional<long long> integral_value(Complex s) {
    const double r = std::round(s.real());
    const double tol = 1e-12 * std::max(1.0, std::abs(s));
    if (std::abs(s.real() - r) <= tol && std::abs(s.imag()) <= tol && std::abs(r) < 1e15)
        return static_cast<long long>(r);
    return std::nullopt;
}

Poly factor_poly(const PartitionedGraph& h, Complex sigma) {
    if (const auto k = integral_value(sigma)) {
        IntMatrix a = h.adjacency();
        const std::size_t m = h.m();
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if ((i < m) != (j < m)) a(i, j) *= *k;
        return linalg::char_poly(a);
    }
    return linalg::char_poly(graph::arrow(h, sigma), CharPolyMode::floating);
}

Complex nonnegative_real_part(Complex s) {
    if (s.real() < 0.0 || (s.real() == 0.0 && s.imag() < 0.0)) return -s;
    return s;
}

}  // namespace

std::string to_string(Residual r) {
    switch (r) {
        case Residual::h00: return "H00";
        case Residual::h11: return "H11";
        case Residual::none: return "none";
    }
    return "none";
}

std::string to_string(Method m) { return m == Method::svd ? "svd" : "triangular"; }

SpectralFactorization factor_undirected(const PartitionedGraph& g, const PartitionedGraph& h) {
    (void)h;
    if (g.directed()) throw SpectraError("the svd method requires an undirected G");
    SpectralFactorization f;
    f.method = Method::svd;
    set_residual(f, g.m(), g.n());
    if (g.m() > 0 && g.n() > 0) {
        const linalg::Svd s = linalg::svd(DenseMatrix(g.a01()));
        for (double v : s.sigmas) f.sigmas.emplace_back(v);
    }
    return f;
}

SpectralFactorization factor_directed(const PartitionedGraph& g, const PartitionedGraph& h,
                                      const linalg::TriangularizeOptions& options) {
    (void)h;
    SpectralFactorization f;
    f.method = Method::triangular;
    set_residual(f, g.m(), g.n());
    if (g.m() == 0 || g.n() == 0) return f;

    // AB and BA share their nonzero eigenvalues; use the smaller product.
    const IntMatrix prod = g.m() <= g.n() ? g.a01() * g.a10() : g.a10() * g.a01();
    const Poly cp = linalg::char_poly(prod);
    linalg::TriangularizeOptions opts = options;
    opts.nonzero_eigenvalues = prod.rows() - linalg::zero_root_multiplicity(cp);

    const linalg::TriangularPair pair = linalg::simultaneous_triangularize(
        DenseMatrix(g.a01()), DenseMatrix(g.a10()), opts);
    for (const auto& s : pair.sigmas) f.sigmas.push_back(nonnegative_real_part(s));
    return f;
}

SpectralFactorization factor(const PartitionedGraph& g, const PartitionedGraph& h,
                             std::optional<Method> method) {
    const Method m = method.value_or(g.directed() ? Method::triangular : Method::svd);
    return m == Method::svd ? factor_undirected(g, h) : factor_directed(g, h);
}

Poly assemble(const SpectralFactorization& f, const PartitionedGraph& h) {
    Poly out;
    for (const auto& s : f.sigmas) out = linalg::poly_mul(out, factor_poly(h, s));
    if (f.residual != Residual::none) {
        const IntMatrix& block = f.residual == Residual::h00 ? h.a00() : h.a11();
        out = linalg::poly_mul(out, linalg::poly_pow(linalg::char_poly(block), f.residual_exponent));
    }
    return out;
}

Poly product_char_poly(const PartitionedGraph& g, const PartitionedGraph& h) {
    return linalg::char_poly(graph::ptp_adjacency_exact(g, h));
}

Report check_factorization(const PartitionedGraph& g, const PartitionedGraph& h,
                           const SpectralFactorization& f, double tol) {
    return compare(assemble(f, h), product_char_poly(g, h), tol);
}

nlohmann::json to_json(const SpectralFactorization& f) {
    nlohmann::json out;
    nlohmann::json sigmas = nlohmann::json::array();
    for (const auto& s : f.sigmas) sigmas.push_back(scalar_to_json(s));
    out["sigmas"] = std::move(sigmas);
    out["residual"] = to_string(f.residual);
    out["residual_exponent"] = f.residual_exponent;
    out["method"] = to_string(f.method);
    return out;
}

}  // namespace ptp::spectra
