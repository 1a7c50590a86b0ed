#include "ptp/spectra/closed_forms.hpp"

#include "ptp/graph/generators.hpp"
#include "ptp/linalg/decompositions.hpp"
#include "ptp/linalg/multiset.hpp"
#include "ptp/spectra/factorization.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace ptp::spectra {

using linalg::DenseMatrix;
using linalg::IntMatrix;

namespace {

void verify(const std::vector<Complex>& closed, const DenseMatrix& matrix, double tol,
            const char* name) {
    const std::vector<Complex> direct = linalg::eigenvalues(matrix);
    const double d = linalg::multiset_distance(closed, direct);
    if (!(d <= tol * (1.0 + matrix.frobenius_norm())))
        throw ClosedFormMismatch(std::string(name) + ": closed form disagrees with direct eigenvalues",
                                 d);
}

std::optional<std::int64_t> regular_degree(const IntMatrix& a) {
    if (a.rows() == 0) return std::nullopt;
    std::int64_t d = -1;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::int64_t row = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) row += a(i, j);
        if (d >= 0 && row != d) return std::nullopt;
        d = row;
    }
    return d;
}

// Eigenvalues of a with the one nearest d removed.
std::vector<Complex> remaining_eigenvalues(const IntMatrix& a, double d) {
    std::vector<Complex> eig = linalg::eigenvalues(DenseMatrix(a));
    std::size_t best = 0;
    for (std::size_t i = 1; i < eig.size(); ++i)
        if (std::abs(eig[i] - d) < std::abs(eig[best] - d)) best = i;
    eig.erase(eig.begin() + static_cast<std::ptrdiff_t>(best));
    return eig;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

ClosedFormMismatch::ClosedFormMismatch(const std::string& what, double distance)
    : std::runtime_error(what + " (distance " + std::to_string(distance) + ")"),
      distance_(distance) {}

std::size_t RootMultiset::size() const {
    std::size_t n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

std::vector<Complex> RootMultiset::expanded() const {
    std::vector<Complex> out;
    out.reserve(size());
    for (const auto& r : roots) out.insert(out.end(), r.multiplicity, r.value);
    return out;
}

Poly RootMultiset::polynomial() const {
    const auto all = expanded();
    return Poly::from_roots(all);
}

std::vector<Complex> regular_all_ones_spectrum(const PartitionedGraph& h, Complex sigma,
                                               const ClosedFormOptions& options) {
    if (h.directed()) throw SpectraError("regular_all_ones_spectrum: H must be undirected");
    const std::size_t m = h.m();
    const std::size_t n = h.n();
    if (!(h.a01() == IntMatrix(m, n, 1)))
        throw SpectraError("regular_all_ones_spectrum: H01 must consist entirely of ones");
    const auto d0 = regular_degree(h.a00());
    const auto d1 = regular_degree(h.a11());
    if (!d0 || !d1 || *d0 != *d1)
        throw SpectraError("regular_all_ones_spectrum: H00 and H11 must be regular of equal degree");
    const double d = static_cast<double>(*d0);
    const double root = std::sqrt(static_cast<double>(m * n));

    std::vector<Complex> out;
    out.push_back(d + sigma * root);
    for (const auto& v : remaining_eigenvalues(h.a00(), d)) out.push_back(v);
    out.push_back(d - sigma * root);
    for (const auto& v : remaining_eigenvalues(h.a11(), d)) out.push_back(v);
    if (options.checked) verify(out, graph::arrow(h, sigma), options.tol, "regular_all_ones_spectrum");
    return out;
}

RootMultiset hypercube_path_spectrum(std::size_t m, std::size_t n, const ClosedFormOptions& options) {
    if (m == 0 || n == 0) throw SpectraError("hypercube_path_spectrum: M and N must be positive");
    RootMultiset out;
    for (std::size_t k = 1; k <= n; ++k) {
        const double c = std::cos(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n + 1));
        for (std::size_t j = 0; 2 * j < m; ++j) {
            const double coeff = 2.0 * static_cast<double>(m) - 4.0 * static_cast<double>(j);
            out.roots.push_back({coeff * c, binomial(m, j)});
        }
        if (m % 2 == 0) out.roots.push_back({0.0, binomial(m, m / 2) / 2});
    }
    if (options.checked) {
        const DenseMatrix prod = graph::ptp_adjacency(graph::hypercube(m), graph::path(n));
        verify(out.expanded(), prod, options.tol, "hypercube_path_spectrum");
    }
    return out;
}

std::vector<Complex> circulant_family_spectrum(std::size_t j, std::size_t k, Complex sigma,
                                               const ClosedFormOptions& options) {
    if (k == 0 || j >= 2 * k)
        throw SpectraError("circulant_family_spectrum: requires k >= 1 and 0 <= j < 2k");
    std::vector<Complex> out;
    out.reserve(6 * k);
    const Complex shift = std::sqrt(2.0) * sigma;
    for (std::size_t l = 0; l < 2 * k; ++l) {
        const double beta = 2.0 * std::cos(std::numbers::pi * static_cast<double>(j * l) /
                                           static_cast<double>(k));
        const double s = l % 2 == 0 ? 1.0 : -1.0;
        out.push_back(beta - s);
        out.push_back(beta + s + shift);
        out.push_back(beta + s - shift);
    }
    if (options.checked)
        verify(out, graph::arrow(graph::circulant_family(j, k), sigma), options.tol,
               "circulant_family_spectrum");
    return out;
}

}  // namespace ptp::spectra
