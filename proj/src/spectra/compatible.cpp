#include "ptp/spectra/compatible.hpp"

#include "ptp/linalg/decompositions.hpp"
#include "ptp/linalg/multiset.hpp"
#include "ptp/spectra/factorization.hpp"

#include <numeric>
#include <optional>
#include <random>

namespace ptp::spectra {

using linalg::DenseMatrix;

namespace {

// mt19937 output is fully specified, unlike the std distributions; this keeps
// the draws identical across standard libraries.
double uniform(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng()) / 4294967296.0);
}

struct Pairing {
    std::vector<Complex> lambda;
    std::vector<Complex> mu;
};

DenseMatrix diagonal_blocks(const PartitionedGraph& h) {
    return graph::arrow(h, 0.0);
}

DenseMatrix off_diagonal_blocks(const PartitionedGraph& h) {
    return graph::arrow(h, 1.0) - graph::arrow(h, 0.0);
}

Complex rayleigh(const DenseMatrix& a, const std::vector<Complex>& v) {
    const auto av = a * std::span<const Complex>(v);
    return linalg::dot(v, av) / linalg::dot(v, v);
}

// Groups values that lie within tol of each other, transitively.
std::vector<std::vector<std::size_t>> clusters(const std::vector<Complex>& values, double tol) {
    const std::size_t n = values.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(values[i] - values[j]) <= tol) parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] == n) {
            slot[r] = out.size();
            out.emplace_back();
        }
        out[slot[r]].push_back(i);
    }
    return out;
}

std::optional<Pairing> pair_eigenvalues(const DenseMatrix& h0, const DenseMatrix& h1, double c) {
    DenseMatrix mix = h1;
    mix *= c;
    mix += h0;
    const double scale = 1.0 + mix.frobenius_norm();
    const double thr = 1e-6 * scale;
    const std::vector<Complex> eig = linalg::eigenvalues(mix);
    Pairing p;
    for (const auto& group : clusters(eig, thr)) {
        Complex theta = 0.0;
        for (std::size_t i : group) theta += eig[i];
        theta /= static_cast<double>(group.size());
        DenseMatrix shifted = mix;
        for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= theta;
        const DenseMatrix basis = linalg::null_space(shifted, thr);
        // A short eigenspace means M is defective here.
        if (basis.cols() != group.size()) return std::nullopt;
        for (std::size_t k = 0; k < basis.cols(); ++k) {
            const auto v = basis.column(k);
            p.lambda.push_back(rayleigh(h0, v));
            p.mu.push_back(rayleigh(h1, v));
        }
    }
    return p;
}

std::vector<Complex> combine(const Pairing& p, Complex sigma) {
    std::vector<Complex> out(p.lambda.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = p.lambda[j] + sigma * p.mu[j];
    return out;
}

}  // namespace

bool check_compatible(const PartitionedGraph& h) {
    if (!(h.a00() * h.a01() == h.a01() * h.a11())) return false;
    if (!h.directed()) return true;
    return h.a11() * h.a10() == h.a10() * h.a00();
}

CommutingSpectrum commuting_spectrum(const PartitionedGraph& h, Complex sigma,
                                     const CommutingSpectrumOptions& options) {
    if (!check_compatible(h)) throw SpectraError("commuting_spectrum: partition is not compatible");
    const DenseMatrix h0 = diagonal_blocks(h);
    const DenseMatrix h1 = off_diagonal_blocks(h);
    std::mt19937 rng(options.seed);

    CommutingSpectrum out;
    for (int attempt = 0; attempt < options.attempts; ++attempt) {
        const double c = uniform(rng, 0.5, 2.5);
        double probes[3];
        for (double& s : probes) s = uniform(rng, -3.0, 3.0);
        std::optional<Pairing> p;
        try {
            p = pair_eigenvalues(h0, h1, c);
        } catch (const linalg::NumericalError&) {
            p.reset();
        }
        if (!p) continue;
        bool certified = true;
        for (double s : probes) {
            const DenseMatrix a = graph::arrow(h, s);
            const double tol = options.tol * (1.0 + a.frobenius_norm());
            if (!linalg::multisets_close(combine(*p, s), linalg::eigenvalues(a), tol)) {
                certified = false;
                break;
            }
        }
        if (!certified) continue;
        out.values = combine(*p, sigma);
        out.lambda = std::move(p->lambda);
        out.mu = std::move(p->mu);
        return out;
    }
    out.values = linalg::eigenvalues(graph::arrow(h, sigma));
    out.fallback = true;
    return out;
}

}  // namespace ptp::spectra
