#include "ptp/spectra/identities.hpp"

#include "ptp/spectra/factorization.hpp"

#include <cmath>
#include <vector>

namespace ptp::spectra {

using linalg::char_poly;
using linalg::poly_mul;
using linalg::poly_pow;

namespace {

bool isolated(const IntMatrix& a, std::size_t v) {
    for (std::size_t k = 0; k < a.rows(); ++k)
        if (a(v, k) != 0 || a(k, v) != 0) return false;
    return true;
}

std::vector<std::size_t> isolated_vertices(const IntMatrix& a) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < a.rows(); ++v)
        if (isolated(a, v)) out.push_back(v);
    return out;
}

// Removes the last `count` entries of `iso` (ascending vertex indices).
IntMatrix remove_vertices(IntMatrix a, const std::vector<std::size_t>& iso, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) a = a.without(iso[iso.size() - 1 - i]);
    return a;
}

IntMatrix repeat_union(IntMatrix base, const IntMatrix& block, std::size_t copies) {
    for (std::size_t i = 0; i < copies; ++i) base = disjoint_union(base, block);
    return base;
}

}  // namespace

GmIdentityReport verify_gm_identity(const PartitionedGraph& g, const PartitionedGraph& h,
                                    double tol) {
    GmIdentityReport out;
    out.exponent = static_cast<std::ptrdiff_t>(g.n()) - static_cast<std::ptrdiff_t>(g.m());
    const std::size_t e = static_cast<std::size_t>(std::abs(out.exponent));
    const Poly left = product_char_poly(g, h);
    const Poly right = product_char_poly(graph::reflect(g), h);
    const Poly p0 = poly_pow(char_poly(h.a00()), e);
    const Poly p1 = poly_pow(char_poly(h.a11()), e);
    if (out.exponent >= 0)
        out.report = compare(poly_mul(left, p0), poly_mul(right, p1), tol);
    else
        out.report = compare(poly_mul(left, p1), poly_mul(right, p0), tol);
    return out;
}

IntMatrix disjoint_union(const IntMatrix& a, const IntMatrix& b) {
    return PartitionedGraph(true, a, IntMatrix(a.rows(), b.rows()), IntMatrix(b.rows(), a.rows()), b)
        .adjacency();
}

CospectralPair cospectral_pair(const PartitionedGraph& g, const PartitionedGraph& h, double tol) {
    CospectralPair out;
    out.product = graph::ptp_adjacency_exact(g, h);
    out.reflected = graph::ptp_adjacency_exact(graph::reflect(g), h);
    out.exponent = static_cast<std::ptrdiff_t>(g.n()) - static_cast<std::ptrdiff_t>(g.m());
    const std::size_t e = static_cast<std::size_t>(std::abs(out.exponent));
    IntMatrix first, second;
    if (out.exponent >= 0) {
        first = repeat_union(out.product, h.a00(), e);
        second = repeat_union(out.reflected, h.a11(), e);
    } else {
        first = repeat_union(out.product, h.a11(), e);
        second = repeat_union(out.reflected, h.a00(), e);
    }
    const auto iso_first = isolated_vertices(first);
    const auto iso_second = isolated_vertices(second);
    out.isolated_removed = std::min(iso_first.size(), iso_second.size());
    out.first = remove_vertices(std::move(first), iso_first, out.isolated_removed);
    out.second = remove_vertices(std::move(second), iso_second, out.isolated_removed);
    out.report = compare(char_poly(out.first), char_poly(out.second), tol);
    return out;
}

Poly bridge_char_poly(const IntMatrix& h00, const IntMatrix& h11, std::size_t x0, std::size_t x1,
                      Complex sigma) {
    if (!h00.square() || !h11.square()) throw SpectraError("bridge_char_poly: blocks must be square");
    if (x0 >= h00.rows()) throw SpectraError("bridge_char_poly: x0 is out of range");
    if (x1 >= h11.rows()) throw SpectraError("bridge_char_poly: x1 is out of range");
    const Poly whole = poly_mul(char_poly(h00), char_poly(h11));
    const Poly cut = poly_mul(char_poly(h00.without(x0)), char_poly(h11.without(x1)));
    const Complex s2 = sigma * sigma;
    const double r = std::round(s2.real());
    if (s2.imag() == 0.0 && s2.real() == r && std::abs(r) < 1e15)
        return linalg::poly_sub(whole, poly_mul(Poly::exact({linalg::BigInt(static_cast<long long>(r))}), cut));
    return linalg::poly_sub(whole, linalg::poly_scale(cut, s2));
}

}  // namespace ptp::spectra
