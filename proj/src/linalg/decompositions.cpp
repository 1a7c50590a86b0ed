#include "ptp/linalg/decompositions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ptp::linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void reduce_to_hessenberg(DenseMatrix& h) {
    const std::size_t n = h.rows();
    if (n < 3) return;
    std::vector<Complex> v;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t len = n - k - 1;
        v.assign(len, 0.0);
        double xnorm = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
            v[i] = h(k + 1 + i, k);
            xnorm += std::norm(v[i]);
        }
        xnorm = std::sqrt(xnorm);
        double tail = 0.0;
        for (std::size_t i = 1; i < len; ++i) tail += std::norm(v[i]);
        if (tail == 0.0) continue;

        const Complex x0 = v[0];
        const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
        const Complex alpha = -phase * xnorm;
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (const auto& e : v) vnorm2 += std::norm(e);
        if (vnorm2 == 0.0) continue;

        // Left application: rows k+1..n-1.
        for (std::size_t j = k; j < n; ++j) {
            Complex w = 0.0;
            for (std::size_t i = 0; i < len; ++i) w += std::conj(v[i]) * h(k + 1 + i, j);
            w *= 2.0 / vnorm2;
            for (std::size_t i = 0; i < len; ++i) h(k + 1 + i, j) -= v[i] * w;
        }
        // Right application: columns k+1..n-1.
        for (std::size_t i = 0; i < n; ++i) {
            Complex w = 0.0;
            for (std::size_t j = 0; j < len; ++j) w += h(i, k + 1 + j) * v[j];
            w *= 2.0 / vnorm2;
            for (std::size_t j = 0; j < len; ++j) h(i, k + 1 + j) -= w * std::conj(v[j]);
        }
        h(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

// Eigenvalues of [[a, b], [c, d]].
std::pair<Complex, Complex> eig2x2(Complex a, Complex b, Complex c, Complex d) {
    const Complex mean = 0.5 * (a + d);
    const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
    Complex l1 = mean + disc;
    Complex l2 = mean - disc;
    // Recover the smaller root from the determinant to avoid cancellation.
    const Complex det = a * d - b * c;
    if (std::abs(l1) >= std::abs(l2)) {
        if (std::abs(l1) > 0.0) l2 = det / l1;
    } else {
        l1 = det / l2;
    }
    return {l1, l2};
}

}  // namespace

std::vector<Complex> eigenvalues(const DenseMatrix& m) {
    if (!m.square()) throw std::invalid_argument("eigenvalues: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<Complex> eig;
    eig.reserve(n);
    if (n == 0) return eig;

    DenseMatrix h = m;
    reduce_to_hessenberg(h);
    const double hnorm = std::max(h.frobenius_norm(), std::numeric_limits<double>::min());

    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
    std::size_t iter = 0;
    std::size_t total = 0;
    const std::size_t max_total = 30 * n + 60;

    while (hi >= 0) {
        std::ptrdiff_t l = hi;
        while (l > 0) {
            double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (s == 0.0) s = hnorm;
            if (std::abs(h(l, l - 1)) <= kEps * s) {
                h(l, l - 1) = 0.0;
                break;
            }
            --l;
        }
        if (l == hi) {
            eig.push_back(h(hi, hi));
            --hi;
            iter = 0;
            continue;
        }
        if (l == hi - 1) {
            auto [a, b] = eig2x2(h(l, l), h(l, hi), h(hi, l), h(hi, hi));
            eig.push_back(a);
            eig.push_back(b);
            hi -= 2;
            iter = 0;
            continue;
        }
        if (++total > max_total)
            throw NumericalError("eigenvalues: QR iteration did not converge");
        ++iter;

        Complex mu;
        if (iter % 10 == 0) {
            mu = h(hi, hi) + std::abs(h(hi, hi - 1).real()) + std::abs(h(hi - 1, hi - 2).real());
        } else {
            auto [a, b] = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            mu = std::abs(a - h(hi, hi)) < std::abs(b - h(hi, hi)) ? a : b;
        }

        const auto lo = static_cast<std::size_t>(l);
        const auto top = static_cast<std::size_t>(hi);
        for (std::size_t k = lo; k <= top; ++k) h(k, k) -= mu;

        std::vector<std::pair<double, Complex>> rot;
        rot.reserve(top - lo);
        for (std::size_t k = lo; k < top; ++k) {
            const Complex a = h(k, k);
            const Complex b = h(k + 1, k);
            const double r = std::hypot(std::abs(a), std::abs(b));
            double c;
            Complex s;
            if (r == 0.0) {
                c = 1.0;
                s = 0.0;
            } else if (std::abs(a) == 0.0) {
                c = 0.0;
                s = 1.0;
            } else {
                c = std::abs(a) / r;
                s = (a / std::abs(a)) * std::conj(b) / r;
            }
            rot.emplace_back(c, s);
            for (std::size_t j = k; j <= top; ++j) {
                const Complex t1 = h(k, j);
                const Complex t2 = h(k + 1, j);
                h(k, j) = c * t1 + s * t2;
                h(k + 1, j) = -std::conj(s) * t1 + c * t2;
            }
        }
        for (std::size_t k = lo; k < top; ++k) {
            const auto [c, s] = rot[k - lo];
            const std::size_t last = std::min(top, k + 2);
            for (std::size_t i = lo; i <= last; ++i) {
                const Complex t1 = h(i, k);
                const Complex t2 = h(i, k + 1);
                h(i, k) = t1 * c + t2 * std::conj(s);
                h(i, k + 1) = -t1 * s + t2 * c;
            }
        }
        for (std::size_t k = lo; k <= top; ++k) h(k, k) += mu;
    }
    return eig;
}

ComplexSvd complex_svd(const DenseMatrix& a) {
    if (a.rows() < a.cols()) {
        ComplexSvd t = complex_svd(a.adjoint());
        return {std::move(t.v), std::move(t.u), std::move(t.sigmas)};
    }
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    DenseMatrix w = a;
    DenseMatrix v = DenseMatrix::identity(n);

    // Inner products carry rounding of order m·ε relative to the column norms.
    const double ortho_tol = kEps * static_cast<double>(std::max<std::size_t>(m, 4));
    // Columns below this squared norm are rounding noise; rotating them only
    // shrinks them further into the subnormal range.
    const double fro = a.frobenius_norm();
    const double negligible = (1e-3 * kEps * fro) * (1e-3 * kEps * fro);
    bool rotated = true;
    for (int sweep = 0; sweep < 80 && rotated; ++sweep) {
        rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                Complex gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += std::norm(w(i, p));
                    beta += std::norm(w(i, q));
                    gamma += std::conj(w(i, p)) * w(i, q);
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= ortho_tol * std::sqrt(alpha * beta)) continue;
                if (std::min(alpha, beta) <= negligible) continue;
                rotated = true;
                const Complex phase = std::conj(gamma / g);
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const Complex wp = w(i, p);
                    const Complex wq = phase * w(i, q);
                    w(i, p) = c * wp - s * wq;
                    w(i, q) = s * wp + c * wq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vp = v(i, p);
                    const Complex vq = phase * v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (sweep == 79 && rotated) throw NumericalError("complex_svd: Jacobi sweeps did not converge");
    }

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) norms[j] = norm(w.column(j));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    ComplexSvd out;
    out.sigmas.resize(n);
    out.v = DenseMatrix(n, n);
    out.u = DenseMatrix(m, m);
    std::vector<std::vector<Complex>> basis;
    basis.reserve(m);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.sigmas[k] = norms[j];
        out.v.set_column(k, v.column(j));
        if (norms[j] > std::numeric_limits<double>::min()) {
            auto col = w.column(j);
            for (auto& e : col) e /= norms[j];
            basis.push_back(std::move(col));
        } else {
            basis.emplace_back();  // placeholder, completed below
        }
    }
    // Complete U: fill placeholders and extra columns with Gram-Schmidt over e_i.
    std::vector<std::vector<Complex>> done;
    for (auto& b : basis)
        if (!b.empty()) done.push_back(b);
    std::vector<std::vector<Complex>> extra;
    for (std::size_t i = 0; i < m && done.size() + extra.size() < m; ++i) {
        std::vector<Complex> e(m, 0.0);
        e[i] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto* set : {&done, &extra})
                for (const auto& q : *set) {
                    const Complex proj = dot(q, e);
                    for (std::size_t r = 0; r < m; ++r) e[r] -= proj * q[r];
                }
        }
        const double en = norm(e);
        if (en < 0.5) continue;
        for (auto& x : e) x /= en;
        extra.push_back(std::move(e));
    }
    std::size_t next_extra = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (basis[k].empty()) basis[k] = extra[next_extra++];
        out.u.set_column(k, basis[k]);
    }
    for (std::size_t k = n; k < m; ++k) out.u.set_column(k, extra[next_extra++]);
    return out;
}

Svd svd(const DenseMatrix& a) {
    if (!a.is_real()) throw std::invalid_argument("svd: input has nonzero imaginary parts");
    ComplexSvd c = complex_svd(a);
    Svd out{std::move(c.u), std::move(c.v), std::move(c.sigmas)};
    // Real arithmetic in, real arithmetic out; clear rounding-level imaginary dust.
    for (auto* mat : {&out.q, &out.r})
        for (std::size_t i = 0; i < mat->rows(); ++i)
            for (std::size_t j = 0; j < mat->cols(); ++j) (*mat)(i, j) = (*mat)(i, j).real();
    return out;
}

DenseMatrix null_space(const DenseMatrix& a, double threshold) {
    const ComplexSvd s = complex_svd(a);
    const std::size_t n = a.cols();
    const std::size_t k = std::min(a.rows(), a.cols());
    std::vector<std::size_t> cols;
    for (std::size_t j = n; j-- > k;) cols.push_back(j);
    for (std::size_t j = k; j-- > 0;)
        if (s.sigmas[j] <= threshold) cols.push_back(j);
    DenseMatrix out(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) out.set_column(c, s.v.column(cols[c]));
    return out;
}

NearNullVector smallest_singular_vector(const DenseMatrix& a) {
    if (a.cols() == 0) throw std::invalid_argument("smallest_singular_vector: no columns");
    const ComplexSvd s = complex_svd(a);
    const std::size_t n = a.cols();
    const std::size_t k = std::min(a.rows(), n);
    NearNullVector out;
    out.x = s.v.column(n - 1);
    out.residual = n > k ? 0.0 : s.sigmas[k - 1];
    return out;
}

DenseMatrix unitary_completion(std::span<const Complex> x) {
    const std::size_t n = x.size();
    const double xn = norm(x);
    if (n == 0 || xn == 0.0) throw std::invalid_argument("unitary_completion: zero vector");
    std::vector<Complex> xh(x.begin(), x.end());
    for (auto& e : xh) e /= xn;
    const Complex theta = std::abs(xh[0]) == 0.0 ? Complex(1.0) : xh[0] / std::abs(xh[0]);

    // Reflector P with P(-theta e1) = xh, then U = P diag(-theta, 1, ..., 1).
    std::vector<Complex> v = xh;
    for (auto& e : v) e = -e;
    v[0] -= theta;
    double vn2 = 0.0;
    for (const auto& e : v) vn2 += std::norm(e);

    DenseMatrix u = DenseMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u(i, j) -= 2.0 * v[i] * std::conj(v[j]) / vn2;
    for (std::size_t i = 0; i < n; ++i) u(i, 0) *= -theta;
    return u;
}

LuDecomposition::LuDecomposition(const DenseMatrix& a) : lu_(a), perm_(a.rows()) {
    if (!a.square()) throw std::invalid_argument("LU: matrix is not square");
    const std::size_t n = a.rows();
    std::iota(perm_.begin(), perm_.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu_(i, k)) > best) {
                best = std::abs(lu_(i, k));
                p = i;
            }
        if (best == 0.0) {
            singular_ = true;
            continue;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
            std::swap(perm_[k], perm_[p]);
            sign_ = -sign_;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = lu_(i, k) / lu_(k, k);
            lu_(i, k) = f;
            if (f == Complex(0.0)) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
        }
    }
}

std::vector<Complex> LuDecomposition::solve(std::span<const Complex> b) const {
    if (singular_) throw NumericalError("LU solve: matrix is singular");
    const std::size_t n = lu_.rows();
    if (b.size() != n) throw std::invalid_argument("LU solve: length mismatch");
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = b[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

DenseMatrix LuDecomposition::inverse() const {
    const std::size_t n = lu_.rows();
    DenseMatrix inv(n, n);
    std::vector<Complex> e(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), Complex(0.0));
        e[j] = 1.0;
        inv.set_column(j, solve(e));
    }
    return inv;
}

Complex LuDecomposition::determinant() const {
    if (singular_) return 0.0;
    Complex d = static_cast<double>(sign_);
    for (std::size_t i = 0; i < lu_.rows(); ++i) d *= lu_(i, i);
    return d;
}

DenseMatrix inverse(const DenseMatrix& a) { return LuDecomposition(a).inverse(); }

Complex principal_sqrt(Complex z) {
    Complex r = std::sqrt(z);
    if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
    return r;
}

}  // namespace ptp::linalg
