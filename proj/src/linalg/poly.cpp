#include "ptp/linalg/poly.hpp"

#include "ptp/linalg/decompositions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ptp::linalg {

namespace {

std::vector<Complex> to_complex(const std::vector<BigInt>& c) {
    std::vector<Complex> out;
    out.reserve(c.size());
    for (const auto& v : c) out.emplace_back(v.convert_to<double>(), 0.0);
    return out;
}

double scale_of(const Poly& p, const Poly& q) {
    return std::max({1.0, p.max_abs_coeff(), q.max_abs_coeff()});
}

}  // namespace

double default_poly_tolerance(std::size_t degree) { return degree <= 20 ? 1e-8 : 1e-6; }

Poly::Poly() : exact_{BigInt(1)}, floating_{Complex(1.0)} {}

Poly Poly::exact(std::vector<BigInt> ascending) {
    if (ascending.empty()) ascending.emplace_back(0);
    Poly p;
    p.kind_ = Kind::exact;
    p.floating_ = to_complex(ascending);
    p.exact_ = std::move(ascending);
    return p;
}

Poly Poly::floating(std::vector<Complex> ascending) {
    if (ascending.empty()) ascending.emplace_back(0.0);
    Poly p;
    p.kind_ = Kind::floating;
    p.exact_.clear();
    p.floating_ = std::move(ascending);
    return p;
}

Poly Poly::from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{Complex(1.0)};
    for (const auto& r : roots) {
        std::vector<Complex> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return Poly::floating(std::move(c));
}

std::size_t Poly::degree() const noexcept { return floating_.size() - 1; }

const std::vector<BigInt>& Poly::exact_coeffs() const {
    if (kind_ != Kind::exact) throw std::logic_error("Poly: not an exact polynomial");
    return exact_;
}

double Poly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : floating_) m = std::max(m, std::abs(c));
    return m;
}

Complex Poly::operator()(Complex x) const {
    Complex acc = 0.0;
    for (std::size_t k = floating_.size(); k-- > 0;) acc = acc * x + floating_[k];
    return acc;
}

Poly Poly::real_part_checked(double tol) const {
    if (kind_ == Kind::exact) return *this;
    std::vector<Complex> c(floating_.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto& v = floating_[k];
        if (std::abs(v.imag()) > tol * std::max(1.0, std::abs(v)))
            throw NumericalError("characteristic polynomial of a real matrix has a complex coefficient");
        c[k] = v.real();
    }
    return Poly::floating(std::move(c));
}

std::string Poly::to_string(char var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = floating_.size(); k-- > 0;) {
        std::string mag;
        bool negative = false;
        if (kind_ == Kind::exact) {
            if (exact_[k] == 0) continue;
            negative = exact_[k] < 0;
            BigInt a = negative ? BigInt(-exact_[k]) : exact_[k];
            if (a != 1 || k == 0) mag = a.str();
        } else {
            const Complex v = floating_[k];
            if (v == Complex(0.0)) continue;
            std::ostringstream m;
            m.precision(12);
            if (v.imag() == 0.0) {
                negative = v.real() < 0;
                const double a = std::abs(v.real());
                if (a != 1.0 || k == 0) m << a;
            } else {
                m << '(' << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i)";
            }
            mag = m.str();
        }
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        os << mag;
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == Poly::Kind::exact) return a.exact_ == b.exact_;
    return a.floating_ == b.floating_;
}

Poly poly_mul(const Poly& p, const Poly& q) {
    if (p.is_exact() && q.is_exact()) {
        const auto& a = p.exact_coeffs();
        const auto& b = q.exact_coeffs();
        std::vector<BigInt> c(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        }
        return Poly::exact(std::move(c));
    }
    const auto a = p.coeffs();
    const auto b = q.coeffs();
    std::vector<Complex> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return Poly::floating(std::move(c));
}

Poly poly_pow(const Poly& p, std::size_t e) {
    Poly result = p.is_exact() ? Poly() : Poly::floating({1.0});
    Poly base = p;
    while (e > 0) {
        if (e & 1U) result = poly_mul(result, base);
        e >>= 1U;
        if (e > 0) base = poly_mul(base, base);
    }
    return result;
}

Poly linear_factor(Complex a) { return Poly::floating({-a, 1.0}); }

Poly poly_scale(const Poly& p, Complex s) {
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& v : c) v *= s;
    return Poly::floating(std::move(c));
}

Poly poly_sub(const Poly& p, const Poly& q) {
    const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    if (p.is_exact() && q.is_exact()) {
        std::vector<BigInt> c(n);
        for (std::size_t k = 0; k < p.exact_coeffs().size(); ++k) c[k] += p.exact_coeffs()[k];
        for (std::size_t k = 0; k < q.exact_coeffs().size(); ++k) c[k] -= q.exact_coeffs()[k];
        while (c.size() > 1 && c.back() == 0) c.pop_back();
        return Poly::exact(std::move(c));
    }
    std::vector<Complex> c(n, 0.0);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[k] += p.coeffs()[k];
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) c[k] -= q.coeffs()[k];
    while (c.size() > 1 && c.back() == Complex(0.0)) c.pop_back();
    return Poly::floating(std::move(c));
}

double poly_max_abs_diff(const Poly& p, const Poly& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("poly comparison: degree mismatch (" +
                                    std::to_string(p.degree()) + " vs " +
                                    std::to_string(q.degree()) + ")");
    double d = 0.0;
    if (p.is_exact() && q.is_exact()) {
        for (std::size_t k = 0; k < p.exact_coeffs().size(); ++k) {
            const BigInt diff = p.exact_coeffs()[k] - q.exact_coeffs()[k];
            d = std::max(d, std::abs(diff.convert_to<double>()));
        }
        return d;
    }
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        d = std::max(d, std::abs(p.coeffs()[k] - q.coeffs()[k]));
    return d;
}

bool poly_eq(const Poly& p, const Poly& q, double tol) {
    return poly_max_abs_diff(p, q) <= tol * scale_of(p, q);
}

std::size_t zero_root_multiplicity(const Poly& p) {
    std::size_t k = 0;
    if (p.is_exact()) {
        while (k < p.exact_coeffs().size() && p.exact_coeffs()[k] == 0) ++k;
    } else {
        while (k < p.coeffs().size() && p.coeffs()[k] == Complex(0.0)) ++k;
    }
    return k;
}

Poly char_poly(const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("char_poly: matrix is not square");
    const std::size_t n = a.rows();
    struct Entry {
        std::size_t row, col;
        std::int64_t value;
    };
    std::vector<Entry> nz;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) != 0) nz.push_back({i, j, a(i, j)});

    // c[n] = 1; M_1 = I; for k = 1..n: AM = A·M_k, c[n-k] = -tr(AM)/k, M_{k+1} = AM + c[n-k]·I.
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    std::vector<BigInt> m(n * n), am(n * n);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        std::fill(am.begin(), am.end(), BigInt(0));
        for (const auto& e : nz) {
            const BigInt* src = &m[e.col * n];
            BigInt* dst = &am[e.row * n];
            for (std::size_t l = 0; l < n; ++l)
                if (!src[l].is_zero()) dst[l] += e.value * src[l];
        }
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
        BigInt q, r;
        boost::multiprecision::divide_qr(tr, BigInt(k), q, r);
        if (r != 0) throw std::logic_error("Faddeev-LeVerrier: inexact trace division");
        c[n - k] = -q;
        for (std::size_t i = 0; i < n; ++i) am[i * n + i] += c[n - k];
        std::swap(m, am);
    }
    return Poly::exact(std::move(c));
}

Poly char_poly(const DenseMatrix& m, CharPolyMode mode) {
    if (!m.square()) throw std::invalid_argument("char_poly: matrix is not square");
    if (mode == CharPolyMode::exact) {
        if (!m.is_integer())
            throw std::invalid_argument("char_poly: exact mode requires integer entries");
        return char_poly(m.to_integer());
    }
    const auto eig = eigenvalues(m);
    Poly p = Poly::from_roots(eig);
    if (m.is_real()) p = p.real_part_checked(1e-8);
    return p;
}

Poly char_poly_auto(const DenseMatrix& m) {
    return char_poly(m, m.is_integer() ? CharPolyMode::exact : CharPolyMode::floating);
}

}  // namespace ptp::linalg
