#include "ptp/spectra/report.hpp"

#include <cmath>
#include <limits>

namespace ptp::spectra {

using nlohmann::json;

namespace {

// Imaginary parts at or below this fraction of the polynomial scale are
// reported as reals.
constexpr double kImagDust = 1e-9;

json real_or_pair(Complex z, double scale) {
    if (std::abs(z.imag()) <= kImagDust * scale) return z.real();
    return json::array({z.real(), z.imag()});
}

}  // namespace

Report compare(Poly lhs, Poly rhs, double tol) {
    Report r;
    r.tolerance = tol;
    if (lhs.degree() != rhs.degree()) {
        r.max_abs_diff = std::numeric_limits<double>::infinity();
        r.pass = false;
    } else {
        r.max_abs_diff = linalg::poly_max_abs_diff(lhs, rhs);
        r.pass = linalg::poly_eq(lhs, rhs, tol);
    }
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

json poly_to_json(const Poly& p) {
    json out = json::array();
    if (p.is_exact()) {
        for (const auto& c : p.exact_coeffs()) {
            if (c >= std::numeric_limits<std::int64_t>::min() &&
                c <= std::numeric_limits<std::int64_t>::max())
                out.push_back(static_cast<std::int64_t>(c));
            else
                out.push_back(c.str());
        }
        return out;
    }
    const double scale = std::max(1.0, p.max_abs_coeff());
    for (const auto& c : p.coeffs()) out.push_back(real_or_pair(c, scale));
    return out;
}

json to_json(const Report& r) {
    json out;
    out["lhs"] = poly_to_json(r.lhs);
    out["rhs"] = poly_to_json(r.rhs);
    // JSON has no infinity; a degree mismatch serializes as null.
    if (std::isfinite(r.max_abs_diff))
        out["max_abs_diff"] = r.max_abs_diff;
    else
        out["max_abs_diff"] = nullptr;
    out["pass"] = r.pass;
    return out;
}

json scalar_to_json(Complex z) { return real_or_pair(z, std::max(1.0, std::abs(z))); }

}  // namespace ptp::spectra
