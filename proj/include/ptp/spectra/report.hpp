#pragma once

#include "ptp/linalg/poly.hpp"

#include <json.hpp>

namespace ptp::spectra {

using linalg::Complex;
using linalg::Poly;

/// Coefficient-wise comparison of two polynomials.
struct Report {
    Poly lhs;
    Poly rhs;
    double max_abs_diff = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Compares with linalg::poly_eq; a degree mismatch is a failed report with
/// infinite difference.
Report compare(Poly lhs, Poly rhs, double tol);

/// Coefficients in ascending order. Exact coefficients are JSON integers when
/// they fit in 64 bits and decimal strings otherwise; floating coefficients
/// are reals, or [re, im] pairs when the imaginary part is not negligible.
nlohmann::json poly_to_json(const Poly& p);

/// { "lhs": [...], "rhs": [...], "max_abs_diff": real, "pass": bool }
nlohmann::json to_json(const Report& r);

/// A real when the imaginary part is negligible relative to the modulus,
/// otherwise [re, im].
nlohmann::json scalar_to_json(Complex z);

}  // namespace ptp::spectra
