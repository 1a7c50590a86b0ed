#pragma once

#include "ptp/linalg/matrix.hpp"

#include <span>

namespace ptp::linalg {

/// Bottleneck distance between two multisets of complex numbers: the least d
/// such that a perfect matching pairs every element with a partner at
/// distance ≤ d. Infinity when the sizes differ.
double multiset_distance(std::span<const Complex> a, std::span<const Complex> b);

/// multiset_distance(a, b) ≤ tol.
bool multisets_close(std::span<const Complex> a, std::span<const Complex> b, double tol);

}  // namespace ptp::linalg
