#pragma once

#include "ptp/linalg/matrix.hpp"

#include <random>

namespace ptp::testing {

using linalg::Complex;
using linalg::DenseMatrix;
using linalg::IntMatrix;

inline IntMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                   int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

inline DenseMatrix random_complex_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> d(0.0, 1.0);
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Complex(d(rng), d(rng));
    return m;
}

inline DenseMatrix random_real_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> d(0.0, 1.0);
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

inline std::size_t random_size(std::mt19937& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace ptp::testing
