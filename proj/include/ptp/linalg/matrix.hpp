#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace ptp::linalg {

using Complex = std::complex<double>;

/// Raised when an iterative or rank-revealing routine cannot certify its result.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense integer matrix, row-major. Used for arc-count blocks and for the
/// exact characteristic-polynomial path.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const std::int64_t> data() const noexcept { return data_; }

    IntMatrix transpose() const;
    std::int64_t sum() const;
    bool is_zero() const;
    bool is_symmetric() const;

    /// Principal submatrix with one row/column removed.
    IntMatrix without(std::size_t index) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Dense complex matrix, row-major. Real matrices carry zero imaginary parts.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, Complex fill = 0.0);
    DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows);
    explicit DenseMatrix(const IntMatrix& m);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(std::span<const Complex> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> data() const noexcept { return data_; }

    DenseMatrix transpose() const;
    DenseMatrix adjoint() const;
    DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& src);

    std::vector<Complex> column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const Complex> values);

    double frobenius_norm() const;
    double max_abs() const;
    Complex trace() const;

    bool is_real(double tol = 0.0) const;
    bool is_integer() const;
    /// Throws std::invalid_argument unless every entry is an exact integer.
    IntMatrix to_integer() const;

    DenseMatrix& operator+=(const DenseMatrix& rhs);
    DenseMatrix& operator-=(const DenseMatrix& rhs);
    DenseMatrix& operator*=(Complex s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(Complex s, DenseMatrix a);
std::vector<Complex> operator*(const DenseMatrix& a, std::span<const Complex> x);

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Assembles [[a, b], [c, d]]; block shapes must agree.
DenseMatrix block2x2(const DenseMatrix& a, const DenseMatrix& b,
                     const DenseMatrix& c, const DenseMatrix& d);

/// diag(1, inner): embeds inner into the trailing block of an identity matrix.
DenseMatrix embed_trailing(const DenseMatrix& inner);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

double norm(std::span<const Complex> x);
Complex dot(std::span<const Complex> x, std::span<const Complex> y);  // x^H y

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m);

}  // namespace ptp::linalg
