#pragma once

#include <cstddef>
#include <vector>

namespace mrarank {

/// Row-major dense matrix used by the validation code.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<double>& data() const noexcept { return data_; }

    std::vector<double> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<double>& v);
    void append_row(const std::vector<double>& v);

    Matrix transpose() const;
    double inf_norm() const;  // max absolute row sum
    double max_abs() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    std::vector<double> operator*(const std::vector<double>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Default relative rank tolerance: pivots below tol * ||M||_inf count as zero.
inline constexpr double kRankTolerance = 1e-8;

std::size_t rank(const Matrix& m, double rel_tol = kRankTolerance);

// Orthonormal-free basis of ker m, one vector per free column of the reduced
// row echelon form.
std::vector<std::vector<double>> nullspace(const Matrix& m, double rel_tol = kRankTolerance);

// Solves the square system a x = b by partial pivoting. Throws DomainError
// when a is numerically singular.
std::vector<double> solve(const Matrix& a, const std::vector<double>& b, double rel_tol = kRankTolerance);

// Eigenvalues of a symmetric matrix in ascending order.
std::vector<double> symmetric_eigenvalues(const Matrix& m);

double dot(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace mrarank
