#include "mrarank/linalg.hpp"

#include "mrarank/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace mrarank {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

std::vector<double> Matrix::column(std::size_t c) const {
    std::vector<double> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const std::vector<double>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::append_row(const std::vector<double>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw DomainError("append_row: width mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

double Matrix::inf_norm() const {
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) s += std::abs((*this)(r, c));
        m = std::max(m, s);
    }
    return m;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const double x = a(i, k);
            if (x == 0.0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
        }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference: shape mismatch");
    Matrix out(a);
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

std::vector<double> Matrix::operator*(const std::vector<double>& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector product: shape mismatch");
    std::vector<double> out(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

namespace {

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form with partial pivoting.
Echelon rref(Matrix m, double rel_tol) {
    const double tol = rel_tol * std::max(m.inf_norm(), 1e-300);
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = row;
        for (std::size_t r = row + 1; r < m.rows(); ++r)
            if (std::abs(m(r, col)) > std::abs(m(best, col))) best = r;
        if (std::abs(m(best, col)) <= tol) {
            for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = 0.0;
            continue;
        }
        if (best != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
        const double p = m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) /= p;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            const double f = m(r, col);
            if (f == 0.0) continue;
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

}  // namespace

std::size_t rank(const Matrix& m, double rel_tol) { return rref(m, rel_tol).pivot_cols.size(); }

std::vector<std::vector<double>> nullspace(const Matrix& m, double rel_tol) {
    const Echelon e = rref(m, rel_tol);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<double>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<double> v(m.cols(), 0.0);
        v[free] = 1.0;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<double> solve(const Matrix& a, const std::vector<double>& b, double rel_tol) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw DomainError("solve: system must be square");
    Matrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    const double tol = rel_tol * std::max(a.inf_norm(), 1e-300);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(aug(r, col)) > std::abs(aug(best, col))) best = r;
        if (std::abs(aug(best, col)) <= tol) throw DomainError("solve: matrix is singular");
        if (best != col)
            for (std::size_t c = 0; c <= n; ++c) std::swap(aug(col, c), aug(best, c));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = aug(r, col) / aug(col, col);
            if (f == 0.0) continue;
            for (std::size_t c = col; c <= n; ++c) aug(r, c) -= f * aug(col, c);
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = aug(i, n);
        for (std::size_t c = i + 1; c < n; ++c) s -= aug(i, c) * x[c];
        x[i] = s / aug(i, i);
    }
    return x;
}

std::vector<double> symmetric_eigenvalues(const Matrix& m) {
    if (m.rows() != m.cols()) throw DomainError("symmetric_eigenvalues: matrix must be square");
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace mrarank
