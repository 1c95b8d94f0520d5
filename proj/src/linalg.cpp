#include "tp3/linalg.hpp"

#include <algorithm>
#include <string>

#include "tp3/errors.hpp"

namespace tp3 {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector r(v);
    for (auto& x : r) x *= s;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os << ')';
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", " : "") << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: " + std::to_string(a.cols()) + " columns vs " +
                                std::to_string(b.rows()) + " rows");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Vector mat_vec(const Matrix& m, const Vector& v) {
    if (m.cols() != v.size()) throw DimensionMismatch("mat_vec size mismatch");
    Vector r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

Vector vec_mat(const Vector& v, const Matrix& m) {
    if (m.rows() != v.size()) throw DimensionMismatch("vec_mat size mismatch");
    Vector r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

// Bareiss elimination on an integer matrix obtained by clearing each row's
// denominators; the row scale factors are divided back out at the end.
Rational determinant(const Matrix& m) {
    if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).den().get_mpz_t());
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).num() * (l / m(r, c).den());
        scale *= l;
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return Rational(sign * a[n - 1][n - 1], scale);
}

Echelon row_reduce(const Matrix& m) {
    Echelon e{m, {}};
    Matrix& a = e.rref;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        Rational inv = Rational(1) / a(row, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, c).is_zero()) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        e.pivots.push_back(c);
        ++row;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

namespace {

std::vector<std::size_t> free_columns(const std::vector<std::size_t>& pivots, std::size_t cols) {
    std::vector<std::size_t> free;
    std::size_t p = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (p < pivots.size() && pivots[p] == c)
            ++p;
        else
            free.push_back(c);
    }
    return free;
}

}  // namespace

std::vector<Vector> kernel_basis(const Matrix& m) {
    Echelon e = row_reduce(m);
    std::vector<Vector> basis;
    for (std::size_t f : free_columns(e.pivots, m.cols())) {
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix invert(const Matrix& m) {
    if (!m.square()) throw DimensionMismatch("invert of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    Echelon e = row_reduce(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Singular();
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
    return inv;
}

AffineSolution solve_affine(const Matrix& m, const Vector& b) {
    if (m.rows() != b.size()) throw DimensionMismatch("solve_affine: rhs size mismatch");
    const std::size_t n = m.cols();
    Matrix aug(m.rows(), n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n) = b[r];
    }
    Echelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == n) throw Infeasible();
    AffineSolution s{Vector(n), {}};
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.particular[e.pivots[r]] = e.rref(r, n);
    for (std::size_t f : free_columns(e.pivots, n)) {
        Vector v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
        s.kernel.push_back(std::move(v));
    }
    return s;
}

}  // namespace tp3
