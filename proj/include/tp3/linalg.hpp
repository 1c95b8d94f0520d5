#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "tp3/rational.hpp"

namespace tp3 {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);  // 0-based index i
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
std::ostream& operator<<(std::ostream& os, const Vector& v);

// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& m, const Vector& v);  // m * v (column)
Vector vec_mat(const Vector& v, const Matrix& m);  // v * m (row)

Rational determinant(const Matrix& m);
Matrix invert(const Matrix& m);

struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

// Right null space basis: one vector per free column in ascending order,
// that column set to 1, other free columns 0.
std::vector<Vector> kernel_basis(const Matrix& m);

struct AffineSolution {
    Vector particular;  // free coordinates set to 0
    std::vector<Vector> kernel;
};
// Throws Infeasible when m x = b has no solution.
AffineSolution solve_affine(const Matrix& m, const Vector& b);

}  // namespace tp3
