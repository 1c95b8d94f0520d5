#include "tp3/derivations.hpp"

#include <string>

#include "tp3/errors.hpp"

namespace tp3 {

Matrix build_derivation_system(const DerivationQuery& q) {
    if (q.delta.is_zero()) throw Error("delta must be nonzero");
    const TriBracket& b = q.bracket;
    const int n = b.dim();
    const Rational inv_delta = Rational(1) / q.delta;
    std::vector<Vector> rows;
    auto col = [n](int i, int j) { return static_cast<std::size_t>((i - 1) * n + (j - 1)); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int t = 1; t <= n; ++t) {
                    Vector row(static_cast<std::size_t>(n * n));
                    for (int s = 1; s <= n; ++s) {
                        row[col(i, s)] += b.coeff(s, j, k, t);
                        row[col(j, s)] += b.coeff(i, s, k, t);
                        row[col(k, s)] += b.coeff(i, j, s, t);
                        row[col(s, t)] -= inv_delta * b.coeff(i, j, k, s);
                    }
                    rows.push_back(std::move(row));
                }
    if (rows.empty()) return Matrix(0, static_cast<std::size_t>(n * n));
    return Matrix::from_rows(rows);
}

namespace {

Matrix reshape(const Vector& v, int n) {
    Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = v[static_cast<std::size_t>(r * n + c)];
    return m;
}

Vector flatten(const Matrix& m) {
    Vector v;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

}  // namespace

DerivationSpace delta_derivations(const DerivationQuery& q) {
    DerivationSpace space;
    for (const Vector& v : kernel_basis(build_derivation_system(q)))
        space.basis.push_back(reshape(v, q.bracket.dim()));
    space.dim = static_cast<int>(space.basis.size());
    return space;
}

bool is_delta_derivation(const DerivationQuery& q, const Matrix& phi) {
    const auto n = static_cast<std::size_t>(q.bracket.dim());
    if (phi.rows() != n || phi.cols() != n) throw DimensionMismatch("derivation matrix size");
    return is_zero(mat_vec(build_derivation_system(q), flatten(phi)));
}

Matrix left_multiplication(const CommProduct& p, int i) {
    const int n = p.dim();
    if (i < 1 || i > n) throw IndexOutOfRange("left_multiplication index " + std::to_string(i));
    Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        Vector v = p.get(i, j);
        for (int k = 1; k <= n; ++k) m(j - 1, k - 1) = v[k - 1];
    }
    return m;
}

std::size_t product_unknown_count(int dim) {
    auto n = static_cast<std::size_t>(dim);
    return n * (n + 1) / 2 * n;
}

std::size_t product_unknown_index(int dim, int i, int j, int k) {
    if (i > j) std::swap(i, j);
    // Pairs (i', j') with i' < i contribute dim - i' + 1 entries each.
    std::size_t pair = 0;
    for (int a = 1; a < i; ++a) pair += static_cast<std::size_t>(dim - a + 1);
    pair += static_cast<std::size_t>(j - i);
    return pair * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k - 1);
}

CommProduct product_from_coordinates(int dim, const Vector& coords) {
    if (coords.size() != product_unknown_count(dim)) throw DimensionMismatch("product coordinate vector length");
    CommProduct p(dim);
    for (int i = 1; i <= dim; ++i)
        for (int j = i; j <= dim; ++j) {
            Vector v(static_cast<std::size_t>(dim));
            for (int k = 1; k <= dim; ++k) v[k - 1] = coords[product_unknown_index(dim, i, j, k)];
            p.set(i, j, std::move(v));
        }
    return p;
}

Vector product_coordinates(const CommProduct& p) {
    const int n = p.dim();
    Vector v(product_unknown_count(n));
    for (const auto& [key, val] : p.table())
        for (int k = 1; k <= n; ++k) v[product_unknown_index(n, key[0], key[1], k)] = val[k - 1];
    return v;
}

Matrix build_product_system(const TriBracket& b) {
    const int n = b.dim();
    const Matrix der = build_derivation_system({b, Rational(1, 3)});
    Matrix sys(der.rows() * static_cast<std::size_t>(n), product_unknown_count(n));
    for (int g = 1; g <= n; ++g)
        for (std::size_t r = 0; r < der.rows(); ++r) {
            const std::size_t row = (static_cast<std::size_t>(g) - 1) * der.rows() + r;
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    const Rational& c = der(r, static_cast<std::size_t>((j - 1) * n + (k - 1)));
                    if (!c.is_zero()) sys(row, product_unknown_index(n, g, j, k)) += c;
                }
        }
    return sys;
}

ProductSpace tp_product_space(const TriBracket& b) {
    const int n = b.dim();
    const Matrix sys = build_product_system(b);
    ProductSpace space;
    for (const Vector& v : kernel_basis(sys)) space.basis.push_back(product_from_coordinates(n, v));
    space.dim = static_cast<int>(space.basis.size());
    // Free columns are exactly the non-pivot columns of the echelon form.
    const auto pivots = row_reduce(sys).pivots;
    std::size_t p = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                std::size_t idx = product_unknown_index(n, i, j, k);
                if (p < pivots.size() && pivots[p] == idx) {
                    ++p;
                    continue;
                }
                space.free_coordinates.push_back("beta^" + std::to_string(i) + "_" + std::to_string(j) +
                                                 std::to_string(k));
            }
    return space;
}

}  // namespace tp3
