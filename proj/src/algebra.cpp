#include "tp3/algebra.hpp"

#include <algorithm>
#include <string>

#include "tp3/errors.hpp"

namespace tp3 {

namespace {

void check_index(int i, int dim) {
    if (i < 1 || i > dim)
        throw IndexOutOfRange("basis index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
}

void check_value(const Vector& v, int dim) {
    if (static_cast<int>(v.size()) != dim) throw DimensionMismatch("structure-constant vector has wrong length");
}

// Sorts three indices and returns the permutation sign, or 0 on a repeat.
int sort3(std::array<int, 3>& a) {
    int sign = 1;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < 2; ++i)
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                sign = -sign;
            }
    if (a[0] == a[1] || a[1] == a[2]) return 0;
    return sign;
}

}  // namespace

TriBracket::TriBracket(int dim) : dim_(dim) {
    if (dim < 0) throw DimensionMismatch("negative dimension");
}

void TriBracket::set(int i, int j, int k, Vector value) {
    check_index(i, dim_);
    check_index(j, dim_);
    check_index(k, dim_);
    check_value(value, dim_);
    Key key{i, j, k};
    int sign = sort3(key);
    if (sign == 0) throw Error("bracket with a repeated argument is identically zero");
    if (sign < 0) value = Rational(-1) * value;
    if (is_zero(value))
        table_.erase(key);
    else
        table_[key] = std::move(value);
}

Vector TriBracket::get(int i, int j, int k) const {
    Key key{i, j, k};
    int sign = sort3(key);
    auto it = sign ? table_.find(key) : table_.end();
    if (it == table_.end()) return Vector(dim_);
    return sign > 0 ? it->second : Rational(-1) * it->second;
}

Rational TriBracket::coeff(int i, int j, int k, int s) const { return get(i, j, k)[s - 1]; }

bool operator==(const TriBracket& a, const TriBracket& b) { return a.dim_ == b.dim_ && a.table_ == b.table_; }

CommProduct::CommProduct(int dim) : dim_(dim) {
    if (dim < 0) throw DimensionMismatch("negative dimension");
}

void CommProduct::set(int i, int j, Vector value) {
    check_index(i, dim_);
    check_index(j, dim_);
    check_value(value, dim_);
    Key key{std::min(i, j), std::max(i, j)};
    if (tp3::is_zero(value))
        table_.erase(key);
    else
        table_[key] = std::move(value);
}

Vector CommProduct::get(int i, int j) const {
    auto it = table_.find(Key{std::min(i, j), std::max(i, j)});
    return it == table_.end() ? Vector(dim_) : it->second;
}

Rational CommProduct::coeff(int i, int j, int k) const { return get(i, j)[k - 1]; }

bool operator==(const CommProduct& a, const CommProduct& b) { return a.dim_ == b.dim_ && a.table_ == b.table_; }

TriBracket a3_bracket() {
    TriBracket b(3);
    b.set(1, 2, 3, unit_vector(3, 0));
    return b;
}

Vector bracket_eval(const TriBracket& b, const Vector& x, const Vector& y, const Vector& z) {
    const auto n = static_cast<std::size_t>(b.dim());
    if (x.size() != n || y.size() != n || z.size() != n) throw DimensionMismatch("bracket_eval argument size");
    Vector r(n);
    for (const auto& [key, val] : b.table()) {
        auto [i, j, k] = key;
        --i, --j, --k;
        // Sum over the six orderings of the sorted key with signs.
        Rational c = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                     x[k] * (y[i] * z[j] - y[j] * z[i]);
        if (c.is_zero()) continue;
        for (std::size_t s = 0; s < n; ++s) r[s] += c * val[s];
    }
    return r;
}

Vector product_eval(const CommProduct& p, const Vector& x, const Vector& y) {
    const auto n = static_cast<std::size_t>(p.dim());
    if (x.size() != n || y.size() != n) throw DimensionMismatch("product_eval argument size");
    Vector r(n);
    for (const auto& [key, val] : p.table()) {
        auto [i, j] = key;
        --i, --j;
        Rational c = i == j ? x[i] * y[i] : x[i] * y[j] + x[j] * y[i];
        if (c.is_zero()) continue;
        for (std::size_t s = 0; s < n; ++s) r[s] += c * val[s];
    }
    return r;
}

CheckReport check_fundamental_identity(const TriBracket& b) {
    const int n = b.dim();
    CheckReport rep;
    auto e = [n](int i) { return unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i - 1)); };
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            for (int z = y + 1; z <= n; ++z)
                for (int u = 1; u <= n; ++u)
                    for (int v = u + 1; v <= n; ++v) {
                        Vector left = bracket_eval(b, b.get(x, y, z), e(u), e(v));
                        Vector right = bracket_eval(b, b.get(x, u, v), e(y), e(z)) +
                                       bracket_eval(b, b.get(y, u, v), e(z), e(x)) +
                                       bracket_eval(b, b.get(z, u, v), e(x), e(y));
                        if (left != right) rep.violations.push_back({{x, y, z, u, v}, left, right});
                    }
    rep.passed = rep.violations.empty();
    return rep;
}

CheckReport check_transposed_leibniz(const TriBracket& b, const CommProduct& p) {
    if (b.dim() != p.dim()) throw DimensionMismatch("bracket and product dimensions differ");
    const int n = b.dim();
    CheckReport rep;
    auto e = [n](int i) { return unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i - 1)); };
    for (int u = 1; u <= n; ++u)
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y)
                for (int z = y + 1; z <= n; ++z) {
                    Vector left = Rational(3) * product_eval(p, e(u), b.get(x, y, z));
                    Vector right = bracket_eval(b, p.get(u, x), e(y), e(z)) +
                                   bracket_eval(b, e(x), p.get(u, y), e(z)) +
                                   bracket_eval(b, e(x), e(y), p.get(u, z));
                    if (left != right) rep.violations.push_back({{u, x, y, z}, left, right});
                }
    rep.passed = rep.violations.empty();
    return rep;
}

CommAssocReport check_commutative_associative(const CommProduct& p) {
    const int n = p.dim();
    CommAssocReport rep;
    auto e = [n](int i) { return unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i - 1)); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                Vector left = product_eval(p, p.get(i, j), e(k));
                Vector right = product_eval(p, e(i), p.get(j, k));
                if (left != right) rep.associative.violations.push_back({{i, j, k}, left, right});
            }
    rep.associative.passed = rep.associative.violations.empty();
    return rep;
}

bool in_a3_product_family(const CommProduct& p) {
    if (p.dim() != 3) return false;
    const Vector e11 = p.get(1, 1), e12 = p.get(1, 2), e13 = p.get(1, 3);
    const Rational half(1, 2);
    return is_zero(e11) && e12[1].is_zero() && e12[2].is_zero() && e13[1].is_zero() && e13[2].is_zero() &&
           e12[0] == half * (p.coeff(2, 2, 2) + p.coeff(2, 3, 3)) &&
           e13[0] == half * (p.coeff(2, 3, 2) + p.coeff(3, 3, 3));
}

std::vector<Rational> remark_associativity_residuals(const CommProduct& p) {
    if (!in_a3_product_family(p)) throw ShapeMismatch("product is not in the A3 product family");
    // bIJ is the e_J coordinate of e_2.e_I, cIJ that of e_3.e_3 (I = 3).
    const Rational b21 = p.coeff(2, 2, 1), b22 = p.coeff(2, 2, 2), b23 = p.coeff(2, 2, 3);
    const Rational b31 = p.coeff(2, 3, 1), b32 = p.coeff(2, 3, 2), b33 = p.coeff(2, 3, 3);
    const Rational c31 = p.coeff(3, 3, 1), c32 = p.coeff(3, 3, 2), c33 = p.coeff(3, 3, 3);
    const Rational two(2), three(3);
    return {
        b22 * b22 + two * b23 * b32 + two * b23 * c33 - b33 * b33,
        b22 * b32 + three * b32 * b33 + b33 * c33 - b22 * c33,
        two * b22 * c32 + two * b33 * c32 + c33 * c33 - b32 * b32,
        b21 * c33 + b22 * b31 + two * b23 * c31 - b21 * b32 - three * b31 * b33,
        b32 * b33 - b23 * c32,
        b23 * b32 + b33 * b33 - b22 * b33 - b23 * c33,
        c31 * b22 + two * b21 * c32 + b31 * c33 - c31 * b33 - three * b31 * b32,
        b32 * b32 + b33 * c32 - b22 * c32 - b32 * c33,
    };
}

}  // namespace tp3
