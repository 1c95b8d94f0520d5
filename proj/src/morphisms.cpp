#include "tp3/morphisms.hpp"

#include <string>

#include "tp3/errors.hpp"

namespace tp3 {

namespace {

void check_square(const AutoMatrix& m, int dim) {
    const auto n = static_cast<std::size_t>(dim);
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("map must be " + std::to_string(dim) + "x" + std::to_string(dim));
}

}  // namespace

CheckReport is_bracket_automorphism(const TriBracket& b, const AutoMatrix& m) {
    const int n = b.dim();
    check_square(m, n);
    CheckReport rep;
    if (determinant(m).is_zero()) {
        rep.passed = false;
        rep.violations.push_back({{}, {}, {}});
        return rep;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                Vector left = bracket_eval(b, m.row(i - 1), m.row(j - 1), m.row(k - 1));
                Vector right = vec_mat(b.get(i, j, k), m);
                if (left != right) rep.violations.push_back({{i, j, k}, left, right});
            }
    rep.passed = rep.violations.empty();
    return rep;
}

bool a3_automorphism_check(const AutoMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) return false;
    return m(0, 1).is_zero() && m(0, 2).is_zero() && !m(0, 0).is_zero() &&
           m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1) == Rational(1);
}

CommProduct transport_product(const CommProduct& p, const AutoMatrix& m) {
    const int n = p.dim();
    check_square(m, n);
    const Matrix inv = invert(m);
    CommProduct out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            out.set(i, j, vec_mat(product_eval(p, inv.row(i - 1), inv.row(j - 1)), m));
    return out;
}

TriBracket transport_bracket(const TriBracket& b, const AutoMatrix& m) {
    const int n = b.dim();
    check_square(m, n);
    const Matrix inv = invert(m);
    TriBracket out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                out.set(i, j, k, vec_mat(bracket_eval(b, inv.row(i - 1), inv.row(j - 1), inv.row(k - 1)), m));
    return out;
}

std::vector<Rational> eleven_equation_residuals(const CommProduct& p, const AutoMatrix& m) {
    if (!in_a3_product_family(p)) throw ShapeMismatch("product is not in the A3 product family");
    if (!a3_automorphism_check(m)) throw NotAutomorphism("matrix is not an automorphism of A3");
    const Rational b21 = p.coeff(2, 2, 1), b22 = p.coeff(2, 2, 2), b23 = p.coeff(2, 2, 3);
    const Rational b31 = p.coeff(2, 3, 1), b32 = p.coeff(2, 3, 2), b33 = p.coeff(2, 3, 3);
    const Rational c31 = p.coeff(3, 3, 1), c32 = p.coeff(3, 3, 2), c33 = p.coeff(3, 3, 3);
    const Rational l11 = m(0, 0), l21 = m(1, 0), l22 = m(1, 1), l23 = m(1, 2);
    const Rational l31 = m(2, 0), l32 = m(2, 1), l33 = m(2, 2);
    const Rational two(2), one(1), half(1, 2);
    const Rational w = two * l22 * l33 - one;
    const Rational inv11 = one / l11;
    std::vector<Rational> r;
    r.push_back(b22 + b33 - (l33 * (b22 + b33) - l23 * (b32 + c33)));
    r.push_back(b32 + c33 - (-l32 * (b22 + b33) + l22 * (b32 + c33)));
    r.push_back(b22 - (l22 * l22 * l33 * b22 - l22 * l22 * l32 * b23 + two * l22 * l23 * l33 * b32 -
                       two * l22 * l23 * l32 * b33 + l23 * l23 * l33 * c32 - l23 * l23 * l32 * c33));
    r.push_back(b23 - (-l22 * l22 * l23 * b22 + l22 * l22 * l22 * b23 - two * l22 * l23 * l23 * b32 +
                       two * l22 * l22 * l23 * b33 - l23 * l23 * l23 * c32 + l22 * l23 * l23 * c33));
    r.push_back(b32 - (l22 * l32 * l33 * b22 - l22 * l32 * l32 * b23 + l33 * w * b32 - l32 * w * b33 +
                       l23 * l33 * l33 * c32 - l23 * l32 * l33 * c33));
    r.push_back(b33 - (-l22 * l23 * l32 * b22 + l22 * l22 * l32 * b23 - l23 * w * b32 + l22 * w * b33 -
                       l23 * l23 * l33 * c32 + l22 * l23 * l33 * c33));
    r.push_back(c32 - (l32 * l32 * l33 * b22 - l32 * l32 * l32 * b23 + two * l32 * l33 * l33 * b32 -
                       two * l32 * l32 * l33 * b33 + l33 * l33 * l33 * c32 - l32 * l33 * l33 * c33));
    r.push_back(c33 - (-l23 * l32 * l32 * b22 + l22 * l32 * l32 * b23 - two * l23 * l32 * l33 * b32 +
                       two * l22 * l32 * l33 * b33 - l23 * l33 * l33 * c32 + l22 * l33 * l33 * c33));
    r.push_back(b21 - inv11 * (l22 * l22 * b21 - l31 * b23 + l21 * b33 + two * l22 * l23 * b31 + l23 * l23 * c31));
    r.push_back(b31 - inv11 * (half * (l31 * (b22 - b33) + l21 * (c33 - b32)) + l22 * l32 * b21 +
                               (l22 * l33 + l23 * l32) * b31 + l23 * l33 * c31));
    r.push_back(c31 - inv11 * (l32 * l32 * b21 + two * l32 * l33 * b31 + l31 * b32 + l33 * l33 * c31 - l21 * c32));
    return r;
}

}  // namespace tp3
