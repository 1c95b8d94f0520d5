#pragma once

#include <vector>

#include "tp3/algebra.hpp"
#include "tp3/linalg.hpp"

namespace tp3 {

// Rational roots of a3 X^3 + a2 X^2 + a1 X + a0 (a3 != 0), ascending.
std::vector<Rational> rational_roots_cubic(const Rational& a3, const Rational& a2, const Rational& a1,
                                           const Rational& a0);

// Element a + b t of Q[t]/(t^2 - d). For square d the ring splits as Q x Q
// and elements of norm zero are not invertible.
struct QuadElt {
    Rational a, b;
    friend bool operator==(const QuadElt&, const QuadElt&) = default;
};

class QuadAlgebra {
public:
    explicit QuadAlgebra(Rational d);

    const Rational& d() const { return d_; }
    QuadElt add(const QuadElt& x, const QuadElt& y) const { return {x.a + y.a, x.b + y.b}; }
    QuadElt sub(const QuadElt& x, const QuadElt& y) const { return {x.a - y.a, x.b - y.b}; }
    QuadElt mul(const QuadElt& x, const QuadElt& y) const;
    QuadElt inv(const QuadElt& x) const;
    QuadElt div(const QuadElt& x, const QuadElt& y) const { return mul(x, inv(y)); }
    QuadElt conj(const QuadElt& x) const { return {x.a, -x.b}; }
    Rational norm(const QuadElt& x) const { return x.a * x.a - d_ * x.b * x.b; }
    Rational trace(const QuadElt& x) const { return Rational(2) * x.a; }

private:
    Rational d_;
};

// f0 x^3 + f1 x^2 y + f2 x y^2 + f3 y^3.
struct BinaryCubic {
    Rational f0, f1, f2, f3;

    Rational discriminant() const;
    // h2 x^2 + h1 x y + h0 y^2, a nonzero multiple of the Hessian covariant.
    std::array<Rational, 3> hessian() const;
    // The form u -> F(u P) for a row vector u = (x, y).
    BinaryCubic compose(const Matrix& p) const;
    friend bool operator==(const BinaryCubic&, const BinaryCubic&) = default;
};

// The cubic u -> w(u, m(u,u)) of the e2,e3 block m of a three-dimensional
// product, where w is the area form with w(e2,e3) = 1. It determines the
// trace-free part of the block, and transporting by an automorphism whose
// lower block B has determinant 1 replaces F by u -> F(u B^-1).
BinaryCubic block_cubic(const CommProduct& p);

// Every P in SL2(Q) with G(u) = F(u P), assuming both have nonzero
// discriminant. Returned in a deterministic order.
std::vector<Matrix> sl2_equivalences(const BinaryCubic& f, const BinaryCubic& g);

}  // namespace tp3
