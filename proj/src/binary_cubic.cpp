#include "tp3/binary_cubic.hpp"

#include <algorithm>

#include "tp3/errors.hpp"

namespace tp3 {

namespace {

mpz_class eval_monic(const mpz_class& x, const mpz_class& p2, const mpz_class& p1, const mpz_class& p0) {
    return ((x + p2) * x + p1) * x + p0;
}

// Integer roots of a nondecreasing-or-nonincreasing stretch [lo, hi].
void monotone_roots(const mpz_class& lo, const mpz_class& hi, const mpz_class& p2, const mpz_class& p1,
                    const mpz_class& p0, std::vector<mpz_class>& out) {
    if (lo > hi) return;
    mpz_class flo = eval_monic(lo, p2, p1, p0), fhi = eval_monic(hi, p2, p1, p0);
    if (flo == 0) out.push_back(lo);
    if (fhi == 0) out.push_back(hi);
    if (sgn(flo) * sgn(fhi) >= 0) return;
    mpz_class a = lo, b = hi;
    const int sa = sgn(flo);
    while (b - a > 1) {
        mpz_class mid = (a + b) / 2;
        if (mid <= a) mid = a + 1;
        mpz_class fm = eval_monic(mid, p2, p1, p0);
        if (fm == 0) {
            out.push_back(mid);
            return;
        }
        if (sgn(fm) == sa)
            a = mid;
        else
            b = mid;
    }
}

// Integer roots of X^3 + p2 X^2 + p1 X + p0.
std::vector<mpz_class> integer_roots_monic(const mpz_class& p2, const mpz_class& p1, const mpz_class& p0) {
    mpz_class bound = 1 + std::max({abs(p2), abs(p1), abs(p0)});
    std::vector<mpz_class> found;
    mpz_class disc = p2 * p2 - 3 * p1;  // derivative 3X^2 + 2 p2 X + p1
    if (disc <= 0) {
        monotone_roots(-bound, bound, p2, p1, p0, found);
    } else {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        mpz_class cl, cr;
        mpz_class nl = -p2 - s, nr = -p2 + s;
        mpz_fdiv_q_ui(cl.get_mpz_t(), nl.get_mpz_t(), 3);
        mpz_fdiv_q_ui(cr.get_mpz_t(), nr.get_mpz_t(), 3);
        for (mpz_class x = cl - 2; x <= cl + 2; ++x)
            if (eval_monic(x, p2, p1, p0) == 0) found.push_back(x);
        for (mpz_class x = cr - 2; x <= cr + 2; ++x)
            if (eval_monic(x, p2, p1, p0) == 0) found.push_back(x);
        monotone_roots(-bound, std::min(bound, mpz_class(cl - 3)), p2, p1, p0, found);
        monotone_roots(cl + 3, cr - 3, p2, p1, p0, found);
        monotone_roots(std::max(mpz_class(-bound), mpz_class(cr + 3)), bound, p2, p1, p0, found);
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace

std::vector<Rational> rational_roots_cubic(const Rational& a3, const Rational& a2, const Rational& a1,
                                           const Rational& a0) {
    if (a3.is_zero()) throw Error("leading coefficient is zero");
    mpz_class l = 1;
    for (const Rational* r : {&a3, &a2, &a1, &a0}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->den().get_mpz_t());
    auto scaled = [&](const Rational& r) -> mpz_class { return r.num() * (l / r.den()); };
    const mpz_class A = scaled(a3), B = scaled(a2), C = scaled(a1), D = scaled(a0);
    // X = Y / A turns A X^3 + B X^2 + C X + D into Y^3 + B Y^2 + A C Y + A^2 D.
    std::vector<Rational> roots;
    for (const mpz_class& y : integer_roots_monic(B, A * C, A * A * D)) roots.emplace_back(y, A);
    std::sort(roots.begin(), roots.end());
    return roots;
}

QuadAlgebra::QuadAlgebra(Rational d) : d_(std::move(d)) {
    if (d_.is_zero()) throw Error("quadratic algebra needs a nonzero radicand");
}

QuadElt QuadAlgebra::mul(const QuadElt& x, const QuadElt& y) const {
    return {x.a * y.a + d_ * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadElt QuadAlgebra::inv(const QuadElt& x) const {
    Rational n = norm(x);
    if (n.is_zero()) throw Error("element of norm zero is not invertible");
    return {x.a / n, -x.b / n};
}

Rational BinaryCubic::discriminant() const {
    const Rational &a = f0, &b = f1, &c = f2, &d = f3;
    return b * b * c * c - Rational(4) * a * c * c * c - Rational(4) * b * b * b * d - Rational(27) * a * a * d * d +
           Rational(18) * a * b * c * d;
}

std::array<Rational, 3> BinaryCubic::hessian() const {
    return {f1 * f1 - Rational(3) * f0 * f2, f1 * f2 - Rational(9) * f0 * f3, f2 * f2 - Rational(3) * f1 * f3};
}

BinaryCubic BinaryCubic::compose(const Matrix& p) const {
    // X = p00 x + p10 y, Y = p01 x + p11 y; forms are coefficient lists in
    // descending powers of x.
    using Form = std::vector<Rational>;
    auto mul = [](const Form& u, const Form& v) {
        Form r(u.size() + v.size() - 1);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) r[i + j] += u[i] * v[j];
        return r;
    };
    const Form X{p(0, 0), p(1, 0)}, Y{p(0, 1), p(1, 1)};
    const Form X2 = mul(X, X), Y2 = mul(Y, Y);
    const std::array<Form, 4> terms{mul(X2, X), mul(X2, Y), mul(X, Y2), mul(Y2, Y)};
    const std::array<Rational, 4> f{f0, f1, f2, f3};
    BinaryCubic out;
    std::array<Rational*, 4> dst{&out.f0, &out.f1, &out.f2, &out.f3};
    for (int t = 0; t < 4; ++t)
        for (int k = 0; k < 4; ++k) *dst[k] += f[t] * terms[t][k];
    return out;
}

BinaryCubic block_cubic(const CommProduct& p) {
    if (p.dim() != 3) throw ShapeMismatch("block cubic needs a three-dimensional product");
    return {p.coeff(2, 2, 3), Rational(2) * p.coeff(2, 3, 3) - p.coeff(2, 2, 2),
            p.coeff(3, 3, 3) - Rational(2) * p.coeff(2, 3, 2), -p.coeff(3, 3, 2)};
}

namespace {

// Data of F = c L^3 + conj(c) conj(L)^3 with L = x - zeta y, where zeta is a
// root of the Hessian.
struct HessianSplit {
    QuadElt zeta;
    QuadElt c;
};

QuadElt eval_at(const QuadAlgebra& k, const BinaryCubic& f, const QuadElt& z) {
    QuadElt r{f.f0, 0};
    r = k.add(k.mul(r, z), {f.f1, 0});
    r = k.add(k.mul(r, z), {f.f2, 0});
    r = k.add(k.mul(r, z), {f.f3, 0});
    return r;
}

std::optional<HessianSplit> split(const QuadAlgebra& k, const BinaryCubic& f, const Rational& scale) {
    auto [h2, h1, h0] = f.hessian();
    if (h2.is_zero()) return std::nullopt;
    const Rational two(2);
    HessianSplit s;
    s.zeta = {-h1 / (two * h2), scale / (two * h2)};
    QuadElt zb = k.conj(s.zeta);
    QuadElt diff = k.sub(zb, s.zeta);
    QuadElt cube = k.mul(k.mul(diff, diff), diff);
    s.c = k.div(eval_at(k, f, zb), cube);
    return s;
}

// Equivalences when both Hessians have a nonzero x^2 coefficient.
std::vector<Matrix> equivalences_affine(const BinaryCubic& f, const BinaryCubic& g) {
    std::vector<Matrix> out;
    auto hf = f.hessian(), hg = g.hessian();
    const Rational df = hf[1] * hf[1] - Rational(4) * hf[0] * hf[2];
    const Rational dg = hg[1] * hg[1] - Rational(4) * hg[0] * hg[2];
    if (df.is_zero() || dg.is_zero()) return out;
    auto ratio = exact_root(dg / df, 2);
    if (!ratio) return out;
    const QuadAlgebra k(df);
    auto sf = split(k, f, Rational(1));
    auto sg = split(k, g, *ratio);
    if (!sf || !sg) return out;

    const QuadElt det_f = k.sub(sf->zeta, k.conj(sf->zeta));
    for (bool swap : {false, true}) {
        const QuadElt zt = swap ? k.conj(sg->zeta) : sg->zeta;
        const QuadElt ct = swap ? k.conj(sg->c) : sg->c;
        const QuadElt rho = k.div(ct, sf->c);
        const QuadElt det_g = k.sub(zt, k.conj(zt));
        const QuadElt nq = k.div(det_f, det_g);
        if (!nq.b.is_zero()) continue;
        const Rational n = nq.a;
        if (k.norm(rho) != n * n * n) continue;
        // mu^3 = rho with norm n forces T = trace(mu) to solve T^3 - 3nT = trace(rho).
        std::vector<QuadElt> mus;
        for (const Rational& t : rational_roots_cubic(1, 0, Rational(-3) * n, -k.trace(rho))) {
            if (t * t != n) {
                mus.push_back(k.div({rho.a + t * n, rho.b}, {t * t - n, 0}));
            } else if (auto s = exact_root(Rational(-3) * n / k.d(), 2)) {
                mus.push_back({t / Rational(2), *s / Rational(2)});
                mus.push_back({t / Rational(2), -*s / Rational(2)});
            }
        }
        for (const QuadElt& mu : mus) {
            if (k.mul(k.mul(mu, mu), mu) != rho || k.norm(mu) != n) continue;
            // P [l, conj l] = [mu l', conj(mu) conj(l')] with l = (1, -zeta).
            const QuadElt mub = k.conj(mu);
            const QuadElt zf = sf->zeta, zfb = k.conj(zf), ztb = k.conj(zt);
            const QuadElt inv_det = k.inv(det_f);
            // [l, conj l]^-1 = (1/det) [[-conj zeta, -1], [zeta, 1]].
            const std::array<std::array<QuadElt, 2>, 2> linv{
                {{k.mul(inv_det, {-zfb.a, -zfb.b}), k.mul(inv_det, {-1, 0})},
                 {k.mul(inv_det, zf), inv_det}}};
            const std::array<std::array<QuadElt, 2>, 2> rhs{
                {{mu, mub}, {k.mul(mu, {-zt.a, -zt.b}), k.mul(mub, {-ztb.a, -ztb.b})}}};
            Matrix p(2, 2);
            bool rational = true;
            for (int r = 0; r < 2 && rational; ++r)
                for (int c = 0; c < 2; ++c) {
                    QuadElt e = k.add(k.mul(rhs[r][0], linv[0][c]), k.mul(rhs[r][1], linv[1][c]));
                    if (!e.b.is_zero()) {
                        rational = false;
                        break;
                    }
                    p(r, c) = e.a;
                }
            if (!rational || determinant(p) != Rational(1) || f.compose(p) != g) continue;
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
    }
    return out;
}

}  // namespace

std::vector<Matrix> sl2_equivalences(const BinaryCubic& f, const BinaryCubic& g) {
    // Shear so that (1, 0) is not a Hessian root: f.compose(A).compose(X) = g.compose(C)
    // gives g = f.compose(C^-1 X A).
    auto shear = [](const BinaryCubic& h) {
        for (long s = 0;; ++s) {
            Matrix a{{1, Rational(s)}, {0, 1}};
            if (!h.compose(a).hessian()[0].is_zero() || s > 3) return a;
        }
    };
    const Matrix a = shear(f), c = shear(g);
    const Matrix c_inv = invert(c);
    std::vector<Matrix> out;
    for (const Matrix& x : equivalences_affine(f.compose(a), g.compose(c))) {
        Matrix p = c_inv * x * a;
        if (f.compose(p) == g && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace tp3
