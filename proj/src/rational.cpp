#include "tp3/rational.hpp"

#include <cctype>

#include "tp3/errors.hpp"

namespace tp3 {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view n = text.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(n) || !valid_integer(d) || d.front() == '-' || d.front() == '+')
        throw ParseError("bad rational \"" + std::string(text) + "\"");
    mpz_class den = parse_integer(d);
    if (den == 0) throw ParseError("bad rational \"" + std::string(text) + "\": zero denominator");
    return Rational(parse_integer(n), den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned k) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), k);
    return Rational(n, d);
}

std::optional<Rational> exact_root(const Rational& r, unsigned k) {
    if (k == 0) return std::nullopt;
    if (r.sign() < 0 && k % 2 == 0) return std::nullopt;
    mpz_class n = r.num(), d = r.den();
    bool neg = n < 0;
    if (neg) n = -n;
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return std::nullopt;
    if (neg) rn = -rn;
    return Rational(rn, rd);
}

}  // namespace tp3
