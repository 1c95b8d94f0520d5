#include "tp3/families.hpp"

#include <algorithm>

#include "tp3/errors.hpp"

namespace tp3 {

namespace {

Vector v3(const Rational& a, const Rational& b, const Rational& c) { return {a, b, c}; }

Rational param(const FamilyInstance& f, const std::string& name) {
    auto it = f.params.find(name);
    return it == f.params.end() ? Rational(0) : it->second;
}

}  // namespace

const std::vector<std::string>& family_parameters(int id) {
    static const std::vector<std::string> a{"alpha"}, at{"alpha", "theta"}, g{"gamma"}, ge{"gamma", "eta"},
        gx{"gamma", "xi"};
    switch (id) {
        case 1: case 3: case 5: case 6: case 7: return a;
        case 2: case 4: case 8: return at;
        case 9: case 11: case 13: case 14: case 15: return g;
        case 10: case 12: return ge;
        case 16: return gx;
        default: throw Error("unknown family T" + std::to_string(id));
    }
}

std::optional<int> parse_family_id(const std::string& name) {
    if (name.size() < 2 || name[0] != 'T') return std::nullopt;
    try {
        std::size_t pos = 0;
        int id = std::stoi(name.substr(1), &pos);
        if (pos + 1 != name.size() || id < 1 || id > 16) return std::nullopt;
        return id;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

CommProduct instantiate_family(const FamilyInstance& f) {
    const auto& names = family_parameters(f.id);
    for (const auto& [k, v] : f.params)
        if (std::find(names.begin(), names.end(), k) == names.end())
            throw Error("family " + f.name() + " has no parameter " + k);
    const Rational a = param(f, "alpha"), t = param(f, "theta"), g = param(f, "gamma"), e = param(f, "eta"),
                   x = param(f, "xi");
    const Rational z(0), two(2), three(3), four(4);
    Vector p22, p23, p33;
    switch (f.id) {
        case 1: p22 = v3(z, a, z); p23 = v3(z, z, -a); p33 = v3(z, -three * a, z); break;
        case 2: p22 = v3(t, a, z); p23 = v3(z, z, -a); p33 = v3(three * t, -three * a, z); break;
        case 3: p22 = v3(-two * a, a, z); p23 = v3(two * a, z, -a); p33 = v3(z, -four * a / three, z); break;
        case 4: p22 = v3(t, a, z); p23 = v3(a, z, -a); p33 = v3(three * t + two * a, -three * a, z); break;
        case 5: p22 = v3(z, a, a); p23 = v3(z, z, -a); p33 = v3(z, -three * a, z); break;
        case 6: p22 = v3(a, a, a); p23 = v3(z, z, -a); p33 = v3(-three * a, -three * a, z); break;
        case 7: p22 = v3(a, a, a); p23 = v3(-a / two, z, -a); p33 = v3(z, -three * a, z); break;
        case 8: p22 = v3(t, a, a); p23 = v3(-three * t / two, z, -a); p33 = v3(three * t, -three * a, z); break;
        case 9: p22 = v3(z, z, -three * g); p23 = v3(z, -g, z); p33 = v3(z, z, g); break;
        case 10: p22 = v3(three * e, z, -three * g); p23 = v3(z, -g, z); p33 = v3(e, z, g); break;
        case 11: p22 = v3(four * g, z, -three * g); p23 = v3(two * g, -g, z); p33 = v3(z, z, g); break;
        case 12: p22 = v3(three * e, z, -three * g); p23 = v3(two * g, -g, z); p33 = v3(e, z, g); break;
        case 13: p22 = v3(z, z, -three * g); p23 = v3(z, -g, z); p33 = v3(z, g, g); break;
        case 14: p22 = v3(two * g, z, -three * g); p23 = v3(z, -g, z); p33 = v3(-g, g, g); break;
        case 15: p22 = v3(-three * g, z, -three * g); p23 = v3(g, -g, z); p33 = v3(z, g, g); break;
        case 16: p22 = v3(-two * x, z, -three * g); p23 = v3(x, -g, z); p33 = v3(-two * x / three, g, g); break;
        default: throw Error("unknown family T" + std::to_string(f.id));
    }
    CommProduct p(3);
    p.set(2, 2, p22);
    p.set(2, 3, p23);
    p.set(3, 3, p33);
    return p;
}

FamilyInstance family_parameters_of(int id, const CommProduct& p) {
    FamilyInstance f{id, {}};
    if (id <= 8) {
        f.params["alpha"] = p.coeff(2, 2, 2);
        if (id == 2 || id == 4 || id == 8) f.params["theta"] = p.coeff(2, 2, 1);
    } else {
        f.params["gamma"] = p.coeff(3, 3, 3);
        if (id == 10 || id == 12) f.params["eta"] = p.coeff(3, 3, 1);
        if (id == 16) f.params["xi"] = p.coeff(2, 3, 1);
    }
    return f;
}

std::optional<CaseId> CaseId::parse(const std::string& text) {
    if (text.size() != 3 || text[1] != '-' || text[0] < '1' || text[0] > '4' || text[2] < 'a' || text[2] > 'd')
        return std::nullopt;
    return CaseId{text[0] - '0', text[2]};
}

AutoMatrix case_automorphism(int family) {
    const Rational h(1, 2), q(3, 4);
    const Rational o(1), z(0);
    switch (family) {
        case 1: case 2: return {{o, z, z}, {z, -h, h}, {z, Rational(-3, 2), -h}};
        case 3: return {{o, z, z}, {3, -h, -q}, {2, o, -h}};
        case 4: return {{o, z, z}, {z, -h, h}, {2, Rational(-3, 2), -h}};
        case 5: case 8: return {{o, z, z}, {z, -2, -1}, {z, 3, o}};
        case 6: return {{o, z, z}, {-3, -2, -1}, {3, 3, o}};
        case 7: return {{o, z, z}, {-2, -2, -1}, {3, 3, o}};
        case 9: return {{o, z, z}, {z, -h, Rational(3, 2)}, {z, -h, -h}};
        case 10: return {{o, z, z}, {z, -h, Rational(-3, 2)}, {z, h, -h}};
        case 11: return {{o, z, z}, {2, -h, Rational(3, 2)}, {2, -h, -h}};
        case 12: return {{o, z, z}, {3, -h, Rational(-3, 2)}, {-1, h, -h}};
        case 13: case 16: return {{o, z, z}, {z, -2, -3}, {z, o, o}};
        case 14: return {{o, z, z}, {o, -2, -3}, {o, o, o}};
        case 15: return {{o, z, z}, {z, -2, -3}, {-1, o, o}};
        default: throw Error("unknown family T" + std::to_string(family));
    }
}

std::optional<CaseId> detect_case(const CommProduct& p) {
    if (!in_a3_product_family(p)) throw ShapeMismatch("product is not in the A3 product family");
    const Rational b22 = p.coeff(2, 2, 2), b23 = p.coeff(2, 2, 3);
    const Rational b32 = p.coeff(2, 3, 2), b33 = p.coeff(2, 3, 3);
    const Rational c32 = p.coeff(3, 3, 2), c33 = p.coeff(3, 3, 3);
    int number = 0;
    if (b32.is_zero() && c33.is_zero() && b33 == -b22 && !b22.is_zero() && !c32.is_zero())
        number = b23.is_zero() ? 1 : 2;
    else if (b22.is_zero() && b33.is_zero() && b32 == -c33 && !b32.is_zero() && !b23.is_zero())
        number = c32.is_zero() ? 3 : 4;
    if (number == 0) return std::nullopt;
    const bool z21 = p.coeff(2, 2, 1).is_zero(), z31 = p.coeff(2, 3, 1).is_zero(), c31 = p.coeff(3, 3, 1).is_zero();
    char sub = z21 ? 'a' : z31 ? 'b' : c31 ? 'c' : 'd';
    return CaseId{number, sub};
}

}  // namespace tp3
