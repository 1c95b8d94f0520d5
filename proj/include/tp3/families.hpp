#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tp3/algebra.hpp"
#include "tp3/morphisms.hpp"

namespace tp3 {

// Families T1..T16 are numbered 1..16.
struct FamilyInstance {
    int id = 0;
    std::map<std::string, Rational> params;  // alpha, theta, gamma, eta, xi

    std::string name() const { return "T" + std::to_string(id); }
    friend bool operator==(const FamilyInstance&, const FamilyInstance&) = default;
};

// Parameter names of family id in canonical order: scale first.
const std::vector<std::string>& family_parameters(int id);
std::optional<int> parse_family_id(const std::string& name);

// The table of family f over A3; throws on unknown ids or parameter names.
CommProduct instantiate_family(const FamilyInstance& f);

// Reads f's parameters back off p (p need not be an instance).
FamilyInstance family_parameters_of(int id, const CommProduct& p);

struct CaseId {
    int number = 0;  // 1..4
    char sub = 'a';  // 'a'..'d'

    int family() const { return 4 * (number - 1) + (sub - 'a') + 1; }
    std::string str() const { return std::to_string(number) + "-" + sub; }
    static std::optional<CaseId> parse(const std::string& text);
    static CaseId of_family(int id) { return {(id - 1) / 4 + 1, static_cast<char>('a' + (id - 1) % 4)}; }
    friend bool operator==(const CaseId&, const CaseId&) = default;
};

// The automorphism fixing the family of each subcase.
AutoMatrix case_automorphism(int family);

// Precondition sets (1)..(4) in order, then subcase by the zero pattern of
// beta^2_21, beta^2_31, beta^3_31. Throws ShapeMismatch outside the A3
// product family.
std::optional<CaseId> detect_case(const CommProduct& p);

}  // namespace tp3
