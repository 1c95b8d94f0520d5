#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tp3/families.hpp"

namespace tp3 {

struct Certificate {
    CommProduct input;
    FamilyInstance family;
    AutoMatrix witness;
};

// Normalization over Q needs the degree-th root of radicand.
struct NeedsExtension {
    Rational radicand;
    unsigned degree = 0;
    std::string detail;
};

struct Unclassified {
    std::string reason;
};

struct Unsupported {
    std::string reason;
};

struct NotTransposedPoisson {
    CheckReport report;
};

using NormalizeResult = std::variant<Certificate, NeedsExtension, Unclassified>;
using ClassifyResult = std::variant<Certificate, NeedsExtension, Unclassified, Unsupported, NotTransposedPoisson>;

// True when witness is an A3 automorphism carrying input onto the family.
bool validate_certificate(const Certificate& c);

// Attempts to carry p onto some instance of the given family.
NormalizeResult normalize_to_family(const CommProduct& p, int family);

// Tries the family named by detect_case first, then T1..T16. Throws
// ShapeMismatch outside the A3 product family.
NormalizeResult normalize(const CommProduct& p);

ClassifyResult classify(const TriBracket& b, const CommProduct& p);

// (dim of 1/3-derivations of b, rank of Sym^2 A -> A, dim of the
// annihilator, dim span(A.A), generic rank of the squaring differential)
std::vector<int> fingerprint(const TriBracket& b, const CommProduct& p);

// Runs the subcase checks on `draws` random parameter sets. Witnesses are
// (check number 1..5, draw index).
CheckReport verify_paper_case(const CaseId& c, std::uint64_t seed, int draws = 8);

// Random instance of family id whose zero pattern places it in its own
// subcase.
FamilyInstance random_generic_instance(int id, std::uint64_t& state);

}  // namespace tp3
