#pragma once

#include <vector>

#include "tp3/algebra.hpp"

namespace tp3 {

// Row convention: phi(e_i) = sum_j m(i,j) e_j, so phi acts on coordinate
// rows by x -> x * m.
using AutoMatrix = Matrix;

// Checks [phi e_i, phi e_j, phi e_k] = phi [e_i, e_j, e_k] on basis triples
// (witness (i,j,k)); a singular map fails with an empty witness.
CheckReport is_bracket_automorphism(const TriBracket& b, const AutoMatrix& m);

// m(0,1) = m(0,2) = 0, m(0,0) != 0 and the lower 2x2 block has determinant 1.
bool a3_automorphism_check(const AutoMatrix& m);

// Push-forward x * y = phi(phi^-1 x . phi^-1 y); phi is an isomorphism from
// the input algebra onto the result. Transporting by m1 then by m2 equals
// transporting by m1 * m2.
CommProduct transport_product(const CommProduct& p, const AutoMatrix& m);
TriBracket transport_bracket(const TriBracket& b, const AutoMatrix& m);

// Left minus right of the eleven polynomial equations expressing that the
// A3 automorphism m fixes p, with m's entries substituted for lambda_pq.
std::vector<Rational> eleven_equation_residuals(const CommProduct& p, const AutoMatrix& m);

}  // namespace tp3
