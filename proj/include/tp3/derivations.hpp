#pragma once

#include <string>
#include <vector>

#include "tp3/algebra.hpp"

namespace tp3 {

struct DerivationQuery {
    TriBracket bracket;
    Rational delta{1, 3};
};

struct DerivationSpace {
    int dim = 0;
    std::vector<Matrix> basis;  // row i holds the coordinates of phi(e_i)
};

struct ProductSpace {
    int dim = 0;
    std::vector<CommProduct> basis;
    std::vector<std::string> free_coordinates;  // "beta^i_jk" labels
};

// Rows indexed by (i<j<k, t), columns by beta_ij row-major. The row equation
// is sum_s (C_sjk^t b_is + C_isk^t b_js + C_ijs^t b_ks) - (1/delta) sum_s C_ijk^s b_st.
Matrix build_derivation_system(const DerivationQuery& q);
DerivationSpace delta_derivations(const DerivationQuery& q);
bool is_delta_derivation(const DerivationQuery& q, const Matrix& phi);

// Matrix of y -> e_i.y with row j holding the coordinates of e_i.e_j.
Matrix left_multiplication(const CommProduct& p, int i);

// Unknowns beta^i_jk for i <= j (lexicographic), k innermost.
std::size_t product_unknown_count(int dim);
std::size_t product_unknown_index(int dim, int i, int j, int k);
CommProduct product_from_coordinates(int dim, const Vector& coords);
Vector product_coordinates(const CommProduct& p);

// Joint linear system forcing every left multiplication to be a
// 1/3-derivation of b.
Matrix build_product_system(const TriBracket& b);
ProductSpace tp_product_space(const TriBracket& b);

}  // namespace tp3
