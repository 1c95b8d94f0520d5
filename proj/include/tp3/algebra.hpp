#pragma once

#include <array>
#include <map>
#include <vector>

#include "tp3/linalg.hpp"

namespace tp3 {

// Skew ternary bracket [e_i,e_j,e_k] = sum_s C_ijk^s e_s. Keys are strictly
// increasing 1-based triples; permuted lookups pick up the permutation sign.
class TriBracket {
public:
    using Key = std::array<int, 3>;

    explicit TriBracket(int dim = 0);

    int dim() const { return dim_; }
    const std::map<Key, Vector>& table() const { return table_; }

    // Stores value at [e_i,e_j,e_k] for any ordering of distinct indices.
    void set(int i, int j, int k, Vector value);
    Vector get(int i, int j, int k) const;
    Rational coeff(int i, int j, int k, int s) const;

    friend bool operator==(const TriBracket& a, const TriBracket& b);

private:
    int dim_;
    std::map<Key, Vector> table_;
};

// Commutative product e_i.e_j; the k-th coordinate of e_i.e_j is beta^i_jk.
class CommProduct {
public:
    using Key = std::array<int, 2>;

    explicit CommProduct(int dim = 0);

    int dim() const { return dim_; }
    const std::map<Key, Vector>& table() const { return table_; }

    void set(int i, int j, Vector value);
    Vector get(int i, int j) const;
    Rational coeff(int i, int j, int k) const;
    bool is_zero() const { return table_.empty(); }

    friend bool operator==(const CommProduct& a, const CommProduct& b);

private:
    int dim_;
    std::map<Key, Vector> table_;
};

TriBracket a3_bracket();

Vector bracket_eval(const TriBracket& b, const Vector& x, const Vector& y, const Vector& z);
Vector product_eval(const CommProduct& p, const Vector& x, const Vector& y);

struct Violation {
    std::vector<int> witness;  // 1-based basis indices
    Vector left;
    Vector right;
};

struct CheckReport {
    bool passed = true;
    std::vector<Violation> violations;
};

// [[x,y,z],u,v] = [[x,u,v],y,z] + [[y,u,v],z,x] + [[z,u,v],x,y]; witnesses
// are (x,y,z,u,v) with x<y<z and u<v.
CheckReport check_fundamental_identity(const TriBracket& b);

// 3u.[x,y,z] = [u.x,y,z] + [x,u.y,z] + [x,y,u.z]; witnesses are (u,x,y,z).
CheckReport check_transposed_leibniz(const TriBracket& b, const CommProduct& p);

struct CommAssocReport {
    bool commutative = true;
    CheckReport associative;
};
// (e_i.e_j).e_k = e_i.(e_j.e_k); witnesses are (i,j,k).
CommAssocReport check_commutative_associative(const CommProduct& p);

// Three-dimensional products whose only e1-components are forced by the
// A3 compatibility relations.
bool in_a3_product_family(const CommProduct& p);

// Left minus right of the eight polynomial relations satisfied by
// associative members of the A3 product family.
std::vector<Rational> remark_associativity_residuals(const CommProduct& p);

}  // namespace tp3
