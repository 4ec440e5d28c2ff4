// Exact exterior algebra on R^8: sparse k-forms, Hodge star, the Cayley
// 4-form and the rank-7 / rank-21 splitting of 2-forms it induces.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "orbicert/rational_linalg.hpp"

namespace orbicert {

// A k-form is a map {index subsets of {1..8}} -> Q, stored by bitmask
// (bit i-1 set <=> index i present).  Zero coefficients are never stored.
class KForm {
public:
    explicit KForm(int degree = 0) : degree_(degree) {}

    // Monomial c * dx_{i1} ^ ... ^ dx_{ik}, indices strictly increasing.
    static KForm monomial(const std::vector<int>& idx, const Rat& c = 1);

    int degree() const { return degree_; }
    const std::map<uint16_t, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(uint16_t mask, const Rat& c);  // canonicalizing accumulate
    Rat coeff(const std::vector<int>& idx) const;

    KForm operator+(const KForm& o) const;
    KForm operator-(const KForm& o) const;
    KForm scaled(const Rat& c) const;
    bool operator==(const KForm& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }
    bool operator!=(const KForm& o) const { return !(*this == o); }

    static std::vector<int> mask_to_indices(uint16_t mask);

private:
    int degree_;
    std::map<uint16_t, Rat> terms_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm hodge_star(const KForm& a);
KForm cayley_form();

// S(w) = *(Omega_0 ^ w) on 2-forms; eigenvalues 3 (rank 7) and -1 (rank 21).
KForm s_operator(const KForm& w);
KForm project_2_7(const KForm& w);
KForm project_2_21(const KForm& w);

// Orthogonal basis e_1..e_7 of the eigenvalue-3 space, squared norm 4 each.
std::array<KForm, 7> lambda27_basis();

// Inner product making the monomials dx_I orthonormal (degrees must match).
Rat inner_product(const KForm& a, const KForm& b);

// Pullback by an exact orthogonal matrix; acts on dx_i by row i of g.
KForm pullback(const Mat& g, const KForm& a);

// Matrix of the pullback action on span{e_1..e_7} in the e-basis.
// Throws if the image of some e_i leaves the span (g not preserving Omega_0).
Mat induced_matrix_on_lambda27(const Mat& g);

// Lexicographic basis of 2-form monomials: (1,2),(1,3),...,(7,8).
int lambda2_index(int i, int j);              // 0..27
std::pair<int, int> lambda2_pair(int index);  // inverse

struct CayleyStructure {
    KForm omega0;
    std::array<KForm, 7> basis27;
    Mat s_matrix;     // 28x28, S in the lexicographic dx_ij basis
    Mat projector7;   // (S + 1) / 4
    Mat projector21;  // (3 - S) / 4
};
CayleyStructure cayley_structure();

}  // namespace orbicert
