// Flat-connection certification: relation validation for a 12-generator
// representation into SO(n) and the fixed-subspace dimensions h0, h1, h2 of
// the induced actions on so(n), R^8 (x) so(n) and the rank-7 piece of
// Lambda^2 (x) so(n).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbicert/kform.hpp"
#include "orbicert/orbifold.hpp"
#include "orbicert/rational_linalg.hpp"

namespace orbicert {

struct FlatRep {
    int n = 0;
    std::map<std::string, Mat> images;  // keyed by kGeneratorNames

    const Mat& image(const std::string& name) const;
    static FlatRep trivial(int n);
};

// Lexicographic basis E_{ij} = e_i e_j^T - e_j e_i^T, i<j, of so(n).
struct LieBasis {
    int n;
    explicit LieBasis(int n) : n(n) {}
    int dim() const { return n * (n - 1) / 2; }
    int index(int i, int j) const;          // 0-based i<j -> 0..dim-1
    std::pair<int, int> pair(int idx) const;
    Mat element(int idx) const;             // the matrix E_{ij}
};

// Matrix of X -> g X g^{-1} on so(n) in the LieBasis (g orthogonal).
Mat adjoint_matrix(const Mat& g);

// Empty iff the images satisfy every presentation relation.  Throws on
// non-orthogonal or determinant -1 images.
std::vector<std::string> validate(const FlatRep& rep);

struct ObstructionWitness {
    Mat element;        // antisymmetric n x n, fixed by every Ad rho(tau_i)
    int gamma_sign = 1; // action of Ad rho(gamma) on it
    int delta_sign = 1; // action of Ad rho(delta) on it
};

struct CertReport {
    bool valid = false;
    std::vector<std::string> violated;
    int h0 = 0, h1 = 0, h2 = 0;
    bool irreducible = false, rigid = false, unobstructed = false;
    std::optional<ObstructionWitness> witness;
};

CertReport certify(const FlatRep& rep);

// For reps with rho(alpha) = rho(beta) = 1: a Lie-algebra element fixed by
// every Ad rho(tau_i) on which (rho(gamma), rho(delta)) act with signs
// (-,+), (+,-) or (-,-), if one exists.  Its presence forces h2 >= 1.
std::optional<ObstructionWitness> obstruction_witness(const FlatRep& rep);

}  // namespace orbicert
