// Bundle bookkeeping for the resolution side of the gluing: bundle choice for
// a boundary involution, adjoint decomposition, gluing-data validation,
// Pontryagin-class coefficients and the index formula.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbicert/certify.hpp"

namespace orbicert {

// E = m [L] (+) R^k on the resolved C^2/Z2, where [L] is the real rank-2
// bundle underlying the tautological line bundle; n = 2m + k.
struct ALEBundleSpec {
    int m = 0;
    int k = 0;
    int n() const { return 2 * m + k; }
    bool trivial() const { return m == 0; }
};

// Requires g diagonal, g^2 = I, det g = +1; m = (#-1 entries)/2.
ALEBundleSpec ale_bundle_for(const Mat& g);

// Multiplicities (s0, s1, s2) in Ad E = s0 R (+) s1 [L] (+) s2 [L^2],
// computed from the weight multiset {+1 x m, -1 x m, 0 x k}.
struct AdjointDecomposition {
    long long s0 = 0, s1 = 0, s2 = 0;
};
AdjointDecomposition adjoint_decomposition(const ALEBundleSpec& spec);

struct GluingData {
    FlatRep rep;
    // Indexed by stratum label 73..76 (73,74: gamma components; 75,76: delta).
    std::map<int, ALEBundleSpec> specs;
    std::map<int, Rat> charges;               // energy / 8 pi^2 per label, user input
    std::map<int, std::string> framing_tags;  // opaque basepoint/framing identifiers
};

struct GluingCheck {
    bool ok = false;
    std::vector<std::string> failures;
};

// Conditions checked:
//  - the representation is valid and rigid (h1 = 0);
//  - asymptotic holonomy of the spec at labels 73,74 equals rho(gamma), at
//    75,76 equals rho(delta) (both must be diagonal involutions here);
//  - the monodromy around every codimension >= 4 stratum is trivial: the
//    images forced trivial by the relations once rho(alpha) = rho(beta) = 1
//    (alpha, beta, tau1, tau2, tau3, tau5*tau6 and tau5*tau7) are checked to
//    be actually trivial, which is exactly the content for the 72 point-type
//    and four-torus-type strata without a glued bundle.
GluingCheck check_compatible_gluing_data(const GluingData& data);

// First Pontryagin coefficient per label (the class is -sum k_j [S_j]);
// labels with a trivial spec contribute 0.  p2 vanishes identically.
struct PontryaginData {
    std::map<int, Rat> p1_coefficients;  // 73..76
    Rat p2 = 0;
};
PontryaginData p1_coefficients(const GluingData& data);

struct IndexInputs {
    long long dim_g = 0, b0 = 0, b1 = 0, b2_7 = 0;
    Rat I_pp = 0;  // integral of p1(M) p1(Ad P)
    Rat I_p2 = 0;  // integral of p1(Ad P)^2
    Rat I_q = 0;   // integral of p2(Ad P)
};

// -dim_g (b0 - b1 + b2_7) + I_pp/24 - (I_p2 - 2 I_q)/12
Rat index_value(const IndexInputs& in);

}  // namespace orbicert
