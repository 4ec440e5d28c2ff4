// Exhaustive gauge-orbit enumeration of admissible commuting-involution
// token tuples (gamma, delta, tau4, tau5, tau8) for SO(2)..SO(12), the
// appendix list verification, and the no-go scans.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "orbicert/certify.hpp"

namespace orbicert {

// Diagonal +-1 involution on R^n; bit set <=> entry -1.  Even popcount
// keeps the determinant +1.
struct SignVector {
    int n = 0;
    uint16_t bits = 0;

    bool even() const;
    Mat to_mat() const;
    SignVector permuted(const std::vector<int>& perm) const;  // coordinate relabeling
};

// Token order: (gamma, delta, tau4, tau5, tau8).
struct TokenTuple {
    int n = 0;
    std::array<uint16_t, 5> tok{};

    bool admissible() const { return tok[0] != 0 || tok[1] != 0; }
    bool operator==(const TokenTuple& o) const { return n == o.n && tok == o.tok; }
    bool operator<(const TokenTuple& o) const { return tok < o.tok; }
};

// Per-coordinate 5-bit signature (gamma, delta, tau4, tau5, tau8 from the
// high bit down), sorted: a complete gauge invariant for monomial conjugation.
using OrbitKey = std::vector<uint8_t>;

OrbitKey canonical_key(const TokenTuple& t);
TokenTuple tuple_from_key(int n, const OrbitKey& key);
std::string key_to_string(const OrbitKey& key);

// Fill in the forced generator images: alpha, beta, tau1, tau2, tau3 trivial;
// tau6 = tau7 = tau5.  Throws if a token has odd popcount.
FlatRep expand(const TokenTuple& t);

struct OrbitRecord {
    TokenTuple representative;
    OrbitKey key;
    unsigned long long orbit_size = 0;  // number of token tuples in the orbit
    CertReport cert;
};

struct OrbitCatalog {
    int n = 0;
    std::vector<OrbitRecord> certified;  // irreducible + rigid + unobstructed, sorted by key
    std::vector<OrbitRecord> reducible;  // admissible with h0 > 0 (only when requested)
    unsigned long long raw_certified = 0;       // token tuples across certified orbits
    unsigned long long tau_configs_scanned = 0; // tau-column multisets examined
    unsigned long long tau_configs_distinct = 0;
};

// Staged scan: tau-column multisets first (repeated columns can never certify
// and are dropped), then all admissible (gamma, delta) extensions, each orbit
// representative certified for real.  include_reducible additionally walks
// the full 5-row column multisets; supported for n <= 4.
OrbitCatalog enumerate_group(int n, bool include_reducible = false, int jobs = 1);

// The canonical form used in the source lists: lexicographically minimal
// token word over coordinate permutations for n=3,4; the fixed printed
// tau-configurations for n=5,7,8.  Requires a certified tuple.
TokenTuple paper_canonicalization(const TokenTuple& t);

// Named-token alphabet for n=3 ({1,a,b,c}) and n=4 (adds -1,-a,-b,-c).
uint16_t token_from_name(int n, const std::string& name);
std::string token_name(int n, uint16_t bits);  // throws if unnamed

// Parse "(x1, x2, x3, x4, x5)" lines; order in file: (gamma, delta, tau4, tau5, tau8).
std::vector<TokenTuple> parse_token_list(const std::string& text, int n,
                                         std::vector<std::string>* errors = nullptr);

struct AppendixReport {
    bool all_certified = false;
    bool pairwise_inequivalent = false;
    bool complete = false;
    size_t entries = 0;
    std::vector<std::string> failures;  // human-readable, includes missing keys
    bool ok() const { return all_certified && pairwise_inequivalent && complete; }
};
AppendixReport verify_appendix(const std::vector<TokenTuple>& list, int n);

struct NogoReport {
    int n = 0;
    unsigned long long tau_configs_scanned = 0;
    unsigned long long tau_configs_with_repeat = 0;  // => invariant coordinate plane
    unsigned long long certified_orbits = 0;         // must be 0
    bool invariant_plane_always = false;             // n >= 9 scans
    bool ok = false;
    std::vector<std::string> notes;
};
NogoReport nogo_scan(int n);

// The integer-matrix non-commuting SO(3) family: gamma = diag(1,-1,-1),
// delta the axis swap [[0,1,0],[1,0,0],[0,0,-1]], tau1 = tau2 = diag(-1,-1,1),
// and tau4, tau5 (= tau6 = tau7), tau8 in {1, diag(-1,-1,1)} given by flags.
FlatRep noncommutative_so3_example(bool t4, bool t5, bool t8);

struct InclusionExclusion {
    long long formula_value = 0;   // the printed alternating sum
    long long brute_force = 0;     // direct scan of the 4^5 Klein-token tuples
    long long orbits = 0;          // formula_value / 6 when all orbits are free
};
InclusionExclusion inclusion_exclusion_so3();

}  // namespace orbicert
