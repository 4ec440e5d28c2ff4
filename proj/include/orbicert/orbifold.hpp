// The deck group of the flat orbifold: four point-type generators, eight unit
// translations, the relation checks, and the singular-locus census.
#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbicert/rational_linalg.hpp"

namespace orbicert {

// Affine isometry x -> L x + t of R^8 with L diagonal (+-1 entries).
// Compositions are kept unreduced so that relations can be checked as exact
// identities of maps on R^8; reduce_mod_1() projects to the torus.
struct TorusAffineMap {
    std::array<int, 8> linear{1, 1, 1, 1, 1, 1, 1, 1};
    std::array<Rat, 8> translation{};

    static TorusAffineMap identity() { return {}; }

    TorusAffineMap compose(const TorusAffineMap& g) const;  // this after g
    TorusAffineMap inverse() const;
    TorusAffineMap reduce_mod_1() const;
    bool is_identity() const;

    bool operator==(const TorusAffineMap& o) const {
        return linear == o.linear && translation == o.translation;
    }
    bool operator<(const TorusAffineMap& o) const {
        if (linear != o.linear) return linear < o.linear;
        for (int i = 0; i < 8; ++i)
            if (translation[i] != o.translation[i]) return translation[i] < o.translation[i];
        return false;
    }
};

// Names: "alpha","beta","gamma","delta","tau1".."tau8".
extern const std::array<std::string, 12> kGeneratorNames;
TorusAffineMap generator(const std::string& name);

struct RelationCheck {
    std::string relation;
    bool holds;
};
// Checks every presentation relation as an exact identity of affine maps on
// R^8 (translations unreduced; unit translations are honest translations).
std::vector<RelationCheck> verify_relations();

// A connected component of the fixed set on the torus: constrained
// coordinates with their values in [0,1), plus the set of free coordinates.
struct FixedComponent {
    std::map<int, Rat> fixed_coords;  // coordinate (1..8) -> value
    std::set<int> free_coords;

    bool operator<(const FixedComponent& o) const {
        if (free_coords != o.free_coords) return free_coords < o.free_coords;
        return fixed_coords < o.fixed_coords;
    }
    bool operator==(const FixedComponent& o) const {
        return free_coords == o.free_coords && fixed_coords == o.fixed_coords;
    }
};

// Solves x = g(x) mod Z^8 for an involution g; throws on non-involutions.
std::vector<FixedComponent> fixed_point_components(const TorusAffineMap& g);

// The 16 residual maps on the torus (words in the four point generators).
std::vector<TorusAffineMap> residual_group();

FixedComponent apply_to_component(const TorusAffineMap& g, const FixedComponent& c);

struct StratumRecord {
    int label = 0;                          // 1..76
    std::string element;                    // "alpha", "beta", "alphabeta", "gamma", "delta"
    int type = 0;                           // 1, 2 or 3
    std::string neighbourhood;              // local model tag
    std::vector<FixedComponent> components; // orbit members, lexicographically sorted
};

struct FixedLocusCensus {
    std::vector<StratumRecord> strata;  // labels 1..76 in order
    int count_type1 = 0, count_type2 = 0, count_type3 = 0;
};

// Orbits of the residual group on the fixed components of alpha, beta,
// alpha*beta, gamma and delta; deterministic labels S_1..S_76.
FixedLocusCensus singular_locus_census();

// Linear part of a word in the generators, as an 8x8 matrix.
Mat holonomy(const std::vector<std::string>& word);
Mat holonomy_matrix(const TorusAffineMap& g);

}  // namespace orbicert
