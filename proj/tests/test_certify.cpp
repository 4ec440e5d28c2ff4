#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbicert/certify.hpp"
#include "orbicert/enumerate.hpp"

using namespace orbicert;

namespace {

Mat diag_signs(const std::vector<int>& s) {
    Mat m((int)s.size(), (int)s.size());
    for (int i = 0; i < (int)s.size(); ++i) m(i, i) = s[i];
    return m;
}

TokenTuple tuple3(uint16_t g, uint16_t d, uint16_t t4, uint16_t t5, uint16_t t8) {
    TokenTuple t;
    t.n = 3;
    t.tok = {g, d, t4, t5, t8};
    return t;
}

Mat random_signed_perm(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    Mat m(n, n);
    for (int j = 0; j < n; ++j) m(p[j], j) = (rng() & 1) ? 1 : -1;
    return m;
}

FlatRep conjugated(const FlatRep& rep, const Mat& g) {
    FlatRep out;
    out.n = rep.n;
    Mat gi = g.transpose();
    for (const auto& [name, m] : rep.images) out.images.emplace(name, g * m * gi);
    return out;
}

const uint16_t A = 0b110, B = 0b101, C = 0b011;  // a, b, c sign tokens on R^3

}  // namespace

TEST_CASE("LieBasis indexing") {
    LieBasis lb(4);
    CHECK(lb.dim() == 6);
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            CHECK(lb.index(i, j) == k);
            CHECK(lb.pair(k) == std::make_pair(i, j));
            Mat e = lb.element(k);
            CHECK(e(i, j) == 1);
            CHECK(e(j, i) == -1);
            CHECK(e + e.transpose() == Mat(4, 4));
            ++k;
        }
}

TEST_CASE("adjoint_matrix sign table for a diagonal involution") {
    // a = diag(1,-1,-1) on so(3) basis (E12, E13, E23): signs (-1, -1, +1)
    Mat ad = adjoint_matrix(diag_signs({1, -1, -1}));
    CHECK(ad == diag_signs({-1, -1, 1}));
    // Ad of the identity is the identity; Ad is multiplicative
    CHECK(adjoint_matrix(Mat::identity(3)).is_identity());
    Mat b = diag_signs({-1, 1, -1});
    CHECK(adjoint_matrix(diag_signs({1, -1, -1}) * b) ==
          adjoint_matrix(diag_signs({1, -1, -1})) * adjoint_matrix(b));
    // Ad of a rotation: conjugation matches entrywise
    Mat r(2, 2);
    r(0, 1) = -1;
    r(1, 0) = 1;
    CHECK(adjoint_matrix(r).is_identity());  // so(2) is abelian
}

TEST_CASE("validate accepts expanded tuples and reports violations") {
    CHECK(validate(expand(tuple3(0, C, A, C, B))).empty());
    CHECK(validate(FlatRep::trivial(3)).empty());

    // break one conjugation relation: delta must invert tau5, so a rep with
    // non-commuting rho(delta), rho(tau5) of order 2 fails
    FlatRep bad = FlatRep::trivial(3);
    Mat swap(3, 3);
    swap(0, 1) = swap(1, 0) = 1;
    swap(2, 2) = -1;
    bad.images.at("delta") = swap;
    bad.images.at("tau5") = diag_signs({1, -1, -1});
    auto violated = validate(bad);
    CHECK(!violated.empty());

    // non-orthogonal and det -1 inputs are rejected outright
    FlatRep skew = FlatRep::trivial(2);
    skew.images.at("alpha")(0, 1) = 1;
    CHECK_THROWS_AS((void)validate(skew), std::invalid_argument);
    FlatRep refl = FlatRep::trivial(3);
    refl.images.at("alpha") = diag_signs({-1, 1, 1});
    CHECK_THROWS_AS((void)validate(refl), std::invalid_argument);
}

TEST_CASE("trivial representation certifies as reducible but rigid") {
    for (int n : {2, 3, 4, 5}) {
        CertReport c = certify(FlatRep::trivial(n));
        CHECK(c.valid);
        CHECK(c.h0 == n * (n - 1) / 2);
        CHECK(c.h1 == 0);
        CHECK(c.h2 == 0);
        CHECK(!c.irreducible);
        CHECK(c.rigid);
        CHECK(c.unobstructed);
    }
}

TEST_CASE("certified appendix representative") {
    CertReport c = certify(expand(tuple3(0, C, A, C, B)));  // (1, c, a, c, b)
    CHECK(c.valid);
    CHECK(c.h0 == 0);
    CHECK(c.h1 == 0);
    CHECK(c.h2 == 0);
    CHECK(c.irreducible);
    CHECK(c.rigid);
    CHECK(c.unobstructed);
    CHECK(!c.witness.has_value());
}

TEST_CASE("SO(2) diagonal family") {
    TokenTuple t;
    t.n = 2;
    t.tok = {0b11, 0b11, 0, 0b11, 0};  // gamma = delta = -1
    CertReport c = certify(expand(t));
    CHECK(c.valid);
    CHECK(c.h0 == 1);  // so(2) is central: never irreducible
    CHECK(c.h1 == 0);
    CHECK(c.h2 == 0);
    CHECK(!c.irreducible);
    CHECK(c.rigid);
}

TEST_CASE("obstruction witness for (a, b, 1, 1, 1)") {
    FlatRep rep = expand(tuple3(A, B, 0, 0, 0));
    CertReport c = certify(rep);
    CHECK(c.valid);
    CHECK(c.h2 > 0);
    CHECK(!c.unobstructed);
    REQUIRE(c.witness.has_value());
    const ObstructionWitness& w = *c.witness;
    // witness element: antisymmetric, fixed by every Ad rho(tau_i)
    CHECK(w.element + w.element.transpose() == Mat(3, 3));
    for (int i = 1; i <= 8; ++i) {
        const Mat& t = rep.image("tau" + std::to_string(i));
        CHECK(t * w.element * t.transpose() == w.element);
    }
    // declared signs match the actual adjoint action
    const Mat& g = rep.image("gamma");
    const Mat& d = rep.image("delta");
    CHECK(g * w.element * g.transpose() == w.element.scaled(w.gamma_sign));
    CHECK(d * w.element * d.transpose() == w.element.scaled(w.delta_sign));
    // an admissible sign pattern: not (+, +)
    CHECK((w.gamma_sign == -1 || w.delta_sign == -1));
}

TEST_CASE("witness signs imply a fixed element of the rank-7 tensor block") {
    // cross-module soundness: for each witness sign pattern, the matching
    // basis 2-form e1/e2/e3 tensored with the witness is orbifold-invariant;
    // certify must agree by reporting h2 >= 1.
    for (auto [gt, dt] : std::vector<std::pair<uint16_t, uint16_t>>{
             {A, B}, {A, 0}, {0, A}, {C, C}}) {
        FlatRep rep = expand(tuple3(gt, dt, 0, 0, 0));
        CertReport c = certify(rep);
        CHECK(c.valid);
        if (c.witness.has_value()) CHECK(c.h2 >= 1);
    }
}

TEST_CASE("certify is gauge invariant") {
    std::mt19937 rng(2024);
    std::vector<TokenTuple> samples = {
        tuple3(0, C, A, C, B), tuple3(A, B, 0, 0, 0), tuple3(A, B, C, A, B),
        tuple3(C, 0, B, C, A)};
    for (const auto& t : samples) {
        CertReport base = certify(expand(t));
        for (int trial = 0; trial < 25; ++trial) {
            Mat g = random_signed_perm(3, rng);
            CertReport c = certify(conjugated(expand(t), g));
            CHECK(c.valid == base.valid);
            CHECK(c.h0 == base.h0);
            CHECK(c.h1 == base.h1);
            CHECK(c.h2 == base.h2);
            CHECK(c.irreducible == base.irreducible);
            CHECK(c.unobstructed == base.unobstructed);
        }
    }
}

TEST_CASE("h1 vanishes whenever alpha and beta map to the identity") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        uint16_t toks[5];
        for (auto& x : toks) {
            uint16_t v = (uint16_t)(rng() % 8);
            // force even popcount on 3 coordinates
            if (__builtin_popcount(v) % 2) v ^= 0b111;
            x = v & 0b111;
        }
        TokenTuple t = tuple3(toks[0], toks[1], toks[2], toks[3], toks[4]);
        CertReport c = certify(expand(t));
        CHECK(c.valid);
        CHECK(c.h1 == 0);
    }
}

TEST_CASE("non-commutative family validates and is obstructed") {
    for (int bits = 0; bits < 8; ++bits) {
        FlatRep rep = noncommutative_so3_example(bits & 4, bits & 2, bits & 1);
        CHECK(validate(rep).empty());
        // gamma and delta genuinely do not commute
        const Mat& g = rep.image("gamma");
        const Mat& d = rep.image("delta");
        CHECK(g * d != d * g);
        CertReport c = certify(rep);
        CHECK(c.valid);
        CHECK(c.h2 >= 1);
        CHECK(!c.unobstructed);
        REQUIRE(c.witness.has_value());
        CHECK(c.witness->gamma_sign == -1);
        CHECK(c.witness->delta_sign == -1);
    }
}
