#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbicert/kform.hpp"
#include "orbicert/orbifold.hpp"

using namespace orbicert;

namespace {

KForm volume() { return KForm::monomial({1, 2, 3, 4, 5, 6, 7, 8}); }

Mat diag_signs(const std::array<int, 8>& s) {
    Mat m(8, 8);
    for (int i = 0; i < 8; ++i) m(i, i) = s[i];
    return m;
}

}  // namespace

TEST_CASE("wedge basics") {
    KForm dx1 = KForm::monomial({1});
    KForm dx2 = KForm::monomial({2});
    CHECK(wedge(dx1, dx2) == KForm::monomial({1, 2}));
    CHECK(wedge(dx2, dx1) == KForm::monomial({1, 2}, -1));
    CHECK(wedge(dx1, dx1).is_zero());
    // associativity and the sign of a transposition deeper in
    CHECK(wedge(KForm::monomial({1, 3}), KForm::monomial({2})) ==
          KForm::monomial({1, 2, 3}, -1));
    // dx2^dx4^dx1^dx3 has 3 inversions
    CHECK(wedge(KForm::monomial({2, 4}), KForm::monomial({1, 3})) ==
          KForm::monomial({1, 2, 3, 4}, -1));
}

TEST_CASE("hodge star") {
    // dx_I ^ *dx_I = vol for every subset
    for (int k = 0; k <= 8; ++k) {
        for (uint16_t mask = 0; mask < 256; ++mask) {
            if (__builtin_popcount(mask) != k) continue;
            KForm f(k);
            f.add_term(mask, 1);
            CHECK(wedge(f, hodge_star(f)) == volume());
        }
    }
    // ** = (-1)^{k(8-k)} = +1 on even-degree forms in dimension 8
    KForm w = KForm::monomial({1, 2}) - KForm::monomial({3, 7}, Rat(5, 2));
    CHECK(hodge_star(hodge_star(w)) == w);
    KForm odd = KForm::monomial({1, 2, 3});
    CHECK(hodge_star(hodge_star(odd)) == odd.scaled(-1));
}

TEST_CASE("cayley form invariants") {
    KForm omega = cayley_form();
    CHECK(omega.degree() == 4);
    CHECK(omega.terms().size() == 14);
    for (const auto& [mask, c] : omega.terms()) CHECK((c == 1 || c == -1));
    CHECK(omega.coeff({1, 2, 3, 4}) == 1);
    CHECK(omega.coeff({1, 3, 6, 8}) == -1);
    CHECK(omega.coeff({5, 6, 7, 8}) == 1);
    CHECK(hodge_star(omega) == omega);                       // self-dual
    CHECK(wedge(omega, omega) == volume().scaled(14));       // Omega^2 = 14 vol
}

TEST_CASE("S operator spectrum and projectors") {
    // (S - 3)(S + 1) = 0 on every 2-form monomial
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j) {
            KForm w = KForm::monomial({i, j});
            KForm sw = s_operator(w);
            KForm s2w = s_operator(sw);
            CHECK(s2w - sw.scaled(2) - w.scaled(3) == KForm(2));
            CHECK(project_2_7(w) + project_2_21(w) == w);
            CHECK(s_operator(project_2_7(w)) == project_2_7(w).scaled(3));
            CHECK(s_operator(project_2_21(w)) == project_2_21(w).scaled(-1));
        }
}

TEST_CASE("projector matrices") {
    CayleyStructure cs = cayley_structure();
    Mat id = Mat::identity(28);
    CHECK(cs.projector7 + cs.projector21 == id);
    CHECK(cs.projector7 * cs.projector7 == cs.projector7);
    CHECK(cs.projector21 * cs.projector21 == cs.projector21);
    CHECK(cs.projector7 * cs.projector21 == Mat(28, 28));
    CHECK(cs.s_matrix == cs.s_matrix.transpose());
    // rank 7 and rank 21: dimensions of the +1-eigenspaces
    CHECK(nullspace(cs.projector7 - id).dimension == 7);
    CHECK(nullspace(cs.projector21 - id).dimension == 21);
    CHECK(nullspace(cs.projector7).dimension == 21);
}

TEST_CASE("e-basis spans the eigenvalue-3 space") {
    auto e = lambda27_basis();
    for (int i = 0; i < 7; ++i) {
        CHECK(s_operator(e[i]) == e[i].scaled(3));
        CHECK(inner_product(e[i], e[i]) == 4);
        for (int j = i + 1; j < 7; ++j) CHECK(inner_product(e[i], e[j]) == 0);
    }
}

TEST_CASE("pullback") {
    // permutation 1<->2 sends dx_12 to -dx_12 and fixes dx_34
    Mat g = Mat::identity(8);
    g(0, 0) = g(1, 1) = 0;
    g(0, 1) = g(1, 0) = 1;
    CHECK(pullback(g, KForm::monomial({1, 2})) == KForm::monomial({1, 2}, -1));
    CHECK(pullback(g, KForm::monomial({3, 4})) == KForm::monomial({3, 4}));
    // contravariant: substituting via h then via g composes to h*g
    Mat h = diag_signs({-1, 1, 1, 1, 1, 1, 1, -1});
    KForm w = KForm::monomial({1, 8}) + KForm::monomial({2, 3}, Rat(1, 2));
    CHECK(pullback(g, pullback(h, w)) == pullback(h * g, w));
}

TEST_CASE("holonomies of the point generators preserve the Cayley form") {
    for (const char* name : {"alpha", "beta", "gamma", "delta"}) {
        Mat g = holonomy({name});
        CHECK(pullback(g, cayley_form()) == cayley_form());
        Mat m = induced_matrix_on_lambda27(g);
        CHECK(m.rows() == 7);
        CHECK((m * m).is_identity());
    }
}

TEST_CASE("sign pattern of the point generators on the e-basis") {
    const std::map<std::string, std::array<int, 7>> expected = {
        {"alpha", {1, 1, 1, -1, -1, -1, -1}},
        {"beta", {1, 1, 1, -1, -1, -1, -1}},
        {"gamma", {1, -1, -1, 1, 1, -1, -1}},
        {"delta", {-1, 1, -1, 1, -1, 1, -1}},
    };
    for (const auto& [name, signs] : expected) {
        Mat m = induced_matrix_on_lambda27(holonomy({name}));
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                CHECK(m(i, j) == (i == j ? Rat(signs[i]) : Rat(0)));
    }
}

TEST_CASE("induced_matrix rejects non-preserving rotations") {
    // 1<->2 transposition alone has det -1 and does not preserve Omega_0;
    // fix the determinant with a 3<->5 transposition, which still breaks it.
    Mat g(8, 8);
    std::array<int, 8> img = {2, 1, 5, 4, 3, 6, 7, 8};
    for (int j = 0; j < 8; ++j) g(img[j] - 1, j) = 1;
    CHECK(determinant(g) == 1);
    CHECK(pullback(g, cayley_form()) != cayley_form());
    CHECK_THROWS_AS((void)induced_matrix_on_lambda27(g), std::domain_error);
}

TEST_CASE("lambda2 index maps") {
    int idx = 0;
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 8; ++j) {
            CHECK(lambda2_index(i, j) == idx);
            CHECK(lambda2_pair(idx) == std::make_pair(i, j));
            ++idx;
        }
    CHECK(idx == 28);
}

TEST_CASE("quaternionic decomposition of the Cayley form") {
    // Omega_0 = 1/2 w1^w1 + 1/2 m1^m1 - sum_i w_i^m_i for the standard
    // hyper-Kahler triples on the two R^4 factors.
    auto mono = [](int a, int b, int sgn) { return KForm::monomial({a, b}, sgn); };
    std::array<KForm, 3> mu = {mono(1, 2, 1) + mono(3, 4, 1),
                               mono(1, 3, 1) - mono(2, 4, 1),
                               mono(1, 4, 1) + mono(2, 3, 1)};
    std::array<KForm, 3> om = {mono(5, 6, -1) - mono(7, 8, 1),
                               mono(5, 7, -1) + mono(6, 8, 1),
                               mono(5, 8, 1) + mono(6, 7, 1)};
    KForm rhs = wedge(om[0], om[0]).scaled(Rat(1, 2)) +
                wedge(mu[0], mu[0]).scaled(Rat(1, 2));
    for (int i = 0; i < 3; ++i) rhs = rhs - wedge(om[i], mu[i]);
    CHECK(rhs == cayley_form());
    CHECK(wedge(mu[0], mu[1]).is_zero());
}
