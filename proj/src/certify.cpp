#include "orbicert/certify.hpp"

#include <stdexcept>

namespace orbicert {

const Mat& FlatRep::image(const std::string& name) const {
    auto it = images.find(name);
    if (it == images.end()) throw std::invalid_argument("FlatRep: missing image for " + name);
    return it->second;
}

FlatRep FlatRep::trivial(int n) {
    FlatRep r;
    r.n = n;
    for (const auto& g : kGeneratorNames) r.images.emplace(g, Mat::identity(n));
    return r;
}

int LieBasis::index(int i, int j) const {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> LieBasis::pair(int idx) const {
    for (int i = 0; i < n - 1; ++i) {
        int block = n - 1 - i;
        if (idx < block) return {i, i + 1 + idx};
        idx -= block;
    }
    throw std::out_of_range("LieBasis::pair");
}

Mat LieBasis::element(int idx) const {
    auto [i, j] = pair(idx);
    Mat m(n, n);
    m(i, j) = 1;
    m(j, i) = -1;
    return m;
}

Mat adjoint_matrix(const Mat& g) {
    const int n = g.rows();
    LieBasis lb(n);
    const int d = lb.dim();
    Mat m(d, d);
    // (g E_ij g^T)_{kl} = g_ki g_lj - g_kj g_li is the E_kl coefficient.
    for (int col = 0; col < d; ++col) {
        auto [i, j] = lb.pair(col);
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
                Rat c = g(k, i) * g(l, j) - g(k, j) * g(l, i);
                if (c != 0) m(lb.index(k, l), col) = c;
            }
    }
    return m;
}

std::vector<std::string> validate(const FlatRep& rep) {
    for (const auto& name : kGeneratorNames) {
        const Mat& m = rep.image(name);
        if (m.rows() != rep.n || m.cols() != rep.n)
            throw std::invalid_argument("validate: wrong size image for " + name);
        if (!m.is_orthogonal())
            throw std::invalid_argument("validate: non-orthogonal image for " + name);
        if (determinant(m) != 1)
            throw std::invalid_argument("validate: determinant != +1 for " + name);
    }

    std::vector<std::string> violated;
    auto img = [&rep](const std::string& s) { return rep.image(s); };
    auto comm = [](const Mat& g, const Mat& h) {
        return g * h * g.transpose() * h.transpose();
    };
    auto check = [&violated](const std::string& name, const Mat& lhs, const Mat& rhs) {
        if (lhs != rhs) violated.push_back(name);
    };
    const Mat id = Mat::identity(rep.n);

    std::array<Mat, 8> tau;
    for (int i = 0; i < 8; ++i) tau[i] = img("tau" + std::to_string(i + 1));

    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            check("[tau" + std::to_string(i + 1) + ",tau" + std::to_string(j + 1) + "]=1",
                  comm(tau[i], tau[j]), id);

    for (const char* n : {"alpha", "beta", "gamma", "delta"})
        check(std::string(n) + "^2=1", img(n) * img(n), id);

    Mat a = img("alpha"), b = img("beta"), c = img("gamma"), d = img("delta");
    check("[alpha,beta]=1", comm(a, b), id);
    check("[alpha,gamma]=tau2^-1 tau1^-1", comm(a, c), tau[1].transpose() * tau[0].transpose());
    check("[alpha,delta]=tau3^-1", comm(a, d), tau[2].transpose());
    check("[beta,gamma]=tau6^-1 tau5^-1", comm(b, c), tau[5].transpose() * tau[4].transpose());
    check("[beta,delta]=tau7^-1 tau5^-1", comm(b, d),
          tau[6].transpose() * tau[4].transpose());
    check("[gamma,delta]=tau1", comm(c, d), tau[0]);

    struct Family { const char* name; std::set<int> inverted; };
    const Family fams[] = {
        {"alpha", {1, 2, 3, 4}}, {"beta", {5, 6, 7, 8}},
        {"gamma", {1, 2, 5, 6}}, {"delta", {1, 3, 5, 7}}};
    for (const auto& f : fams) {
        Mat g = img(f.name);
        for (int i = 0; i < 8; ++i) {
            bool inv = f.inverted.count(i + 1) > 0;
            check(std::string(f.name) + " tau" + std::to_string(i + 1) +
                      (inv ? " inverted" : " centralized"),
                  g * tau[i] * g.transpose(), inv ? tau[i].transpose() : tau[i]);
        }
    }
    return violated;
}

namespace {

// The 7x7 matrices induced on span{e_1..e_7} by the four point holonomies.
const Mat& lambda27_action(const std::string& name) {
    static const std::map<std::string, Mat> cache = [] {
        std::map<std::string, Mat> m;
        for (const char* g : {"alpha", "beta", "gamma", "delta"})
            m.emplace(g, induced_matrix_on_lambda27(holonomy({g})));
        return m;
    }();
    static const Mat id7 = Mat::identity(7);
    auto it = cache.find(name);
    return it == cache.end() ? id7 : it->second;  // translations: trivial holonomy
}

const Mat& holonomy8(const std::string& name) {
    static const std::map<std::string, Mat> cache = [] {
        std::map<std::string, Mat> m;
        for (const char* g : {"alpha", "beta", "gamma", "delta"}) m.emplace(g, holonomy({g}));
        return m;
    }();
    static const Mat id8 = Mat::identity(8);
    auto it = cache.find(name);
    return it == cache.end() ? id8 : it->second;
}

// Adjoint action of a signed permutation on the E_{ij} basis, itself a signed
// permutation: E_{ij} -> s_i s_j E_{p(i) p(j)}, with a sign flip when the
// image pair comes out reversed.
SignedPerm ad_signed(const SignedPerm& g, int n) {
    LieBasis lb(n);
    SignedPerm r;
    r.perm.resize(lb.dim());
    r.sign.resize(lb.dim());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int pi = g.perm[i], pj = g.perm[j];
            int s = g.sign[i] * g.sign[j];
            if (pi > pj) { std::swap(pi, pj); s = -s; }
            r.perm[lb.index(i, j)] = lb.index(pi, pj);
            r.sign[lb.index(i, j)] = s;
        }
    return r;
}

const SignedPerm& holonomy8_signed(const std::string& name) {
    static const std::map<std::string, SignedPerm> cache = [] {
        std::map<std::string, SignedPerm> m;
        for (const char* g : {"alpha", "beta", "gamma", "delta"})
            m.emplace(g, *as_signed_perm(holonomy({g})));
        return m;
    }();
    static const SignedPerm id8 = *as_signed_perm(Mat::identity(8));
    auto it = cache.find(name);
    return it == cache.end() ? id8 : it->second;
}

const SignedPerm& lambda27_signed(const std::string& name) {
    static const std::map<std::string, SignedPerm> cache = [] {
        std::map<std::string, SignedPerm> m;
        for (const char* g : {"alpha", "beta", "gamma", "delta"})
            m.emplace(g, *as_signed_perm(induced_matrix_on_lambda27(holonomy({g}))));
        return m;
    }();
    static const SignedPerm id7 = *as_signed_perm(Mat::identity(7));
    auto it = cache.find(name);
    return it == cache.end() ? id7 : it->second;
}

// Restriction of a square matrix to an invariant subspace, in the given basis.
Mat restrict_to(const Mat& a, const std::vector<std::vector<Rat>>& basis) {
    const int d = a.rows(), f = static_cast<int>(basis.size());
    Mat b(d, f);
    for (int j = 0; j < f; ++j)
        for (int i = 0; i < d; ++i) b(i, j) = basis[j][i];
    Mat r(f, f);
    for (int j = 0; j < f; ++j) {
        std::vector<Rat> img(d, Rat(0));
        for (int i = 0; i < d; ++i) {
            Rat s = 0;
            for (int k = 0; k < d; ++k)
                if (a(i, k) != 0 && basis[j][k] != 0) s += a(i, k) * basis[j][k];
            img[i] = s;
        }
        auto x = solve_linear(b, img);
        if (!x) throw std::logic_error("restrict_to: subspace not invariant");
        for (int i = 0; i < f; ++i) r(i, j) = (*x)[i];
    }
    return r;
}

}  // namespace

std::optional<ObstructionWitness> obstruction_witness(const FlatRep& rep) {
    const Mat id = Mat::identity(rep.n);
    if (rep.image("alpha") != id || rep.image("beta") != id)
        throw std::invalid_argument("obstruction_witness: requires trivial alpha and beta images");

    LieBasis lb(rep.n);
    const int d = lb.dim();
    std::vector<Mat> ad_tau;
    for (int i = 1; i <= 8; ++i)
        ad_tau.push_back(adjoint_matrix(rep.image("tau" + std::to_string(i))));
    Nullspace fixed = fixed_subspace(ad_tau, d);
    if (fixed.dimension == 0) return std::nullopt;

    // Ad rho(gamma), Ad rho(delta) preserve the tau-fixed space and commute on
    // it ([gamma,delta] maps to a tau image, which acts trivially there).
    Mat rg = restrict_to(adjoint_matrix(rep.image("gamma")), fixed.basis);
    Mat rd = restrict_to(adjoint_matrix(rep.image("delta")), fixed.basis);
    const int f = fixed.dimension;
    const Mat idf = Mat::identity(f);

    for (auto [s, t] : {std::pair<int, int>{-1, 1}, {1, -1}, {-1, -1}}) {
        Mat stacked(2 * f, f);
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j) {
                stacked(i, j) = rg(i, j) - (i == j ? Rat(s) : Rat(0));
                stacked(f + i, j) = rd(i, j) - (i == j ? Rat(t) : Rat(0));
            }
        Nullspace eig = nullspace(stacked);
        if (eig.dimension == 0) continue;
        ObstructionWitness w;
        w.gamma_sign = s;
        w.delta_sign = t;
        w.element = Mat(rep.n, rep.n);
        for (int k = 0; k < d; ++k) {
            Rat c = 0;
            for (int j = 0; j < f; ++j)
                if (eig.basis[0][j] != 0 && fixed.basis[j][k] != 0)
                    c += eig.basis[0][j] * fixed.basis[j][k];
            if (c != 0) {
                auto [p, q] = lb.pair(k);
                w.element(p, q) = c;
                w.element(q, p) = -c;
            }
        }
        return w;
    }
    return std::nullopt;
}

CertReport certify(const FlatRep& rep) {
    CertReport rep_out;
    rep_out.violated = validate(rep);
    rep_out.valid = rep_out.violated.empty();
    if (!rep_out.valid) return rep_out;

    LieBasis lb(rep.n);
    const int d = lb.dim();

    // Signed-permutation images (the generic case in the enumeration) avoid
    // materializing dense Kronecker matrices entirely.
    std::vector<SignedPerm> sp_imgs;
    bool all_signed = true;
    for (const auto& name : kGeneratorNames) {
        auto sp = as_signed_perm(rep.image(name));
        if (!sp) { all_signed = false; break; }
        sp_imgs.push_back(std::move(*sp));
    }

    if (all_signed) {
        std::vector<SignedPerm> m0, m1, m2;
        for (size_t k = 0; k < kGeneratorNames.size(); ++k) {
            SignedPerm ad = ad_signed(sp_imgs[k], rep.n);
            m1.push_back(kron_signed(holonomy8_signed(kGeneratorNames[k]), ad));
            m2.push_back(kron_signed(lambda27_signed(kGeneratorNames[k]), ad));
            m0.push_back(std::move(ad));
        }
        rep_out.h0 = fixed_subspace_signed(m0, d).dimension;
        rep_out.h1 = fixed_subspace_signed(m1, 8 * d).dimension;
        rep_out.h2 = fixed_subspace_signed(m2, 7 * d).dimension;
    } else {
        std::vector<Mat> m0, m1, m2;
        for (const auto& name : kGeneratorNames) {
            Mat ad = adjoint_matrix(rep.image(name));
            m1.push_back(kronecker(holonomy8(name), ad));
            m2.push_back(kronecker(lambda27_action(name), ad));
            m0.push_back(std::move(ad));
        }
        rep_out.h0 = fixed_subspace(m0, d).dimension;
        rep_out.h1 = fixed_subspace(m1, 8 * d).dimension;
        rep_out.h2 = fixed_subspace(m2, 7 * d).dimension;
    }
    rep_out.irreducible = rep_out.h0 == 0;
    rep_out.rigid = rep_out.h1 == 0;
    rep_out.unobstructed = rep_out.h2 == 0;

    const Mat id = Mat::identity(rep.n);
    if (rep.image("alpha") == id && rep.image("beta") == id)
        rep_out.witness = obstruction_witness(rep);
    return rep_out;
}

}  // namespace orbicert
