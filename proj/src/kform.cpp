#include "orbicert/kform.hpp"

#include <bit>
#include <stdexcept>

namespace orbicert {

namespace {

constexpr uint16_t FULL = 0xFF;  // dx_1..dx_8

// Sign of dx_A ^ dx_B for disjoint masks: (-1)^{#pairs (a in A, b in B) with b < a}.
int shuffle_sign(uint16_t a, uint16_t b) {
    int inv = 0;
    for (int i = 0; i < 8; ++i) {
        if (!(a & (1u << i))) continue;
        inv += std::popcount(static_cast<unsigned>(b & ((1u << i) - 1)));
    }
    return (inv & 1) ? -1 : 1;
}

}  // namespace

KForm KForm::monomial(const std::vector<int>& idx, const Rat& c) {
    uint16_t mask = 0;
    int prev = 0;
    for (int i : idx) {
        if (i < 1 || i > 8 || i <= prev)
            throw std::invalid_argument("monomial: indices must be strictly increasing in 1..8");
        mask |= 1u << (i - 1);
        prev = i;
    }
    KForm f(static_cast<int>(idx.size()));
    f.add_term(mask, c);
    return f;
}

void KForm::add_term(uint16_t mask, const Rat& c) {
    if (std::popcount(static_cast<unsigned>(mask)) != degree_)
        throw std::invalid_argument("add_term: wrong degree");
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(mask, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat KForm::coeff(const std::vector<int>& idx) const {
    uint16_t mask = 0;
    for (int i : idx) mask |= 1u << (i - 1);
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rat(0) : it->second;
}

KForm KForm::operator+(const KForm& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("k-form sum: degree mismatch");
    KForm r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

KForm KForm::operator-(const KForm& o) const { return *this + o.scaled(-1); }

KForm KForm::scaled(const Rat& c) const {
    KForm r(degree_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, c * v);
    return r;
}

std::vector<int> KForm::mask_to_indices(uint16_t mask) {
    std::vector<int> idx;
    for (int i = 0; i < 8; ++i)
        if (mask & (1u << i)) idx.push_back(i + 1);
    return idx;
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.degree() + b.degree() > 8)
        throw std::invalid_argument("wedge: degree overflow");
    KForm r(a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            r.add_term(ma | mb, ca * cb * shuffle_sign(ma, mb));
        }
    return r;
}

KForm hodge_star(const KForm& a) {
    KForm r(8 - a.degree());
    for (const auto& [m, c] : a.terms()) {
        uint16_t mc = FULL & ~m;
        // * dx_I = s dx_{I^c} with dx_I ^ (s dx_{I^c}) = vol.
        r.add_term(mc, c * shuffle_sign(m, mc));
    }
    return r;
}

KForm cayley_form() {
    KForm f(4);
    auto t = [&f](int i, int j, int k, int l, int s) {
        f.add_term((1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1)) | (1u << (l - 1)), s);
    };
    t(1, 2, 3, 4, +1); t(1, 2, 5, 6, +1); t(1, 2, 7, 8, +1); t(1, 3, 5, 7, +1);
    t(1, 3, 6, 8, -1); t(1, 4, 5, 8, -1); t(1, 4, 6, 7, -1); t(2, 3, 5, 8, -1);
    t(2, 3, 6, 7, -1); t(2, 4, 5, 7, -1); t(2, 4, 6, 8, +1); t(3, 4, 5, 6, +1);
    t(3, 4, 7, 8, +1); t(5, 6, 7, 8, +1);
    return f;
}

KForm s_operator(const KForm& w) {
    if (w.degree() != 2) throw std::invalid_argument("s_operator: need a 2-form");
    static const KForm om = cayley_form();
    return hodge_star(wedge(om, w));
}

KForm project_2_7(const KForm& w) {
    return (s_operator(w) + w).scaled(Rat(1, 4));
}

KForm project_2_21(const KForm& w) {
    return (w.scaled(3) - s_operator(w)).scaled(Rat(1, 4));
}

std::array<KForm, 7> lambda27_basis() {
    auto mk = [](std::initializer_list<std::pair<std::pair<int, int>, int>> spec) {
        KForm f(2);
        for (auto& [ij, s] : spec)
            f.add_term((1u << (ij.first - 1)) | (1u << (ij.second - 1)), s);
        return f;
    };
    return {
        mk({{{1, 2}, +1}, {{3, 4}, +1}, {{5, 6}, +1}, {{7, 8}, +1}}),
        mk({{{1, 3}, +1}, {{2, 4}, -1}, {{5, 7}, +1}, {{6, 8}, -1}}),
        mk({{{1, 4}, +1}, {{2, 3}, +1}, {{5, 8}, -1}, {{6, 7}, -1}}),
        mk({{{1, 5}, +1}, {{2, 6}, -1}, {{3, 7}, -1}, {{4, 8}, +1}}),
        mk({{{1, 6}, +1}, {{2, 5}, +1}, {{3, 8}, +1}, {{4, 7}, +1}}),
        mk({{{1, 7}, +1}, {{2, 8}, -1}, {{3, 5}, +1}, {{4, 6}, -1}}),
        mk({{{1, 8}, +1}, {{2, 7}, +1}, {{3, 6}, -1}, {{4, 5}, -1}}),
    };
}

Rat inner_product(const KForm& a, const KForm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("inner_product: degree mismatch");
    Rat s = 0;
    for (const auto& [m, c] : a.terms()) {
        auto it = b.terms().find(m);
        if (it != b.terms().end()) s += c * it->second;
    }
    return s;
}

KForm pullback(const Mat& g, const KForm& a) {
    if (!g.is_orthogonal()) throw std::invalid_argument("pullback: matrix not orthogonal");
    if (a.degree() == 0) return a;
    // Pullback of dx_i is row i of g, as a 1-form.
    std::array<KForm, 8> rows{KForm(1), KForm(1), KForm(1), KForm(1),
                              KForm(1), KForm(1), KForm(1), KForm(1)};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (g(i, j) != 0) rows[i].add_term(1u << j, g(i, j));
    KForm r(a.degree());
    for (const auto& [m, c] : a.terms()) {
        KForm prod(0);
        prod.add_term(0, c);
        for (int i : KForm::mask_to_indices(m)) prod = wedge(prod, rows[i - 1]);
        for (const auto& [pm, pc] : prod.terms()) r.add_term(pm, pc);
    }
    return r;
}

Mat induced_matrix_on_lambda27(const Mat& g) {
    auto e = lambda27_basis();
    Mat m(7, 7);
    for (int j = 0; j < 7; ++j) {
        KForm img = pullback(g, e[j]);
        KForm recon(2);
        for (int i = 0; i < 7; ++i) {
            m(i, j) = inner_product(img, e[i]) / 4;  // e-basis has squared norm 4
            recon = recon + e[i].scaled(m(i, j));
        }
        if (recon != img)
            throw std::domain_error("induced_matrix_on_lambda27: image leaves span{e_1..e_7}");
    }
    return m;
}

int lambda2_index(int i, int j) {
    // (1,2)->0, (1,3)->1, ..., (7,8)->27
    return (i - 1) * 8 - (i - 1) * i / 2 + (j - i - 1);
}

std::pair<int, int> lambda2_pair(int index) {
    for (int i = 1; i <= 7; ++i) {
        int block = 8 - i;
        if (index < block) return {i, i + 1 + index};
        index -= block;
    }
    throw std::out_of_range("lambda2_pair");
}

CayleyStructure cayley_structure() {
    CayleyStructure cs;
    cs.omega0 = cayley_form();
    cs.basis27 = lambda27_basis();
    cs.s_matrix = Mat(28, 28);
    for (int col = 0; col < 28; ++col) {
        auto [i, j] = lambda2_pair(col);
        KForm img = s_operator(KForm::monomial({i, j}));
        for (const auto& [m, c] : img.terms()) {
            auto idx = KForm::mask_to_indices(m);
            cs.s_matrix(lambda2_index(idx[0], idx[1]), col) = c;
        }
    }
    Mat id = Mat::identity(28);
    cs.projector7 = (cs.s_matrix + id).scaled(Rat(1, 4));
    cs.projector21 = (id.scaled(3) - cs.s_matrix).scaled(Rat(1, 4));
    return cs;
}

}  // namespace orbicert
