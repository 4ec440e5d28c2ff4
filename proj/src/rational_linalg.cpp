#include "orbicert/rational_linalg.hpp"

#include <numeric>

namespace orbicert {

namespace {

// Clear denominators row-wise; kernel is invariant under row scaling.
std::vector<std::vector<mpz_class>> to_integer_rows(const Mat& m) {
    std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < m.cols(); ++j) {
            mpz_class d = m(i, j).get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (int j = 0; j < m.cols(); ++j) {
            mpq_class v = m(i, j) * Rat(l);
            v.canonicalize();
            rows[i][j] = v.get_num();  // denominator is 1 by construction
        }
    }
    return rows;
}

}  // namespace

Rat determinant(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    int n = m.rows();
    Mat a = m;
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        Rat inv = 1 / a(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            Rat f = a(r, col) * inv;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

std::optional<std::vector<Rat>> solve_linear(const Mat& a, const std::vector<Rat>& b) {
    const int nr = a.rows(), nc = a.cols();
    Mat aug(nr, nc + 1);
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nc; ++j) aug(i, j) = a(i, j);
        aug(i, nc) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int r = row; r < nr; ++r)
            if (aug(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j <= nc; ++j) std::swap(aug(piv, j), aug(row, j));
        Rat inv = 1 / aug(row, col);
        for (int r = 0; r < nr; ++r) {
            if (r == row || aug(r, col) == 0) continue;
            Rat f = aug(r, col) * inv;
            for (int j = col; j <= nc; ++j) aug(r, j) -= f * aug(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < nr; ++r)
        if (aug(r, nc) != 0) return std::nullopt;
    std::vector<Rat> x(nc, Rat(0));
    for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r)
        x[pivot_col[r]] = aug(r, nc) / aug(r, pivot_col[r]);
    return x;
}

Nullspace nullspace(const Mat& m) {
    const int nr = m.rows(), nc = m.cols();
    auto a = to_integer_rows(m);

    // Bareiss fraction-free elimination with row pivoting.  All divisions
    // below are exact by the Bareiss identity.
    std::vector<int> pivot_col;  // pivot column of echelon row r
    mpz_class prev = 1;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int r = row; r < nr; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row) std::swap(a[piv], a[row]);
        for (int r = row + 1; r < nr; ++r) {
            for (int j = col + 1; j < nc; ++j) {
                mpz_class t = a[r][j] * a[row][col] - a[r][col] * a[row][j];
                mpz_divexact(a[r][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[row][col];
        pivot_col.push_back(col);
        ++row;
    }

    const int rank = static_cast<int>(pivot_col.size());
    Nullspace ns;
    ns.dimension = nc - rank;

    std::vector<bool> is_pivot(nc, false);
    for (int c : pivot_col) is_pivot[c] = true;

    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(nc, Rat(0));
        x[f] = 1;
        for (int r = rank - 1; r >= 0; --r) {
            int pc = pivot_col[r];
            Rat s = 0;
            for (int j = pc + 1; j < nc; ++j)
                if (x[j] != 0 && a[r][j] != 0) s += Rat(a[r][j]) * x[j];
            x[pc] = -s / Rat(a[r][pc]);
        }
        ns.basis.push_back(std::move(x));
    }
    return ns;
}

Nullspace fixed_subspace_dense(const std::vector<Mat>& mats) {
    if (mats.empty()) throw std::invalid_argument("fixed_subspace_dense: empty family");
    const int d = mats[0].cols();
    Mat stacked(static_cast<int>(mats.size()) * d, d);
    int off = 0;
    for (const Mat& m : mats) {
        if (m.rows() != d || m.cols() != d)
            throw std::invalid_argument("fixed_subspace_dense: size mismatch");
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                stacked(off + i, j) = m(i, j) - (i == j ? 1 : 0);
        off += d;
    }
    return nullspace(stacked);
}

std::optional<SignedPerm> as_signed_perm(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const int n = m.rows();
    SignedPerm sp;
    sp.perm.assign(n, -1);
    sp.sign.assign(n, 0);
    std::vector<bool> row_used(n, false);
    for (int j = 0; j < n; ++j) {
        int hit = -1;
        for (int i = 0; i < n; ++i) {
            if (m(i, j) == 0) continue;
            if (hit >= 0) return std::nullopt;
            if (m(i, j) != 1 && m(i, j) != -1) return std::nullopt;
            hit = i;
        }
        if (hit < 0 || row_used[hit]) return std::nullopt;
        row_used[hit] = true;
        sp.perm[j] = hit;
        sp.sign[j] = m(hit, j) > 0 ? 1 : -1;
    }
    return sp;
}

SignedPerm kron_signed(const SignedPerm& a, const SignedPerm& b) {
    const int na = static_cast<int>(a.perm.size()), nb = static_cast<int>(b.perm.size());
    SignedPerm r;
    r.perm.resize(static_cast<size_t>(na) * nb);
    r.sign.resize(static_cast<size_t>(na) * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            r.perm[static_cast<size_t>(i) * nb + j] = a.perm[i] * nb + b.perm[j];
            r.sign[static_cast<size_t>(i) * nb + j] = a.sign[i] * b.sign[j];
        }
    return r;
}

Nullspace fixed_subspace_signed(const std::vector<SignedPerm>& gens, int dim) {
    // Sign-tracking union-find: the constraint M v = v reads
    // v_{perm[j]} = sign[j] * v_j for every generator and coordinate.
    std::vector<int> parent(dim), sgn(dim, 1);
    std::vector<char> dead(dim, 0);
    std::iota(parent.begin(), parent.end(), 0);

    // Invariant: v_x = sgn[x] * v_{parent[x]}.  find() returns (root, sign of x
    // relative to root) and compresses the path.
    std::vector<int> path;
    auto find = [&](int x) {
        path.clear();
        int cur = x;
        while (parent[cur] != cur) { path.push_back(cur); cur = parent[cur]; }
        int root = cur, s_parent = 1;
        for (int i = static_cast<int>(path.size()) - 1; i >= 0; --i) {
            int node = path[i];
            int s_node = sgn[node] * s_parent;
            parent[node] = root;
            sgn[node] = s_node;
            s_parent = s_node;
        }
        return std::pair<int, int>(root, x == root ? 1 : sgn[x]);
    };

    for (const auto& g : gens) {
        for (int j = 0; j < dim; ++j) {
            int i = g.perm[j], s = g.sign[j];  // v_i = s * v_j
            auto [rj, sj] = find(j);
            auto [ri, si] = find(i);
            if (ri == rj) {
                if (si != s * sj) dead[ri] = 1;
            } else {
                parent[ri] = rj;
                sgn[ri] = s * sj * si;  // v_ri = si^{-1} v_i = si*s*sj * v_rj
                dead[rj] = dead[rj] || dead[ri];
            }
        }
    }

    Nullspace ns;
    std::vector<std::pair<int, int>> rel(dim);  // (root, sign to root)
    for (int x = 0; x < dim; ++x) rel[x] = find(x);
    std::vector<int> root_index(dim, -1);
    for (int x = 0; x < dim; ++x) {
        int r = rel[x].first;
        if (dead[r] || root_index[r] >= 0) continue;
        if (x == r) {
            root_index[r] = static_cast<int>(ns.basis.size());
            ns.basis.emplace_back(dim, Rat(0));
        }
    }
    for (int x = 0; x < dim; ++x) {
        int r = rel[x].first;
        if (dead[r]) continue;
        ns.basis[root_index[r]][x] = rel[x].second;
    }
    ns.dimension = static_cast<int>(ns.basis.size());
    return ns;
}

Nullspace fixed_subspace(const std::vector<Mat>& mats, int dim) {
    if (mats.empty()) {
        Nullspace ns;
        ns.dimension = dim;
        for (int i = 0; i < dim; ++i) {
            std::vector<Rat> v(dim, Rat(0));
            v[i] = 1;
            ns.basis.push_back(std::move(v));
        }
        return ns;
    }
    std::vector<SignedPerm> sps;
    sps.reserve(mats.size());
    for (const Mat& m : mats) {
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument("fixed_subspace: size mismatch");
        auto sp = as_signed_perm(m);
        if (!sp) return fixed_subspace_dense(mats);
        sps.push_back(std::move(*sp));
    }
    return fixed_subspace_signed(sps, dim);
}

}  // namespace orbicert
