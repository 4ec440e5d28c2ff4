// Dense exact-rational matrices and fraction-free elimination.
#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace orbicert {

using Rat = mpq_class;

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    if (o(k, j) != 0) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Mat scaled(const Rat& c) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
        return r;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    bool is_orthogonal() const {
        return rows_ == cols_ && (transpose() * *this).is_identity();
    }

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

inline Mat kronecker(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (b(k, l) != 0) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

// Determinant via Bareiss (fraction-free over cleared-denominator integers).
// Only needed for small matrices; used to enforce det = +1 on inputs.
Rat determinant(const Mat& m);

// Nullspace of a rational matrix: returns (dimension, basis vectors as Mat columns).
// Rows are scaled to integers, then Bareiss fraction-free elimination finds the
// pivot structure; free columns yield the kernel basis.
struct Nullspace {
    int dimension = 0;
    std::vector<std::vector<Rat>> basis;  // each vector has length = cols of input
};
Nullspace nullspace(const Mat& m);

// Solve A x = b exactly; nullopt if inconsistent (any solution if underdetermined).
std::optional<std::vector<Rat>> solve_linear(const Mat& a, const std::vector<Rat>& b);

// Common fixed subspace of a family of square matrices: ker of stacked (M - I).
Nullspace fixed_subspace_dense(const std::vector<Mat>& mats);

// --- Signed permutation fast path ---------------------------------------------
// A signed permutation matrix maps e_j to sign[j] * e_{perm[j]}.
struct SignedPerm {
    std::vector<int> perm;  // image index of basis vector j
    std::vector<int> sign;  // +1 / -1
};

// Recognize a signed permutation matrix; nullopt if m is not one.
std::optional<SignedPerm> as_signed_perm(const Mat& m);

// Kronecker product of signed permutations (row-major index pairing, matching
// kronecker() on the corresponding matrices).
SignedPerm kron_signed(const SignedPerm& a, const SignedPerm& b);

// Fixed subspace of a set of signed permutations by sign-propagating union-find:
// coordinates i and perm[i] must carry proportional values with the given sign;
// a cycle with inconsistent sign kills its whole component.
Nullspace fixed_subspace_signed(const std::vector<SignedPerm>& gens, int dim);

// Dispatcher: uses the signed-permutation path when every generator qualifies,
// dense Bareiss elimination otherwise.
Nullspace fixed_subspace(const std::vector<Mat>& mats, int dim);

}  // namespace orbicert
