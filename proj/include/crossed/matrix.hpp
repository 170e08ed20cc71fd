#pragma once

#include "crossed/group.hpp"

#include <utility>
#include <vector>

namespace crossed {

/// Dense integer matrix with exact arithmetic.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}
    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    Mat operator*(const Mat& rhs) const;
    bool is_zero() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct SnfResult {
    Mat d;                     // diagonal form
    Mat v;                     // column transform: original * v = row_ops(d)
    Mat vinv;                  // v^-1
    int rank = 0;
    std::vector<Int> divisors; // nonzero diagonal, divisibility chain
};

/// Smith normal form by elementary row/column operations. When
/// need_transforms is false, v and vinv are left empty.
SnfResult smith_normal_form(Mat a, bool need_transforms = false);

/// Invariant factors of ker(mn) / im(mnext) given mn * mnext = 0:
/// nontrivial torsion divisors (ascending) followed by one 0 per free rank.
std::vector<Int> quotient_invariants(const Mat& mn, const Mat& mnext);

/// Column-sparse integer matrix for the flattened chain complexes.
struct SparseIntMat {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> col;

    SparseIntMat() = default;
    SparseIntMat(int r, int c) : rows(r), cols(c), col(static_cast<std::size_t>(c)) {}
    void add(int i, int j, long long v);
    bool compose_is_zero(const SparseIntMat& next) const;   // this * next == 0
    Mat dense() const;
};

} // namespace crossed
