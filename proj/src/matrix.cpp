#include "crossed/matrix.hpp"

#include <map>

namespace crossed {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix product: shape mismatch");
    Mat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Int& b = rhs.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

bool Mat::is_zero() const {
    for (const Int& v : a_)
        if (v != 0) return false;
    return true;
}

namespace {

void col_swap(Mat& m, int i, int j) {
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}
void col_add(Mat& m, int dst, int src, const Int& f) {
    for (int r = 0; r < m.rows(); ++r) m.at(r, dst) += f * m.at(r, src);
}
void col_neg(Mat& m, int i) {
    for (int r = 0; r < m.rows(); ++r) m.at(r, i) = -m.at(r, i);
}
void row_swap(Mat& m, int i, int j) {
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}
void row_add(Mat& m, int dst, int src, const Int& f) {
    for (int c = 0; c < m.cols(); ++c) m.at(dst, c) += f * m.at(src, c);
}
void row_neg(Mat& m, int i) {
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

Int iabs(const Int& v) { return v < 0 ? Int(-v) : v; }

} // namespace

SnfResult smith_normal_form(Mat a, bool need_transforms) {
    SnfResult res;
    int m = a.rows();
    int n = a.cols();
    Mat v, vinv;
    if (need_transforms) {
        v = Mat::identity(n);
        vinv = Mat::identity(n);
    }
    // column op helpers keep v and vinv in sync: a <- a*E, v <- v*E, vinv <- E^-1*vinv
    auto cswap = [&](int i, int j) {
        col_swap(a, i, j);
        if (need_transforms) {
            col_swap(v, i, j);
            row_swap(vinv, i, j);
        }
    };
    auto cadd = [&](int dst, int src, const Int& f) {   // col_dst += f*col_src
        col_add(a, dst, src, f);
        if (need_transforms) {
            col_add(v, dst, src, f);
            row_add(vinv, src, dst, -f);
        }
    };
    auto cneg = [&](int i) {
        col_neg(a, i);
        if (need_transforms) {
            col_neg(v, i);
            row_neg(vinv, i);
        }
    };

    int k = 0;
    int lim = std::min(m, n);
    while (k < lim) {
        // pivot: smallest nonzero absolute value in the trailing block
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = k; i < m; ++i)
            for (int j = k; j < n; ++j) {
                if (a.at(i, j) == 0) continue;
                Int mag = iabs(a.at(i, j));
                if (pi < 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != k) row_swap(a, pi, k);
        if (pj != k) cswap(pj, k);

        bool clean = true;
        for (int i = k + 1; i < m; ++i) {
            if (a.at(i, k) == 0) continue;
            Int q = a.at(i, k) / a.at(k, k);
            row_add(a, i, k, -q);
            if (a.at(i, k) != 0) clean = false;
        }
        for (int j = k + 1; j < n; ++j) {
            if (a.at(k, j) == 0) continue;
            Int q = a.at(k, j) / a.at(k, k);
            cadd(j, k, -q);
            if (a.at(k, j) != 0) clean = false;
        }
        if (!clean) continue;   // residues shrink, re-pick pivot

        // divisibility: pivot must divide the whole trailing block
        bool divides = true;
        for (int i = k + 1; i < m && divides; ++i)
            for (int j = k + 1; j < n && divides; ++j)
                if (a.at(i, j) % a.at(k, k) != 0) {
                    row_add(a, k, i, 1);
                    divides = false;
                }
        if (!divides) continue;

        if (a.at(k, k) < 0) cneg(k);
        ++k;
    }
    res.rank = k;
    for (int i = 0; i < k; ++i) res.divisors.push_back(a.at(i, i));
    res.d = std::move(a);
    if (need_transforms) {
        res.v = std::move(v);
        res.vinv = std::move(vinv);
    }
    return res;
}

std::vector<Int> quotient_invariants(const Mat& mn, const Mat& mnext) {
    if (mnext.rows() != mn.cols())
        throw Error("quotient_invariants: shape mismatch");
    SnfResult s = smith_normal_form(mn, true);
    int kdim = mn.cols() - s.rank;   // rank of ker(mn)

    // coordinates of im(mnext) in the kernel basis: bottom rows of vinv * mnext
    Mat w = s.vinv * mnext;
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < w.cols(); ++j)
            if (w.at(i, j) != 0)
                throw Error("quotient_invariants: image not contained in kernel");
    Mat q(kdim, w.cols());
    for (int i = 0; i < kdim; ++i)
        for (int j = 0; j < w.cols(); ++j) q.at(i, j) = w.at(s.rank + i, j);

    SnfResult qs = smith_normal_form(std::move(q));
    std::vector<Int> out;
    for (const Int& d : qs.divisors)
        if (d != 1) out.push_back(d);
    for (int i = 0; i < kdim - qs.rank; ++i) out.push_back(0);
    return out;
}

void SparseIntMat::add(int i, int j, long long v) {
    if (v == 0) return;
    col[static_cast<std::size_t>(j)].emplace_back(i, v);
}

bool SparseIntMat::compose_is_zero(const SparseIntMat& next) const {
    if (next.rows != cols) throw Error("compose: shape mismatch");
    std::map<int, long long> acc;
    for (int j = 0; j < next.cols; ++j) {
        acc.clear();
        for (const auto& [k, v] : next.col[static_cast<std::size_t>(j)]) {
            for (const auto& [i, w] : col[static_cast<std::size_t>(k)]) acc[i] += v * w;
        }
        for (const auto& [i, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

Mat SparseIntMat::dense() const {
    Mat out(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col[static_cast<std::size_t>(j)]) out.at(i, j) += v;
    return out;
}

} // namespace crossed
