#include "sho/linalg.hpp"

#include <algorithm>

#include "sho/gf.hpp"

namespace sho {

namespace {

// w -= c * row, lazily normalized by the caller
void axpy(std::vector<int>& w, int c, const std::vector<std::uint8_t>& row) {
    const std::size_t n = row.size();
    for (std::size_t j = 0; j < n; ++j) w[j] -= c * row[j];
}

}  // namespace

bool Echelon::insert(std::vector<std::uint8_t> v) {
    std::vector<int> w(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        int c = gf::norm(w[pivots_[k]], p_);
        if (c) axpy(w, c, rows_[k]);
    }
    int piv = -1;
    for (int j = 0; j < ncols_; ++j) {
        w[j] = gf::norm(w[j], p_);
        if (piv < 0 && w[j]) piv = j;
    }
    if (piv < 0) return false;
    // normalize pivot to 1
    int s = gf::inv(w[piv], p_);
    std::vector<std::uint8_t> row(ncols_);
    for (int j = 0; j < ncols_; ++j) row[j] = static_cast<std::uint8_t>(gf::mul(w[j], s, p_));
    // back-substitute into existing rows to keep RREF
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        int c = rows_[k][piv];
        if (c) {
            std::vector<int> tmp(rows_[k].begin(), rows_[k].end());
            axpy(tmp, c, row);
            for (int j = 0; j < ncols_; ++j) rows_[k][j] = static_cast<std::uint8_t>(gf::norm(tmp[j], p_));
        }
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

std::vector<std::uint8_t> Echelon::reduce(std::vector<std::uint8_t> v) const {
    std::vector<int> w(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        int c = gf::norm(w[pivots_[k]], p_);
        if (c) axpy(w, c, rows_[k]);
    }
    for (int j = 0; j < ncols_; ++j) v[j] = static_cast<std::uint8_t>(gf::norm(w[j], p_));
    return v;
}

bool Echelon::contains(const std::vector<std::uint8_t>& v) const {
    auto r = reduce(v);
    return std::ranges::all_of(r, [](std::uint8_t x) { return x == 0; });
}

std::optional<std::vector<std::uint8_t>> Echelon::solve(const std::vector<std::uint8_t>& v) const {
    std::vector<int> w(v.begin(), v.end());
    std::vector<std::uint8_t> coords(rows_.size(), 0);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        int c = gf::norm(w[pivots_[k]], p_);
        coords[k] = static_cast<std::uint8_t>(c);
        if (c) axpy(w, c, rows_[k]);
    }
    for (int j = 0; j < ncols_; ++j)
        if (gf::norm(w[j], p_)) return std::nullopt;
    return coords;
}

Mat Mat::identity(int n) {
    Mat x(n, n);
    for (int i = 0; i < n; ++i) x.at(i, i) = 1;
    return x;
}

Mat mat_mul(const Mat& x, const Mat& y, int p) {
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int c = x.at(i, k);
            if (!c) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = static_cast<std::uint8_t>(gf::norm(z.at(i, j) + c * y.at(k, j), p));
        }
    return z;
}

int mat_rank(Mat x, int p) {
    Echelon e(p, x.cols);
    for (int i = 0; i < x.rows; ++i)
        e.insert({x.a.begin() + static_cast<std::size_t>(i) * x.cols,
                  x.a.begin() + static_cast<std::size_t>(i + 1) * x.cols});
    return e.rank();
}

std::optional<Mat> mat_inverse(const Mat& x, int p) {
    if (x.rows != x.cols) return std::nullopt;
    const int n = x.rows;
    // Gauss-Jordan on [x | I]
    Mat a = x;
    Mat inv = Mat::identity(n);
    for (int col = 0, row = 0; col < n; ++col, ++row) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (a.at(i, col)) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            std::swap(a.at(row, j), a.at(piv, j));
            std::swap(inv.at(row, j), inv.at(piv, j));
        }
        int s = gf::inv(a.at(row, col), p);
        for (int j = 0; j < n; ++j) {
            a.at(row, j) = static_cast<std::uint8_t>(gf::mul(a.at(row, j), s, p));
            inv.at(row, j) = static_cast<std::uint8_t>(gf::mul(inv.at(row, j), s, p));
        }
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            int c = a.at(i, col);
            if (!c) continue;
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = static_cast<std::uint8_t>(gf::sub(a.at(i, j), gf::mul(c, a.at(row, j), p), p));
                inv.at(i, j) = static_cast<std::uint8_t>(gf::sub(inv.at(i, j), gf::mul(c, inv.at(row, j), p), p));
            }
        }
    }
    return inv;
}

std::vector<std::vector<std::uint8_t>> mat_nullspace(const Mat& x, int p) {
    const int n = x.cols;
    // row-reduce, tracking pivot columns
    Mat a = x;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < a.rows; ++col) {
        int piv = -1;
        for (int i = row; i < a.rows; ++i)
            if (a.at(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(a.at(row, j), a.at(piv, j));
        int s = gf::inv(a.at(row, col), p);
        for (int j = 0; j < n; ++j) a.at(row, j) = static_cast<std::uint8_t>(gf::mul(a.at(row, j), s, p));
        for (int i = 0; i < a.rows; ++i) {
            if (i == row) continue;
            int c = a.at(i, col);
            if (!c) continue;
            for (int j = 0; j < n; ++j)
                a.at(i, j) = static_cast<std::uint8_t>(gf::sub(a.at(i, j), gf::mul(c, a.at(row, j), p), p));
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (int freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<std::uint8_t> v(n, 0);
        v[freec] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = static_cast<std::uint8_t>(gf::neg(a.at(static_cast<int>(k), freec), p));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sho
