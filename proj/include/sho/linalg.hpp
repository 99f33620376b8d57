#ifndef SHO_LINALG_HPP
#define SHO_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace sho {

/// Row space over GF(p) kept in reduced row echelon form. Rows are dense,
/// pivots strictly increasing.
class Echelon {
public:
    Echelon(int p, int ncols) : p_(p), ncols_(ncols) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    const std::vector<std::vector<std::uint8_t>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Reduce v against the span; on a nonzero residual, adjoin it (keeping
    /// RREF) and return true.
    bool insert(std::vector<std::uint8_t> v);
    bool contains(const std::vector<std::uint8_t>& v) const;
    std::vector<std::uint8_t> reduce(std::vector<std::uint8_t> v) const;
    /// Coordinates of v in the stored row basis, or nullopt if v is outside.
    std::optional<std::vector<std::uint8_t>> solve(const std::vector<std::uint8_t>& v) const;

private:
    int p_;
    int ncols_;
    std::vector<std::vector<std::uint8_t>> rows_;
    std::vector<int> pivots_;
};

/// Dense matrix over GF(p), row major.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    std::uint8_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    static Mat identity(int n);
    friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_mul(const Mat& x, const Mat& y, int p);
int mat_rank(Mat x, int p);
std::optional<Mat> mat_inverse(const Mat& x, int p);
/// Basis of the right kernel {v : x v = 0}; each vector has length x.cols.
std::vector<std::vector<std::uint8_t>> mat_nullspace(const Mat& x, int p);

}  // namespace sho

#endif
