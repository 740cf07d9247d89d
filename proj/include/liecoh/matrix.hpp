#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

// Dense matrix over exact rationals. Row-major. Zero-sized matrices are legal
// (empty modules, empty complex degrees) and behave as linear-algebra units.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int r, int c) { return a_[index(r, c)]; }
    const Rat& operator()(int r, int c) const { return a_[index(r, c)]; }

    bool is_zero() const {
        for (const Rat& q : a_)
            if (sgn(q) != 0) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat& operator+=(const Mat& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Mat& operator*=(const Rat& s) {
        for (Rat& q : a_) q *= s;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, const Rat& s) { return a *= s; }
    friend Mat operator*(const Rat& s, Mat a) { return a *= s; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Mat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rat& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rat& bkj = b(k, j);
                    if (sgn(bkj) != 0) c(i, j) += aik * bkj;
                }
            }
        return c;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

  private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of range");
        return std::size_t(r) * cols_ + c;
    }
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<Rat> a_;
};

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

// Kronecker product with index (i1,i2) -> i1*b.rows()+i2.
inline Mat kron(const Mat& a, const Mat& b) {
    Mat c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    if (sgn(b(p, q)) != 0) c(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return c;
}

// Reduced row echelon form over the rationals. Pivot scan is deterministic:
// columns left to right, first row with a nonzero entry. Returns pivot columns.
inline std::vector<int> rref_in_place(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (sgn(m(r, col)) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        Rat inv = 1 / m(row, col);
        for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            Rat f = m(r, col);
            for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Rank by fraction-free (Bareiss) elimination: rows are cleared to integers,
// then eliminated with exact divisions only. Cross-checked against the
// rational RREF in the test suite.
inline int rank_fraction_free(const Mat& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (int i = 0; i < rows; ++i) {
        Int lcm = 1;
        for (int j = 0; j < cols; ++j) {
            const Int& den = m(i, j).get_den();
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (int j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
    }
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(a[r][col]) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != rank) std::swap(a[p], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                Int num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

inline int rank(const Mat& m) { return rank_fraction_free(m); }

// Canonical basis of the right null space {x : m x = 0}, one vector per free
// column in ascending order, entry 1 at the free column.
inline std::vector<std::vector<Rat>> nullspace(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols());
        v[free] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r(int(pr), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> pivots = rref_in_place(aug);
    // pivots in the right block mean the left block lost rank
    int lead = 0;
    for (int p : pivots)
        if (p < n) ++lead;
    if (lead != n) throw std::invalid_argument("singular matrix");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Row space in reduced echelon form; supports exact membership queries.
class RowSpace {
  public:
    RowSpace() : cols_(0) {}
    explicit RowSpace(const Mat& rows) : cols_(rows.cols()) {
        Mat r = rows;
        std::vector<int> pivots = rref_in_place(r);
        basis_ = Mat(int(pivots.size()), cols_);
        for (int i = 0; i < basis_.rows(); ++i)
            for (int j = 0; j < cols_; ++j) basis_(i, j) = r(i, j);
        pivots_ = std::move(pivots);
    }

    int dim() const { return basis_.rows(); }
    int ambient_dim() const { return cols_; }
    const Mat& basis() const { return basis_; }

    bool contains(const std::vector<Rat>& v) const {
        if (int(v.size()) != cols_) throw std::invalid_argument("vector dimension mismatch");
        std::vector<Rat> w = v;
        for (int i = 0; i < basis_.rows(); ++i) {
            Rat f = w[pivots_[i]];
            if (sgn(f) == 0) continue;
            for (int j = 0; j < cols_; ++j) w[j] -= f * basis_(i, j);
        }
        for (const Rat& q : w)
            if (sgn(q) != 0) return false;
        return true;
    }

    bool same_space(const RowSpace& o) const {
        return cols_ == o.cols_ && pivots_ == o.pivots_ && basis_ == o.basis_;
    }

  private:
    int cols_;
    Mat basis_;
    std::vector<int> pivots_;
};

}  // namespace liecoh
