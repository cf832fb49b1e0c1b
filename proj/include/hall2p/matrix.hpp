#pragma once

/* Dense matrices over F_q.  Desk-scale dimensions: plain row-major storage,
 * first-nonzero pivoting so every downstream enumeration is reproducible.
 * 0 x n and n x 0 matrices are legal; zero modules need them. */

#include <optional>
#include <vector>

#include "hall2p/common.hpp"
#include "hall2p/fq.hpp"

namespace hall2p {

inline constexpr long kDefaultGuard = 10'000'000L;

class FqMatrix {
public:
    FqMatrix() : field_(nullptr), rows_(0), cols_(0) {}
    FqMatrix(const FqField* f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static FqMatrix identity(const FqField* f, size_t n)
    {
        FqMatrix m(f, n, n);
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FqField* field() const { return field_; }

    Fq& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    Fq at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Fq>& data() const { return data_; }

    bool is_zero() const
    {
        for (Fq v : data_)
            if (v != 0)
                return false;
        return true;
    }

    bool operator==(const FqMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    FqMatrix operator*(const FqMatrix& o) const
    {
        FqMatrix r(field_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                Fq a = at(i, k);
                if (a == 0)
                    continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    Fq b = o.at(k, j);
                    if (b != 0)
                        r.at(i, j) = field_->add(r.at(i, j), field_->mul(a, b));
                }
            }
        return r;
    }

    FqMatrix operator+(const FqMatrix& o) const
    {
        FqMatrix r(field_, rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = field_->add(data_[i], o.data_[i]);
        return r;
    }

    FqMatrix operator-(const FqMatrix& o) const
    {
        FqMatrix r(field_, rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = field_->sub(data_[i], o.data_[i]);
        return r;
    }

    FqMatrix operator-() const
    {
        FqMatrix r(field_, rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = field_->neg(data_[i]);
        return r;
    }

    FqMatrix scaled(Fq c) const
    {
        FqMatrix r(field_, rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = field_->mul(data_[i], c);
        return r;
    }

    FqMatrix transposed() const
    {
        FqMatrix r(field_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                r.at(j, i) = at(i, j);
        return r;
    }

    FqMatrix submatrix(size_t r0, size_t r1, size_t c0, size_t c1) const
    {
        FqMatrix r(field_, r1 - r0, c1 - c0);
        for (size_t i = r0; i < r1; ++i)
            for (size_t j = c0; j < c1; ++j)
                r.at(i - r0, j - c0) = at(i, j);
        return r;
    }

    void set_block(size_t r0, size_t c0, const FqMatrix& b)
    {
        for (size_t i = 0; i < b.rows_; ++i)
            for (size_t j = 0; j < b.cols_; ++j)
                at(r0 + i, c0 + j) = b.at(i, j);
    }

private:
    const FqField* field_;
    size_t rows_, cols_;
    std::vector<Fq> data_;
};

inline FqMatrix hconcat(const FqMatrix& a, const FqMatrix& b)
{
    FqMatrix r(a.field() ? a.field() : b.field(), a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

inline FqMatrix vconcat(const FqMatrix& a, const FqMatrix& b)
{
    FqMatrix r(a.field() ? a.field() : b.field(), a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

struct RrefResult {
    FqMatrix mat;
    std::vector<size_t> pivots;
    size_t rank = 0;
};

/* Reduced row echelon form with first-nonzero pivot choice. */
inline RrefResult rref(FqMatrix m)
{
    const FqField* F = m.field();
    RrefResult res;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        Fq piv = F->inv(m.at(row, col));
        for (size_t j = col; j < m.cols(); ++j)
            m.at(row, j) = F->mul(m.at(row, j), piv);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row)
                continue;
            Fq c = m.at(i, col);
            if (c == 0)
                continue;
            for (size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = F->sub(m.at(i, j), F->mul(c, m.at(row, j)));
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = res.pivots.size();
    res.mat = std::move(m);
    return res;
}

inline size_t rank(const FqMatrix& m) { return rref(m).rank; }

inline std::optional<FqMatrix> inverse(const FqMatrix& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    RrefResult r = rref(hconcat(m, FqMatrix::identity(m.field(), m.rows())));
    if (r.rank != m.rows() || (m.rows() > 0 && r.pivots[m.rows() - 1] >= m.cols()))
        return std::nullopt;
    return r.mat.submatrix(0, m.rows(), m.cols(), 2 * m.cols());
}

/* Rows of the result form a basis of { x : m x = 0 } (x as row vectors). */
inline FqMatrix kernel_rows(const FqMatrix& m)
{
    RrefResult r = rref(m);
    const FqField* F = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : r.pivots)
        is_pivot[p] = true;
    FqMatrix K(F, m.cols() - r.rank, m.cols());
    size_t kr = 0;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col])
            continue;
        K.at(kr, free_col) = 1;
        for (size_t i = 0; i < r.rank; ++i)
            K.at(kr, r.pivots[i]) = F->neg(r.mat.at(i, free_col));
        ++kr;
    }
    return K;
}

/* Precomputed elimination of A, answering A x = b for many right-hand
 * sides: particular solutions, consistency, and the kernel. */
class LinSolver {
public:
    explicit LinSolver(const FqMatrix& a) : field_(a.field()), cols_(a.cols())
    {
        FqMatrix aug = hconcat(a, FqMatrix::identity(field_, a.rows()));
        RrefResult r = rref(aug);
        rank_ = 0;
        for (size_t p : r.pivots) {
            if (p < cols_) {
                pivots_.push_back(p);
                ++rank_;
            }
        }
        red_ = r.mat.submatrix(0, a.rows(), 0, cols_);
        transform_ = r.mat.submatrix(0, a.rows(), cols_, cols_ + a.rows());
        kernel_ = kernel_rows(a);
    }

    size_t rank() const { return rank_; }
    const FqMatrix& kernel() const { return kernel_; }

    /* b as a column-vector matrix (rows(a) x 1); returns x with a x = b. */
    std::optional<std::vector<Fq>> solve(const std::vector<Fq>& b) const
    {
        std::vector<Fq> c(transform_.rows(), 0);
        for (size_t i = 0; i < transform_.rows(); ++i) {
            Fq acc = 0;
            for (size_t j = 0; j < transform_.cols(); ++j)
                if (transform_.at(i, j) != 0 && b[j] != 0)
                    acc = field_->add(acc, field_->mul(transform_.at(i, j), b[j]));
            c[i] = acc;
        }
        for (size_t i = rank_; i < c.size(); ++i)
            if (c[i] != 0)
                return std::nullopt;
        std::vector<Fq> x(cols_, 0);
        for (size_t i = 0; i < rank_; ++i)
            x[pivots_[i]] = c[i];
        return x;
    }

private:
    const FqField* field_;
    size_t cols_;
    size_t rank_ = 0;
    std::vector<size_t> pivots_;
    FqMatrix red_, transform_, kernel_;
};

struct AffineSolution {
    std::vector<Fq> particular;
    FqMatrix kernel; // rows are a basis
};

inline std::optional<AffineSolution> solve_affine(const FqMatrix& a,
                                                  const std::vector<Fq>& b)
{
    LinSolver s(a);
    auto x = s.solve(b);
    if (!x)
        return std::nullopt;
    return AffineSolution{*x, s.kernel()};
}

/* All q^k coefficient vectors over a k-row basis, visited in lexicographic
 * coefficient order (first coefficient most significant).  The guard bounds
 * the total count. */
class SpaceEnumerator {
public:
    SpaceEnumerator(const FqField* f, size_t dim, long guard = kDefaultGuard)
        : field_(f), dim_(dim)
    {
        Int total = int_pow(f->q(), dim);
        if (total > guard)
            throw GuardExceeded("enumeration too large", total);
        size_ = total.get_ui();
    }

    unsigned long size() const { return size_; }

    std::vector<Fq> coefficients(unsigned long index) const
    {
        std::vector<Fq> c(dim_, 0);
        for (size_t i = dim_; i-- > 0;) {
            c[i] = static_cast<Fq>(index % field_->q());
            index /= field_->q();
        }
        return c;
    }

private:
    const FqField* field_;
    size_t dim_;
    unsigned long size_ = 1;
};

/* Linear combination of basis rows by a coefficient vector. */
inline std::vector<Fq> lin_comb(const FqField* F, const FqMatrix& basis_rows,
                                const std::vector<Fq>& coeffs)
{
    std::vector<Fq> v(basis_rows.cols(), 0);
    for (size_t i = 0; i < basis_rows.rows(); ++i) {
        Fq c = coeffs[i];
        if (c == 0)
            continue;
        for (size_t j = 0; j < basis_rows.cols(); ++j) {
            Fq b = basis_rows.at(i, j);
            if (b != 0)
                v[j] = F->add(v[j], F->mul(c, b));
        }
    }
    return v;
}

} // namespace hall2p
