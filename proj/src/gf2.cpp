#include "grqn/gf2.hpp"

#include "grqn/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace grqn {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), stride_(static_cast<std::size_t>((cols + 63) / 64)),
      data_(static_cast<std::size_t>(rows) * stride_, 0)
{
    if (rows < 0 || cols < 0)
        throw Error("negative matrix dimensions");
}

BitMatrix BitMatrix::identity(int n)
{
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows)
{
    const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    BitMatrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        const std::string& s = rows[static_cast<std::size_t>(r)];
        if (static_cast<int>(s.size()) != cols)
            throw Error("ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            if (s[static_cast<std::size_t>(c)] == '1')
                m.set(r, c);
    }
    return m;
}

void BitMatrix::add_row(int dst, int src)
{
    auto d = row_words(dst);
    auto s = row_words(src);
    for (std::size_t w = 0; w < stride_; ++w)
        d[w] ^= s[w];
}

void BitMatrix::swap_rows(int a, int b)
{
    if (a == b)
        return;
    auto x = row_words(a);
    auto y = row_words(b);
    std::swap_ranges(x.begin(), x.end(), y.begin());
}

bool BitMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

namespace {

// Reduced row echelon form in place; returns pivot columns in order.
std::vector<int> row_reduce(BitMatrix& m, bool full)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && !m.get(p, c))
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        for (int i = full ? 0 : r + 1; i < m.rows(); ++i)
            if (i != r && m.get(i, c))
                m.add_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int BitMatrix::rank() const
{
    if (rows_ == 0 || cols_ == 0)
        return 0;
    BitMatrix copy = *this;
    return static_cast<int>(row_reduce(copy, false).size());
}

BitMatrix BitMatrix::transpose() const
{
    BitMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        auto words = row_words(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            Word bits = words[w];
            while (bits) {
                const int c = static_cast<int>(w * 64) + std::countr_zero(bits);
                t.set(c, r);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::kernel() const
{
    BitMatrix reduced = *this;
    const std::vector<int> pivots = row_reduce(reduced, true);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots)
        is_pivot[static_cast<std::size_t>(c)] = true;
    const int nullity = cols_ - static_cast<int>(pivots.size());
    BitMatrix basis(nullity, cols_);
    int k = 0;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        basis.set(k, f);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (reduced.get(static_cast<int>(i), f))
                basis.set(k, pivots[i]);
        ++k;
    }
    return basis;
}

BitMatrix BitMatrix::inverse() const
{
    if (rows_ != cols_)
        throw Error("inverse of a non-square matrix");
    const int n = rows_;
    BitMatrix aug = hconcat(identity(n));
    const std::vector<int> pivots = row_reduce(aug, true);
    if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots.back() != n - 1))
        throw Error("singular matrix has no inverse");
    std::vector<int> rows(static_cast<std::size_t>(n));
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), n);
    return aug.submatrix(rows, cols);
}

BitMatrix BitMatrix::submatrix(std::span<const int> row_ids, std::span<const int> col_ids) const
{
    BitMatrix out(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (std::size_t i = 0; i < row_ids.size(); ++i)
        for (std::size_t j = 0; j < col_ids.size(); ++j)
            if (get(row_ids[i], col_ids[j]))
                out.set(static_cast<int>(i), static_cast<int>(j));
    return out;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& right) const
{
    if (right.rows_ != rows_)
        throw Error("hconcat row mismatch");
    BitMatrix out(rows_, cols_ + right.cols_);
    for (int r = 0; r < rows_; ++r) {
        auto dst = out.row_words(r);
        auto src = row_words(r);
        std::copy(src.begin(), src.end(), dst.begin());
        for (int c = 0; c < right.cols_; ++c)
            if (right.get(r, c))
                out.set(r, cols_ + c);
    }
    return out;
}

std::string BitMatrix::to_string() const
{
    std::string s;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error("matrix product dimension mismatch");
    BitMatrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        auto dst = out.row_words(r);
        auto words = a.row_words(r);
        for (std::size_t w = 0; w < a.stride_; ++w) {
            BitMatrix::Word bits = words[w];
            while (bits) {
                const int k = static_cast<int>(w * 64) + std::countr_zero(bits);
                auto src = b.row_words(k);
                for (std::size_t x = 0; x < out.stride_; ++x)
                    dst[x] ^= src[x];
                bits &= bits - 1;
            }
        }
    }
    return out;
}

GradedMap::GradedMap(int shift, std::vector<int> dims) : shift_(shift), dims_(std::move(dims))
{
    if (shift_ < 1)
        throw Error("graded map shift must be positive");
    blocks_.reserve(dims_.size());
    for (int t = 0; t <= top_degree(); ++t)
        blocks_.emplace_back(dim(t + shift_), dim(t));
}

int GradedMap::total_dim() const
{
    return std::accumulate(dims_.begin(), dims_.end(), 0);
}

bool GradedMap::is_zero() const
{
    return std::all_of(blocks_.begin(), blocks_.end(), [](const BitMatrix& b) { return b.is_zero(); });
}

bool GradedMap::is_differential() const
{
    for (int t = 0; t + shift_ <= top_degree(); ++t)
        if (!(block(t + shift_) * block(t)).is_zero())
            return false;
    return true;
}

}  // namespace grqn
