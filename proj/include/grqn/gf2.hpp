#pragma once

// Dense matrices over F_2 with 64 columns packed per machine word, and
// degree-indexed families of them.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace grqn {

class BitMatrix {
public:
    using Word = std::uint64_t;

    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);
    /// rows given as 0/1 strings, e.g. {"110", "011"}.
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const
    {
        return (data_[index(r, c)] >> (c & 63)) & 1U;
    }
    void set(int r, int c, bool v = true)
    {
        const Word bit = Word{1} << (c & 63);
        if (v)
            data_[index(r, c)] |= bit;
        else
            data_[index(r, c)] &= ~bit;
    }
    void flip(int r, int c) { data_[index(r, c)] ^= Word{1} << (c & 63); }

    std::span<Word> row_words(int r)
    {
        return {data_.data() + static_cast<std::size_t>(r) * stride_, stride_};
    }
    std::span<const Word> row_words(int r) const
    {
        return {data_.data() + static_cast<std::size_t>(r) * stride_, stride_};
    }
    /// row(dst) ^= row(src)
    void add_row(int dst, int src);
    void swap_rows(int a, int b);

    bool is_zero() const;
    int rank() const;
    BitMatrix transpose() const;
    /// Rows are a basis of the null space {v : M v = 0}, in free-column order.
    BitMatrix kernel() const;
    /// Throws Error if singular or not square.
    BitMatrix inverse() const;
    BitMatrix submatrix(std::span<const int> row_ids, std::span<const int> col_ids) const;
    /// Stacks columns of `right` after those of this matrix.
    BitMatrix hconcat(const BitMatrix& right) const;

    std::string to_string() const;

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t index(int r, int c) const
    {
        return static_cast<std::size_t>(r) * stride_ + static_cast<std::size_t>(c >> 6);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

/// Maps M_t : C^t -> C^{t+shift}, one block per degree t. Block t has
/// dims[t + shift] rows (zero past the top degree) and dims[t] columns.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(int shift, std::vector<int> dims);

    int shift() const { return shift_; }
    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    int dim(int t) const
    {
        return t >= 0 && t <= top_degree() ? dims_[static_cast<std::size_t>(t)] : 0;
    }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const;

    BitMatrix& block(int t) { return blocks_[static_cast<std::size_t>(t)]; }
    const BitMatrix& block(int t) const { return blocks_[static_cast<std::size_t>(t)]; }

    bool is_zero() const;
    /// True when M_{t+shift} M_t = 0 for all t.
    bool is_differential() const;

    friend bool operator==(const GradedMap&, const GradedMap&) = default;

private:
    int shift_ = 1;
    std::vector<int> dims_;
    std::vector<BitMatrix> blocks_;
};

}  // namespace grqn
