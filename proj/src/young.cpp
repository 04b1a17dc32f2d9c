#include "grqn/young.hpp"

#include "grqn/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace grqn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidPartition("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidPartition("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_rows(std::vector<int> rows)
{
    while (!rows.empty() && rows.back() == 0)
        rows.pop_back();
    return Partition(std::move(rows));
}

bool Partition::fits_in_grid(int d, int c) const
{
    return length() <= d && (empty() || parts_.front() <= c);
}

bool Partition::contains(const Partition& inner) const
{
    if (inner.length() > length())
        return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.row(i) > row(i))
            return false;
    return true;
}

std::string Partition::to_string() const
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        out << (i ? "," : "") << parts_[i];
    out << ')';
    return out.str();
}

bool grid_order_less(const Partition& a, const Partition& b)
{
    if (a.weight() != b.weight())
        return a.weight() < b.weight();
    return a > b;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x);
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

// Partitions of `remaining` with at most `rows_left` parts, each <= cap,
// appended in lexicographically descending order.
void fill_partitions(int remaining, int rows_left, int cap, std::vector<int>& prefix,
                     std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (rows_left == 0)
        return;
    for (int part = std::min(cap, remaining); part >= 1; --part) {
        if (part * rows_left < remaining)
            break;
        prefix.push_back(part);
        fill_partitions(remaining - part, rows_left - 1, part, prefix, out);
        prefix.pop_back();
    }
}

bool has_cell(std::span<const Cell> sorted, Cell c)
{
    return std::binary_search(sorted.begin(), sorted.end(), c);
}

std::vector<Cell> sorted_cells(std::span<const Cell> cells)
{
    std::vector<Cell> v(cells.begin(), cells.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool has_square(std::span<const Cell> sorted)
{
    for (const Cell& c : sorted) {
        if (has_cell(sorted, {c.row, c.col + 1}) && has_cell(sorted, {c.row + 1, c.col})
            && has_cell(sorted, {c.row + 1, c.col + 1}))
            return true;
    }
    return false;
}

int count_components(std::span<const Cell> sorted)
{
    std::vector<int> parent(sorted.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index_of = [&](Cell c) -> int {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
        return it != sorted.end() && *it == c ? static_cast<int>(it - sorted.begin()) : -1;
    };
    int components = static_cast<int>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (Cell nb : {Cell{sorted[i].row, sorted[i].col + 1}, Cell{sorted[i].row + 1, sorted[i].col}}) {
            const int j = index_of(nb);
            if (j < 0)
                continue;
            const int a = find(static_cast<int>(i)), b = find(j);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components;
}

void fill_covers(const Partition& lambda, int row, int d, int cap, int remaining, bool strips_only,
                 std::vector<int>& rows, std::vector<Partition>& out)
{
    if (row > d) {
        if (remaining == 0)
            out.push_back(Partition::from_rows(rows));
        return;
    }
    const int low = lambda.row(row);
    int high = std::min(cap, low + remaining);
    // No 2x2 block in mu/lambda means mu_{i+1} <= lambda_i + 1.
    if (strips_only && row > 1)
        high = std::min(high, lambda.row(row - 1) + 1);
    for (int len = high; len >= low; --len) {
        // the rows below can absorb at most (d - row) * len more cells
        if (remaining - (len - low) > (d - row) * len)
            break;
        rows.push_back(len);
        fill_covers(lambda, row + 1, d, len, remaining - (len - low), strips_only, rows, out);
        rows.pop_back();
    }
}

std::vector<Partition> covers_impl(const Partition& lambda, int k, int d, int c, bool strips_only)
{
    std::vector<Partition> out;
    if (k < 0 || !lambda.fits_in_grid(d, c))
        return out;
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(d));
    fill_covers(lambda, 1, d, c, k, strips_only, rows, out);
    return out;
}

}  // namespace

std::vector<Partition> partitions_in_grid(int d, int c)
{
    std::vector<Partition> out;
    if (d < 0 || c < 0)
        return out;
    std::vector<int> prefix;
    for (int w = 0; w <= d * c; ++w)
        fill_partitions(w, d, c, prefix, out);
    return out;
}

SkewShape skew(const Partition& outer, const Partition& inner)
{
    if (!outer.contains(inner))
        throw NotContained(inner.to_string() + " is not contained in " + outer.to_string());
    SkewShape s{inner, outer, {}};
    for (int i = 1; i <= outer.length(); ++i)
        for (int j = inner.row(i) + 1; j <= outer.row(i); ++j)
            s.cells.push_back({i, j});
    return s;
}

StripClass classify_cells(std::span<const Cell> cells)
{
    const auto sorted = sorted_cells(cells);
    if (has_square(sorted))
        return StripClass::not_broken();
    return StripClass::broken(count_components(sorted));
}

StripClass classify_strip(const SkewShape& s)
{
    return classify_cells(s.cells);
}

std::vector<Corner> corners_of_cells(std::span<const Cell> cells)
{
    const auto sorted = sorted_cells(cells);
    if (has_square(sorted))
        throw InvalidStrip("shape contains a 2x2 block");
    std::vector<Corner> out;
    for (const Cell& c : sorted) {
        const bool north = has_cell(sorted, {c.row - 1, c.col});
        const bool west = has_cell(sorted, {c.row, c.col - 1});
        const bool northwest = has_cell(sorted, {c.row - 1, c.col - 1});
        if (northwest)
            continue;
        if (!north && !west)
            out.push_back({c, CornerKind::Sharp});
        else if (north && west)
            out.push_back({c, CornerKind::Dull});
    }
    return out;
}

std::vector<Corner> corners(const SkewShape& s)
{
    return corners_of_cells(s.cells);
}

bool lenart_coefficient(const Partition& lambda, const Partition& mu)
{
    const SkewShape s = skew(mu, lambda);
    const StripClass cls = classify_strip(s);
    if (!cls.is_broken_border_strip() || cls.components > 2)
        return false;
    if (cls.components == 2)
        return true;
    if (cls.components == 0)
        return false;
    int total = 0;
    for (const Corner& corner : corners(s))
        total += content(corner.cell);
    return (total & 1) != 0;
}

std::vector<Partition> covers_at_distance(const Partition& lambda, int k, int d, int c)
{
    return covers_impl(lambda, k, d, c, false);
}

std::vector<Partition> strip_covers_at_distance(const Partition& lambda, int k, int d, int c)
{
    return covers_impl(lambda, k, d, c, true);
}

}  // namespace grqn
