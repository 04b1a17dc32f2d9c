#pragma once

// Young-diagram combinatorics for Schubert indexing and Lenart's Q_n formula.

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace grqn {

/// A weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidPartition unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Drops trailing zeros before validating.
    static Partition from_rows(std::vector<int> rows);

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }

    /// Row length at 1-based row i; zero past the last part.
    int row(int i) const
    {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    bool fits_in_grid(int d, int c) const;

    /// True when `inner` is contained in this diagram.
    bool contains(const Partition& inner) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Basis order: by weight, then lexicographically descending.
bool grid_order_less(const Partition& a, const Partition& b);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// col - row
inline int content(const Cell& b) { return b.col - b.row; }

struct SkewShape {
    Partition inner;
    Partition outer;
    std::vector<Cell> cells;  // row-major
};

struct StripClass {
    enum class Kind { NotBrokenBorderStrip, BrokenBorderStrip };

    Kind kind = Kind::BrokenBorderStrip;
    int components = 0;  // meaningful only for BrokenBorderStrip

    static StripClass not_broken() { return {Kind::NotBrokenBorderStrip, 0}; }
    static StripClass broken(int k) { return {Kind::BrokenBorderStrip, k}; }

    bool is_broken_border_strip() const { return kind == Kind::BrokenBorderStrip; }

    friend bool operator==(const StripClass&, const StripClass&) = default;
};

enum class CornerKind { Sharp, Dull };

struct Corner {
    Cell cell;
    CornerKind kind = CornerKind::Sharp;

    friend bool operator==(const Corner&, const Corner&) = default;
};

/// All partitions in the d x c grid, in basis order. Count is binom(d+c, d).
std::vector<Partition> partitions_in_grid(int d, int c);

/// Throws NotContained if inner is not inside outer.
SkewShape skew(const Partition& outer, const Partition& inner);

StripClass classify_strip(const SkewShape& s);
StripClass classify_cells(std::span<const Cell> cells);

/// Sharp and dull corners in row-major order. Throws InvalidStrip when the
/// cells contain a 2x2 block.
std::vector<Corner> corners(const SkewShape& s);
std::vector<Corner> corners_of_cells(std::span<const Cell> cells);

/// Mod-2 Lenart coefficient d_{lambda mu}. Throws NotContained.
bool lenart_coefficient(const Partition& lambda, const Partition& mu);

/// All mu in the d x c grid containing lambda with |mu| - |lambda| = k, in
/// basis order.
std::vector<Partition> covers_at_distance(const Partition& lambda, int k, int d, int c);

/// The subset of covers_at_distance whose skew shape has no 2x2 block.
std::vector<Partition> strip_covers_at_distance(const Partition& lambda, int k, int d, int c);

}  // namespace grqn
