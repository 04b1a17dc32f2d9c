#pragma once

// H^*(Gr_d(R^{d+c}); Z/2) in the Schubert basis, indexed by partitions in a
// d x c grid, with w_i = s_(1^i) and bar-w_j = s_(j).

#include "grqn/gf2.hpp"
#include "grqn/steenrod.hpp"
#include "grqn/young.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace grqn {

/// d x c grid for Gr_d(R^{d+c}). d = 0 is a point (used for Gr_0).
struct Grid {
    int d = 1;
    int c = 0;

    int m() const { return d + c; }
    int top_degree() const { return d * c; }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// F_2 combination of Schubert classes; support kept in basis order.
class SchubertVector {
public:
    explicit SchubertVector(Grid grid) : grid_(grid) {}
    /// Repeated partitions cancel in pairs. Throws InvalidPartition if some
    /// partition does not fit the grid.
    SchubertVector(Grid grid, std::vector<Partition> support);

    static SchubertVector basis(Grid grid, const Partition& lambda);

    const Grid& grid() const { return grid_; }
    const std::vector<Partition>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    bool contains(const Partition& lambda) const;

    SchubertVector& operator+=(const SchubertVector& other);
    friend SchubertVector operator+(SchubertVector a, const SchubertVector& b) { return a += b; }

    std::string to_string() const;

    friend bool operator==(const SchubertVector&, const SchubertVector&) = default;

private:
    Grid grid_;
    std::vector<Partition> support_;
};

/// Basis bookkeeping and cached Pieri tables for one grid. Safe to share
/// across threads.
class SchubertRing {
public:
    explicit SchubertRing(Grid grid);

    const Grid& grid() const { return grid_; }
    int size() const { return static_cast<int>(basis_.size()); }
    const std::vector<Partition>& basis() const { return basis_; }
    const Partition& partition(int index) const { return basis_[static_cast<std::size_t>(index)]; }
    /// Throws InvalidPartition if lambda is not in the grid.
    int index_of(const Partition& lambda) const;

    /// Per-degree dimensions, degrees 0..top.
    const std::vector<int>& dims() const { return dims_; }
    int degree_of(int index) const { return degree_[static_cast<std::size_t>(index)]; }
    /// Position of a basis element within its degree.
    int local_index(int index) const { return index - offset_[static_cast<std::size_t>(degree_of(index))]; }
    int global_index(int degree, int local) const { return offset_[static_cast<std::size_t>(degree)] + local; }

    /// Indices of mu with mu / lambda a vertical i-strip inside the grid.
    const std::vector<int>& pieri_targets(int index, int i) const;

    /// Sorted index sets; pairs cancel.
    std::vector<int> pieri(const std::vector<int>& v, int i) const;
    std::vector<int> monomial_image(const Monomial& mono) const;
    std::vector<int> polynomial_image(const Polynomial& p) const;
    /// v * w^r for a monomial w^r.
    std::vector<int> multiply_monomial(const std::vector<int>& v, const Monomial& mono) const;

    SchubertVector to_vector(const std::vector<int>& indices) const;
    std::vector<int> to_indices(const SchubertVector& v) const;

private:
    Grid grid_;
    std::vector<Partition> basis_;
    std::unordered_map<Partition, int, PartitionHash> index_;
    std::vector<int> dims_;
    std::vector<int> degree_;
    std::vector<int> offset_;
    std::vector<std::vector<std::vector<int>>> pieri_;  // [i-1][index]

    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<Monomial, std::vector<int>, MonomialHash> memo_;
};

/// Multiplication by w_i. Throws IndexOutOfRange unless 1 <= i <= d.
SchubertVector pieri_multiply(const SchubertVector& v, int i);

/// Image of a monomial in the grid ring. Throws AmbientMismatch.
SchubertVector monomial_to_schubert(const Monomial& mono, const Grid& grid);
SchubertVector polynomial_to_schubert(const Polynomial& p, const Grid& grid);

/// Monomials w^r with sum r_i <= c, grouped by degree in increasing order.
std::vector<std::vector<Monomial>> monomial_basis(const Grid& grid);

/// Q_n on the Schubert basis by Lenart's mod-2 formula.
GradedMap lenart_qn_matrix(int n, const Grid& grid);
GradedMap lenart_qn_matrix(int n, const SchubertRing& ring);

/// Q_n on the Schubert basis computed through the free ring and a change of
/// basis from monomials.
GradedMap derivation_qn_matrix(int n, const Grid& grid);
GradedMap derivation_qn_matrix(int n, const SchubertRing& ring);

/// Q_n(s_lambda) read off a graded map.
SchubertVector apply(const GradedMap& map, const SchubertRing& ring, const Partition& lambda);

}  // namespace grqn
