#pragma once

// Q_n-homology of Grassmannians, the ideal subcomplex computing the reduced
// cohomology of the cofiber C_d(R^m), and the twisted complex on Gr_{d-1}.

#include "grqn/gf2.hpp"
#include "grqn/schubert.hpp"

#include <cstdint>
#include <vector>

namespace grqn {

struct HomologyProfile {
    std::vector<std::int64_t> per_degree;  // index = cohomological degree
    std::int64_t total = 0;

    std::int64_t at(int t) const
    {
        return t >= 0 && t < static_cast<int>(per_degree.size()) ? per_degree[static_cast<std::size_t>(t)] : 0;
    }

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

int rank(const BitMatrix& m);

/// Throws NotADifferential if some composite M_{t+shift} M_t is nonzero.
HomologyProfile qn_homology(const GradedMap& map);

enum class QnMethod { Lenart, Derivation };

GradedMap qn_matrix(int n, const SchubertRing& ring, QnMethod method = QnMethod::Lenart);

/// Basis indices (global, ascending) of one part of the ideal decomposition.
struct Subcomplex {
    GradedMap map;
    /// Per degree, the local indices in the full complex that this piece keeps.
    std::vector<std::vector<int>> kept;
};

struct IdealSplit {
    Subcomplex sub;   // span of s_lambda with lambda_1 = c
    Subcomplex quot;  // induced map on lambda_1 < c
};

/// Splits the full Q_n complex of the grid. Throws GridTooSmall if c = 0.
IdealSplit ideal_subcomplex(const GradedMap& full, const SchubertRing& ring);
IdealSplit ideal_subcomplex(int n, const Grid& grid, QnMethod method = QnMethod::Lenart);

/// x -> Q_n(x) + x alpha_n on H^*(Gr_{d-1}(R^{m-1})), alpha_n the s-class.
GradedMap twisted_complex(int n, int d, int m);

/// Rank of the connecting map, from exactness. Throws ParityViolation.
std::int64_t connecting_rank(std::int64_t k_quot, std::int64_t k_sub, std::int64_t k_total);
std::int64_t connecting_rank(int n, int d, int m);

/// Rank of the map on Q_n-homology induced by the inclusion sub -> full.
std::int64_t inclusion_induced_rank(const GradedMap& full, const Subcomplex& sub);

}  // namespace grqn
