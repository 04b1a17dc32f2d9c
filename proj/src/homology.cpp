#include "grqn/homology.hpp"

#include "grqn/errors.hpp"
#include "grqn/formulas.hpp"

namespace grqn {

int rank(const BitMatrix& m)
{
    return m.rank();
}

HomologyProfile qn_homology(const GradedMap& map)
{
    if (!map.is_differential())
        throw NotADifferential("Q_n matrix does not square to zero");
    const int top = map.top_degree();
    const int k = map.shift();
    std::vector<int> ranks(static_cast<std::size_t>(top + 1), 0);
    for (int t = 0; t <= top; ++t)
        ranks[static_cast<std::size_t>(t)] = map.block(t).rank();
    HomologyProfile h;
    h.per_degree.assign(static_cast<std::size_t>(top + 1), 0);
    for (int t = 0; t <= top; ++t) {
        const int incoming = t - k >= 0 ? ranks[static_cast<std::size_t>(t - k)] : 0;
        const std::int64_t dim = map.dim(t) - ranks[static_cast<std::size_t>(t)] - incoming;
        h.per_degree[static_cast<std::size_t>(t)] = dim;
        h.total += dim;
    }
    return h;
}

GradedMap qn_matrix(int n, const SchubertRing& ring, QnMethod method)
{
    return method == QnMethod::Lenart ? lenart_qn_matrix(n, ring) : derivation_qn_matrix(n, ring);
}

namespace {

Subcomplex restrict_to(const GradedMap& full, std::vector<std::vector<int>> kept)
{
    std::vector<int> dims;
    for (const auto& v : kept)
        dims.push_back(static_cast<int>(v.size()));
    Subcomplex out{GradedMap(full.shift(), std::move(dims)), std::move(kept)};
    const int k = full.shift();
    for (int t = 0; t + k <= full.top_degree(); ++t)
        out.map.block(t) = full.block(t).submatrix(out.kept[static_cast<std::size_t>(t + k)],
                                                   out.kept[static_cast<std::size_t>(t)]);
    return out;
}

}  // namespace

IdealSplit ideal_subcomplex(const GradedMap& full, const SchubertRing& ring)
{
    const Grid& g = ring.grid();
    if (g.c == 0)
        throw GridTooSmall("the ideal subcomplex needs m > d");
    const int top = g.top_degree();
    std::vector<std::vector<int>> sub(static_cast<std::size_t>(top + 1));
    std::vector<std::vector<int>> quot(static_cast<std::size_t>(top + 1));
    for (int idx = 0; idx < ring.size(); ++idx) {
        const int t = ring.degree_of(idx);
        auto& target = ring.partition(idx).row(1) == g.c ? sub : quot;
        target[static_cast<std::size_t>(t)].push_back(ring.local_index(idx));
    }
    IdealSplit split{restrict_to(full, std::move(sub)), restrict_to(full, std::move(quot))};
    // The ideal must be Q_n-stable: nothing leaves sub.
    const int k = full.shift();
    for (int t = 0; t + k <= top; ++t) {
        const auto& cols = split.sub.kept[static_cast<std::size_t>(t)];
        const auto& rows = split.quot.kept[static_cast<std::size_t>(t + k)];
        if (!full.block(t).submatrix(rows, cols).is_zero())
            throw OracleMismatch("ideal of classes with full first row is not Q_n-stable");
    }
    return split;
}

IdealSplit ideal_subcomplex(int n, const Grid& grid, QnMethod method)
{
    SchubertRing ring(grid);
    return ideal_subcomplex(qn_matrix(n, ring, method), ring);
}

GradedMap twisted_complex(int n, int d, int m)
{
    if (d < 1 || m < d + 1)
        throw InvalidCell("twisted complex needs d >= 1 and m > d");
    const Grid grid{d - 1, m - d};
    SchubertRing ring(grid);
    GradedMap map = lenart_qn_matrix(n, ring);
    const int k = map.shift();
    const Polynomial alpha = s_class(k, d - 1);
    for (int idx = 0; idx < ring.size(); ++idx) {
        const int t = ring.degree_of(idx);
        if (t + k > grid.top_degree())
            continue;
        std::vector<int> product;
        for (const Monomial& mono : alpha.terms()) {
            auto part = ring.multiply_monomial({idx}, mono);
            product.insert(product.end(), part.begin(), part.end());
        }
        BitMatrix& block = map.block(t);
        for (int target : product)
            block.flip(ring.local_index(target), ring.local_index(idx));
    }
    return map;
}

std::int64_t connecting_rank(std::int64_t k_quot, std::int64_t k_sub, std::int64_t k_total)
{
    const std::int64_t twice = k_quot + k_sub - k_total;
    if (twice < 0 || twice % 2 != 0)
        throw ParityViolation("k(quot) + k(sub) - k(total) = " + std::to_string(twice)
                              + " is not a nonnegative even number");
    return twice / 2;
}

std::int64_t connecting_rank(int n, int d, int m)
{
    if (m - d < 1)
        throw GridTooSmall("the connecting map needs m > d");
    SchubertRing ring(Grid{d, m - d});
    const GradedMap full = lenart_qn_matrix(n, ring);
    const IdealSplit split = ideal_subcomplex(full, ring);
    return connecting_rank(qn_homology(split.quot.map).total, qn_homology(split.sub.map).total,
                           qn_homology(full).total);
}

std::int64_t inclusion_induced_rank(const GradedMap& full, const Subcomplex& sub)
{
    const int k = full.shift();
    std::int64_t total = 0;
    for (int t = 0; t <= full.top_degree(); ++t) {
        const auto& kept = sub.kept[static_cast<std::size_t>(t)];
        if (kept.empty())
            continue;
        // Cycles of sub in degree t, pushed into full coordinates (as columns).
        const BitMatrix cycles = sub.map.block(t).kernel();
        BitMatrix lifted(full.dim(t), cycles.rows());
        for (int v = 0; v < cycles.rows(); ++v)
            for (int j = 0; j < cycles.cols(); ++j)
                if (cycles.get(v, j))
                    lifted.set(kept[static_cast<std::size_t>(j)], v);
        const BitMatrix boundaries = t - k >= 0 ? full.block(t - k) : BitMatrix(full.dim(t), 0);
        total += boundaries.hconcat(lifted).rank() - boundaries.rank();
    }
    return total;
}

}  // namespace grqn
