#include "grqn/schubert.hpp"

#include "grqn/errors.hpp"
#include "grqn/formulas.hpp"

#include <algorithm>

namespace grqn {

namespace {

void cancel_pairs(std::vector<int>& v)
{
    std::sort(v.begin(), v.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if ((j - i) % 2 == 1)
            v[out++] = v[i];
        i = j;
    }
    v.resize(out);
}

void check_grid(const Grid& g)
{
    if (g.d < 0 || g.c < 0)
        throw InvalidCell("grid dimensions must be nonnegative");
}

}  // namespace

SchubertVector::SchubertVector(Grid grid, std::vector<Partition> support) : grid_(grid)
{
    for (const Partition& p : support)
        if (!p.fits_in_grid(grid.d, grid.c))
            throw InvalidPartition(p.to_string() + " does not fit the " + std::to_string(grid.d) + "x"
                                   + std::to_string(grid.c) + " grid");
    std::sort(support.begin(), support.end(), grid_order_less);
    for (std::size_t i = 0; i < support.size();) {
        std::size_t j = i;
        while (j < support.size() && support[j] == support[i])
            ++j;
        if ((j - i) % 2 == 1)
            support_.push_back(support[i]);
        i = j;
    }
}

SchubertVector SchubertVector::basis(Grid grid, const Partition& lambda)
{
    return SchubertVector(grid, {lambda});
}

bool SchubertVector::contains(const Partition& lambda) const
{
    return std::binary_search(support_.begin(), support_.end(), lambda, grid_order_less);
}

SchubertVector& SchubertVector::operator+=(const SchubertVector& other)
{
    if (!(other.grid_ == grid_))
        throw AmbientMismatch("Schubert vectors from different grids");
    std::vector<Partition> merged;
    std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(), other.support_.end(),
                                  std::back_inserter(merged), grid_order_less);
    support_ = std::move(merged);
    return *this;
}

std::string SchubertVector::to_string() const
{
    if (support_.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (i)
            s += " + ";
        s += "s" + support_[i].to_string();
    }
    return s;
}

SchubertRing::SchubertRing(Grid grid) : grid_(grid)
{
    check_grid(grid);
    basis_ = partitions_in_grid(grid.d, grid.c);
    dims_.assign(static_cast<std::size_t>(grid.top_degree() + 1), 0);
    offset_.assign(static_cast<std::size_t>(grid.top_degree() + 2), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        index_.emplace(basis_[i], static_cast<int>(i));
        degree_.push_back(basis_[i].weight());
        ++dims_[static_cast<std::size_t>(basis_[i].weight())];
    }
    for (int t = 0; t <= grid.top_degree(); ++t)
        offset_[static_cast<std::size_t>(t + 1)] = offset_[static_cast<std::size_t>(t)] + dims_[static_cast<std::size_t>(t)];

    // Vertical strips: add at most one box per row, keeping a partition.
    pieri_.assign(static_cast<std::size_t>(grid.d), std::vector<std::vector<int>>(basis_.size()));
    std::vector<int> rows(static_cast<std::size_t>(grid.d));
    for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
        const Partition& lambda = basis_[idx];
        for (int r = 1; r <= grid.d; ++r)
            rows[static_cast<std::size_t>(r - 1)] = lambda.row(r);
        std::vector<int> mu = rows;
        auto recurse = [&](auto&& self, int r, int added) -> void {
            if (r > grid.d) {
                if (added > 0)
                    pieri_[static_cast<std::size_t>(added - 1)][idx].push_back(index_of(Partition::from_rows(mu)));
                return;
            }
            const std::size_t k = static_cast<std::size_t>(r - 1);
            self(self, r + 1, added);
            const int grown = rows[k] + 1;
            if (grown <= grid.c && (r == 1 || mu[k - 1] >= grown)) {
                mu[k] = grown;
                self(self, r + 1, added + 1);
                mu[k] = rows[k];
            }
        };
        recurse(recurse, 1, 0);
        for (auto& table : pieri_)
            std::sort(table[idx].begin(), table[idx].end());
    }
}

int SchubertRing::index_of(const Partition& lambda) const
{
    auto it = index_.find(lambda);
    if (it == index_.end())
        throw InvalidPartition(lambda.to_string() + " is not in the grid");
    return it->second;
}

const std::vector<int>& SchubertRing::pieri_targets(int index, int i) const
{
    if (i < 1 || i > grid_.d)
        throw IndexOutOfRange("w_" + std::to_string(i) + " outside ambient " + std::to_string(grid_.d));
    return pieri_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(index)];
}

std::vector<int> SchubertRing::pieri(const std::vector<int>& v, int i) const
{
    std::vector<int> out;
    for (int idx : v) {
        const auto& targets = pieri_targets(idx, i);
        out.insert(out.end(), targets.begin(), targets.end());
    }
    cancel_pairs(out);
    return out;
}

std::vector<int> SchubertRing::monomial_image(const Monomial& mono) const
{
    if (mono.ambient() != grid_.d)
        throw AmbientMismatch("monomial ambient " + std::to_string(mono.ambient()) + " vs grid d="
                              + std::to_string(grid_.d));
    if (mono.degree() > grid_.top_degree())
        return {};
    if (mono.is_unit())
        return {0};
    {
        std::lock_guard lock(memo_mutex_);
        auto it = memo_.find(mono);
        if (it != memo_.end())
            return it->second;
    }
    int j = grid_.d;
    while (mono.exponent(j) == 0)
        --j;
    auto exps = mono.exponents();
    exps[static_cast<std::size_t>(j - 1)] -= 1;
    std::vector<int> image = pieri(monomial_image(Monomial(std::move(exps))), j);
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(mono, image);
    return image;
}

std::vector<int> SchubertRing::polynomial_image(const Polynomial& p) const
{
    std::vector<int> out;
    for (const Monomial& m : p.terms()) {
        auto img = monomial_image(m);
        out.insert(out.end(), img.begin(), img.end());
    }
    cancel_pairs(out);
    return out;
}

std::vector<int> SchubertRing::multiply_monomial(const std::vector<int>& v, const Monomial& mono) const
{
    if (mono.ambient() != grid_.d)
        throw AmbientMismatch("monomial ambient does not match grid");
    std::vector<int> out = v;
    for (int j = 1; j <= grid_.d && !out.empty(); ++j)
        for (int e = 0; e < mono.exponent(j) && !out.empty(); ++e)
            out = pieri(out, j);
    return out;
}

SchubertVector SchubertRing::to_vector(const std::vector<int>& indices) const
{
    std::vector<Partition> support;
    for (int i : indices)
        support.push_back(partition(i));
    return SchubertVector(grid_, std::move(support));
}

std::vector<int> SchubertRing::to_indices(const SchubertVector& v) const
{
    if (!(v.grid() == grid_))
        throw AmbientMismatch("Schubert vector from a different grid");
    std::vector<int> out;
    for (const Partition& p : v.support())
        out.push_back(index_of(p));
    std::sort(out.begin(), out.end());
    return out;
}

SchubertVector pieri_multiply(const SchubertVector& v, int i)
{
    if (i < 1 || i > v.grid().d)
        throw IndexOutOfRange("w_" + std::to_string(i) + " outside ambient " + std::to_string(v.grid().d));
    SchubertRing ring(v.grid());
    return ring.to_vector(ring.pieri(ring.to_indices(v), i));
}

SchubertVector monomial_to_schubert(const Monomial& mono, const Grid& grid)
{
    SchubertRing ring(grid);
    return ring.to_vector(ring.monomial_image(mono));
}

SchubertVector polynomial_to_schubert(const Polynomial& p, const Grid& grid)
{
    if (p.ambient() != grid.d)
        throw AmbientMismatch("polynomial ambient does not match grid");
    SchubertRing ring(grid);
    return ring.to_vector(ring.polynomial_image(p));
}

std::vector<std::vector<Monomial>> monomial_basis(const Grid& grid)
{
    check_grid(grid);
    std::vector<std::vector<Monomial>> by_degree(static_cast<std::size_t>(grid.top_degree() + 1));
    std::vector<Monomial::Exponent> exps(static_cast<std::size_t>(grid.d), 0);
    auto recurse = [&](auto&& self, int j, int budget, int degree) -> void {
        if (j > grid.d) {
            by_degree[static_cast<std::size_t>(degree)].emplace_back(exps);
            return;
        }
        for (int r = 0; r <= budget; ++r) {
            exps[static_cast<std::size_t>(j - 1)] = static_cast<Monomial::Exponent>(r);
            self(self, j + 1, budget - r, degree + j * r);
        }
        exps[static_cast<std::size_t>(j - 1)] = 0;
    };
    recurse(recurse, 1, grid.c, 0);
    for (auto& v : by_degree)
        std::sort(v.begin(), v.end());
    return by_degree;
}

GradedMap lenart_qn_matrix(int n, const Grid& grid)
{
    return lenart_qn_matrix(n, SchubertRing(grid));
}

GradedMap lenart_qn_matrix(int n, const SchubertRing& ring)
{
    const int k = qn_degree(n);
    const Grid& g = ring.grid();
    GradedMap map(k, ring.dims());
    for (int idx = 0; idx < ring.size(); ++idx) {
        const Partition& lambda = ring.partition(idx);
        if (lambda.weight() + k > g.top_degree())
            continue;
        BitMatrix& block = map.block(lambda.weight());
        const int col = ring.local_index(idx);
        for (const Partition& mu : strip_covers_at_distance(lambda, k, g.d, g.c))
            if (lenart_coefficient(lambda, mu))
                block.set(ring.local_index(ring.index_of(mu)), col);
    }
    return map;
}

GradedMap derivation_qn_matrix(int n, const Grid& grid)
{
    return derivation_qn_matrix(n, SchubertRing(grid));
}

GradedMap derivation_qn_matrix(int n, const SchubertRing& ring)
{
    const int k = qn_degree(n);
    const Grid& g = ring.grid();
    GradedMap map(k, ring.dims());
    const auto monomials = monomial_basis(g);
    for (int t = 0; t + k <= g.top_degree(); ++t) {
        const auto& domain = monomials[static_cast<std::size_t>(t)];
        const int dim = map.dim(t);
        if (static_cast<int>(domain.size()) != dim)
            throw OracleMismatch("monomial basis size differs from Schubert basis size in degree " + std::to_string(t));
        BitMatrix change(dim, dim);
        BitMatrix image(map.dim(t + k), dim);
        for (int col = 0; col < dim; ++col) {
            const Monomial& mono = domain[static_cast<std::size_t>(col)];
            for (int idx : ring.monomial_image(mono))
                change.set(ring.local_index(idx), col);
            for (int idx : ring.polynomial_image(milnor_q(n, Polynomial::from_monomial(mono))))
                image.set(ring.local_index(idx), col);
        }
        map.block(t) = image * change.inverse();
    }
    return map;
}

SchubertVector apply(const GradedMap& map, const SchubertRing& ring, const Partition& lambda)
{
    const int idx = ring.index_of(lambda);
    const int t = ring.degree_of(idx);
    const BitMatrix& block = map.block(t);
    std::vector<int> out;
    for (int r = 0; r < block.rows(); ++r)
        if (block.get(r, ring.local_index(idx)))
            out.push_back(ring.global_index(t + map.shift(), r));
    return ring.to_vector(out);
}

}  // namespace grqn
