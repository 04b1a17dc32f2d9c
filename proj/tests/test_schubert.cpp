#include "grqn/errors.hpp"
#include "grqn/formulas.hpp"
#include "grqn/homology.hpp"
#include "grqn/schubert.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace grqn;

namespace {

SchubertVector S(Grid g, std::vector<Partition> parts)
{
    return SchubertVector(g, std::move(parts));
}

std::vector<Partition> image(const SchubertRing& ring, const Polynomial& p)
{
    return ring.to_vector(ring.polynomial_image(p)).support();
}

}  // namespace

TEST_CASE("Pieri examples")
{
    const Grid g{2, 2};
    CHECK(pieri_multiply(S(g, {Partition{}}), 1) == S(g, {{1}}));
    CHECK(pieri_multiply(S(g, {{1}}), 1) == S(g, {{2}, {1, 1}}));
    CHECK(pieri_multiply(S(g, {{2, 2}}), 2).is_zero());
    CHECK_THROWS_AS(pieri_multiply(S(g, {{1}}), 3), IndexOutOfRange);
    CHECK_THROWS_AS(S(g, {{3}}), InvalidPartition);
}

TEST_CASE("Pieri rule agrees with Schur polynomial products")
{
    // With c large enough that nothing is truncated, s_lambda e_i expands in
    // Schur polynomials in d variables.
    for (int d = 1; d <= 4; ++d) {
        const int c = 4;
        SchubertRing ring(Grid{d, c});
        for (int idx = 0; idx < ring.size(); ++idx) {
            const Partition& lambda = ring.partition(idx);
            if (lambda.row(1) == c)
                continue;
            for (int i = 1; i <= d; ++i) {
                const auto product = oracle::mul(oracle::schur(lambda, d), oracle::elementary(i, d));
                const auto expected = oracle::schur_expand(product, d);
                CHECK(ring.to_vector(ring.pieri_targets(idx, i)).support() == expected);
            }
        }
    }
}

TEST_CASE("monomials to Schubert classes")
{
    const Grid g{2, 2};
    CHECK(monomial_to_schubert(Monomial::generator(2, 1) * Monomial::generator(2, 1), g) == S(g, {{2}, {1, 1}}));
    CHECK(monomial_to_schubert(Monomial(2), g) == S(g, {Partition{}}));
    for (int d = 1; d <= 3; ++d)
        for (int c = 1; c <= 3; ++c) {
            const Grid grid{d, c};
            std::vector<Monomial::Exponent> r(static_cast<std::size_t>(d), 0);
            r[0] = static_cast<Monomial::Exponent>(c * d + 1);
            CHECK(monomial_to_schubert(Monomial(r), grid).is_zero());
        }
    CHECK_THROWS_AS(monomial_to_schubert(Monomial(3), g), AmbientMismatch);
    // w_i and bar-w_j are the column and row classes.
    for (int d = 1; d <= 4; ++d)
        for (int c = 1; c <= 4; ++c) {
            const Grid grid{d, c};
            for (int i = 1; i <= d; ++i)
                CHECK(polynomial_to_schubert(Polynomial::generator(d, i), grid)
                      == S(grid, {Partition(std::vector<int>(static_cast<std::size_t>(i), 1))}));
            for (int j = 1; j <= c; ++j)
                CHECK(polynomial_to_schubert(dual_class(j, d), grid) == S(grid, {{j}}));
        }
}

TEST_CASE("Schubert image of a monomial matches the Schur expansion")
{
    for (int d = 1; d <= 3; ++d) {
        const int c = 12;  // large enough that these degrees never truncate
        SchubertRing ring(Grid{d, c});
        for (const auto& by_degree : monomial_basis(Grid{d, 3}))
            for (const Monomial& mono : by_degree) {
                const auto expected = oracle::schur_expand(oracle::from_w(Polynomial::from_monomial(mono)), d);
                CHECK(ring.to_vector(ring.monomial_image(mono)).support() == expected);
            }
    }
}

TEST_CASE("monomial basis maps bijectively onto the Schubert basis")
{
    for (int d = 1; d <= 4; ++d)
        for (int c = 0; c <= 6; ++c) {
            const Grid grid{d, c};
            SchubertRing ring(grid);
            const auto monomials = monomial_basis(grid);
            std::size_t count = 0;
            for (int t = 0; t <= grid.top_degree(); ++t) {
                const auto& domain = monomials[static_cast<std::size_t>(t)];
                REQUIRE(static_cast<int>(domain.size()) == ring.dims()[static_cast<std::size_t>(t)]);
                BitMatrix change(static_cast<int>(domain.size()), static_cast<int>(domain.size()));
                for (std::size_t col = 0; col < domain.size(); ++col)
                    for (int idx : ring.monomial_image(domain[col]))
                        change.set(ring.local_index(idx), static_cast<int>(col));
                CHECK(change.rank() == change.rows());
                count += domain.size();
            }
            CHECK(BigInt(count) == binomial(d + c, d));
        }
}

TEST_CASE("relations in the grid ring")
{
    for (int d = 1; d <= 4; ++d)
        for (int c = 0; c <= 5; ++c) {
            const Grid grid{d, c};
            SchubertRing ring(grid);
            for (int k = c + 1; k <= d + c; ++k)
                CHECK(ring.polynomial_image(dual_class(k, d)).empty());
            CHECK(ring.polynomial_image(Polynomial::generator(d, d) * dual_class(c, d)).empty());
        }
}

TEST_CASE("Lenart matrix examples")
{
    SchubertRing ring(Grid{2, 4});
    const GradedMap q1 = lenart_qn_matrix(1, ring);
    CHECK(apply(q1, ring, Partition{1}) == S(ring.grid(), {{4}, {3, 1}}));
    CHECK(lenart_qn_matrix(1, Grid{2, 2}).is_zero());

    SchubertRing rp2(Grid{1, 2});
    const GradedMap q0 = lenart_qn_matrix(0, rp2);
    CHECK(apply(q0, rp2, Partition{1}) == S(rp2.grid(), {{2}}));
    CHECK(apply(q0, rp2, Partition{2}).is_zero());
    CHECK(derivation_qn_matrix(0, rp2) == q0);
}

TEST_CASE("derivation matrix examples")
{
    const GradedMap q = derivation_qn_matrix(1, Grid{2, 3});
    CHECK_FALSE(q.is_zero());
    CHECK(qn_homology(q).total == 4);
    for (int n = 0; n <= 3; ++n)
        for (int d = 0; d <= 4; ++d) {
            const GradedMap point = derivation_qn_matrix(n, Grid{d, 0});
            CHECK(point.total_dim() == 1);
            CHECK(point.is_zero());
        }
}

TEST_CASE("the two Q_n constructions agree and square to zero")
{
    for (int n = 0; n <= 2; ++n)
        for (int d = 1; d <= 4; ++d)
            for (int c = 0; c <= 5; ++c) {
                SchubertRing ring(Grid{d, c});
                const GradedMap a = lenart_qn_matrix(n, ring);
                const GradedMap b = derivation_qn_matrix(n, ring);
                CHECK_MESSAGE(a == b, "n=" << n << " d=" << d << " c=" << c);
                CHECK(a.is_differential());
            }
}

TEST_CASE("d = 2 ring identities")
{
    for (int n = 0; n <= 2; ++n) {
        const int k = qn_degree(n);
        // Q_n(w_1 bar-w_{2l}) = w_1 bar-w_{k + 2l} in the free ring.
        for (int l = 0; l <= 6; ++l) {
            const Polynomial w1 = Polynomial::generator(2, 1);
            CHECK(milnor_q(n, w1 * dual_class(2 * l, 2)) == w1 * dual_class(k + 2 * l, 2));
        }
        // Q_n(w_2^{2l+1}) = w_1^{2l+2} bar-w_{k + 2l} in Gr_2(R^{2^{n+1}+1+2l}).
        for (int l = 0; l <= 6; ++l) {
            const int m = static_cast<int>(qn_threshold(n)) + 1 + 2 * l;
            SchubertRing ring(Grid{2, m - 2});
            const Polynomial w1 = Polynomial::generator(2, 1);
            const Polynomial w2 = Polynomial::generator(2, 2);
            CHECK(image(ring, milnor_q(n, w2.pow(2 * l + 1))) == image(ring, w1.pow(2 * l + 2) * dual_class(k + 2 * l, 2)));
        }
        // In the ideal of bar-w_{m-2}, Q_n(w_1^i bar-w_{m-2}) is w_1^{k+i} bar-w_{m-2} for even i, else 0.
        for (int m = 3; m <= 14; ++m) {
            SchubertRing ring(Grid{2, m - 2});
            const Polynomial w1 = Polynomial::generator(2, 1);
            for (int i = 0; i <= m - 2; ++i) {
                const Polynomial x = w1.pow(i) * dual_class(m - 2, 2);
                const auto expected = i % 2 == 0 ? image(ring, w1.pow(k + i) * dual_class(m - 2, 2)) : std::vector<Partition>{};
                CHECK(image(ring, milnor_q(n, x)) == expected);
            }
        }
    }
}
