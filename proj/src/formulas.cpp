#include "grqn/formulas.hpp"

#include "grqn/errors.hpp"

#include <string>
#include <vector>

namespace grqn {

BigInt binomial(std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0 || b > a)
        return 0;
    if (b > a - b)
        b = a - b;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

bool binom_parity(std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0)
        throw Error("binom_parity: negative argument");
    return (b & ~a) == 0;
}

std::int64_t qn_threshold(int n)
{
    if (n < 0 || n > 60)
        throw Error("Q_n index out of range: " + std::to_string(n));
    return std::int64_t{1} << (n + 1);
}

int qn_degree(int n)
{
    return static_cast<int>(qn_threshold(n) - 1);
}

std::optional<ThresholdSplit> split_dimension(int n, std::int64_t m)
{
    const std::int64_t t = qn_threshold(n);
    if (m < t - 1)
        return std::nullopt;
    ThresholdSplit s;
    s.epsilon = static_cast<int>((m - t) & 1);
    s.l = (m - t + s.epsilon) / 2;
    return s;
}

BigInt grassmannian_sum(int n, std::int64_t d, const ThresholdSplit& s)
{
    const std::int64_t top = qn_threshold(n) - s.epsilon;
    BigInt total = 0;
    for (std::int64_t i = 0; 2 * i <= d; ++i)
        total += binomial(top, d - 2 * i) * binomial(s.l, i);
    return total;
}

BigInt cofiber_sum(int n, std::int64_t d, const ThresholdSplit& s)
{
    const std::int64_t top = qn_threshold(n) - 1 - s.epsilon;
    BigInt total = 0;
    for (std::int64_t i = 0; 2 * i <= d - 1; ++i)
        total += binomial(top, d - 1 - 2 * i) * binomial(s.l, i);
    return total;
}

namespace {

void check_cell(std::int64_t d, std::int64_t m)
{
    if (d < 0 || m < 0 || d > m)
        throw InvalidCell("invalid cell d=" + std::to_string(d) + " m=" + std::to_string(m));
}

}  // namespace

CellPrediction predict_cell(int n, std::int64_t d, std::int64_t m)
{
    check_cell(d, m);
    CellPrediction p;
    p.n = n;
    p.d = d;
    p.m = m;
    const std::int64_t t = qn_threshold(n);
    const auto split = split_dimension(n, m);
    if (split) {
        p.epsilon = split->epsilon;
        p.l = split->l;
    }
    if (m <= t) {
        p.kind = PredictionKind::Collapse;
        p.value = binomial(m, d);
        // Both closed forms cover m = 2^{n+1} - 1 and m = 2^{n+1}.
        if (split && grassmannian_sum(n, d, *split) != p.value)
            throw Error("collapse and sum formulas disagree at the threshold");
    } else {
        p.kind = PredictionKind::ConjecturalEquality;
        p.value = grassmannian_sum(n, d, *split);
    }
    return p;
}

BigInt predicted_k(int n, std::int64_t d, std::int64_t m)
{
    return predict_cell(n, d, m).value;
}

BigInt predicted_cofiber_k(int n, std::int64_t d, std::int64_t m)
{
    check_cell(d, m);
    if (d < 1)
        throw InvalidCell("cofiber needs d >= 1");
    if (m <= qn_threshold(n))
        return binomial(m - 1, d - 1);
    return cofiber_sum(n, d, *split_dimension(n, m));
}

BigInt predicted_delta_rank(int n, std::int64_t d, std::int64_t m)
{
    const std::int64_t t = qn_threshold(n);
    if (m % 2 == 0 || m <= t)
        return 0;
    const std::int64_t l = (m - t + 1) / 2;
    BigInt total = 0;
    for (std::int64_t i = 0; 2 * i <= d - 1; ++i)
        total += binomial(t - 2, d - 1 - 2 * i) * binomial(l - 1, i);
    return total;
}

bool lemma65_check(int n, std::int64_t d, std::int64_t l)
{
    if (l <= 0)
        throw Error("lemma65_check needs l > 0");
    const std::int64_t m = qn_threshold(n) - 1 + 2 * l;
    const BigInt lhs2 = grassmannian_sum(n, d, {0, l - 1}) + cofiber_sum(n, d, {1, l})
        - grassmannian_sum(n, d, {1, l});
    if (lhs2 < 0 || (lhs2 & 1) != 0)
        return false;
    return lhs2 / 2 == predicted_delta_rank(n, d, m);
}

BigInt projective_k(int n, std::int64_t m)
{
    if (m < 1)
        throw InvalidCell("projective_k needs m >= 1");
    const std::int64_t t = qn_threshold(n);
    if (m <= t)
        return m;
    return t - split_dimension(n, m)->epsilon;
}

BigInt fixed_point_count(std::span<const RepFactor> rep, std::int64_t d)
{
    if (d < 0)
        return 0;
    // coefficients of prod_i sum_j binom(m_i, j) x^{j r_i}, truncated at x^d
    std::vector<BigInt> poly(static_cast<std::size_t>(d) + 1, BigInt{0});
    poly[0] = 1;
    for (const RepFactor& f : rep) {
        const std::int64_t r = f.kind == FieldKind::Real ? 1 : 2;
        std::vector<BigInt> next(poly.size(), BigInt{0});
        for (std::int64_t a = 0; a <= d; ++a) {
            if (poly[a] == 0)
                continue;
            for (std::int64_t j = 0; j <= f.multiplicity && a + j * r <= d; ++j)
                next[a + j * r] += poly[a] * binomial(f.multiplicity, j);
        }
        poly = std::move(next);
    }
    return poly[d];
}

}  // namespace grqn
