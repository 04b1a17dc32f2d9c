#pragma once

// Closed-form dimension predictions for Q_n-homology of real Grassmannians
// and their inclusion cofibers, evaluated exactly.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>

namespace grqn {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; zero outside 0 <= b <= a.
BigInt binomial(std::int64_t a, std::int64_t b);

/// binom(a, b) mod 2 by Lucas' theorem. Requires a, b >= 0.
bool binom_parity(std::int64_t a, std::int64_t b);

/// 2^{n+1}, the threshold dimension for Q_n.
std::int64_t qn_threshold(int n);

/// Degree of Q_n, 2^{n+1} - 1.
int qn_degree(int n);

/// m = 2^{n+1} - epsilon + 2l with epsilon in {0, 1}, l >= 0.
struct ThresholdSplit {
    int epsilon = 0;
    std::int64_t l = 0;
};

/// The unique split of m, or nullopt when m < 2^{n+1} - 1.
std::optional<ThresholdSplit> split_dimension(int n, std::int64_t m);

enum class PredictionKind { Collapse, ConjecturalEquality };

struct CellPrediction {
    int n = 0;
    std::int64_t d = 0;
    std::int64_t m = 0;
    int epsilon = 0;
    std::int64_t l = 0;
    BigInt value;
    PredictionKind kind = PredictionKind::Collapse;
};

/// sum_i binom(2^{n+1} - eps, d - 2i) binom(l, i)
BigInt grassmannian_sum(int n, std::int64_t d, const ThresholdSplit& s);

/// sum_i binom(2^{n+1} - 1 - eps, d - 1 - 2i) binom(l, i)
BigInt cofiber_sum(int n, std::int64_t d, const ThresholdSplit& s);

CellPrediction predict_cell(int n, std::int64_t d, std::int64_t m);

/// Predicted k_{Q_n}(Gr_d(R^m)). Throws InvalidCell if d > m or d < 0.
BigInt predicted_k(int n, std::int64_t d, std::int64_t m);

/// Predicted reduced k_{Q_n} of the cofiber of Gr_d(R^{m-1}) -> Gr_d(R^m).
BigInt predicted_cofiber_k(int n, std::int64_t d, std::int64_t m);

/// Predicted rank of the connecting map; zero for even m or m <= 2^{n+1}.
BigInt predicted_delta_rank(int n, std::int64_t d, std::int64_t m);

/// Checks (k^G(d,m-1) + k^C(d,m) - k^G(d,m)) / 2 == predicted_delta_rank
/// exactly, for m = 2^{n+1} - 1 + 2l. Requires l > 0.
bool lemma65_check(int n, std::int64_t d, std::int64_t l);

/// k_{Q_n} of RP^{m-1} = Gr_1(R^m).
BigInt projective_k(int n, std::int64_t m);

enum class FieldKind { Real, Complex };

struct RepFactor {
    FieldKind kind = FieldKind::Real;
    std::int64_t multiplicity = 0;
};

/// Total size of the fixed-point Grassmannian: sum over (j_1..j_k) with
/// sum j_i r_i = d of prod binom(m_i, j_i), r = 1 (Real) or 2 (Complex).
BigInt fixed_point_count(std::span<const RepFactor> rep, std::int64_t d);

}  // namespace grqn
