#pragma once

// One (n, d, m) cell: computation, status against the prediction, JSON
// records and the append-only cache.

#include "grqn/formulas.hpp"
#include "grqn/homology.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace grqn {

enum class Status { Proven, ConjectureMatch, Mismatch, PredictedOnly };
enum class Method { Lenart, Derivation, Both, None };

std::string to_string(Status s);
std::string to_string(Method m);
Status parse_status(const std::string& s);
Method parse_method(const std::string& s);

struct ResultRecord {
    int n = 0;
    int d = 0;
    int m = 0;
    std::optional<BigInt> computed_total;  // empty for predicted-only cells
    std::vector<std::pair<int, std::int64_t>> per_degree;
    BigInt predicted;
    Status status = Status::PredictedOnly;
    Method method = Method::None;
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// Basis-size cutoff: GRQN_CELL_LIMIT if set, else 5'000'000.
std::int64_t cell_limit();

/// Both when binom(m, d) <= 10^4, else Lenart.
Method default_method(int d, int m);

/// Whether the cell is covered by a theorem rather than the conjecture.
bool is_proven_range(int n, int d, int m);

Status classify(int n, int d, int m, const BigInt& computed, const BigInt& predicted);

/// Throws CellTooLarge above cell_limit(), OracleMismatch when the two
/// constructions disagree, LowerBoundViolation when computed < predicted.
ResultRecord compute_cell(int n, int d, int m, Method method);

ResultRecord predicted_only_record(int n, int d, int m);

/// One JSON object, fixed key order, no trailing newline.
std::string to_json(const ResultRecord& r);
/// Throws CacheCorrupt on malformed input.
ResultRecord record_from_json(const std::string& line);

std::string csv_header();
/// d,c,value,status,method
std::string csv_row(const ResultRecord& r);

using CellKey = std::tuple<int, int, int, Method>;

class ResultCache {
public:
    /// Loads existing records if the file exists. Throws CacheCorrupt with
    /// the 1-based line number of the first bad line.
    explicit ResultCache(std::filesystem::path path);

    const std::filesystem::path& path() const { return path_; }
    std::size_t size() const { return records_.size(); }
    const ResultRecord* find(const CellKey& key) const;
    /// Appends to the file and the in-memory index (last writer wins).
    void append(const ResultRecord& r);

private:
    std::filesystem::path path_;
    std::map<CellKey, ResultRecord> records_;
};

struct CofiberReport {
    int n = 0;
    int d = 0;
    int m = 0;
    std::int64_t reduced_k = 0;
    std::vector<std::pair<int, std::int64_t>> per_degree;
    std::int64_t delta_rank = 0;
    BigInt predicted_reduced_k;
    BigInt predicted_delta;
    bool twisted_agrees = false;
};

/// Throws GridTooSmall if m <= d, CellTooLarge above the limit.
CofiberReport cofiber_report(int n, int d, int m);
std::string to_json(const CofiberReport& r);

}  // namespace grqn
