#pragma once

// Batch drivers behind the grqn subcommands.

#include "grqn/cell.hpp"

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

namespace grqn {

struct Range {
    int lo = 0;
    int hi = 0;
};

/// Parses "A..B" or a single integer "A". Throws Error.
Range parse_range(const std::string& text);

/// Runs task(i) for i in [0, count) on `jobs` threads and hands results to
/// sink in index order. The first exception thrown by a task is rethrown.
void run_ordered(std::size_t count, int jobs, const std::function<ResultRecord(std::size_t)>& task,
                 const std::function<void(const ResultRecord&)>& sink);

/// Computed record, or predicted-only when the cell is over the size limit.
ResultRecord evaluate_cell(int n, int d, int m);

/// Cells (d, c) for 1 <= d <= dmax, 1 <= c <= cmax, sorted by (d, c).
/// Throws OracleMismatch if two computed cells (d, c), (c, d) differ.
std::vector<ResultRecord> table_records(int n, int dmax, int cmax, int jobs = 1);

void write_csv(std::ostream& out, const std::vector<ResultRecord>& rows);

struct VerifySummary {
    std::int64_t proven = 0;
    std::int64_t conjecture_match = 0;
    std::int64_t mismatch = 0;
    std::int64_t predicted_only = 0;
    std::int64_t lower_bound_violations = 0;
    std::int64_t evaluated = 0;
    std::int64_t skipped = 0;

    bool ok() const { return mismatch == 0 && lower_bound_violations == 0; }
    friend bool operator==(const VerifySummary&, const VerifySummary&) = default;
};

/// Evaluates every (n, d, c) not already cached and appends the new records.
/// Status counts cover every cell in range, cached or new.
VerifySummary verify(Range n, Range d, Range c, int jobs, ResultCache& cache);

void print_summary(std::ostream& out, const VerifySummary& s);

}  // namespace grqn
