#include "grqn/commands.hpp"

#include "grqn/errors.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace grqn {

Range parse_range(const std::string& text)
{
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size())
            throw Error("bad range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = to_int(text);
    } else {
        r.lo = to_int(text.substr(0, dots));
        r.hi = to_int(text.substr(dots + 2));
    }
    if (r.lo > r.hi)
        throw Error("empty range '" + text + "'");
    return r;
}

void run_ordered(std::size_t count, int jobs, const std::function<ResultRecord(std::size_t)>& task,
                 const std::function<void(const ResultRecord&)>& sink)
{
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i)
            sink(task(i));
        return;
    }
    std::vector<std::optional<ResultRecord>> done(count);
    std::exception_ptr failure;
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&] {
        while (!stop) {
            const std::size_t i = next++;
            if (i >= count)
                return;
            try {
                ResultRecord r = task(i);
                std::lock_guard lock(mutex);
                done[i] = std::move(r);
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!failure)
                    failure = std::current_exception();
                stop = true;
            }
            ready.notify_all();
        }
    };
    std::vector<std::jthread> pool;
    for (int k = 0; k < jobs; ++k)
        pool.emplace_back(worker);

    for (std::size_t i = 0; i < count; ++i) {
        std::unique_lock lock(mutex);
        ready.wait(lock, [&] { return done[i].has_value() || failure; });
        if (failure)
            break;
        ResultRecord r = std::move(*done[i]);
        lock.unlock();
        sink(r);
    }
    stop = true;
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

ResultRecord evaluate_cell(int n, int d, int m)
{
    if (binomial(m, d) > cell_limit())
        return predicted_only_record(n, d, m);
    return compute_cell(n, d, m, default_method(d, m));
}

std::vector<ResultRecord> table_records(int n, int dmax, int cmax, int jobs)
{
    std::vector<std::pair<int, int>> cells;
    for (int d = 1; d <= dmax; ++d)
        for (int c = 1; c <= cmax; ++c)
            cells.emplace_back(d, c);
    std::vector<ResultRecord> rows;
    run_ordered(
        cells.size(), jobs,
        [&](std::size_t i) { return evaluate_cell(n, cells[i].first, cells[i].first + cells[i].second); },
        [&](const ResultRecord& r) { rows.push_back(r); });

    auto at = [&](int d, int c) -> const ResultRecord& {
        return rows[static_cast<std::size_t>((d - 1) * cmax + (c - 1))];
    };
    for (int d = 1; d <= std::min(dmax, cmax); ++d)
        for (int c = d + 1; c <= std::min(dmax, cmax); ++c) {
            const ResultRecord& a = at(d, c);
            const ResultRecord& b = at(c, d);
            if (a.computed_total && b.computed_total && *a.computed_total != *b.computed_total)
                throw OracleMismatch("table is not symmetric at (" + std::to_string(d) + "," + std::to_string(c)
                                     + ")");
        }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ResultRecord>& rows)
{
    out << csv_header() << '\n';
    for (const ResultRecord& r : rows)
        out << csv_row(r) << '\n';
}

VerifySummary verify(Range n, Range d, Range c, int jobs, ResultCache& cache)
{
    VerifySummary s;
    std::vector<std::tuple<int, int, int>> pending;
    auto tally = [&](Status st) {
        switch (st) {
        case Status::Proven: ++s.proven; break;
        case Status::ConjectureMatch: ++s.conjecture_match; break;
        case Status::Mismatch: ++s.mismatch; break;
        case Status::PredictedOnly: ++s.predicted_only; break;
        }
    };
    for (int nn = n.lo; nn <= n.hi; ++nn)
        for (int dd = d.lo; dd <= d.hi; ++dd)
            for (int cc = c.lo; cc <= c.hi; ++cc) {
                const int m = dd + cc;
                const bool too_large = binomial(m, dd) > cell_limit();
                const Method method = too_large ? Method::None : default_method(dd, m);
                if (const ResultRecord* hit = cache.find(CellKey{nn, dd, m, method})) {
                    ++s.skipped;
                    tally(hit->status);
                } else {
                    pending.emplace_back(nn, dd, m);
                }
            }
    // Lower-bound violations are collected rather than thrown so that the
    // rest of the sweep still runs; they are never cached.
    std::mutex violation_mutex;
    std::vector<bool> violated(pending.size(), false);
    std::size_t delivered = 0;
    run_ordered(
        pending.size(), jobs,
        [&](std::size_t i) -> ResultRecord {
            const auto [nn, dd, m] = pending[i];
            try {
                return evaluate_cell(nn, dd, m);
            } catch (const LowerBoundViolation&) {
                std::lock_guard lock(violation_mutex);
                violated[i] = true;
                return predicted_only_record(nn, dd, m);
            }
        },
        [&](const ResultRecord& r) {
            const std::size_t i = delivered++;
            ++s.evaluated;
            bool bad = false;
            {
                std::lock_guard lock(violation_mutex);
                bad = violated[i];
            }
            if (bad) {
                ++s.lower_bound_violations;
                ++s.mismatch;
                return;
            }
            tally(r.status);
            cache.append(r);
        });
    return s;
}

void print_summary(std::ostream& out, const VerifySummary& s)
{
    out << "proven " << s.proven << '\n'
        << "conjecture-match " << s.conjecture_match << '\n'
        << "mismatch " << s.mismatch << '\n'
        << "predicted-only " << s.predicted_only << '\n'
        << "lower-bound-violations " << s.lower_bound_violations << '\n'
        << "evaluated " << s.evaluated << '\n'
        << "skipped " << s.skipped << '\n';
}

}  // namespace grqn
