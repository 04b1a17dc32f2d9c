#include "grqn/cell.hpp"

#include "grqn/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <limits>

namespace grqn {

using json = nlohmann::ordered_json;

std::string to_string(Status s)
{
    switch (s) {
    case Status::Proven: return "proven";
    case Status::ConjectureMatch: return "conjecture-match";
    case Status::Mismatch: return "mismatch";
    case Status::PredictedOnly: return "predicted-only";
    }
    return "?";
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::Lenart: return "lenart";
    case Method::Derivation: return "derivation";
    case Method::Both: return "both";
    case Method::None: return "none";
    }
    return "?";
}

Status parse_status(const std::string& s)
{
    for (Status v : {Status::Proven, Status::ConjectureMatch, Status::Mismatch, Status::PredictedOnly})
        if (to_string(v) == s)
            return v;
    throw Error("unknown status '" + s + "'");
}

Method parse_method(const std::string& s)
{
    for (Method v : {Method::Lenart, Method::Derivation, Method::Both, Method::None})
        if (to_string(v) == s)
            return v;
    throw Error("unknown method '" + s + "'");
}

std::int64_t cell_limit()
{
    if (const char* env = std::getenv("GRQN_CELL_LIMIT")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
        throw Error(std::string("GRQN_CELL_LIMIT is not a positive integer: ") + env);
    }
    return 5'000'000;
}

Method default_method(int d, int m)
{
    return binomial(m, d) <= 10'000 ? Method::Both : Method::Lenart;
}

bool is_proven_range(int n, int d, int m)
{
    // d <= 2 is covered for the d = 2 Grassmannians and, by Gr_d = Gr_{m-d},
    // for c <= 2 as well.
    return m <= qn_threshold(n) || std::min(d, m - d) <= 2;
}

Status classify(int n, int d, int m, const BigInt& computed, const BigInt& predicted)
{
    if (computed != predicted)
        return Status::Mismatch;
    return is_proven_range(n, d, m) ? Status::Proven : Status::ConjectureMatch;
}

namespace {

void check_size(int d, int m)
{
    const BigInt size = binomial(m, d);
    if (size > cell_limit())
        throw CellTooLarge("basis size binom(" + std::to_string(m) + "," + std::to_string(d) + ") = "
                           + size.str() + " exceeds the cell limit " + std::to_string(cell_limit()));
}

std::vector<std::pair<int, std::int64_t>> nonzero_degrees(const HomologyProfile& h)
{
    std::vector<std::pair<int, std::int64_t>> out;
    for (std::size_t t = 0; t < h.per_degree.size(); ++t)
        if (h.per_degree[t] != 0)
            out.emplace_back(static_cast<int>(t), h.per_degree[t]);
    return out;
}

std::int64_t millis_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ResultRecord compute_cell(int n, int d, int m, Method method)
{
    if (n < 0 || d < 0 || d > m)
        throw InvalidCell("invalid cell n=" + std::to_string(n) + " d=" + std::to_string(d) + " m=" + std::to_string(m));
    if (method == Method::None)
        throw Error("compute_cell needs a construction method");
    check_size(d, m);
    const auto start = std::chrono::steady_clock::now();
    SchubertRing ring(Grid{d, m - d});
    GradedMap map;
    if (method == Method::Derivation) {
        map = derivation_qn_matrix(n, ring);
    } else {
        map = lenart_qn_matrix(n, ring);
        if (method == Method::Both && !(derivation_qn_matrix(n, ring) == map))
            throw OracleMismatch("Lenart and derivation matrices differ at n=" + std::to_string(n)
                                 + " d=" + std::to_string(d) + " m=" + std::to_string(m));
    }
    const HomologyProfile h = qn_homology(map);

    ResultRecord r;
    r.n = n;
    r.d = d;
    r.m = m;
    r.computed_total = BigInt(h.total);
    r.per_degree = nonzero_degrees(h);
    r.predicted = predicted_k(n, d, m);
    r.method = method;
    if (*r.computed_total < r.predicted)
        throw LowerBoundViolation("computed " + r.computed_total->str() + " below predicted " + r.predicted.str()
                                  + " at n=" + std::to_string(n) + " d=" + std::to_string(d) + " m="
                                  + std::to_string(m));
    r.status = classify(n, d, m, *r.computed_total, r.predicted);
    r.elapsed_ms = millis_since(start);
    return r;
}

ResultRecord predicted_only_record(int n, int d, int m)
{
    ResultRecord r;
    r.n = n;
    r.d = d;
    r.m = m;
    r.predicted = predicted_k(n, d, m);
    r.status = Status::PredictedOnly;
    r.method = Method::None;
    return r;
}

namespace {

// Integers that fit in 64 bits are JSON numbers; larger ones are strings.
json big_to_json(const BigInt& v)
{
    if (v >= 0 && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt big_from_json(const json& j)
{
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string())
        return BigInt(j.get<std::string>());
    throw Error("expected an integer");
}

}  // namespace

std::string to_json(const ResultRecord& r)
{
    json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["m"] = r.m;
    j["computed_total"] = r.computed_total ? big_to_json(*r.computed_total) : json(nullptr);
    json degrees = json::array();
    for (const auto& [t, dim] : r.per_degree)
        degrees.push_back({t, dim});
    j["per_degree"] = std::move(degrees);
    j["predicted"] = big_to_json(r.predicted);
    j["status"] = to_string(r.status);
    j["method"] = to_string(r.method);
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

ResultRecord record_from_json(const std::string& line)
{
    try {
        const json j = json::parse(line);
        ResultRecord r;
        r.n = j.at("n").get<int>();
        r.d = j.at("d").get<int>();
        r.m = j.at("m").get<int>();
        if (!j.at("computed_total").is_null())
            r.computed_total = big_from_json(j.at("computed_total"));
        for (const auto& pair : j.at("per_degree"))
            r.per_degree.emplace_back(pair.at(0).get<int>(), pair.at(1).get<std::int64_t>());
        r.predicted = big_from_json(j.at("predicted"));
        r.status = parse_status(j.at("status").get<std::string>());
        r.method = parse_method(j.at("method").get<std::string>());
        r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
        return r;
    } catch (const CacheCorrupt&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheCorrupt(std::string("bad record: ") + e.what());
    }
}

std::string csv_header()
{
    return "d,c,value,status,method";
}

std::string csv_row(const ResultRecord& r)
{
    const BigInt& value = r.computed_total ? *r.computed_total : r.predicted;
    return std::to_string(r.d) + "," + std::to_string(r.m - r.d) + "," + value.str() + "," + to_string(r.status)
           + "," + to_string(r.method);
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path))
{
    std::ifstream in(path_);
    if (!in)
        return;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty())
            continue;
        try {
            ResultRecord r = record_from_json(line);
            records_[CellKey{r.n, r.d, r.m, r.method}] = std::move(r);
        } catch (const CacheCorrupt& e) {
            throw CacheCorrupt(path_.string() + ":" + std::to_string(number) + ": " + e.what());
        }
    }
}

const ResultRecord* ResultCache::find(const CellKey& key) const
{
    auto it = records_.find(key);
    return it == records_.end() ? nullptr : &it->second;
}

void ResultCache::append(const ResultRecord& r)
{
    std::ofstream out(path_, std::ios::app | std::ios::binary);
    if (!out)
        throw Error("cannot open cache " + path_.string() + " for appending");
    out << to_json(r) << '\n';
    out.flush();
    if (!out)
        throw Error("write to cache " + path_.string() + " failed");
    records_[CellKey{r.n, r.d, r.m, r.method}] = r;
}

CofiberReport cofiber_report(int n, int d, int m)
{
    if (d < 1 || m - d < 1)
        throw GridTooSmall("the cofiber needs 1 <= d < m");
    check_size(d, m);
    SchubertRing ring(Grid{d, m - d});
    const GradedMap full = lenart_qn_matrix(n, ring);
    const IdealSplit split = ideal_subcomplex(full, ring);
    const HomologyProfile h_full = qn_homology(full);
    const HomologyProfile h_sub = qn_homology(split.sub.map);
    const HomologyProfile h_quot = qn_homology(split.quot.map);
    const HomologyProfile h_twisted = qn_homology(twisted_complex(n, d, m));

    CofiberReport r;
    r.n = n;
    r.d = d;
    r.m = m;
    r.reduced_k = h_sub.total;
    r.per_degree = nonzero_degrees(h_sub);
    r.delta_rank = connecting_rank(h_quot.total, h_sub.total, h_full.total);
    r.predicted_reduced_k = predicted_cofiber_k(n, d, m);
    r.predicted_delta = predicted_delta_rank(n, d, m);
    r.twisted_agrees = true;
    const int shift = m - d;
    for (int t = 0; t <= d * (m - d); ++t)
        if (h_sub.at(t) != h_twisted.at(t - shift))
            r.twisted_agrees = false;
    return r;
}

std::string to_json(const CofiberReport& r)
{
    json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["m"] = r.m;
    j["reduced_k"] = r.reduced_k;
    json degrees = json::array();
    for (const auto& [t, dim] : r.per_degree)
        degrees.push_back({t, dim});
    j["per_degree"] = std::move(degrees);
    j["delta_rank"] = r.delta_rank;
    j["predicted_reduced_k"] = big_to_json(r.predicted_reduced_k);
    j["predicted_delta_rank"] = big_to_json(r.predicted_delta);
    j["twisted_agrees"] = r.twisted_agrees;
    return j.dump();
}

}  // namespace grqn
