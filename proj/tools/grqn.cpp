// grqn: Q_n-homology of real Grassmannians and their inclusion cofibers.

#include "grqn/commands.hpp"
#include "grqn/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

grqn::Method method_option(const std::string& s)
{
    const grqn::Method m = grqn::parse_method(s);
    if (m == grqn::Method::None)
        throw grqn::Error("basis must be lenart, derivation or both");
    return m;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Q_n-homology of real Grassmannians over F_2"};
    app.require_subcommand(1);

    int n = 0, d = 0, m = 0;
    std::string basis = "both";
    std::string format = "json";

    auto* compute = app.add_subcommand("compute", "compute one cell");
    compute->add_option("--n", n, "Milnor primitive index")->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--d", d, "plane dimension")->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--m", m, "ambient dimension")->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--basis", basis, "lenart, derivation or both")
        ->check(CLI::IsMember({"lenart", "derivation", "both"}));
    compute->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    int dmax = 0, cmax = 0, jobs = 1;
    std::string table_format = "csv";
    auto* table = app.add_subcommand("table", "appendix-style (d, c) table for fixed n");
    table->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    table->add_option("--dmax", dmax)->required()->check(CLI::PositiveNumber);
    table->add_option("--cmax", cmax)->required()->check(CLI::PositiveNumber);
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    std::string n_range, d_range, c_range, cache_path = "grqn-cache.jsonl";
    auto* verify = app.add_subcommand("verify", "sweep cells against the predictions, with a cache");
    verify->add_option("--n", n_range, "A..B")->required();
    verify->add_option("--d", d_range, "A..B")->required();
    verify->add_option("--c", c_range, "A..B")->required();
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify->add_option("--cache", cache_path);

    auto* cofiber = app.add_subcommand("cofiber", "reduced Q_n-homology of C_d(R^m) and the connecting map");
    cofiber->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    cofiber->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    cofiber->add_option("--m", m)->required()->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) {
            const grqn::ResultRecord r = grqn::compute_cell(n, d, m, method_option(basis));
            if (format == "csv")
                grqn::write_csv(std::cout, {r});
            else
                std::cout << grqn::to_json(r) << '\n';
            return r.status == grqn::Status::Mismatch ? 1 : 0;
        }
        if (*table) {
            const auto rows = grqn::table_records(n, dmax, cmax, jobs);
            if (table_format == "csv") {
                grqn::write_csv(std::cout, rows);
            } else {
                for (const auto& r : rows)
                    std::cout << grqn::to_json(r) << '\n';
            }
            return 0;
        }
        if (*verify) {
            grqn::ResultCache cache(cache_path);
            const auto summary = grqn::verify(grqn::parse_range(n_range), grqn::parse_range(d_range),
                                              grqn::parse_range(c_range), jobs, cache);
            grqn::print_summary(std::cout, summary);
            return summary.ok() ? 0 : 1;
        }
        if (*cofiber) {
            std::cout << grqn::to_json(grqn::cofiber_report(n, d, m)) << '\n';
            return 0;
        }
    } catch (const grqn::Error& e) {
        std::cerr << "grqn: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
