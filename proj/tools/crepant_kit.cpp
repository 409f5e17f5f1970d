// crepant-kit: verification suites for scalar cyclic quotient singularities
// C^n/Z_d, their blow-up resolutions and the derived-category bookkeeping
// around them.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "crepant/report.hpp"

namespace {

int emit(const crepant::cli::Json& report, const std::string& format, const std::string& output) {
    std::string text = format == "json" ? report.dump(2) + "\n" : crepant::cli::render_text(report);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "error: cannot open output file: " << output << "\n";
            return 2;
        }
        out << text;
    }
    return crepant::cli::exit_code_for(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for scalar cyclic quotient singularities C^n/Z_d"};
    app.require_subcommand(1);

    int n = 2, d = 2, max_degree = 10;
    std::vector<int> weights;
    std::string format = "text";
    std::string output;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--max-degree", max_degree, "truncation bound for graded comparisons")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--format", format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", output, "write the report to a file instead of stdout");
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "run the full verification suite for the scalar action of Z/d on C^n");
    analyze->add_option("--n", n, "dimension of the ambient space C^n")->required()
        ->check(CLI::PositiveNumber);
    analyze->add_option("--d", d, "order of the cyclic group")->required()
        ->check(CLI::PositiveNumber);
    add_common(analyze);

    CLI::App* molien = app.add_subcommand(
        "molien", "covariant Hilbert series and Gorenstein certificate of a diagonal action");
    molien->add_option("--d", d, "order of the cyclic group")->required()
        ->check(CLI::PositiveNumber);
    molien->add_option("--weights", weights, "comma-separated weights w1,w2,...")
        ->required()->delimiter(',');
    add_common(molien);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze))
            return emit(crepant::cli::analyze(n, d, max_degree), format, output);
        return emit(crepant::cli::molien_report(d, weights, max_degree), format, output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
