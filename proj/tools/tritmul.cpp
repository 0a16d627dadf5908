#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tritmul/cli.hpp"

namespace cli = tritmul::cli;

int main(int argc, char** argv) {
    CLI::App app{"Characteristic-3 multiplier toolkit: F_3^97, LFSR digit multipliers, F_3^(6*97) towers"};
    app.require_subcommand(1);

    std::string field = "f397";
    std::string method = "schoolbook";
    std::size_t digit = 0;
    std::string a_text, b_text;
    auto* mul = app.add_subcommand("mul", "Multiply two canonical encodings");
    mul->add_option("--field", field, "f397 | fp2 | fp6")->capture_default_str();
    mul->add_option("--method", method,
                    "f397: schoolbook, lfsr:D; fp2: schoolbook, karatsuba; "
                    "fp6: schoolbook, karatsuba18, new15, appendix, pipeline")
        ->capture_default_str();
    mul->add_option("--digit", digit, "digit size for --method lfsr");
    mul->add_option("a", a_text, "left operand")->required();
    mul->add_option("b", b_text, "right operand")->required();

    std::vector<std::size_t> digits(std::begin(cli::kTableDigitSizes),
                                    std::end(cli::kTableDigitSizes));
    auto* table = app.add_subcommand("table", "Cycles and gate counts per digit size");
    table->add_option("--digit", digits, "digit sizes (repeatable)");

    std::size_t count = 30;
    std::uint64_t seed = 1;
    std::string out_path;
    auto* vectors = app.add_subcommand("vectors", "Write line-delimited test vectors");
    vectors->add_option("--count", count)->capture_default_str();
    vectors->add_option("--seed", seed)->capture_default_str();
    vectors->add_option("--out", out_path, "output file (default stdout)");

    std::string in_path;
    auto* verify = app.add_subcommand("verify", "Recheck a vector file with every method");
    verify->add_option("file", in_path)->required();

    auto* counts = app.add_subcommand("counts", "Base multiplications per F_3^(6*97) method");
    counts->add_option("--seed", seed)->capture_default_str();

    std::size_t reps = 200;
    auto* bench = app.add_subcommand("bench", "Median timings (informational)");
    bench->add_option("--count", reps, "repetitions")->capture_default_str();
    bench->add_option("--seed", seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kUsageError;
    }

    try {
        if (mul->parsed()) {
            if (method == "lfsr") {
                if (digit == 0) throw cli::UsageError("digit: --method lfsr needs --digit");
                method += ":" + std::to_string(digit);
            }
            std::cout << cli::cmd_mul(field, method, a_text, b_text) << '\n';
        } else if (table->parsed()) {
            std::cout << cli::format_table(cli::cmd_table(digits));
        } else if (vectors->parsed()) {
            const auto records = cli::generate_vectors(count, seed);
            if (out_path.empty()) {
                cli::write_vectors(records, std::cout);
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw cli::UsageError("out: cannot open " + out_path);
                cli::write_vectors(records, out);
                if (!out) throw cli::UsageError("out: write failed for " + out_path);
            }
        } else if (verify->parsed()) {
            std::ifstream in(in_path, std::ios::binary);
            if (!in) throw cli::UsageError("file: cannot open " + in_path);
            const auto report = cli::verify_records(in);
            std::cout << report.format();
            return report.ok() ? cli::kSuccess : cli::kVerificationFailure;
        } else if (counts->parsed()) {
            std::cout << cli::cmd_counts(seed).format();
        } else if (bench->parsed()) {
            std::cout << cli::cmd_bench(reps, seed);
        }
    } catch (const cli::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsageError;
    }
    return cli::kSuccess;
}
