#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tritmul/polymul.hpp"

namespace tritmul::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Bad arguments or malformed input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Multiplies two canonical encodings. field: f397 | fp2 | fp6.
/// Methods: f397 {schoolbook, lfsr:D}; fp2 {schoolbook, karatsuba};
/// fp6 {schoolbook, karatsuba18, new15, appendix, pipeline}.
std::string cmd_mul(std::string_view field, std::string_view method, std::string_view a_text,
                    std::string_view b_text);

struct TableRow {
    std::size_t digit_size;
    std::string method;
    std::size_t cycles;
    CostReport cost;
    std::size_t gate_cycles;  // (mul + add gates) * cycles
};

inline constexpr std::size_t kTableDigitSizes[] = {1, 2, 4, 7, 14};

std::vector<TableRow> cmd_table(std::span<const std::size_t> digit_sizes);
std::string format_table(const std::vector<TableRow>& rows);

struct VectorRecord {
    std::string op;  // f397_mul | fp2_mul | fp6_mul
    std::string a;
    std::string b;
    std::string expected;
    std::uint64_t seed = 0;

    /// One JSON object, fields in the order op, a, b, expected, seed.
    std::string to_line() const;
    static VectorRecord from_line(std::string_view line);
};

/// Record i uses op f397_mul, fp2_mul, fp6_mul for i % 3 = 0, 1, 2 and draws
/// its operands from std::mt19937_64(seed + i).
std::vector<VectorRecord> generate_vectors(std::size_t count, std::uint64_t seed);
void write_vectors(const std::vector<VectorRecord>& records, std::ostream& out);

struct MethodTally {
    std::size_t pass = 0;
    std::size_t fail = 0;
};

struct VerifyReport {
    std::size_t records = 0;
    std::vector<std::size_t> failed_lines;  // 1-based
    std::map<std::string, MethodTally> methods;  // "<op>/<method>"

    bool ok() const { return failed_lines.empty(); }
    std::string format() const;
};

/// Recomputes every record through every implemented method. Parse failures
/// throw UsageError naming the line number.
VerifyReport verify_records(std::istream& in);

struct CountsReport {
    std::map<std::string, std::uint64_t> base_muls;
    std::string format() const;
};

CountsReport cmd_counts(std::uint64_t seed);

/// Median wall-clock time per operation over `repetitions` runs. Informational only.
std::string cmd_bench(std::size_t repetitions, std::uint64_t seed);

}  // namespace tritmul::cli
