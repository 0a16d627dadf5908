#include <sstream>
#include <string>

#include "doctest.h"
#include "tritmul/cli.hpp"
#include "tritmul/tower.hpp"

using namespace tritmul;
using namespace tritmul::cli;

namespace {

std::string one97() { return F97Element::one().to_string(); }
std::string zero97() { return F97Element::zero().to_string(); }

std::string error_of(std::string_view field, std::string_view method, std::string_view a,
                     std::string_view b) {
    try {
        cmd_mul(field, method, a, b);
    } catch (const UsageError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("mul over every field") {
    const auto x = F97Element::monomial(96);
    const std::string expected = mul(x, x).to_string();
    for (const char* m : {"schoolbook", "lfsr:1", "lfsr:7", "lfsr:97"}) {
        CHECK(cmd_mul("f397", m, x.to_string(), x.to_string()) == expected);
    }
    const std::string s = zero97() + ":" + one97();
    const std::string minus_one = Fp2Element{-F97Element::one(), F97Element::zero()}.to_string();
    CHECK(cmd_mul("fp2", "karatsuba", s, s) == minus_one);
    CHECK(cmd_mul("fp2", "schoolbook", s, s) == minus_one);

    std::mt19937_64 rng(31);
    const auto a = Fp6Element::random(rng);
    for (const char* m : {"schoolbook", "karatsuba18", "new15", "appendix", "pipeline"}) {
        CHECK(cmd_mul("fp6", m, a.to_string(), Fp6Element::one().to_string()) == a.to_string());
    }
}

TEST_CASE("mul argument errors name the argument") {
    const std::string one = one97();
    CHECK(error_of("f397", "schoolbook", "12", one).starts_with("a:"));
    CHECK(error_of("f397", "schoolbook", one, one + "3").starts_with("b:"));
    CHECK(error_of("f398", "schoolbook", one, one).starts_with("field:"));
    CHECK(error_of("f397", "lfsr:0", one, one).starts_with("method:"));
    CHECK(error_of("f397", "lfsr:98", one, one).starts_with("method:"));
    CHECK(error_of("f397", "lfsr:", one, one).starts_with("method:"));
    CHECK(error_of("fp2", "new15", one + ":" + one, one + ":" + one).starts_with("method:"));
    CHECK(error_of("fp6", "schoolbook", one, one).starts_with("a:"));
}

TEST_CASE("table rows") {
    const auto rows = cmd_table(kTableDigitSizes);
    REQUIRE(rows.size() == 5);
    const std::size_t cycles[] = {97, 49, 25, 14, 7};
    const std::size_t muls[] = {97, 196, 400, 574, 924};
    const char* methods[] = {"C1", "C2", "C4", "KC4", "KKC4"};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(rows[i].cycles == cycles[i]);
        CHECK(rows[i].cost.mul_gates == muls[i]);
        CHECK(rows[i].method == methods[i]);
        CHECK(rows[i].gate_cycles == (rows[i].cost.mul_gates + rows[i].cost.add_gates) * cycles[i]);
    }
    const std::string text = format_table(rows);
    CHECK(text.starts_with("D"));
    CHECK(text.find("KKC4") != std::string::npos);

    const std::size_t bad[] = {0};
    CHECK_THROWS_AS(cmd_table(bad), UsageError);
    const std::size_t big[] = {98};
    CHECK_THROWS_AS(cmd_table(big), UsageError);
}

TEST_CASE("vector generation is deterministic") {
    const auto v1 = generate_vectors(6, 99);
    const auto v2 = generate_vectors(6, 99);
    REQUIRE(v1.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(v1[i].to_line() == v2[i].to_line());
        CHECK(v1[i].seed == 99 + i);
    }
    CHECK(v1[0].op == "f397_mul");
    CHECK(v1[1].op == "fp2_mul");
    CHECK(v1[2].op == "fp6_mul");
    CHECK(v1[0].to_line().starts_with("{\"op\":\"f397_mul\",\"a\":"));
    CHECK(VectorRecord::from_line(v1[4].to_line()).to_line() == v1[4].to_line());
    CHECK(generate_vectors(3, 100)[0].to_line() != v1[0].to_line());
}

TEST_CASE("verify round trip and tampering") {
    std::stringstream buf;
    write_vectors(generate_vectors(9, 5), buf);
    const std::string text = buf.str();
    {
        std::istringstream in(text);
        const VerifyReport r = verify_records(in);
        CHECK(r.ok());
        CHECK(r.records == 9);
        CHECK(r.methods.at("fp6_mul/pipeline").pass == 3);
        CHECK(r.methods.at("f397_mul/lfsr:14").pass == 3);
        CHECK(r.format().find("records 9 failed 0") != std::string::npos);
    }
    {
        // flip the first digit of the fifth record's expected value
        std::string tampered = text;
        std::size_t line_start = 0;
        for (int i = 0; i < 4; ++i) line_start = tampered.find('\n', line_start) + 1;
        const std::size_t pos = tampered.find("\"expected\":\"", line_start) + 12;
        tampered[pos] = tampered[pos] == '0' ? '1' : '0';
        std::istringstream in(tampered);
        const VerifyReport r = verify_records(in);
        CHECK_FALSE(r.ok());
        REQUIRE(r.failed_lines.size() == 1);
        CHECK(r.failed_lines[0] == 5);
        CHECK(r.format().find("line:5") != std::string::npos);
    }
}

TEST_CASE("malformed vector files") {
    std::istringstream in("\n{\"op\":\"f397_mul\"}\n");
    try {
        verify_records(in);
        FAIL("expected UsageError");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).starts_with("line 2:"));
    }
    std::istringstream bad_op("{\"op\":\"f9_mul\",\"a\":\"0\",\"b\":\"0\",\"expected\":\"0\",\"seed\":0}\n");
    CHECK_THROWS_AS(verify_records(bad_op), UsageError);
    std::istringstream empty("");
    CHECK(verify_records(empty).records == 0);
}

TEST_CASE("counts") {
    const CountsReport r = cmd_counts(1);
    CHECK(r.base_muls.at("schoolbook") == 27);
    CHECK(r.base_muls.at("schoolbook_flat") == 36);
    CHECK(r.base_muls.at("karatsuba18") == 18);
    CHECK(r.base_muls.at("new15") == 15);
    CHECK(r.base_muls.at("pipeline") == 15);
    CHECK(r.format().find("new15/karatsuba18 0.833 (saving 16.7%)") != std::string::npos);
}

TEST_CASE("bench rejects zero repetitions") {
    CHECK_THROWS_AS(cmd_bench(0, 1), UsageError);
    CHECK(cmd_bench(1, 1).starts_with("timing"));
}
