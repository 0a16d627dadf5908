#include "tritmul/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "tritmul/field397.hpp"
#include "tritmul/lfsr.hpp"
#include "tritmul/pipeline.hpp"
#include "tritmul/tower.hpp"

namespace tritmul::cli {

namespace {

template <typename T, typename Parse>
T parse_operand(std::string_view name, std::string_view text, Parse parse) {
    try {
        return parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(name) + ": " + e.what());
    }
}

std::size_t parse_lfsr_digit(std::string_view method) {
    const std::string_view digits = method.substr(5);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 3) {
        throw UsageError("method: expected lfsr:<D>, got '" + std::string(method) + "'");
    }
    const std::size_t d = std::stoul(std::string(digits));
    if (d < 1 || d > F97Element::kDegree) throw UsageError("method: digit size must be in 1..97");
    return d;
}

F97Element mul_f397(std::string_view method, const F97Element& a, const F97Element& b) {
    if (method == "schoolbook") return mul(a, b);
    if (method.starts_with("lfsr:")) return run(LfsrConfig(parse_lfsr_digit(method)), a, b).product;
    throw UsageError("method: unknown f397 method '" + std::string(method) + "'");
}

Fp2Element mul_fp2(std::string_view method, const Fp2Element& a, const Fp2Element& b) {
    MulCounter ctr;
    if (method == "schoolbook") return fp2_mul_schoolbook(a, b, ctr);
    if (method == "karatsuba") return fp2_mul(a, b, ctr);
    throw UsageError("method: unknown fp2 method '" + std::string(method) + "'");
}

Fp6Element mul_fp6(std::string_view method, const Fp6Element& a, const Fp6Element& b) {
    MulCounter ctr;
    if (method == "schoolbook") return fp6_mul_schoolbook(a, b, ctr);
    if (method == "karatsuba18") return fp6_mul_18(a, b, ctr);
    if (method == "new15") return fp6_mul_15(a, b, ctr).value;
    if (method == "appendix") return fp6_mul_appendix(a, b, ctr).value;
    if (method == "pipeline") return execute(build_schedule(), a, b, ctr).value;
    throw UsageError("method: unknown fp6 method '" + std::string(method) + "'");
}

const std::vector<std::string>& methods_for(std::string_view op) {
    static const std::vector<std::string> f397{"schoolbook", "lfsr:1", "lfsr:2",
                                               "lfsr:4",     "lfsr:7", "lfsr:14"};
    static const std::vector<std::string> fp2{"schoolbook", "karatsuba"};
    static const std::vector<std::string> fp6{"schoolbook", "karatsuba18", "new15", "appendix",
                                              "pipeline"};
    if (op == "f397_mul") return f397;
    if (op == "fp2_mul") return fp2;
    if (op == "fp6_mul") return fp6;
    throw UsageError("unknown op '" + std::string(op) + "'");
}

std::string field_of(std::string_view op) {
    if (op == "f397_mul") return "f397";
    if (op == "fp2_mul") return "fp2";
    return "fp6";
}

}  // namespace

std::string cmd_mul(std::string_view field, std::string_view method, std::string_view a_text,
                    std::string_view b_text) {
    if (field == "f397") {
        const auto a = parse_operand<F97Element>("a", a_text, F97Element::parse);
        const auto b = parse_operand<F97Element>("b", b_text, F97Element::parse);
        return mul_f397(method, a, b).to_string();
    }
    if (field == "fp2") {
        const auto a = parse_operand<Fp2Element>("a", a_text, Fp2Element::parse);
        const auto b = parse_operand<Fp2Element>("b", b_text, Fp2Element::parse);
        return mul_fp2(method, a, b).to_string();
    }
    if (field == "fp6") {
        const auto a = parse_operand<Fp6Element>("a", a_text, Fp6Element::parse);
        const auto b = parse_operand<Fp6Element>("b", b_text, Fp6Element::parse);
        return mul_fp6(method, a, b).to_string();
    }
    throw UsageError("field: expected f397, fp2 or fp6, got '" + std::string(field) + "'");
}

std::vector<TableRow> cmd_table(std::span<const std::size_t> digit_sizes) {
    std::vector<TableRow> rows;
    for (std::size_t d : digit_sizes) {
        if (d < 1 || d > F97Element::kDegree) {
            throw UsageError("digit: digit size must be in 1..97, got " + std::to_string(d));
        }
        const LfsrConfig cfg(d);
        const CostReport c = cost_report(cfg);
        rows.push_back({d, cfg.method().to_string(), cfg.digits(), c,
                        (c.mul_gates + c.add_gates) * cfg.digits()});
    }
    return rows;
}

std::string format_table(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(4) << "D" << std::setw(8) << "method" << std::right
        << std::setw(8) << "cycles" << std::setw(8) << "mul" << std::setw(8) << "add"
        << std::setw(8) << "depth" << std::setw(12) << "gates*cyc" << '\n';
    for (const TableRow& r : rows) {
        out << std::left << std::setw(4) << r.digit_size << std::setw(8) << r.method
            << std::right << std::setw(8) << r.cycles << std::setw(8) << r.cost.mul_gates
            << std::setw(8) << r.cost.add_gates << std::setw(8) << r.cost.depth
            << std::setw(12) << r.gate_cycles << '\n';
    }
    return out.str();
}

std::string VectorRecord::to_line() const {
    nlohmann::ordered_json j;
    j["op"] = op;
    j["a"] = a;
    j["b"] = b;
    j["expected"] = expected;
    j["seed"] = seed;
    return j.dump();
}

VectorRecord VectorRecord::from_line(std::string_view line) {
    const auto j = nlohmann::json::parse(line);
    VectorRecord r;
    r.op = j.at("op").get<std::string>();
    r.a = j.at("a").get<std::string>();
    r.b = j.at("b").get<std::string>();
    r.expected = j.at("expected").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

std::vector<VectorRecord> generate_vectors(std::size_t count, std::uint64_t seed) {
    if (count < 1) throw UsageError("count: must be >= 1");
    std::vector<VectorRecord> records;
    for (std::size_t i = 0; i < count; ++i) {
        VectorRecord r;
        r.seed = seed + i;
        std::mt19937_64 rng(r.seed);
        switch (i % 3) {
            case 0: {
                r.op = "f397_mul";
                const auto a = F97Element::random(rng);
                const auto b = F97Element::random(rng);
                r.a = a.to_string();
                r.b = b.to_string();
                r.expected = mul(a, b).to_string();
                break;
            }
            case 1: {
                r.op = "fp2_mul";
                const auto a = Fp2Element::random(rng);
                const auto b = Fp2Element::random(rng);
                MulCounter ctr;
                r.a = a.to_string();
                r.b = b.to_string();
                r.expected = fp2_mul_schoolbook(a, b, ctr).to_string();
                break;
            }
            default: {
                r.op = "fp6_mul";
                const auto a = Fp6Element::random(rng);
                const auto b = Fp6Element::random(rng);
                r.a = a.to_string();
                r.b = b.to_string();
                r.expected = fp6_mul_schoolbook(a, b).to_string();
                break;
            }
        }
        records.push_back(std::move(r));
    }
    return records;
}

void write_vectors(const std::vector<VectorRecord>& records, std::ostream& out) {
    for (const auto& r : records) out << r.to_line() << '\n';
}

VerifyReport verify_records(std::istream& in) {
    VerifyReport report;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        VectorRecord r;
        try {
            r = VectorRecord::from_line(line);
            (void)methods_for(r.op);
        } catch (const std::exception& e) {
            throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
        }
        ++report.records;
        bool record_ok = true;
        for (const std::string& method : methods_for(r.op)) {
            std::string got;
            try {
                got = cmd_mul(field_of(r.op), method, r.a, r.b);
            } catch (const UsageError& e) {
                throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
            }
            auto& tally = report.methods[r.op + "/" + method];
            if (got == r.expected) {
                ++tally.pass;
            } else {
                ++tally.fail;
                record_ok = false;
            }
        }
        if (!record_ok) report.failed_lines.push_back(line_no);
    }
    if (in.bad()) throw UsageError("read error after line " + std::to_string(line_no));
    return report;
}

std::string VerifyReport::format() const {
    std::ostringstream out;
    for (const auto& [name, tally] : methods) {
        out << std::left << std::setw(22) << name << " pass " << tally.pass << " fail "
            << tally.fail << '\n';
    }
    out << "records " << records << " failed " << failed_lines.size();
    for (std::size_t l : failed_lines) out << " line:" << l;
    out << '\n';
    return out.str();
}

CountsReport cmd_counts(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto a = Fp6Element::random(rng);
    const auto b = Fp6Element::random(rng);
    CountsReport report;
    auto count = [&](const std::string& name, const std::function<void(MulCounter&)>& f) {
        MulCounter ctr;
        f(ctr);
        report.base_muls[name] = ctr.base_muls();
    };
    count("schoolbook", [&](MulCounter& c) { fp6_mul_schoolbook(a, b, c); });
    count("schoolbook_flat", [&](MulCounter& c) { fp6_mul_schoolbook_flat(a, b, c); });
    count("karatsuba18", [&](MulCounter& c) { fp6_mul_18(a, b, c); });
    count("new15", [&](MulCounter& c) { fp6_mul_15(a, b, c); });
    count("appendix", [&](MulCounter& c) { fp6_mul_appendix(a, b, c); });
    count("pipeline", [&](MulCounter& c) { execute(build_schedule(), a, b, c); });
    return report;
}

std::string CountsReport::format() const {
    std::ostringstream out;
    for (const auto& [name, n] : base_muls) {
        out << std::left << std::setw(16) << name << ' ' << n << '\n';
    }
    const double ratio = static_cast<double>(base_muls.at("new15")) /
                         static_cast<double>(base_muls.at("karatsuba18"));
    out << std::fixed << std::setprecision(3) << "new15/karatsuba18 " << ratio << " (saving "
        << std::setprecision(1) << (1.0 - ratio) * 100.0 << "%)\n";
    return out.str();
}

std::string cmd_bench(std::size_t repetitions, std::uint64_t seed) {
    if (repetitions < 1) throw UsageError("count: must be >= 1");
    std::mt19937_64 rng(seed);
    const auto x = F97Element::random(rng);
    const auto y = F97Element::random(rng);
    const auto a = Fp6Element::random(rng);
    const auto b = Fp6Element::random(rng);
    const Schedule schedule = build_schedule();

    std::ostringstream out;
    out << "timing (informational, median of " << repetitions << " runs)\n";
    auto time = [&](const std::string& name, const std::function<void()>& f) {
        std::vector<double> samples;
        for (std::size_t i = 0; i < repetitions; ++i) {
            const auto start = std::chrono::steady_clock::now();
            f();
            const auto stop = std::chrono::steady_clock::now();
            samples.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
        }
        std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
        out << std::left << std::setw(18) << name << std::right << std::fixed
            << std::setprecision(2) << std::setw(12) << samples[samples.size() / 2] << " us\n";
    };
    time("f397 schoolbook", [&] { (void)mul(x, y); });
    for (std::size_t d : kTableDigitSizes) {
        const LfsrConfig cfg(d);
        time("f397 lfsr:" + std::to_string(d), [&] { (void)run(cfg, x, y); });
    }
    MulCounter ctr;
    time("fp6 schoolbook", [&] { (void)fp6_mul_schoolbook(a, b, ctr); });
    time("fp6 karatsuba18", [&] { (void)fp6_mul_18(a, b, ctr); });
    time("fp6 new15", [&] { (void)fp6_mul_15(a, b, ctr); });
    time("fp6 appendix", [&] { (void)fp6_mul_appendix(a, b, ctr); });
    time("fp6 pipeline", [&] { (void)execute(schedule, a, b, ctr); });
    return out.str();
}

}  // namespace tritmul::cli
