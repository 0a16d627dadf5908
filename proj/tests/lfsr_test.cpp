#include <random>

#include "doctest.h"
#include "tritmul/lfsr.hpp"

using namespace tritmul;

namespace {

const std::size_t kTableDigits[] = {1, 2, 4, 7, 14};

}  // namespace

TEST_CASE("configuration") {
    CHECK(LfsrConfig(7).method().to_string() == "KC4");
    CHECK(LfsrConfig(14).method().to_string() == "KKC4");
    CHECK(LfsrConfig(4).method().to_string() == "C4");
    CHECK(LfsrConfig(2).method().to_string() == "C2");
    CHECK(LfsrConfig(1).method().to_string() == "C1");
    CHECK(LfsrConfig(5).method().to_string() == "C5");
    CHECK(LfsrConfig(7).digit_circuit().input_length() == 7);
    CHECK_THROWS_AS(LfsrConfig(0), std::invalid_argument);
    CHECK_THROWS_AS(LfsrConfig(98), std::invalid_argument);
    CHECK_THROWS_AS(LfsrConfig(8, MethodExpr::parse("C4")), std::invalid_argument);
}

TEST_CASE("load pads operands at the high end") {
    std::mt19937_64 rng(1);
    const auto a = F97Element::random(rng), b = F97Element::random(rng);
    const LfsrConfig d7(7);
    const LfsrState s = load(d7, a, b);
    CHECK(s.reg_a.size() == 98);
    CHECK(s.reg_a.value(97) == 0);
    CHECK(s.reg_a.resized(97) == a.coeffs());
    CHECK(s.acc.is_zero());
    CHECK(s.cycle == 0);
    CHECK(load(LfsrConfig(1), a, b).reg_a.size() == 97);
}

TEST_CASE("step examples") {
    std::mt19937_64 rng(2);
    const auto a = F97Element::random(rng);
    const LfsrConfig cfg(7);
    // b = x^3: its top digit (x^91..x^97) is zero
    LfsrState s = load(cfg, a, F97Element::monomial(3));
    step(cfg, s);
    CHECK(s.acc.is_zero());
    CHECK(s.cycle == 1);

    CHECK(run(cfg, F97Element::one(), F97Element::one()).product == F97Element::one());
    CHECK(run(cfg, F97Element::monomial(1), F97Element::monomial(96)).product ==
          mul(F97Element::monomial(1), F97Element::monomial(96)));

    LfsrState done = load(cfg, a, a);
    while (!finished(cfg, done)) step(cfg, done);
    CHECK_THROWS_AS(step(cfg, done), std::logic_error);
}

TEST_CASE("cycle counts") {
    CHECK(run(LfsrConfig(14), F97Element::one(), F97Element::one()).cycles == 7);
    CHECK(run(LfsrConfig(4), F97Element::one(), F97Element::one()).cycles == 25);
    CHECK(run(LfsrConfig(2), F97Element::one(), F97Element::one()).cycles == 49);
    std::mt19937_64 rng(3);
    const auto a = F97Element::random(rng), b = F97Element::random(rng);
    for (std::size_t d = 1; d <= 97; ++d) {
        const LfsrConfig cfg(d);
        const auto r = run(cfg, a, b);
        CHECK(r.cycles == (97 + d - 1) / d);
        CHECK(r.product == mul(a, b));
    }
}

TEST_CASE("accumulator follows the digit-serial recurrence") {
    std::mt19937_64 rng(4);
    for (std::size_t d : kTableDigits) {
        const LfsrConfig cfg(d);
        const auto a = F97Element::random(rng), b = F97Element::random(rng);
        LfsrState s = load(cfg, a, b);
        const TritVector b_reg = b.coeffs().resized(cfg.register_length());
        for (std::size_t k = 1; k <= cfg.digits(); ++k) {
            step(cfg, s);
            // sum over consumed digits j < k of digit_j * a * x^(D(k-1-j))
            F97Element expected;
            for (std::size_t j = 0; j < k; ++j) {
                const TritVector digit = b_reg.slice(cfg.register_length() - (j + 1) * d, d);
                TritVector shifted(d + d * (k - 1 - j));
                shifted.accumulate(digit, d * (k - 1 - j), Trit::from_value(1));
                expected = expected + mul(a, reduce(Poly(shifted)));
            }
            CHECK(s.acc == expected);
        }
    }
}

TEST_CASE("random agreement with the reference multiplier") {
    std::mt19937_64 rng(5);
    for (std::size_t d : kTableDigits) {
        const LfsrConfig cfg(d);
        for (int rep = 0; rep < 200; ++rep) {
            const auto a = F97Element::random(rng), b = F97Element::random(rng);
            CHECK(run(cfg, a, b).product == mul(a, b));
        }
    }
    // non-default digit methods also work
    const LfsrConfig kara(8, MethodExpr::parse("KKK"));
    const auto a = F97Element::random(rng), b = F97Element::random(rng);
    CHECK(run(kara, a, b).product == mul(a, b));
}

TEST_CASE("cost model trend") {
    std::size_t prev_mul = 0;
    std::size_t prev_cycles = 1000;
    for (std::size_t d : kTableDigits) {
        const LfsrConfig cfg(d);
        const CostReport c = cost_report(cfg);
        CHECK(c.mul_gates > prev_mul);
        CHECK(cfg.digits() < prev_cycles);
        CHECK(c.mul_gates == cfg.digits() * cost(cfg.digit_circuit()).mul_gates);
        prev_mul = c.mul_gates;
        prev_cycles = cfg.digits();
    }
    CHECK(cost(LfsrConfig(1).digit_circuit()).mul_gates == 1);
    CHECK(cost_report(LfsrConfig(1)).mul_gates == 97);
    CHECK(cost_report(LfsrConfig(7)).mul_gates == 14 * 41);
    CHECK(cost_report(LfsrConfig(14)).mul_gates == 7 * 132);
}

TEST_CASE("cost model add gates for D = 1") {
    // 97 one-gate digit multipliers, no overlap, 96 merges with the shifted
    // register, and one feedback coefficient folded into two taps.
    const CostReport c = cost_report(LfsrConfig(1));
    CHECK(c.add_gates == 96 + 2);
    CHECK(c.depth == 3);
}
