#include "tritmul/lfsr.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tritmul {

namespace {

constexpr std::size_t kDegree = F97Element::kDegree;
constexpr std::size_t kTap = 16;

// Feedback taps: every coefficient at x^i, i >= 97, moves to 2*x^(i-81) + x^(i-97).
void feedback(TritVector& reg) {
    const Trit two = Trit::from_value(2);
    for (std::size_t i = reg.size(); i-- > kDegree;) {
        const Trit top = reg.get(i);
        if (top.value() == 0) continue;
        reg.set(i, Trit{});
        const std::size_t base = i - kDegree;
        reg.set(base + kTap, trit_add(reg.get(base + kTap), trit_mul(two, top)));
        reg.set(base, trit_add(reg.get(base), top));
    }
}

std::size_t checked_digits(std::size_t digit_size) {
    if (digit_size < 1 || digit_size > kDegree) {
        throw std::invalid_argument("digit size must be in 1..97, got " +
                                    std::to_string(digit_size));
    }
    return (kDegree + digit_size - 1) / digit_size;
}

std::size_t work_length(const LfsrConfig& cfg) {
    const std::size_t d = cfg.digit_size();
    return std::max(kDegree + d, cfg.register_length() + d - 1);
}

}  // namespace

MethodExpr default_digit_method(std::size_t digit_size) {
    switch (digit_size) {
        case 2: return MethodExpr::parse("C2");
        case 4: return MethodExpr::parse("C4");
        case 7: return MethodExpr::parse("KC4");
        case 14: return MethodExpr::parse("KKC4");
        default: break;
    }
    if (digit_size == 0) throw std::invalid_argument("digit size must be >= 1");
    return MethodExpr({{MethodFactor::Kind::Classical, digit_size}});
}

LfsrConfig::LfsrConfig(std::size_t digit_size, MethodExpr method)
    : digit_size_(digit_size),
      digits_(checked_digits(digit_size)),
      method_(std::move(method)),
      digit_circuit_(build_circuit(method_, digit_size)) {}

LfsrState load(const LfsrConfig& cfg, const F97Element& a, const F97Element& b) {
    return LfsrState{a.coeffs().resized(cfg.register_length()),
                     b.coeffs().resized(cfg.register_length()), F97Element::zero(), 0};
}

bool finished(const LfsrConfig& cfg, const LfsrState& state) {
    return state.cycle >= cfg.digits();
}

void step(const LfsrConfig& cfg, LfsrState& state) {
    if (finished(cfg, state)) throw std::logic_error("LFSR multiplier already finished");
    const std::size_t d = cfg.digit_size();
    const std::size_t len = cfg.register_length();
    const Trit one = Trit::from_value(1);

    const Poly msd(state.reg_b.slice(len - d, d));
    TritVector work(work_length(cfg));
    work.accumulate(state.acc.coeffs(), d, one);
    // Digit products of every word of A; adjacent products overlap by D-1 terms.
    for (std::size_t w = 0; w < cfg.digits(); ++w) {
        const Poly word(state.reg_a.slice(w * d, d));
        work.accumulate(eval_circuit(cfg.digit_circuit(), word, msd).coeffs(), w * d, one);
    }
    feedback(work);
    state.acc = F97Element(work.resized(kDegree));

    TritVector shifted(len);
    if (len > d) shifted.accumulate(state.reg_b.slice(0, len - d), d, one);
    state.reg_b = std::move(shifted);
    ++state.cycle;
}

LfsrResult run(const LfsrConfig& cfg, const F97Element& a, const F97Element& b) {
    LfsrState state = load(cfg, a, b);
    while (!finished(cfg, state)) step(cfg, state);
    return {state.acc, state.cycle};
}

CostReport cost_report(const LfsrConfig& cfg) {
    const std::size_t d = cfg.digit_size();
    const std::size_t n = cfg.digits();
    const CostReport digit = cost(cfg.digit_circuit());

    CostReport report;
    report.mul_gates = n * digit.mul_gates;
    report.add_gates = n * digit.add_gates;

    // Track which positions of the work register carry a signal and how deep it is.
    // The product of a (degree <= 96) and a digit (degree <= D-1) ends at x^(95+D).
    const std::size_t len = work_length(cfg);
    const std::size_t product_end = std::min(len, kDegree + d - 1);
    std::vector<bool> used(len, false);
    std::vector<std::size_t> level(len, 0);
    for (std::size_t w = 0; w < n; ++w) {
        for (std::size_t k = 0; k + 1 < 2 * d; ++k) {
            const std::size_t pos = w * d + k;
            if (pos >= product_end) break;
            if (used[pos]) {
                ++report.add_gates;  // overlap circuit
                level[pos] = std::max(level[pos], digit.depth) + 1;
            } else {
                used[pos] = true;
                level[pos] = digit.depth;
            }
        }
    }
    // Merge with the register shifted by x^D (it occupies x^D .. x^(96+D)).
    for (std::size_t pos = d; pos < kDegree + d; ++pos) {
        if (used[pos]) {
            ++report.add_gates;
            level[pos] += 1;
        } else {
            used[pos] = true;
        }
    }
    // Feedback taps.
    for (std::size_t i = len; i-- > kDegree;) {
        if (!used[i]) continue;
        const std::size_t base = i - kDegree;
        for (std::size_t target : {base + kTap, base}) {
            if (used[target]) {
                ++report.add_gates;
                level[target] = std::max(level[target], level[i]) + 1;
            } else {
                used[target] = true;
                level[target] = level[i];
            }
        }
    }
    for (std::size_t pos = 0; pos < kDegree; ++pos) report.depth = std::max(report.depth, level[pos]);
    return report;
}

}  // namespace tritmul
