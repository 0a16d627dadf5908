#pragma once

#include <cstddef>

#include "tritmul/field397.hpp"
#include "tritmul/polymul.hpp"

namespace tritmul {

/// Digit-multiplier method used for a digit size when none is given:
/// 1 -> C1, 2 -> C2, 4 -> C4, 7 -> KC4, 14 -> KKC4, otherwise C<D>.
MethodExpr default_digit_method(std::size_t digit_size);

/// Static description of a digit-serial LFSR multiplier for F_{3^97}.
class LfsrConfig {
public:
    /// Requires 1 <= digit_size <= 97 and method.operand_length() >= digit_size.
    LfsrConfig(std::size_t digit_size, MethodExpr method);
    explicit LfsrConfig(std::size_t digit_size)
        : LfsrConfig(digit_size, default_digit_method(digit_size)) {}

    std::size_t digit_size() const { return digit_size_; }
    /// ceil(97 / D): digits per operand and clock cycles per multiplication.
    std::size_t digits() const { return digits_; }
    std::size_t register_length() const { return digits_ * digit_size_; }
    const MethodExpr& method() const { return method_; }
    /// Pruned circuit multiplying two length-D digits.
    const Circuit& digit_circuit() const { return digit_circuit_; }

private:
    std::size_t digit_size_;
    std::size_t digits_;
    MethodExpr method_;
    Circuit digit_circuit_;
};

struct LfsrState {
    TritVector reg_a;  // operand a, zero-padded at the high end
    TritVector reg_b;  // operand b; its most-significant digit is consumed each cycle
    F97Element acc;    // feedback register
    std::size_t cycle = 0;
};

struct LfsrResult {
    F97Element product;
    std::size_t cycles;
};

LfsrState load(const LfsrConfig& cfg, const F97Element& a, const F97Element& b);

/// One clock: acc <- (acc * x^D + msd(B) * a) mod f, then B advances one digit.
/// Throws std::logic_error once all digits have been consumed.
void step(const LfsrConfig& cfg, LfsrState& state);

bool finished(const LfsrConfig& cfg, const LfsrState& state);

LfsrResult run(const LfsrConfig& cfg, const F97Element& a, const F97Element& b);

/// Combinational gate count of one cycle: D-digit multipliers for every word of
/// A, the overlap adders between them, merging into the shifted register, and
/// the feedback taps. Scaling by 2 is a bit swap and costs nothing.
CostReport cost_report(const LfsrConfig& cfg);

}  // namespace tritmul
