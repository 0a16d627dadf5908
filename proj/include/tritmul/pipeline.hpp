#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tritmul/tower.hpp"

namespace tritmul {

/// Coefficients in {-1, 0, +1} over the six flat coordinates a0..a5 (or b0..b5).
using OperandSpec = std::array<int, 6>;

/// Adds scalar * P to one of the three quadratic-extension accumulators
/// (the r^0, r^1, r^2 coefficients of the result).
struct AccumUpdate {
    std::size_t accumulator;
    Fp2Scalar scalar;

    friend bool operator==(const AccumUpdate&, const AccumUpdate&) = default;
};

/// One F_{3^97} multiplier slot.
struct Job {
    OperandSpec left;
    OperandSpec right;
    std::vector<AccumUpdate> updates;
};

struct Schedule {
    std::vector<Job> jobs;

    /// One line per job: operand forms and accumulator updates.
    std::string dump() const;
};

/// The 15-job schedule. Operands are the real and imaginary parts of the
/// five point evaluations (and their sums); the accumulator scalars fold
/// Karatsuba recombination, interpolation and r^3 = r + 1 into each product.
Schedule build_schedule();

struct AccumulatorWrite {
    std::size_t slot;
    std::size_t job;
    std::size_t accumulator;
};

struct ExecutionResult {
    Fp6Element value;
    std::size_t slots = 0;
    std::vector<AccumulatorWrite> writes;
};

/// Cycle-by-cycle model of the input / multiply / output pipeline.
/// Base multiplications are charged to ctr; scalar units never touch it.
ExecutionResult execute(const Schedule& schedule, const Fp6Element& a, const Fp6Element& b,
                        MulCounter& ctr);
ExecutionResult execute(const Schedule& schedule, const Fp6Element& a, const Fp6Element& b);

}  // namespace tritmul
