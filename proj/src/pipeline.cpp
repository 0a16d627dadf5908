#include "tritmul/pipeline.hpp"

#include <optional>
#include <sstream>

namespace tritmul {

namespace {

// Reduction of c0..c4 into the r^0, r^1, r^2 accumulators (r^3 = r + 1, r^4 = r^2 + r).
constexpr int kReduction[3][5] = {
    {1, 0, 0, 1, 0},
    {0, 1, 0, 1, 1},
    {0, 0, 1, 0, 1},
};

// Weights of u0v0, (u0+u1)(v0+v1), u1v1 in a Karatsuba quadratic-extension product.
constexpr std::array<Fp2Scalar, 3> kKaratsubaWeights{Fp2Scalar{1, -1}, Fp2Scalar{0, 1},
                                                     Fp2Scalar{-1, -1}};

// Representative of v mod 3 in {-1, 0, 1}.
int signed_trit(int v) {
    const int r = ((v % 3) + 3) % 3;
    return r == 2 ? -1 : r;
}

struct PointForms {
    OperandSpec re{};
    OperandSpec im{};
};

// Real and imaginary parts of A(p) = sum_i p^i (a_{2i} + s a_{2i+1}).
PointForms point_forms(std::size_t point) {
    PointForms f;
    if (point == 4) {
        f.re[4] = 1;
        f.im[5] = 1;
        return f;
    }
    const Fp2Scalar p = kEvaluationPoints[point];
    Fp2Scalar power = kScalarOne;
    for (std::size_t i = 0; i < 3; ++i, power = power * p) {
        f.re[2 * i] = signed_trit(power.re());
        f.re[2 * i + 1] = signed_trit(-power.im());
        f.im[2 * i] = signed_trit(power.im());
        f.im[2 * i + 1] = signed_trit(power.re());
    }
    return f;
}

OperandSpec add_forms(const OperandSpec& x, const OperandSpec& y) {
    OperandSpec out{};
    for (std::size_t i = 0; i < 6; ++i) out[i] = signed_trit(x[i] + y[i]);
    return out;
}

F97Element evaluate(const OperandSpec& spec, const Fp6Element& x) {
    F97Element sum;
    for (std::size_t i = 0; i < 6; ++i) {
        if (spec[i] == 1) sum = sum + x.flat(i);
        if (spec[i] == -1) sum = sum - x.flat(i);
    }
    return sum;
}

std::string format_form(const OperandSpec& spec, char name) {
    std::string out;
    for (std::size_t i = 0; i < 6; ++i) {
        if (spec[i] == 0) continue;
        out += spec[i] > 0 ? '+' : '-';
        out += name;
        out += std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

Schedule build_schedule() {
    Schedule schedule;
    for (std::size_t point = 0; point < 5; ++point) {
        const PointForms f = point_forms(point);
        const std::array<OperandSpec, 3> operands{f.re, add_forms(f.re, f.im), f.im};
        for (std::size_t role = 0; role < 3; ++role) {
            Job job{operands[role], operands[role], {}};
            for (std::size_t acc = 0; acc < 3; ++acc) {
                Fp2Scalar total;
                for (std::size_t k = 0; k < 5; ++k) {
                    if (kReduction[acc][k] == 0) continue;
                    total = total + kInterpolation[k][point] * kKaratsubaWeights[role];
                }
                if (!total.is_zero()) job.updates.push_back({acc, total});
            }
            schedule.jobs.push_back(std::move(job));
        }
    }
    return schedule;
}

std::string Schedule::dump() const {
    std::ostringstream out;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        const Job& job = jobs[j];
        out << "job " << j << ": (" << format_form(job.left, 'a') << ")*("
            << format_form(job.right, 'b') << ") ->";
        for (const AccumUpdate& u : job.updates) {
            out << " acc" << u.accumulator << "+=" << u.scalar.to_string();
        }
        out << '\n';
    }
    return out.str();
}

ExecutionResult execute(const Schedule& schedule, const Fp6Element& a, const Fp6Element& b,
                        MulCounter& ctr) {
    struct Operands {
        std::size_t job;
        F97Element left;
        F97Element right;
    };
    struct Product {
        std::size_t job;
        F97Element value;
    };

    ExecutionResult result;
    std::array<Fp2Element, 3> acc;
    std::optional<Operands> input_latch;
    std::optional<Product> product_latch;
    std::size_t next_job = 0;
    std::size_t slot = 0;
    // Stages run back to front so each reads the latch its predecessor wrote last slot.
    while (next_job < schedule.jobs.size() || input_latch || product_latch) {
        if (product_latch) {
            for (const AccumUpdate& u : schedule.jobs[product_latch->job].updates) {
                acc[u.accumulator] = acc[u.accumulator] + apply(u.scalar, product_latch->value);
                result.writes.push_back({slot, product_latch->job, u.accumulator});
            }
            product_latch.reset();
        }
        if (input_latch) {
            product_latch = Product{input_latch->job, ctr.mul(input_latch->left, input_latch->right)};
            input_latch.reset();
        }
        if (next_job < schedule.jobs.size()) {
            const Job& job = schedule.jobs[next_job];
            input_latch = Operands{next_job, evaluate(job.left, a), evaluate(job.right, b)};
            ++next_job;
        }
        ++slot;
    }
    result.value = Fp6Element{acc};
    result.slots = slot;
    return result;
}

ExecutionResult execute(const Schedule& schedule, const Fp6Element& a, const Fp6Element& b) {
    MulCounter ctr;
    return execute(schedule, a, b, ctr);
}

}  // namespace tritmul
