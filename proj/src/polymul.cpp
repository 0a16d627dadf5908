#include "tritmul/polymul.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace tritmul {

namespace {

const Trit kOne = Trit::from_value(1);

void check_operand(const Poly& p, std::size_t expected, const char* name) {
    if (p.size() != expected) {
        throw std::invalid_argument(std::string("operand ") + name + " has length " +
                                    std::to_string(p.size()) + ", expected " +
                                    std::to_string(expected));
    }
}

// Polynomial-level recursion: operands have length equal to the product of
// the remaining factors; the result has length 2L - 1.
TritVector multiply_recursive(std::span<const MethodFactor> factors, const TritVector& a,
                              const TritVector& b) {
    const std::size_t len = a.size();
    TritVector out(2 * len - 1);
    if (factors.empty()) {
        out.set(0, trit_mul(a.get(0), b.get(0)));
        return out;
    }
    const MethodFactor& f = factors.front();
    const auto inner = factors.subspan(1);
    const std::size_t block = len / f.n;
    if (f.kind == MethodFactor::Kind::Karatsuba) {
        const TritVector a0 = a.slice(0, block), a1 = a.slice(block, block);
        const TritVector b0 = b.slice(0, block), b1 = b.slice(block, block);
        const TritVector low = multiply_recursive(inner, a0, b0);
        const TritVector high = multiply_recursive(inner, a1, b1);
        const TritVector cross = multiply_recursive(inner, a0 + a1, b0 + b1);
        out.accumulate(low, 0, kOne);
        out.accumulate(cross - low - high, block, kOne);
        out.accumulate(high, 2 * block, kOne);
        return out;
    }
    std::vector<TritVector> a_blocks, b_blocks;
    for (std::size_t i = 0; i < f.n; ++i) {
        a_blocks.push_back(a.slice(i * block, block));
        b_blocks.push_back(b.slice(i * block, block));
    }
    for (std::size_t i = 0; i < f.n; ++i) {
        for (std::size_t j = 0; j < f.n; ++j) {
            out.accumulate(multiply_recursive(inner, a_blocks[i], b_blocks[j]), (i + j) * block,
                           kOne);
        }
    }
    return out;
}

class CircuitBuilder {
public:
    Wire zero() {
        if (!zero_) zero_ = emit({GateOp::Zero});
        return *zero_;
    }
    Wire add(Wire x, Wire y) { return emit({GateOp::Add, x, y}); }
    Wire sub(Wire x, Wire y) { return emit({GateOp::Sub, x, y}); }
    Wire mul(Wire x, Wire y) { return emit({GateOp::Mul, x, y}); }

    std::vector<Wire> multiply(std::span<const MethodFactor> factors, std::span<const Wire> a,
                               std::span<const Wire> b) {
        const std::size_t len = a.size();
        if (factors.empty()) return {mul(a[0], b[0])};
        const MethodFactor& f = factors.front();
        const auto inner = factors.subspan(1);
        const std::size_t block = len / f.n;
        std::vector<std::optional<Wire>> slots(2 * len - 1);
        auto place = [&](const std::vector<Wire>& part, std::size_t offset) {
            for (std::size_t k = 0; k < part.size(); ++k) {
                auto& slot = slots[offset + k];
                slot = slot ? add(*slot, part[k]) : part[k];
            }
        };
        if (f.kind == MethodFactor::Kind::Karatsuba) {
            const auto a0 = a.first(block), a1 = a.subspan(block);
            const auto b0 = b.first(block), b1 = b.subspan(block);
            std::vector<Wire> a_sum, b_sum;
            for (std::size_t i = 0; i < block; ++i) a_sum.push_back(add(a0[i], a1[i]));
            for (std::size_t i = 0; i < block; ++i) b_sum.push_back(add(b0[i], b1[i]));
            const auto low = multiply(inner, a0, b0);
            const auto high = multiply(inner, a1, b1);
            const auto cross = multiply(inner, a_sum, b_sum);
            std::vector<Wire> middle;
            for (std::size_t k = 0; k < cross.size(); ++k) {
                middle.push_back(sub(sub(cross[k], low[k]), high[k]));
            }
            place(low, 0);
            place(middle, block);
            place(high, 2 * block);
        } else {
            for (std::size_t i = 0; i < f.n; ++i) {
                for (std::size_t j = 0; j < f.n; ++j) {
                    place(multiply(inner, a.subspan(i * block, block), b.subspan(j * block, block)),
                          (i + j) * block);
                }
            }
        }
        std::vector<Wire> out;
        out.reserve(slots.size());
        for (const auto& s : slots) out.push_back(*s);
        return out;
    }

    std::vector<Gate> take_gates() { return std::move(gates_); }

private:
    Wire emit(Gate g) {
        gates_.push_back(g);
        return {Wire::Source::Gate, static_cast<std::uint32_t>(gates_.size() - 1)};
    }

    std::vector<Gate> gates_;
    std::optional<Wire> zero_;
};

Circuit build_with_inputs(const MethodExpr& method, std::size_t actual_length) {
    const std::size_t len = method.operand_length();
    CircuitBuilder builder;
    std::vector<Wire> a, b;
    for (std::size_t i = 0; i < len; ++i) {
        if (i < actual_length) {
            a.push_back({Wire::Source::InputA, static_cast<std::uint32_t>(i)});
            b.push_back({Wire::Source::InputB, static_cast<std::uint32_t>(i)});
        } else {
            a.push_back(builder.zero());
            b.push_back(builder.zero());
        }
    }
    auto outputs = builder.multiply(method.factors(), a, b);
    return Circuit(actual_length, builder.take_gates(), std::move(outputs));
}

// One forward constant-propagation pass plus dead-gate removal. Known-zero
// values are represented by an empty optional.
Circuit propagate_constants(const Circuit& c, std::size_t output_count) {
    std::vector<Gate> gates;
    std::vector<std::optional<Wire>> resolved(c.gates().size());
    auto look = [&](Wire w) -> std::optional<Wire> {
        return w.source == Wire::Source::Gate ? resolved[w.index] : std::optional<Wire>(w);
    };
    auto emit = [&](Gate g) {
        gates.push_back(g);
        return Wire{Wire::Source::Gate, static_cast<std::uint32_t>(gates.size() - 1)};
    };
    for (std::size_t k = 0; k < c.gates().size(); ++k) {
        const Gate& g = c.gates()[k];
        std::optional<Wire> r;
        switch (g.op) {
            case GateOp::Zero:
                break;
            case GateOp::Add: {
                const auto x = look(g.lhs), y = look(g.rhs);
                if (!x) r = y;
                else if (!y) r = x;
                else r = emit({GateOp::Add, *x, *y});
                break;
            }
            case GateOp::Sub: {
                const auto x = look(g.lhs), y = look(g.rhs);
                if (!y) r = x;
                else if (!x) r = emit({GateOp::Neg, *y});
                else r = emit({GateOp::Sub, *x, *y});
                break;
            }
            case GateOp::Neg: {
                const auto x = look(g.lhs);
                if (x) r = emit({GateOp::Neg, *x});
                break;
            }
            case GateOp::Mul: {
                const auto x = look(g.lhs), y = look(g.rhs);
                if (x && y) r = emit({GateOp::Mul, *x, *y});
                break;
            }
        }
        resolved[k] = r;
    }
    std::vector<std::optional<Wire>> outs;
    for (std::size_t k = 0; k < output_count; ++k) outs.push_back(look(c.outputs()[k]));

    // Keep only gates reachable from the outputs.
    std::vector<bool> live(gates.size(), false);
    for (const auto& o : outs) {
        if (o && o->source == Wire::Source::Gate) live[o->index] = true;
    }
    for (std::size_t k = gates.size(); k-- > 0;) {
        if (!live[k]) continue;
        const Gate& g = gates[k];
        if (g.op == GateOp::Zero) continue;
        if (g.lhs.source == Wire::Source::Gate) live[g.lhs.index] = true;
        if (g.op != GateOp::Neg && g.rhs.source == Wire::Source::Gate) live[g.rhs.index] = true;
    }
    std::vector<std::uint32_t> remap(gates.size(), 0);
    std::vector<Gate> kept;
    auto fix = [&](Wire w) {
        if (w.source == Wire::Source::Gate) w.index = remap[w.index];
        return w;
    };
    for (std::size_t k = 0; k < gates.size(); ++k) {
        if (!live[k]) continue;
        Gate g = gates[k];
        if (g.op != GateOp::Zero) {
            g.lhs = fix(g.lhs);
            if (g.op != GateOp::Neg) g.rhs = fix(g.rhs);
        }
        remap[k] = static_cast<std::uint32_t>(kept.size());
        kept.push_back(g);
    }
    std::vector<Wire> outputs;
    std::optional<Wire> zero;
    for (const auto& o : outs) {
        if (o) {
            outputs.push_back(fix(*o));
            continue;
        }
        if (!zero) {
            kept.push_back({GateOp::Zero});
            zero = Wire{Wire::Source::Gate, static_cast<std::uint32_t>(kept.size() - 1)};
        }
        outputs.push_back(*zero);
    }
    return Circuit(c.input_length(), std::move(kept), std::move(outputs));
}

std::string wire_name(Wire w) {
    switch (w.source) {
        case Wire::Source::InputA: return "a" + std::to_string(w.index);
        case Wire::Source::InputB: return "b" + std::to_string(w.index);
        case Wire::Source::Gate: break;
    }
    return "g" + std::to_string(w.index);
}

const char* op_name(GateOp op) {
    switch (op) {
        case GateOp::Zero: return "ZERO";
        case GateOp::Add: return "ADD";
        case GateOp::Sub: return "SUB";
        case GateOp::Neg: return "NEG";
        case GateOp::Mul: return "MUL";
    }
    return "?";
}

}  // namespace

Poly schoolbook_mul(const Poly& a, const Poly& b) {
    TritVector out(a.size() + b.size() - 1);
    for (std::size_t j = 0; j < b.size(); ++j) {
        out.accumulate(a.coeffs(), j, b.coeffs().get(j));
    }
    return Poly(std::move(out));
}

MethodExpr::MethodExpr(std::vector<MethodFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("method needs at least one factor");
    operand_length_ = 1;
    for (const auto& f : factors_) {
        if (f.kind == MethodFactor::Kind::Karatsuba && f.n != 2) {
            throw std::invalid_argument("Karatsuba factor must split in 2");
        }
        if (f.n < 1) throw std::invalid_argument("classical factor needs n >= 1");
        operand_length_ *= f.n;
    }
}

MethodExpr MethodExpr::parse(std::string_view text) {
    if (text.empty()) throw MethodParseError("empty method", 0);
    std::vector<MethodFactor> factors;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == 'K') {
            factors.push_back({MethodFactor::Kind::Karatsuba, 2});
            ++pos;
            continue;
        }
        if (c != 'C') throw MethodParseError(std::string("unexpected '") + c + "'", pos);
        const std::size_t start = ++pos;
        std::size_t n = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            n = n * 10 + static_cast<std::size_t>(text[pos] - '0');
            if (n > 4096) throw MethodParseError("classical size too large", start);
            ++pos;
        }
        if (pos == start) throw MethodParseError("'C' must be followed by digits", start);
        if (n == 0) throw MethodParseError("classical size must be >= 1", start);
        factors.push_back({MethodFactor::Kind::Classical, n});
    }
    return MethodExpr(std::move(factors));
}

std::string MethodExpr::to_string() const {
    std::string out;
    for (const auto& f : factors_) {
        out += f.kind == MethodFactor::Kind::Karatsuba ? std::string("K")
                                                       : "C" + std::to_string(f.n);
    }
    return out;
}

Poly recursive_mul(const MethodExpr& method, const Poly& a, const Poly& b) {
    check_operand(a, method.operand_length(), "a");
    check_operand(b, method.operand_length(), "b");
    return Poly(multiply_recursive(method.factors(), a.coeffs(), b.coeffs()));
}

Circuit::Circuit(std::size_t input_length, std::vector<Gate> gates, std::vector<Wire> outputs)
    : input_length_(input_length), gates_(std::move(gates)), outputs_(std::move(outputs)) {
    auto check = [&](Wire w, std::size_t gate_index) {
        const bool ok = w.source == Wire::Source::Gate ? w.index < gate_index
                                                       : w.index < input_length_;
        if (!ok) throw std::invalid_argument("circuit wire is not topologically ordered");
    };
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        const Gate& g = gates_[k];
        if (g.op == GateOp::Zero) continue;
        check(g.lhs, k);
        if (g.op != GateOp::Neg) check(g.rhs, k);
    }
    for (const Wire& w : outputs_) check(w, gates_.size());
}

std::string Circuit::dump() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        const Gate& g = gates_[k];
        out << 'g' << k << " = " << op_name(g.op);
        if (g.op != GateOp::Zero) out << ' ' << wire_name(g.lhs);
        if (g.op != GateOp::Zero && g.op != GateOp::Neg) out << ' ' << wire_name(g.rhs);
        out << '\n';
    }
    for (std::size_t k = 0; k < outputs_.size(); ++k) {
        out << 'c' << k << " = " << wire_name(outputs_[k]) << '\n';
    }
    return out.str();
}

Circuit build_unpruned_circuit(const MethodExpr& method) {
    return build_with_inputs(method, method.operand_length());
}

Circuit build_circuit(const MethodExpr& method, std::size_t actual_length) {
    if (actual_length == 0) throw std::invalid_argument("circuit length must be >= 1");
    if (actual_length > method.operand_length()) {
        throw std::invalid_argument("length " + std::to_string(actual_length) +
                                    " exceeds operand length of " + method.to_string());
    }
    Circuit c = build_with_inputs(method, actual_length);
    const std::size_t outputs = 2 * actual_length - 1;
    // Iterate to a fixed point on the gate count.
    while (true) {
        Circuit next = propagate_constants(c, outputs);
        const bool settled = next.gates().size() == c.gates().size() &&
                             next.outputs().size() == c.outputs().size();
        c = std::move(next);
        if (settled) return c;
    }
}

Poly eval_circuit(const Circuit& c, const Poly& a, const Poly& b) {
    check_operand(a, c.input_length(), "a");
    check_operand(b, c.input_length(), "b");
    std::vector<Trit> values(c.gates().size());
    auto read = [&](Wire w) {
        switch (w.source) {
            case Wire::Source::InputA: return a.coeffs().get(w.index);
            case Wire::Source::InputB: return b.coeffs().get(w.index);
            case Wire::Source::Gate: break;
        }
        return values[w.index];
    };
    for (std::size_t k = 0; k < c.gates().size(); ++k) {
        const Gate& g = c.gates()[k];
        switch (g.op) {
            case GateOp::Zero: values[k] = Trit{}; break;
            case GateOp::Add: values[k] = trit_add(read(g.lhs), read(g.rhs)); break;
            case GateOp::Sub: values[k] = trit_sub(read(g.lhs), read(g.rhs)); break;
            case GateOp::Neg: values[k] = trit_neg(read(g.lhs)); break;
            case GateOp::Mul: values[k] = trit_mul(read(g.lhs), read(g.rhs)); break;
        }
    }
    TritVector out(c.outputs().size());
    for (std::size_t k = 0; k < c.outputs().size(); ++k) out.set(k, read(c.outputs()[k]));
    return Poly(std::move(out));
}

CostReport cost(const Circuit& c) {
    CostReport report;
    std::vector<std::size_t> depth(c.gates().size(), 0);
    auto depth_of = [&](Wire w) -> std::size_t {
        return w.source == Wire::Source::Gate ? depth[w.index] : 0;
    };
    for (std::size_t k = 0; k < c.gates().size(); ++k) {
        const Gate& g = c.gates()[k];
        switch (g.op) {
            case GateOp::Zero: break;
            case GateOp::Neg: depth[k] = depth_of(g.lhs); break;
            case GateOp::Mul:
                ++report.mul_gates;
                depth[k] = std::max(depth_of(g.lhs), depth_of(g.rhs)) + 1;
                break;
            case GateOp::Add:
            case GateOp::Sub:
                ++report.add_gates;
                depth[k] = std::max(depth_of(g.lhs), depth_of(g.rhs)) + 1;
                break;
        }
    }
    for (const Wire& w : c.outputs()) report.depth = std::max(report.depth, depth_of(w));
    return report;
}

}  // namespace tritmul
