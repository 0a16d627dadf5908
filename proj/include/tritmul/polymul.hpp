#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tritmul/gf3.hpp"

namespace tritmul {

/// Polynomial over F_3; coefficient i is the x^i term. Length is storage, not degree.
class Poly {
public:
    explicit Poly(std::size_t length) : coeffs_(length) { check(); }
    explicit Poly(TritVector coeffs) : coeffs_(std::move(coeffs)) { check(); }

    static Poly from_values(std::span<const int> values) {
        return Poly(TritVector::from_values(values));
    }

    std::size_t size() const { return coeffs_.size(); }
    const TritVector& coeffs() const { return coeffs_; }
    int operator[](std::size_t i) const { return coeffs_.value(i); }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void check() const {
        if (coeffs_.empty()) throw std::invalid_argument("Poly must have length >= 1");
    }
    TritVector coeffs_;
};

/// Classical O(n^2) product; the reference for every other multiplier.
Poly schoolbook_mul(const Poly& a, const Poly& b);

/// One factor of a recursive method: Karatsuba (splits in 2) or classical C_n.
struct MethodFactor {
    enum class Kind { Karatsuba, Classical };
    Kind kind;
    std::size_t n;  // 2 for Karatsuba

    friend bool operator==(const MethodFactor&, const MethodFactor&) = default;
};

class MethodParseError : public std::invalid_argument {
public:
    MethodParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Recursive multiplication method such as "KKC4". Factors are stored
/// outer-to-inner: the leftmost token is the outermost split.
class MethodExpr {
public:
    explicit MethodExpr(std::vector<MethodFactor> factors);

    /// Tokens 'K' and 'C<digits>', concatenated. Throws MethodParseError.
    static MethodExpr parse(std::string_view text);

    const std::vector<MethodFactor>& factors() const { return factors_; }
    std::size_t operand_length() const { return operand_length_; }
    std::string to_string() const;

    friend bool operator==(const MethodExpr&, const MethodExpr&) = default;

private:
    std::vector<MethodFactor> factors_;
    std::size_t operand_length_;
};

/// Product via the method's recursive splitting. Both operands must have
/// length method.operand_length().
Poly recursive_mul(const MethodExpr& method, const Poly& a, const Poly& b);

enum class GateOp : std::uint8_t { Zero, Add, Sub, Neg, Mul };

/// Reference to a circuit value: input coefficient a_i, b_i, or an earlier gate.
struct Wire {
    enum class Source : std::uint8_t { InputA, InputB, Gate };
    Source source;
    std::uint32_t index;

    friend bool operator==(const Wire&, const Wire&) = default;
};

struct Gate {
    GateOp op;
    Wire lhs{Wire::Source::Gate, 0};  // unused for Zero
    Wire rhs{Wire::Source::Gate, 0};  // unused for Zero and Neg
};

struct CostReport {
    std::size_t mul_gates = 0;
    std::size_t add_gates = 0;  // ADD + SUB
    std::size_t depth = 0;

    friend bool operator==(const CostReport&, const CostReport&) = default;
};

/// Gate DAG multiplying two polynomials of length input_length(). Gates are
/// topologically ordered; outputs()[k] is the x^k coefficient of the product.
class Circuit {
public:
    Circuit(std::size_t input_length, std::vector<Gate> gates, std::vector<Wire> outputs);

    std::size_t input_length() const { return input_length_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<Wire>& outputs() const { return outputs_; }

    /// One line per gate, `g<k> = <op> <operand> <operand>`, then one line per output.
    std::string dump() const;

private:
    std::size_t input_length_;
    std::vector<Gate> gates_;
    std::vector<Wire> outputs_;
};

/// Circuit for `method` with every gate kept. Inputs cover the full operand length.
Circuit build_unpruned_circuit(const MethodExpr& method);

/// Circuit for operands of length actual_length <= method.operand_length().
/// Missing high coefficients are bound to zero and constant-propagated away.
Circuit build_circuit(const MethodExpr& method, std::size_t actual_length);

Poly eval_circuit(const Circuit& c, const Poly& a, const Poly& b);

/// NEG gates are free (a bit swap) and do not add depth.
CostReport cost(const Circuit& c);

}  // namespace tritmul
