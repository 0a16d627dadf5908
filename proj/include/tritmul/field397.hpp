#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>

#include "tritmul/gf3.hpp"
#include "tritmul/polymul.hpp"

namespace tritmul {

/// Element of F_{3^97} = F_3[x]/(x^97 + x^16 + 2) in polynomial basis.
class F97Element {
public:
    static constexpr std::size_t kDegree = 97;
    /// Longest polynomial reduce() accepts: the product of two degree-96 operands.
    static constexpr std::size_t kMaxReduceLength = 2 * kDegree - 1;

    F97Element() : coeffs_(kDegree) {}
    /// Throws std::invalid_argument unless coeffs.size() == 97.
    explicit F97Element(TritVector coeffs);

    static F97Element zero() { return {}; }
    static F97Element one();
    /// x^k for k < 97.
    static F97Element monomial(std::size_t k);
    static F97Element random(std::mt19937_64& rng);
    /// 97 digits, most-significant first.
    static F97Element parse(std::string_view text);

    std::string to_string() const { return coeffs_.to_string(); }
    const TritVector& coeffs() const { return coeffs_; }
    Poly to_poly() const { return Poly(coeffs_); }
    bool is_zero() const { return coeffs_.is_zero(); }

    friend bool operator==(const F97Element&, const F97Element&) = default;

private:
    TritVector coeffs_;
};

/// p mod f(x), folding x^97 = 2x^16 + 1 from the top coefficient down.
/// Throws std::length_error if p is longer than 193 coefficients.
F97Element reduce(const Poly& p);

/// Reference multiplication: schoolbook product, then reduce.
F97Element mul(const F97Element& a, const F97Element& b);

F97Element operator+(const F97Element& a, const F97Element& b);
F97Element operator-(const F97Element& a, const F97Element& b);
F97Element operator-(const F97Element& a);
inline F97Element add(const F97Element& a, const F97Element& b) { return a + b; }
inline F97Element sub(const F97Element& a, const F97Element& b) { return a - b; }
inline F97Element neg(const F97Element& a) { return -a; }

}  // namespace tritmul
