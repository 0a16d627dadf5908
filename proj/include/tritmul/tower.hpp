#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tritmul/field397.hpp"

namespace tritmul {

/// Counts F_{3^97} multiplications. Owned by one caller; reset between operations.
class MulCounter {
public:
    F97Element mul(const F97Element& a, const F97Element& b) {
        ++base_muls_;
        return tritmul::mul(a, b);
    }
    std::uint64_t base_muls() const { return base_muls_; }
    void reset() { base_muls_ = 0; }

private:
    std::uint64_t base_muls_ = 0;
};

/// c0 + c1*s with s^2 = -1.
struct Fp2Element {
    F97Element c0;
    F97Element c1;

    static Fp2Element zero() { return {}; }
    static Fp2Element one() { return {F97Element::one(), F97Element::zero()}; }
    static Fp2Element s() { return {F97Element::zero(), F97Element::one()}; }
    static Fp2Element random(std::mt19937_64& rng);
    /// "c0:c1", each part a canonical F97 string.
    static Fp2Element parse(std::string_view text);
    std::string to_string() const;

    bool is_real() const { return c1.is_zero(); }

    friend bool operator==(const Fp2Element&, const Fp2Element&) = default;
};

Fp2Element operator+(const Fp2Element& a, const Fp2Element& b);
Fp2Element operator-(const Fp2Element& a, const Fp2Element& b);
Fp2Element operator-(const Fp2Element& a);

/// Image under s -> -s.
inline Fp2Element conjugate(const Fp2Element& a) { return {a.c0, -a.c1}; }

/// An element x + y*s of F_3[s] (x, y in {0,1,2}). These are the scalars the
/// tower formulas multiply by; applying one costs no base multiplications.
class Fp2Scalar {
public:
    constexpr Fp2Scalar() = default;
    constexpr Fp2Scalar(int re, int im) : re_(mod3(re)), im_(mod3(im)) {}

    constexpr int re() const { return re_; }
    constexpr int im() const { return im_; }
    constexpr bool is_zero() const { return re_ == 0 && im_ == 0; }

    friend constexpr Fp2Scalar operator+(Fp2Scalar a, Fp2Scalar b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend constexpr Fp2Scalar operator-(Fp2Scalar a) { return {-a.re_, -a.im_}; }
    friend constexpr Fp2Scalar operator-(Fp2Scalar a, Fp2Scalar b) { return a + (-b); }
    friend constexpr Fp2Scalar operator*(Fp2Scalar a, Fp2Scalar b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend constexpr bool operator==(Fp2Scalar, Fp2Scalar) = default;

    /// "1", "-s", "s+1", "-(s-1)", ...
    std::string to_string() const;

private:
    static constexpr int mod3(int v) { return ((v % 3) + 3) % 3; }
    int re_ = 0;
    int im_ = 0;
};

inline constexpr Fp2Scalar kScalarOne{1, 0};
inline constexpr Fp2Scalar kScalarS{0, 1};

/// s * (a0 + a1 s) = -a1 + a0 s.
Fp2Element fp2_mul_by_s(const Fp2Element& a);
Fp2Element apply(Fp2Scalar k, const Fp2Element& a);
Fp2Element apply(Fp2Scalar k, const F97Element& a);

/// The three base products of a Karatsuba quadratic-extension product, in the
/// order u0*v0, (u0+u1)*(v0+v1), u1*v1.
std::array<F97Element, 3> karatsuba_products(const Fp2Element& u, const Fp2Element& v,
                                             MulCounter& ctr);
/// (m0 - m2) + s*(m1 - m0 - m2) for m = karatsuba_products(...).
Fp2Element karatsuba_combine(const std::array<F97Element, 3>& m);

/// 3 counted base multiplications.
Fp2Element fp2_mul(const Fp2Element& a, const Fp2Element& b, MulCounter& ctr);
/// 4 counted base multiplications; reference for fp2_mul.
Fp2Element fp2_mul_schoolbook(const Fp2Element& a, const Fp2Element& b, MulCounter& ctr);

/// A0 + A1 r + A2 r^2 with r^3 = r + 1. The flat view is
/// a0 + a1 s + a2 r + a3 rs + a4 r^2 + a5 r^2 s, a_{2i} = Ai.c0, a_{2i+1} = Ai.c1.
struct Fp6Element {
    std::array<Fp2Element, 3> coeffs;

    static Fp6Element zero() { return {}; }
    static Fp6Element one() { return {{Fp2Element::one(), Fp2Element::zero(), Fp2Element::zero()}}; }
    static Fp6Element from_flat(const std::array<F97Element, 6>& flat);
    static Fp6Element random(std::mt19937_64& rng);
    /// Six canonical F97 strings joined by ':' in order a0..a5.
    static Fp6Element parse(std::string_view text);

    std::array<F97Element, 6> flat() const;
    const F97Element& flat(std::size_t i) const;
    std::string to_string() const;

    friend bool operator==(const Fp6Element&, const Fp6Element&) = default;
};

Fp6Element operator+(const Fp6Element& a, const Fp6Element& b);

/// c0 + c1 r + ... + c4 r^4 reduced with r^3 = r + 1 and r^4 = r^2 + r.
Fp6Element reduce_quartic(const std::array<Fp2Element, 5>& c);

/// Nested schoolbook: 9 fp2_mul, 27 counted base multiplications.
Fp6Element fp6_mul_schoolbook(const Fp6Element& a, const Fp6Element& b, MulCounter& ctr);
Fp6Element fp6_mul_schoolbook(const Fp6Element& a, const Fp6Element& b);
/// Flat schoolbook over the six-element basis: 36 counted base multiplications.
Fp6Element fp6_mul_schoolbook_flat(const Fp6Element& a, const Fp6Element& b, MulCounter& ctr);
/// Three-term Karatsuba over r with Karatsuba Fp2 products: 18 base multiplications.
Fp6Element fp6_mul_18(const Fp6Element& a, const Fp6Element& b, MulCounter& ctr);

/// Evaluation points 1, s, -1, -s; the fifth point is infinity (leading coefficient).
inline constexpr std::array<Fp2Scalar, 4> kEvaluationPoints{
    Fp2Scalar{1, 0}, Fp2Scalar{0, 1}, Fp2Scalar{-1, 0}, Fp2Scalar{0, -1}};

/// Row k gives c_k as a combination of the point products Q_1, Q_s, Q_-1, Q_-s, Q_inf.
inline constexpr std::array<std::array<Fp2Scalar, 5>, 5> kInterpolation{{
    {Fp2Scalar{1, 0}, Fp2Scalar{1, 0}, Fp2Scalar{1, 0}, Fp2Scalar{1, 0}, Fp2Scalar{-1, 0}},
    {Fp2Scalar{1, 0}, Fp2Scalar{0, -1}, Fp2Scalar{-1, 0}, Fp2Scalar{0, 1}, Fp2Scalar{0, 0}},
    {Fp2Scalar{1, 0}, Fp2Scalar{-1, 0}, Fp2Scalar{1, 0}, Fp2Scalar{-1, 0}, Fp2Scalar{0, 0}},
    {Fp2Scalar{1, 0}, Fp2Scalar{0, 1}, Fp2Scalar{-1, 0}, Fp2Scalar{0, -1}, Fp2Scalar{0, 0}},
    {Fp2Scalar{0, 0}, Fp2Scalar{0, 0}, Fp2Scalar{0, 0}, Fp2Scalar{0, 0}, Fp2Scalar{1, 0}},
}};

/// A(p) for p in 1, s, -1, -s, then the leading coefficient A2.
std::array<Fp2Element, 5> evaluate_at_points(const std::array<Fp2Element, 3>& poly);
/// Degree-4 coefficients from the five point products.
std::array<Fp2Element, 5> interpolate(const std::array<Fp2Element, 5>& point_products);

struct Interpolation {
    std::array<Fp2Element, 5> point_products;  // Q_1, Q_s, Q_-1, Q_-s, Q_inf
    std::array<Fp2Element, 5> coeffs;          // c_0..c_4 before reduction
};

struct ProductTrace {
    /// P_0..P_14. Real products have a zero s-component.
    std::array<Fp2Element, 15> products;
    std::optional<Interpolation> interpolation;
};

struct Fp6Product {
    Fp6Element value;
    ProductTrace trace;
};

/// Five-point evaluation/interpolation over r with one Karatsuba fp2_mul per
/// point: exactly 15 counted base multiplications. products[3k..3k+2] are the
/// Karatsuba products of point k.
Fp6Product fp6_mul_15(const Fp6Element& a, const Fp6Element& b, MulCounter& ctr);

/// Operand forms of the closed-form product list: product j multiplies
/// (sum re[i] a_i) + s (sum im[i] a_i) by the same form in b.
struct LinearForm {
    std::array<int, 6> re;
    std::array<int, 6> im;
};
extern const std::array<LinearForm, 15> kAppendixOperands;
/// Row i gives flat output coefficient c_i as sum_j k_ij * P_j.
extern const std::array<std::array<Fp2Scalar, 15>, 6> kAppendixCombination;

/// Raised when a closed-form combination leaves a nonzero s-component.
class FormulaDiscrepancy : public std::runtime_error {
public:
    FormulaDiscrepancy(std::size_t index, F97Element residual);
    std::size_t index() const { return index_; }
    const F97Element& residual() const { return residual_; }

private:
    std::size_t index_;
    F97Element residual_;
};

/// Closed-form product list evaluated literally; six of the fifteen products
/// have quadratic-extension operands and go through fp2_mul.
Fp6Product fp6_mul_appendix(const Fp6Element& a, const Fp6Element& b, MulCounter& ctr);
Fp6Product fp6_mul_appendix(const Fp6Element& a, const Fp6Element& b);

/// Same product list with a caller-supplied combination table. Throws
/// FormulaDiscrepancy if an output coefficient keeps an s-component.
Fp6Product fp6_mul_closed_form(const Fp6Element& a, const Fp6Element& b,
                               const std::array<std::array<Fp2Scalar, 15>, 6>& combination,
                               MulCounter& ctr);

/// P9, P10, P11 are the conjugates of P3, P4, P5.
bool conjugate_check(const ProductTrace& trace);

}  // namespace tritmul
