#include <random>

#include "doctest.h"
#include "support/naive.hpp"
#include "tritmul/tower.hpp"

using namespace tritmul;

namespace {

F97Element constant(int v) {
    TritVector t(97);
    t.set(0, v);
    return F97Element(t);
}

Fp6Element basis(std::size_t i) {
    std::array<F97Element, 6> flat;
    flat[i] = F97Element::one();
    return Fp6Element::from_flat(flat);
}

// Degree-4 product of two quadratics over F_{3^(2*97)}, before reduction.
std::array<Fp2Element, 5> convolve(const std::array<Fp2Element, 3>& x,
                                   const std::array<Fp2Element, 3>& y) {
    MulCounter ctr;
    std::array<Fp2Element, 5> c;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) c[i + j] = c[i + j] + fp2_mul_schoolbook(x[i], y[j], ctr);
    }
    return c;
}

}  // namespace

TEST_CASE("Fp2 multiplication") {
    MulCounter ctr;
    CHECK(fp2_mul(Fp2Element::s(), Fp2Element::s(), ctr) == -Fp2Element::one());
    CHECK(ctr.base_muls() == 3);

    std::mt19937_64 rng(1);
    const auto a = Fp2Element::random(rng);
    ctr.reset();
    CHECK(fp2_mul(a, Fp2Element::one(), ctr) == a);
    CHECK(ctr.base_muls() == 3);

    for (int rep = 0; rep < 200; ++rep) {
        const auto x = Fp2Element::random(rng), y = Fp2Element::random(rng);
        MulCounter k, s;
        CHECK(fp2_mul(x, y, k) == fp2_mul_schoolbook(x, y, s));
        CHECK(k.base_muls() == 3);
        CHECK(s.base_muls() == 4);
    }
}

TEST_CASE("multiplication by s is free") {
    const auto s1 = fp2_mul_by_s(Fp2Element::one());
    CHECK(s1 == Fp2Element::s());
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 100; ++rep) {
        const auto a = Fp2Element::random(rng);
        CHECK(fp2_mul_by_s(fp2_mul_by_s(a)) == -a);
        CHECK(fp2_mul_by_s(fp2_mul_by_s(fp2_mul_by_s(fp2_mul_by_s(a)))) == a);
        MulCounter ctr;
        CHECK(fp2_mul_by_s(a) == fp2_mul(a, Fp2Element::s(), ctr));
        CHECK(ctr.base_muls() == 3);
    }
}

TEST_CASE("Fp2 scalars") {
    // every scalar agrees with multiplying by the corresponding Fp2 element
    std::mt19937_64 rng(3);
    const auto a = Fp2Element::random(rng);
    for (int re = 0; re < 3; ++re) {
        for (int im = 0; im < 3; ++im) {
            const Fp2Scalar k(re, im);
            MulCounter ctr;
            const Fp2Element as_element{constant(re), constant(im)};
            CHECK(apply(k, a) == fp2_mul(a, as_element, ctr));
            CHECK(apply(k, a.c0) == apply(k, Fp2Element{a.c0, F97Element::zero()}));
        }
    }
    CHECK(kScalarS * kScalarS == Fp2Scalar(-1, 0));
    CHECK(Fp2Scalar(1, 1).to_string() == "s+1");
    CHECK(Fp2Scalar(-1, 1).to_string() == "s-1");
    CHECK(Fp2Scalar(-1, -1).to_string() == "-(s+1)");
    CHECK(Fp2Scalar(0, -1).to_string() == "-s");
}

TEST_CASE("tower reduction identities") {
    const Fp6Element r = basis(2), r2 = basis(4);
    CHECK(fp6_mul_schoolbook(r, r2) == Fp6Element::one() + r);
    CHECK(fp6_mul_schoolbook(r2, r2) == r + r2);
    // r^3 - r - 1 = 0 and r^4 = r^2 + r via the flat route too
    MulCounter ctr;
    CHECK(fp6_mul_schoolbook_flat(r, r2, ctr) == Fp6Element::one() + r);
    std::mt19937_64 rng(4);
    const auto a = Fp6Element::random(rng);
    CHECK(fp6_mul_schoolbook(a, Fp6Element::one()) == a);
}

TEST_CASE("flat and nested views") {
    std::mt19937_64 rng(5);
    const auto a = Fp6Element::random(rng);
    CHECK(Fp6Element::from_flat(a.flat()) == a);
    CHECK(a.flat(3) == a.coeffs[1].c1);
    CHECK(Fp6Element::parse(a.to_string()) == a);
    CHECK_THROWS_AS(Fp6Element::parse("0:1"), std::invalid_argument);
}

TEST_CASE("all Fp6 routes agree with the integer oracle") {
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 30; ++rep) {
        const auto a = Fp6Element::random(rng), b = Fp6Element::random(rng);
        const auto expected = naive::fp6_mul(naive::flat(a), naive::flat(b));
        MulCounter c1, c2, c3, c4;
        CHECK(naive::flat(fp6_mul_schoolbook(a, b, c1)) == expected);
        CHECK(naive::flat(fp6_mul_schoolbook_flat(a, b, c2)) == expected);
        CHECK(naive::flat(fp6_mul_18(a, b, c3)) == expected);
        CHECK(naive::flat(fp6_mul_15(a, b, c4).value) == expected);
        CHECK(naive::flat(fp6_mul_appendix(a, b).value) == expected);
    }
}

TEST_CASE("counts are exact and data independent") {
    std::mt19937_64 rng(7);
    const Fp6Element zero = Fp6Element::zero(), one = Fp6Element::one();
    const auto x = Fp6Element::random(rng);
    for (const auto* a : {&zero, &one, &x}) {
        MulCounter c27, c36, c18, c15;
        fp6_mul_schoolbook(*a, x, c27);
        fp6_mul_schoolbook_flat(*a, x, c36);
        const auto r18 = fp6_mul_18(*a, zero, c18);
        fp6_mul_15(*a, x, c15);
        CHECK(c27.base_muls() == 27);
        CHECK(c36.base_muls() == 36);
        CHECK(c18.base_muls() == 18);
        CHECK(c15.base_muls() == 15);
        CHECK(r18 == zero);
    }
}

TEST_CASE("15-multiplication trace") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 50; ++rep) {
        const auto a = Fp6Element::random(rng), b = Fp6Element::random(rng);
        MulCounter ctr;
        const Fp6Product p = fp6_mul_15(a, b, ctr);
        REQUIRE(p.trace.interpolation.has_value());
        const auto& interp = *p.trace.interpolation;
        MulCounter scratch;
        CHECK(interp.coeffs[4] == fp2_mul(a.coeffs[2], b.coeffs[2], scratch));
        CHECK(interp.coeffs == convolve(a.coeffs, b.coeffs));
        for (const auto& prod : p.trace.products) CHECK(prod.is_real());
        // the real evaluation points share their products with the closed form
        const Fp6Product closed = fp6_mul_appendix(a, b);
        for (std::size_t j : {0u, 1u, 2u, 6u, 7u, 8u, 12u, 13u, 14u}) {
            CHECK(p.trace.products[j] == closed.trace.products[j]);
        }
    }
}

TEST_CASE("evaluation at 1, s, -1, -s, infinity then interpolation") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 200; ++rep) {
        std::array<Fp2Element, 3> x, y;
        for (auto& v : x) v = Fp2Element::random(rng);
        for (auto& v : y) v = Fp2Element::random(rng);
        const auto ex = evaluate_at_points(x), ey = evaluate_at_points(y);
        MulCounter ctr;
        std::array<Fp2Element, 5> q;
        for (std::size_t p = 0; p < 5; ++p) q[p] = fp2_mul(ex[p], ey[p], ctr);
        CHECK(interpolate(q) == convolve(x, y));
    }
    // the first point evaluation is the plain coefficient sum
    std::array<Fp2Element, 3> x{Fp2Element::random(rng), Fp2Element::random(rng),
                                Fp2Element::random(rng)};
    CHECK(evaluate_at_points(x)[0] == x[0] + x[1] + x[2]);
    CHECK(evaluate_at_points(x)[1] == x[0] + fp2_mul_by_s(x[1]) - x[2]);
}

TEST_CASE("closed-form products") {
    std::mt19937_64 rng(10);
    auto a = Fp6Element::random(rng);
    a.coeffs[2] = {constant(2), F97Element::zero()};
    const Fp6Product p = fp6_mul_appendix(a, a);
    CHECK(p.trace.products[12] == Fp2Element::one());
    CHECK(fp6_mul_appendix(a, Fp6Element::one()).value == a);
    CHECK_FALSE(p.trace.interpolation.has_value());

    MulCounter ctr;
    fp6_mul_appendix(a, a, ctr);
    CHECK(ctr.base_muls() == 9 + 6 * 3);
}

TEST_CASE("conjugate structure of the closed-form products") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 100; ++rep) {
        const auto a = Fp6Element::random(rng), b = Fp6Element::random(rng);
        CHECK(conjugate_check(fp6_mul_appendix(a, b).trace));
    }
    CHECK(conjugate_check(fp6_mul_appendix(Fp6Element::zero(), Fp6Element::zero()).trace));
    auto a = Fp6Element::random(rng), b = Fp6Element::random(rng);
    a.coeffs[1] = Fp2Element::zero();
    b.coeffs[1] = Fp2Element::zero();
    const auto trace = fp6_mul_appendix(a, b).trace;
    for (std::size_t j : {3u, 4u, 5u}) CHECK(trace.products[j].is_real());
    CHECK(conjugate_check(trace));

    ProductTrace broken = trace;
    broken.products[9] = broken.products[9] + Fp2Element::s();
    CHECK_FALSE(conjugate_check(broken));
}

TEST_CASE("closed-form combinations with an s-residual are reported") {
    auto table = kAppendixCombination;
    table[0][3] = Fp2Scalar(1, 0);  // drop the s part of one scalar
    std::mt19937_64 rng(12);
    const auto a = Fp6Element::random(rng), b = Fp6Element::random(rng);
    MulCounter ctr;
    try {
        fp6_mul_closed_form(a, b, table, ctr);
        FAIL("expected FormulaDiscrepancy");
    } catch (const FormulaDiscrepancy& e) {
        CHECK(e.index() == 0);
        CHECK_FALSE(e.residual().is_zero());
    }
}
