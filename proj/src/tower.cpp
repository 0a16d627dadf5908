#include "tritmul/tower.hpp"

#include <vector>

namespace tritmul {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

F97Element scale(const F97Element& a, int k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return F97Element::zero();
        case 1: return a;
        default: return -a;
    }
}

F97Element combine(const std::array<int, 6>& coeffs, const std::array<F97Element, 6>& x) {
    F97Element sum;
    for (std::size_t i = 0; i < 6; ++i) {
        if (coeffs[i] != 0) sum = sum + scale(x[i], coeffs[i]);
    }
    return sum;
}

Fp2Element form(const LinearForm& f, const std::array<F97Element, 6>& x) {
    return {combine(f.re, x), combine(f.im, x)};
}

bool is_real_form(const LinearForm& f) {
    for (int v : f.im) {
        if (v != 0) return false;
    }
    return true;
}

constexpr Fp2Scalar P{1, 0};       // +1
constexpr Fp2Scalar M{-1, 0};      // -1
constexpr Fp2Scalar O{0, 0};       // unused
constexpr Fp2Scalar SP{1, 1};      // s + 1
constexpr Fp2Scalar SM{-1, 1};     // s - 1

}  // namespace

Fp2Element Fp2Element::random(std::mt19937_64& rng) {
    F97Element c0 = F97Element::random(rng);
    F97Element c1 = F97Element::random(rng);
    return {std::move(c0), std::move(c1)};
}

Fp2Element Fp2Element::parse(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw std::invalid_argument("Fp2 element needs 2 ':'-separated parts");
    return {F97Element::parse(parts[0]), F97Element::parse(parts[1])};
}

std::string Fp2Element::to_string() const { return c0.to_string() + ":" + c1.to_string(); }

Fp2Element operator+(const Fp2Element& a, const Fp2Element& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
Fp2Element operator-(const Fp2Element& a, const Fp2Element& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
Fp2Element operator-(const Fp2Element& a) { return {-a.c0, -a.c1}; }

std::string Fp2Scalar::to_string() const {
    static const char* const names[3][3] = {
        {"0", "s", "-s"},
        {"1", "s+1", "-(s-1)"},
        {"-1", "s-1", "-(s+1)"},
    };
    return names[re_][im_];
}

Fp2Element fp2_mul_by_s(const Fp2Element& a) { return {-a.c1, a.c0}; }

Fp2Element apply(Fp2Scalar k, const Fp2Element& a) {
    Fp2Element out;
    if (k.re() != 0) out = k.re() == 1 ? a : -a;
    if (k.im() != 0) {
        const Fp2Element sa = fp2_mul_by_s(a);
        out = out + (k.im() == 1 ? sa : -sa);
    }
    return out;
}

Fp2Element apply(Fp2Scalar k, const F97Element& a) {
    return {scale(a, k.re()), scale(a, k.im())};
}

std::array<F97Element, 3> karatsuba_products(const Fp2Element& u, const Fp2Element& v,
                                             MulCounter& ctr) {
    return {ctr.mul(u.c0, v.c0), ctr.mul(u.c0 + u.c1, v.c0 + v.c1), ctr.mul(u.c1, v.c1)};
}

Fp2Element karatsuba_combine(const std::array<F97Element, 3>& m) {
    return {m[0] - m[2], m[1] - m[0] - m[2]};
}

Fp2Element fp2_mul(const Fp2Element& a, const Fp2Element& b, MulCounter& ctr) {
    return karatsuba_combine(karatsuba_products(a, b, ctr));
}

Fp2Element fp2_mul_schoolbook(const Fp2Element& a, const Fp2Element& b, MulCounter& ctr) {
    const F97Element m00 = ctr.mul(a.c0, b.c0);
    const F97Element m01 = ctr.mul(a.c0, b.c1);
    const F97Element m10 = ctr.mul(a.c1, b.c0);
    const F97Element m11 = ctr.mul(a.c1, b.c1);
    return {m00 - m11, m01 + m10};
}

Fp6Element Fp6Element::from_flat(const std::array<F97Element, 6>& flat) {
    return {{Fp2Element{flat[0], flat[1]}, Fp2Element{flat[2], flat[3]},
             Fp2Element{flat[4], flat[5]}}};
}

Fp6Element Fp6Element::random(std::mt19937_64& rng) {
    Fp6Element out;
    for (auto& c : out.coeffs) c = Fp2Element::random(rng);
    return out;
}

Fp6Element Fp6Element::parse(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 6) throw std::invalid_argument("Fp6 element needs 6 ':'-separated parts");
    std::array<F97Element, 6> flat;
    for (std::size_t i = 0; i < 6; ++i) flat[i] = F97Element::parse(parts[i]);
    return from_flat(flat);
}

std::array<F97Element, 6> Fp6Element::flat() const {
    return {coeffs[0].c0, coeffs[0].c1, coeffs[1].c0, coeffs[1].c1, coeffs[2].c0, coeffs[2].c1};
}

const F97Element& Fp6Element::flat(std::size_t i) const {
    const Fp2Element& c = coeffs.at(i / 2);
    return i % 2 == 0 ? c.c0 : c.c1;
}

std::string Fp6Element::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < 6; ++i) {
        if (i != 0) out += ':';
        out += flat(i).to_string();
    }
    return out;
}

Fp6Element operator+(const Fp6Element& a, const Fp6Element& b) {
    return {{a.coeffs[0] + b.coeffs[0], a.coeffs[1] + b.coeffs[1], a.coeffs[2] + b.coeffs[2]}};
}

Fp6Element reduce_quartic(const std::array<Fp2Element, 5>& c) {
    return {{c[0] + c[3], c[1] + c[3] + c[4], c[2] + c[4]}};
}

Fp6Element fp6_mul_schoolbook(const Fp6Element& a, const Fp6Element& b, MulCounter& ctr) {
    std::array<Fp2Element, 5> c;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            c[i + j] = c[i + j] + fp2_mul(a.coeffs[i], b.coeffs[j], ctr);
        }
    }
    return reduce_quartic(c);
}

Fp6Element fp6_mul_schoolbook(const Fp6Element& a, const Fp6Element& b) {
    MulCounter ctr;
    return fp6_mul_schoolbook(a, b, ctr);
}

Fp6Element fp6_mul_schoolbook_flat(const Fp6Element& a, const Fp6Element& b, MulCounter& ctr) {
    // Basis element i is r^(i/2) s^(i%2); s^2 = -1.
    std::array<Fp2Element, 5> c;
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            const F97Element m = ctr.mul(a.flat(i), b.flat(j));
            Fp2Element term;
            switch (i % 2 + j % 2) {
                case 0: term.c0 = m; break;
                case 1: term.c1 = m; break;
                default: term.c0 = -m; break;
            }
            c[i / 2 + j / 2] = c[i / 2 + j / 2] + term;
        }
    }
    return reduce_quartic(c);
}

Fp6Element fp6_mul_18(const Fp6Element& a, const Fp6Element& b, MulCounter& ctr) {
    const auto& x = a.coeffs;
    const auto& y = b.coeffs;
    const Fp2Element p00 = fp2_mul(x[0], y[0], ctr);
    const Fp2Element p11 = fp2_mul(x[1], y[1], ctr);
    const Fp2Element p22 = fp2_mul(x[2], y[2], ctr);
    const Fp2Element p01 = fp2_mul(x[0] + x[1], y[0] + y[1], ctr);
    const Fp2Element p02 = fp2_mul(x[0] + x[2], y[0] + y[2], ctr);
    const Fp2Element p12 = fp2_mul(x[1] + x[2], y[1] + y[2], ctr);
    return reduce_quartic({p00, p01 - p00 - p11, p02 - p00 - p22 + p11, p12 - p11 - p22, p22});
}

std::array<Fp2Element, 5> evaluate_at_points(const std::array<Fp2Element, 3>& poly) {
    std::array<Fp2Element, 5> out;
    for (std::size_t k = 0; k < kEvaluationPoints.size(); ++k) {
        const Fp2Scalar p = kEvaluationPoints[k];
        out[k] = poly[0] + apply(p, poly[1]) + apply(p * p, poly[2]);
    }
    out[4] = poly[2];
    return out;
}

std::array<Fp2Element, 5> interpolate(const std::array<Fp2Element, 5>& point_products) {
    std::array<Fp2Element, 5> c;
    for (std::size_t k = 0; k < 5; ++k) {
        for (std::size_t p = 0; p < 5; ++p) {
            if (!kInterpolation[k][p].is_zero()) {
                c[k] = c[k] + apply(kInterpolation[k][p], point_products[p]);
            }
        }
    }
    return c;
}

Fp6Product fp6_mul_15(const Fp6Element& a, const Fp6Element& b, MulCounter& ctr) {
    const auto ea = evaluate_at_points(a.coeffs);
    const auto eb = evaluate_at_points(b.coeffs);
    Fp6Product out;
    Interpolation interp;
    for (std::size_t p = 0; p < 5; ++p) {
        const auto m = karatsuba_products(ea[p], eb[p], ctr);
        for (std::size_t k = 0; k < 3; ++k) out.trace.products[3 * p + k] = {m[k], F97Element::zero()};
        interp.point_products[p] = karatsuba_combine(m);
    }
    interp.coeffs = interpolate(interp.point_products);
    out.value = reduce_quartic(interp.coeffs);
    out.trace.interpolation = std::move(interp);
    return out;
}

const std::array<LinearForm, 15> kAppendixOperands{{
    {{1, 0, 1, 0, 1, 0}, {}},
    {{1, 1, 1, 1, 1, 1}, {}},
    {{0, 1, 0, 1, 0, 1}, {}},
    {{1, 0, 0, 0, -1, 0}, {0, 0, 1, 0, 0, 0}},
    {{1, 1, 0, 0, -1, -1}, {0, 0, 1, 1, 0, 0}},
    {{0, 1, 0, 0, 0, -1}, {0, 0, 0, 1, 0, 0}},
    {{1, 0, -1, 0, 1, 0}, {}},
    {{1, 1, -1, -1, 1, 1}, {}},
    {{0, 1, 0, -1, 0, 1}, {}},
    {{1, 0, 0, 0, -1, 0}, {0, 0, -1, 0, 0, 0}},
    {{1, 1, 0, 0, -1, -1}, {0, 0, -1, -1, 0, 0}},
    {{0, 1, 0, 0, 0, -1}, {0, 0, 0, -1, 0, 0}},
    {{0, 0, 0, 0, 1, 0}, {}},
    {{0, 0, 0, 0, 1, 1}, {}},
    {{0, 0, 0, 0, 0, 1}, {}},
}};

// Solved exactly over F_3 against the flat schoolbook product; the P12 term of
// c1 is +1 and the P0 term of c5 is -1.
const std::array<std::array<Fp2Scalar, 15>, 6> kAppendixCombination{{
    //  P0  P1  P2  P3   P4  P5   P6  P7  P8  P9   P10  P11  P12 P13 P14
    {M, O, P, SP, O, -SP, O, O, O, -SM, O, SM, M, O, P},
    {P, M, P, -SP, SP, -SP, O, O, O, SM, -SM, SM, P, M, P},
    {M, O, P, O, O, O, P, O, M, O, O, O, P, O, M},
    {P, M, P, O, O, O, M, P, M, O, O, O, M, P, M},
    {P, O, M, M, O, P, P, O, M, M, O, P, P, O, M},
    {M, P, M, P, M, P, M, P, M, P, M, P, M, P, M},
}};

FormulaDiscrepancy::FormulaDiscrepancy(std::size_t index, F97Element residual)
    : std::runtime_error("closed-form coefficient c" + std::to_string(index) +
                         " has nonzero s-component " + residual.to_string()),
      index_(index),
      residual_(std::move(residual)) {}

Fp6Product fp6_mul_appendix(const Fp6Element& a, const Fp6Element& b, MulCounter& ctr) {
    return fp6_mul_closed_form(a, b, kAppendixCombination, ctr);
}

Fp6Product fp6_mul_closed_form(const Fp6Element& a, const Fp6Element& b,
                               const std::array<std::array<Fp2Scalar, 15>, 6>& combination,
                               MulCounter& ctr) {
    const auto fa = a.flat();
    const auto fb = b.flat();
    Fp6Product out;
    auto& products = out.trace.products;
    for (std::size_t j = 0; j < kAppendixOperands.size(); ++j) {
        const LinearForm& f = kAppendixOperands[j];
        if (is_real_form(f)) {
            products[j] = {ctr.mul(combine(f.re, fa), combine(f.re, fb)), F97Element::zero()};
        } else {
            products[j] = fp2_mul(form(f, fa), form(f, fb), ctr);
        }
    }
    std::array<F97Element, 6> flat;
    for (std::size_t i = 0; i < 6; ++i) {
        Fp2Element c;
        for (std::size_t j = 0; j < products.size(); ++j) {
            if (!combination[i][j].is_zero()) {
                c = c + apply(combination[i][j], products[j]);
            }
        }
        if (!c.is_real()) throw FormulaDiscrepancy(i, c.c1);
        flat[i] = c.c0;
    }
    out.value = Fp6Element::from_flat(flat);
    return out;
}

Fp6Product fp6_mul_appendix(const Fp6Element& a, const Fp6Element& b) {
    MulCounter ctr;
    return fp6_mul_appendix(a, b, ctr);
}

bool conjugate_check(const ProductTrace& trace) {
    const auto& p = trace.products;
    return p[9] == conjugate(p[3]) && p[10] == conjugate(p[4]) && p[11] == conjugate(p[5]);
}

}  // namespace tritmul
