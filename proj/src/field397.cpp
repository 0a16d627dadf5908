#include "tritmul/field397.hpp"

#include <stdexcept>

namespace tritmul {

namespace {

constexpr std::size_t kTap = 16;

// In-place high-to-low fold of every coefficient at index >= 97.
void fold_high(TritVector& v) {
    const Trit two = Trit::from_value(2);
    for (std::size_t i = v.size(); i-- > F97Element::kDegree;) {
        const Trit top = v.get(i);
        if (top.value() == 0) continue;
        v.set(i, Trit{});
        const std::size_t base = i - F97Element::kDegree;
        v.set(base + kTap, trit_add(v.get(base + kTap), trit_mul(two, top)));
        v.set(base, trit_add(v.get(base), top));
    }
}

}  // namespace

F97Element::F97Element(TritVector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != kDegree) {
        throw std::invalid_argument("F97Element needs exactly 97 coefficients, got " +
                                    std::to_string(coeffs_.size()));
    }
}

F97Element F97Element::one() { return monomial(0); }

F97Element F97Element::monomial(std::size_t k) {
    TritVector v(kDegree);
    v.set(k, 1);
    return F97Element(std::move(v));
}

F97Element F97Element::random(std::mt19937_64& rng) {
    return F97Element(vec_random(kDegree, rng));
}

F97Element F97Element::parse(std::string_view text) {
    if (text.size() != kDegree) {
        throw std::invalid_argument("F97 element text must have 97 digits, got " +
                                    std::to_string(text.size()));
    }
    return F97Element(TritVector::parse(text));
}

F97Element reduce(const Poly& p) {
    if (p.size() > F97Element::kMaxReduceLength) {
        throw std::length_error("reduce: polynomial of length " + std::to_string(p.size()) +
                                " exceeds 193");
    }
    TritVector v = p.coeffs();
    fold_high(v);
    return F97Element(v.resized(F97Element::kDegree));
}

F97Element mul(const F97Element& a, const F97Element& b) {
    return reduce(schoolbook_mul(a.to_poly(), b.to_poly()));
}

F97Element operator+(const F97Element& a, const F97Element& b) {
    return F97Element(a.coeffs() + b.coeffs());
}

F97Element operator-(const F97Element& a, const F97Element& b) {
    return F97Element(a.coeffs() - b.coeffs());
}

F97Element operator-(const F97Element& a) { return F97Element(-a.coeffs()); }

}  // namespace tritmul
