#include "tritmul/gf3.hpp"

#include <stdexcept>

namespace tritmul {

namespace {

using Word = TritVector::Word;

struct Planes {
    Word lo;
    Word hi;
};

// (a1, a0) + (b1, b0) with t = (a0 | b1) ^ (a1 | b0); works bitwise on whole words.
constexpr Planes add_planes(Word a_lo, Word a_hi, Word b_lo, Word b_hi) {
    const Word t = (a_lo | b_hi) ^ (a_hi | b_lo);
    return {(a_hi | b_hi) ^ t, (a_lo | b_lo) ^ t};
}

constexpr Planes mul_planes(Word a_lo, Word a_hi, Word b_lo, Word b_hi) {
    return {(a_lo & b_lo) | (a_hi & b_hi), (a_hi & b_lo) | (a_lo & b_hi)};
}

constexpr Word broadcast(bool bit) { return bit ? ~Word{0} : Word{0}; }

void check_same_length(const TritVector& a, const TritVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("TritVector length mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    }
}

}  // namespace

Trit Trit::from_bits(bool hi, bool lo) {
    if (hi && lo) throw std::invalid_argument("trit encoding (1,1) is invalid");
    return Trit(hi, lo);
}

Trit Trit::from_value(int v) {
    switch (v) {
        case 0: return Trit(false, false);
        case 1: return Trit(false, true);
        case 2: return Trit(true, false);
        default: throw std::invalid_argument("trit value out of range: " + std::to_string(v));
    }
}

Trit trit_add(Trit a, Trit b) {
    const bool t = (a.lo_ || b.hi_) != (a.hi_ || b.lo_);
    return Trit((a.lo_ || b.lo_) != t, (a.hi_ || b.hi_) != t);
}

Trit trit_mul(Trit a, Trit b) {
    return Trit((a.hi_ && b.lo_) || (a.lo_ && b.hi_), (a.lo_ && b.lo_) || (a.hi_ && b.hi_));
}

Trit trit_neg(Trit a) { return Trit(a.lo_, a.hi_); }

Trit trit_sub(Trit a, Trit b) { return trit_add(a, trit_neg(b)); }

TritVector::TritVector(std::size_t length)
    : length_(length), lo_(words_for(length), 0), hi_(words_for(length), 0) {}

TritVector TritVector::from_values(std::span<const int> values) {
    TritVector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) v.set(i, values[i]);
    return v;
}

TritVector TritVector::parse(std::string_view text) {
    TritVector v(text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char c = text[k];
        if (c < '0' || c > '2') {
            throw std::invalid_argument("invalid ternary digit '" + std::string(1, c) +
                                        "' at position " + std::to_string(k));
        }
        v.set(text.size() - 1 - k, c - '0');
    }
    return v;
}

std::string TritVector::to_string() const {
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        out[length_ - 1 - i] = static_cast<char>('0' + value(i));
    }
    return out;
}

Trit TritVector::get(std::size_t i) const {
    if (i >= length_) throw std::out_of_range("TritVector index out of range");
    const Word mask = Word{1} << (i % kWordBits);
    const std::size_t w = i / kWordBits;
    return Trit::from_bits((hi_[w] & mask) != 0, (lo_[w] & mask) != 0);
}

void TritVector::set(std::size_t i, Trit t) {
    if (i >= length_) throw std::out_of_range("TritVector index out of range");
    const Word mask = Word{1} << (i % kWordBits);
    const std::size_t w = i / kWordBits;
    lo_[w] = t.lo() ? (lo_[w] | mask) : (lo_[w] & ~mask);
    hi_[w] = t.hi() ? (hi_[w] | mask) : (hi_[w] & ~mask);
}

bool TritVector::is_zero() const {
    for (std::size_t w = 0; w < lo_.size(); ++w) {
        if (lo_[w] != 0 || hi_[w] != 0) return false;
    }
    return true;
}

void TritVector::clear_tail() {
    const std::size_t rem = length_ % kWordBits;
    if (rem == 0 || lo_.empty()) return;
    const Word mask = (Word{1} << rem) - 1;
    lo_.back() &= mask;
    hi_.back() &= mask;
}

TritVector TritVector::slice(std::size_t offset, std::size_t count) const {
    TritVector out(count);
    if (offset >= length_) return out;
    const std::size_t shift = offset % kWordBits;
    const std::size_t base = offset / kWordBits;
    for (std::size_t w = 0; w < out.lo_.size(); ++w) {
        const std::size_t src = base + w;
        if (src >= lo_.size()) break;
        Word lo = lo_[src] >> shift;
        Word hi = hi_[src] >> shift;
        if (shift != 0 && src + 1 < lo_.size()) {
            lo |= lo_[src + 1] << (kWordBits - shift);
            hi |= hi_[src + 1] << (kWordBits - shift);
        }
        out.lo_[w] = lo;
        out.hi_[w] = hi;
    }
    out.clear_tail();
    return out;
}

TritVector TritVector::resized(std::size_t length) const { return slice(0, length); }

void TritVector::accumulate(const TritVector& src, std::size_t offset, Trit scale) {
    if (scale.value() == 0 || src.empty()) return;
    const bool negate = scale.value() == 2;
    const std::size_t shift = offset % kWordBits;
    const std::size_t base = offset / kWordBits;
    for (std::size_t k = 0; k <= src.lo_.size(); ++k) {
        Word s_lo = 0;
        Word s_hi = 0;
        if (k < src.lo_.size()) {
            s_lo = src.lo_[k] << shift;
            s_hi = src.hi_[k] << shift;
        }
        if (shift != 0 && k >= 1) {
            s_lo |= src.lo_[k - 1] >> (kWordBits - shift);
            s_hi |= src.hi_[k - 1] >> (kWordBits - shift);
        }
        if (s_lo == 0 && s_hi == 0) continue;
        const std::size_t w = base + k;
        if (w >= lo_.size()) {
            throw std::invalid_argument("TritVector::accumulate overflows target length");
        }
        if (negate) std::swap(s_lo, s_hi);
        const Planes r = add_planes(lo_[w], hi_[w], s_lo, s_hi);
        lo_[w] = r.lo;
        hi_[w] = r.hi;
    }
    const std::size_t rem = length_ % kWordBits;
    if (rem != 0) {
        const Word spill = ~((Word{1} << rem) - 1);
        if ((lo_.back() & spill) != 0 || (hi_.back() & spill) != 0) {
            throw std::invalid_argument("TritVector::accumulate overflows target length");
        }
    }
}

TritVector vec_add(const TritVector& a, const TritVector& b) {
    check_same_length(a, b);
    TritVector out(a.size());
    for (std::size_t w = 0; w < out.lo_.size(); ++w) {
        const Planes r = add_planes(a.lo_[w], a.hi_[w], b.lo_[w], b.hi_[w]);
        out.lo_[w] = r.lo;
        out.hi_[w] = r.hi;
    }
    return out;
}

TritVector vec_sub(const TritVector& a, const TritVector& b) {
    check_same_length(a, b);
    TritVector out(a.size());
    for (std::size_t w = 0; w < out.lo_.size(); ++w) {
        const Planes r = add_planes(a.lo_[w], a.hi_[w], b.hi_[w], b.lo_[w]);
        out.lo_[w] = r.lo;
        out.hi_[w] = r.hi;
    }
    return out;
}

TritVector vec_neg(const TritVector& a) {
    TritVector out = a;
    out.lo_.swap(out.hi_);
    return out;
}

TritVector vec_scale(const TritVector& a, Trit k) {
    TritVector out(a.size());
    const Word k_lo = broadcast(k.lo());
    const Word k_hi = broadcast(k.hi());
    for (std::size_t w = 0; w < out.lo_.size(); ++w) {
        const Planes r = mul_planes(a.lo_[w], a.hi_[w], k_lo, k_hi);
        out.lo_[w] = r.lo;
        out.hi_[w] = r.hi;
    }
    return out;
}

TritVector vec_random(std::size_t length, std::mt19937_64& rng) {
    TritVector out(length);
    std::size_t i = 0;
    while (i < length) {
        std::uint64_t bits = rng();
        for (int chunk = 0; chunk < 32 && i < length; ++chunk, bits >>= 2) {
            const int v = static_cast<int>(bits & 3U);
            if (v == 3) continue;
            out.set(i++, v);
        }
    }
    return out;
}

TritVector vec_random(std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return vec_random(length, rng);
}

}  // namespace tritmul
