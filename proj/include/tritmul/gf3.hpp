#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tritmul {

/// One GF(3) coefficient as a disjoint bit pair: 0 = (0,0), 1 = (0,1), 2 = (1,0).
class Trit {
public:
    constexpr Trit() = default;

    /// Throws std::invalid_argument for the unrepresentable pair (1,1).
    static Trit from_bits(bool hi, bool lo);
    /// Accepts 0, 1, 2.
    static Trit from_value(int v);

    constexpr bool hi() const { return hi_; }
    constexpr bool lo() const { return lo_; }
    constexpr int value() const { return hi_ ? 2 : (lo_ ? 1 : 0); }

    friend constexpr bool operator==(Trit, Trit) = default;

private:
    constexpr Trit(bool hi, bool lo) : hi_(hi), lo_(lo) {}
    friend Trit trit_add(Trit, Trit);
    friend Trit trit_mul(Trit, Trit);
    friend Trit trit_neg(Trit);

    bool hi_ = false;
    bool lo_ = false;
};

Trit trit_add(Trit a, Trit b);
Trit trit_sub(Trit a, Trit b);
Trit trit_mul(Trit a, Trit b);
Trit trit_neg(Trit a);

/// Packed vector of trits in two bit planes. Coefficient i lives in bit
/// (i % 64) of word (i / 64) of each plane; unused high bits stay zero.
class TritVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    TritVector() = default;
    explicit TritVector(std::size_t length);

    /// Coefficient values in index order (index 0 first). Values must be 0..2.
    static TritVector from_values(std::span<const int> values);
    /// Canonical text: digits 0..2, most-significant coefficient first.
    static TritVector parse(std::string_view text);
    std::string to_string() const;

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }

    Trit get(std::size_t i) const;
    int value(std::size_t i) const { return get(i).value(); }
    void set(std::size_t i, Trit t);
    void set(std::size_t i, int v) { set(i, Trit::from_value(v)); }

    bool is_zero() const;

    std::span<const Word> lo_words() const { return lo_; }
    std::span<const Word> hi_words() const { return hi_; }

    /// Copy of coefficients [offset, offset + count); positions past the end read as zero.
    TritVector slice(std::size_t offset, std::size_t count) const;
    /// Zero-extends or truncates to `length`.
    TritVector resized(std::size_t length) const;

    /// *this += scale * src * x^offset. Contributions past size() must be zero.
    void accumulate(const TritVector& src, std::size_t offset, Trit scale);

    friend bool operator==(const TritVector&, const TritVector&) = default;

private:
    friend TritVector vec_add(const TritVector&, const TritVector&);
    friend TritVector vec_sub(const TritVector&, const TritVector&);
    friend TritVector vec_neg(const TritVector&);
    friend TritVector vec_scale(const TritVector&, Trit);

    static std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }
    void clear_tail();

    std::size_t length_ = 0;
    std::vector<Word> lo_;
    std::vector<Word> hi_;
};

/// Length mismatch throws std::invalid_argument.
TritVector vec_add(const TritVector& a, const TritVector& b);
TritVector vec_sub(const TritVector& a, const TritVector& b);
TritVector vec_neg(const TritVector& a);
TritVector vec_scale(const TritVector& a, Trit k);

/// Deterministic uniform trits. The stream is std::mt19937_64(seed); each
/// 64-bit output is consumed two bits at a time from the least significant
/// end, the value 3 is rejected, and accepted values fill coefficients
/// 0, 1, 2, ... in order.
TritVector vec_random(std::size_t length, std::uint64_t seed);
/// Same draw rule, continuing an existing stream.
TritVector vec_random(std::size_t length, std::mt19937_64& rng);

inline TritVector operator+(const TritVector& a, const TritVector& b) { return vec_add(a, b); }
inline TritVector operator-(const TritVector& a, const TritVector& b) { return vec_sub(a, b); }
inline TritVector operator-(const TritVector& a) { return vec_neg(a); }

}  // namespace tritmul
