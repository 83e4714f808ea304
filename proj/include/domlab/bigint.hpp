#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domlab {

// Unsigned arbitrary-precision integer on 64-bit limbs (little-endian).
// Built for what this toolkit actually does with big numbers: products of
// word-sized primes, CRT accumulation, gcd checks on certificates, and
// decimal serialization. Not a general bignum library.
class Bigint {
public:
    Bigint() = default;
    Bigint(uint64_t v) {
        if (v != 0) limbs_.push_back(v);
    }

    static Bigint from_decimal(std::string_view s);
    std::string to_decimal() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
    bool fits_u64() const { return limbs_.size() <= 1; }
    uint64_t to_u64() const;  // requires fits_u64()

    size_t bit_length() const;
    size_t trailing_zero_bits() const;  // requires nonzero

    static int compare(const Bigint& a, const Bigint& b);
    friend bool operator==(const Bigint& a, const Bigint& b) { return a.limbs_ == b.limbs_; }
    friend std::strong_ordering operator<=>(const Bigint& a, const Bigint& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Bigint& operator+=(const Bigint& rhs);
    Bigint& operator-=(const Bigint& rhs);  // requires *this >= rhs
    friend Bigint operator+(Bigint a, const Bigint& b) { a += b; return a; }
    friend Bigint operator-(Bigint a, const Bigint& b) { a -= b; return a; }
    friend Bigint operator*(const Bigint& a, const Bigint& b);

    Bigint& mul_u64(uint64_t m);
    Bigint& add_u64(uint64_t v);
    uint64_t mod_u64(uint64_t m) const;                       // m > 0
    std::pair<Bigint, uint64_t> divmod_u64(uint64_t d) const; // d > 0

    // Shift-and-subtract long division; slow but only used for rational
    // floors and bigint gcd fallbacks.
    static std::pair<Bigint, Bigint> divmod(const Bigint& a, const Bigint& b);

    Bigint& operator<<=(size_t bits);
    Bigint& operator>>=(size_t bits);
    friend Bigint operator<<(Bigint a, size_t bits) { a <<= bits; return a; }
    friend Bigint operator>>(Bigint a, size_t bits) { a >>= bits; return a; }

    static Bigint gcd(Bigint a, Bigint b);  // binary gcd

private:
    std::vector<uint64_t> limbs_;  // no trailing zero limbs; empty == 0

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
};

}  // namespace domlab
