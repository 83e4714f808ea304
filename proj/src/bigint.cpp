#include "domlab/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "domlab/errors.hpp"

namespace domlab {

using u128 = unsigned __int128;

uint64_t Bigint::to_u64() const {
    if (limbs_.size() > 1) throw invalid_argument_error("Bigint::to_u64: value exceeds 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

size_t Bigint::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

size_t Bigint::trailing_zero_bits() const {
    assert(!limbs_.empty());
    size_t i = 0;
    while (limbs_[i] == 0) ++i;
    return 64 * i + std::countr_zero(limbs_[i]);
}

int Bigint::compare(const Bigint& a, const Bigint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

Bigint& Bigint::operator+=(const Bigint& rhs) {
    const size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(n, 0);
    unsigned __int128 carry = 0;
    for (size_t i = 0; i < n; ++i) {
        u128 sum = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = static_cast<uint64_t>(sum);
        carry = sum >> 64;
    }
    if (carry) limbs_.push_back(static_cast<uint64_t>(carry));
    return *this;
}

Bigint& Bigint::operator-=(const Bigint& rhs) {
    if (compare(*this, rhs) < 0)
        throw invalid_argument_error("Bigint subtraction underflow");
    uint64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        u128 sub = (u128)(i < rhs.limbs_.size() ? rhs.limbs_[i] : 0) + borrow;
        u128 cur = limbs_[i];
        if (cur >= sub) {
            limbs_[i] = static_cast<uint64_t>(cur - sub);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<uint64_t>(((u128)1 << 64) + cur - sub);
            borrow = 1;
        }
    }
    trim();
    return *this;
}

Bigint operator*(const Bigint& a, const Bigint& b) {
    if (a.is_zero() || b.is_zero()) return Bigint{};
    Bigint out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        u128 carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = (u128)a.limbs_[i] * b.limbs_[j] + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<uint64_t>(cur);
            carry = cur >> 64;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            u128 cur = carry + out.limbs_[k];
            out.limbs_[k] = static_cast<uint64_t>(cur);
            carry = cur >> 64;
            ++k;
        }
    }
    out.trim();
    return out;
}

Bigint& Bigint::mul_u64(uint64_t m) {
    if (m == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    u128 carry = 0;
    for (auto& limb : limbs_) {
        u128 cur = (u128)limb * m + carry;
        limb = static_cast<uint64_t>(cur);
        carry = cur >> 64;
    }
    if (carry) limbs_.push_back(static_cast<uint64_t>(carry));
    return *this;
}

Bigint& Bigint::add_u64(uint64_t v) {
    if (v == 0) return *this;
    u128 carry = v;
    for (size_t i = 0; i < limbs_.size() && carry; ++i) {
        u128 cur = carry + limbs_[i];
        limbs_[i] = static_cast<uint64_t>(cur);
        carry = cur >> 64;
    }
    if (carry) limbs_.push_back(static_cast<uint64_t>(carry));
    return *this;
}

uint64_t Bigint::mod_u64(uint64_t m) const {
    if (m == 0) throw invalid_argument_error("Bigint::mod_u64: division by zero");
    u128 r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        r = ((r << 64) | limbs_[i]) % m;
    }
    return static_cast<uint64_t>(r);
}

std::pair<Bigint, uint64_t> Bigint::divmod_u64(uint64_t d) const {
    if (d == 0) throw invalid_argument_error("Bigint::divmod_u64: division by zero");
    Bigint q;
    q.limbs_.assign(limbs_.size(), 0);
    u128 r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (r << 64) | limbs_[i];
        q.limbs_[i] = static_cast<uint64_t>(cur / d);
        r = cur % d;
    }
    q.trim();
    return {std::move(q), static_cast<uint64_t>(r)};
}

std::pair<Bigint, Bigint> Bigint::divmod(const Bigint& a, const Bigint& b) {
    if (b.is_zero()) throw invalid_argument_error("Bigint::divmod: division by zero");
    if (b.fits_u64()) {
        auto [q, r] = a.divmod_u64(b.to_u64());
        return {std::move(q), Bigint(r)};
    }
    if (compare(a, b) < 0) return {Bigint{}, a};
    Bigint rem = a;
    Bigint quot;
    const size_t shift = a.bit_length() - b.bit_length();
    Bigint cur = b << shift;
    for (size_t s = shift + 1; s-- > 0;) {
        quot <<= 1;
        if (compare(rem, cur) >= 0) {
            rem -= cur;
            quot.add_u64(1);
        }
        cur >>= 1;
    }
    return {std::move(quot), std::move(rem)};
}

Bigint& Bigint::operator<<=(size_t bits) {
    if (limbs_.empty() || bits == 0) return *this;
    const size_t limb_shift = bits / 64;
    const size_t bit_shift = bits % 64;
    limbs_.insert(limbs_.begin(), limb_shift, 0);
    if (bit_shift) {
        uint64_t carry = 0;
        for (size_t i = limb_shift; i < limbs_.size(); ++i) {
            uint64_t next = limbs_[i] >> (64 - bit_shift);
            limbs_[i] = (limbs_[i] << bit_shift) | carry;
            carry = next;
        }
        if (carry) limbs_.push_back(carry);
    }
    return *this;
}

Bigint& Bigint::operator>>=(size_t bits) {
    if (limbs_.empty() || bits == 0) return *this;
    const size_t limb_shift = bits / 64;
    if (limb_shift >= limbs_.size()) {
        limbs_.clear();
        return *this;
    }
    limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
    const size_t bit_shift = bits % 64;
    if (bit_shift) {
        for (size_t i = 0; i + 1 < limbs_.size(); ++i) {
            limbs_[i] = (limbs_[i] >> bit_shift) | (limbs_[i + 1] << (64 - bit_shift));
        }
        limbs_.back() >>= bit_shift;
    }
    trim();
    return *this;
}

Bigint Bigint::gcd(Bigint a, Bigint b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const size_t ta = a.trailing_zero_bits();
    const size_t tb = b.trailing_zero_bits();
    const size_t common = std::min(ta, tb);
    a >>= ta;
    b >>= tb;
    // both odd from here on
    while (true) {
        int c = compare(a, b);
        if (c == 0) break;
        if (c < 0) std::swap(a, b);
        a -= b;  // even, nonzero
        a >>= a.trailing_zero_bits();
    }
    return a << common;
}

Bigint Bigint::from_decimal(std::string_view s) {
    if (s.empty()) throw invalid_argument_error("Bigint::from_decimal: empty string");
    Bigint out;
    size_t i = 0;
    while (i < s.size()) {
        // 19-digit chunks keep the multiplier within uint64_t
        size_t take = std::min<size_t>(19, s.size() - i);
        uint64_t chunk = 0, mult = 1;
        for (size_t j = 0; j < take; ++j) {
            char c = s[i + j];
            if (c < '0' || c > '9')
                throw invalid_argument_error("Bigint::from_decimal: non-digit character");
            chunk = chunk * 10 + static_cast<uint64_t>(c - '0');
            mult *= 10;
        }
        out.mul_u64(mult);
        out.add_u64(chunk);
        i += take;
    }
    return out;
}

std::string Bigint::to_decimal() const {
    if (is_zero()) return "0";
    constexpr uint64_t kChunk = 10'000'000'000'000'000'000ull;  // 10^19
    std::vector<uint64_t> parts;
    Bigint cur = *this;
    while (!cur.is_zero()) {
        auto [q, r] = cur.divmod_u64(kChunk);
        parts.push_back(r);
        cur = std::move(q);
    }
    std::string out = std::to_string(parts.back());
    for (size_t i = parts.size() - 1; i-- > 0;) {
        std::string piece = std::to_string(parts[i]);
        out += std::string(19 - piece.size(), '0');
        out += piece;
    }
    return out;
}

}  // namespace domlab
