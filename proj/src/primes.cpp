#include "domlab/primes.hpp"

#include <cmath>
#include <numeric>

#include "domlab/errors.hpp"

namespace domlab {

using u128 = unsigned __int128;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((u128)a * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // complete for n < 3.3 * 10^24, which covers uint64_t
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t modinv_u64(uint64_t a, uint64_t m) {
    if (m == 0) throw invalid_argument_error("modinv_u64: zero modulus");
    a %= m;
    // extended Euclid on signed 128-bit to dodge overflow
    __int128 old_r = a, r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw invalid_argument_error("modinv_u64: not coprime");
    __int128 inv = old_s % (__int128)m;
    if (inv < 0) inv += m;
    return static_cast<uint64_t>(inv);
}

std::vector<uint64_t> first_primes(size_t count) {
    std::vector<uint64_t> out;
    if (count == 0) return out;
    out.reserve(count);
    // bound from p_n < n (ln n + ln ln n) for n >= 6
    size_t limit = 16;
    if (count >= 6) {
        double n = static_cast<double>(count);
        limit = static_cast<size_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
    }
    while (true) {
        std::vector<bool> composite(limit + 1, false);
        out.clear();
        for (size_t i = 2; i <= limit && out.size() < count; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (size_t j = i * i; j <= limit; j += i) composite[j] = true;
        }
        if (out.size() == count) return out;
        limit *= 2;
    }
}

std::vector<uint32_t> smallest_prime_factor_table(uint32_t limit) {
    std::vector<uint32_t> spf(limit + 1, 0);
    for (uint32_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (uint64_t j = i; j <= limit; j += i) {
                if (spf[j] == 0) spf[j] = i;
            }
        }
    }
    return spf;
}

}  // namespace domlab
