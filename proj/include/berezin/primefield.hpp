#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace berezin {

// Default modulus for randomized identity testing: the Mersenne prime 2^61-1.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs (the standard 12-base set).
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int k = 1; k < r; ++k) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Residue modulo a fixed odd prime.  Each value carries its modulus; mixing
// moduli is a programming error and throws.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;  // 0 only in the default-constructed (unusable) state

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

    static void check(const Fp& a, const Fp& b) {
        if (a.p != b.p) throw std::logic_error("mixed prime-field moduli");
    }

    bool is_zero() const { return v == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        check(a, b);
        std::uint64_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return Fp{s, a.p};
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check(a, b);
        return Fp{a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p};
    }
    Fp operator-() const { return Fp{v == 0 ? 0 : p - v, p}; }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check(a, b);
        return Fp{mulmod(a.v, b.v, a.p), a.p};
    }
    friend bool operator==(const Fp& a, const Fp& b) {
        check(a, b);
        return a.v == b.v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (v == 0) throw std::domain_error("prime-field inverse of zero");
        return Fp{powmod(v, p - 2, p), p};
    }
    Fp divide(const Fp& by) const {
        check(*this, by);
        return *this * by.inverse();
    }

    std::string str() const { return std::to_string(v); }
};

inline Fp fp_from_int(long long x, std::uint64_t p) {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Fp{static_cast<std::uint64_t>(r), p};
}

}  // namespace berezin
