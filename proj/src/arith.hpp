#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wl {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Thrown when a requested computation exceeds a configured cap.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on invalid arguments (wrong kind for context, bad parameters, ...).
struct invalid_argument : std::invalid_argument {
    explicit invalid_argument(const std::string& what) : std::invalid_argument(what) {}
};

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i64 lcm_i64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_i64(a, b) * b;
}

inline i64 mod_pos(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

inline i64 pow_mod(i64 base, u64 exp, i64 m) {
    base = mod_pos(base, m);
    i64 r = 1 % m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline i64 ipow(i64 base, unsigned exp) {
    i64 r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// n = p^f with p prime; returns {p, f} or throws.
inline std::pair<i64, unsigned> prime_power_decompose(i64 n) {
    if (n < 2) throw invalid_argument("not a prime power: " + std::to_string(n));
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            unsigned f = 0;
            i64 m = n;
            while (m % p == 0) { m /= p; ++f; }
            if (m != 1) throw invalid_argument("not a prime power: " + std::to_string(n));
            return {p, f};
        }
    }
    return {n, 1};
}

// ell-adic valuation of n (n != 0).
inline unsigned valuation(i64 n, i64 ell) {
    if (n == 0) throw invalid_argument("valuation of 0");
    if (n < 0) n = -n;
    unsigned v = 0;
    while (n % ell == 0) { n /= ell; ++v; }
    return v;
}

inline i64 ell_part(i64 n, i64 ell) { return ipow(ell, valuation(n, ell)); }

inline i64 ell_prime_part(i64 n, i64 ell) {
    if (n < 0) n = -n;
    return n / ell_part(n, ell);
}

// Multiplicative order of a modulo m (gcd(a, m) = 1; m >= 1).
inline i64 mult_order(i64 a, i64 m) {
    if (m == 1) return 1;
    a = mod_pos(a, m);
    if (gcd_i64(a, m) != 1)
        throw invalid_argument("mult_order: arguments not coprime");
    i64 x = a % m, ord = 1;
    while (x != 1) {
        x = mul_mod(x, a, m);
        ++ord;
    }
    return ord;
}

inline std::vector<i64> divisors(i64 n) {
    if (n < 0) n = -n;
    std::vector<i64> lo, hi;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
    return lo;
}

// Prime factorization by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<i64, unsigned>> factorize(i64 n) {
    if (n < 0) n = -n;
    std::vector<std::pair<i64, unsigned>> out;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace wl
