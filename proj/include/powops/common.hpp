#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace powops {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation's mathematical precondition is violated
/// (bad conductor, non-squarefree discriminant, group mismatch, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency check fails. Seeing this means a bug,
/// not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

/// Euler phi for small moduli.
inline int euler_phi(int m) {
    if (m < 1) throw domain_error("euler_phi: m must be positive");
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long mod_pow_long(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return r;
}

/// Modular inverse for a prime modulus.
inline long mod_inv_long(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw domain_error("mod_inv_long: zero has no inverse");
    return mod_pow_long(a, p - 2, p);
}

/// Smallest positive k' with k*k' == 1 (mod m); m = 1 gives 1.
inline long inverse_mod(long k, long m) {
    if (m <= 0) throw domain_error("inverse_mod: modulus must be positive");
    if (m == 1) return 1;
    long r = k % m;
    if (r < 0) r += m;
    if (gcd_long(r, m) != 1) throw domain_error("inverse_mod: arguments not coprime");
    // extended Euclid
    long old_r = r, rr = m, old_s = 1, s = 0;
    while (rr != 0) {
        long q = old_r / rr;
        long t = old_r - q * rr; old_r = rr; rr = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    long inv = old_s % m;
    if (inv <= 0) inv += m;
    return inv;
}

inline Int binomial_int(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Number of k-multisets over an n-letter alphabet.
inline Int multichoose_int(long n, long k) {
    if (k == 0) return 1;
    if (n <= 0) return 0;
    return binomial_int(n + k - 1, k);
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int p_part(Int n, long p) {
    if (n == 0) throw domain_error("p_part: zero argument");
    if (n < 0) n = -n;
    Int r = 1;
    while (n % p == 0) { n /= p; r *= p; }
    return r;
}

/// Outcome of one verification: pass/fail plus a human-readable witness.
struct CheckResult {
    bool pass = false;
    std::string detail;
};

}  // namespace powops
