#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fusrep {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Euclidean mod: result in [0, m).
inline Int int_mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::optional<Int> mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        return std::nullopt;
    return r;
}

// p-adic valuation of a nonzero rational (negative for denominators).
long p_valuation(const Rat& x, long p);

// True if x = a/b with p not dividing b.
bool is_p_local(const Rat& x, long p);

// Rational reconstruction: find a/b = x (mod m) with |a|, b <= floor(sqrt(m/2))
// and gcd(b, m) = 1. Returns nullopt when no such fraction exists.
std::optional<Rat> rational_reconstruct(const Int& x, const Int& m);

std::vector<long> prime_factors(long n);
bool is_prime_power(long n, long p); // n == p^k, k >= 0
long euler_phi(long n);

std::string rat_to_string(const Rat& q);

} // namespace fusrep
