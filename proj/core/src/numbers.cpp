#include "fusionrep/numbers.hpp"

namespace fusrep {

long p_valuation(const Rat& x, long p) {
    if (x == 0)
        return 0;
    Int pp(p);
    long v = 0;
    Int num = x.get_num();
    while (int_mod(num, pp) == 0) {
        num /= pp;
        ++v;
    }
    Int den = x.get_den();
    while (int_mod(den, pp) == 0) {
        den /= pp;
        --v;
    }
    return v;
}

bool is_p_local(const Rat& x, long p) {
    return int_mod(Int(x.get_den()), Int(p)) != 0;
}

std::optional<Rat> rational_reconstruct(const Int& x, const Int& m) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    // Half-extended Euclid on (m, x); stop when the remainder drops
    // below the bound.
    Int r0 = m, r1 = int_mod(x, m);
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0)
        return std::nullopt;
    Int num = r1, den = t1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound || int_gcd(den, m) != 1)
        return std::nullopt;
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

bool is_prime_power(long n, long p) {
    if (n < 1)
        return false;
    while (n % p == 0)
        n /= p;
    return n == 1;
}

long euler_phi(long n) {
    long result = n;
    for (long p : prime_factors(n))
        result = result / p * (p - 1);
    return result;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

} // namespace fusrep
