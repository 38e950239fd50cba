#pragma once

#include "fusionrep/errors.hpp"
#include "fusionrep/numbers.hpp"

#include <vector>

namespace fusrep {

// Coefficients of the n-th cyclotomic polynomial, constant term first,
// including the leading 1 (degree = phi(n)).
const std::vector<Int>& cyclotomic_polynomial(long n);

// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
// The level n is not required to be the true conductor; equality lifts both
// sides to a common level, where the power basis makes zero tests syntactic.
class Cyclo {
  public:
    Cyclo() : level_(1), coords_(1, Rat(0)) {}
    explicit Cyclo(const Rat& q) : level_(1), coords_(1, q) {}
    Cyclo(long level, std::vector<Rat> coords);

    static Cyclo root_of_unity(long n, long k); // zeta_n^k
    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(Rat(1)); }

    long level() const { return level_; }
    const std::vector<Rat>& coords() const { return coords_; }

    // the same element written in Q(zeta_m); requires level | m
    Cyclo at_level(long m) const;

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Rat& q) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }

    // zeta -> zeta^k for gcd(k, level) = 1
    Cyclo galois(long k) const;
    Cyclo conjugate() const { return galois(level_ - 1); }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // throws unless rational
    bool is_real() const { return *this == conjugate(); }

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    long level_;
    std::vector<Rat> coords_; // length phi(level_)
};

inline Cyclo operator*(const Rat& q, const Cyclo& c) { return c * q; }

} // namespace fusrep
