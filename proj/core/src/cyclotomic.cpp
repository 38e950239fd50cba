#include "fusionrep/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace fusrep {

namespace {

// exact division of integer polynomials, low degree first; divisor monic
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    if (dn < dd)
        throw ConsistencyError("polynomial division degree underflow");
    std::vector<Int> quot(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        Int c = num[i];
        if (c == 0)
            continue;
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j)
            num[i - dd + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0)
            throw ConsistencyError("polynomial division not exact");
    return quot;
}

std::vector<Int> compute_cyclotomic(long n, std::map<long, std::vector<Int>>& cache);

const std::vector<Int>& cached_cyclotomic(long n) {
    static std::mutex mtx;
    static std::map<long, std::vector<Int>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_cyclotomic(n, cache)).first;
    return it->second;
}

std::vector<Int> compute_cyclotomic(long n, std::map<long, std::vector<Int>>& cache) {
    // x^n - 1 divided by the product of Phi_d over proper divisors d
    std::vector<Int> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        auto it = cache.find(d);
        if (it == cache.end())
            it = cache.emplace(d, compute_cyclotomic(d, cache)).first;
        num = poly_divide_exact(std::move(num), it->second);
    }
    return num;
}

// reduce an arbitrary-degree polynomial in zeta_n modulo Phi_n
std::vector<Rat> reduce_mod_phi(std::vector<Rat> poly, long n) {
    const auto& phi = cached_cyclotomic(n);
    int deg = static_cast<int>(phi.size()) - 1;
    for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
        Rat c = poly[i];
        if (c == 0)
            continue;
        for (int j = 0; j <= deg; ++j)
            poly[i - deg + j] -= c * Rat(phi[j]);
    }
    poly.resize(deg, Rat(0));
    for (auto& q : poly)
        q.canonicalize();
    return poly;
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
    if (n < 1)
        throw PreconditionError("cyclotomic polynomial index must be positive");
    return cached_cyclotomic(n);
}

Cyclo::Cyclo(long level, std::vector<Rat> coords) : level_(level), coords_(std::move(coords)) {
    size_t dim = cached_cyclotomic(level).size() - 1;
    if (coords_.size() != dim)
        throw PreconditionError("cyclotomic coordinate vector has wrong length");
}

Cyclo Cyclo::root_of_unity(long n, long k) {
    if (n < 1)
        throw PreconditionError("root of unity needs positive order");
    k = ((k % n) + n) % n;
    std::vector<Rat> poly(n, Rat(0));
    poly[k] = 1;
    return Cyclo(n, reduce_mod_phi(std::move(poly), n));
}

Cyclo Cyclo::at_level(long m) const {
    if (m == level_)
        return *this;
    if (m % level_ != 0)
        throw PreconditionError("cyclotomic level change needs a multiple level");
    long step = m / level_; // zeta_level = zeta_m^step
    std::vector<Rat> poly(m, Rat(0));
    for (size_t i = 0; i < coords_.size(); ++i)
        poly[(static_cast<long>(i) * step) % m] += coords_[i];
    return Cyclo(m, reduce_mod_phi(std::move(poly), m));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    long m = int_lcm(Int(level_), Int(o.level_)).get_si();
    Cyclo a = at_level(m), b = o.at_level(m);
    for (size_t i = 0; i < a.coords_.size(); ++i) {
        a.coords_[i] += b.coords_[i];
        a.coords_[i].canonicalize();
    }
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

Cyclo Cyclo::operator*(const Rat& q) const {
    Cyclo r = *this;
    for (auto& c : r.coords_) {
        c *= q;
        c.canonicalize();
    }
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    long m = int_lcm(Int(level_), Int(o.level_)).get_si();
    Cyclo a = at_level(m), b = o.at_level(m);
    std::vector<Rat> conv(a.coords_.size() + b.coords_.size(), Rat(0));
    for (size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] == 0)
            continue;
        for (size_t j = 0; j < b.coords_.size(); ++j)
            conv[i + j] += a.coords_[i] * b.coords_[j];
    }
    return Cyclo(m, reduce_mod_phi(std::move(conv), m));
}

Cyclo Cyclo::galois(long k) const {
    k = ((k % level_) + level_) % level_;
    if (int_gcd(Int(k), Int(level_)) != 1)
        throw PreconditionError("Galois exponent must be coprime to the level");
    std::vector<Rat> poly(level_, Rat(0));
    for (size_t i = 0; i < coords_.size(); ++i)
        poly[(static_cast<long>(i) * k) % level_] += coords_[i];
    return Cyclo(level_, reduce_mod_phi(std::move(poly), level_));
}

bool Cyclo::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0)
            return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0)
            return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational())
        throw ConsistencyError("cyclotomic value is not rational");
    return coords_[0];
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (level_ == o.level_)
        return coords_ == o.coords_;
    long m = int_lcm(Int(level_), Int(o.level_)).get_si();
    return at_level(m).coords_ == o.at_level(m).coords_;
}

std::string Cyclo::to_string() const {
    if (is_rational())
        return rat_to_string(coords_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << rat_to_string(coords_[i]);
        if (i >= 1)
            os << "*z" << level_ << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

} // namespace fusrep
