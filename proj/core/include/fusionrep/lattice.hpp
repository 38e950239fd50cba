#pragma once

#include "fusionrep/errors.hpp"
#include "fusionrep/numbers.hpp"

#include <optional>
#include <vector>

namespace fusrep {

using IntMat = std::vector<std::vector<Int>>; // row-major
using IntVec = std::vector<Int>;
using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

// U * A * V = D with U, V unimodular and D diagonal with the divisibility
// chain d_1 | d_2 | ... ; Vinv = V^{-1}.
struct SmithResult {
    IntMat d, u, v, vinv;
    int rank = 0;
};
SmithResult smith_normal_form(const IntMat& a);

// Row-style Hermite normal form: echelon rows, positive pivots, entries
// above each pivot reduced into [0, pivot). Zero rows are dropped, so the
// result is the canonical basis of the row span.
IntMat hermite_normal_form(IntMat a);

// A sublattice of Z^n carried by its HNF basis; HNF canonicality makes
// lattice equality syntactic.
struct IntegerLattice {
    int ambient = 0;
    IntMat basis; // HNF rows, independent

    static IntegerLattice from_generators(int ambient, IntMat generators);
    static IntegerLattice full(int n);
    static IntegerLattice zero(int n);

    int rank() const { return static_cast<int>(basis.size()); }
    bool contains(const IntVec& v) const;
    bool contains_lattice(const IntegerLattice& other) const;
    // coordinates of v in the HNF basis, when v lies in the lattice
    std::optional<IntVec> coordinates(const IntVec& v) const;
    // [this : sub] for an equal-rank sublattice
    Int index_of_sublattice(const IntegerLattice& sub) const;

    bool operator==(const IntegerLattice& o) const = default;
};

// {x in Z^n : A x = 0}
IntegerLattice integer_kernel(const IntMat& a);

// Solution lattice of the mixed system: row i imposes A_i. x ≡ 0 (mod m_i),
// where m_i = 0 encodes the plain equality A_i . x = 0.
IntegerLattice congruence_kernel(const IntMat& a, const IntVec& moduli, int n);

// One integer solution of A x = b, if any.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

// One rational solution of A x = b, if any.
std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b);

// Basis of the rational null space of A.
RatMat rational_kernel(const RatMat& a);

Int determinant(const IntMat& a); // square matrices

IntVec mat_vec(const IntMat& a, const IntVec& x);
RatVec mat_vec(const RatMat& a, const RatVec& x);

} // namespace fusrep
