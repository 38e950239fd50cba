#pragma once

#include "fusionrep/cyclotomic.hpp"
#include "fusionrep/fusion.hpp"
#include "fusionrep/perm.hpp"

#include <vector>

namespace fusrep {

// Exact class function: one value per element conjugacy class.
struct ClassFunction {
    GroupPtr group;
    std::vector<Cyclo> values;

    ClassFunction() = default;
    ClassFunction(GroupPtr g, std::vector<Cyclo> vals);

    const Cyclo& at_class(int c) const { return values[c]; }
    const Cyclo& at_element(int e) const { return values[group->class_of(e)]; }
    Cyclo degree() const { return at_element(group->identity_index()); }

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    ClassFunction operator*(const ClassFunction& o) const; // pointwise (tensor)
    ClassFunction scaled(const Rat& q) const;
    ClassFunction conjugate() const;
    ClassFunction galois(long k) const; // applied valuewise

    bool is_zero() const;
    bool is_rational_valued() const;
    bool operator==(const ClassFunction& o) const;

    // every value rewritten at the given cyclotomic level
    ClassFunction at_level(long n) const;
};

ClassFunction trivial_character(const GroupPtr& g);
ClassFunction regular_character(const GroupPtr& g);
// character of the permutation module on left cosets G/H
ClassFunction permutation_character(const Subgroup& h);

Cyclo inner_product(const ClassFunction& a, const ClassFunction& b);

// (1/|H|) sum of chi over H: dimension of the H-fixed subspace
Rat fixed_dim(const ClassFunction& chi, const Subgroup& h);

struct CharacterTable {
    GroupPtr group;
    std::vector<ClassFunction> irreducibles;
    std::vector<long> degrees;
    long conductor = 1; // uniform value level, divides exp(group)

    int size() const { return static_cast<int>(irreducibles.size()); }
    // coordinates of a virtual character in the irreducible basis
    std::vector<Int> decompose(const ClassFunction& chi) const;
    ClassFunction combine(const std::vector<Int>& coeffs) const;
};

// Irreducible table via monomial induction (linear characters of all
// subgroups, inner-product peeling). Complete for p-groups and for every
// monomial group; throws ConsistencyError if peeling stalls.
CharacterTable character_table(const GroupPtr& g);

// Linear characters of an arbitrary subgroup, as value vectors indexed by
// position in h.members.
std::vector<std::vector<Cyclo>> linear_characters(const Subgroup& h);

// Induced character: values given per position in h.members.
ClassFunction induce_from_subgroup(const Subgroup& h, const std::vector<Cyclo>& values);

// Restriction of chi (on the fusion system's S) along a fusion morphism,
// returned on the standalone copy of the source.
ClassFunction restrict_along(const ClassFunction& chi, const FusionMorphism& phi);
ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& p);

// chi constant on F-conjugacy classes of elements
bool is_F_stable(const ClassFunction& chi, const FusionSystem& f);
// the definitionally direct check: res_phi chi = res_P chi for every morphism
bool is_F_stable_by_restrictions(const ClassFunction& chi, const FusionSystem& f);

enum class TargetField { Rationals, Reals };

// Sum of chi over Gal(K(zeta_exp)/K) for K the target field.
ClassFunction galois_transfer(const ClassFunction& chi, TargetField k);

int frobenius_schur(const ClassFunction& chi);

// Real irreducible characters: chi (indicator 1), chi + conj(chi)
// (indicator 0, one per conjugate pair), 2 chi (indicator -1).
std::vector<ClassFunction> real_irreducible_characters(const CharacterTable& t);

// Galois orbits of the table over Q, as index lists.
std::vector<std::vector<int>> galois_orbits(const CharacterTable& t);

} // namespace fusrep
