#pragma once

#include "fusionrep/fusion.hpp"
#include "fusionrep/lattice.hpp"
#include "fusionrep/perm.hpp"

#include <string>
#include <vector>

namespace fusrep {

enum class SuperDomain { SClasses, FClasses, PrimePower };

// Integer-valued function on subgroup classes, one value per class in the
// canonical class order of its domain.
struct SuperClassFunction {
    SuperDomain domain = SuperDomain::SClasses;
    std::vector<Int> values;
};

// One linear condition on class values: coeffs . f == 0 (modulus 0) or
// coeffs . f ≡ 0 (mod modulus).
struct ConditionRow {
    IntVec coeffs;
    Int modulus;
    std::string label;
};

struct ConditionVerdict {
    bool ok = true;
    std::vector<std::string> witnesses;
};

ConditionVerdict check_rows(const std::vector<ConditionRow>& rows,
                            const std::vector<Int>& values);
IntegerLattice rows_to_lattice(const std::vector<ConditionRow>& rows, int n);

// dimension-function conditions on a p-group, rows over subgroup classes:
//  (i)  H/L = Z/p, p odd: f(L) - f(H) even
//  (ii) H/L = Z/p x Z/p with intermediates H_i:
//       f(L) - f(H) = sum_i (f(H_i) - f(H))
//  (iii) L < H < N <= N_S(L), H/L = Z/2: f(L) - f(H) even when N/L = Z/4,
//        divisible by 4 when N/L = Q8
std::vector<ConditionRow> borel_smith_rows(const SubgroupClassification& subs, long p);

// f constant on fusion classes of subgroup classes
std::vector<ConditionRow> stability_rows(const FusionSystem& f);

// Artin-type condition: for L < H with H/L = Z/p and phi in Aut_F(H) with
// phi(L) = L inducing an automorphism of order m on H/L: f(L) ≡ f(H) mod m
std::vector<ConditionRow> fusion_artin_rows(const FusionSystem& f, bool cyclic_only = false);

ConditionVerdict check_borel_smith(const SubgroupClassification& subs, long p,
                                   const std::vector<Int>& values);
ConditionVerdict check_fusion_artin(const FusionSystem& f, const std::vector<Int>& values);

// lattices over the subgroup classes of S
IntegerLattice lattice_C(const FusionSystem& f);   // stability only
IntegerLattice lattice_Cb(const FusionSystem& f);  // + dimension-function conditions
// + Artin rows; internally recomputed with cyclic sources only and the two
// lattices are asserted equal
IntegerLattice lattice_Cba(const FusionSystem& f);
IntegerLattice borel_smith_lattice(const SubgroupClassification& subs, long p);

// conjugacy classes of prime-power-order subgroups of an arbitrary group
struct PrimePowerClasses {
    GroupPtr group;
    SubgroupClassification subs;  // full classification of the group
    std::vector<int> pp_classes;  // class indices of prime-power classes
    std::vector<int> pp_index_of; // full class index -> position, -1 otherwise
    std::vector<std::string> labels;

    int count() const { return static_cast<int>(pp_classes.size()); }
    const Subgroup& rep(int i) const { return subs.class_rep(pp_classes[i]); }
    int class_index_of(const Subgroup& s) const;
};
PrimePowerClasses prime_power_classes(const GroupPtr& g);

// congruence for chains L < H < M <= N_G(L) with H a p-group, H/L = Z/p and
// M/H = Z/q^r acting on H/L with kernel of order q^l: f(L) ≡ f(H) mod q^{r-l}
std::vector<ConditionRow> bauer_rows(const PrimePowerClasses& pp);
// dimension-function conditions applied inside one Sylow subgroup per prime
std::vector<ConditionRow> borel_smith_rows_on_sylows(const PrimePowerClasses& pp);

ConditionVerdict check_bauer(const PrimePowerClasses& pp, const std::vector<Int>& values);
IntegerLattice lattice_DP(const PrimePowerClasses& pp);

// f(K) >= f(H) >= 0 whenever some conjugate of K lies in H
bool monotone_check(const SubgroupClassification& subs, const std::vector<Int>& values);

// extend values on subgroup classes of the Sylow group to all prime-power
// classes: p-subgroups take the value of a conjugate inside S, q-subgroups
// for q != p take f(1)
std::vector<Int> extend_to_prime_power(const FusionSystem& f, const std::vector<Int>& s_values,
                                       const PrimePowerClasses& pp);

// translations between F-class values and S-class values
std::vector<Int> f_to_s_values(const FusionSystem& f, const std::vector<Int>& f_values);
// fails (nullopt) when the function is not constant on fusion classes
std::optional<std::vector<Int>> s_to_f_values(const FusionSystem& f,
                                              const std::vector<Int>& s_values);

} // namespace fusrep
