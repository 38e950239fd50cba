#pragma once

#include "fusionrep/chartable.hpp"
#include "fusionrep/fusion.hpp"
#include "fusionrep/lattice.hpp"
#include "fusionrep/rational_reps.hpp"

#include <string>
#include <vector>

namespace fusrep {

enum class FieldTag { Q, R, C };

std::string field_name(FieldTag f);

// Irreducible character basis of R_K(S) for K = Q, R, or C, together with
// the integer coordinates of each basis character over the complex table.
struct IrreducibleBasis {
    FieldTag field = FieldTag::C;
    GroupPtr group;
    std::vector<ClassFunction> characters;
    std::vector<std::string> labels;
    IntMat complex_coords; // rows: basis characters, cols: complex irreducibles

    int size() const { return static_cast<int>(characters.size()); }
};

// rs is required for field Q and ignored otherwise
IrreducibleBasis irreducible_basis(FieldTag field, const CharacterTable& t,
                                   const RationalIrreducibleBasis* rs = nullptr);

ClassFunction combine(const IrreducibleBasis& b, const IntVec& coords);

// integer coordinates of chi over the basis; throws ConsistencyError when
// chi does not lie in the integral span
IntVec decompose_in_basis(const IrreducibleBasis& b, const CharacterTable& t,
                          const ClassFunction& chi);

// rows: subgroup classes, cols: basis characters, entries dim of the fixed
// subspace of the class representative
IntMat dim_matrix(const IrreducibleBasis& b, const SubgroupClassification& subs);

// rows collapsed to fusion classes of subgroup classes
IntMat dim_matrix_f(const IrreducibleBasis& b, const FusionSystem& f);

// sublattice of Z^{#basis} of vectors whose character is constant on fusion
// classes of elements
IntegerLattice stable_sublattice(const IrreducibleBasis& b, const FusionSystem& f);

// tensor product, re-expressed in the basis
IntVec product(const IrreducibleBasis& b, const CharacterTable& t, const IntVec& x,
               const IntVec& y);

} // namespace fusrep
