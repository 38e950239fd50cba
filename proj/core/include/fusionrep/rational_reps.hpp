#pragma once

#include "fusionrep/chartable.hpp"
#include "fusionrep/lattice.hpp"
#include "fusionrep/perm.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fusrep {

// Rational irreducible characters of a p-group: the trivial character plus
// the induced inflated augmentation characters over index-p pairs Q < P.
struct RationalIrreducibleBasis {
    GroupPtr group;
    std::vector<ClassFunction> characters;
    std::vector<std::string> provenance; // "trivial" or "P=<label> Q=<order>"
};

RationalIrreducibleBasis ritter_segal_basis(const SubgroupClassification& subs, long p);

// class indices whose representative subgroup is cyclic
std::vector<int> cyclic_subgroup_classes(const SubgroupClassification& subs);

// rows: cyclic subgroup classes; cols: basis characters; entries fixed_dim
struct DetectionMatrix {
    std::vector<int> cyclic_classes;
    IntMat entries;
};
// throws ConsistencyError when the matrix is singular
DetectionMatrix cyclic_detection_matrix(const SubgroupClassification& subs,
                                        const RationalIrreducibleBasis& basis);

// permutation character of a formal sum of coset spaces S/H
ClassFunction linearize(const GroupPtr& s,
                        const std::vector<std::pair<Subgroup, Int>>& orbits);

struct SchurOrbitReport {
    std::vector<int> orbit;  // complex irreducible indices of one Galois orbit
    long multiplier = 1;     // m with m * (orbit sum) rationally irreducible
    int rational_index = -1; // position in the rational basis
};
std::vector<SchurOrbitReport> schur_index_report(const CharacterTable& t,
                                                 const RationalIrreducibleBasis& basis);

} // namespace fusrep
