#pragma once

#include "fusionrep/engine.hpp"

#include <string>
#include <vector>

namespace fusrep {

enum class RealizeStatus {
    Realized,
    NotRealizable,
    PreconditionFailed,
    FalsificationFlag, // contradicts a proved statement: implementation bug
};

std::string realize_status_name(RealizeStatus s);

struct RealizationResult {
    RealizeStatus status = RealizeStatus::Realized;
    IntVec witness;  // coordinates over the relevant character basis
    Int n = 1;       // scaling: Dim(witness) = n * f
    Int n_uniform = 0; // instance-independent bound on n (actual solver only)
    std::string diagnostics;
};

struct TheoremAVerdict {
    bool contained = false; // image inside the condition lattice
    bool equal = false;
    IntegerLattice image; // Dim of the stable real sublattice, over S-classes
    IntegerLattice cba;
};

// lattice equality Dim(R_R(F)) = C_ba(F)
TheoremAVerdict theorem_A_check(FusionContext& ctx);

// virtual realization: integer x in the stable real sublattice with Dim x = f
// (f given per subgroup class of S)
RealizationResult solve_virtual(FusionContext& ctx, const IntVec& f);

// actual realization of a multiple: N and nonneg coordinates over the
// rational irreducible basis with Dim = N*f. With weak_only, membership is
// checked against the elementary-abelian rank equality alone instead of the
// full dimension-function conditions.
RealizationResult solve_monotone(FusionContext& ctx, const IntVec& f, bool weak_only = false);

struct SurjectivityReport {
    bool finite = false;
    bool coprime_to_p = false;
    Int index = 0; // [C_b(F) : Dim(R_R(F))]
};
SurjectivityReport p_local_surjectivity_check(FusionContext& ctx);

// all lattice points with every coordinate in [0, bound]
std::vector<IntVec> lattice_points_in_box(const IntegerLattice& lat, const IntVec& bound);

// monotone members of the lattice with values in [0, bound]
std::vector<IntVec> monotone_functions(const IntegerLattice& lat,
                                       const SubgroupClassification& subs, long bound);

struct ExplorerEntry {
    IntVec f;
    bool realized = false;
    IntVec witness; // coordinates over the real irreducible basis
};

struct ExplorerReport {
    long bound = 0;
    std::vector<ExplorerEntry> entries;
    bool all_realized = true;
};

// searches an actual F-stable real representation with Dim = f (no scaling)
// for every monotone f in C_ba(F) with f(1) <= bound
ExplorerReport question_6_2_explorer(FusionContext& ctx, long bound);

struct WholeGroupDemoReport {
    std::vector<std::string> pp_labels; // prime-power subgroup class labels
    IntVec f;                           // per prime-power class
    bool in_DP = false;
    bool unique = false;
    RatVec solution; // over the ordinary irreducible basis of the group
    bool solution_has_negative = false; // hence no N*f is an actual character
    IntVec sylow_odd_witness;  // over the rational basis of the odd Sylow
    IntVec sylow_even_witness; // over the rational basis of the even Sylow
    bool sylow_restrictions_actual = false;
};

// the order-6 symmetric group instance: a monotone function satisfying all
// whole-group dimension conditions yet not realizable by any actual
// representation, while both Sylow restrictions are
WholeGroupDemoReport sigma3_nonrealizability_demo();

} // namespace fusrep
