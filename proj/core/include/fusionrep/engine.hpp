#pragma once

#include "fusionrep/biset.hpp"
#include "fusionrep/chartable.hpp"
#include "fusionrep/fusion.hpp"
#include "fusionrep/rational_reps.hpp"
#include "fusionrep/repring.hpp"
#include "fusionrep/superclass.hpp"

#include <memory>
#include <optional>
#include <string>

namespace fusrep {

// Lazily computed, cached pipeline data for one fusion system instance.
class FusionContext {
  public:
    FusionContext(GroupPtr ambient, long p);
    FusionContext(GroupPtr ambient, Subgroup sylow, long p);

    const GroupPtr& ambient() const { return ambient_; }
    long prime() const { return p_; }

    const FusionSystem& fusion();
    const GroupPtr& s();
    const SubgroupClassification& subs(); // of the local copy of S
    const CharacterTable& table();
    const RationalIrreducibleBasis& rational();
    const IrreducibleBasis& basis(FieldTag f);
    BisetAlgebra& algebra();
    const std::vector<BisetPair>& pair_basis();
    const BisetElement& omega();
    const BisetElement& omega_min();
    const IntMat& dims(FieldTag f);       // rows: subgroup classes of S
    const IntegerLattice& stable(FieldTag f);
    const IntegerLattice& image(FieldTag f); // Dim of the stable sublattice
    const IntegerLattice& c_lattice();
    const IntegerLattice& cb_lattice();
    const IntegerLattice& cba_lattice();

  private:
    GroupPtr ambient_;
    Subgroup sylow_;
    long p_;
    std::optional<FusionSystem> fusion_;
    std::optional<CharacterTable> table_;
    std::optional<RationalIrreducibleBasis> rational_;
    std::optional<IrreducibleBasis> bases_[3];
    std::unique_ptr<BisetAlgebra> algebra_;
    std::optional<std::vector<BisetPair>> pair_basis_;
    std::optional<BisetElement> omega_, omega_min_;
    std::optional<IntMat> dims_[3];
    std::optional<IntegerLattice> stable_[3], image_[3];
    std::optional<IntegerLattice> c_, cb_, cba_;
};

// Fusion instance descriptor: "<preset>@<p>", e.g. "A4@2", "C5:C4@5"; the
// prime may be omitted when the ambient group is a p-group. A few aliases
// ("C5-semidirect-C4") are accepted. Optional "preset:" prefix.
FusionContext context_from_spec(const std::string& spec);

} // namespace fusrep
