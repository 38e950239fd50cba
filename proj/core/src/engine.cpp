#include "fusionrep/engine.hpp"

#include <algorithm>

namespace fusrep {

FusionContext::FusionContext(GroupPtr ambient, long p)
    : FusionContext(ambient, sylow_subgroup(ambient, p), p) {}

FusionContext::FusionContext(GroupPtr ambient, Subgroup sylow, long p)
    : ambient_(std::move(ambient)), sylow_(std::move(sylow)), p_(p) {}

const FusionSystem& FusionContext::fusion() {
    if (!fusion_)
        fusion_ = FusionSystem::build(ambient_, sylow_, p_);
    return *fusion_;
}

const GroupPtr& FusionContext::s() { return fusion().s(); }

const SubgroupClassification& FusionContext::subs() { return fusion().subgroup_classes(); }

const CharacterTable& FusionContext::table() {
    if (!table_)
        table_ = character_table(s());
    return *table_;
}

const RationalIrreducibleBasis& FusionContext::rational() {
    if (!rational_)
        rational_ = ritter_segal_basis(subs(), p_);
    return *rational_;
}

const IrreducibleBasis& FusionContext::basis(FieldTag f) {
    auto& slot = bases_[static_cast<int>(f)];
    if (!slot)
        slot = irreducible_basis(f, table(), f == FieldTag::Q ? &rational() : nullptr);
    return *slot;
}

BisetAlgebra& FusionContext::algebra() {
    if (!algebra_)
        algebra_ = std::make_unique<BisetAlgebra>(s(), p_);
    return *algebra_;
}

const std::vector<BisetPair>& FusionContext::pair_basis() {
    if (!pair_basis_)
        pair_basis_ = fusion_pair_basis(algebra(), fusion());
    return *pair_basis_;
}

const BisetElement& FusionContext::omega() {
    if (!omega_)
        omega_ = characteristic_idempotent(algebra(), fusion());
    return *omega_;
}

const BisetElement& FusionContext::omega_min() {
    if (!omega_min_)
        omega_min_ = minimal_characteristic_biset(algebra(), fusion());
    return *omega_min_;
}

const IntMat& FusionContext::dims(FieldTag f) {
    auto& slot = dims_[static_cast<int>(f)];
    if (!slot)
        slot = dim_matrix(basis(f), subs());
    return *slot;
}

const IntegerLattice& FusionContext::stable(FieldTag f) {
    auto& slot = stable_[static_cast<int>(f)];
    if (!slot)
        slot = stable_sublattice(basis(f), fusion());
    return *slot;
}

const IntegerLattice& FusionContext::image(FieldTag f) {
    auto& slot = image_[static_cast<int>(f)];
    if (!slot) {
        const IntMat& dm = dims(f);
        IntMat gens;
        for (const auto& v : stable(f).basis)
            gens.push_back(mat_vec(dm, v));
        slot = IntegerLattice::from_generators(static_cast<int>(dm.size()), std::move(gens));
    }
    return *slot;
}

const IntegerLattice& FusionContext::c_lattice() {
    if (!c_)
        c_ = lattice_C(fusion());
    return *c_;
}

const IntegerLattice& FusionContext::cb_lattice() {
    if (!cb_)
        cb_ = lattice_Cb(fusion());
    return *cb_;
}

const IntegerLattice& FusionContext::cba_lattice() {
    if (!cba_)
        cba_ = lattice_Cba(fusion());
    return *cba_;
}

FusionContext context_from_spec(const std::string& spec) {
    std::string body = spec;
    if (body.rfind("preset:", 0) == 0)
        body = body.substr(7);
    if (body == "C5-semidirect-C4")
        body = "C5:C4@5";
    std::string name = body;
    long p = 0;
    if (auto at = body.rfind('@'); at != std::string::npos) {
        name = body.substr(0, at);
        p = std::stol(body.substr(at + 1));
    }
    GroupPtr g = preset_group(name);
    if (p == 0) {
        auto primes = prime_factors(g->order());
        if (primes.size() != 1)
            throw PreconditionError("fusion spec '" + spec +
                                    "' needs an explicit prime, e.g. '" + name + "@2'");
        p = primes[0];
    }
    return FusionContext(g, p);
}

} // namespace fusrep
