#pragma once

#include "fusionrep/perm.hpp"

#include <string>
#include <vector>

namespace fusrep {

// A fusion morphism P -> Q between subgroups of the local copy of S,
// induced by conjugation with an ambient witness element.
struct FusionMorphism {
    Subgroup source; // subgroup of the local S group
    Subgroup target;
    std::vector<int> images; // images[i] = image of source.members[i]
    int witness = -1;        // ambient element index (diagnostic only)

    int apply(int local_elem) const;
    std::vector<int> image_members() const; // sorted
    bool is_identity_inclusion() const;
    // morphism identity is the map, never the witness
    bool same_map(const FusionMorphism& o) const {
        return source.members == o.source.members && images == o.images;
    }
};

struct AutFResult {
    GroupPtr group;  // automorphisms as permutations of the member positions
    Subgroup aut_s;  // the subgroup induced by N_S(P)
    std::vector<FusionMorphism> morphisms; // indexed like group elements? no: unsorted source list
};

struct SaturationVerdict {
    bool saturated = true;
    std::string witness; // human-readable description of the first failure
};

// The fusion system F_S(G). All subgroup and element data lives in a
// standalone local copy of S (regular representation); the embedding
// translates between local indices and ambient indices.
class FusionSystem {
  public:
    static FusionSystem build(const GroupPtr& ambient, const Subgroup& sylow, long p);

    const GroupPtr& ambient() const { return ambient_; }
    const Subgroup& sylow_in_ambient() const { return sylow_; }
    const GroupPtr& s() const { return local_.group; }
    long prime() const { return p_; }
    const EmbeddedGroup& embedding() const { return local_; }
    bool is_trivial() const { return ambient_->order() == sylow_.order(); }

    // subgroups of S up to S-conjugacy
    const SubgroupClassification& subgroup_classes() const { return subs_; }
    int f_class_of_subgroup_class(int s_class) const { return f_of_sub_class_[s_class]; }
    const std::vector<std::vector<int>>& subgroup_f_classes() const { return sub_f_classes_; }

    // element classes: S-conjugacy classes of the local group, fused
    int f_class_of_element_class(int s_elem_class) const { return f_of_elem_class_[s_elem_class]; }
    const std::vector<std::vector<int>>& element_f_classes() const { return elem_f_classes_; }

    // complete duplicate-free list of induced homomorphisms P -> Q
    std::vector<FusionMorphism> hom(const Subgroup& p, const Subgroup& q) const;
    std::vector<FusionMorphism> hom_to_s(const Subgroup& p) const;
    AutFResult aut(const Subgroup& p) const;

    SaturationVerdict check_saturation() const;

    bool fully_normalized(const Subgroup& p) const;
    bool fully_centralized(const Subgroup& p) const;

  private:
    GroupPtr ambient_;
    Subgroup sylow_;
    long p_ = 0;
    EmbeddedGroup local_;
    SubgroupClassification subs_;
    std::vector<int> f_of_sub_class_;
    std::vector<std::vector<int>> sub_f_classes_;
    std::vector<int> f_of_elem_class_;
    std::vector<std::vector<int>> elem_f_classes_;
};

FusionSystem build_fusion_system(const GroupPtr& g, const Subgroup& s, long p);

} // namespace fusrep
