#pragma once

#include "fusionrep/errors.hpp"

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace fusrep {

struct Permutation {
    std::vector<int> images; // 0-based, length = degree

    Permutation() = default;
    explicit Permutation(std::vector<int> imgs);

    static Permutation identity(int degree);
    // Cycles use 0-based point indices; points not mentioned are fixed.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int x) const { return images[x]; }
    bool is_identity() const;

    // (a * b)(x) = a(b(x))
    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;

    auto operator<=>(const Permutation&) const = default;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct GroupBounds {
    int max_degree = 64;
    long max_order = 10000;
};

// A finite permutation group carried by its full, canonically sorted
// element list. Immutable after construction.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
  public:
    static GroupPtr enumerate(std::vector<Permutation> generators,
                              std::string name = "",
                              GroupBounds bounds = {});

    int degree() const { return degree_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::string& name() const { return name_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(int i) const { return elements_[i]; }

    int index_of(const Permutation& p) const;
    int identity_index() const { return identity_index_; }
    int mul(int a, int b) const;
    int inv(int a) const;
    int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
    long element_order(int a) const;
    int power(int a, long e) const;

    // Element conjugacy classes, canonically ordered.
    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int class_of(int element) const { return class_of_[element]; }
    int class_count() const { return static_cast<int>(classes_.size()); }

    // Independent order computation via a stabilizer chain (cross-check).
    long order_by_stabilizer_chain() const;

  private:
    FiniteGroup() = default;
    void compute_classes();

    int degree_ = 0;
    std::string name_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::map<Permutation, int> index_;
    std::vector<int> inverse_;
    int identity_index_ = 0;
    std::vector<int> mul_table_; // only for small groups
    bool has_table_ = false;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

struct Subgroup {
    GroupPtr parent;
    std::vector<int> members; // sorted element indices into parent

    Subgroup() = default;
    Subgroup(GroupPtr g, std::vector<int> m);

    static Subgroup trivial(const GroupPtr& g);
    static Subgroup full(const GroupPtr& g);
    static Subgroup generated(const GroupPtr& g, const std::vector<int>& gens);

    long order() const { return static_cast<long>(members.size()); }
    bool contains(int e) const;
    bool contains_subgroup(const Subgroup& other) const;
    bool is_normal_in(const Subgroup& bigger) const;
    bool is_p_group(long p) const;
    Subgroup conjugated_by(int g) const;
    long exponent() const;

    bool operator==(const Subgroup& o) const { return members == o.members; }
    bool operator<(const Subgroup& o) const;
};

Subgroup normalizer(const Subgroup& ambient, const Subgroup& sub);
Subgroup centralizer(const Subgroup& ambient, const Subgroup& sub);
Subgroup normalizer(const GroupPtr& g, const Subgroup& sub);
Subgroup centralizer(const GroupPtr& g, const Subgroup& sub);
Subgroup center(const GroupPtr& g);
Subgroup commutator_subgroup(const Subgroup& h);

// Standalone copy of a subgroup in its regular representation, with the
// element index translation in both directions.
struct EmbeddedGroup {
    GroupPtr group;                        // degree = |H|
    std::vector<int> to_parent;            // local element index -> parent index
    std::unordered_map<int, int> to_local; // parent index -> local index
};
EmbeddedGroup as_abstract_group(const Subgroup& h, const std::string& name = "");

struct QuotientResult {
    GroupPtr quotient;              // permutation action on left cosets
    std::vector<int> coset_of;      // parent element index -> quotient point
    std::vector<int> quotient_elem; // parent element index -> quotient element index
};
QuotientResult quotient_group(const GroupPtr& g, const Subgroup& normal);

// Cyclic decomposition of a finite abelian group: A = <b_1> x ... x <b_k>
// with |b_j| = orders[j]; exponents maps every element to its tuple.
struct AbelianDecomposition {
    std::vector<long> orders;
    std::vector<long> invariant_factors; // nontrivial factors d_1 | d_2 | ...
    std::vector<int> basis;              // element indices
    std::vector<std::vector<long>> exponents; // element index -> tuple
};
AbelianDecomposition abelian_decomposition(const GroupPtr& a);

// Invariant factors of H/[H,H].
std::vector<long> abelianization_invariants(const Subgroup& h);

struct SubgroupBounds {
    long max_order = 512;
};

struct SubgroupClassification {
    GroupPtr group;
    std::vector<Subgroup> subgroups;        // canonically sorted
    std::vector<std::vector<int>> classes;  // conjugacy classes, canonical order
    std::vector<int> class_of;              // subgroup index -> class index
    std::vector<std::string> class_labels;

    int find(const Subgroup& s) const;           // -1 when absent
    int class_index_of(const Subgroup& s) const; // throws when absent
    const Subgroup& class_rep(int c) const { return subgroups[classes[c][0]]; }
    int class_count() const { return static_cast<int>(classes.size()); }
};

SubgroupClassification enumerate_subgroups(const GroupPtr& g, SubgroupBounds bounds = {});

// All subgroups of the given subgroup (computed inside the parent group).
std::vector<Subgroup> subgroups_of(const Subgroup& h);

Subgroup sylow_subgroup(const GroupPtr& g, long p);

// Preset catalog (C_n, CnxCm, D_2n, Q8, SD16, Cp:Cm, A4, A6, S3, S4,
// SL2(3), PGL3(3)). Throws PreconditionError for unknown names.
GroupPtr preset_group(const std::string& name);
std::vector<std::string> preset_names();

} // namespace fusrep
