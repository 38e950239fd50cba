#pragma once

#include "fusionrep/chartable.hpp"
#include "fusionrep/fusion.hpp"
#include "fusionrep/lattice.hpp"
#include "fusionrep/numbers.hpp"
#include "fusionrep/perm.hpp"

#include <map>
#include <string>
#include <vector>

namespace fusrep {

// Basis orbit type [Q, psi] of the double Burnside ring of S: Q <= S and
// psi an injective homomorphism Q -> S, stored as parallel member/image
// lists. Pairs are kept in canonical form under (S,S)-conjugacy.
struct BisetPair {
    std::vector<int> q;   // sorted members of Q
    std::vector<int> psi; // psi[i] = image of q[i]

    bool operator<(const BisetPair& o) const {
        if (q != o.q)
            return q < o.q;
        return psi < o.psi;
    }
    bool operator==(const BisetPair& o) const = default;
};

// Rational linear combination of canonical basis pairs.
struct BisetElement {
    std::map<BisetPair, Rat> coeffs;

    Rat coeff(const BisetPair& p) const;
    void add(const BisetPair& p, const Rat& c); // accumulates and prunes zeros
    BisetElement operator+(const BisetElement& o) const;
    BisetElement operator-(const BisetElement& o) const;
    BisetElement operator*(const Rat& c) const;
    bool operator==(const BisetElement& o) const { return coeffs == o.coeffs; }
    bool is_zero() const { return coeffs.empty(); }
};

// A concrete finite (S,S)-biset: explicit points with commuting actions.
struct ConcreteBiset {
    GroupPtr s;
    int size = 0;
    std::vector<std::vector<int>> left;  // left[e][pt] = e . pt
    std::vector<std::vector<int>> right; // right[e][pt] = pt . e
};

struct CharacteristicVerdict {
    bool ok = true;
    std::string reason;
};

// The double Burnside algebra A(S,S) with p-local coefficients.
class BisetAlgebra {
  public:
    BisetAlgebra(GroupPtr s, long p);

    const GroupPtr& s() const { return s_; }
    long prime() const { return p_; }

    BisetPair canonical_pair(const std::vector<int>& q_members,
                             const std::vector<int>& images) const;
    BisetPair identity_pair() const; // [S, id]
    BisetPair inclusion_pair(const Subgroup& q) const;
    BisetPair morphism_pair(const FusionMorphism& phi) const;
    static BisetElement basis(const BisetPair& p);

    // composition: apply b first, then a
    BisetElement compose(const BisetElement& a, const BisetElement& b) const;

    // opposite biset: [Q,psi] -> [psi(Q), psi^{-1}]
    BisetPair op_pair(const BisetPair& p) const;
    BisetElement op(const BisetElement& x) const;

    Rat cardinality(const BisetElement& x) const; // |X| with |[Q,psi]| = |S|^2/|Q|
    Rat augmentation(const BisetElement& x) const { return cardinality(x) / Rat(s_->order()); }

    // explicit finite-set constructions (also the composition oracle)
    ConcreteBiset concrete(const BisetPair& p) const;
    ConcreteBiset tensor(const ConcreteBiset& a, const ConcreteBiset& b) const;
    BisetElement decompose(const ConcreteBiset& x) const;
    BisetElement compose_by_tensor(const BisetPair& a, const BisetPair& b) const;

    // action on class functions of S: [Q,psi] . chi = Ind_Q^S Res_psi chi
    ClassFunction act(const BisetElement& x, const ClassFunction& chi) const;
    // action on super class functions given as values per subgroup class
    std::vector<Rat> act_super(const BisetElement& x, const std::vector<Rat>& values,
                               const SubgroupClassification& subs) const;

  private:
    GroupPtr s_;
    long p_;
    mutable std::map<BisetPair, BisetPair> canon_cache_;
    mutable std::map<std::pair<BisetPair, BisetPair>, BisetElement> prod_cache_;

    const BisetElement& basis_product(const BisetPair& a, const BisetPair& b) const;
};

// decomposition of G as an (S,S)-biset via double cosets SgS
BisetElement group_as_biset(const BisetAlgebra& alg, const GroupPtr& g,
                            const Subgroup& sylow, const EmbeddedGroup& emb);
BisetElement group_as_biset(const BisetAlgebra& alg, const FusionSystem& f);

// the complete canonical basis of A(S,S): every [Q,psi] with psi any
// injective homomorphism, up to (S,S)-conjugacy
std::vector<BisetPair> all_pair_basis(const BisetAlgebra& alg,
                                      const SubgroupClassification& subs);

// canonical pairs [Q,psi] with psi a fusion morphism, sorted
std::vector<BisetPair> fusion_pair_basis(const BisetAlgebra& alg, const FusionSystem& f);

// deduplicated stability test pairs: ([P,phi], [P,incl]) per morphism
std::vector<std::pair<BisetPair, BisetPair>> stability_test_pairs(const BisetAlgebra& alg,
                                                                  const FusionSystem& f);

CharacteristicVerdict is_characteristic(const BisetAlgebra& alg, const BisetElement& x,
                                        const FusionSystem& f);

// lattice of bi-stable integer combinations of the fusion pair basis
IntegerLattice stable_biset_lattice(const BisetAlgebra& alg, const FusionSystem& f,
                                    const std::vector<BisetPair>& basis);

BisetElement characteristic_idempotent(const BisetAlgebra& alg, const FusionSystem& f);

BisetElement minimal_characteristic_biset(const BisetAlgebra& alg, const FusionSystem& f);

// sum of coefficients over (N_S(Q),S)-classes of maps for the class of Q;
// equals 1 for Q = S and 0 otherwise when x is the characteristic idempotent
Rat coefficient_sum(const BisetAlgebra& alg, const BisetElement& x, const Subgroup& q);

} // namespace fusrep
