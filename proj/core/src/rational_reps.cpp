#include "fusionrep/rational_reps.hpp"

#include "fusionrep/numbers.hpp"

#include <algorithm>

namespace fusrep {

RationalIrreducibleBasis ritter_segal_basis(const SubgroupClassification& subs, long p) {
    const GroupPtr& s = subs.group;
    if (!is_prime_power(s->order(), p))
        throw PreconditionError("rational basis construction requires a p-group");

    // Candidates: trivial, plus induced inflated augmentation characters of
    // the index-p pairs Q < P. Not every candidate is irreducible; the
    // irreducible ones are exactly the minimal multiples of Galois orbit
    // sums, and every rational irreducible appears among the candidates.
    std::vector<std::pair<ClassFunction, std::string>> candidates;
    candidates.emplace_back(trivial_character(s), "trivial");
    for (int c = 0; c < subs.class_count(); ++c) {
        const Subgroup& big = subs.class_rep(c);
        if (big.order() < p)
            continue;
        for (const auto& q : subgroups_of(big)) {
            if (q.order() * p != big.order() || !q.is_normal_in(big))
                continue;
            std::vector<Cyclo> vals;
            vals.reserve(big.members.size());
            for (int m : big.members)
                vals.emplace_back(Rat(q.contains(m) ? p - 1 : -1));
            candidates.emplace_back(induce_from_subgroup(big, vals),
                                    "P=" + subs.class_labels[c] +
                                        " Q_order=" + std::to_string(q.order()));
        }
    }

    CharacterTable t = character_table(s);
    auto orbits = galois_orbits(t);
    std::vector<Int> best_mult(orbits.size(), 0);
    std::vector<int> best_cand(orbits.size(), -1);
    for (size_t k = 0; k < candidates.size(); ++k) {
        IntVec coeffs = t.decompose(candidates[k].first);
        int orbit = -1;
        Int m = 0;
        bool clean = true;
        for (size_t o = 0; o < orbits.size() && clean; ++o) {
            Int v = coeffs[orbits[o][0]];
            for (int idx : orbits[o])
                if (coeffs[idx] != v)
                    clean = false;
            if (v != 0) {
                if (orbit >= 0)
                    clean = false; // spans several orbits: reducible
                orbit = static_cast<int>(o);
                m = v;
            }
        }
        if (!clean || orbit < 0 || m <= 0)
            continue;
        if (best_cand[orbit] < 0 || m < best_mult[orbit]) {
            best_mult[orbit] = m;
            best_cand[orbit] = static_cast<int>(k);
        }
    }

    RationalIrreducibleBasis out;
    out.group = s;
    for (size_t o = 0; o < orbits.size(); ++o) {
        if (best_cand[o] < 0)
            throw ConsistencyError("Galois orbit not covered by the induction catalog");
        out.characters.push_back(candidates[best_cand[o]].first);
        out.provenance.push_back(candidates[best_cand[o]].second);
    }

    if (out.characters.size() != cyclic_subgroup_classes(subs).size())
        throw ConsistencyError("rational irreducible count differs from the number "
                               "of cyclic subgroup classes");
    return out;
}

std::vector<int> cyclic_subgroup_classes(const SubgroupClassification& subs) {
    std::vector<int> out;
    for (int c = 0; c < subs.class_count(); ++c) {
        const Subgroup& rep = subs.class_rep(c);
        for (int m : rep.members)
            if (subs.group->element_order(m) == rep.order()) {
                out.push_back(c);
                break;
            }
    }
    return out;
}

DetectionMatrix cyclic_detection_matrix(const SubgroupClassification& subs,
                                        const RationalIrreducibleBasis& basis) {
    DetectionMatrix out;
    out.cyclic_classes = cyclic_subgroup_classes(subs);
    for (int c : out.cyclic_classes) {
        IntVec row;
        for (const auto& chi : basis.characters) {
            Rat d = fixed_dim(chi, subs.class_rep(c));
            if (d.get_den() != 1)
                throw ConsistencyError("fixed-subspace dimension is not an integer");
            row.push_back(d.get_num());
        }
        out.entries.push_back(std::move(row));
    }
    if (out.entries.size() != basis.characters.size() ||
        determinant(out.entries) == 0)
        throw ConsistencyError("cyclic detection matrix is singular");
    return out;
}

ClassFunction linearize(const GroupPtr& s,
                        const std::vector<std::pair<Subgroup, Int>>& orbits) {
    ClassFunction out(s, std::vector<Cyclo>(s->class_count(), Cyclo()));
    for (const auto& [h, mult] : orbits)
        out = out + permutation_character(h).scaled(Rat(mult));
    return out;
}

std::vector<SchurOrbitReport> schur_index_report(const CharacterTable& t,
                                                 const RationalIrreducibleBasis& basis) {
    std::vector<SchurOrbitReport> out;
    for (const auto& orbit : galois_orbits(t)) {
        ClassFunction sum = t.irreducibles[orbit[0]];
        for (size_t i = 1; i < orbit.size(); ++i)
            sum = sum + t.irreducibles[orbit[i]];
        SchurOrbitReport rep;
        rep.orbit = orbit;
        for (size_t j = 0; j < basis.characters.size() && rep.rational_index < 0; ++j) {
            Rat ratio = basis.characters[j].degree().rational_value() /
                        sum.degree().rational_value();
            if (ratio.get_den() != 1 || ratio <= 0)
                continue;
            long m = static_cast<long>(ratio.get_num().get_si());
            if (sum.scaled(Rat(m)) == basis.characters[j]) {
                rep.multiplier = m;
                rep.rational_index = static_cast<int>(j);
            }
        }
        if (rep.rational_index < 0)
            throw ConsistencyError("Galois orbit sum matches no rational irreducible");
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace fusrep
