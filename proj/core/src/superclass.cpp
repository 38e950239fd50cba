#include "fusionrep/superclass.hpp"

#include "fusionrep/numbers.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace fusrep {

namespace {

struct RowSink {
    std::set<std::pair<IntVec, Int>> seen;
    std::vector<ConditionRow> rows;

    void add(IntVec coeffs, Int modulus, std::string label) {
        if (!seen.insert({coeffs, modulus}).second)
            return;
        rows.push_back({std::move(coeffs), std::move(modulus), std::move(label)});
    }
};

bool is_cyclic_group(const GroupPtr& g) {
    for (long e = 0; e < g->order(); ++e)
        if (g->element_order(static_cast<int>(e)) == g->order())
            return true;
    return false;
}

int involution_count(const GroupPtr& g) {
    int c = 0;
    for (long e = 0; e < g->order(); ++e)
        if (g->element_order(static_cast<int>(e)) == 2)
            ++c;
    return c;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<int> m;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                          b.members.end(), std::back_inserter(m));
    return Subgroup(a.parent, m);
}

// dimension-function conditions for chains inside one p-subgroup `universe`
// of the ambient group, rows expressed through the supplied class indexer
void bs_rows_in(const GroupPtr& g, const Subgroup& universe, long p,
                const std::function<int(const Subgroup&)>& cls, int n, RowSink& sink) {
    auto all = subgroups_of(universe);
    for (const auto& h : all) {
        auto inside = subgroups_of(h);
        for (const auto& l : inside) {
            if (p % 2 == 1 && l.order() * p == h.order() && l.is_normal_in(h)) {
                IntVec row(n, 0);
                row[cls(l)] += 1;
                row[cls(h)] -= 1;
                sink.add(std::move(row), 2, "index-p step inside a p-group, p odd");
            }
            if (l.order() * p * p == h.order() && l.is_normal_in(h)) {
                bool elem_abelian = true;
                for (int x : h.members)
                    if (!l.contains(g->power(x, p))) {
                        elem_abelian = false;
                        break;
                    }
                if (!elem_abelian)
                    continue;
                std::vector<const Subgroup*> mids;
                for (const auto& m : inside)
                    if (m.order() == l.order() * p && m.contains_subgroup(l))
                        mids.push_back(&m);
                if (static_cast<long>(mids.size()) != p + 1)
                    throw ConsistencyError("elementary abelian quotient with wrong "
                                           "number of intermediate subgroups");
                IntVec row(n, 0);
                row[cls(l)] += 1;
                row[cls(h)] += p;
                for (const Subgroup* m : mids)
                    row[cls(*m)] -= 1;
                sink.add(std::move(row), 0, "rank-two elementary abelian quotient");
            }
        }
    }
    if (universe.order() % 2 != 0)
        return;
    for (const auto& l : all) {
        Subgroup norm = intersect(normalizer(g, l), universe);
        for (const auto& nn : subgroups_of(norm)) {
            if (!nn.contains_subgroup(l) || !l.is_normal_in(nn))
                continue;
            long q = nn.order() / l.order();
            if (q != 4 && q != 8)
                continue;
            EmbeddedGroup ng = as_abstract_group(nn);
            std::vector<int> l_loc;
            for (int m : l.members)
                l_loc.push_back(ng.to_local.at(m));
            std::sort(l_loc.begin(), l_loc.end());
            QuotientResult qr = quotient_group(ng.group, Subgroup(ng.group, l_loc));
            Int modulus;
            if (q == 4 && is_cyclic_group(qr.quotient))
                modulus = 2;
            else if (q == 8 && !is_cyclic_group(qr.quotient) &&
                     involution_count(qr.quotient) == 1)
                modulus = 4;
            else
                continue;
            // H = preimage of the unique order-2 subgroup of N/L
            int z = -1;
            for (long e = 0; e < qr.quotient->order(); ++e)
                if (qr.quotient->element_order(static_cast<int>(e)) == 2)
                    z = static_cast<int>(e);
            std::vector<int> h_members;
            for (int m : nn.members) {
                int qe = qr.quotient_elem[ng.to_local.at(m)];
                if (qe == qr.quotient->identity_index() || qe == z)
                    h_members.push_back(m);
            }
            Subgroup h(g, h_members);
            IntVec row(n, 0);
            row[cls(l)] += 1;
            row[cls(h)] -= 1;
            sink.add(std::move(row), modulus,
                     modulus == 2 ? "order-2 step under a Z/4 overgroup"
                                  : "order-2 step under a Q8 overgroup");
        }
    }
}

} // namespace

ConditionVerdict check_rows(const std::vector<ConditionRow>& rows,
                            const std::vector<Int>& values) {
    ConditionVerdict v;
    for (const auto& r : rows) {
        Int s = 0;
        for (size_t i = 0; i < r.coeffs.size(); ++i)
            s += r.coeffs[i] * values[i];
        bool pass = r.modulus == 0 ? s == 0 : int_mod(s, r.modulus) == 0;
        if (!pass) {
            v.ok = false;
            std::ostringstream os;
            os << r.label << ": value " << s.get_str()
               << (r.modulus == 0 ? " != 0" : " not divisible by " + r.modulus.get_str());
            v.witnesses.push_back(os.str());
        }
    }
    return v;
}

IntegerLattice rows_to_lattice(const std::vector<ConditionRow>& rows, int n) {
    if (rows.empty())
        return IntegerLattice::full(n);
    IntMat a;
    IntVec moduli;
    for (const auto& r : rows) {
        a.push_back(r.coeffs);
        moduli.push_back(r.modulus);
    }
    return congruence_kernel(a, moduli, n);
}

std::vector<ConditionRow> borel_smith_rows(const SubgroupClassification& subs, long p) {
    RowSink sink;
    auto cls = [&subs](const Subgroup& s) { return subs.class_index_of(s); };
    bs_rows_in(subs.group, Subgroup::full(subs.group), p, cls, subs.class_count(), sink);
    return std::move(sink.rows);
}

std::vector<ConditionRow> stability_rows(const FusionSystem& f) {
    int n = f.subgroup_classes().class_count();
    std::vector<ConditionRow> rows;
    for (const auto& fc : f.subgroup_f_classes())
        for (size_t i = 1; i < fc.size(); ++i) {
            IntVec row(n, 0);
            row[fc[0]] += 1;
            row[fc[i]] -= 1;
            rows.push_back({std::move(row), 0, "constancy on a fusion class"});
        }
    return rows;
}

std::vector<ConditionRow> fusion_artin_rows(const FusionSystem& f, bool cyclic_only) {
    const auto& subs = f.subgroup_classes();
    const GroupPtr& sl = f.s();
    long p = f.prime();
    int n = subs.class_count();
    RowSink sink;
    for (int c = 0; c < n; ++c) {
        const Subgroup& h = subs.class_rep(c);
        if (h.order() < p)
            continue;
        if (cyclic_only) {
            bool cyc = false;
            for (int m : h.members)
                if (sl->element_order(m) == h.order())
                    cyc = true;
            if (!cyc)
                continue;
        }
        AutFResult autf = f.aut(h);
        for (const auto& l : subgroups_of(h)) {
            if (l.order() * p != h.order() || !l.is_normal_in(h))
                continue;
            int h0 = -1;
            for (int m : h.members)
                if (!l.contains(m)) {
                    h0 = m;
                    break;
                }
            for (const auto& phi : autf.morphisms) {
                bool fixes_l = true;
                for (int m : l.members)
                    if (!l.contains(phi.apply(m))) {
                        fixes_l = false;
                        break;
                    }
                if (!fixes_l)
                    continue;
                // phi(h0) = h0^k mod L on the cyclic quotient of order p
                long k = 0;
                int ph = phi.apply(h0);
                for (long cand = 1; cand < p; ++cand)
                    if (l.contains(sl->mul(ph, sl->inv(sl->power(h0, cand))))) {
                        k = cand;
                        break;
                    }
                if (k == 0)
                    throw ConsistencyError("automorphism does not act on the quotient");
                long m = 1;
                long cur = k % p;
                while (cur != 1) {
                    cur = (cur * k) % p;
                    ++m;
                }
                if (m <= 1)
                    continue;
                IntVec row(n, 0);
                row[subs.class_index_of(l)] += 1;
                row[c] -= 1;
                sink.add(std::move(row), m, "fusion automorphism of order " +
                                                std::to_string(m) + " on an index-p step");
            }
        }
    }
    return std::move(sink.rows);
}

ConditionVerdict check_borel_smith(const SubgroupClassification& subs, long p,
                                   const std::vector<Int>& values) {
    return check_rows(borel_smith_rows(subs, p), values);
}

ConditionVerdict check_fusion_artin(const FusionSystem& f, const std::vector<Int>& values) {
    return check_rows(fusion_artin_rows(f), values);
}

IntegerLattice lattice_C(const FusionSystem& f) {
    return rows_to_lattice(stability_rows(f), f.subgroup_classes().class_count());
}

IntegerLattice lattice_Cb(const FusionSystem& f) {
    auto rows = stability_rows(f);
    auto bs = borel_smith_rows(f.subgroup_classes(), f.prime());
    rows.insert(rows.end(), bs.begin(), bs.end());
    return rows_to_lattice(rows, f.subgroup_classes().class_count());
}

IntegerLattice lattice_Cba(const FusionSystem& f) {
    int n = f.subgroup_classes().class_count();
    auto rows = stability_rows(f);
    auto bs = borel_smith_rows(f.subgroup_classes(), f.prime());
    rows.insert(rows.end(), bs.begin(), bs.end());
    auto base = rows;
    auto artin = fusion_artin_rows(f, false);
    rows.insert(rows.end(), artin.begin(), artin.end());
    IntegerLattice full = rows_to_lattice(rows, n);
    auto artin_cyc = fusion_artin_rows(f, true);
    base.insert(base.end(), artin_cyc.begin(), artin_cyc.end());
    if (!(rows_to_lattice(base, n) == full))
        throw ConsistencyError("cyclic-source Artin rows cut out a different lattice");
    return full;
}

IntegerLattice borel_smith_lattice(const SubgroupClassification& subs, long p) {
    return rows_to_lattice(borel_smith_rows(subs, p), subs.class_count());
}

int PrimePowerClasses::class_index_of(const Subgroup& s) const {
    int c = subs.class_index_of(s);
    int i = pp_index_of[c];
    if (i < 0)
        throw PreconditionError("subgroup order is not a prime power");
    return i;
}

PrimePowerClasses prime_power_classes(const GroupPtr& g) {
    PrimePowerClasses out;
    out.group = g;
    out.subs = enumerate_subgroups(g);
    out.pp_index_of.assign(out.subs.class_count(), -1);
    for (int c = 0; c < out.subs.class_count(); ++c) {
        long o = out.subs.class_rep(c).order();
        if (o == 1 || prime_factors(o).size() == 1) {
            out.pp_index_of[c] = static_cast<int>(out.pp_classes.size());
            out.pp_classes.push_back(c);
            out.labels.push_back(out.subs.class_labels[c]);
        }
    }
    return out;
}

std::vector<ConditionRow> bauer_rows(const PrimePowerClasses& pp) {
    const GroupPtr& g = pp.group;
    int n = pp.count();
    RowSink sink;
    for (int i = 0; i < n; ++i) {
        const Subgroup& h = pp.rep(i);
        if (h.order() == 1)
            continue;
        long p = prime_factors(h.order())[0];
        for (const auto& l : subgroups_of(h)) {
            if (l.order() * p != h.order() || !l.is_normal_in(h))
                continue;
            int h0 = -1;
            for (int m : h.members)
                if (!l.contains(m)) {
                    h0 = m;
                    break;
                }
            Subgroup ngl = normalizer(g, l);
            for (const auto& m : pp.subs.subgroups) {
                if (m.order() <= h.order() || m.order() % h.order() != 0)
                    continue;
                long qr = m.order() / h.order();
                if (prime_factors(qr).size() != 1)
                    continue;
                if (!m.contains_subgroup(h) || !ngl.contains_subgroup(m) ||
                    !h.is_normal_in(m))
                    continue;
                // M/H must be cyclic
                EmbeddedGroup mg = as_abstract_group(m);
                std::vector<int> h_loc;
                for (int x : h.members)
                    h_loc.push_back(mg.to_local.at(x));
                std::sort(h_loc.begin(), h_loc.end());
                QuotientResult quo = quotient_group(mg.group, Subgroup(mg.group, h_loc));
                if (!is_cyclic_group(quo.quotient))
                    continue;
                // kernel of the action on H/L
                long trivial = 0;
                for (int x : m.members)
                    if (l.contains(g->mul(g->conjugate(x, h0), g->inv(h0))))
                        ++trivial;
                if (trivial % h.order() != 0)
                    throw ConsistencyError("action kernel is not a union of H-cosets");
                Int modulus = qr / (trivial / h.order());
                if (modulus <= 1)
                    continue;
                IntVec row(n, 0);
                row[pp.class_index_of(l)] += 1;
                row[i] -= 1;
                sink.add(std::move(row), modulus,
                         "prime-to-p overgroup acting on an index-p step");
            }
        }
    }
    return std::move(sink.rows);
}

std::vector<ConditionRow> borel_smith_rows_on_sylows(const PrimePowerClasses& pp) {
    RowSink sink;
    auto cls = [&pp](const Subgroup& s) { return pp.class_index_of(s); };
    for (long p : prime_factors(pp.group->order())) {
        Subgroup syl = sylow_subgroup(pp.group, p);
        if (syl.order() > 1)
            bs_rows_in(pp.group, syl, p, cls, pp.count(), sink);
    }
    return std::move(sink.rows);
}

ConditionVerdict check_bauer(const PrimePowerClasses& pp, const std::vector<Int>& values) {
    return check_rows(bauer_rows(pp), values);
}

IntegerLattice lattice_DP(const PrimePowerClasses& pp) {
    auto rows = borel_smith_rows_on_sylows(pp);
    auto bv = bauer_rows(pp);
    rows.insert(rows.end(), bv.begin(), bv.end());
    return rows_to_lattice(rows, pp.count());
}

bool monotone_check(const SubgroupClassification& subs, const std::vector<Int>& values) {
    int n = subs.class_count();
    for (int a = 0; a < n; ++a)
        if (values[a] < 0)
            return false;
    for (int b = 0; b < n; ++b) {
        const Subgroup& big = subs.class_rep(b);
        for (int a = 0; a < n; ++a) {
            if (subs.class_rep(a).order() > big.order())
                continue;
            bool contained = false;
            for (int idx : subs.classes[a])
                if (std::includes(big.members.begin(), big.members.end(),
                                  subs.subgroups[idx].members.begin(),
                                  subs.subgroups[idx].members.end())) {
                    contained = true;
                    break;
                }
            if (contained && values[a] < values[b])
                return false;
        }
    }
    return true;
}

std::vector<Int> extend_to_prime_power(const FusionSystem& f, const std::vector<Int>& s_values,
                                       const PrimePowerClasses& pp) {
    if (pp.group != f.ambient())
        throw PreconditionError("prime-power classes belong to a different group");
    const GroupPtr& g = f.ambient();
    const Subgroup& syl = f.sylow_in_ambient();
    const auto& subs = f.subgroup_classes();
    Int trivial_value = s_values[subs.class_index_of(Subgroup::trivial(f.s()))];
    std::vector<Int> out(pp.count());
    for (int i = 0; i < pp.count(); ++i) {
        const Subgroup& r = pp.rep(i);
        if (r.order() > 1 && is_prime_power(r.order(), f.prime())) {
            bool found = false;
            for (long t = 0; t < g->order() && !found; ++t) {
                std::vector<int> loc;
                bool inside = true;
                for (int m : r.members) {
                    int y = g->conjugate(static_cast<int>(t), m);
                    if (!syl.contains(y)) {
                        inside = false;
                        break;
                    }
                    loc.push_back(f.embedding().to_local.at(y));
                }
                if (!inside)
                    continue;
                std::sort(loc.begin(), loc.end());
                out[i] = s_values[subs.class_index_of(Subgroup(f.s(), loc))];
                found = true;
            }
            if (!found)
                throw ConsistencyError("p-subgroup has no conjugate inside the Sylow group");
        } else {
            out[i] = trivial_value;
        }
    }
    return out;
}

std::vector<Int> f_to_s_values(const FusionSystem& f, const std::vector<Int>& f_values) {
    std::vector<Int> out(f.subgroup_classes().class_count());
    for (size_t c = 0; c < out.size(); ++c)
        out[c] = f_values[f.f_class_of_subgroup_class(static_cast<int>(c))];
    return out;
}

std::optional<std::vector<Int>> s_to_f_values(const FusionSystem& f,
                                              const std::vector<Int>& s_values) {
    const auto& fcs = f.subgroup_f_classes();
    std::vector<Int> out(fcs.size());
    for (size_t fc = 0; fc < fcs.size(); ++fc) {
        out[fc] = s_values[fcs[fc][0]];
        for (int c : fcs[fc])
            if (s_values[c] != out[fc])
                return std::nullopt;
    }
    return out;
}

} // namespace fusrep
