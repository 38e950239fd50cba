#include "fusionrep/lattice.hpp"
#include "fusionrep/perm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace fusrep {

namespace {

// closure of `seed` under multiplication, as sorted element indices
std::vector<int> closure(const GroupPtr& g, const std::vector<int>& seed) {
    std::vector<bool> seen(g->order(), false);
    std::vector<int> out{g->identity_index()};
    seen[g->identity_index()] = true;
    for (size_t i = 0; i < out.size(); ++i)
        for (int s : seed) {
            int nxt = g->mul(s, out[i]);
            if (!seen[nxt]) {
                seen[nxt] = true;
                out.push_back(nxt);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> all_subgroup_member_sets(const GroupPtr& g,
                                                       const std::vector<int>& universe) {
    // cyclic-extension bottom-up: start from cyclic subgroups, extend each
    // known subgroup by one prime-power element until no new member set
    // appears (every overgroup is reachable stepwise through such elements)
    bool whole = static_cast<long>(universe.size()) == g->order();
    auto inside = [&](const std::vector<int>& s) {
        return whole || std::includes(universe.begin(), universe.end(), s.begin(), s.end());
    };
    std::vector<int> seeds;
    for (int e : universe) {
        long o = g->element_order(e);
        auto fac = prime_factors(o);
        if (fac.size() == 1)
            seeds.push_back(e);
    }
    std::set<std::vector<int>> known;
    known.insert({g->identity_index()});
    // queue carries a small generating set next to the member list
    std::deque<std::pair<std::vector<int>, std::vector<int>>> work;
    for (int e : universe) {
        auto c = closure(g, {e});
        if (inside(c) && known.insert(c).second)
            work.push_back({c, {e}});
    }
    while (!work.empty()) {
        auto [h, gens] = work.front();
        work.pop_front();
        for (int e : seeds) {
            if (std::binary_search(h.begin(), h.end(), e))
                continue;
            auto g2 = gens;
            g2.push_back(e);
            auto k = closure(g, g2);
            if (inside(k) && known.insert(k).second)
                work.push_back({std::move(k), std::move(g2)});
        }
    }
    return {known.begin(), known.end()};
}

} // namespace

SubgroupClassification enumerate_subgroups(const GroupPtr& g, SubgroupBounds bounds) {
    if (g->order() > bounds.max_order)
        throw SizeError("group order exceeds subgroup-enumeration bound");
    std::vector<int> universe(g->order());
    std::iota(universe.begin(), universe.end(), 0);
    auto sets = all_subgroup_member_sets(g, universe);

    SubgroupClassification out;
    out.group = g;
    for (auto& s : sets)
        out.subgroups.emplace_back(g, std::move(s));
    std::sort(out.subgroups.begin(), out.subgroups.end());

    std::map<std::vector<int>, int> pos;
    for (size_t i = 0; i < out.subgroups.size(); ++i)
        pos[out.subgroups[i].members] = static_cast<int>(i);

    out.class_of.assign(out.subgroups.size(), -1);
    std::vector<std::vector<int>> raw;
    for (size_t i = 0; i < out.subgroups.size(); ++i) {
        if (out.class_of[i] >= 0)
            continue;
        std::set<int> cls{static_cast<int>(i)};
        std::deque<int> queue{static_cast<int>(i)};
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (const auto& gen : g->generators()) {
                int gi = g->index_of(gen);
                int conj = pos.at(out.subgroups[cur].conjugated_by(gi).members);
                if (cls.insert(conj).second)
                    queue.push_back(conj);
            }
        }
        for (int idx : cls)
            out.class_of[idx] = 0; // mark
        raw.emplace_back(cls.begin(), cls.end());
    }
    // canonical class order: (order, lexicographically smallest member set)
    std::sort(raw.begin(), raw.end(), [&](const auto& a, const auto& b) {
        const auto& sa = out.subgroups[a[0]];
        const auto& sb = out.subgroups[b[0]];
        if (sa.order() != sb.order())
            return sa.order() < sb.order();
        return sa.members < sb.members;
    });
    out.classes = std::move(raw);
    for (size_t c = 0; c < out.classes.size(); ++c)
        for (int idx : out.classes[c])
            out.class_of[idx] = static_cast<int>(c);
    out.class_labels.resize(out.classes.size());
    for (size_t c = 0; c < out.classes.size(); ++c) {
        std::string label = "s" + std::to_string(c) + "_o" +
                            std::to_string(out.subgroups[out.classes[c][0]].order());
        out.class_labels[c] = label;
    }
    return out;
}

int SubgroupClassification::find(const Subgroup& s) const {
    for (size_t i = 0; i < subgroups.size(); ++i)
        if (subgroups[i].members == s.members)
            return static_cast<int>(i);
    return -1;
}

int SubgroupClassification::class_index_of(const Subgroup& s) const {
    int i = find(s);
    if (i < 0)
        throw StructuralError("subgroup not present in classification");
    return class_of[i];
}

std::vector<Subgroup> subgroups_of(const Subgroup& h) {
    auto sets = all_subgroup_member_sets(h.parent, h.members);
    std::vector<Subgroup> out;
    out.reserve(sets.size());
    for (auto& s : sets)
        out.emplace_back(h.parent, std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup sylow_subgroup(const GroupPtr& g, long p) {
    long n = g->order();
    long target = 1;
    while (n % p == 0) {
        n /= p;
        target *= p;
    }
    if (target == 1)
        return Subgroup::trivial(g);
    // grow: a proper p-subgroup has p | [N_G(P) : P], so a normalizing
    // p-element outside P always exists
    Subgroup cur = Subgroup::trivial(g);
    while (cur.order() < target) {
        Subgroup norm = normalizer(g, cur);
        bool grown = false;
        for (int e : norm.members) {
            if (cur.contains(e))
                continue;
            if (!is_prime_power(g->element_order(e), p))
                continue;
            auto gens = cur.members;
            gens.push_back(e);
            Subgroup next = Subgroup::generated(g, gens);
            if (next.is_p_group(p) && next.order() > cur.order()) {
                cur = next;
                grown = true;
                break;
            }
        }
        if (!grown)
            throw ConsistencyError("Sylow growth stalled");
    }
    return cur;
}

AbelianDecomposition abelian_decomposition(const GroupPtr& a) {
    AbelianDecomposition out;
    long n = a->order();
    if (n == 1) {
        out.exponents.assign(1, {});
        return out;
    }
    // greedy generating set, highest element order first
    std::vector<int> gens;
    Subgroup span = Subgroup::trivial(a);
    while (span.order() < n) {
        int best = -1;
        long best_ord = 0;
        for (int e = 0; e < n; ++e)
            if (!span.contains(e) && a->element_order(e) > best_ord) {
                best = e;
                best_ord = a->element_order(e);
            }
        gens.push_back(best);
        auto g2 = gens;
        span = Subgroup::generated(a, g2);
    }
    int k = static_cast<int>(gens.size());
    std::vector<long> ords(k);
    for (int i = 0; i < k; ++i)
        ords[i] = a->element_order(gens[i]);

    // relation lattice: diag(orders) plus every in-box tuple that evaluates
    // to the identity
    IntMat rel;
    for (int i = 0; i < k; ++i) {
        IntVec row(k, 0);
        row[i] = ords[i];
        rel.push_back(std::move(row));
    }
    {
        std::vector<long> tup(k, 0);
        while (true) {
            int e = a->identity_index();
            for (int i = 0; i < k; ++i)
                e = a->mul(e, a->power(gens[i], tup[i]));
            if (e == a->identity_index()) {
                bool zero = std::all_of(tup.begin(), tup.end(), [](long t) { return t == 0; });
                if (!zero) {
                    IntVec row(k);
                    for (int i = 0; i < k; ++i)
                        row[i] = tup[i];
                    rel.push_back(std::move(row));
                }
            }
            int pos = k - 1;
            while (pos >= 0 && ++tup[pos] == ords[pos]) {
                tup[pos] = 0;
                --pos;
            }
            if (pos < 0)
                break;
        }
    }

    SmithResult snf = smith_normal_form(rel);
    if (snf.rank != k)
        throw ConsistencyError("abelian relation lattice is not full rank");
    // new basis: h_j = prod_i g_i^{Vinv[j][i]}
    std::vector<int> basis;
    std::vector<long> orders;
    std::vector<int> kept; // indices j with d_j > 1
    for (int j = 0; j < k; ++j) {
        long dj = snf.d[j][j].get_si();
        if (dj == 1)
            continue;
        int h = a->identity_index();
        for (int i = 0; i < k; ++i) {
            long e = snf.vinv[j][i].get_si();
            h = a->mul(h, a->power(gens[i], e));
        }
        basis.push_back(h);
        orders.push_back(dj);
        kept.push_back(j);
    }
    out.basis = basis;
    out.orders = orders;
    out.invariant_factors = orders;
    std::sort(out.invariant_factors.begin(), out.invariant_factors.end());

    // exponent table by full enumeration of the box
    out.exponents.assign(n, {});
    long total = 1;
    for (long d : orders)
        total *= d;
    if (total != n)
        throw ConsistencyError("abelian decomposition order mismatch");
    std::vector<long> tup(orders.size(), 0);
    std::vector<bool> seen(n, false);
    for (long cnt = 0; cnt < total; ++cnt) {
        int e = a->identity_index();
        for (size_t i = 0; i < orders.size(); ++i)
            e = a->mul(e, a->power(basis[i], tup[i]));
        if (seen[e])
            throw ConsistencyError("abelian basis tuples collide");
        seen[e] = true;
        out.exponents[e] = tup;
        int pos = static_cast<int>(orders.size()) - 1;
        while (pos >= 0 && ++tup[pos] == orders[pos]) {
            tup[pos] = 0;
            --pos;
        }
    }
    return out;
}

std::vector<long> abelianization_invariants(const Subgroup& h) {
    EmbeddedGroup hg = as_abstract_group(h);
    Subgroup comm = commutator_subgroup(Subgroup::full(hg.group));
    QuotientResult q = quotient_group(hg.group, comm);
    return abelian_decomposition(q.quotient).invariant_factors;
}

} // namespace fusrep
