#include "fusionrep/biset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace fusrep {

namespace {

Int rat_to_int(const Rat& q) {
    if (q.get_den() != 1)
        throw ConsistencyError("expected an integer coefficient");
    return q.get_num();
}

struct PairUnionFind {
    std::vector<int> parent;
    explicit PairUnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Rat BisetElement::coeff(const BisetPair& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? Rat(0) : it->second;
}

void BisetElement::add(const BisetPair& p, const Rat& c) {
    if (c == 0)
        return;
    auto [it, fresh] = coeffs.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            coeffs.erase(it);
    }
}

BisetElement BisetElement::operator+(const BisetElement& o) const {
    BisetElement out = *this;
    for (const auto& [p, c] : o.coeffs)
        out.add(p, c);
    return out;
}

BisetElement BisetElement::operator-(const BisetElement& o) const {
    BisetElement out = *this;
    for (const auto& [p, c] : o.coeffs)
        out.add(p, -c);
    return out;
}

BisetElement BisetElement::operator*(const Rat& c) const {
    BisetElement out;
    if (c == 0)
        return out;
    for (const auto& [p, w] : coeffs)
        out.coeffs.emplace(p, w * c);
    return out;
}

BisetAlgebra::BisetAlgebra(GroupPtr s, long p) : s_(std::move(s)), p_(p) {
    if (!is_prime_power(s_->order(), p) || s_->order() < 1)
        throw PreconditionError("double Burnside algebra requires a p-group");
}

BisetPair BisetAlgebra::canonical_pair(const std::vector<int>& q_members,
                                       const std::vector<int>& images) const {
    if (q_members.size() != images.size())
        throw PreconditionError("pair member and image lists differ in length");
    BisetPair key{q_members, images};
    auto cached = canon_cache_.find(key);
    if (cached != canon_cache_.end())
        return cached->second;

    long n = s_->order();
    int k = static_cast<int>(q_members.size());
    // minimize the conjugated member set over a, then the image list over b
    std::vector<int> best_q;
    std::vector<int> good_a;
    for (int a = 0; a < n; ++a) {
        std::vector<int> qa(k);
        for (int i = 0; i < k; ++i)
            qa[i] = s_->conjugate(a, q_members[i]);
        std::sort(qa.begin(), qa.end());
        if (best_q.empty() || qa < best_q) {
            best_q = qa;
            good_a = {a};
        } else if (qa == best_q) {
            good_a.push_back(a);
        }
    }
    std::vector<int> best_img;
    for (int a : good_a) {
        // base[r] = psi(q_i) for the member of rank r in best_q
        std::vector<int> base(k);
        for (int i = 0; i < k; ++i) {
            int c = s_->conjugate(a, q_members[i]);
            auto it = std::lower_bound(best_q.begin(), best_q.end(), c);
            base[it - best_q.begin()] = images[i];
        }
        for (int b = 0; b < n; ++b) {
            std::vector<int> cand(k);
            for (int r = 0; r < k; ++r)
                cand[r] = s_->conjugate(b, base[r]);
            if (best_img.empty() || cand < best_img)
                best_img = cand;
        }
    }
    BisetPair out{best_q, best_img};
    canon_cache_.emplace(std::move(key), out);
    return out;
}

BisetPair BisetAlgebra::identity_pair() const {
    std::vector<int> all(s_->order());
    std::iota(all.begin(), all.end(), 0);
    return canonical_pair(all, all);
}

BisetPair BisetAlgebra::inclusion_pair(const Subgroup& q) const {
    return canonical_pair(q.members, q.members);
}

BisetPair BisetAlgebra::morphism_pair(const FusionMorphism& phi) const {
    return canonical_pair(phi.source.members, phi.images);
}

BisetElement BisetAlgebra::basis(const BisetPair& p) {
    BisetElement e;
    e.coeffs.emplace(p, Rat(1));
    return e;
}

// Mackey product of orbit types, second factor applied first:
// [U,th] o [T,ps] = sum over ps(T)\S/U of [ps^{-1}(ps(T) cap xUx^{-1}),
//                                          t -> th(x^{-1} ps(t) x)]
const BisetElement& BisetAlgebra::basis_product(const BisetPair& a, const BisetPair& b) const {
    auto key = std::make_pair(a, b);
    auto it = prod_cache_.find(key);
    if (it != prod_cache_.end())
        return it->second;

    long n = s_->order();
    std::map<int, int> theta; // member of U -> image
    for (size_t i = 0; i < a.q.size(); ++i)
        theta.emplace(a.q[i], a.psi[i]);
    std::vector<int> psi_t = b.psi; // image subgroup ps(T)
    std::sort(psi_t.begin(), psi_t.end());

    BisetElement out;
    std::vector<bool> used(n, false);
    for (int x = 0; x < n; ++x) {
        if (used[x])
            continue;
        for (int v : psi_t)
            for (int u : a.q)
                used[s_->mul(v, s_->mul(x, u))] = true;
        int xi = s_->inv(x);
        std::vector<int> q_new, img_new;
        for (size_t i = 0; i < b.q.size(); ++i) {
            int z = s_->mul(s_->mul(xi, b.psi[i]), x); // x^{-1} ps(t) x
            auto th = theta.find(z);
            if (th == theta.end())
                continue;
            q_new.push_back(b.q[i]);
            img_new.push_back(th->second);
        }
        out.add(canonical_pair(q_new, img_new), Rat(1));
    }
    return prod_cache_.emplace(std::move(key), std::move(out)).first->second;
}

BisetElement BisetAlgebra::compose(const BisetElement& a, const BisetElement& b) const {
    BisetElement out;
    for (const auto& [pa, ca] : a.coeffs)
        for (const auto& [pb, cb] : b.coeffs) {
            const BisetElement& prod = basis_product(pa, pb);
            Rat c = ca * cb;
            for (const auto& [pc, w] : prod.coeffs)
                out.add(pc, c * w);
        }
    return out;
}

BisetPair BisetAlgebra::op_pair(const BisetPair& p) const {
    std::vector<std::pair<int, int>> flipped;
    flipped.reserve(p.q.size());
    for (size_t i = 0; i < p.q.size(); ++i)
        flipped.emplace_back(p.psi[i], p.q[i]);
    std::sort(flipped.begin(), flipped.end());
    std::vector<int> q, img;
    for (auto& [m, i] : flipped) {
        q.push_back(m);
        img.push_back(i);
    }
    return canonical_pair(q, img);
}

BisetElement BisetAlgebra::op(const BisetElement& x) const {
    BisetElement out;
    for (const auto& [p, c] : x.coeffs)
        out.add(op_pair(p), c);
    return out;
}

Rat BisetAlgebra::cardinality(const BisetElement& x) const {
    Rat total = 0;
    Rat s2 = Rat(s_->order()) * Rat(s_->order());
    for (const auto& [p, c] : x.coeffs)
        total += c * s2 / Rat(static_cast<long>(p.q.size()));
    return total;
}

ConcreteBiset BisetAlgebra::concrete(const BisetPair& p) const {
    long n = s_->order();
    // points: (a, b) in S x S modulo (a psi(q)^{-1}, q b) ~ (a, b)
    PairUnionFind uf(static_cast<int>(n * n));
    auto idx = [n](int a, int b) { return static_cast<int>(a * n + b); };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (size_t i = 0; i < p.q.size(); ++i)
                uf.unite(idx(a, b),
                         idx(s_->mul(a, s_->inv(p.psi[i])), s_->mul(p.q[i], b)));
    std::vector<int> point_of(n * n, -1);
    ConcreteBiset out;
    out.s = s_;
    for (int i = 0; i < n * n; ++i)
        if (uf.find(i) == i)
            point_of[i] = out.size++;
    auto pt = [&](int a, int b) { return point_of[uf.find(idx(a, b))]; };
    if (out.size != static_cast<int>(n * n / static_cast<long>(p.q.size())))
        throw ConsistencyError("transitive biset has the wrong number of points");
    out.left.assign(n, std::vector<int>(out.size));
    out.right.assign(n, std::vector<int>(out.size));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int q = pt(a, b);
            for (int s = 0; s < n; ++s) {
                out.left[s][q] = pt(s_->mul(s, a), b);
                out.right[s][q] = pt(a, s_->mul(b, s));
            }
        }
    return out;
}

ConcreteBiset BisetAlgebra::tensor(const ConcreteBiset& a, const ConcreteBiset& b) const {
    long n = s_->order();
    // points: (x, y) modulo (x.s, y) ~ (x, s.y)
    PairUnionFind uf(a.size * b.size);
    auto idx = [&](int x, int y) { return x * b.size + y; };
    for (int x = 0; x < a.size; ++x)
        for (int y = 0; y < b.size; ++y)
            for (int s = 0; s < n; ++s)
                uf.unite(idx(a.right[s][x], y), idx(x, b.left[s][y]));
    std::vector<int> point_of(a.size * b.size, -1);
    ConcreteBiset out;
    out.s = s_;
    for (int i = 0; i < a.size * b.size; ++i)
        if (uf.find(i) == i)
            point_of[i] = out.size++;
    auto pt = [&](int x, int y) { return point_of[uf.find(idx(x, y))]; };
    out.left.assign(n, std::vector<int>(out.size));
    out.right.assign(n, std::vector<int>(out.size));
    for (int x = 0; x < a.size; ++x)
        for (int y = 0; y < b.size; ++y) {
            int q = pt(x, y);
            for (int s = 0; s < n; ++s) {
                out.left[s][q] = pt(a.left[s][x], y);
                out.right[s][q] = pt(x, b.right[s][y]);
            }
        }
    return out;
}

BisetElement BisetAlgebra::decompose(const ConcreteBiset& x) const {
    long n = s_->order();
    // freeness on both sides
    for (int s = 0; s < n; ++s) {
        if (s == s_->identity_index())
            continue;
        for (int pt = 0; pt < x.size; ++pt)
            if (x.left[s][pt] == pt || x.right[s][pt] == pt)
                throw StructuralError("biset is not bifree");
    }
    std::vector<int> orbit_of(x.size, -1);
    BisetElement out;
    for (int start = 0; start < x.size; ++start) {
        if (orbit_of[start] >= 0)
            continue;
        std::vector<int> queue{start};
        orbit_of[start] = start;
        int orbit_size = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int pt = queue[qi];
            ++orbit_size;
            for (int s = 0; s < n; ++s)
                for (int nxt : {x.left[s][pt], x.right[s][pt]})
                    if (orbit_of[nxt] < 0) {
                        orbit_of[nxt] = start;
                        queue.push_back(nxt);
                    }
        }
        // stabilizing pairs of the base point: a . start . b = start,
        // giving Q = { b^{-1} } and psi(b^{-1}) = a
        std::vector<std::pair<int, int>> members; // (b^{-1}, a)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (x.right[b][x.left[a][start]] == start)
                    members.emplace_back(s_->inv(b), a);
        std::sort(members.begin(), members.end());
        if (orbit_size * static_cast<long>(members.size()) != n * n)
            throw ConsistencyError("orbit size does not match its stabilizer");
        std::vector<int> q, img;
        for (auto& [m, a] : members) {
            q.push_back(m);
            img.push_back(a);
        }
        out.add(canonical_pair(q, img), Rat(1));
    }
    return out;
}

BisetElement BisetAlgebra::compose_by_tensor(const BisetPair& a, const BisetPair& b) const {
    return decompose(tensor(concrete(a), concrete(b)));
}

ClassFunction BisetAlgebra::act(const BisetElement& x, const ClassFunction& chi) const {
    if (chi.group != s_)
        throw PreconditionError("class function lives on a different group");
    ClassFunction out(s_, std::vector<Cyclo>(s_->class_count(), Cyclo()));
    for (const auto& [p, c] : x.coeffs) {
        std::vector<Cyclo> vals;
        vals.reserve(p.q.size());
        for (int img : p.psi)
            vals.push_back(chi.at_element(img));
        Subgroup q(s_, p.q);
        out = out + induce_from_subgroup(q, vals).scaled(c);
    }
    return out;
}

std::vector<Rat> BisetAlgebra::act_super(const BisetElement& x, const std::vector<Rat>& values,
                                         const SubgroupClassification& subs) const {
    if (subs.group != s_)
        throw PreconditionError("classification lives on a different group");
    long n = s_->order();
    std::vector<Rat> out(subs.class_count(), Rat(0));
    for (int lc = 0; lc < subs.class_count(); ++lc) {
        const Subgroup& l = subs.class_rep(lc);
        // left coset space S/L
        std::vector<int> coset_of(n, -1);
        std::vector<int> reps;
        for (int e = 0; e < n; ++e) {
            if (coset_of[e] >= 0)
                continue;
            int c = static_cast<int>(reps.size());
            reps.push_back(e);
            for (int m : l.members)
                coset_of[s_->mul(e, m)] = c;
        }
        int nc = static_cast<int>(reps.size());

        Rat acc = 0;
        for (const auto& [p, c] : x.coeffs) {
            // (U . f)(S/L) = f(U^op x_S S/L), evaluated orbitwise
            ConcreteBiset u = concrete(op_pair(p));
            PairUnionFind uf(u.size * nc);
            auto idx = [&](int pt, int cs) { return pt * nc + cs; };
            for (int pt = 0; pt < u.size; ++pt)
                for (int cs = 0; cs < nc; ++cs)
                    for (int s = 0; s < n; ++s)
                        uf.unite(idx(u.right[s][pt], cs),
                                 idx(pt, coset_of[s_->mul(s, reps[cs])]));
            // orbits of the residual left action, with point stabilizers
            std::map<int, int> seen_root; // root -> any (pt, cs) index
            for (int pt = 0; pt < u.size; ++pt)
                for (int cs = 0; cs < nc; ++cs)
                    seen_root.emplace(uf.find(idx(pt, cs)), idx(pt, cs));
            std::set<int> visited;
            for (auto& [root, any] : seen_root) {
                if (visited.count(root))
                    continue;
                int pt0 = any / nc, cs0 = any % nc;
                std::vector<int> stab;
                for (int s = 0; s < n; ++s)
                    if (uf.find(idx(u.left[s][pt0], cs0)) == root)
                        stab.push_back(s);
                // mark the whole orbit
                std::vector<int> queue{root};
                visited.insert(root);
                for (size_t qi = 0; qi < queue.size(); ++qi) {
                    int cur_any = seen_root.at(queue[qi]);
                    int cp = cur_any / nc, cc = cur_any % nc;
                    for (int s = 0; s < n; ++s) {
                        int r = uf.find(idx(u.left[s][cp], cc));
                        if (visited.insert(r).second)
                            queue.push_back(r);
                    }
                }
                int sc = subs.class_index_of(Subgroup(s_, stab));
                acc += c * values[sc];
            }
        }
        out[lc] = acc;
    }
    return out;
}

BisetElement group_as_biset(const BisetAlgebra& alg, const GroupPtr& g,
                            const Subgroup& sylow, const EmbeddedGroup& emb) {
    if (emb.group != alg.s())
        throw PreconditionError("embedding does not match the algebra's group");
    long n = g->order();
    const auto& sm = sylow.members;
    std::vector<bool> used(n, false);
    BisetElement out;
    for (int x = 0; x < n; ++x) {
        if (used[x])
            continue;
        for (int s1 : sm)
            for (int s2 : sm)
                used[g->mul(s1, g->mul(x, s2))] = true;
        std::vector<std::pair<int, int>> pairs; // (local a, local x a x^{-1})
        for (int a : sm) {
            int y = g->conjugate(x, a);
            if (sylow.contains(y))
                pairs.emplace_back(emb.to_local.at(a), emb.to_local.at(y));
        }
        std::sort(pairs.begin(), pairs.end());
        std::vector<int> q, img;
        for (auto& [m, i] : pairs) {
            q.push_back(m);
            img.push_back(i);
        }
        out.add(alg.canonical_pair(q, img), Rat(1));
    }
    if (alg.augmentation(out) != Rat(g->order()) / Rat(sylow.order()))
        throw ConsistencyError("double coset decomposition has the wrong cardinality");
    return out;
}

BisetElement group_as_biset(const BisetAlgebra& alg, const FusionSystem& f) {
    return group_as_biset(alg, f.ambient(), f.sylow_in_ambient(), f.embedding());
}

std::vector<BisetPair> fusion_pair_basis(const BisetAlgebra& alg, const FusionSystem& f) {
    if (f.s() != alg.s())
        throw PreconditionError("fusion system does not match the algebra's group");
    std::set<BisetPair> seen;
    const auto& subs = f.subgroup_classes();
    for (int c = 0; c < subs.class_count(); ++c)
        for (const auto& phi : f.hom_to_s(subs.class_rep(c)))
            seen.insert(alg.morphism_pair(phi));
    return {seen.begin(), seen.end()};
}

std::vector<BisetPair> all_pair_basis(const BisetAlgebra& alg,
                                      const SubgroupClassification& subs) {
    const GroupPtr& s = alg.s();
    std::set<BisetPair> seen;
    for (int c = 0; c < subs.class_count(); ++c) {
        const Subgroup& q = subs.class_rep(c);
        // greedy generating set and a word for every member
        std::vector<int> gens;
        std::vector<std::vector<int>> word(s->order()); // member -> gen index list
        std::vector<int> have = {s->identity_index()};
        std::vector<bool> in_have(s->order(), false);
        in_have[s->identity_index()] = true;
        for (int m : q.members) {
            if (in_have[m])
                continue;
            gens.push_back(m);
            int gi = static_cast<int>(gens.size()) - 1;
            // close under right multiplication by the new generator
            std::vector<int> frontier = have;
            while (!frontier.empty()) {
                std::vector<int> next;
                for (int h : frontier) {
                    int hm = s->mul(h, m);
                    if (!in_have[hm]) {
                        in_have[hm] = true;
                        have.push_back(hm);
                        word[hm] = word[h];
                        word[hm].push_back(gi);
                        next.push_back(hm);
                    }
                }
                frontier = std::move(next);
            }
            // re-close under all generators
            bool grew = true;
            while (grew) {
                grew = false;
                for (int h : have)
                    for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
                        int hm = s->mul(h, gens[j]);
                        if (!in_have[hm]) {
                            in_have[hm] = true;
                            have.push_back(hm);
                            word[hm] = word[h];
                            word[hm].push_back(j);
                            grew = true;
                        }
                    }
            }
        }
        // enumerate injective homomorphisms by generator images
        std::vector<int> img(gens.size());
        std::function<void(size_t)> rec = [&](size_t k) {
            if (k == gens.size()) {
                std::vector<int> images(q.members.size());
                std::vector<bool> used(s->order(), false);
                for (size_t i = 0; i < q.members.size(); ++i) {
                    int v = s->identity_index();
                    for (int gi : word[q.members[i]])
                        v = s->mul(v, img[gi]);
                    images[i] = v;
                    if (used[v])
                        return; // not injective
                    used[v] = true;
                }
                // homomorphism check on the full multiplication table
                auto at = [&](int m) {
                    size_t lo = std::lower_bound(q.members.begin(), q.members.end(), m) -
                                q.members.begin();
                    return images[lo];
                };
                for (int a : q.members)
                    for (int b : q.members)
                        if (at(s->mul(a, b)) != s->mul(at(a), at(b)))
                            return;
                seen.insert(alg.canonical_pair(q.members, images));
                return;
            }
            long ord = s->element_order(gens[k]);
            for (int e = 0; e < static_cast<int>(s->order()); ++e) {
                if (s->element_order(e) != ord)
                    continue;
                img[k] = e;
                rec(k + 1);
            }
        };
        rec(0);
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::pair<BisetPair, BisetPair>> stability_test_pairs(const BisetAlgebra& alg,
                                                                  const FusionSystem& f) {
    std::set<std::pair<BisetPair, BisetPair>> seen;
    const auto& subs = f.subgroup_classes();
    for (int c = 0; c < subs.class_count(); ++c) {
        const Subgroup& p = subs.class_rep(c);
        BisetPair incl = alg.inclusion_pair(p);
        for (const auto& phi : f.hom_to_s(p)) {
            BisetPair m = alg.morphism_pair(phi);
            if (!(m == incl))
                seen.insert({m, incl});
        }
    }
    return {seen.begin(), seen.end()};
}

CharacteristicVerdict is_characteristic(const BisetAlgebra& alg, const BisetElement& x,
                                        const FusionSystem& f) {
    if (x.is_zero())
        return {false, "the zero element is never characteristic"};
    auto basis = fusion_pair_basis(alg, f);
    std::set<BisetPair> allowed(basis.begin(), basis.end());
    for (const auto& [p, c] : x.coeffs)
        if (!allowed.count(p))
            return {false, "support contains a pair whose map is not a fusion morphism"};
    Rat aug = alg.augmentation(x);
    if (aug == 0 || p_valuation(aug, alg.prime()) != 0)
        return {false, "augmentation " + rat_to_string(aug) + " is not a p-unit"};
    BisetElement xop = alg.op(x);
    for (const auto& [m, incl] : stability_test_pairs(alg, f)) {
        if (!(alg.compose(x, BisetAlgebra::basis(m)) ==
              alg.compose(x, BisetAlgebra::basis(incl))))
            return {false, "right stability fails for a morphism on a subgroup of order " +
                               std::to_string(m.q.size())};
        if (!(alg.compose(xop, BisetAlgebra::basis(m)) ==
              alg.compose(xop, BisetAlgebra::basis(incl))))
            return {false, "left stability fails for a morphism on a subgroup of order " +
                               std::to_string(m.q.size())};
    }
    return {true, ""};
}

IntegerLattice stable_biset_lattice(const BisetAlgebra& alg, const FusionSystem& f,
                                    const std::vector<BisetPair>& basis) {
    int nb = static_cast<int>(basis.size());
    IntMat rows;
    for (const auto& [m, incl] : stability_test_pairs(alg, f)) {
        for (int side = 0; side < 2; ++side) {
            // right stability of x, then of x^op
            std::vector<BisetElement> diffs(nb);
            std::set<BisetPair> outputs;
            for (int i = 0; i < nb; ++i) {
                BisetPair e = side == 0 ? basis[i] : alg.op_pair(basis[i]);
                diffs[i] = alg.compose(BisetAlgebra::basis(e), BisetAlgebra::basis(m)) -
                           alg.compose(BisetAlgebra::basis(e), BisetAlgebra::basis(incl));
                for (const auto& [p, c] : diffs[i].coeffs)
                    outputs.insert(p);
            }
            for (const auto& o : outputs) {
                IntVec row(nb);
                bool nonzero = false;
                for (int i = 0; i < nb; ++i) {
                    row[i] = rat_to_int(diffs[i].coeff(o));
                    if (row[i] != 0)
                        nonzero = true;
                }
                if (nonzero)
                    rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty())
        return IntegerLattice::full(nb);
    return integer_kernel(rows);
}

BisetElement characteristic_idempotent(const BisetAlgebra& alg, const FusionSystem& f) {
    long p = alg.prime();
    BisetElement x = group_as_biset(alg, f);
    Rat lambda = alg.augmentation(x);
    if (p_valuation(lambda, p) != 0)
        throw PreconditionError("the subgroup is not Sylow: index divisible by p");

    // The characteristic idempotent is the two-sided identity of the
    // bi-stable subalgebra, so it satisfies a rational linear system over a
    // basis of the stable lattice. A p-adic lift of an idempotent power of
    // X / lambda is not reliable here: the rational algebra can split
    // further over Q_p and the limit then has irrational coefficients.
    auto basis = fusion_pair_basis(alg, f);
    IntegerLattice lat = stable_biset_lattice(alg, f, basis);
    int r = lat.rank();
    std::vector<BisetElement> gens(r);
    for (int i = 0; i < r; ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            if (lat.basis[i][j] != 0)
                gens[i].add(basis[j], Rat(lat.basis[i][j]));

    RatMat a;
    RatVec b;
    for (int i = 0; i < r; ++i) {
        for (int side = 0; side < 2; ++side) {
            std::vector<BisetElement> prods(r);
            std::set<BisetPair> support;
            for (int j = 0; j < r; ++j) {
                prods[j] = side == 0 ? alg.compose(gens[j], gens[i])
                                     : alg.compose(gens[i], gens[j]);
                for (const auto& [pr, c] : prods[j].coeffs)
                    support.insert(pr);
            }
            for (const auto& [pr, c] : gens[i].coeffs)
                support.insert(pr);
            for (const auto& pr : support) {
                RatVec row(r);
                for (int j = 0; j < r; ++j)
                    row[j] = prods[j].coeff(pr);
                a.push_back(std::move(row));
                b.push_back(gens[i].coeff(pr));
            }
        }
    }
    auto sol = solve_rational(a, b);
    if (!sol)
        throw ConsistencyError("the bi-stable subalgebra has no identity element");
    BisetElement omega;
    for (int j = 0; j < r; ++j)
        if ((*sol)[j] != 0)
            omega = omega + gens[j] * (*sol)[j];

    if (!(alg.compose(omega, omega) == omega))
        throw ConsistencyError("identity of the bi-stable subalgebra is not idempotent");
    auto verdict = is_characteristic(alg, omega, f);
    if (!verdict.ok)
        throw ConsistencyError("candidate idempotent is not characteristic: " + verdict.reason);
    const auto& subs = f.subgroup_classes();
    for (int c = 0; c < subs.class_count(); ++c) {
        Rat expect = subs.class_rep(c).order() == alg.s()->order() ? 1 : 0;
        if (coefficient_sum(alg, omega, subs.class_rep(c)) != expect)
            throw ConsistencyError("coefficient sums of the idempotent are wrong on class " +
                                   subs.class_labels[c]);
    }
    return omega;
}

Rat coefficient_sum(const BisetAlgebra& alg, const BisetElement& x, const Subgroup& q) {
    const GroupPtr& s = alg.s();
    long n = s->order();
    size_t k = q.members.size();
    auto rank = [&](int e) {
        auto it = std::lower_bound(q.members.begin(), q.members.end(), e);
        return static_cast<int>(it - q.members.begin());
    };
    // all maps on q arising from the support, as image tables by position
    std::map<std::vector<int>, Rat> tables;
    for (const auto& [pr, c] : x.coeffs) {
        if (pr.q.size() != k)
            continue;
        for (int a = 0; a < n; ++a) {
            std::vector<int> qa(k);
            for (size_t i = 0; i < k; ++i)
                qa[i] = s->conjugate(a, pr.q[i]);
            std::vector<int> sorted_qa = qa;
            std::sort(sorted_qa.begin(), sorted_qa.end());
            if (sorted_qa != q.members)
                continue;
            std::vector<int> base(k);
            for (size_t i = 0; i < k; ++i)
                base[rank(qa[i])] = pr.psi[i];
            for (int b = 0; b < n; ++b) {
                std::vector<int> tab(k);
                for (size_t r = 0; r < k; ++r)
                    tab[r] = s->conjugate(b, base[r]);
                auto [it, fresh] = tables.emplace(tab, c);
                if (!fresh && it->second != c)
                    throw ConsistencyError("conflicting coefficients on one conjugate map");
            }
        }
    }
    // one summand per (N_S(Q), S)-class of maps
    Subgroup nq = normalizer(s, q);
    std::set<std::vector<int>> seen;
    Rat sum = 0;
    for (const auto& [tab, c] : tables) {
        std::vector<int> canon;
        for (int nn : nq.members) {
            int ni = s->inv(nn);
            std::vector<int> pre(k);
            for (size_t i = 0; i < k; ++i)
                pre[i] = tab[rank(s->conjugate(ni, q.members[i]))];
            for (int b = 0; b < n; ++b) {
                std::vector<int> cand(k);
                for (size_t i = 0; i < k; ++i)
                    cand[i] = s->conjugate(b, pre[i]);
                if (canon.empty() || cand < canon)
                    canon = cand;
            }
        }
        if (seen.insert(canon).second)
            sum += c;
    }
    return sum;
}

BisetElement minimal_characteristic_biset(const BisetAlgebra& alg, const FusionSystem& f) {
    auto basis = fusion_pair_basis(alg, f);
    int nb = static_cast<int>(basis.size());
    std::map<BisetPair, int> col;
    for (int i = 0; i < nb; ++i)
        col.emplace(basis[i], i);

    BisetElement x = group_as_biset(alg, f);
    IntVec box(nb, 0);
    for (const auto& [p, c] : x.coeffs) {
        auto it = col.find(p);
        if (it == col.end())
            throw ConsistencyError("double coset decomposition leaves the fusion basis");
        box[it->second] = rat_to_int(c);
    }

    IntegerLattice lat = stable_biset_lattice(alg, f, basis);
    int r = lat.rank();
    std::vector<int> pivot(r);
    for (int i = 0; i < r; ++i) {
        int pc = 0;
        while (lat.basis[i][pc] == 0)
            ++pc;
        pivot[i] = pc;
    }

    int id_col = col.at(alg.identity_pair());
    std::vector<IntVec> candidates;
    IntVec v(nb, 0);
    auto in_box_upto = [&](int limit) {
        for (int c = 0; c < limit; ++c)
            if (v[c] < 0 || v[c] > box[c])
                return false;
        return true;
    };
    auto dfs = [&](auto&& self, int row) -> void {
        if (row == r) {
            if (in_box_upto(nb) && std::any_of(v.begin(), v.end(), [](const Int& t) { return t != 0; }))
                candidates.push_back(v);
            return;
        }
        int pc = pivot[row];
        const Int& step = lat.basis[row][pc];
        // v[pc] + t * step must land in [0, box[pc]]
        Int lo = -v[pc], hi = box[pc] - v[pc];
        Int t0, t1;
        mpz_cdiv_q(t0.get_mpz_t(), lo.get_mpz_t(), step.get_mpz_t());
        mpz_fdiv_q(t1.get_mpz_t(), hi.get_mpz_t(), step.get_mpz_t());
        for (Int t = t0; t <= t1; ++t) {
            if (t != 0)
                for (int c = pc; c < nb; ++c)
                    v[c] += t * lat.basis[row][c];
            int checked = row + 1 < r ? pivot[row + 1] : nb;
            if (in_box_upto(checked))
                self(self, row + 1);
            if (t != 0)
                for (int c = pc; c < nb; ++c)
                    v[c] -= t * lat.basis[row][c];
        }
    };
    dfs(dfs, 0);

    std::vector<IntVec> valid;
    for (auto& cand : candidates) {
        if (cand[id_col] < 1)
            continue;
        Rat aug = 0;
        for (int i = 0; i < nb; ++i)
            aug += Rat(cand[i]) * Rat(alg.s()->order()) / Rat(static_cast<long>(basis[i].q.size()));
        if (aug == 0 || p_valuation(aug, alg.prime()) != 0)
            continue;
        valid.push_back(cand);
    }
    if (valid.empty())
        throw ConsistencyError("no stable biset found inside the ambient-group box");
    int best = 0;
    for (size_t i = 1; i < valid.size(); ++i) {
        Int si = std::accumulate(valid[i].begin(), valid[i].end(), Int(0));
        Int sb = std::accumulate(valid[best].begin(), valid[best].end(), Int(0));
        if (si < sb)
            best = static_cast<int>(i);
    }
    for (const auto& cand : valid)
        for (int c = 0; c < nb; ++c)
            if (valid[best][c] > cand[c])
                throw ConsistencyError("stable bisets in the box have no least element");
    BisetElement out;
    for (int i = 0; i < nb; ++i)
        out.add(basis[i], Rat(valid[best][i]));
    CharacteristicVerdict cv = is_characteristic(alg, out, f);
    if (!cv.ok)
        throw ConsistencyError("minimal stable biset is not characteristic: " + cv.reason);
    return out;
}

} // namespace fusrep
