#include "fusionrep/fusion.hpp"

#include "fusionrep/numbers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fusrep {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> partition_from_uf(UnionFind& uf, int n) {
    std::map<int, std::vector<int>> buckets;
    for (int i = 0; i < n; ++i)
        buckets[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : buckets)
        out.push_back(std::move(members));
    // canonical order by smallest contained index
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return out;
}

} // namespace

int FusionMorphism::apply(int local_elem) const {
    auto it = std::lower_bound(source.members.begin(), source.members.end(), local_elem);
    if (it == source.members.end() || *it != local_elem)
        throw PreconditionError("element outside the morphism source");
    return images[it - source.members.begin()];
}

std::vector<int> FusionMorphism::image_members() const {
    std::vector<int> img = images;
    std::sort(img.begin(), img.end());
    return img;
}

bool FusionMorphism::is_identity_inclusion() const {
    for (size_t i = 0; i < images.size(); ++i)
        if (images[i] != source.members[i])
            return false;
    return true;
}

FusionSystem FusionSystem::build(const GroupPtr& ambient, const Subgroup& sylow, long p) {
    if (!is_prime_power(sylow.order(), p) || !sylow.is_p_group(p))
        throw StructuralError("fusion requires a p-subgroup for the stated prime");
    FusionSystem f;
    f.ambient_ = ambient;
    f.sylow_ = sylow;
    f.p_ = p;
    f.local_ = as_abstract_group(sylow, ambient->name().empty()
                                            ? "S"
                                            : "Syl_" + std::to_string(p) + "(" + ambient->name() + ")");
    f.subs_ = enumerate_subgroups(f.local_.group);

    const auto& g = ambient;
    long n = g->order();
    auto in_sylow = [&](int e) { return f.local_.to_local.count(e) != 0; };

    // fuse subgroup classes: P ~ gPg^{-1} whenever the conjugate stays in S
    int sc = f.subs_.class_count();
    UnionFind sub_uf(sc);
    for (int c = 0; c < sc; ++c) {
        const Subgroup& rep = f.subs_.class_rep(c);
        std::vector<int> pm;
        pm.reserve(rep.members.size());
        for (int x : rep.members)
            pm.push_back(f.local_.to_parent[x]);
        for (int gg = 0; gg < n; ++gg) {
            std::vector<int> img;
            img.reserve(pm.size());
            bool inside = true;
            for (int x : pm) {
                int y = g->conjugate(gg, x);
                if (!in_sylow(y)) {
                    inside = false;
                    break;
                }
                img.push_back(f.local_.to_local.at(y));
            }
            if (!inside)
                continue;
            std::sort(img.begin(), img.end());
            int idx = f.subs_.find(Subgroup(f.local_.group, img));
            if (idx < 0)
                throw ConsistencyError("conjugate subgroup missing from enumeration");
            sub_uf.unite(c, f.subs_.class_of[idx]);
        }
    }
    f.sub_f_classes_ = partition_from_uf(sub_uf, sc);
    f.f_of_sub_class_.assign(sc, -1);
    for (size_t fc = 0; fc < f.sub_f_classes_.size(); ++fc)
        for (int c : f.sub_f_classes_[fc])
            f.f_of_sub_class_[c] = static_cast<int>(fc);

    // fuse element classes of the local group
    int ec = f.local_.group->class_count();
    UnionFind elem_uf(ec);
    for (int c = 0; c < ec; ++c) {
        int x = f.local_.group->conjugacy_classes()[c][0];
        int px = f.local_.to_parent[x];
        for (int gg = 0; gg < n; ++gg) {
            int y = g->conjugate(gg, px);
            if (in_sylow(y))
                elem_uf.unite(c, f.local_.group->class_of(f.local_.to_local.at(y)));
        }
    }
    f.elem_f_classes_ = partition_from_uf(elem_uf, ec);
    f.f_of_elem_class_.assign(ec, -1);
    for (size_t fc = 0; fc < f.elem_f_classes_.size(); ++fc)
        for (int c : f.elem_f_classes_[fc])
            f.f_of_elem_class_[c] = static_cast<int>(fc);
    return f;
}

std::vector<FusionMorphism> FusionSystem::hom(const Subgroup& p, const Subgroup& q) const {
    std::vector<int> pm, qm;
    for (int x : p.members)
        pm.push_back(local_.to_parent[x]);
    for (int x : q.members)
        qm.push_back(local_.to_parent[x]);
    std::sort(qm.begin(), qm.end());

    std::vector<FusionMorphism> out;
    std::set<std::vector<int>> seen;
    long n = ambient_->order();
    for (int g = 0; g < n; ++g) {
        std::vector<int> images(pm.size());
        bool lands = true;
        for (size_t i = 0; i < pm.size(); ++i) {
            int y = ambient_->conjugate(g, pm[i]);
            if (!std::binary_search(qm.begin(), qm.end(), y)) {
                lands = false;
                break;
            }
            images[i] = local_.to_local.at(y);
        }
        if (!lands || !seen.insert(images).second)
            continue;
        out.push_back(FusionMorphism{p, q, std::move(images), g});
    }
    std::sort(out.begin(), out.end(),
              [](const FusionMorphism& a, const FusionMorphism& b) { return a.images < b.images; });
    return out;
}

std::vector<FusionMorphism> FusionSystem::hom_to_s(const Subgroup& p) const {
    return hom(p, Subgroup::full(local_.group));
}

AutFResult FusionSystem::aut(const Subgroup& p) const {
    AutFResult r;
    r.morphisms = hom(p, p);
    int deg = static_cast<int>(p.members.size());
    std::vector<Permutation> perms;
    for (const auto& m : r.morphisms) {
        std::vector<int> img(deg);
        for (int i = 0; i < deg; ++i) {
            auto it = std::lower_bound(p.members.begin(), p.members.end(), m.images[i]);
            img[i] = static_cast<int>(it - p.members.begin());
        }
        perms.emplace_back(std::move(img));
    }
    r.group = FiniteGroup::enumerate(perms, "Aut");
    if (r.group->order() != static_cast<long>(r.morphisms.size()))
        throw ConsistencyError("fusion automorphisms are not closed under composition");

    // the distinguished subgroup induced by N_S(P)
    Subgroup norm = normalizer(local_.group, p);
    std::set<int> gens;
    for (int x : norm.members) {
        std::vector<int> img(deg);
        for (int i = 0; i < deg; ++i) {
            int y = local_.group->conjugate(x, p.members[i]);
            auto it = std::lower_bound(p.members.begin(), p.members.end(), y);
            img[i] = static_cast<int>(it - p.members.begin());
        }
        gens.insert(r.group->index_of(Permutation(img)));
    }
    r.aut_s = Subgroup::generated(r.group, {gens.begin(), gens.end()});
    return r;
}

bool FusionSystem::fully_normalized(const Subgroup& p) const {
    long mine = normalizer(local_.group, p).order();
    int fc = f_of_sub_class_[subs_.class_index_of(p)];
    for (int c : sub_f_classes_[fc])
        if (normalizer(local_.group, subs_.class_rep(c)).order() > mine)
            return false;
    return true;
}

bool FusionSystem::fully_centralized(const Subgroup& p) const {
    long mine = centralizer(local_.group, p).order();
    int fc = f_of_sub_class_[subs_.class_index_of(p)];
    for (int c : sub_f_classes_[fc])
        if (centralizer(local_.group, subs_.class_rep(c)).order() > mine)
            return false;
    return true;
}

SaturationVerdict FusionSystem::check_saturation() const {
    const GroupPtr& sl = local_.group;

    // Sylow axiom: every fully normalized class member is fully centralized
    // and Aut_S(P) is a Sylow p-subgroup of Aut_F(P)
    for (const auto& fc : sub_f_classes_) {
        long max_n = 0, max_c = 0;
        for (int c : fc) {
            max_n = std::max(max_n, normalizer(sl, subs_.class_rep(c)).order());
            max_c = std::max(max_c, centralizer(sl, subs_.class_rep(c)).order());
        }
        for (int c : fc) {
            const Subgroup& rep = subs_.class_rep(c);
            if (normalizer(sl, rep).order() != max_n)
                continue;
            if (centralizer(sl, rep).order() != max_c)
                return {false, "fully normalized subgroup " + subs_.class_labels[c] +
                                   " is not fully centralized"};
            AutFResult a = aut(rep);
            long p_part = 1;
            long total = a.group->order();
            while (total % p_ == 0) {
                total /= p_;
                p_part *= p_;
            }
            if (a.aut_s.order() != p_part)
                return {false, "inner automorphisms of " + subs_.class_labels[c] +
                                   " are not Sylow in the fusion automorphism group (" +
                                   std::to_string(a.aut_s.order()) + " vs p-part " +
                                   std::to_string(p_part) + " of " +
                                   std::to_string(a.group->order()) + ")"};
        }
    }

    // extension axiom
    std::map<std::vector<int>, std::vector<FusionMorphism>> hom_cache;
    auto homs_from = [&](const Subgroup& p) -> const std::vector<FusionMorphism>& {
        auto it = hom_cache.find(p.members);
        if (it == hom_cache.end())
            it = hom_cache.emplace(p.members, hom_to_s(p)).first;
        return it->second;
    };
    for (int c = 0; c < subs_.class_count(); ++c) {
        const Subgroup& p = subs_.class_rep(c);
        Subgroup np = normalizer(sl, p);
        for (const auto& phi : homs_from(p)) {
            Subgroup img(sl, phi.image_members());
            if (!fully_centralized(img))
                continue;
            Subgroup nq = normalizer(sl, img);
            // N_phi = elements x of N_S(P) whose conjugation transports
            // through phi to some conjugation on the image
            std::vector<int> n_phi;
            for (int x : np.members) {
                bool found = false;
                for (int y : nq.members) {
                    bool ok = true;
                    for (int a : p.members) {
                        int lhs = phi.apply(sl->conjugate(x, a));
                        int rhs = sl->conjugate(y, phi.apply(a));
                        if (lhs != rhs) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        found = true;
                        break;
                    }
                }
                if (found)
                    n_phi.push_back(x);
            }
            Subgroup dom(sl, n_phi);
            bool extends = false;
            for (const auto& psi : homs_from(dom)) {
                bool agrees = true;
                for (int a : p.members)
                    if (psi.apply(a) != phi.apply(a)) {
                        agrees = false;
                        break;
                    }
                if (agrees) {
                    extends = true;
                    break;
                }
            }
            if (!extends) {
                std::ostringstream os;
                os << "morphism from " << subs_.class_labels[c]
                   << " has no extension to its transporter domain of order " << dom.order();
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

FusionSystem build_fusion_system(const GroupPtr& g, const Subgroup& s, long p) {
    return FusionSystem::build(g, s, p);
}

} // namespace fusrep
