#include "fusionrep/perm.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>

namespace fusrep {

Permutation::Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= degree() || seen[v])
            throw StructuralError("permutation image array is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    Permutation p;
    p.images = std::move(img);
    return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(degree);
    for (const auto& c : cycles) {
        for (size_t i = 0; i < c.size(); ++i) {
            int from = c[i];
            int to = c[(i + 1) % c.size()];
            if (from < 0 || from >= degree)
                throw StructuralError("cycle point out of range");
            p.images[from] = to;
        }
    }
    return Permutation(p.images); // re-validate
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images[i] != i)
            return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    Permutation out;
    out.images.resize(images.size());
    for (size_t i = 0; i < images.size(); ++i)
        out.images[i] = images[rhs.images[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images.resize(images.size());
    for (size_t i = 0; i < images.size(); ++i)
        out.images[images[i]] = static_cast<int>(i);
    return out;
}

GroupPtr FiniteGroup::enumerate(std::vector<Permutation> generators,
                                std::string name, GroupBounds bounds) {
    if (generators.empty())
        throw PreconditionError("generator list is empty");
    int degree = generators[0].degree();
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw StructuralError("generators have mismatched degrees");
    if (degree > bounds.max_degree)
        throw SizeError("degree exceeds bound");

    std::set<Permutation> seen;
    std::deque<Permutation> queue;
    Permutation id = Permutation::identity(degree);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Permutation cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            Permutation next = g * cur;
            if (seen.insert(next).second) {
                if (static_cast<long>(seen.size()) > bounds.max_order)
                    throw SizeError("group order exceeds bound");
                queue.push_back(next);
            }
        }
    }

    auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    grp->degree_ = degree;
    grp->name_ = std::move(name);
    grp->generators_ = std::move(generators);
    grp->elements_.assign(seen.begin(), seen.end()); // sorted by std::set
    for (size_t i = 0; i < grp->elements_.size(); ++i)
        grp->index_[grp->elements_[i]] = static_cast<int>(i);
    grp->identity_index_ = grp->index_.at(id);
    grp->inverse_.resize(grp->elements_.size());
    for (size_t i = 0; i < grp->elements_.size(); ++i)
        grp->inverse_[i] = grp->index_.at(grp->elements_[i].inverse());

    long n = grp->order();
    if (n <= 1024) {
        grp->mul_table_.resize(static_cast<size_t>(n) * n);
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b)
                grp->mul_table_[a * n + b] =
                    grp->index_.at(grp->elements_[a] * grp->elements_[b]);
        grp->has_table_ = true;
    }
    grp->compute_classes();
    return grp;
}

int FiniteGroup::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw StructuralError("permutation is not a group element");
    return it->second;
}

int FiniteGroup::mul(int a, int b) const {
    if (has_table_)
        return mul_table_[static_cast<size_t>(a) * order() + b];
    return index_.at(elements_[a] * elements_[b]);
}

int FiniteGroup::inv(int a) const { return inverse_[a]; }

long FiniteGroup::element_order(int a) const {
    long ord = 1;
    int cur = a;
    while (cur != identity_index_) {
        cur = mul(cur, a);
        ++ord;
    }
    return ord;
}

int FiniteGroup::power(int a, long e) const {
    long n = element_order(a);
    e %= n;
    if (e < 0)
        e += n;
    int acc = identity_index_;
    for (long i = 0; i < e; ++i)
        acc = mul(acc, a);
    return acc;
}

void FiniteGroup::compute_classes() {
    long n = order();
    class_of_.assign(n, -1);
    std::vector<std::vector<int>> raw;
    for (int e = 0; e < n; ++e) {
        if (class_of_[e] >= 0)
            continue;
        std::vector<int> orbit{e};
        class_of_[e] = 0; // mark
        for (size_t k = 0; k < orbit.size(); ++k) {
            for (const auto& g : generators_) {
                int gi = index_.at(g);
                int c = conjugate(gi, orbit[k]);
                if (class_of_[c] < 0) {
                    class_of_[c] = 0;
                    orbit.push_back(c);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        raw.push_back(std::move(orbit));
    }
    // canonical order: by (element order, smallest member index)
    std::sort(raw.begin(), raw.end(), [&](const auto& a, const auto& b) {
        long oa = element_order(a[0]), ob = element_order(b[0]);
        if (oa != ob)
            return oa < ob;
        return a[0] < b[0];
    });
    classes_ = std::move(raw);
    for (size_t c = 0; c < classes_.size(); ++c)
        for (int e : classes_[c])
            class_of_[e] = static_cast<int>(c);
}

namespace {

long chain_order(int degree, std::vector<Permutation> gens) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const Permutation& p) { return p.is_identity(); }),
               gens.end());
    if (gens.empty())
        return 1;
    int base = -1;
    for (int i = 0; i < degree && base < 0; ++i)
        for (const auto& g : gens)
            if (g(i) != i) {
                base = i;
                break;
            }
    // orbit of base with transversal
    std::vector<int> orbit{base};
    std::vector<Permutation> transversal{Permutation::identity(degree)};
    std::vector<int> pos(degree, -1);
    pos[base] = 0;
    for (size_t k = 0; k < orbit.size(); ++k) {
        for (const auto& g : gens) {
            int img = g(orbit[k]);
            if (pos[img] < 0) {
                pos[img] = static_cast<int>(orbit.size());
                orbit.push_back(img);
                transversal.push_back(g * transversal[k]);
            }
        }
    }
    std::set<Permutation> schreier;
    for (size_t k = 0; k < orbit.size(); ++k)
        for (const auto& g : gens) {
            const Permutation u = g * transversal[k];
            const Permutation& rep = transversal[pos[u(base)]];
            Permutation s = rep.inverse() * u;
            if (!s.is_identity())
                schreier.insert(std::move(s));
        }
    return static_cast<long>(orbit.size()) *
           chain_order(degree, std::vector<Permutation>(schreier.begin(), schreier.end()));
}

} // namespace

long FiniteGroup::order_by_stabilizer_chain() const {
    return chain_order(degree_, generators_);
}

Subgroup::Subgroup(GroupPtr g, std::vector<int> m) : parent(std::move(g)), members(std::move(m)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

Subgroup Subgroup::trivial(const GroupPtr& g) {
    return Subgroup(g, {g->identity_index()});
}

Subgroup Subgroup::full(const GroupPtr& g) {
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
}

Subgroup Subgroup::generated(const GroupPtr& g, const std::vector<int>& gens) {
    std::set<int> seen{g->identity_index()};
    std::deque<int> queue{g->identity_index()};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int s : gens) {
            int nxt = g->mul(s, cur);
            if (seen.insert(nxt).second)
                queue.push_back(nxt);
        }
    }
    return Subgroup(g, std::vector<int>(seen.begin(), seen.end()));
}

bool Subgroup::contains(int e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
    return std::includes(members.begin(), members.end(),
                         other.members.begin(), other.members.end());
}

bool Subgroup::is_normal_in(const Subgroup& bigger) const {
    for (int g : bigger.members)
        for (int h : members)
            if (!contains(parent->conjugate(g, h)))
                return false;
    return true;
}

bool Subgroup::is_p_group(long p) const {
    long n = order();
    while (n % p == 0)
        n /= p;
    return n == 1;
}

Subgroup Subgroup::conjugated_by(int g) const {
    std::vector<int> out;
    out.reserve(members.size());
    for (int h : members)
        out.push_back(parent->conjugate(g, h));
    return Subgroup(parent, std::move(out));
}

long Subgroup::exponent() const {
    long e = 1;
    for (int m : members)
        e = std::lcm(e, parent->element_order(m));
    return e;
}

bool Subgroup::operator<(const Subgroup& o) const {
    if (members.size() != o.members.size())
        return members.size() < o.members.size();
    return members < o.members;
}

Subgroup normalizer(const Subgroup& ambient, const Subgroup& sub) {
    std::vector<int> out;
    for (int g : ambient.members) {
        bool ok = true;
        for (int h : sub.members)
            if (!sub.contains(sub.parent->conjugate(g, h))) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(g);
    }
    return Subgroup(sub.parent, std::move(out));
}

Subgroup centralizer(const Subgroup& ambient, const Subgroup& sub) {
    std::vector<int> out;
    for (int g : ambient.members) {
        bool ok = true;
        for (int h : sub.members)
            if (sub.parent->conjugate(g, h) != h) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(g);
    }
    return Subgroup(sub.parent, std::move(out));
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& sub) {
    return normalizer(Subgroup::full(g), sub);
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& sub) {
    return centralizer(Subgroup::full(g), sub);
}

Subgroup center(const GroupPtr& g) {
    return centralizer(g, Subgroup::full(g));
}

Subgroup commutator_subgroup(const Subgroup& h) {
    const auto& g = h.parent;
    std::vector<int> comms;
    for (int a : h.members)
        for (int b : h.members)
            comms.push_back(g->mul(g->mul(a, b), g->mul(g->inv(a), g->inv(b))));
    return Subgroup::generated(g, comms);
}

EmbeddedGroup as_abstract_group(const Subgroup& h, const std::string& name) {
    const auto& g = h.parent;
    long n = h.order();
    std::unordered_map<int, int> point_of;
    for (long i = 0; i < n; ++i)
        point_of[h.members[i]] = static_cast<int>(i);
    // left regular action
    std::vector<Permutation> gens;
    for (int m : h.members) {
        std::vector<int> img(n);
        for (long i = 0; i < n; ++i)
            img[i] = point_of.at(g->mul(m, h.members[i]));
        gens.emplace_back(std::move(img));
    }
    GroupBounds b{static_cast<int>(n), n};
    EmbeddedGroup out;
    out.group = FiniteGroup::enumerate(gens, name, b);
    if (out.group->order() != n)
        throw ConsistencyError("regular representation has wrong order");
    out.to_parent.resize(n);
    for (long i = 0; i < n; ++i) {
        int local = out.group->index_of(out.group->generators()[i]);
        out.to_parent[local] = h.members[i];
        out.to_local[h.members[i]] = local;
    }
    return out;
}

QuotientResult quotient_group(const GroupPtr& g, const Subgroup& normal) {
    if (!normal.is_normal_in(Subgroup::full(g)))
        throw StructuralError("subgroup is not normal");
    long n = g->order();
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int e = 0; e < n; ++e) {
        if (coset_of[e] >= 0)
            continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(e);
        for (int h : normal.members)
            coset_of[g->mul(e, h)] = c;
    }
    long idx = static_cast<long>(reps.size());
    std::vector<Permutation> gens;
    for (const auto& gen : g->generators()) {
        int gi = g->index_of(gen);
        std::vector<int> img(idx);
        for (long c = 0; c < idx; ++c)
            img[c] = coset_of[g->mul(gi, reps[c])];
        gens.emplace_back(std::move(img));
    }
    QuotientResult out;
    out.quotient = FiniteGroup::enumerate(
        gens, g->name().empty() ? "" : g->name() + "/N",
        GroupBounds{static_cast<int>(idx), idx});
    if (out.quotient->order() * normal.order() != g->order())
        throw ConsistencyError("quotient order times normal order != group order");
    out.coset_of = coset_of;
    out.quotient_elem.resize(n);
    for (int e = 0; e < n; ++e) {
        std::vector<int> img(idx);
        for (long c = 0; c < idx; ++c)
            img[c] = coset_of[g->mul(e, reps[c])];
        out.quotient_elem[e] = out.quotient->index_of(Permutation(std::move(img)));
    }
    return out;
}

} // namespace fusrep
