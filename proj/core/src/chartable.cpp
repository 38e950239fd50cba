#include "fusionrep/chartable.hpp"

#include <algorithm>
#include <map>

namespace fusrep {

namespace {

long group_exponent(const GroupPtr& g) {
    long e = 1;
    for (int c = 0; c < g->class_count(); ++c)
        e = int_lcm(Int(e), Int(g->element_order(g->conjugacy_classes()[c][0]))).get_si();
    return e;
}

bool cyclo_less(const Cyclo& a, const Cyclo& b) {
    long m = int_lcm(Int(a.level()), Int(b.level())).get_si();
    const auto ca = a.at_level(m).coords();
    const auto cb = b.at_level(m).coords();
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i])
            return ca[i] < cb[i];
    }
    return false;
}

bool value_vector_less(const ClassFunction& a, const ClassFunction& b) {
    for (size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] != b.values[i])
            return cyclo_less(a.values[i], b.values[i]);
    }
    return false;
}

} // namespace

ClassFunction::ClassFunction(GroupPtr g, std::vector<Cyclo> vals)
    : group(std::move(g)), values(std::move(vals)) {
    if (static_cast<int>(values.size()) != group->class_count())
        throw PreconditionError("class function needs one value per conjugacy class");
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    if (group->order() != o.group->order() || values.size() != o.values.size())
        throw PreconditionError("class function arithmetic needs matching groups");
    std::vector<Cyclo> v(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        v[i] = values[i] + o.values[i];
    return ClassFunction(group, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    return *this + o.scaled(Rat(-1));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
    if (group->order() != o.group->order() || values.size() != o.values.size())
        throw PreconditionError("class function arithmetic needs matching groups");
    std::vector<Cyclo> v(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        v[i] = values[i] * o.values[i];
    return ClassFunction(group, std::move(v));
}

ClassFunction ClassFunction::scaled(const Rat& q) const {
    std::vector<Cyclo> v(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        v[i] = values[i] * q;
    return ClassFunction(group, std::move(v));
}

ClassFunction ClassFunction::conjugate() const {
    std::vector<Cyclo> v(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        v[i] = values[i].conjugate();
    return ClassFunction(group, std::move(v));
}

ClassFunction ClassFunction::galois(long k) const {
    std::vector<Cyclo> v(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        v[i] = values[i].galois(k);
    return ClassFunction(group, std::move(v));
}

bool ClassFunction::is_zero() const {
    for (const auto& v : values)
        if (!v.is_zero())
            return false;
    return true;
}

bool ClassFunction::is_rational_valued() const {
    for (const auto& v : values)
        if (!v.is_rational())
            return false;
    return true;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    return group->order() == o.group->order() && values == o.values;
}

ClassFunction ClassFunction::at_level(long n) const {
    std::vector<Cyclo> v(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        v[i] = values[i].at_level(n);
    return ClassFunction(group, std::move(v));
}

ClassFunction trivial_character(const GroupPtr& g) {
    return ClassFunction(g, std::vector<Cyclo>(g->class_count(), Cyclo::one()));
}

ClassFunction regular_character(const GroupPtr& g) {
    std::vector<Cyclo> v(g->class_count(), Cyclo::zero());
    v[g->class_of(g->identity_index())] = Cyclo(Rat(g->order()));
    return ClassFunction(g, std::move(v));
}

ClassFunction permutation_character(const Subgroup& h) {
    const GroupPtr& g = h.parent;
    std::vector<Cyclo> v(g->class_count());
    for (int c = 0; c < g->class_count(); ++c) {
        int s = g->conjugacy_classes()[c][0];
        // fixed cosets xH: s x H = x H, i.e. x^{-1} s x in H
        long fixed = 0;
        for (int x = 0; x < g->order(); ++x)
            if (h.contains(g->conjugate(g->inv(x), s)))
                ++fixed;
        Rat val(fixed, h.order());
        val.canonicalize(); // mpq_class(num, den) does not reduce on its own
        v[c] = Cyclo(val);
    }
    return ClassFunction(g, std::move(v));
}

Cyclo inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.group->order() != b.group->order() || a.values.size() != b.values.size())
        throw PreconditionError("inner product needs matching groups");
    Cyclo acc = Cyclo::zero();
    for (int c = 0; c < a.group->class_count(); ++c) {
        Rat size(static_cast<long>(a.group->conjugacy_classes()[c].size()));
        acc += a.values[c] * b.values[c].conjugate() * size;
    }
    return acc * Rat(1, a.group->order());
}

Rat fixed_dim(const ClassFunction& chi, const Subgroup& h) {
    if (h.parent->order() != chi.group->order())
        throw PreconditionError("fixed_dim subgroup lives in a different group");
    Cyclo acc = Cyclo::zero();
    for (int e : h.members)
        acc += chi.at_element(e);
    return (acc * Rat(1, h.order())).rational_value();
}

std::vector<std::vector<Cyclo>> linear_characters(const Subgroup& h) {
    EmbeddedGroup hg = as_abstract_group(h);
    Subgroup comm = commutator_subgroup(Subgroup::full(hg.group));
    QuotientResult q = quotient_group(hg.group, comm);
    AbelianDecomposition ab = abelian_decomposition(q.quotient);

    long count = 1;
    for (long d : ab.orders)
        count *= d;
    std::vector<std::vector<Cyclo>> out;
    out.reserve(count);
    std::vector<long> tup(ab.orders.size(), 0);
    for (long c = 0; c < count; ++c) {
        std::vector<Cyclo> vals(h.members.size());
        for (size_t i = 0; i < h.members.size(); ++i) {
            int qe = q.quotient_elem[hg.to_local.at(h.members[i])];
            Cyclo v = Cyclo::one();
            for (size_t j = 0; j < ab.orders.size(); ++j)
                v = v * Cyclo::root_of_unity(ab.orders[j], tup[j] * ab.exponents[qe][j]);
            vals[i] = v;
        }
        out.push_back(std::move(vals));
        int pos = static_cast<int>(ab.orders.size()) - 1;
        while (pos >= 0 && ++tup[pos] == ab.orders[pos]) {
            tup[pos] = 0;
            --pos;
        }
    }
    return out;
}

ClassFunction induce_from_subgroup(const Subgroup& h, const std::vector<Cyclo>& values) {
    const GroupPtr& g = h.parent;
    if (values.size() != h.members.size())
        throw PreconditionError("induction needs one value per subgroup element");
    auto value_at = [&](int e) -> const Cyclo& {
        auto it = std::lower_bound(h.members.begin(), h.members.end(), e);
        return values[it - h.members.begin()];
    };
    std::vector<Cyclo> v(g->class_count(), Cyclo::zero());
    for (int c = 0; c < g->class_count(); ++c) {
        int s = g->conjugacy_classes()[c][0];
        Cyclo acc = Cyclo::zero();
        for (int x = 0; x < g->order(); ++x) {
            int y = g->conjugate(g->inv(x), s);
            if (h.contains(y))
                acc += value_at(y);
        }
        v[c] = acc * Rat(1, h.order());
    }
    return ClassFunction(g, std::move(v));
}

CharacterTable character_table(const GroupPtr& g) {
    int nclasses = g->class_count();
    long exp = group_exponent(g);

    SubgroupClassification subs = enumerate_subgroups(g);
    // candidates ordered by increasing induced degree = [G : H]
    std::vector<int> class_order(subs.class_count());
    for (int i = 0; i < subs.class_count(); ++i)
        class_order[i] = i;
    std::sort(class_order.begin(), class_order.end(), [&](int a, int b) {
        return subs.class_rep(a).order() > subs.class_rep(b).order();
    });

    std::vector<ClassFunction> found;
    auto reduce = [&](ClassFunction cand) {
        for (const auto& irr : found) {
            Cyclo m = inner_product(cand, irr);
            if (!m.is_zero())
                cand = cand - irr.scaled(m.rational_value());
        }
        return cand;
    };
    auto norm_of = [](const ClassFunction& f) { return inner_product(f, f).rational_value(); };
    auto harvest = [&](const ClassFunction& rem) {
        if (norm_of(rem) != 1)
            return false;
        Rat deg = rem.degree().rational_value();
        found.push_back(deg > 0 ? rem : rem.scaled(Rat(-1)));
        return true;
    };

    // monomial phase: induced linear characters, peeled
    std::vector<ClassFunction> remainders;
    for (int c : class_order) {
        if (static_cast<int>(found.size()) == nclasses)
            break;
        const Subgroup& h = subs.class_rep(c);
        for (const auto& lin : linear_characters(h)) {
            ClassFunction rem = reduce(induce_from_subgroup(h, lin));
            if (!rem.is_zero() && !harvest(rem))
                remainders.push_back(std::move(rem));
        }
    }

    // completion for non-monomial groups: the induced linear characters
    // span the whole virtual character lattice (Brauer induction), so the
    // missing irreducibles are reachable by shortening sums and differences
    // of the remainders
    while (static_cast<int>(found.size()) < nclasses) {
        std::vector<ClassFunction> next;
        for (auto& r : remainders) {
            ClassFunction rr = reduce(std::move(r));
            if (!rr.is_zero() && !harvest(rr))
                next.push_back(std::move(rr));
        }
        remainders = std::move(next);
        if (static_cast<int>(found.size()) == nclasses)
            break;
        bool progress = false;
        size_t cnt = remainders.size();
        for (size_t i = 0; i < cnt && static_cast<int>(found.size()) < nclasses; ++i)
            for (size_t j = i + 1; j < cnt && static_cast<int>(found.size()) < nclasses; ++j) {
                Rat bound = std::max(norm_of(remainders[i]), norm_of(remainders[j]));
                for (int sign : {-1, 1}) {
                    ClassFunction t =
                        reduce(remainders[i] + remainders[j].scaled(Rat(sign)));
                    if (t.is_zero())
                        continue;
                    Rat nt = norm_of(t);
                    if (nt >= bound)
                        continue;
                    progress = true;
                    if (!harvest(t))
                        remainders.push_back(std::move(t));
                }
            }
        if (!progress && static_cast<int>(found.size()) < nclasses)
            throw ConsistencyError("character table construction stalled before completion");
    }

    CharacterTable t;
    t.group = g;
    t.conductor = exp;
    for (auto& chi : found)
        t.irreducibles.push_back(chi.at_level(exp));
    std::sort(t.irreducibles.begin(), t.irreducibles.end(),
              [&](const ClassFunction& a, const ClassFunction& b) {
                  Rat da = a.degree().rational_value(), db = b.degree().rational_value();
                  if (da != db)
                      return da < db;
                  return value_vector_less(a, b);
              });
    Int degsum = 0;
    for (const auto& chi : t.irreducibles) {
        Rat d = chi.degree().rational_value();
        if (d.get_den() != 1 || d < 1)
            throw ConsistencyError("irreducible degree is not a positive integer");
        t.degrees.push_back(d.get_num().get_si());
        degsum += d.get_num() * d.get_num();
    }
    if (degsum != g->order())
        throw ConsistencyError("degree squares do not sum to the group order");
    for (int i = 0; i < t.size(); ++i)
        for (int j = i; j < t.size(); ++j) {
            Cyclo ip = inner_product(t.irreducibles[i], t.irreducibles[j]);
            if (ip != (i == j ? Cyclo::one() : Cyclo::zero()))
                throw ConsistencyError("character table fails row orthogonality");
        }
    return t;
}

std::vector<Int> CharacterTable::decompose(const ClassFunction& chi) const {
    std::vector<Int> out;
    ClassFunction rem = chi;
    for (const auto& irr : irreducibles) {
        Rat m = inner_product(chi, irr).rational_value();
        if (m.get_den() != 1)
            throw ConsistencyError("class function is not a virtual character");
        out.push_back(m.get_num());
        rem = rem - irr.scaled(m);
    }
    if (!rem.is_zero())
        throw ConsistencyError("class function is outside the character lattice");
    return out;
}

ClassFunction CharacterTable::combine(const std::vector<Int>& coeffs) const {
    if (coeffs.size() != irreducibles.size())
        throw PreconditionError("coefficient vector length mismatch");
    ClassFunction acc(group, std::vector<Cyclo>(group->class_count(), Cyclo::zero()));
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            acc = acc + irreducibles[i].scaled(Rat(coeffs[i]));
    return acc;
}

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& p) {
    EmbeddedGroup emb = as_abstract_group(p);
    std::vector<Cyclo> v(emb.group->class_count());
    for (int c = 0; c < emb.group->class_count(); ++c) {
        int local_rep = emb.group->conjugacy_classes()[c][0];
        v[c] = chi.at_element(emb.to_parent[local_rep]);
    }
    return ClassFunction(emb.group, std::move(v));
}

ClassFunction restrict_along(const ClassFunction& chi, const FusionMorphism& phi) {
    EmbeddedGroup emb = as_abstract_group(phi.source);
    std::vector<Cyclo> v(emb.group->class_count());
    for (int c = 0; c < emb.group->class_count(); ++c) {
        int local_rep = emb.group->conjugacy_classes()[c][0];
        v[c] = chi.at_element(phi.apply(emb.to_parent[local_rep]));
    }
    return ClassFunction(emb.group, std::move(v));
}

bool is_F_stable(const ClassFunction& chi, const FusionSystem& f) {
    if (chi.group->order() != f.s()->order())
        throw PreconditionError("stability check needs a class function on S");
    for (const auto& fc : f.element_f_classes())
        for (size_t i = 1; i < fc.size(); ++i)
            if (chi.values[fc[i]] != chi.values[fc[0]])
                return false;
    return true;
}

bool is_F_stable_by_restrictions(const ClassFunction& chi, const FusionSystem& f) {
    const auto& subs = f.subgroup_classes();
    for (int c = 0; c < subs.class_count(); ++c) {
        const Subgroup& p = subs.class_rep(c);
        for (const auto& phi : f.hom_to_s(p))
            for (int x : p.members)
                if (chi.at_element(phi.apply(x)) != chi.at_element(x))
                    return false;
    }
    return true;
}

ClassFunction galois_transfer(const ClassFunction& chi, TargetField k) {
    long exp = group_exponent(chi.group);
    if (k == TargetField::Reals) {
        // Gal(K(zeta)/K) for K = R is generated by complex conjugation
        if (exp <= 2)
            return chi;
        return chi + chi.conjugate();
    }
    ClassFunction acc(chi.group, std::vector<Cyclo>(chi.group->class_count(), Cyclo::zero()));
    for (long u = 1; u <= exp; ++u)
        if (int_gcd(Int(u), Int(exp)) == 1)
            acc = acc + chi.galois(u == 1 ? 1 : u);
    return acc;
}

int frobenius_schur(const ClassFunction& chi) {
    Cyclo acc = Cyclo::zero();
    const GroupPtr& g = chi.group;
    for (int e = 0; e < g->order(); ++e)
        acc += chi.at_element(g->mul(e, e));
    Rat v = (acc * Rat(1, g->order())).rational_value();
    if (v != -1 && v != 0 && v != 1)
        throw ConsistencyError("indicator outside {-1, 0, 1}");
    return static_cast<int>(v.get_num().get_si());
}

std::vector<ClassFunction> real_irreducible_characters(const CharacterTable& t) {
    std::vector<ClassFunction> out;
    std::vector<bool> used(t.size(), false);
    for (int i = 0; i < t.size(); ++i) {
        if (used[i])
            continue;
        used[i] = true;
        int fs = frobenius_schur(t.irreducibles[i]);
        if (fs == 1) {
            out.push_back(t.irreducibles[i]);
        } else if (fs == -1) {
            out.push_back(t.irreducibles[i].scaled(Rat(2)));
        } else {
            ClassFunction conj = t.irreducibles[i].conjugate();
            bool paired = false;
            for (int j = i + 1; j < t.size(); ++j)
                if (!used[j] && t.irreducibles[j] == conj) {
                    used[j] = true;
                    paired = true;
                    break;
                }
            if (!paired)
                throw ConsistencyError("complex irreducible without a conjugate partner");
            out.push_back(t.irreducibles[i] + conj);
        }
    }
    return out;
}

std::vector<std::vector<int>> galois_orbits(const CharacterTable& t) {
    std::vector<std::vector<int>> out;
    std::vector<bool> used(t.size(), false);
    for (int i = 0; i < t.size(); ++i) {
        if (used[i])
            continue;
        std::vector<int> orbit;
        for (long u = 1; u <= t.conductor; ++u) {
            if (int_gcd(Int(u), Int(t.conductor)) != 1)
                continue;
            ClassFunction img = t.irreducibles[i].galois(u);
            for (int j = 0; j < t.size(); ++j)
                if (!used[j] && t.irreducibles[j] == img) {
                    used[j] = true;
                    orbit.push_back(j);
                }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

} // namespace fusrep
