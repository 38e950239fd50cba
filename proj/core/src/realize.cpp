#include "fusionrep/realize.hpp"

#include "fusionrep/numbers.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fusrep {

std::string realize_status_name(RealizeStatus s) {
    switch (s) {
    case RealizeStatus::Realized:
        return "realized";
    case RealizeStatus::NotRealizable:
        return "not-realizable";
    case RealizeStatus::PreconditionFailed:
        return "precondition-failed";
    case RealizeStatus::FalsificationFlag:
        return "falsification-flag";
    }
    return "?";
}

TheoremAVerdict theorem_A_check(FusionContext& ctx) {
    TheoremAVerdict v;
    v.image = ctx.image(FieldTag::R);
    v.cba = ctx.cba_lattice();
    v.contained = v.cba.contains_lattice(v.image);
    v.equal = v.contained && v.image == v.cba;
    return v;
}

static std::string join_witnesses(const ConditionVerdict& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.witnesses.size(); ++i)
        os << (i ? "; " : "") << v.witnesses[i];
    return os.str();
}

RealizationResult solve_virtual(FusionContext& ctx, const IntVec& f) {
    RealizationResult out;
    const auto& subs = ctx.subs();
    if (static_cast<int>(f.size()) != subs.class_count()) {
        out.status = RealizeStatus::PreconditionFailed;
        out.diagnostics = "value count differs from the subgroup class count";
        return out;
    }
    if (!s_to_f_values(ctx.fusion(), f)) {
        out.status = RealizeStatus::PreconditionFailed;
        out.diagnostics = "not constant on fusion classes of subgroups";
        return out;
    }
    auto bs = check_borel_smith(subs, ctx.prime(), f);
    if (!bs.ok) {
        out.status = RealizeStatus::PreconditionFailed;
        out.diagnostics = join_witnesses(bs);
        return out;
    }
    auto fa = check_fusion_artin(ctx.fusion(), f);
    if (!fa.ok) {
        out.status = RealizeStatus::PreconditionFailed;
        out.diagnostics = join_witnesses(fa);
        return out;
    }

    const IntMat& dm = ctx.dims(FieldTag::R);
    const IntMat& gen = ctx.stable(FieldTag::R).basis;
    int nc = static_cast<int>(dm.size());
    int nb = ctx.basis(FieldTag::R).size();
    int m = static_cast<int>(gen.size());
    IntMat sys(nc, IntVec(m, 0));
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < nb; ++k)
                sys[i][j] += dm[i][k] * gen[j][k];
    auto y = solve_integer(sys, f);
    if (!y) {
        out.status = RealizeStatus::FalsificationFlag;
        out.diagnostics = "no integer solution in the stable real sublattice";
        return out;
    }
    IntVec x(nb, 0);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < nb; ++k)
            x[k] += (*y)[j] * gen[j][k];
    if (mat_vec(dm, x) != f)
        throw ConsistencyError("virtual solver witness fails the re-check");
    out.witness = std::move(x);
    out.diagnostics = "integral solve over the stable sublattice generators";
    return out;
}

RealizationResult solve_monotone(FusionContext& ctx, const IntVec& f, bool weak_only) {
    RealizationResult out;
    const auto& subs = ctx.subs();
    if (static_cast<int>(f.size()) != subs.class_count()) {
        out.status = RealizeStatus::PreconditionFailed;
        out.diagnostics = "value count differs from the subgroup class count";
        return out;
    }
    if (!monotone_check(subs, f)) {
        out.status = RealizeStatus::PreconditionFailed;
        out.diagnostics = "not monotone";
        return out;
    }
    if (!s_to_f_values(ctx.fusion(), f)) {
        out.status = RealizeStatus::PreconditionFailed;
        out.diagnostics = "not constant on fusion classes of subgroups";
        return out;
    }
    if (weak_only) {
        auto rows = borel_smith_rows(subs, ctx.prime());
        std::erase_if(rows, [](const ConditionRow& r) {
            return r.label != "rank-two elementary abelian quotient";
        });
        auto v = check_rows(rows, f);
        if (!v.ok) {
            out.status = RealizeStatus::PreconditionFailed;
            out.diagnostics = join_witnesses(v);
            return out;
        }
    } else {
        auto v = check_borel_smith(subs, ctx.prime(), f);
        if (!v.ok) {
            out.status = RealizeStatus::PreconditionFailed;
            out.diagnostics = join_witnesses(v);
            return out;
        }
    }

    // fixed dims on cyclic subgroups determine the multiplicities uniquely
    const auto& rb = ctx.rational();
    DetectionMatrix det = cyclic_detection_matrix(subs, rb);
    int nb = static_cast<int>(rb.characters.size());
    RatMat a(nb, RatVec(nb));
    RatVec rhs(nb);
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < nb; ++j)
            a[i][j] = Rat(det.entries[i][j]);
        rhs[i] = Rat(f[det.cyclic_classes[i]]);
    }
    auto x = solve_rational(a, rhs);
    if (!x) {
        out.status = RealizeStatus::FalsificationFlag;
        out.diagnostics = "no rational solution on the cyclic detection system";
        return out;
    }
    // the unique candidate must match f on every class, not only cyclic ones
    const IntMat& dmq = ctx.dims(FieldTag::Q);
    for (int c = 0; c < subs.class_count(); ++c) {
        Rat v = 0;
        for (int j = 0; j < nb; ++j)
            v += Rat(dmq[c][j]) * (*x)[j];
        if (v != Rat(f[c])) {
            out.status = RealizeStatus::FalsificationFlag;
            out.diagnostics = "unique rational candidate misses a non-cyclic class";
            return out;
        }
    }
    Int n = 1;
    for (const Rat& v : *x)
        n = int_lcm(n, v.get_den());
    IntVec w(nb);
    bool nonneg = true;
    for (int j = 0; j < nb; ++j) {
        Rat scaled = (*x)[j] * Rat(n);
        w[j] = scaled.get_num();
        if (w[j] < 0)
            nonneg = false;
    }
    if (!nonneg) {
        out.status = RealizeStatus::FalsificationFlag;
        out.witness = std::move(w);
        out.n = n;
        out.diagnostics = "unique solution has a negative multiplicity";
        return out;
    }
    if (!ctx.stable(FieldTag::Q).contains(w))
        throw ConsistencyError("actual solver witness is not stable");
    out.witness = std::move(w);
    out.n = n;
    long m = ctx.prime() == 2 ? 2 : 1;
    out.n_uniform = Int(m) * Int(euler_phi(Subgroup::full(ctx.s()).exponent()));
    out.diagnostics = "unique rational solution, scaled by the denominator lcm";
    return out;
}

SurjectivityReport p_local_surjectivity_check(FusionContext& ctx) {
    SurjectivityReport out;
    const IntegerLattice& image = ctx.image(FieldTag::R);
    const IntegerLattice& cb = ctx.cb_lattice();
    out.finite = cb.rank() == image.rank() && cb.contains_lattice(image);
    if (out.finite) {
        out.index = cb.index_of_sublattice(image);
        out.coprime_to_p = int_gcd(out.index, Int(ctx.prime())) == 1;
    }
    return out;
}

std::vector<IntVec> lattice_points_in_box(const IntegerLattice& lat, const IntVec& bound) {
    std::vector<IntVec> out;
    int n = lat.ambient;
    int m = lat.rank();
    std::vector<int> piv(m);
    for (int i = 0; i < m; ++i) {
        int c = 0;
        while (lat.basis[i][c] == 0)
            ++c;
        piv[i] = c;
    }
    IntVec x(n, 0);
    std::function<void(int)> rec = [&](int k) {
        int settled = k < m ? piv[k] : n;
        for (int c = 0; c < settled; ++c)
            if (x[c] < 0 || x[c] > bound[c])
                return;
        if (k == m) {
            out.push_back(x);
            return;
        }
        const Int& pk = lat.basis[k][piv[k]];
        Int lo, hi;
        Int a = -x[piv[k]];
        Int b = bound[piv[k]] - x[piv[k]];
        mpz_cdiv_q(lo.get_mpz_t(), a.get_mpz_t(), pk.get_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), b.get_mpz_t(), pk.get_mpz_t());
        for (Int y = lo; y <= hi; ++y) {
            for (int c = piv[k]; c < n; ++c)
                x[c] += y * lat.basis[k][c];
            rec(k + 1);
            for (int c = piv[k]; c < n; ++c)
                x[c] -= y * lat.basis[k][c];
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> monotone_functions(const IntegerLattice& lat,
                                       const SubgroupClassification& subs, long bound) {
    IntVec ub(lat.ambient, Int(bound));
    std::vector<IntVec> out;
    for (auto& v : lattice_points_in_box(lat, ub))
        if (monotone_check(subs, v))
            out.push_back(std::move(v));
    return out;
}

ExplorerReport question_6_2_explorer(FusionContext& ctx, long bound) {
    ExplorerReport report;
    report.bound = bound;
    const auto& subs = ctx.subs();
    const auto& rbasis = ctx.basis(FieldTag::R);
    const IntMat& dm = ctx.dims(FieldTag::R);
    int nb = rbasis.size();

    // every actual realization of degree <= bound lies in this box
    IntVec ub(nb);
    for (int j = 0; j < nb; ++j) {
        Rat d = rbasis.characters[j].degree().rational_value();
        ub[j] = Int(bound) / d.get_num();
    }
    std::map<IntVec, IntVec> dim_to_rep;
    for (const auto& x : lattice_points_in_box(ctx.stable(FieldTag::R), ub))
        dim_to_rep.emplace(mat_vec(dm, x), x);

    for (auto& f : monotone_functions(ctx.cba_lattice(), subs, bound)) {
        ExplorerEntry e;
        auto it = dim_to_rep.find(f);
        e.realized = it != dim_to_rep.end();
        if (e.realized)
            e.witness = it->second;
        else
            report.all_realized = false;
        e.f = std::move(f);
        report.entries.push_back(std::move(e));
    }
    return report;
}

WholeGroupDemoReport sigma3_nonrealizability_demo() {
    WholeGroupDemoReport out;
    GroupPtr g = preset_group("S3");
    PrimePowerClasses pp = prime_power_classes(g);
    out.pp_labels = pp.labels;
    out.f.resize(pp.count());
    for (int i = 0; i < pp.count(); ++i)
        out.f[i] = pp.rep(i).order() == 3 ? 0 : 2;
    out.in_DP = lattice_DP(pp).contains(out.f);

    // ordinary table; order the basis (trivial, sign, degree 2)
    CharacterTable t = character_table(g);
    std::vector<int> order(t.size());
    for (int j = 0; j < t.size(); ++j) {
        if (t.irreducibles[j] == trivial_character(g))
            order[j] = 0;
        else
            order[j] = t.degrees[j] == 1 ? 1 : 2;
    }
    std::vector<int> basis_idx(t.size());
    for (int j = 0; j < t.size(); ++j)
        basis_idx[order[j]] = j;

    // fixed dims on cyclic subgroups pin the coefficients down
    auto subs = enumerate_subgroups(g);
    std::vector<int> cyc = cyclic_subgroup_classes(subs);
    std::erase_if(cyc, [&](int c) { return pp.pp_index_of[c] < 0; });
    RatMat a(cyc.size(), RatVec(t.size()));
    RatVec rhs(cyc.size());
    IntMat det_mat(cyc.size(), IntVec(t.size()));
    for (size_t i = 0; i < cyc.size(); ++i) {
        for (int j = 0; j < t.size(); ++j) {
            a[i][j] = fixed_dim(t.irreducibles[basis_idx[j]], subs.class_rep(cyc[i]));
            det_mat[i][j] = a[i][j].get_num();
        }
        rhs[i] = Rat(out.f[pp.pp_index_of[cyc[i]]]);
    }
    out.unique = cyc.size() == static_cast<size_t>(t.size()) && determinant(det_mat) != 0;
    auto x = solve_rational(a, rhs);
    if (!x)
        throw ConsistencyError("whole-group demo system is inconsistent");
    out.solution = *x;
    for (const Rat& v : out.solution)
        if (v < 0)
            out.solution_has_negative = true;

    // Sylow restrictions are actual and stable on both fusion systems
    bool ok = true;
    for (long p : {3L, 2L}) {
        FusionContext ctx(g, p);
        const auto& ssubs = ctx.subs();
        IntVec fr(ssubs.class_count());
        const auto& emb = ctx.fusion().embedding();
        for (int c = 0; c < ssubs.class_count(); ++c) {
            std::vector<int> ambient_members;
            for (int e : ssubs.class_rep(c).members)
                ambient_members.push_back(emb.to_parent[e]);
            std::sort(ambient_members.begin(), ambient_members.end());
            fr[c] = out.f[pp.class_index_of(Subgroup(g, ambient_members))];
        }
        auto res = solve_monotone(ctx, fr);
        if (res.status != RealizeStatus::Realized || res.n != 1)
            ok = false;
        if (p == 3)
            out.sylow_odd_witness = res.witness;
        else
            out.sylow_even_witness = res.witness;
    }
    out.sylow_restrictions_actual = ok;
    return out;
}

} // namespace fusrep
