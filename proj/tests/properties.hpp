#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// binary. Fixed seeds, exact arithmetic; failures carry a short description.

#include "fusionrep/realize.hpp"

#include <random>
#include <string>
#include <vector>

namespace proptest {

using namespace fusrep;

struct Tally {
    long cases = 0;
    long failures = 0;
    std::vector<std::string> notes;

    void record(bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
            ++failures;
            if (notes.size() < 5)
                notes.push_back(what);
        }
    }
    void merge(const Tally& o) {
        cases += o.cases;
        failures += o.failures;
        for (const auto& n : o.notes)
            if (notes.size() < 5)
                notes.push_back(n);
    }
};

// random virtual character over the complex table: coefficients in [-3, 3]
inline IntVec random_complex_coords(const CharacterTable& t, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    IntVec out(t.size());
    for (auto& v : out)
        v = d(rng);
    return out;
}

// is_F_stable (constancy on fused element classes) agrees with the
// restriction-along-every-morphism definition
inline Tally stability_equivalence(FusionContext& ctx, int cases, unsigned seed) {
    std::mt19937 rng(seed);
    Tally tally;
    const auto& t = ctx.table();
    const auto& f = ctx.fusion();
    for (int i = 0; i < cases; ++i) {
        auto chi = t.combine(random_complex_coords(t, rng));
        bool a = is_F_stable(chi, f);
        bool b = is_F_stable_by_restrictions(chi, f);
        tally.record(a == b, "stability definitions disagree");
    }
    return tally;
}

// every stable virtual character splits as a difference of two stable actual
// characters; the positive part is produced by adding a multiple of the
// image of the regular character under the minimal characteristic biset
inline Tally grothendieck_splitting(FusionContext& ctx, int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-3, 3);
    Tally tally;
    const auto& t = ctx.table();
    const auto& f = ctx.fusion();
    const auto& stable = ctx.stable(FieldTag::C);
    auto rho_chi = ctx.algebra().act(ctx.omega_min(), regular_character(ctx.s()));
    IntVec rho = t.decompose(rho_chi);
    for (int i = 0; i < static_cast<int>(rho.size()); ++i)
        if (rho[i] <= 0)
            tally.record(false, "splitting pivot misses an irreducible");
    for (int n = 0; n < cases; ++n) {
        // random stable virtual character as a combination of lattice rows
        IntVec x(t.size(), Int(0));
        for (const auto& row : stable.basis) {
            int c = d(rng);
            for (int j = 0; j < t.size(); ++j)
                x[j] += c * row[j];
        }
        Int k = 0;
        for (int j = 0; j < t.size(); ++j)
            if (x[j] < 0) {
                Int need = (-x[j] + rho[j] - 1) / rho[j];
                if (need > k)
                    k = need;
            }
        IntVec pos(t.size()), neg(t.size());
        bool nonneg = true;
        for (int j = 0; j < t.size(); ++j) {
            pos[j] = x[j] + k * rho[j];
            neg[j] = k * rho[j];
            nonneg = nonneg && pos[j] >= 0 && neg[j] >= 0;
        }
        bool ok = nonneg && is_F_stable(t.combine(pos), f) && is_F_stable(t.combine(neg), f);
        tally.record(ok, "splitting into stable actual parts failed");
    }
    return tally;
}

// galois transfer to R or Q of a stable character is stable
inline Tally galois_transfer_stability(FusionContext& ctx, int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-3, 3);
    Tally tally;
    const auto& t = ctx.table();
    const auto& f = ctx.fusion();
    const auto& stable = ctx.stable(FieldTag::C);
    for (int n = 0; n < cases; ++n) {
        IntVec x(t.size(), Int(0));
        for (const auto& row : stable.basis) {
            int c = d(rng);
            for (int j = 0; j < t.size(); ++j)
                x[j] += c * row[j];
        }
        auto chi = t.combine(x);
        tally.record(is_F_stable(galois_transfer(chi, TargetField::Reals), f),
                     "transfer to R broke stability");
        tally.record(is_F_stable(galois_transfer(chi, TargetField::Rationals), f),
                     "transfer to Q broke stability");
    }
    return tally;
}

// dimension functions of actual stable real representations lie in C_ba
inline Tally actual_lands_in_cba(FusionContext& ctx, int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-2, 2);
    Tally tally;
    const auto& t = ctx.table();
    const auto& basis = ctx.basis(FieldTag::R);
    const auto& stable = ctx.stable(FieldTag::R);
    const auto& dims = ctx.dims(FieldTag::R);
    const auto& cba = ctx.cba_lattice();
    IntVec rho = decompose_in_basis(basis, t, regular_character(ctx.s()));
    int nb = basis.size();
    for (int n = 0; n < cases; ++n) {
        IntVec x(nb, Int(0));
        for (const auto& row : stable.basis) {
            int c = d(rng);
            for (int j = 0; j < nb; ++j)
                x[j] += c * row[j];
        }
        Int k = 0;
        for (int j = 0; j < nb; ++j)
            if (x[j] < 0) {
                Int need = (-x[j] + rho[j] - 1) / rho[j];
                if (need > k)
                    k = need;
            }
        IntVec y(nb);
        bool nonneg = true;
        for (int j = 0; j < nb; ++j) {
            y[j] = x[j] + k * rho[j];
            nonneg = nonneg && y[j] >= 0;
        }
        IntVec f(dims.size());
        for (size_t c = 0; c < dims.size(); ++c) {
            Int acc = 0;
            for (int j = 0; j < nb; ++j)
                acc += dims[c][j] * y[j];
            f[c] = acc;
        }
        bool ok = nonneg && stable.contains(y) && cba.contains(f);
        tally.record(ok, "actual stable representation left C_ba");
    }
    return tally;
}

// explicit condition checkers agree with lattice membership
inline Tally checker_vs_lattice(FusionContext& ctx, int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-6, 6);
    Tally tally;
    const auto& f = ctx.fusion();
    const auto& subs = ctx.subs();
    auto stab_rows = stability_rows(f);
    const auto& cb = ctx.cb_lattice();
    const auto& cba = ctx.cba_lattice();
    for (int n = 0; n < cases; ++n) {
        std::vector<Int> v(subs.class_count());
        for (auto& x : v)
            x = d(rng);
        bool stab = check_rows(stab_rows, v).ok;
        bool bs = check_borel_smith(subs, ctx.prime(), v).ok;
        bool fa = check_fusion_artin(f, v).ok;
        tally.record(cb.contains(v) == (stab && bs), "C_b membership disagrees with checkers");
        tally.record(cba.contains(v) == (stab && bs && fa),
                     "C_ba membership disagrees with checkers");
    }
    return tally;
}

} // namespace proptest
